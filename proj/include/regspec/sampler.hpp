#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "regspec/errors.hpp"
#include "regspec/graph.hpp"
#include "regspec/parallel.hpp"
#include "regspec/rng.hpp"

namespace regspec {

struct SamplerConfig {
    int n = 0;
    int d = 3;
    std::uint64_t seed = 0;
    // Consecutive failed pairings tolerated before declaring a stall.  The
    // acceptance probability decays like exp(-(d-1)/2 - (d-1)^2/4), so the
    // default covers the regime (d <= 5 or so) where rejection sampling is
    // the method of choice at all.
    long long max_attempts = 1000000;
};

struct PairingSample {
    RegularGraph graph;
    long long attempts = 0;  // pairings drawn, including the accepted one
};

// One exactly uniform d-regular graph by rejection from the pairing model:
// draw a uniform perfect matching on n*d half-edge points, project to a
// multigraph, and accept only simple outcomes.  Conditioned on acceptance
// the simple graph is exactly uniform.
inline PairingSample sample_pairing_rejection(int n, int d, Rng& rng,
                                              long long max_attempts = 1000000) {
    if (n <= 0 || d < 2 || d >= n) throw std::invalid_argument("sampler: need 0 < d < n, d >= 2");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("sampler: n*d must be even");
    const std::size_t points = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
    std::vector<int> perm(points);
    std::vector<Edge> edges(points / 2);
    for (long long attempt = 1; attempt <= max_attempts; ++attempt) {
        for (std::size_t i = 0; i < points; ++i) perm[i] = static_cast<int>(i);
        rng.shuffle(perm);
        bool simple = true;
        for (std::size_t i = 0; i < points / 2 && simple; ++i) {
            const int a = perm[2 * i] / d;
            const int b = perm[2 * i + 1] / d;
            if (a == b) simple = false;  // loop
            edges[i] = {std::min(a, b), std::max(a, b)};
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;  // multi-edge
        return {RegularGraph(n, d, edges), attempt};
    }
    throw RejectionStallError(
        "sample_pairing_rejection: no simple pairing found; for larger d use the "
        "switching-chain sampler");
}

// `count` independent uniform samples.  Sample i is drawn from the RNG
// stream (seed, i), so the output is identical for every worker count.
inline std::vector<RegularGraph> sample_uniform(const SamplerConfig& cfg, int count,
                                                int threads = 0) {
    std::vector<PairingSample> slots;
    slots.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        slots.push_back({RegularGraph(1, 0, {}), 0});  // placeholder
    }
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
        Rng rng = Rng::stream(cfg.seed, i);
        slots[i] = sample_pairing_rejection(cfg.n, cfg.d, rng, cfg.max_attempts);
    });
    std::vector<RegularGraph> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(s.graph));
    return out;
}

// Streaming variant: fn(i, graph, attempts) is called once per sample, from
// worker threads, with sample i always drawn from stream (seed, i).
template <typename Fn>
void for_each_uniform_sample(const SamplerConfig& cfg, int count, int threads, Fn&& fn) {
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
        Rng rng = Rng::stream(cfg.seed, i);
        PairingSample s = sample_pairing_rejection(cfg.n, cfg.d, rng, cfg.max_attempts);
        fn(i, s.graph, s.attempts);
    });
}

// Deterministic circulant d-regular graph, used as a reproducible starting
// state for switching chains in regimes where rejection sampling cannot
// produce one.  Vertices i and i +- s (mod n) are adjacent for s = 1..d/2;
// odd d additionally pairs antipodes and requires even n.
inline RegularGraph circulant_graph(int n, int d) {
    if (n <= d || d < 2) throw std::invalid_argument("circulant_graph: need n > d >= 2");
    if (d % 2 == 1 && n % 2 == 1)
        throw std::invalid_argument("circulant_graph: odd d requires even n");
    std::vector<Edge> edges;
    for (int s = 1; s <= d / 2; ++s)
        for (int i = 0; i < n; ++i) {
            const int j = (i + s) % n;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    if (d % 2 == 1)
        for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
    return RegularGraph(n, d, edges);
}

// Circulant start state with no triangle: offsets are the first d/2 odd
// numbers (plus the antipode for odd d).  Two odd offsets never sum to a
// third, and for n > 4d no wrap-around sum can close a 3-cycle either, so
// the girth is at least 4.  A switching chain with cutoff r = 3 started
// here begins with an empty cycle census and is free to move, which a
// nearest-offset circulant is not: there every edge lies on several
// triangles, so no single switching is valid and the chain is frozen.
inline RegularGraph triangle_free_circulant(int n, int d) {
    if (d < 2 || n <= 4 * d)
        throw std::invalid_argument("triangle_free_circulant: need n > 4d, d >= 2");
    if (d % 2 == 1 && n % 2 == 1)
        throw std::invalid_argument("triangle_free_circulant: odd d requires even n");
    std::vector<Edge> edges;
    for (int s = 1; s <= d / 2; ++s)
        for (int i = 0; i < n; ++i) {
            const int j = (i + 2 * s - 1) % n;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    if (d % 2 == 1)
        for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
    return RegularGraph(n, d, edges);
}

namespace detail {

// Backtracking enumeration of labeled simple d-regular graphs: vertices are
// completed in increasing order, and the missing neighbors of the current
// vertex are chosen as an increasing sequence among later vertices, so each
// labeled graph is produced exactly once, in a fixed order.
template <typename Visitor>
void enumerate_regular_impl(int n, int d, Visitor&& visit) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);

    auto emit = [&]() {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v : adj[static_cast<std::size_t>(u)])
                if (u < v) edges.emplace_back(u, v);
        visit(RegularGraph(n, d, edges));
    };

    auto complete = [&](auto&& self, int u) -> void {
        if (u == n) {
            emit();
            return;
        }
        const int need = d - deg[static_cast<std::size_t>(u)];
        if (need == 0) {
            self(self, u + 1);
            return;
        }
        // Choose `need` new neighbors of u among later unsaturated vertices,
        // in increasing order.
        std::vector<int> chosen;
        auto pick = [&](auto&& inner, int from) -> void {
            if (static_cast<int>(chosen.size()) == need) {
                for (int v : chosen) {
                    adj[static_cast<std::size_t>(u)].push_back(v);
                    adj[static_cast<std::size_t>(v)].push_back(u);
                    ++deg[static_cast<std::size_t>(u)];
                    ++deg[static_cast<std::size_t>(v)];
                }
                self(self, u + 1);
                for (int v : chosen) {
                    adj[static_cast<std::size_t>(u)].pop_back();
                    adj[static_cast<std::size_t>(v)].pop_back();
                    --deg[static_cast<std::size_t>(u)];
                    --deg[static_cast<std::size_t>(v)];
                }
                return;
            }
            const int slots_left = need - static_cast<int>(chosen.size());
            for (int v = from; v <= n - slots_left; ++v) {
                if (deg[static_cast<std::size_t>(v)] >= d) continue;
                chosen.push_back(v);
                inner(inner, v + 1);
                chosen.pop_back();
            }
        };
        pick(pick, u + 1);
    };
    complete(complete, 0);
}

}  // namespace detail

// Every labeled simple d-regular graph on n vertices, in a deterministic
// order.  Guarded to the desk-checkable regime n <= 10, d = 3; an odd n*d
// yields the empty list.
inline std::vector<RegularGraph> enumerate_all_regular(int n, int d) {
    if (d != 3 || n > 10 || n < 4)
        throw BudgetError("enumerate_all_regular: supported range is d = 3, 4 <= n <= 10");
    std::vector<RegularGraph> out;
    if ((static_cast<long long>(n) * d) % 2 != 0) return out;
    detail::enumerate_regular_impl(n, d, [&](RegularGraph g) { out.push_back(std::move(g)); });
    return out;
}

// Visitor form of the above for counting without materializing the list.
template <typename Visitor>
void for_each_regular(int n, int d, Visitor&& visit) {
    if (d != 3 || n > 10 || n < 4)
        throw BudgetError("for_each_regular: supported range is d = 3, 4 <= n <= 10");
    if ((static_cast<long long>(n) * d) % 2 != 0) return;
    detail::enumerate_regular_impl(n, d, std::forward<Visitor>(visit));
}

}  // namespace regspec
