#pragma once

// Slow reference implementations, algorithmically independent from the
// library code they check: cycle counting by exhaustive cyclic orders and
// walk counting by dense operator powers.

#include <algorithm>
#include <map>
#include <vector>

#include "regspec/graph.hpp"

namespace regspec::oracles {

// Number of k-cycles by enumerating every k-subset of vertices and every
// cyclic order of it (rotations fixed by anchoring the minimum, reflections
// by orienting the permutation).  O(n^k k!) - only for tiny graphs.
template <typename Graph>
std::map<int, long long> cycle_counts(const Graph& g, int r) {
    std::map<int, long long> out;
    const int n = g.n();
    for (int k = 3; k <= std::min(r, n); ++k) {
        long long count = 0;
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        std::fill(mask.begin(), mask.begin() + k, 1);
        std::sort(mask.begin(), mask.end(), std::greater<char>());
        do {
            std::vector<int> sub;
            for (int v = 0; v < n; ++v)
                if (mask[static_cast<std::size_t>(v)]) sub.push_back(v);
            std::vector<int> rest(sub.begin() + 1, sub.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (rest.front() > rest.back()) continue;
                std::vector<int> cyc;
                cyc.push_back(sub.front());
                cyc.insert(cyc.end(), rest.begin(), rest.end());
                bool ok = true;
                for (int i = 0; i < k && ok; ++i)
                    ok = g.has_edge(cyc[static_cast<std::size_t>(i)],
                                    cyc[static_cast<std::size_t>((i + 1) % k)]);
                if (ok) ++count;
            } while (std::next_permutation(rest.begin(), rest.end()));
        } while (std::prev_permutation(mask.begin(), mask.end()));
        out[k] = count;
    }
    return out;
}

// CNBW_k as the trace of the k-th power of the dense directed-edge operator.
template <typename Graph>
std::vector<long long> hashimoto_trace_counts(const Graph& g, int kmax) {
    std::vector<OrientedEdge> darts;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) darts.push_back({u, v});
    const std::size_t m = darts.size();
    auto dart_index = [&](int u, int v) {
        for (std::size_t i = 0; i < m; ++i)
            if (darts[i].tail == u && darts[i].head == v) return i;
        return m;
    };
    std::vector<std::vector<long long>> b(m, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (int w : g.neighbors(darts[i].head))
            if (w != darts[i].tail) b[i][dart_index(darts[i].head, w)] = 1;
    std::vector<std::vector<long long>> p(m, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) p[i][i] = 1;
    std::vector<long long> out(static_cast<std::size_t>(kmax) + 1, 0);
    for (int k = 1; k <= kmax; ++k) {
        std::vector<std::vector<long long>> q(m, std::vector<long long>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t l = 0; l < m; ++l) {
                if (p[i][l] == 0) continue;
                for (std::size_t j = 0; j < m; ++j) q[i][j] += p[i][l] * b[l][j];
            }
        p = std::move(q);
        long long tr = 0;
        for (std::size_t i = 0; i < m; ++i) tr += p[i][i];
        out[static_cast<std::size_t>(k)] = tr;
    }
    return out;
}

}  // namespace regspec::oracles
