#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "regspec/census.hpp"
#include "regspec/errors.hpp"
#include "regspec/graph.hpp"
#include "regspec/parallel.hpp"

namespace regspec {

// Counts of closed cyclically non-backtracking walks, CNBW_k for k = 1..kmax,
// computed as traces of powers of the directed-edge (non-backtracking)
// operator: entry (u,v) -> (v,w) allowed iff w != u.  A closed sequence of
// directed edges never reverses, including across the wrap-around, which is
// exactly the cyclically non-backtracking condition; walks that stall into a
// "lollipop" shape reverse at the junction and are excluded automatically.
//
// The traces are accumulated by depth-first enumeration from every starting
// directed edge (cost 2|E| (d-1)^{kmax-1}), never materializing the operator.
inline std::vector<long long> cnbw_counts(const RegularGraph& g, int kmax, int threads = 0) {
    if (kmax < 1) throw std::invalid_argument("cnbw_counts: need kmax >= 1");
    const int d = g.degree();
    const double edges2 = static_cast<double>(g.n()) * d;
    if (d >= 2 && edges2 * std::pow(static_cast<double>(d - 1), kmax - 1) > 5e10)
        throw BudgetError("cnbw_counts: 2|E|(d-1)^(kmax-1) exceeds the enumeration budget");

    std::vector<OrientedEdge> starts;
    starts.reserve(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(d));
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) starts.push_back({u, v});

    std::vector<std::vector<long long>> per_start(
        starts.size(), std::vector<long long>(static_cast<std::size_t>(kmax) + 1, 0));
    parallel_for(starts.size(), threads, [&](std::size_t s) {
        const int u0 = starts[s].tail;
        const int v0 = starts[s].head;
        auto& hits = per_start[s];
        // Walk states are directed edges (prev, cur); depth t counts the
        // number of operator applications since the start edge.
        auto dfs = [&](auto&& self, int prev, int cur, int t) -> void {
            if (prev == u0 && cur == v0 && t >= 1) ++hits[static_cast<std::size_t>(t)];
            if (t == kmax) return;
            for (int nxt : g.neighbors(cur))
                if (nxt != prev) self(self, cur, nxt, t + 1);
        };
        dfs(dfs, u0, v0, 0);
    });

    std::vector<unsigned __int128> total(static_cast<std::size_t>(kmax) + 1, 0);
    for (const auto& hits : per_start)
        for (int k = 1; k <= kmax; ++k) total[static_cast<std::size_t>(k)] += static_cast<unsigned __int128>(hits[static_cast<std::size_t>(k)]);
    std::vector<long long> out(static_cast<std::size_t>(kmax) + 1, 0);
    for (int k = 1; k <= kmax; ++k) {
        if (total[static_cast<std::size_t>(k)] >
            static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("cnbw_counts: count exceeds 64-bit range");
        out[static_cast<std::size_t>(k)] = static_cast<long long>(total[static_cast<std::size_t>(k)]);
    }
    return out;
}

// The divisor-sum prediction CNBW_k = sum over divisors j of k, j >= 3, of
// 2j C_j, which matches the walk count exactly in the absence of the two
// cycle-overlap events.
inline std::vector<long long> cnbw_divisor_sum(const CycleCensus& c, int kmax) {
    if (kmax < 1) throw std::invalid_argument("cnbw_divisor_sum: need kmax >= 1");
    if (kmax > c.r) throw std::invalid_argument("cnbw_divisor_sum: kmax exceeds census cutoff");
    std::vector<long long> out(static_cast<std::size_t>(kmax) + 1, 0);
    const auto counts = c.counts_by_length();
    for (int k = 1; k <= kmax; ++k) {
        long long s = 0;
        for (int j = 3; j <= k; ++j)
            if (k % j == 0) s += 2LL * j * counts[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(k)] = s;
    }
    return out;
}

// Expected CNBW count in the limit: mu_k(d) = sum over divisors j >= 3 of
// (d-1)^j (each short cycle class contributes 2j lambda_j = (d-1)^j).
inline double mu_k(int d, int k) {
    if (d < 3 || k < 1) throw std::invalid_argument("mu_k: need d >= 3, k >= 1");
    double s = 0.0;
    for (int j = 3; j <= k; ++j)
        if (k % j == 0) s += std::pow(static_cast<double>(d - 1), j);
    return s;
}

// Number of cyclically reduced words of length k on d free generators:
// (2d-1)^k - 1 + 2d for even k, (2d-1)^k + 1 for odd k.
inline double a_dk(int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("a_dk: need d >= 1, k >= 1");
    const double base = std::pow(2.0 * d - 1.0, k);
    return k % 2 == 0 ? base - 1.0 + 2.0 * d : base + 1.0;
}

// Standardization used in the growing-d regime:
// N_k = (d-1)^{-k/2} (CNBW_k - mu_k(d)) for k <= r_n, zero beyond.
inline std::vector<double> standardized_cnbw(const std::vector<long long>& cnbw, int d,
                                             int r_n) {
    if (d < 3) throw std::invalid_argument("standardized_cnbw: need d >= 3");
    std::vector<double> out(cnbw.size(), 0.0);
    for (std::size_t k = 1; k < cnbw.size(); ++k) {
        if (static_cast<int>(k) > r_n) break;
        out[k] = (static_cast<double>(cnbw[k]) - mu_k(d, static_cast<int>(k))) /
                 std::pow(static_cast<double>(d - 1), static_cast<double>(k) / 2.0);
    }
    return out;
}

}  // namespace regspec
