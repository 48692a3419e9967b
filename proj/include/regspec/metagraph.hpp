#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "regspec/census.hpp"
#include "regspec/errors.hpp"
#include "regspec/graph.hpp"
#include "regspec/sampler.hpp"
#include "regspec/switchings.hpp"

namespace regspec {

// Exact audit of the switching walk on the full space of labeled d-regular
// graphs on n vertices.  Every valid forward and backward move between every
// pair of graphs is enumerated, and the walk's transition matrix is checked
// against the properties that make the uniform distribution stationary.
struct MetagraphReport {
    int n = 0;
    int d = 0;
    int r = 0;
    std::size_t graph_count = 0;
    long long labeled_forward = 0;   // valid labeled forward moves, all graphs
    long long labeled_backward = 0;  // valid labeled backward moves, all graphs
    long long move_classes = 0;      // rotation classes of valid forward moves
    // Labeled forward moves g -> h at length k match labeled backward moves
    // h -> g at length k, entry by entry.
    bool bijection_ok = false;
    // The k rotations of every valid labeled move are all applicable and
    // rewrite the graph identically (the cycle tuple of a switching is only
    // defined up to rotation).
    bool rotation_multiple_ok = false;
    double max_symmetry_violation = 0.0;  // max |P_ij - P_ji|
    double max_column_sum_error = 0.0;    // max_j |sum_i P_ij - 1|
    double min_self_loop = 0.0;           // min_i P_ii
    bool connected = false;               // move graph connects the space

    bool ok(double tol = 1e-12) const {
        return bijection_ok && rotation_multiple_ok && connected &&
               max_symmetry_violation <= tol && max_column_sum_error <= tol &&
               min_self_loop >= -tol;
    }
};

inline RegularGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return RegularGraph(n, n - 1, edges);
}

namespace detail {

// The same labeled move with the cycle tuple started t positions later.
template <typename S>
S rotate_switching(const S& s, int t) {
    const std::size_t k = s.v.size();
    S out = s;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t src = (i + static_cast<std::size_t>(t)) % k;
        out.v[i] = s.v[src];
        out.u[i] = s.u[src];
        out.w[i] = s.w[src];
    }
    return out;
}

// The two traversal directions of a cycle, as explicit vertex tuples.  A
// labeled candidate fixes one rotation and one direction of its cycle; the
// enumerators visit one representative per rotation class, so both
// directions must be enumerated to see every class.
inline std::array<std::vector<int>, 2> cycle_orientations(const Cycle& alpha) {
    std::vector<int> reversed = alpha.vertices();
    std::reverse(reversed.begin() + 1, reversed.end());
    return {alpha.vertices(), std::move(reversed)};
}

}  // namespace detail

inline MetagraphReport metagraph_check(int n, int d, int r) {
    if (d != 3 || n > 8) throw BudgetError("metagraph_check: supported range is d = 3, n <= 8");
    if (r < 3 || r > n) throw std::invalid_argument("metagraph_check: need 3 <= r <= n");

    const std::vector<RegularGraph> graphs = enumerate_all_regular(n, d);
    std::map<std::vector<Edge>, int> index;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        index.emplace(graphs[i].edges(), static_cast<int>(i));

    MetagraphReport rep;
    rep.n = n;
    rep.d = d;
    rep.r = r;
    rep.graph_count = graphs.size();
    if (graphs.empty()) return rep;

    // All candidate cycles live inside the complete graph on [n].
    const CycleCensus universe = census(complete_graph(n), r);

    // counts[k][{i, j}] = number of valid labeled moves from graph i to j.
    // The enumerators emit one representative per rotation class, over both
    // traversal directions of the cycle; each class contributes its k
    // rotations, which are checked to be applicable and to perform the same
    // rewrite.  (Validity transfers to the rotations for free: a labeling
    // with the same start and end graph deletes and adds the same edges.)
    using SparseCounts = std::map<std::pair<int, int>, long long>;
    std::vector<SparseCounts> fwd(static_cast<std::size_t>(r) + 1);
    std::vector<SparseCounts> bwd(static_cast<std::size_t>(r) + 1);
    rep.rotation_multiple_ok = true;

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const RegularGraph& g = graphs[i];
        const CycleCensus local = census(g, r);
        for (const Cycle& alpha : local.cycles) {
            const int k = alpha.length();
            for (const std::vector<int>& vs : detail::cycle_orientations(alpha)) {
                enumerate_forward_ordered(g, vs, [&](const ForwardSwitching& s) {
                    if (!is_valid_forward(g, s, r)) return;
                    const std::vector<Edge> target = apply_forward(g, s).edges();
                    for (int t = 1; t < k; ++t) {
                        const ForwardSwitching rot = detail::rotate_switching(s, t);
                        if (!forward_applicable(g, rot) || apply_forward(g, rot).edges() != target)
                            rep.rotation_multiple_ok = false;
                    }
                    fwd[static_cast<std::size_t>(k)][{static_cast<int>(i), index.at(target)}] += k;
                    ++rep.move_classes;
                });
            }
        }
        for (const Cycle& alpha : universe.cycles) {
            const int k = alpha.length();
            for (const std::vector<int>& vs : detail::cycle_orientations(alpha)) {
                enumerate_backward_ordered(g, vs, [&](const BackwardSwitching& s) {
                    if (!is_valid_backward(g, s, r)) return;
                    const std::vector<Edge> target = apply_backward(g, s).edges();
                    for (int t = 1; t < k; ++t) {
                        const BackwardSwitching rot = detail::rotate_switching(s, t);
                        if (!backward_applicable(g, rot) || apply_backward(g, rot).edges() != target)
                            rep.rotation_multiple_ok = false;
                    }
                    bwd[static_cast<std::size_t>(k)][{static_cast<int>(i), index.at(target)}] += k;
                });
            }
        }
    }

    rep.bijection_ok = true;
    for (int k = 3; k <= r; ++k) {
        const auto& f = fwd[static_cast<std::size_t>(k)];
        const auto& b = bwd[static_cast<std::size_t>(k)];
        for (const auto& [ij, cnt] : f) {
            rep.labeled_forward += cnt;
            const auto it = b.find({ij.second, ij.first});
            if (it == b.end() || it->second != cnt) rep.bijection_ok = false;
        }
        for (const auto& [ij, cnt] : b) {
            rep.labeled_backward += cnt;
            const auto it = f.find({ij.second, ij.first});
            if (it == f.end() || it->second != cnt) rep.bijection_ok = false;
        }
    }

    // Transition matrix of the walk: every labeled candidate of either
    // direction at length k is proposed with probability c / (2k [n]_k d^k).
    double denom = 0.0;
    for (int k = 3; k <= r; ++k)
        denom += (falling_factorial_real(n, k) +
                  std::pow(static_cast<double>(d - 1), k)) /
                 (2.0 * k);
    const double c = 1.0 / denom;

    SparseCounts off;  // combined labeled moves i -> j, i != j
    std::map<std::pair<int, int>, double> prob;
    std::vector<double> row_sum(graphs.size(), 0.0);
    for (int k = 3; k <= r; ++k) {
        const double per_label =
            c / (2.0 * k * falling_factorial_real(n, k) *
                 std::pow(static_cast<double>(d), k));
        for (const auto* side : {&fwd[static_cast<std::size_t>(k)], &bwd[static_cast<std::size_t>(k)]})
            for (const auto& [ij, cnt] : *side) {
                prob[ij] += static_cast<double>(cnt) * per_label;
                row_sum[static_cast<std::size_t>(ij.first)] +=
                    static_cast<double>(cnt) * per_label;
            }
    }

    rep.max_symmetry_violation = 0.0;
    for (const auto& [ij, p] : prob) {
        const auto it = prob.find({ij.second, ij.first});
        const double q = it == prob.end() ? 0.0 : it->second;
        rep.max_symmetry_violation = std::max(rep.max_symmetry_violation, std::abs(p - q));
    }

    std::vector<double> col_sum(graphs.size(), 0.0);
    rep.min_self_loop = 1.0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const double self = 1.0 - row_sum[i];
        rep.min_self_loop = std::min(rep.min_self_loop, self);
        col_sum[i] += self;
    }
    for (const auto& [ij, p] : prob) col_sum[static_cast<std::size_t>(ij.second)] += p;
    rep.max_column_sum_error = 0.0;
    for (double s : col_sum)
        rep.max_column_sum_error = std::max(rep.max_column_sum_error, std::abs(s - 1.0));

    // Connectivity of the move graph.
    std::vector<char> seen(graphs.size(), 0);
    std::vector<std::vector<int>> adj(graphs.size());
    for (const auto& [ij, p] : prob) {
        (void)p;
        adj[static_cast<std::size_t>(ij.first)].push_back(ij.second);
    }
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                q.push(v);
            }
    }
    rep.connected = reached == graphs.size();
    return rep;
}

}  // namespace regspec
