#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "regspec/cycle.hpp"
#include "regspec/graph.hpp"

namespace regspec {

// All simple cycles of length <= r in a graph, as canonical Cycle values
// plus per-length counts.
struct CycleCensus {
    int r = 0;
    std::vector<Cycle> cycles;

    // counts[k] = number of k-cycles; entries 0..r, with 0..2 always zero.
    std::vector<long long> counts_by_length() const {
        std::vector<long long> counts(static_cast<std::size_t>(r) + 1, 0);
        for (const Cycle& c : cycles) ++counts[static_cast<std::size_t>(c.length())];
        return counts;
    }

    long long count(int k) const {
        long long n = 0;
        for (const Cycle& c : cycles)
            if (c.length() == k) ++n;
        return n;
    }

    long long total() const { return static_cast<long long>(cycles.size()); }
};

namespace detail {

// Enumerates every simple cycle of length <= r exactly once.  Cycles are
// rooted at their minimum vertex: the DFS grows non-backtracking paths
// root, x1, ..., xm through vertices strictly greater than the root, and a
// closing edge back to the root yields a cycle.  The direction constraint
// x1 < xm keeps one of the two traversals.
template <typename Graph, typename Visitor>
void for_each_cycle(const Graph& g, int r, Visitor&& visit) {
    const int n = g.n();
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, int root) -> void {
        const int last = path.back();
        for (int next : g.neighbors(last)) {
            if (next == root && path.size() >= 3) {
                if (path[1] < last) visit(path);
            } else if (next > root && !on_path[static_cast<std::size_t>(next)] &&
                       static_cast<int>(path.size()) < r) {
                path.push_back(next);
                on_path[static_cast<std::size_t>(next)] = 1;
                self(self, root);
                on_path[static_cast<std::size_t>(next)] = 0;
                path.pop_back();
            }
        }
    };
    for (int root = 0; root < n; ++root) {
        path.assign(1, root);
        on_path.assign(static_cast<std::size_t>(n), 0);
        on_path[static_cast<std::size_t>(root)] = 1;
        dfs(dfs, root);
    }
}

}  // namespace detail

// Census of simple cycles of length <= r.  Requires r >= 3; cutoffs beyond n
// are honored trivially (no simple cycle is longer than n).
template <typename Graph>
CycleCensus census(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("census: need r >= 3");
    CycleCensus out;
    out.r = r;
    detail::for_each_cycle(g, std::min(r, g.n()), [&](const std::vector<int>& path) {
        out.cycles.push_back(Cycle::from_vertices(path));
    });
    return out;
}

// Canonical cycles of length <= r that pass through at least one of the
// given edges.  Used to compute the local census difference of an edge
// rewrite: only cycles through changed edges can appear or disappear.
template <typename Graph>
std::set<Cycle> cycles_through_edges(const Graph& g, const std::vector<Edge>& edges, int r) {
    std::set<Cycle> found;
    const int n = g.n();
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (const auto& [x, y] : edges) {
        if (!g.has_edge(x, y)) continue;
        // Simple paths y -> x of length <= r-1 avoiding the edge (x, y)
        // itself; each closes to a distinct cycle through (x, y).
        path.assign(1, y);
        on_path.assign(static_cast<std::size_t>(n), 0);
        on_path[static_cast<std::size_t>(y)] = 1;
        on_path[static_cast<std::size_t>(x)] = 1;
        auto dfs = [&](auto&& self) -> void {
            const int last = path.back();
            for (int next : g.neighbors(last)) {
                if (next == x) {
                    if (path.size() >= 2) {
                        std::vector<int> vs = path;
                        vs.push_back(x);
                        found.insert(Cycle::from_vertices(std::move(vs)));
                    }
                } else if (!on_path[static_cast<std::size_t>(next)] &&
                           static_cast<int>(path.size()) < r - 1) {
                    path.push_back(next);
                    on_path[static_cast<std::size_t>(next)] = 1;
                    self(self);
                    on_path[static_cast<std::size_t>(next)] = 0;
                    path.pop_back();
                }
            }
        };
        dfs(dfs);
    }
    return found;
}

// Overlap events between short cycles.  `pair_overlap` holds when two
// distinct cycles with j + k <= r share a vertex; `joined_overlap` holds
// when two vertex-disjoint cycles at graph distance l >= 1 satisfy
// j + k + 2l <= r.  Either event marks a graph where divisor-sum walk
// counts can disagree with true walk counts.
struct OverlapEvents {
    bool pair_overlap = false;    // shared-vertex event (E1)
    bool joined_overlap = false;  // disjoint-at-distance event (E2)
};

template <typename Graph>
OverlapEvents overlap_events(const Graph& g, int r) {
    const CycleCensus c = census(g, r);
    OverlapEvents out;
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < c.cycles.size(); ++j) {
            const Cycle& a = c.cycles[i];
            const Cycle& b = c.cycles[j];
            const int jk = a.length() + b.length();
            if (jk > r) continue;
            if (a.shares_vertex(b)) {
                out.pair_overlap = true;
            } else if (!out.joined_overlap) {
                const auto l = distance(g, a.vertices(), b.vertices());
                if (l && *l >= 1 && jk + 2 * *l <= r) out.joined_overlap = true;
            }
            if (out.pair_overlap && out.joined_overlap) return out;
        }
    }
    return out;
}

// Whether some other cycle of length <= r shares an edge with `c`.
// Precondition: c is a cycle of g.
template <typename Graph>
bool shares_edge_with_other_short_cycle(const Graph& g, const Cycle& c, int r) {
    if (!contains_cycle(g, c))
        throw std::invalid_argument("shares_edge_with_other_short_cycle: cycle not in graph");
    const std::set<Cycle> through = cycles_through_edges(g, c.edges(), r);
    for (const Cycle& other : through)
        if (!(other == c)) return true;
    return false;
}

}  // namespace regspec
