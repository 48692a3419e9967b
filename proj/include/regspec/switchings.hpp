#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regspec/census.hpp"
#include "regspec/cycle.hpp"
#include "regspec/errors.hpp"
#include "regspec/graph.hpp"
#include "regspec/rng.hpp"

namespace regspec {

// A forward switching removes the cycle v_0 ... v_{k-1} together with the
// target edges (w_i, u_{i+1}), and attaches each freed cycle vertex to its
// pair: it deletes edges {v_i, v_{i+1}} and {w_i, u_{i+1}} and adds
// {v_i, u_i} and {v_i, w_i}.  Indices are cyclic mod k.
//
// A backward switching is the mirror image: it deletes {u_i, v_i} and
// {w_i, v_i}, and adds the cycle edges {v_i, v_{i+1}} together with
// {w_i, u_{i+1}}.  Applying one and then the other with the same labels is
// an exact involution.
//
// Moves carrying the same labels up to the 2k rotations and reflections of
// the cycle act identically; all counting functions fix the canonical cycle
// representation, so each equivalence class is counted exactly once.
struct ForwardSwitching {
    std::vector<int> v, u, w;
    int size() const { return static_cast<int>(v.size()); }
};

struct BackwardSwitching {
    std::vector<int> v, u, w;
    int size() const { return static_cast<int>(v.size()); }
};

namespace detail {

inline void check_shape(const std::vector<int>& v, const std::vector<int>& u,
                        const std::vector<int>& w, int n) {
    const std::size_t k = v.size();
    if (k < 3 || u.size() != k || w.size() != k)
        throw InvalidMoveError("switching: v, u, w must have equal length >= 3");
    for (const auto* xs : {&v, &u, &w})
        for (int x : *xs)
            if (x < 0 || x >= n) throw InvalidMoveError("switching: vertex out of range");
}

inline bool all_distinct(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

inline Edge norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

inline bool edges_distinct(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) == es.end();
}

}  // namespace detail

// The edges a forward switching deletes (cycle edges and target edges) and
// adds (pair attachments), as normalized undirected pairs.
inline std::vector<Edge> forward_deleted_edges(const ForwardSwitching& s) {
    const int k = s.size();
    std::vector<Edge> out;
    out.reserve(2 * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out.push_back(detail::norm_edge(s.v[i], s.v[(i + 1) % k]));
    for (int i = 0; i < k; ++i) out.push_back(detail::norm_edge(s.w[i], s.u[(i + 1) % k]));
    return out;
}

inline std::vector<Edge> forward_added_edges(const ForwardSwitching& s) {
    const int k = s.size();
    std::vector<Edge> out;
    out.reserve(2 * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        out.push_back(detail::norm_edge(s.v[i], s.u[i]));
        out.push_back(detail::norm_edge(s.v[i], s.w[i]));
    }
    return out;
}

inline std::vector<Edge> backward_deleted_edges(const BackwardSwitching& s) {
    return forward_added_edges({s.v, s.u, s.w});
}

inline std::vector<Edge> backward_added_edges(const BackwardSwitching& s) {
    return forward_deleted_edges({s.v, s.u, s.w});
}

namespace detail {

// Shared act-applicability check.  A move acts on g when its labels are in
// range, the cycle vertices and the w-labels are distinct, the deleted
// edges are 2k distinct edges of g, and the added edges are 2k distinct
// non-loop non-edges of g.  These conditions make the rewrite well-defined
// and keep the result simple and d-regular; they are symmetric under the
// forward/backward mirror.
template <typename Graph>
std::optional<std::string> act_obstruction(const Graph& g, const std::vector<int>& v,
                                           const std::vector<int>& u, const std::vector<int>& w,
                                           const std::vector<Edge>& deleted,
                                           const std::vector<Edge>& added) {
    check_shape(v, u, w, g.n());
    if (!all_distinct(v)) return "cycle vertices not distinct";
    if (!all_distinct(w)) return "w labels not distinct";
    for (const auto& [a, b] : deleted) {
        if (a == b) return "deleted edge is a loop";
        if (!g.has_edge(a, b)) return "deleted edge not present";
    }
    for (const auto& [a, b] : added) {
        if (a == b) return "added edge is a loop";
        if (g.has_edge(a, b)) return "added edge already present";
    }
    if (!edges_distinct(deleted)) return "deleted edges collide";
    if (!edges_distinct(added)) return "added edges collide";
    return std::nullopt;
}

}  // namespace detail

template <typename Graph>
bool forward_applicable(const Graph& g, const ForwardSwitching& s) {
    return !detail::act_obstruction(g, s.v, s.u, s.w, forward_deleted_edges(s),
                                    forward_added_edges(s));
}

template <typename Graph>
bool backward_applicable(const Graph& g, const BackwardSwitching& s) {
    return !detail::act_obstruction(g, s.v, s.u, s.w, backward_deleted_edges(s),
                                    backward_added_edges(s));
}

namespace detail {

inline void apply_edges(MutableGraph& g, const std::vector<Edge>& deleted,
                        const std::vector<Edge>& added) {
    for (const auto& [a, b] : deleted) g.remove_edge(a, b);
    for (const auto& [a, b] : added) g.add_edge(a, b);
}

}  // namespace detail

// Applies a forward switching, producing a new graph.  Throws
// InvalidMoveError when the move does not act on g.
inline RegularGraph apply_forward(const RegularGraph& g, const ForwardSwitching& s) {
    const auto deleted = forward_deleted_edges(s);
    const auto added = forward_added_edges(s);
    if (const auto why = detail::act_obstruction(g, s.v, s.u, s.w, deleted, added))
        throw InvalidMoveError("apply_forward: " + *why);
    MutableGraph m(g);
    detail::apply_edges(m, deleted, added);
    return m.freeze();
}

inline RegularGraph apply_backward(const RegularGraph& g, const BackwardSwitching& s) {
    const auto deleted = backward_deleted_edges(s);
    const auto added = backward_added_edges(s);
    if (const auto why = detail::act_obstruction(g, s.v, s.u, s.w, deleted, added))
        throw InvalidMoveError("apply_backward: " + *why);
    MutableGraph m(g);
    detail::apply_edges(m, deleted, added);
    return m.freeze();
}

namespace detail {

// Census difference of an edge rewrite, restricted to cycles of length <= r.
// Only cycles through a changed edge can change, so the difference is exact.
template <typename Graph>
struct CensusDiff {
    std::set<Cycle> destroyed;
    std::set<Cycle> created;
};

template <typename Graph>
CensusDiff<Graph> census_diff(const Graph& g, const std::vector<Edge>& deleted,
                              const std::vector<Edge>& added, int r) {
    CensusDiff<Graph> diff;
    diff.destroyed = cycles_through_edges(g, deleted, r);
    MutableGraph scratch(g);
    apply_edges(scratch, deleted, added);
    diff.created = cycles_through_edges(scratch, added, r);
    return diff;
}

}  // namespace detail

// A forward switching is valid when the cycle it removes is the only cycle
// of length <= r whose presence changes: the move destroys exactly
// {v_0 ... v_{k-1}} and creates no cycle of length <= r.  Checked against
// the exact local census difference.  Throws InvalidMoveError when the move
// does not act on g.
template <typename Graph>
bool is_valid_forward(const Graph& g, const ForwardSwitching& s, int r) {
    const auto deleted = forward_deleted_edges(s);
    const auto added = forward_added_edges(s);
    if (const auto why = detail::act_obstruction(g, s.v, s.u, s.w, deleted, added))
        throw InvalidMoveError("is_valid_forward: " + *why);
    if (s.size() > r) return false;
    const auto diff = detail::census_diff(g, deleted, added, r);
    return diff.created.empty() && diff.destroyed.size() == 1 &&
           *diff.destroyed.begin() == Cycle::from_vertices(s.v);
}

// Mirror condition: the move creates exactly the cycle v_0 ... v_{k-1} and
// destroys no cycle of length <= r.
template <typename Graph>
bool is_valid_backward(const Graph& g, const BackwardSwitching& s, int r) {
    const auto deleted = backward_deleted_edges(s);
    const auto added = backward_added_edges(s);
    if (const auto why = detail::act_obstruction(g, s.v, s.u, s.w, deleted, added))
        throw InvalidMoveError("is_valid_backward: " + *why);
    if (s.size() > r) return false;
    const auto diff = detail::census_diff(g, deleted, added, r);
    return diff.destroyed.empty() && diff.created.size() == 1 &&
           *diff.created.begin() == Cycle::from_vertices(s.v);
}

// Sufficient distance conditions for validity of a forward switching,
// evaluated on g (all distances in g; an unreachable pair satisfies any
// lower bound):
//   (a) the switched cycle is the only cycle of length <= r through each of
//       its edges, and no target edge (w_i, u_{i+1}) lies on such a cycle,
//   (b) dist(e_i, e_i') >= r for the cycle edge and target edge at each i,
//   (c) 2 dist(e_i', e_j') >= r for distinct target edges,
//   (d) dist(w_i, u_i) >= r for each i.
// These imply validity; the census-difference check above is the
// definition, and tests cross-validate the two.
template <typename Graph>
bool forward_distance_conditions(const Graph& g, const ForwardSwitching& s, int r) {
    const int k = s.size();
    const Cycle alpha = Cycle::from_vertices(s.v);
    std::vector<Edge> cycle_edges, target_edges;
    for (int i = 0; i < k; ++i) {
        cycle_edges.push_back(detail::norm_edge(s.v[i], s.v[(i + 1) % k]));
        target_edges.push_back(detail::norm_edge(s.w[i], s.u[(i + 1) % k]));
    }
    auto at_least = [](std::optional<int> dist, int bound) { return !dist || 2 * *dist >= bound; };
    for (int i = 0; i < k; ++i) {
        const std::set<Cycle> through =
            cycles_through_edges(g, {cycle_edges[static_cast<std::size_t>(i)]}, r);
        if (through.size() != 1 || *through.begin() != alpha) return false;
        if (!cycles_through_edges(g, {target_edges[static_cast<std::size_t>(i)]}, r).empty())
            return false;
        if (!at_least(edge_distance(g, cycle_edges[static_cast<std::size_t>(i)],
                                    target_edges[static_cast<std::size_t>(i)]),
                      2 * r))
            return false;
        if (!at_least(distance(g, s.w[static_cast<std::size_t>(i)], s.u[static_cast<std::size_t>(i)]), 2 * r))
            return false;
        for (int j = i + 1; j < k; ++j) {
            if (!at_least(edge_distance(g, target_edges[static_cast<std::size_t>(i)],
                                        target_edges[static_cast<std::size_t>(j)]),
                          r))
                return false;
        }
    }
    return true;
}

// --- enumeration ---------------------------------------------------------

namespace detail {

// Sorted complement V \ (N(v) u {v}).
template <typename Graph>
std::vector<int> non_neighbors(const Graph& g, int v) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(g.n() - g.degree() - 1));
    const auto& nbrs = g.neighbors(v);
    std::size_t at = 0;
    for (int x = 0; x < g.n(); ++x) {
        while (at < nbrs.size() && nbrs[at] < x) ++at;
        if (x == v || (at < nbrs.size() && nbrs[at] == x)) continue;
        out.push_back(x);
    }
    return out;
}

}  // namespace detail

// Enumerates every forward switching acting on g whose cycle tuple is
// exactly `v` (one fixed rotation and direction of a cycle of g), invoking
// the visitor on each act-applicable candidate.  Visiting order is
// deterministic.  Validity is not checked here; callers filter with
// is_valid_forward.
template <typename Graph, typename Visitor>
void enumerate_forward_ordered(const Graph& g, const std::vector<int>& v, Visitor&& visit) {
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % k)]))
            return;  // a cycle edge is missing: nothing can remove this tuple
    std::vector<std::vector<int>> allowed;
    allowed.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) allowed.push_back(detail::non_neighbors(g, v[static_cast<std::size_t>(i)]));

    std::vector<int> w(static_cast<std::size_t>(k), -1), u(static_cast<std::size_t>(k), -1);
    auto try_candidate = [&]() {
        ForwardSwitching s{v, u, w};
        if (forward_applicable(g, s)) visit(s);
    };
    // u[(i+1) % k] ranges over neighbors of w[i] avoiding N(v_{i+1}).
    auto choose_u = [&](auto&& self, int i) -> void {
        if (i == k) {
            try_candidate();
            return;
        }
        const int j = (i + 1) % k;
        for (int cand : g.neighbors(w[static_cast<std::size_t>(i)])) {
            if (cand == v[static_cast<std::size_t>(j)] ||
                g.has_edge(v[static_cast<std::size_t>(j)], cand))
                continue;
            u[static_cast<std::size_t>(j)] = cand;
            self(self, i + 1);
        }
        u[static_cast<std::size_t>(j)] = -1;
    };
    auto choose_w = [&](auto&& self, int i) -> void {
        if (i == k) {
            choose_u(choose_u, 0);
            return;
        }
        for (int cand : allowed[static_cast<std::size_t>(i)]) {
            if (std::find(w.begin(), w.begin() + i, cand) != w.begin() + i) continue;
            w[static_cast<std::size_t>(i)] = cand;
            self(self, i + 1);
        }
        w[static_cast<std::size_t>(i)] = -1;
    };
    choose_w(choose_w, 0);
}

// Candidates for the canonical labeling of `alpha`.  Each rotation class of
// labeled moves is reported through exactly one labeling, the one whose
// cycle tuple equals alpha.vertices(); classes whose distinct-w labelings
// all traverse alpha the opposite way are reachable with
// enumerate_forward_ordered on the reversed tuple.
template <typename Graph, typename Visitor>
void enumerate_forward(const Graph& g, const Cycle& alpha, Visitor&& visit) {
    if (!contains_cycle(g, alpha)) return;
    enumerate_forward_ordered(g, alpha.vertices(), std::forward<Visitor>(visit));
}

// Enumerates every backward switching acting on g whose cycle tuple is
// exactly `v`; same contract as enumerate_forward_ordered.
template <typename Graph, typename Visitor>
void enumerate_backward_ordered(const Graph& g, const std::vector<int>& v, Visitor&& visit) {
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i)
        if (g.has_edge(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % k)]))
            return;  // a cycle edge already present: nothing can create alpha

    std::vector<int> w(static_cast<std::size_t>(k), -1), u(static_cast<std::size_t>(k), -1);
    auto try_candidate = [&]() {
        BackwardSwitching s{v, u, w};
        if (backward_applicable(g, s)) visit(s);
    };
    // Choose (u_i, w_i) as an ordered pair of distinct neighbors of v_i,
    // pruning on the target-edge constraint with the previous position.
    auto choose_pair = [&](auto&& self, int i) -> void {
        if (i == k) {
            // wrap constraint: (w_{k-1}, u_0) must be addable
            const int wk = w[static_cast<std::size_t>(k - 1)];
            if (u[0] == wk || g.has_edge(u[0], wk)) return;
            try_candidate();
            return;
        }
        for (int uc : g.neighbors(v[static_cast<std::size_t>(i)])) {
            if (i > 0) {
                const int wp = w[static_cast<std::size_t>(i - 1)];
                if (uc == wp || g.has_edge(uc, wp)) continue;
            }
            for (int wc : g.neighbors(v[static_cast<std::size_t>(i)])) {
                if (wc == uc) continue;
                if (std::find(w.begin(), w.begin() + i, wc) != w.begin() + i) continue;
                u[static_cast<std::size_t>(i)] = uc;
                w[static_cast<std::size_t>(i)] = wc;
                self(self, i + 1);
            }
        }
        u[static_cast<std::size_t>(i)] = -1;
        w[static_cast<std::size_t>(i)] = -1;
    };
    choose_pair(choose_pair, 0);
}

// Candidates for the canonical labeling of `alpha`; the reversed-tuple
// classes are reachable with enumerate_backward_ordered, as for the forward
// direction.
template <typename Graph, typename Visitor>
void enumerate_backward(const Graph& g, const Cycle& alpha, Visitor&& visit) {
    enumerate_backward_ordered(g, alpha.vertices(), std::forward<Visitor>(visit));
}

// --- counting -------------------------------------------------------------

struct CountOptions {
    enum class Mode { exact, monte_carlo };
    Mode mode = Mode::exact;
    long long samples = 10000;   // Monte Carlo tuple draws
    std::uint64_t seed = 0;      // Monte Carlo stream seed
};

struct CountResult {
    double value = 0.0;      // count, or an unbiased estimate of it
    double stderr_value = 0.0;  // 0 for exact counts
    bool exact = true;
    long long samples = 0;   // tuple draws spent (Monte Carlo only)
};

namespace detail {

// Sequential importance sampling of one forward candidate with
// Horvitz-Thompson weight; returns weight * 1{valid}.  `first` pins w_0
// (stratified mode) or is -1 to draw it too.
template <typename Graph>
double sample_forward_candidate(const Graph& g, const Cycle& alpha,
                                const std::vector<std::vector<int>>& allowed, int r, Rng& rng,
                                int first) {
    const std::vector<int>& v = alpha.vertices();
    const int k = alpha.length();
    std::vector<int> w(static_cast<std::size_t>(k)), u(static_cast<std::size_t>(k));
    double weight = 1.0;
    std::vector<int> pool;
    for (int i = 0; i < k; ++i) {
        if (i == 0 && first >= 0) {
            w[0] = first;
            continue;
        }
        pool.clear();
        for (int cand : allowed[static_cast<std::size_t>(i)])
            if (std::find(w.begin(), w.begin() + i, cand) == w.begin() + i) pool.push_back(cand);
        if (pool.empty()) return 0.0;
        w[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(rng.below(pool.size()))];
        weight *= static_cast<double>(pool.size());
    }
    for (int i = 0; i < k; ++i) {
        const int j = (i + 1) % k;
        pool.clear();
        for (int cand : g.neighbors(w[static_cast<std::size_t>(i)]))
            if (cand != v[static_cast<std::size_t>(j)] &&
                !g.has_edge(v[static_cast<std::size_t>(j)], cand))
                pool.push_back(cand);
        if (pool.empty()) return 0.0;
        u[static_cast<std::size_t>(j)] = pool[static_cast<std::size_t>(rng.below(pool.size()))];
        weight *= static_cast<double>(pool.size());
    }
    ForwardSwitching s{v, u, w};
    if (!forward_applicable(g, s)) return 0.0;
    return is_valid_forward(g, s, r) ? weight : 0.0;
}

inline double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

inline CountResult reduce_draws(const std::vector<double>& draws) {
    CountResult res;
    res.exact = false;
    res.samples = static_cast<long long>(draws.size());
    res.value = mean_of(draws);
    double var = 0.0;
    for (double x : draws) var += (x - res.value) * (x - res.value);
    if (draws.size() > 1) var /= static_cast<double>(draws.size() - 1);
    res.stderr_value = std::sqrt(var / static_cast<double>(draws.size()));
    return res;
}

}  // namespace detail

// Number of valid forward switchings removing `alpha` (0 when alpha is not
// a cycle of g).  Exact mode enumerates and is guarded to k <= 4 and
// n*d <= 120; Monte Carlo mode stratifies over the first w label and
// weights the remaining sequential draws by Horvitz-Thompson inclusion
// probabilities, giving an unbiased estimate with a standard error.
template <typename Graph>
CountResult count_forward(const Graph& g, const Cycle& alpha, int r,
                          const CountOptions& opt = {}) {
    if (r < 3 || r > g.n()) throw std::invalid_argument("count_forward: need 3 <= r <= n");
    if (opt.mode == CountOptions::Mode::exact) {
        if (alpha.length() > 4 || g.n() * g.degree() > 120)
            throw BudgetError(
                "count_forward: exact mode is limited to k <= 4 and n*d <= 120; "
                "use Monte Carlo mode");
        CountResult res;
        if (!contains_cycle(g, alpha)) return res;
        enumerate_forward(g, alpha, [&](const ForwardSwitching& s) {
            if (is_valid_forward(g, s, r)) res.value += 1.0;
        });
        return res;
    }
    if (opt.samples <= 0) throw std::invalid_argument("count_forward: samples must be positive");
    CountResult zero;
    zero.exact = false;
    if (!contains_cycle(g, alpha)) return zero;
    const std::vector<int>& v = alpha.vertices();
    const int k = alpha.length();
    std::vector<std::vector<int>> allowed;
    for (int i = 0; i < k; ++i) allowed.push_back(detail::non_neighbors(g, v[static_cast<std::size_t>(i)]));
    if (allowed[0].empty()) return zero;
    Rng rng = Rng::stream(opt.seed, 0x666f7277);  // distinct stream per direction

    const std::size_t strata = allowed[0].size();
    if (static_cast<std::size_t>(opt.samples) >= 2 * strata) {
        // Proportional allocation over w_0; the estimate is the sum of
        // per-stratum totals.
        double total = 0.0, var = 0.0;
        long long spent = 0;
        for (std::size_t j = 0; j < strata; ++j) {
            const long long m = opt.samples / static_cast<long long>(strata) +
                                (static_cast<long long>(j) <
                                         opt.samples % static_cast<long long>(strata)
                                     ? 1
                                     : 0);
            std::vector<double> draws;
            draws.reserve(static_cast<std::size_t>(m));
            for (long long t = 0; t < m; ++t)
                draws.push_back(detail::sample_forward_candidate(g, alpha, allowed, r, rng,
                                                                 allowed[0][j]));
            const double mu = detail::mean_of(draws);
            total += mu;
            double s2 = 0.0;
            for (double x : draws) s2 += (x - mu) * (x - mu);
            if (m > 1) var += s2 / static_cast<double>(m - 1) / static_cast<double>(m);
            spent += m;
        }
        CountResult res;
        res.exact = false;
        res.value = total;
        res.stderr_value = std::sqrt(var);
        res.samples = spent;
        return res;
    }
    // Too few draws to stratify: sample w_0 uniformly and fold the stratum
    // count into the weight.
    std::vector<double> draws;
    draws.reserve(static_cast<std::size_t>(opt.samples));
    for (long long t = 0; t < opt.samples; ++t) {
        const int first = allowed[0][static_cast<std::size_t>(rng.below(strata))];
        draws.push_back(static_cast<double>(strata) *
                        detail::sample_forward_candidate(g, alpha, allowed, r, rng, first));
    }
    return detail::reduce_draws(draws);
}

// Number of valid backward switchings creating `alpha`.  Exact mode is
// guarded by the candidate space (d(d-1))^k <= 10^6; Monte Carlo mode draws
// uniform label tuples from the exact candidate product space.
template <typename Graph>
CountResult count_backward(const Graph& g, const Cycle& alpha, int r,
                           const CountOptions& opt = {}) {
    if (r < 3 || r > g.n()) throw std::invalid_argument("count_backward: need 3 <= r <= n");
    const int k = alpha.length();
    const int d = g.degree();
    const double space = std::pow(static_cast<double>(d) * (d - 1), k);
    if (opt.mode == CountOptions::Mode::exact) {
        if (space > 1e6)
            throw BudgetError(
                "count_backward: exact candidate space (d(d-1))^k exceeds 10^6; "
                "use Monte Carlo mode");
        CountResult res;
        enumerate_backward(g, alpha, [&](const BackwardSwitching& s) {
            if (is_valid_backward(g, s, r)) res.value += 1.0;
        });
        return res;
    }
    if (opt.samples <= 0) throw std::invalid_argument("count_backward: samples must be positive");
    const std::vector<int>& v = alpha.vertices();
    CountResult zero;
    zero.exact = false;
    for (int i = 0; i < k; ++i)
        if (g.has_edge(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % k)]))
            return zero;
    Rng rng = Rng::stream(opt.seed, 0x6261636b);
    std::vector<double> draws;
    draws.reserve(static_cast<std::size_t>(opt.samples));
    std::vector<int> u(static_cast<std::size_t>(k)), w(static_cast<std::size_t>(k));
    for (long long t = 0; t < opt.samples; ++t) {
        for (int i = 0; i < k; ++i) {
            const auto& nbrs = g.neighbors(v[static_cast<std::size_t>(i)]);
            const std::size_t ui = static_cast<std::size_t>(rng.below(nbrs.size()));
            std::size_t wi = static_cast<std::size_t>(rng.below(nbrs.size() - 1));
            if (wi >= ui) ++wi;
            u[static_cast<std::size_t>(i)] = nbrs[ui];
            w[static_cast<std::size_t>(i)] = nbrs[wi];
        }
        BackwardSwitching s{v, u, w};
        const bool ok = backward_applicable(g, s) && is_valid_backward(g, s, r);
        draws.push_back(ok ? space : 0.0);
    }
    return detail::reduce_draws(draws);
}

}  // namespace regspec
