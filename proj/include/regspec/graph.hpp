#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regspec/errors.hpp"

namespace regspec {

using Edge = std::pair<int, int>;

// A directed view of an undirected edge: tail -> head.
struct OrientedEdge {
    int tail = 0;
    int head = 0;
    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// Falling factorial n (n-1) ... (n-k+1) as an exact integer.  Returns 0 when
// k > n; throws on overflow rather than wrapping.
inline std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        acc *= (n - i);
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("falling_factorial: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

// Falling factorial in floating point, for weight and bound computations
// whose arguments can exceed the exact-integer range.
inline double falling_factorial_real(double n, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial_real: k must be >= 0");
    if (static_cast<double>(k) > n) return 0.0;
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= n - static_cast<double>(i);
    return acc;
}

// Simple d-regular graph on vertices 0..n-1.  Immutable: the only mutation
// path in the toolkit is applying a switching, which produces a new graph.
// Neighbor lists are kept sorted so adjacency tests are O(log d) and
// serialization is canonical.
class RegularGraph {
public:
    RegularGraph(int n, int d, const std::vector<Edge>& edges) : n_(n), d_(d) {
        if (n <= 0) throw std::invalid_argument("RegularGraph: n must be positive");
        if (d < 0 || d >= n) throw std::invalid_argument("RegularGraph: need 0 <= d < n");
        if (static_cast<std::size_t>(n) * static_cast<std::size_t>(d) != 2 * edges.size())
            throw std::invalid_argument("RegularGraph: edge count does not match n*d/2");
        adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("RegularGraph: vertex out of range");
            if (u == v) throw std::invalid_argument("RegularGraph: self-loop");
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
                throw std::invalid_argument("RegularGraph: duplicate edge");
            if (static_cast<int>(nbrs.size()) != d)
                throw std::invalid_argument("RegularGraph: graph is not d-regular");
        }
    }

    int n() const { return n_; }
    int degree() const { return d_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    // Undirected edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(d_) / 2);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const RegularGraph& a, const RegularGraph& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    int d_;
    std::vector<std::vector<int>> adj_;
};

// Mutable adjacency structure used internally by the switching chain and by
// scratch copies during validity checks.  Not exposed through the public
// sampling interfaces.
class MutableGraph {
public:
    explicit MutableGraph(const RegularGraph& g) : n_(g.n()), d_(g.degree()) {
        adj_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
    }

    int n() const { return n_; }
    int degree() const { return d_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    void add_edge(int u, int v) {
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    void remove_edge(int u, int v) {
        erase_sorted(adj_[static_cast<std::size_t>(u)], v);
        erase_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    RegularGraph freeze() const {
        std::vector<Edge> es;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) es.emplace_back(u, v);
        return RegularGraph(n_, d_, es);
    }

private:
    static void insert_sorted(std::vector<int>& xs, int v) {
        xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
    }
    static void erase_sorted(std::vector<int>& xs, int v) {
        const auto it = std::lower_bound(xs.begin(), xs.end(), v);
        if (it == xs.end() || *it != v)
            throw std::logic_error("MutableGraph::remove_edge: edge not present");
        xs.erase(it);
    }

    int n_;
    int d_;
    std::vector<std::vector<int>> adj_;
};

// BFS distance between two vertex sets: 0 if they intersect, nullopt if no
// path exists.
template <typename Graph>
std::optional<int> distance(const Graph& g, const std::vector<int>& from,
                            const std::vector<int>& to) {
    if (from.empty() || to.empty())
        throw std::invalid_argument("distance: vertex sets must be non-empty");
    std::vector<char> target(static_cast<std::size_t>(g.n()), 0);
    for (int v : to) target[static_cast<std::size_t>(v)] = 1;
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::deque<int> queue;
    for (int v : from) {
        if (dist[static_cast<std::size_t>(v)] == -1) {
            dist[static_cast<std::size_t>(v)] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (target[static_cast<std::size_t>(v)]) return dist[static_cast<std::size_t>(v)];
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

template <typename Graph>
std::optional<int> distance(const Graph& g, int from, int to) {
    return distance(g, std::vector<int>{from}, std::vector<int>{to});
}

// Distance between undirected edges: minimum vertex distance over endpoint
// pairs.
template <typename Graph>
std::optional<int> edge_distance(const Graph& g, Edge a, Edge b) {
    return distance(g, std::vector<int>{a.first, a.second}, std::vector<int>{b.first, b.second});
}

// Text format: first line "n d", then one "u v" line per undirected edge
// with u < v, vertices 0-indexed.
inline RegularGraph parse_graph(std::istream& in) {
    int n = 0, d = 0;
    if (!(in >> n >> d)) throw std::invalid_argument("parse_graph: missing 'n d' header");
    std::vector<Edge> edges;
    int u = 0, v = 0;
    while (in >> u >> v) {
        if (u >= v) throw std::invalid_argument("parse_graph: edges must satisfy u < v");
        edges.emplace_back(u, v);
    }
    if (!in.eof() && in.fail()) throw std::invalid_argument("parse_graph: malformed edge line");
    return RegularGraph(n, d, edges);
}

inline RegularGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void format_graph(const RegularGraph& g, std::ostream& out) {
    out << g.n() << ' ' << g.degree() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string format_graph(const RegularGraph& g) {
    std::ostringstream out;
    format_graph(g, out);
    return out.str();
}

}  // namespace regspec
