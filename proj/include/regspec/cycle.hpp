#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "regspec/graph.hpp"

namespace regspec {

// A cycle as an unlabeled closed walk through distinct vertices, stored in
// canonical form so that every rotation and reflection of the same cycle
// compares equal.  Canonical form: the smallest vertex first, followed by
// the lexicographically smaller of the two traversal directions.
class Cycle {
public:
    static Cycle from_vertices(std::vector<int> vs) {
        if (vs.size() < 3) throw std::invalid_argument("Cycle: length must be at least 3");
        std::vector<int> sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("Cycle: vertices must be distinct");
        Cycle c;
        c.v_ = canonicalize(std::move(vs));
        return c;
    }

    int length() const { return static_cast<int>(v_.size()); }

    const std::vector<int>& vertices() const { return v_; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) {
            const int a = v_[i];
            const int b = v_[(i + 1) % v_.size()];
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
        return out;
    }

    bool contains_vertex(int v) const {
        return std::find(v_.begin(), v_.end(), v) != v_.end();
    }

    bool contains_edge(Edge e) const {
        const std::size_t k = v_.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int a = v_[i];
            const int b = v_[(i + 1) % k];
            if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) return true;
        }
        return false;
    }

    bool shares_vertex(const Cycle& other) const {
        for (int v : v_)
            if (other.contains_vertex(v)) return true;
        return false;
    }

    bool shares_edge(const Cycle& other) const {
        for (const Edge& e : edges())
            if (other.contains_edge(e)) return true;
        return false;
    }

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.v_ <=> b.v_; }

private:
    static std::vector<int> canonicalize(std::vector<int> vs) {
        const std::size_t k = vs.size();
        const std::size_t at = static_cast<std::size_t>(
            std::min_element(vs.begin(), vs.end()) - vs.begin());
        std::vector<int> fwd(k), rev(k);
        for (std::size_t i = 0; i < k; ++i) {
            fwd[i] = vs[(at + i) % k];
            rev[i] = vs[(at + k - i) % k];
        }
        return std::min(fwd, rev);
    }

    std::vector<int> v_;
};

// Whether every edge of the cycle is present in the graph.
template <typename Graph>
bool contains_cycle(const Graph& g, const Cycle& c) {
    for (const auto& [u, v] : c.edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

}  // namespace regspec
