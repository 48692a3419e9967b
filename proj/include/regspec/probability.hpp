#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "regspec/graph.hpp"
#include "regspec/numerics.hpp"
#include "regspec/parallel.hpp"
#include "regspec/sampler.hpp"

namespace regspec {

// A fixed labeled subgraph H on vertices 0..vertex_count-1 whose containment
// probability in the uniform d-regular model is to be estimated.  The decay
// exponent of the containment bound is the edge count e(H).
struct SubgraphStructure {
    std::string name;
    std::vector<Edge> edges;
    int vertex_count = 0;
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Single k-cycle on vertices 0..k-1.
inline SubgraphStructure cycle_structure(int k) {
    if (k < 3) throw std::invalid_argument("cycle_structure: need k >= 3");
    SubgraphStructure h;
    h.name = "cycle";
    h.vertex_count = k;
    for (int i = 0; i < k; ++i) {
        const int j = (i + 1) % k;
        h.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    return h;
}

// A j-cycle and a k-cycle sharing a path of exactly f edges (f = 0 shares a
// single vertex).  Edge count is j + k - f.
inline SubgraphStructure two_cycles_structure(int j, int k, int f) {
    if (j < 3 || k < 3) throw std::invalid_argument("two_cycles_structure: need j,k >= 3");
    if (f < 0 || f >= std::min(j, k))
        throw std::invalid_argument("two_cycles_structure: need 0 <= f < min(j,k)");
    if (j == k && f == k - 1)
        throw std::invalid_argument("two_cycles_structure: cycles coincide (f = k-1 with j = k)");
    SubgraphStructure h;
    h.name = "two-cycles";
    // Shared path on vertices 0..f; first cycle closes through f+1..j-1,
    // second through j..j+k-f-2.
    h.vertex_count = j + k - f - 1;
    auto add = [&h](int a, int b) { h.edges.emplace_back(std::min(a, b), std::max(a, b)); };
    for (int i = 0; i < f; ++i) add(i, i + 1);
    int prev = f;
    for (int v = f + 1; v < j; ++v) {
        add(prev, v);
        prev = v;
    }
    add(prev, 0);
    prev = f;
    for (int v = j; v < j + k - f - 1; ++v) {
        add(prev, v);
        prev = v;
    }
    add(prev, 0);
    return h;
}

// Vertex-disjoint j-cycle and k-cycle joined by a path of length l >= 1.
// Edge count is j + k + l.
inline SubgraphStructure joined_cycles_structure(int j, int k, int l) {
    if (j < 3 || k < 3) throw std::invalid_argument("joined_cycles_structure: need j,k >= 3");
    if (l < 1) throw std::invalid_argument("joined_cycles_structure: need l >= 1");
    SubgraphStructure h;
    h.name = "joined";
    h.vertex_count = j + k + l - 1;
    auto add = [&h](int a, int b) { h.edges.emplace_back(std::min(a, b), std::max(a, b)); };
    for (int i = 0; i < j; ++i) add(i, (i + 1) % j);
    for (int i = 0; i < k; ++i) add(j + i, j + (i + 1) % k);
    int prev = 0;
    for (int v = j + k; v < j + k + l - 1; ++v) {
        add(prev, v);
        prev = v;
    }
    add(prev, j);
    return h;
}

inline bool contains_structure(const RegularGraph& g, const SubgraphStructure& h) {
    if (h.vertex_count > g.n())
        throw std::invalid_argument("contains_structure: structure larger than graph");
    for (const auto& [a, b] : h.edges)
        if (!g.has_edge(a, b)) return false;
    return true;
}

struct SubgraphProbability {
    long long hits = 0;
    int samples = 0;
    double estimate = 0.0;
    double stderr_value = 0.0;
    WilsonInterval wilson;
    // Containment bound in both normalizations: constant * (d-1)^e / [n]_e
    // and constant * (d-1)^e / n^e, e = e(H).
    double bound_falling = 0.0;
    double bound_power = 0.0;
    double constant = 1.0;
    int exponent = 0;
};

// Monte Carlo estimate of P[H subset G] over uniform d-regular samples.
inline SubgraphProbability estimate_subgraph_probability(const SubgraphStructure& h, int n,
                                                         int d, int samples,
                                                         std::uint64_t seed,
                                                         double constant = 1.0,
                                                         int threads = 0) {
    if (samples <= 0)
        throw std::invalid_argument("estimate_subgraph_probability: need samples > 0");
    if (h.vertex_count > n)
        throw std::invalid_argument("estimate_subgraph_probability: structure larger than n");
    SamplerConfig cfg;
    cfg.n = n;
    cfg.d = d;
    cfg.seed = seed;
    std::vector<char> hit(static_cast<std::size_t>(samples), 0);
    for_each_uniform_sample(cfg, samples, threads,
                            [&](std::size_t i, const RegularGraph& g, long long) {
                                hit[i] = contains_structure(g, h) ? 1 : 0;
                            });
    SubgraphProbability out;
    out.samples = samples;
    for (char c : hit) out.hits += c;
    out.estimate = static_cast<double>(out.hits) / samples;
    out.stderr_value = std::sqrt(out.estimate * (1.0 - out.estimate) / samples);
    out.wilson = wilson_interval(out.hits, samples);
    out.constant = constant;
    out.exponent = h.edge_count();
    const double numer = constant * std::pow(static_cast<double>(d - 1), out.exponent);
    out.bound_falling = numer / falling_factorial_real(n, out.exponent);
    out.bound_power = numer / std::pow(static_cast<double>(n), out.exponent);
    return out;
}

}  // namespace regspec
