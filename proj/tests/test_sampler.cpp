#include <doctest.h>

#include <map>
#include <vector>

#include "fixtures.hpp"
#include "regspec/census.hpp"
#include "regspec/numerics.hpp"
#include "regspec/sampler.hpp"

using namespace regspec;

TEST_CASE("pairing rejection produces simple regular graphs deterministically") {
    Rng a = Rng::stream(99, 0);
    Rng b = Rng::stream(99, 0);
    const PairingSample s1 = sample_pairing_rejection(20, 3, a);
    const PairingSample s2 = sample_pairing_rejection(20, 3, b);
    CHECK(s1.graph == s2.graph);
    CHECK(s1.attempts == s2.attempts);
    CHECK(s1.graph.n() == 20);
    CHECK(s1.graph.degree() == 3);

    Rng c = Rng::stream(100, 0);
    CHECK_FALSE(sample_pairing_rejection(20, 3, c).graph == s1.graph);

    Rng d = Rng::stream(99, 0);
    CHECK_THROWS_AS(sample_pairing_rejection(0, 3, d), std::invalid_argument);
    CHECK_THROWS_AS(sample_pairing_rejection(4, 1, d), std::invalid_argument);
    CHECK_THROWS_AS(sample_pairing_rejection(3, 3, d), std::invalid_argument);
    CHECK_THROWS_AS(sample_pairing_rejection(5, 3, d), std::invalid_argument);  // odd n d
}

TEST_CASE("samples are indexed, not worker-ordered") {
    SamplerConfig cfg;
    cfg.n = 14;
    cfg.d = 3;
    cfg.seed = 31337;
    const int count = 24;
    std::vector<RegularGraph> base(static_cast<std::size_t>(count), fixtures::k4());
    for_each_uniform_sample(cfg, count, 1,
                            [&](std::size_t i, const RegularGraph& g, long long) { base[i] = g; });
    for (int threads : {2, 4, 8}) {
        std::vector<RegularGraph> got(static_cast<std::size_t>(count), fixtures::k4());
        for_each_uniform_sample(
            cfg, count, threads,
            [&](std::size_t i, const RegularGraph& g, long long) { got[i] = g; });
        CHECK(got == base);
    }
}

TEST_CASE("rejection rate matches the pairing-model acceptance probability") {
    // For d = 3 the asymptotic acceptance probability is
    // exp(-(d-1)/2 - (d-1)^2/4) = e^-2, so attempts average about 7.39.
    SamplerConfig cfg;
    cfg.n = 200;
    cfg.d = 3;
    cfg.seed = 8;
    double total_attempts = 0.0;
    const int count = 400;
    for_each_uniform_sample(cfg, count, 4, [&](std::size_t, const RegularGraph&, long long a) {
        total_attempts += static_cast<double>(a);
    });
    const double mean_attempts = total_attempts / count;
    CHECK(mean_attempts > 5.5);
    CHECK(mean_attempts < 10.0);
}

TEST_CASE("rejection stalls raise a budget-style error") {
    // At d = 10, n = 12 the simple-graph acceptance probability is around
    // e^-24.75, so 50 attempts fail with overwhelming probability.
    Rng rng = Rng::stream(1, 0);
    CHECK_THROWS_WITH_AS(sample_pairing_rejection(12, 10, rng, 50),
                         doctest::Contains("switching-chain"), RejectionStallError);
}

TEST_CASE("exhaustive enumeration of small cubic graphs") {
    CHECK(enumerate_all_regular(4, 3).size() == 1);
    CHECK(enumerate_all_regular(4, 3).front() == fixtures::k4());
    CHECK(enumerate_all_regular(5, 3).empty());  // odd n d
    const auto all6 = enumerate_all_regular(6, 3);
    CHECK(all6.size() == 70);
    for (const RegularGraph& g : all6) {
        CHECK(g.n() == 6);
        CHECK(g.degree() == 3);
    }
    // The labeled count for n = 8 is 19355.
    CHECK(enumerate_all_regular(8, 3).size() == 19355);
    CHECK_THROWS_AS(enumerate_all_regular(12, 3), BudgetError);
    CHECK_THROWS_AS(enumerate_all_regular(6, 4), BudgetError);
}

TEST_CASE("pairing rejection is uniform over labeled (6,3) graphs") {
    const auto all6 = enumerate_all_regular(6, 3);
    REQUIRE(all6.size() == 70);
    std::map<std::vector<Edge>, int> index;
    for (std::size_t i = 0; i < all6.size(); ++i)
        index[all6[i].edges()] = static_cast<int>(i);

    SamplerConfig cfg;
    cfg.n = 6;
    cfg.d = 3;
    cfg.seed = 20260815;
    const int count = 7000;
    std::vector<int> hits(70, 0);
    for_each_uniform_sample(cfg, count, 4, [&](std::size_t, const RegularGraph& g, long long) {
        hits[static_cast<std::size_t>(index.at(g.edges()))]++;
    });
    const double expected = count / 70.0;
    double chi2 = 0.0;
    for (int h : hits) {
        const double diff = h - expected;
        chi2 += diff * diff / expected;
    }
    // 69 degrees of freedom; mean 69, sd ~11.7.  139 is ~6 sigma.
    CHECK(chi2 < 139.0);
    CHECK(chi_square_sf(chi2, 69) > 1e-6);
}

TEST_CASE("circulant start states") {
    const RegularGraph g = circulant_graph(6, 3);
    CHECK(g.n() == 6);
    CHECK(g.degree() == 3);
    CHECK(census(g, 4).count(4) > 0);

    const RegularGraph big = circulant_graph(2000, 10);
    CHECK(big.n() == 2000);
    CHECK(big.degree() == 10);
    // Offsets 1..5: vertex 0 sees 1995..1999 and 1..5.
    CHECK(big.has_edge(0, 5));
    CHECK(big.has_edge(0, 1995));
    CHECK_FALSE(big.has_edge(0, 6));

    CHECK_THROWS_AS(circulant_graph(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(circulant_graph(7, 3), std::invalid_argument);  // odd-odd
    CHECK_THROWS_AS(circulant_graph(6, 1), std::invalid_argument);
}
