#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "regspec/census.hpp"
#include "regspec/nbwalks.hpp"
#include "regspec/sampler.hpp"

using namespace regspec;
using doctest::Approx;

namespace {

std::vector<long long> tail(const std::vector<long long>& v) {
    // Drops the never-populated k = 0..2 slots for compact comparisons.
    return {v.begin() + 3, v.end()};
}

}  // namespace

TEST_CASE("cyclically non-backtracking walk counts on fixed graphs") {
    CHECK(tail(cnbw_counts(fixtures::k4(), 6)) ==
          std::vector<long long>{24, 24, 0, 96});
    CHECK(tail(cnbw_counts(fixtures::k33(), 6)) ==
          std::vector<long long>{0, 72, 0, 72});
    CHECK(tail(cnbw_counts(fixtures::petersen(), 8)) ==
          std::vector<long long>{0, 0, 120, 120, 0, 240});
    CHECK(tail(cnbw_counts(fixtures::prism(), 8)) ==
          std::vector<long long>{12, 24, 60, 48, 84, 360});
    CHECK(tail(cnbw_counts(fixtures::cubic8(), 8)) ==
          std::vector<long long>{6, 24, 60, 78, 84, 264});
    CHECK(tail(cnbw_counts(fixtures::two_triangle_bridge(), 8)) ==
          std::vector<long long>{12, 0, 40, 84, 168, 304});
    // A plain cycle supports exactly the two traversal directions, for any
    // multiple of its length.
    const auto ring = cnbw_counts(fixtures::ring5(), 10);
    CHECK(ring[5] == 10);
    CHECK(ring[10] == 10);
    for (int k : {3, 4, 6, 7, 8, 9}) CHECK(ring[static_cast<std::size_t>(k)] == 0);
    // Walks of length 1 and 2 cannot be cyclically non-backtracking.
    CHECK(cnbw_counts(fixtures::k4(), 6)[1] == 0);
    CHECK(cnbw_counts(fixtures::k4(), 6)[2] == 0);
}

TEST_CASE("walk counts match the directed-edge operator traces") {
    for (const RegularGraph& g :
         {fixtures::k4(), fixtures::k33(), fixtures::petersen(), fixtures::prism(),
          fixtures::cubic8(), fixtures::two_triangle_bridge()}) {
        const auto fast = cnbw_counts(g, 8);
        const auto traces = oracles::hashimoto_trace_counts(g, 8);
        for (int k = 1; k <= 8; ++k)
            CHECK(fast[static_cast<std::size_t>(k)] == traces[static_cast<std::size_t>(k)]);
    }
    for (std::uint64_t t = 0; t < 4; ++t) {
        Rng rng = Rng::stream(606, t);
        const RegularGraph g = sample_pairing_rejection(10, 3, rng).graph;
        CHECK(tail(cnbw_counts(g, 7)) == tail(oracles::hashimoto_trace_counts(g, 7)));
    }
}

TEST_CASE("divisor sums over the cycle census") {
    // Below length 6 every cyclically non-backtracking closed walk traces a
    // short cycle, so the two counting routes agree on every simple graph.
    for (const RegularGraph& g :
         {fixtures::k4(), fixtures::k33(), fixtures::petersen(), fixtures::prism(),
          fixtures::cubic8(), fixtures::two_triangle_bridge()}) {
        const auto walks = cnbw_counts(g, 5);
        const auto sums = cnbw_divisor_sum(census(g, 5), 5);
        for (int k = 3; k <= 5; ++k)
            CHECK(walks[static_cast<std::size_t>(k)] == sums[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("divisor-route deviations follow the overlap events") {
    // Petersen: no two short cycles share an edge at cutoff 8 (shortest such
    // pair sums to 10), so the routes agree through k = 8.
    CHECK(tail(cnbw_divisor_sum(census(fixtures::petersen(), 8), 8)) ==
          tail(cnbw_counts(fixtures::petersen(), 8)));
    // Prism: triangle and square share an edge (lengths sum to 7): first
    // deviation at k = 7.
    const auto prism_sums = cnbw_divisor_sum(census(fixtures::prism(), 8), 8);
    const auto prism_walks = cnbw_counts(fixtures::prism(), 8);
    CHECK(prism_sums[6] == prism_walks[6]);
    CHECK(prism_sums[7] == 0);
    CHECK(prism_walks[7] == 84);
    // Unique triangle meets a 5-cycle along an edge (sum 8): deviation at 8.
    const auto cubic8_sums = cnbw_divisor_sum(census(fixtures::cubic8(), 8), 8);
    const auto cubic8_walks = cnbw_counts(fixtures::cubic8(), 8);
    CHECK(cubic8_sums[7] == cubic8_walks[7]);
    CHECK(cubic8_sums[8] == 120);
    CHECK(cubic8_walks[8] == 264);
    // Disjoint triangles joined by a bridge: no shared edge anywhere, yet
    // the dumbbell walk of length 3+3+2 shows up at k = 8.
    const auto bridge_sums =
        cnbw_divisor_sum(census(fixtures::two_triangle_bridge(), 8), 8);
    const auto bridge_walks = cnbw_counts(fixtures::two_triangle_bridge(), 8);
    for (int k = 3; k <= 7; ++k)
        CHECK(bridge_sums[static_cast<std::size_t>(k)] ==
              bridge_walks[static_cast<std::size_t>(k)]);
    CHECK(bridge_sums[8] == 272);
    CHECK(bridge_walks[8] == 304);
    const OverlapEvents ev = overlap_events(fixtures::two_triangle_bridge(), 8);
    CHECK_FALSE(ev.pair_overlap);
    CHECK(ev.joined_overlap);
}

TEST_CASE("limit means and standardization") {
    CHECK(mu_k(3, 3) == Approx(8.0));
    CHECK(mu_k(3, 4) == Approx(16.0));
    CHECK(mu_k(3, 5) == Approx(32.0));
    CHECK(mu_k(3, 6) == Approx(72.0));  // 2^3 + 2^6
    CHECK(mu_k(10, 3) == Approx(729.0));
    CHECK_THROWS_AS(mu_k(2, 3), std::invalid_argument);

    CHECK(a_dk(2, 3) == Approx(28.0));
    CHECK(a_dk(2, 4) == Approx(84.0));
    CHECK(a_dk(1, 2) == Approx(2.0));

    // Prism: N_3 = (12 - 8) / 2^{3/2} = sqrt(2).
    const auto n3 = standardized_cnbw(cnbw_counts(fixtures::prism(), 4), 3, 4);
    CHECK(n3[3] == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(n3[4] == Approx((24.0 - 16.0) / 4.0).epsilon(1e-12));
    // Entries beyond the cutoff r_n stay zero.
    const auto cut = standardized_cnbw(cnbw_counts(fixtures::prism(), 4), 3, 3);
    CHECK(cut[4] == 0.0);
    CHECK_THROWS_AS(standardized_cnbw({0, 0, 0, 12}, 2, 3), std::invalid_argument);
}

TEST_CASE("walk budget guard") {
    CHECK_THROWS_AS(cnbw_counts(fixtures::petersen(), 40), BudgetError);
    CHECK_THROWS_AS(cnbw_divisor_sum(census(fixtures::k4(), 5), 6), std::invalid_argument);
}
