#include <doctest.h>

#include <cmath>
#include <vector>

#include "regspec/graph.hpp"
#include "regspec/numerics.hpp"

using namespace regspec;
using doctest::Approx;

TEST_CASE("poisson pmf reference values") {
    CHECK(poisson_pmf(0, 1.0) == Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(poisson_pmf(3, 2.5) == Approx(0.21376301724973645).epsilon(1e-13));
    CHECK(poisson_pmf(0, 0.0) == Approx(1.0));
    CHECK(poisson_pmf(2, 0.0) == Approx(0.0));
    CHECK(poisson_pmf(-1, 2.0) == Approx(0.0));
}

TEST_CASE("incomplete gamma and chi-square survival") {
    CHECK(gamma_q(2.5, 1.0) == Approx(0.84914503608460964).epsilon(1e-12));
    CHECK(chi_square_sf(3.84, 1) == Approx(0.050043521248705099).epsilon(1e-12));
    CHECK(chi_square_sf(10.0, 4) == Approx(0.040427681994512803).epsilon(1e-12));
    CHECK(chi_square_sf(0.0, 3) == Approx(1.0));
    CHECK_THROWS_AS(gamma_q(-1.0, 2.0), std::invalid_argument);
}

TEST_CASE("normal cdf and kolmogorov survival") {
    CHECK(normal_cdf(0.0) == Approx(0.5).epsilon(1e-15));
    CHECK(normal_cdf(1.959963984540054) == Approx(0.975).epsilon(1e-12));
    CHECK(kolmogorov_sf(0.5) == Approx(0.96394524366487509).epsilon(1e-10));
    CHECK(kolmogorov_sf(0.8) == Approx(0.54414241157419815).epsilon(1e-10));
    CHECK(kolmogorov_sf(1.5) == Approx(0.022217962616525129).epsilon(1e-10));
    CHECK(kolmogorov_sf(0.0) == Approx(1.0));
}

TEST_CASE("wilson interval reference value") {
    const WilsonInterval w = wilson_interval(8, 10);
    CHECK(w.estimate == Approx(0.8));
    CHECK(w.low == Approx(0.49016247153664174).epsilon(1e-12));
    CHECK(w.high == Approx(0.94331784854562474).epsilon(1e-12));
    const WilsonInterval zero = wilson_interval(0, 50);
    CHECK(zero.low == Approx(0.0));
    CHECK(zero.high > 0.0);
    CHECK_THROWS_AS(wilson_interval(1, 0), std::invalid_argument);
}

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(20, 3) == 6840);
    CHECK(falling_factorial(6, 3) == 120);
    CHECK(falling_factorial(5, 6) == 0);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK_THROWS_AS(falling_factorial(30, 18), std::overflow_error);
    CHECK(falling_factorial_real(20, 3) == Approx(6840.0));
    CHECK(falling_factorial_real(2000, 3) == Approx(2000.0 * 1999.0 * 1998.0));
    CHECK(falling_factorial_real(2.0, 5) == Approx(0.0));
}

TEST_CASE("summary statistics") {
    const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
    CHECK(mean(xs) == Approx(2.5));
    CHECK(variance(xs) == Approx(5.0 / 3.0));
    CHECK(standard_error(xs) == Approx(std::sqrt(5.0 / 12.0)));
    const std::vector<double> ys = {2.0, 4.0, 6.0, 8.0};
    CHECK(pearson_correlation(xs, ys) == Approx(1.0));
    const std::vector<double> zs = {4.0, 3.0, 2.0, 1.0};
    CHECK(pearson_correlation(xs, zs) == Approx(-1.0));
    CHECK(percentile({1.0, 2.0, 3.0, 4.0, 5.0}, 50.0) == Approx(3.0));
    CHECK(percentile({1.0, 2.0, 3.0, 4.0}, 25.0) == Approx(1.75));
    CHECK_THROWS_AS(mean({}), std::invalid_argument);
    CHECK_THROWS_AS(variance({1.0}), std::invalid_argument);
}
