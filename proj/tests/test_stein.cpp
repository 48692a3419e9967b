#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "regspec/stein.hpp"

using namespace regspec;
using doctest::Approx;

TEST_CASE("stationary synthetic records certify distance zero") {
    const auto records = synthetic_poisson_records(3, 5, 200, 11);
    REQUIRE(records.size() == 200);
    REQUIRE(records[0].c.size() == 6);
    const SteinCertificate cert = assemble_certificate(records, 3, 5);
    CHECK(cert.bound == 0.0);
    CHECK(cert.se == 0.0);
    REQUIRE(cert.terms.size() == 3);
    CHECK(cert.terms[0].k == 3);
    CHECK(cert.terms[0].lambda == Approx(4.0 / 3.0));
    // xi_k = min(1, 1.4 / sqrt(lambda_k)) caps at one for small lambda.
    CHECK(cert.terms[0].xi == 1.0);
    CHECK(cert.terms[1].xi == Approx(1.4 / std::sqrt(2.0)));
    CHECK(cert.terms[2].xi == Approx(1.4 / std::sqrt(3.2)));
    CHECK(cert.terms[0].term_b == 0.0);
    CHECK(cert.terms[0].term_f == 0.0);
}

TEST_CASE("certificate assembly arithmetic on two hand-built records") {
    SteinSampleRecord r1;
    r1.b_hat = {0, 0, 0, 1.0};
    r1.f_hat = {0, 0, 0, 2.0};
    r1.c = {0, 0, 0, 3};
    SteinSampleRecord r2;
    r2.b_hat = {0, 0, 0, 4.0 / 3.0};
    r2.f_hat = {0, 0, 0, 0.0};
    r2.c = {0, 0, 0, 0};
    const SteinCertificate cert = assemble_certificate({r1, r2}, 3, 3);
    REQUIRE(cert.terms.size() == 1);
    const SteinTermSummary& t = cert.terms[0];
    // Deviations: |4/3 - b| = {1/3, 0}; |c - f| = {1, 0}.
    CHECK(t.xi == 1.0);
    CHECK(t.term_b == Approx(1.0 / 6.0));
    CHECK(t.term_f == Approx(0.5));
    CHECK(t.se_b == Approx(1.0 / 6.0));
    CHECK(t.se_f == Approx(0.5));
    CHECK(cert.bound == Approx(2.0 / 3.0));
    // Per-sample certificates are {4/3, 0}; their standard error is 2/3.
    CHECK(cert.se == Approx(2.0 / 3.0));
    CHECK(cert.samples == 2);
    CHECK_THROWS_AS(assemble_certificate({}, 3, 3), std::invalid_argument);
}

TEST_CASE("sampled records produce a finite positive certificate") {
    SteinOptions opt;
    opt.n = 30;
    opt.d = 3;
    opt.r = 3;
    opt.samples = 30;
    opt.seed = 20260815;
    opt.alpha_samples = 8;
    opt.count_samples = 500;
    opt.threads = 0;
    const auto records = stein_sample_records(opt);
    REQUIRE(records.size() == 30);
    for (const auto& rec : records) {
        REQUIRE(rec.b_hat.size() == 4);
        CHECK(rec.b_hat[3] >= 0.0);
        CHECK(rec.f_hat[3] >= 0.0);
        CHECK(rec.c[3] >= 0);
        CHECK(std::isfinite(rec.b_hat[3]));
        CHECK(std::isfinite(rec.f_hat[3]));
    }
    const SteinCertificate cert = assemble_certificate(records, opt.d, opt.r);
    CHECK(cert.bound > 0.0);
    CHECK(cert.bound < 5.0);
    CHECK(cert.se > 0.0);
    CHECK(std::isfinite(cert.bound));
}

TEST_CASE("record sampling is deterministic by index, not worker order") {
    SteinOptions opt;
    opt.n = 20;
    opt.d = 3;
    opt.r = 3;
    opt.samples = 8;
    opt.seed = 7;
    opt.alpha_samples = 4;
    opt.count_samples = 200;
    opt.threads = 1;
    const auto one = stein_sample_records(opt);
    opt.threads = 4;
    const auto four = stein_sample_records(opt);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].b_hat == four[i].b_hat);
        CHECK(one[i].f_hat == four[i].f_hat);
        CHECK(one[i].c == four[i].c);
    }
}

TEST_CASE("stein argument guards") {
    SteinOptions opt;
    opt.n = 20;
    opt.samples = 0;
    CHECK_THROWS_AS(stein_sample_records(opt), std::invalid_argument);
    opt.samples = 1;
    opt.alpha_samples = 0;
    CHECK_THROWS_AS(stein_sample_records(opt), std::invalid_argument);
    opt.alpha_samples = 1;
    opt.r = 2;
    CHECK_THROWS_AS(stein_sample_records(opt), std::invalid_argument);
    opt.r = 30;
    CHECK_THROWS_AS(stein_sample_records(opt), std::invalid_argument);
    CHECK_THROWS_AS(synthetic_poisson_records(3, 4, 0, 1), std::invalid_argument);
}
