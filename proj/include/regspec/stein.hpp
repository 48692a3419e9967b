#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "regspec/census.hpp"
#include "regspec/cycle.hpp"
#include "regspec/graph.hpp"
#include "regspec/numerics.hpp"
#include "regspec/parallel.hpp"
#include "regspec/rng.hpp"
#include "regspec/sampler.hpp"
#include "regspec/stats.hpp"
#include "regspec/switchings.hpp"

namespace regspec {

struct SteinOptions {
    int n = 0;
    int d = 3;
    int r = 4;
    int samples = 500;              // graph samples
    std::uint64_t seed = 0;
    int alpha_samples = 64;         // random k-cycles per length for the backward term
    long long count_samples = 2000; // Monte Carlo draws per switching count
    int threads = 0;
};

// Per-graph ingredients of the certificate, indexed by cycle length k:
//   b_hat_k = (mean over random alpha of B_alpha) / (2k d^k),
//             an unbiased estimate of sum_alpha B_alpha / ([n]_k d^k);
//   f_hat_k = sum over census cycles alpha of F_alpha / ([n]_k d^k);
//   c_k     = short-cycle count.
struct SteinSampleRecord {
    std::vector<double> b_hat;
    std::vector<double> f_hat;
    std::vector<long long> c;
};

struct SteinTermSummary {
    int k = 0;
    double lambda = 0.0;
    double xi = 0.0;      // min(1, 1.4 lambda^{-1/2})
    double term_b = 0.0;  // E |lambda_k - b_hat_k|
    double term_f = 0.0;  // E |c_k - f_hat_k|
    double se_b = 0.0;
    double se_f = 0.0;
};

struct SteinCertificate {
    int d = 0;
    int r = 0;
    int samples = 0;
    std::vector<SteinTermSummary> terms;  // k = 3..r
    double bound = 0.0;  // sum_k xi_k (term_b + term_f)
    double se = 0.0;     // standard error of the per-sample certificate
};

// Aggregates per-sample records into the empirical total-variation bound
// sum_k xi_k (E|lambda_k - b_hat_k| + E|c_k - f_hat_k|).
inline SteinCertificate assemble_certificate(const std::vector<SteinSampleRecord>& records,
                                             int d, int r) {
    if (records.empty()) throw std::invalid_argument("assemble_certificate: no records");
    const PoissonSpec spec = PoissonSpec::make(d, r);
    SteinCertificate cert;
    cert.d = d;
    cert.r = r;
    cert.samples = static_cast<int>(records.size());
    std::vector<double> per_sample(records.size(), 0.0);
    for (int k = 3; k <= r; ++k) {
        SteinTermSummary t;
        t.k = k;
        t.lambda = spec.lambdas[static_cast<std::size_t>(k)];
        t.xi = std::min(1.0, 1.4 / std::sqrt(t.lambda));
        std::vector<double> devb(records.size()), devf(records.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            devb[i] = std::abs(t.lambda - records[i].b_hat[static_cast<std::size_t>(k)]);
            devf[i] = std::abs(static_cast<double>(records[i].c[static_cast<std::size_t>(k)]) -
                               records[i].f_hat[static_cast<std::size_t>(k)]);
            per_sample[i] += t.xi * (devb[i] + devf[i]);
        }
        t.term_b = mean(devb);
        t.term_f = mean(devf);
        t.se_b = records.size() > 1 ? standard_error(devb) : 0.0;
        t.se_f = records.size() > 1 ? standard_error(devf) : 0.0;
        cert.terms.push_back(t);
        cert.bound += t.xi * (t.term_b + t.term_f);
    }
    cert.se = records.size() > 1 ? standard_error(per_sample) : 0.0;
    return cert;
}

// Records from uniform graph samples.  Forward counts run over the actual
// census cycles; backward counts average over uniformly random candidate
// k-cycles (their law is label-exchangeable, so a small sample per length
// suffices).  Exact enumeration is used whenever the budget guards allow,
// Monte Carlo with Horvitz-Thompson weights otherwise.
inline std::vector<SteinSampleRecord> stein_sample_records(const SteinOptions& opt) {
    if (opt.samples <= 0) throw std::invalid_argument("stein_sample_records: need samples > 0");
    if (opt.alpha_samples <= 0)
        throw std::invalid_argument("stein_sample_records: need alpha_samples > 0");
    const int n = opt.n;
    const int d = opt.d;
    const int r = opt.r;
    if (r < 3 || r > n) throw std::invalid_argument("stein_sample_records: need 3 <= r <= n");
    const bool forward_exact = n * d <= 120;
    const bool backward_exact = std::pow(static_cast<double>(d) * (d - 1), r) <= 1e6;
    std::vector<SteinSampleRecord> records(static_cast<std::size_t>(opt.samples));
    parallel_for(static_cast<std::size_t>(opt.samples), opt.threads, [&](std::size_t i) {
        Rng rng = Rng::stream(opt.seed, i);
        const RegularGraph g = sample_pairing_rejection(n, d, rng).graph;
        const CycleCensus cen = census(g, r);
        SteinSampleRecord rec;
        rec.b_hat.assign(static_cast<std::size_t>(r) + 1, 0.0);
        rec.f_hat.assign(static_cast<std::size_t>(r) + 1, 0.0);
        rec.c.assign(static_cast<std::size_t>(r) + 1, 0);
        for (const Cycle& cyc : cen.cycles) ++rec.c[static_cast<std::size_t>(cyc.length())];

        for (const Cycle& alpha : cen.cycles) {
            const int k = alpha.length();
            CountOptions co;
            co.mode = (forward_exact && k <= 4) ? CountOptions::Mode::exact
                                                : CountOptions::Mode::monte_carlo;
            co.samples = opt.count_samples;
            co.seed = rng.next();
            const CountResult f = count_forward(g, alpha, r, co);
            rec.f_hat[static_cast<std::size_t>(k)] +=
                f.value / (falling_factorial_real(n, k) * std::pow(static_cast<double>(d), k));
        }
        for (int k = 3; k <= r; ++k) {
            double acc = 0.0;
            for (int a = 0; a < opt.alpha_samples; ++a) {
                const Cycle alpha = Cycle::from_vertices(rng.distinct(k, n));
                CountOptions co;
                co.mode = backward_exact ? CountOptions::Mode::exact
                                         : CountOptions::Mode::monte_carlo;
                co.samples = opt.count_samples;
                co.seed = rng.next();
                acc += count_backward(g, alpha, r, co).value;
            }
            rec.b_hat[static_cast<std::size_t>(k)] =
                acc / opt.alpha_samples / (2.0 * k * std::pow(static_cast<double>(d), k));
        }
        records[i] = std::move(rec);
    });
    return records;
}

inline SteinCertificate stein_certificate(const SteinOptions& opt) {
    return assemble_certificate(stein_sample_records(opt), opt.d, opt.r);
}

// Synthetic fixture: counts drawn from the exact product-Poisson law with
// the stationary immigration-death rates substituted for the estimates
// (births b_hat = lambda, deaths f_hat = c).  The assembled bound is zero,
// which is exactly the Stein identity for the stationary chain.
inline std::vector<SteinSampleRecord> synthetic_poisson_records(int d, int r, int samples,
                                                                std::uint64_t seed) {
    if (samples <= 0) throw std::invalid_argument("synthetic_poisson_records: need samples > 0");
    const PoissonSpec spec = PoissonSpec::make(d, r);
    std::vector<SteinSampleRecord> records(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        SteinSampleRecord rec;
        rec.b_hat.assign(static_cast<std::size_t>(r) + 1, 0.0);
        rec.f_hat.assign(static_cast<std::size_t>(r) + 1, 0.0);
        rec.c.assign(static_cast<std::size_t>(r) + 1, 0);
        for (int k = 3; k <= r; ++k) {
            const double lam = spec.lambdas[static_cast<std::size_t>(k)];
            rec.c[static_cast<std::size_t>(k)] = rng.poisson(lam);
            rec.b_hat[static_cast<std::size_t>(k)] = lam;
            rec.f_hat[static_cast<std::size_t>(k)] =
                static_cast<double>(rec.c[static_cast<std::size_t>(k)]);
        }
        records[static_cast<std::size_t>(i)] = std::move(rec);
    }
    return records;
}

}  // namespace regspec
