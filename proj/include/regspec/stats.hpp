#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "regspec/numerics.hpp"
#include "regspec/parallel.hpp"
#include "regspec/rng.hpp"

namespace regspec {

// A finitely supported law on integer vectors.  std::map keeps the support
// ordered, so iteration (and everything derived from it) is deterministic.
class EmpiricalDistribution {
  public:
    using Value = std::vector<long long>;

    static EmpiricalDistribution from_samples(const std::vector<Value>& samples) {
        if (samples.empty())
            throw std::invalid_argument("EmpiricalDistribution: empty sample set");
        EmpiricalDistribution e;
        e.dim_ = samples.front().size();
        const double w = 1.0 / static_cast<double>(samples.size());
        for (const Value& v : samples) {
            if (v.size() != e.dim_)
                throw std::invalid_argument("EmpiricalDistribution: mixed dimensions");
            e.weights_[v] += w;
        }
        return e;
    }

    // Product of independent Poisson laws, truncated so that the missing
    // mass is at most `tail`.  The result is left unnormalized: its total
    // weight is 1 - (missing mass) >= 1 - tail.
    static EmpiricalDistribution from_poisson_product(const std::vector<double>& lambdas,
                                                      double tail = 1e-12) {
        EmpiricalDistribution e;
        e.dim_ = lambdas.size();
        const double per_coord = tail / std::max<std::size_t>(lambdas.size(), 1);
        std::vector<std::vector<double>> pmfs;
        for (double lam : lambdas) {
            if (lam < 0)
                throw std::invalid_argument("from_poisson_product: negative mean");
            std::vector<double> pmf;
            double cum = 0.0;
            for (long long k = 0;; ++k) {
                const double p = poisson_pmf(k, lam);
                pmf.push_back(p);
                cum += p;
                if (1.0 - cum <= per_coord && static_cast<double>(k) >= lam) break;
                if (k > 100000)
                    throw std::runtime_error("from_poisson_product: truncation runaway");
            }
            pmfs.push_back(std::move(pmf));
        }
        Value v(e.dim_, 0);
        auto rec = [&](auto&& self, std::size_t i, double w) -> void {
            if (i == pmfs.size()) {
                e.weights_[v] = w;
                return;
            }
            for (std::size_t k = 0; k < pmfs[i].size(); ++k) {
                v[i] = static_cast<long long>(k);
                self(self, i + 1, w * pmfs[i][k]);
            }
        };
        rec(rec, 0, 1.0);
        return e;
    }

    std::size_t dimension() const { return dim_; }
    const std::map<Value, double>& weights() const { return weights_; }
    double total() const {
        double t = 0.0;
        for (const auto& [v, w] : weights_) t += w;
        return t;
    }

  private:
    std::map<Value, double> weights_;
    std::size_t dim_ = 0;
};

// Total variation distance (1/2) sum |p - q| over the union support.
inline double tv_exact(const EmpiricalDistribution& p, const EmpiricalDistribution& q) {
    if (p.dimension() != q.dimension())
        throw std::invalid_argument("tv_exact: dimension mismatch");
    double s = 0.0;
    auto it = p.weights().begin();
    auto jt = q.weights().begin();
    while (it != p.weights().end() || jt != q.weights().end()) {
        if (jt == q.weights().end() || (it != p.weights().end() && it->first < jt->first)) {
            s += it->second;
            ++it;
        } else if (it == p.weights().end() || jt->first < it->first) {
            s += jt->second;
            ++jt;
        } else {
            s += std::abs(it->second - jt->second);
            ++it;
            ++jt;
        }
    }
    return 0.5 * s;
}

struct TvEstimate {
    double estimate = 0.0;
    double lo = 0.0;  // bootstrap percentile interval
    double hi = 0.0;
    int bootstrap = 0;
};

// Plug-in TV between two sample sets of integer vectors, with a percentile
// bootstrap interval.  The plug-in estimator is biased upward for small
// samples; callers treat it as a diagnostic, not a sharp value.
inline TvEstimate tv_empirical(const std::vector<EmpiricalDistribution::Value>& a,
                               const std::vector<EmpiricalDistribution::Value>& b,
                               int bootstrap = 200, std::uint64_t seed = 0,
                               int threads = 0) {
    if (a.empty() || b.empty()) throw std::invalid_argument("tv_empirical: empty sample set");
    TvEstimate out;
    out.estimate = tv_exact(EmpiricalDistribution::from_samples(a),
                            EmpiricalDistribution::from_samples(b));
    out.bootstrap = bootstrap;
    if (bootstrap <= 0) {
        out.lo = out.hi = out.estimate;
        return out;
    }
    std::vector<double> reps(static_cast<std::size_t>(bootstrap), 0.0);
    parallel_for(static_cast<std::size_t>(bootstrap), threads, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        std::vector<EmpiricalDistribution::Value> ra(a.size());
        for (auto& v : ra) v = a[static_cast<std::size_t>(rng.below(a.size()))];
        std::vector<EmpiricalDistribution::Value> rb(b.size());
        for (auto& v : rb) v = b[static_cast<std::size_t>(rng.below(b.size()))];
        reps[i] = tv_exact(EmpiricalDistribution::from_samples(ra),
                           EmpiricalDistribution::from_samples(rb));
    });
    out.lo = percentile(reps, 2.5);
    out.hi = percentile(reps, 97.5);
    return out;
}

// Plug-in TV of one sample set against an exact reference law.
inline double tv_against(const std::vector<EmpiricalDistribution::Value>& a,
                         const EmpiricalDistribution& ref) {
    return tv_exact(EmpiricalDistribution::from_samples(a), ref);
}

// Limiting Poisson means lambda_k = (d-1)^k / 2k for k = 3..r (zero below 3).
struct PoissonSpec {
    int d = 0;
    int r = 0;
    std::vector<double> lambdas;  // index k = 0..r

    static PoissonSpec make(int d, int r) {
        if (d < 3 || r < 3) throw std::invalid_argument("PoissonSpec: need d, r >= 3");
        PoissonSpec s;
        s.d = d;
        s.r = r;
        s.lambdas.assign(static_cast<std::size_t>(r) + 1, 0.0);
        for (int k = 3; k <= r; ++k)
            s.lambdas[static_cast<std::size_t>(k)] =
                std::pow(static_cast<double>(d - 1), k) / (2.0 * k);
        return s;
    }
};

struct GofResult {
    double chi2 = 0.0;
    int dof = 0;
    double p_value = 1.0;
    int cells = 0;
    bool degenerate = false;  // fewer than two cells after pooling
};

// Pearson chi-square of observed nonnegative integer counts against
// Poisson(lambda), pooling cells with expected count < 5 into the ends.
inline GofResult chi_square_gof_poisson(const std::vector<long long>& observed,
                                        double lambda) {
    if (observed.empty()) throw std::invalid_argument("chi_square_gof_poisson: no samples");
    const double m = static_cast<double>(observed.size());
    long long max_obs = 0;
    for (long long x : observed) {
        if (x < 0) throw std::invalid_argument("chi_square_gof_poisson: negative count");
        max_obs = std::max(max_obs, x);
    }
    // Candidate cells 0..hi as singletons, then a closing tail cell.
    long long hi = max_obs;
    while (m * (1.0 - [&] {
               double c = 0.0;
               for (long long x = 0; x <= hi; ++x) c += poisson_pmf(x, lambda);
               return c;
           }()) >= 5.0 &&
           hi < max_obs + 64)
        ++hi;
    std::vector<double> expected;
    std::vector<double> observed_cells;
    double cum = 0.0;
    for (long long x = 0; x <= hi; ++x) {
        const double e = m * poisson_pmf(x, lambda);
        cum += e;
        long long obs = 0;
        for (long long y : observed) obs += y == x ? 1 : 0;
        expected.push_back(e);
        observed_cells.push_back(static_cast<double>(obs));
    }
    // Tail cell x > hi.
    long long tail_obs = 0;
    for (long long y : observed) tail_obs += y > hi ? 1 : 0;
    expected.push_back(std::max(m - cum, 0.0));
    observed_cells.push_back(static_cast<double>(tail_obs));
    // Pool low-expectation cells from the right, then from the left.
    auto pool = [&](bool from_right) {
        while (expected.size() > 1) {
            const std::size_t i = from_right ? expected.size() - 1 : 0;
            const std::size_t j = from_right ? expected.size() - 2 : 1;
            if (expected[i] >= 5.0) break;
            expected[j] += expected[i];
            observed_cells[j] += observed_cells[i];
            expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(i));
            observed_cells.erase(observed_cells.begin() + static_cast<std::ptrdiff_t>(i));
        }
    };
    pool(true);
    pool(false);
    GofResult out;
    out.cells = static_cast<int>(expected.size());
    if (out.cells < 2) {
        out.degenerate = true;
        out.p_value = 1.0;
        return out;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const double diff = observed_cells[i] - expected[i];
        out.chi2 += diff * diff / expected[i];
    }
    out.dof = out.cells - 1;
    out.p_value = chi_square_sf(out.chi2, out.dof);
    return out;
}

struct KsResult {
    double d_statistic = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

// One-sample two-sided Kolmogorov-Smirnov test against a normal null.
// P-value via the asymptotic Kolmogorov law with Stephens' finite-sample
// correction (sqrt(n) + 0.12 + 0.11/sqrt(n)) (Stephens 1970).
inline KsResult ks_test_normal(std::vector<double> xs, double mean_, double variance_) {
    if (xs.empty()) throw std::invalid_argument("ks_test_normal: empty sample");
    if (variance_ <= 0.0) throw std::invalid_argument("ks_test_normal: variance must be positive");
    std::sort(xs.begin(), xs.end());
    const double sd = std::sqrt(variance_);
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = normal_cdf((xs[i] - mean_) / sd);
        d = std::max(d, std::max(static_cast<double>(i + 1) / n - f,
                                 f - static_cast<double>(i) / n));
    }
    KsResult out;
    out.d_statistic = d;
    out.n = xs.size();
    const double root = std::sqrt(n);
    out.p_value = kolmogorov_sf(d * (root + 0.12 + 0.11 / root));
    return out;
}

struct BoundValue {
    double value = 0.0;
    bool vacuous = false;  // exceeds 1, hence uninformative for a TV distance
};

namespace detail {
inline BoundValue make_bound(double v) {
    BoundValue b;
    b.value = v;
    b.vacuous = v > 1.0;
    return b;
}
}  // namespace detail

// C sqrt(r) (d-1)^{3r/2 - 1} / n: TV between the short-cycle count vector
// and the independent-Poisson vector.
inline BoundValue bound_bestpoiapprox(int n, int d, int r, double c = 1.0) {
    if (d < 3 || r < 3) throw std::invalid_argument("bound_bestpoiapprox: need d, r >= 3");
    return detail::make_bound(c * std::sqrt(static_cast<double>(r)) *
                              std::pow(static_cast<double>(d - 1), 1.5 * r - 1.0) / n);
}

// C (d-1)^{2r - 1} / n: the cruder per-process bound.
inline BoundValue bound_cor6(int n, int d, int r, double c = 1.0) {
    if (d < 3 || r < 3) throw std::invalid_argument("bound_cor6: need d, r >= 3");
    return detail::make_bound(c * std::pow(static_cast<double>(d - 1), 2.0 * r - 1.0) / n);
}

// C k (d-1)^{k + r - 1} / n^{k+1}: the per-cycle-length summand.
inline BoundValue bound_thm5_summand(int n, int d, int k, int r, double c = 1.0) {
    if (d < 3 || r < 3 || k < 3)
        throw std::invalid_argument("bound_thm5_summand: need d, r, k >= 3");
    return detail::make_bound(c * k * std::pow(static_cast<double>(d - 1), k + r - 1.0) /
                              std::pow(static_cast<double>(n), k + 1.0));
}

// C sqrt(r) (d-1)^{3r/2} / n: TV for the CNBW count vector.
inline BoundValue bound_thm9_cnbw(int n, int d, int r, double c = 1.0) {
    if (d < 3 || r < 3) throw std::invalid_argument("bound_thm9_cnbw: need d, r >= 3");
    return detail::make_bound(c * std::sqrt(static_cast<double>(r)) *
                              std::pow(static_cast<double>(d - 1), 1.5 * r) / n);
}

// Freedman-Diaconis binning of pooled real samples; returns bin index
// vectors usable with EmpiricalDistribution (for real-valued functionals).
inline std::pair<std::vector<EmpiricalDistribution::Value>,
                 std::vector<EmpiricalDistribution::Value>>
fd_binned(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("fd_binned: empty sample");
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const double q1 = percentile(pooled, 25.0);
    const double q3 = percentile(pooled, 75.0);
    const double iqr = q3 - q1;
    const auto [mn, mx] = std::minmax_element(pooled.begin(), pooled.end());
    double width = 2.0 * iqr / std::cbrt(static_cast<double>(pooled.size()));
    if (width <= 0.0) width = std::max((*mx - *mn), 1.0) / 64.0;
    auto to_bins = [&](const std::vector<double>& xs) {
        std::vector<EmpiricalDistribution::Value> out;
        out.reserve(xs.size());
        for (double x : xs)
            out.push_back({static_cast<long long>(std::floor((x - *mn) / width))});
        return out;
    };
    return {to_bins(a), to_bins(b)};
}

}  // namespace regspec
