#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "regspec/errors.hpp"
#include "regspec/graph.hpp"
#include "regspec/nbwalks.hpp"
#include "regspec/parallel.hpp"
#include "regspec/rng.hpp"

namespace regspec {

struct ScaledSpectrum {
    int n = 0;
    int d = 0;
    std::vector<double> values;  // eigenvalues of A/sqrt(d-1), descending
    double max_residual = 0.0;   // max_i ||A v_i - mu_i v_i||_2 (unscaled pairs)
};

// Full symmetric eigendecomposition of the scaled adjacency matrix.  Dense
// solve only; guarded to n <= 4000.
inline ScaledSpectrum scaled_spectrum(const RegularGraph& g) {
    if (g.n() > 4000) throw BudgetError("scaled_spectrum: dense eigensolve limited to n <= 4000");
    const int n = g.n();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("scaled_spectrum: eigensolver did not converge");
    ScaledSpectrum out;
    out.n = n;
    out.d = g.degree();
    const double scale = std::sqrt(static_cast<double>(g.degree() - 1));
    out.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.values[static_cast<std::size_t>(i)] = es.eigenvalues()(n - 1 - i) / scale;
    const Eigen::MatrixXd resid =
        a * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal();
    out.max_residual = resid.colwise().norm().maxCoeff();
    return out;
}

// Phi_k(x) = 2 T_k(x/2) for k >= 1, Phi_0 = 1; Chebyshev recurrence.
inline double phi_poly(int k, double x) {
    if (k < 0) throw std::invalid_argument("phi_poly: need k >= 0");
    if (k == 0) return 1.0;
    double prev = 2.0;  // 2 T_0
    double cur = x;     // 2 T_1(x/2)
    for (int i = 1; i < k; ++i) {
        const double nxt = x * cur - prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// Gamma_k: equal to Phi_k for odd k, shifted by (d-2)/(d-1)^{k/2} for even
// k >= 2, and Gamma_0 = 1.
inline double gamma_poly(int k, int d, double x) {
    if (k < 0) throw std::invalid_argument("gamma_poly: need k >= 0");
    if (d < 2) throw std::invalid_argument("gamma_poly: need d >= 2");
    if (k == 0) return 1.0;
    double value = phi_poly(k, x);
    if (k % 2 == 0)
        value += static_cast<double>(d - 2) / std::pow(static_cast<double>(d - 1), k / 2);
    return value;
}

enum class ChebBasis { phi, gamma };

struct ChebExpansion {
    ChebBasis basis = ChebBasis::phi;
    int d = 0;  // only meaningful for the gamma basis
    std::vector<double> a;
    bool converged = true;  // quadrature node doubling reached stability
    int m() const { return static_cast<int>(a.size()) - 1; }

    double basis_value(int k, double x) const {
        return basis == ChebBasis::gamma ? gamma_poly(k, d, x) : phi_poly(k, x);
    }
    double evaluate(double x) const {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * basis_value(static_cast<int>(k), x);
        return s;
    }
};

inline ChebExpansion to_phi_basis(const ChebExpansion& e) {
    if (e.basis == ChebBasis::phi) return e;
    ChebExpansion out = e;
    out.basis = ChebBasis::phi;
    double shift = 0.0;
    for (int k = 2; k <= e.m(); k += 2)
        shift += e.a[static_cast<std::size_t>(k)] * (e.d - 2) /
                 std::pow(static_cast<double>(e.d - 1), k / 2);
    out.a[0] = e.a[0] + shift;
    return out;
}

inline ChebExpansion to_gamma_basis(const ChebExpansion& e, int d) {
    if (e.basis == ChebBasis::gamma) {
        if (e.d != d) throw std::invalid_argument("to_gamma_basis: degree mismatch");
        return e;
    }
    ChebExpansion out = e;
    out.basis = ChebBasis::gamma;
    out.d = d;
    double shift = 0.0;
    for (int k = 2; k <= e.m(); k += 2)
        shift += e.a[static_cast<std::size_t>(k)] * (d - 2) /
                 std::pow(static_cast<double>(d - 1), k / 2);
    out.a[0] = e.a[0] - shift;
    return out;
}

// Chebyshev coefficients of f on [-2,2] in the Phi basis (converted to Gamma
// on request): Gauss-Chebyshev quadrature at N nodes x_j = 2 cos(pi(j+1/2)/N),
// N doubled from 4(m+1) until every coefficient is stable to 1e-12.
template <typename F>
ChebExpansion cheb_expand(F&& f, ChebBasis basis, int d, int m) {
    if (m < 0) throw std::invalid_argument("cheb_expand: need m >= 0");
    if (basis == ChebBasis::gamma && d < 2)
        throw std::invalid_argument("cheb_expand: gamma basis needs d >= 2");
    std::vector<double> prev;
    ChebExpansion out;
    out.basis = ChebBasis::phi;
    out.converged = false;
    for (int nodes = 4 * (m + 1); nodes <= (1 << 20); nodes *= 2) {
        std::vector<double> fx(static_cast<std::size_t>(nodes));
        for (int j = 0; j < nodes; ++j) {
            const double theta = std::numbers::pi * (j + 0.5) / nodes;
            fx[static_cast<std::size_t>(j)] = f(2.0 * std::cos(theta));
            if (!std::isfinite(fx[static_cast<std::size_t>(j)]))
                throw std::domain_error("cheb_expand: f not finite at a quadrature node");
        }
        std::vector<double> a(static_cast<std::size_t>(m) + 1, 0.0);
        for (int k = 0; k <= m; ++k) {
            double s = 0.0;
            for (int j = 0; j < nodes; ++j)
                s += fx[static_cast<std::size_t>(j)] *
                     std::cos(std::numbers::pi * k * (j + 0.5) / nodes);
            // a^Phi_k = c_k / 2 with c_k = (2/N) sum f cos; including k = 0,
            // since Phi_0 = 1 = T_0 absorbs the usual half-weight.
            a[static_cast<std::size_t>(k)] = s / nodes;
        }
        const bool stable = !prev.empty() && [&] {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (std::abs(a[i] - prev[i]) > 1e-12) return false;
            return true;
        }();
        prev = a;
        if (stable) {
            out.converged = true;
            break;
        }
    }
    out.a = prev;
    if (basis == ChebBasis::gamma) {
        ChebExpansion g = to_gamma_basis(out, d);
        g.converged = out.converged;
        return g;
    }
    return out;
}

// Centered linear eigenvalue functional sum_i f_m(lambda_i) - n a_0.
inline double eigen_functional(const ScaledSpectrum& spec, const ChebExpansion& e) {
    if (e.basis == ChebBasis::gamma && e.d != spec.d)
        throw std::invalid_argument("eigen_functional: expansion degree mismatch");
    double s = 0.0;
    for (double lam : spec.values)
        for (int k = 1; k <= e.m(); ++k)
            s += e.a[static_cast<std::size_t>(k)] * e.basis_value(k, lam);
    return s;
}

// Maximum deviation over k <= kmax of the trace identity
// sum_i Gamma_k(lambda_i) = (d-1)^{-k/2} CNBW_k.
inline double gamma_trace_identity_check(const RegularGraph& g, int kmax, int threads = 0) {
    const ScaledSpectrum spec = scaled_spectrum(g);
    const std::vector<long long> cnbw = cnbw_counts(g, kmax, threads);
    double worst = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        double lhs = 0.0;
        for (double lam : spec.values) lhs += gamma_poly(k, g.degree(), lam);
        const double rhs = static_cast<double>(cnbw[static_cast<std::size_t>(k)]) /
                           std::pow(static_cast<double>(g.degree() - 1), k / 2.0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

// Truncation cutoff r_n = floor(beta log n / log(d-1)).
inline int rn_cutoff(int n, int d, double beta = 0.3) {
    if (n < 2 || d < 3) throw std::invalid_argument("rn_cutoff: need n >= 2, d >= 3");
    return static_cast<int>(std::floor(beta * std::log(static_cast<double>(n)) /
                                       std::log(static_cast<double>(d - 1))));
}

// Recentering constant for the growing-d regime (Phi-basis expansion):
// m_f = n a_0 + sum_{k=1}^{r_n} a_k (d-1)^{-k/2} (mu_k(d) - (d-2) n 1{k even}).
inline double centering_m_f(int n, int d, const ChebExpansion& e, int r_n) {
    if (e.basis != ChebBasis::phi)
        throw std::invalid_argument("centering_m_f: expansion must be in the Phi basis");
    double s = static_cast<double>(n) * e.a[0];
    for (int k = 1; k <= std::min(r_n, e.m()); ++k) {
        const double term = mu_k(d, k) - (k % 2 == 0 ? static_cast<double>(d - 2) * n : 0.0);
        s += e.a[static_cast<std::size_t>(k)] * term /
             std::pow(static_cast<double>(d - 1), k / 2.0);
    }
    return s;
}

// Limiting variance in the growing-d regime: sigma_f^2 = sum_{k>=3} 2k a_k^2.
inline double limit_variance_growing_d(const ChebExpansion& e) {
    if (e.basis != ChebBasis::phi)
        throw std::invalid_argument("limit_variance_growing_d: expansion must be in the Phi basis");
    double s = 0.0;
    for (int k = 3; k <= e.m(); ++k)
        s += 2.0 * k * e.a[static_cast<std::size_t>(k)] * e.a[static_cast<std::size_t>(k)];
    return s;
}

struct LimitSample {
    std::vector<double> draws;
    double tail_bound = 0.0;  // sum_{kmax < k <= m} |a_k| (d-1)^{-k/2} mu_k(d)
    int kmax = 0;
};

// i.i.d. draws from the fixed-d limiting law of the centered functional:
// Y = sum_{k<=kmax} a_k (d-1)^{-k/2} CNBW_k^inf with CNBW_k^inf assembled
// from independent Poisson((d-1)^j/2j) cycle counts via the divisor sum.
inline LimitSample sample_limit_fixed_d(const ChebExpansion& e, int d, int kmax, int count,
                                        std::uint64_t seed, int threads = 0) {
    if (e.basis != ChebBasis::gamma)
        throw std::invalid_argument("sample_limit_fixed_d: expansion must be in the Gamma basis");
    if (e.d != d) throw std::invalid_argument("sample_limit_fixed_d: degree mismatch");
    if (kmax < 3) throw std::invalid_argument("sample_limit_fixed_d: need kmax >= 3");
    if (count <= 0) throw std::invalid_argument("sample_limit_fixed_d: need count > 0");
    const int top = std::min(kmax, e.m());
    std::vector<double> lambda(static_cast<std::size_t>(top) + 1, 0.0);
    for (int j = 3; j <= top; ++j)
        lambda[static_cast<std::size_t>(j)] =
            std::pow(static_cast<double>(d - 1), j) / (2.0 * j);
    LimitSample out;
    out.kmax = top;
    out.draws.assign(static_cast<std::size_t>(count), 0.0);
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        std::vector<long long> c(static_cast<std::size_t>(top) + 1, 0);
        for (int j = 3; j <= top; ++j)
            c[static_cast<std::size_t>(j)] = rng.poisson(lambda[static_cast<std::size_t>(j)]);
        double y = 0.0;
        for (int k = 3; k <= top; ++k) {
            long long cnbw = 0;
            for (int j = 3; j <= k; ++j)
                if (k % j == 0) cnbw += 2LL * j * c[static_cast<std::size_t>(j)];
            y += e.a[static_cast<std::size_t>(k)] * static_cast<double>(cnbw) /
                 std::pow(static_cast<double>(d - 1), k / 2.0);
        }
        out.draws[i] = y;
    });
    for (int k = top + 1; k <= e.m(); ++k)
        out.tail_bound += std::abs(e.a[static_cast<std::size_t>(k)]) * mu_k(d, k) /
                          std::pow(static_cast<double>(d - 1), k / 2.0);
    return out;
}

}  // namespace regspec
