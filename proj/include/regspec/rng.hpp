#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace regspec {

// SplitMix64 generator (Steele, Lea & Flood, "Fast splittable pseudorandom
// number generators", OOPSLA 2014).  Chosen over std::mt19937_64 because the
// toolkit's reproducibility contract requires cheap, collision-free
// derivation of independent streams from (seed, sample index): every Monte
// Carlo routine seeds one stream per logical sample, so results depend only
// on sample indices and never on thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Finalizer of SplitMix64; also used to hash (seed, id) pairs into
    // stream states.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Derives the generator for logical stream `id` of a master seed.
    static Rng stream(std::uint64_t seed, std::uint64_t id) {
        return Rng(mix(seed + 0x9e3779b97f4a7c15ULL * (id + 1)));
    }

    // Two-level derivation for nested loops (sample index, then purpose).
    static Rng stream(std::uint64_t seed, std::uint64_t id, std::uint64_t sub) {
        return Rng(mix(mix(seed + 0x9e3779b97f4a7c15ULL * (id + 1)) +
                       0x9e3779b97f4a7c15ULL * (sub + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // Unbiased uniform draw from {0, ..., n-1} by masked rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n | 1);
        for (;;) {
            const std::uint64_t v = next() & mask;
            if (v < n) return v;
        }
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) {
            std::swap(xs[i - 1], xs[static_cast<std::size_t>(below(i))]);
        }
    }

    // k distinct values from {0, ..., n-1}, in random order (partial
    // Fisher-Yates over a sparse index map, O(k) expected).
    std::vector<int> distinct(int k, int n) {
        if (k > n) throw std::invalid_argument("Rng::distinct: k exceeds n");
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(k));
        // Sparse displacement table: entries (position, current value).
        std::vector<std::pair<int, int>> moved;
        auto value_at = [&](int pos) {
            for (const auto& [p, v] : moved)
                if (p == pos) return v;
            return pos;
        };
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            const int vj = value_at(j);
            const int vi = value_at(i);
            out.push_back(vj);
            bool found = false;
            for (auto& [p, v] : moved) {
                if (p == j) {
                    v = vi;
                    found = true;
                    break;
                }
            }
            if (!found) moved.emplace_back(j, vi);
        }
        return out;
    }

    // Poisson draw.  Inversion by sequential search for small means;
    // Hormann's PTRS transformed-rejection algorithm ("The transformed
    // rejection method for generating Poisson random variables", 1993) for
    // large means.  Both consume only uniform() calls, so draws are
    // reproducible for a fixed stream.
    long long poisson(double lambda) {
        if (!(lambda >= 0.0)) throw std::invalid_argument("Rng::poisson: lambda must be >= 0");
        if (lambda == 0.0) return 0;
        if (lambda < 10.0) {
            const double l = std::exp(-lambda);
            long long k = 0;
            double p = 1.0;
            do {
                ++k;
                p *= uniform();
            } while (p > l);
            return k - 1;
        }
        const double b = 0.931 + 2.53 * std::sqrt(lambda);
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double v_r = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            const double u = uniform() - 0.5;
            const double v = uniform_pos();
            const double us = 0.5 - std::abs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
            if (us >= 0.07 && v <= v_r) return static_cast<long long>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            const double k = kf;
            if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
                k * std::log(lambda) - lambda - std::lgamma(k + 1.0)) {
                return static_cast<long long>(kf);
            }
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace regspec
