#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "regspec/census.hpp"
#include "regspec/cycle.hpp"
#include "regspec/graph.hpp"
#include "regspec/rng.hpp"
#include "regspec/switchings.hpp"

namespace regspec {

// Random walk on the space of d-regular graphs whose moves are the valid
// forward and backward switchings at cycle lengths 3..r.  One step proposes,
// with probability
//     q_{f,k} = c [n]_k / (2k)   and   q_{b,k} = c (d-1)^k / (2k),
// a forward respectively backward candidate of length k (c normalizes the
// sum of all q to one, so no step probability is left over).  A forward
// attempt draws an ordered vertex k-tuple uniformly and aborts unless it
// traces a cycle of the current graph; the surviving draw is completed with
// a uniform w-tuple and uniform neighbor choices u_{i+1} in N(w_i).  A
// backward attempt draws the v-tuple uniformly and ordered distinct neighbor
// pairs (u_i, w_i) in N(v_i).  Candidates that fail the switching
// constraints, or whose application would destroy or create any other cycle
// of length <= r, are rejected in place.  Under this schedule every labeled
// candidate of either direction carries probability c / (2k [n]_k d^k), and
// valid forward moves g -> h are in bijection with valid backward moves
// h -> g, so the transition matrix is symmetric and the walk's stationary
// distribution is exactly uniform.
//
// Since most steps are self-loops (a forward attempt survives only when its
// v-tuple hits one of the 2k C_k cycle representations), the implementation
// never simulates them one at a time: the number of consecutive misses is a
// geometric variable with success probability p = c (sum_k C_k + sum_k
// lambda_k), which only changes when a move is accepted, so it is sampled in
// closed form and the step counter jumps ahead.  The realized walk has
// exactly the law of the single-step walk.
class SwitchingChain {
  public:
    SwitchingChain(const RegularGraph& start, int r, Rng rng)
        : g_(start), n_(start.n()), d_(start.degree()), r_(r), rng_(rng) {
        if (r < 3 || r > start.n())
            throw std::invalid_argument("SwitchingChain: need 3 <= r <= n");
        if (d_ < 2) throw std::invalid_argument("SwitchingChain: need d >= 2");
        buckets_.assign(static_cast<std::size_t>(r_) + 1, {});
        CycleCensus c = census(start, r_);
        for (const Cycle& cyc : c.cycles) buckets_[static_cast<std::size_t>(cyc.length())].push_back(cyc);
        lambda_.assign(static_cast<std::size_t>(r_) + 1, 0.0);
        double denom = 0.0;
        lambda_total_ = 0.0;
        for (int k = 3; k <= r_; ++k) {
            lambda_[static_cast<std::size_t>(k)] =
                std::pow(static_cast<double>(d_ - 1), k) / (2.0 * k);
            lambda_total_ += lambda_[static_cast<std::size_t>(k)];
            denom += falling_factorial_real(n_, k) / (2.0 * k) + lambda_[static_cast<std::size_t>(k)];
        }
        c_ = 1.0 / denom;
    }

    int n() const { return n_; }
    int degree() const { return d_; }
    int r() const { return r_; }

    // Number of cycles of length k in the current graph.
    long long cycle_count(int k) const {
        if (k < 3 || k > r_) return 0;
        return static_cast<long long>(buckets_[static_cast<std::size_t>(k)].size());
    }
    long long total_cycles() const {
        long long t = 0;
        for (int k = 3; k <= r_; ++k) t += cycle_count(k);
        return t;
    }

    std::uint64_t steps() const { return steps_; }    // walk steps consumed
    std::uint64_t events() const { return events_; }  // non-skipped proposals
    std::uint64_t accepted() const { return accepted_; }

    // Normalizing constant c of the proposal weights.  1/c is the step-count
    // scale of the walk: non-skipped proposals arrive roughly every
    // 1/(c (sum_k C_k + sum_k lambda_k)) steps, and the relaxation time of
    // each cycle-count coordinate is about 1/c steps.
    double event_normalization() const { return c_; }

    RegularGraph snapshot() const { return g_.freeze(); }
    const Rng& rng() const { return rng_; }

    // Advances the walk by exactly `steps` single-step transitions.  The
    // number of self-loops before the next proposal event is drawn once and
    // banked across calls (the graph cannot change during a self-loop run,
    // so the draw stays valid), which makes advance(a + b) and
    // advance(a); advance(b) the same realized walk.
    void advance(std::uint64_t steps) {
        std::uint64_t remaining = steps;
        while (remaining > 0) {
            if (!event_scheduled_) {
                const double p =
                    c_ * (static_cast<double>(total_cycles()) + lambda_total_);
                skip_to_event_ = 0;
                if (p < 1.0) {
                    const double u = rng_.uniform_pos();
                    const double miss = std::floor(std::log(u) / std::log1p(-p));
                    // Capped far beyond any reachable horizon; the excess is
                    // a set of self-loops no walk ever consumes.
                    const double cap = 4.611686018427387904e18;  // 2^62
                    skip_to_event_ = static_cast<std::uint64_t>(std::min(miss, cap));
                }
                event_scheduled_ = true;
            }
            if (skip_to_event_ >= remaining) {
                skip_to_event_ -= remaining;
                steps_ += remaining;
                return;  // still inside the self-loop run
            }
            remaining -= skip_to_event_ + 1;
            steps_ += skip_to_event_ + 1;
            skip_to_event_ = 0;
            event_scheduled_ = false;
            ++events_;
            do_event();
        }
    }

  private:
    void do_event() {
        // Conditioned on a non-skipped step, direction and length arrive
        // with probabilities proportional to C_k (forward) and lambda_k
        // (backward).
        double x = rng_.uniform() *
                   (static_cast<double>(total_cycles()) + lambda_total_);
        int dir = -1;
        int k = 0;
        for (int kk = 3; kk <= r_ && dir < 0; ++kk) {
            const double ck = static_cast<double>(cycle_count(kk));
            if (x < ck) {
                dir = 0;
                k = kk;
            } else {
                x -= ck;
            }
        }
        for (int kk = 3; kk <= r_ && dir < 0; ++kk) {
            if (x < lambda_[static_cast<std::size_t>(kk)]) {
                dir = 1;
                k = kk;
            } else {
                x -= lambda_[static_cast<std::size_t>(kk)];
            }
        }
        if (dir < 0) {  // floating-point edge of the partition
            dir = 1;
            k = r_;
        }
        if (dir == 0)
            forward_event(k);
        else
            backward_event(k);
    }

    void forward_event(int k) {
        auto& bucket = buckets_[static_cast<std::size_t>(k)];
        const std::size_t idx = static_cast<std::size_t>(rng_.below(bucket.size()));
        const std::vector<int>& cyc = bucket[idx].vertices();
        // Uniform representation of the chosen cycle: rotation + direction.
        const int rot = static_cast<int>(rng_.below(static_cast<std::uint64_t>(k)));
        const bool rev = rng_.below(2) == 1;
        ForwardSwitching s;
        s.v.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const int src = rev ? (rot - i % k + k) % k : (rot + i) % k;
            s.v[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>(src)];
        }
        s.w = rng_.distinct(k, n_);
        s.u.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const auto& nb = g_.neighbors(s.w[static_cast<std::size_t>(i)]);
            s.u[static_cast<std::size_t>((i + 1) % k)] =
                nb[static_cast<std::size_t>(rng_.below(nb.size()))];
        }
        if (detail::act_obstruction(g_, s.v, s.u, s.w, forward_deleted_edges(s),
                                    forward_added_edges(s)))
            return;
        const Cycle alpha = bucket[idx];
        const auto deleted = forward_deleted_edges(s);
        const auto added = forward_added_edges(s);
        const std::set<Cycle> destroyed = cycles_through_edges(g_, deleted, r_);
        if (destroyed.size() != 1 || *destroyed.begin() != alpha) return;
        detail::apply_edges(g_, deleted, added);
        const std::set<Cycle> created = cycles_through_edges(g_, added, r_);
        if (!created.empty()) {
            detail::apply_edges(g_, added, deleted);  // undo
            return;
        }
        bucket[idx] = bucket.back();
        bucket.pop_back();
        ++accepted_;
    }

    void backward_event(int k) {
        BackwardSwitching s;
        s.v = rng_.distinct(k, n_);
        s.u.resize(static_cast<std::size_t>(k));
        s.w.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const auto& nb = g_.neighbors(s.v[static_cast<std::size_t>(i)]);
            const std::uint64_t a = rng_.below(nb.size());
            std::uint64_t b = rng_.below(nb.size() - 1);
            if (b >= a) ++b;  // ordered distinct pair of neighbors
            s.u[static_cast<std::size_t>(i)] = nb[static_cast<std::size_t>(a)];
            s.w[static_cast<std::size_t>(i)] = nb[static_cast<std::size_t>(b)];
        }
        if (detail::act_obstruction(g_, s.v, s.u, s.w, backward_deleted_edges(s),
                                    backward_added_edges(s)))
            return;
        const auto deleted = backward_deleted_edges(s);
        const auto added = backward_added_edges(s);
        const std::set<Cycle> destroyed = cycles_through_edges(g_, deleted, r_);
        if (!destroyed.empty()) return;
        const Cycle alpha = Cycle::from_vertices(s.v);
        detail::apply_edges(g_, deleted, added);
        const std::set<Cycle> created = cycles_through_edges(g_, added, r_);
        if (created.size() != 1 || *created.begin() != alpha) {
            detail::apply_edges(g_, added, deleted);  // undo
            return;
        }
        buckets_[static_cast<std::size_t>(k)].push_back(alpha);
        ++accepted_;
    }

    MutableGraph g_;
    int n_;
    int d_;
    int r_;
    Rng rng_;
    std::vector<std::vector<Cycle>> buckets_;
    std::vector<double> lambda_;
    double lambda_total_ = 0.0;
    double c_ = 0.0;
    std::uint64_t steps_ = 0;
    std::uint64_t events_ = 0;
    std::uint64_t accepted_ = 0;
    bool event_scheduled_ = false;   // a drawn self-loop run is in progress
    std::uint64_t skip_to_event_ = 0;  // its self-loops not yet consumed
};

// One single step of the switching walk, as a free function.
inline RegularGraph metagraph_step(const RegularGraph& g, int r, Rng& rng) {
    SwitchingChain chain(g, r, rng);
    chain.advance(1);
    rng = chain.rng();
    return chain.snapshot();
}

// The walk started at `start` and run for `steps` steps with its own stream.
inline RegularGraph sample_switching_chain(const RegularGraph& start, int r,
                                           std::uint64_t steps, std::uint64_t seed) {
    SwitchingChain chain(start, r, Rng::stream(seed, 0));
    chain.advance(steps);
    return chain.snapshot();
}

}  // namespace regspec
