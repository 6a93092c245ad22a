#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmlab/binom.hpp"
#include "kmlab/boolfn.hpp"
#include "kmlab/chain.hpp"
#include "kmlab/generators.hpp"
#include "kmlab/hard_params.hpp"

namespace kmlab {

/// H(u, N, t, i): probability of exactly i successes in t draws without
/// replacement from N objects of which u are successes. Log-space.
double hypergeom_pmf(int64_t u, int64_t N, int64_t t, int64_t i);

/// P[X >= threshold] for the same distribution.
double hypergeom_tail(int64_t u, int64_t N, int64_t t, int64_t threshold);

/// Exact tail P[X >= ceil(5E/4)] against the Chernoff-style bound exp(-E/48).
/// E = 0 degenerates to threshold 0, where both sides are 1.
struct ChernoffCheck {
    double expectation = 0;
    int64_t threshold = 0;
    double exact_tail = 0;
    double bound = 0;
    bool holds = false;
};
ChernoffCheck chernoff_check(int64_t u, int64_t N, int64_t t);

/// E[X] = (sqrt(n)/3) * n_R / (n_L/2 + sqrt(n_L)/c_mid + n_R) and the target
/// t = sqrt(n) / (20 r^2 sqrt(c_split)), with the bracket (4/15)t <= E <= (4/5)t.
/// The bracket is only asserted under the paper presets (preconditions_ok).
struct ExpectedOverlap {
    double expectation = 0;
    double t = 0;
    bool bracket_ok = false;
    bool preconditions_ok = false;
};
ExpectedOverlap expected_overlap(const HardFunctionParams& params);

/// The set of R-weights attained while the L-weight lies in the middle band;
/// always an interval of consecutive integers for a full chain.
struct VEntry {
    bool nonempty = false;
    int64_t min_level = 0;
    int64_t max_level = 0;
    uint64_t size = 0;
};
VEntry v_of_chain(const HardFunctionParams& params, const Chain& z);

/// One chain trial of the two-part function, computed from the sorted step
/// indices that flip R-coordinates (a uniform n_R-subset of the n steps fully
/// determines the weight path, hence the value path). O(n_R) per trial, which
/// is what makes paper-preset sizes tractable.
struct TwoPartTrial {
    bool violation = false;
    VEntry v;
};
TwoPartTrial two_part_chain_stats(const HardFunctionParams& params, uint32_t k,
                                  std::span<const uint32_t> r_step_positions);

/// Trial engine with the inner profile built once.
class TwoPartSimulator {
public:
    TwoPartSimulator(HardFunctionParams params, uint32_t k);
    TwoPartTrial run(Xoshiro256& rng) const;
    TwoPartTrial run_positions(std::span<const uint32_t> r_step_positions) const;
    const HardFunctionParams& params() const { return params_; }

private:
    HardFunctionParams params_;
    uint32_t k_;
    LevelProfile inner_;
};

/// Exact probability that a uniform chain reveals a violation to
/// k-monotonicity of the two-part function: forward DP over lattice positions
/// (a = L-flips, b = R-flips) with the alternation automaton capped at k+1.
/// The DP depends on params only, so it is invariant under permutation
/// composition by construction.
struct ExactRejection {
    double p = 0;
    uint64_t n_l = 0, n_r = 0;
    uint32_t k = 0;
    HardFunctionParams params;
};
ExactRejection exact_chain_rejection_prob(const HardFunctionParams& params, uint32_t k);

/// Rejection probability for a totally symmetric function is 0/1: every full
/// chain sees the whole level profile.
double exact_rejection_symmetric(const LevelProfile& profile, uint32_t k);

struct WilsonInterval {
    double low = 0, high = 1;
};
/// 99% Wilson score interval; valid near proportion 0.
WilsonInterval wilson_99(uint64_t successes, uint64_t trials);

struct RejectionEstimate {
    double p_hat = 0;
    double ci_low = 0, ci_high = 1;
    uint64_t trials = 0;
    uint64_t rejections = 0;
    uint64_t seed = 0;
};
/// Fraction of uniform chains revealing a violation, with a 99% Wilson CI.
/// Trials use per-trial derived rng streams, so results do not depend on the
/// thread count.
RejectionEstimate mc_rejection_estimate(const FunctionSpec& f, uint32_t k, uint64_t trials,
                                        uint64_t seed, unsigned threads = 1);

/// Exact fraction of {0,1}^n with | |x| - n/2 | > width.
Rational middle_mass(uint32_t n, double width);

/// binom(n, floor(n/2))/2^n against the bound 2/sqrt(n).
struct LevelMass {
    double max_fraction = 0;
    double bound = 0;
    bool holds = false;
};
LevelMass max_level_mass(uint32_t n);

/// The assumption-based route for the V(Z) tail: hypergeometric experiment
/// with u = n_R successes, population N = round(n_L/2 + sqrt(n_L)/c_mid + n_R),
/// T = floor(sqrt(n)/3) draws, evaluated at the threshold t = k sqrt(n_R)/(20 s),
/// plus the closed-form exp(-t/180). Reported next to exact/MC values.
struct VTailModel {
    int64_t u = 0, population = 0, draws = 0;
    double threshold = 0;
    double hypergeom_tail_bound = 0;
    double exp_route_bound = 0;
};
VTailModel v_tail_model(const HardFunctionParams& params);

struct LinearFit {
    double slope = 0, intercept = 0, r_squared = 0;
};
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

} // namespace kmlab
