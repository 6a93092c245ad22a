#include "kmlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "kmlab/kmono.hpp"

namespace kmlab {

namespace {

void check_hypergeom_params(int64_t u, int64_t N, int64_t t) {
    if (N < 0 || u < 0 || t < 0 || u > N || t > N)
        throw ConfigError("hypergeom: need 0 <= u <= N and 0 <= t <= N");
}

} // namespace

double hypergeom_pmf(int64_t u, int64_t N, int64_t t, int64_t i) {
    check_hypergeom_params(u, N, t);
    if (i < 0 || i > u || t - i > N - u || t - i < 0) return 0.0;
    return std::exp(lchoose(u, i) + lchoose(N - u, t - i) - lchoose(N, t));
}

double hypergeom_tail(int64_t u, int64_t N, int64_t t, int64_t threshold) {
    check_hypergeom_params(u, N, t);
    const int64_t hi = std::min(u, t);
    const int64_t lo = std::max<int64_t>(threshold, std::max<int64_t>(0, t - (N - u)));
    if (lo > hi) return 0.0;
    if (threshold <= std::max<int64_t>(0, t - (N - u))) return 1.0;
    double sum = 0.0;
    for (int64_t i = hi; i >= lo; --i)  // ascending magnitude toward the mode
        sum += hypergeom_pmf(u, N, t, i);
    return std::min(sum, 1.0);
}

ChernoffCheck chernoff_check(int64_t u, int64_t N, int64_t t) {
    check_hypergeom_params(u, N, t);
    ChernoffCheck out;
    out.expectation = N == 0 ? 0.0 : static_cast<double>(t) * static_cast<double>(u) / static_cast<double>(N);
    out.threshold = static_cast<int64_t>(std::ceil(1.25 * out.expectation));
    out.exact_tail = hypergeom_tail(u, N, t, out.threshold);
    out.bound = std::exp(-out.expectation / 48.0);
    out.holds = out.exact_tail <= out.bound;
    return out;
}

ExpectedOverlap expected_overlap(const HardFunctionParams& p) {
    ExpectedOverlap out;
    const double n = static_cast<double>(p.n);
    const double nl = static_cast<double>(p.n_l);
    const double nr = static_cast<double>(p.n_r);
    out.expectation = (std::sqrt(n) / 3.0) * nr / (nl / 2.0 + std::sqrt(nl) / p.c_mid + nr);
    out.t = std::sqrt(n) / (20.0 * p.r * p.r * std::sqrt(p.c_split));
    out.bracket_ok = (4.0 / 15.0) * out.t <= out.expectation && out.expectation <= (4.0 / 5.0) * out.t;
    out.preconditions_ok = p.c_split == 625 && p.c_mid == 100 && p.r >= 1 && nl > 2.0 * n / 3.0;
    return out;
}

VEntry v_of_chain(const HardFunctionParams& params, const Chain& z) {
    if (z.dimension() != params.n) throw ConfigError("v_of_chain: dimension mismatch");
    if (!z.is_full()) throw ConfigError("v_of_chain: chain must be full");
    VEntry v;
    uint64_t a = 0, b = 0;
    auto touch = [&]() {
        if (!params.in_band(a)) return;
        const auto lvl = static_cast<int64_t>(b);
        if (!v.nonempty) {
            v.nonempty = true;
            v.min_level = v.max_level = lvl;
        } else {
            v.min_level = std::min(v.min_level, lvl);
            v.max_level = std::max(v.max_level, lvl);
        }
    };
    touch();
    for (uint32_t c : z.flips()) {
        if (c < params.n_l) ++a; else ++b;
        touch();
    }
    if (v.nonempty) v.size = static_cast<uint64_t>(v.max_level - v.min_level + 1);
    return v;
}

namespace {

TwoPartTrial run_two_part_trial(const HardFunctionParams& params, uint32_t k,
                                const LevelProfile& inner,
                                std::span<const uint32_t> r_step_positions) {
    if (r_step_positions.size() != params.n_r)
        throw ConfigError("two_part_chain_stats: need exactly n_R positions");
    const uint64_t n = params.n;
    const bool odd = params.parity == HardFunctionParams::Parity::odd;
    const int64_t lo = params.mid_lo, hi = params.mid_hi;
    TwoPartTrial out;
    uint32_t sigma = 0;
    const uint32_t cap = k + 1;
    auto push = [&](int v) {
        if (sigma == cap) return;
        if ((sigma % 2 == 0 && v == 1) || (sigma % 2 == 1 && v == 0)) ++sigma;
    };
    uint64_t a = 0;
    // run j: b = j while a sweeps a contiguous range; values only change at
    // the band boundaries, so each run contributes at most three pushes
    for (uint64_t j = 0; j <= params.n_r; ++j) {
        const uint64_t next_r = (j < params.n_r) ? r_step_positions[j] : n;
        // a after this run: total L-steps before step index next_r is next_r - j
        const uint64_t a_end = next_r - j;
        const auto a0 = static_cast<int64_t>(a);
        const auto a1 = static_cast<int64_t>(a_end);
        if (a0 < lo) push(0);
        if (a1 >= lo && a0 <= hi) {
            push(inner.values[j]);
            if (!out.v.nonempty) {
                out.v.nonempty = true;
                out.v.min_level = out.v.max_level = static_cast<int64_t>(j);
            } else {
                out.v.max_level = static_cast<int64_t>(j);
            }
        }
        if (a1 > hi) push(odd ? 1 : 0);
        a = a_end;
    }
    out.violation = sigma == cap;
    if (out.v.nonempty) out.v.size = static_cast<uint64_t>(out.v.max_level - out.v.min_level + 1);
    return out;
}

} // namespace

TwoPartTrial two_part_chain_stats(const HardFunctionParams& params, uint32_t k,
                                  std::span<const uint32_t> r_step_positions) {
    const auto bb = balanced_blocks(static_cast<uint32_t>(params.n_r), params.blocks);
    return run_two_part_trial(params, k, bb.profile, r_step_positions);
}

TwoPartSimulator::TwoPartSimulator(HardFunctionParams params, uint32_t k)
    : params_(std::move(params)), k_(k),
      inner_(balanced_blocks(static_cast<uint32_t>(params_.n_r), params_.blocks).profile) {
    params_.validate();
}

TwoPartTrial TwoPartSimulator::run(Xoshiro256& rng) const {
    const std::vector<uint32_t> pos = sample_index_subset(params_.n, params_.n_r, rng);
    return run_two_part_trial(params_, k_, inner_, pos);
}

TwoPartTrial TwoPartSimulator::run_positions(std::span<const uint32_t> r_step_positions) const {
    return run_two_part_trial(params_, k_, inner_, r_step_positions);
}

ExactRejection exact_chain_rejection_prob(const HardFunctionParams& params, uint32_t k) {
    params.validate();
    const uint64_t nl = params.n_l, nr = params.n_r, n = params.n;
    if (static_cast<double>(nl) * static_cast<double>(nr) * std::max<uint32_t>(k, 1) > 1e9)
        throw BudgetError("exact_chain_rejection_prob: state budget exceeded");

    const auto bb = balanced_blocks(static_cast<uint32_t>(nr), params.blocks);
    const auto& prof = bb.profile.values;
    const bool odd = params.parity == HardFunctionParams::Parity::odd;
    auto val = [&](uint64_t a, uint64_t b) -> int {
        if (params.in_band(a)) return prof[b];
        if (odd && static_cast<int64_t>(a) > params.mid_hi) return 1;
        return 0;
    };
    const uint32_t K = k + 2;
    auto adv = [&](uint32_t sig, int v) -> uint32_t {
        if (sig == k + 1) return sig;
        if ((sig % 2 == 0 && v == 1) || (sig % 2 == 1 && v == 0)) return sig + 1;
        return sig;
    };

    // forward over diagonals tau = a + b, states indexed by (b, sigma)
    std::vector<double> cur((nr + 1) * K, 0.0), nxt((nr + 1) * K, 0.0);
    cur[adv(0, val(0, 0))] = 1.0;
    for (uint64_t tau = 0; tau < n; ++tau) {
        const uint64_t bmin = tau > nl ? tau - nl : 0;
        const uint64_t bmax = std::min(nr, tau);
        const auto rem = static_cast<double>(n - tau);
        const uint64_t lo_clear = bmin * K;
        const uint64_t hi_clear = std::min(bmax + 2, nr + 1) * K;
        std::fill(nxt.begin() + lo_clear, nxt.begin() + hi_clear, 0.0);
        for (uint64_t b = bmin; b <= bmax; ++b) {
            const double* src = &cur[b * K];
            bool live = false;
            for (uint32_t s = 0; s < K; ++s) live |= src[s] != 0.0;
            if (!live) continue;
            const uint64_t a = tau - b;
            const double pa = static_cast<double>(nl - a) / rem;
            const double pb = static_cast<double>(nr - b) / rem;
            if (pa > 0) {
                const int v = val(a + 1, b);
                double* dst = &nxt[b * K];
                for (uint32_t s = 0; s < K; ++s) dst[adv(s, v)] += src[s] * pa;
            }
            if (pb > 0) {
                const int v = val(a, b + 1);
                double* dst = &nxt[(b + 1) * K];
                for (uint32_t s = 0; s < K; ++s) dst[adv(s, v)] += src[s] * pb;
            }
        }
        std::swap(cur, nxt);
    }
    double total = 0;
    for (uint32_t s = 0; s < K; ++s) total += cur[nr * K + s];
    if (std::abs(total - 1.0) > 1e-6)
        throw std::logic_error("exact_chain_rejection_prob: probability mass not conserved");

    ExactRejection out;
    out.p = cur[nr * K + (k + 1)];
    out.n_l = nl;
    out.n_r = nr;
    out.k = k;
    out.params = params;
    return out;
}

double exact_rejection_symmetric(const LevelProfile& profile, uint32_t k) {
    return alternation_index(profile.values) >= k + 1 ? 1.0 : 0.0;
}

WilsonInterval wilson_99(uint64_t successes, uint64_t trials) {
    if (trials == 0) throw ConfigError("wilson_99: trials must be >= 1");
    constexpr double z = 2.5758293035489004;  // two-sided 99% normal quantile
    const double t = static_cast<double>(trials);
    const double ph = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = ph + z2 / (2.0 * t);
    const double half = z * std::sqrt(ph * (1.0 - ph) / t + z2 / (4.0 * t * t));
    return {std::max(0.0, (center - half) / denom), std::min(1.0, (center + half) / denom)};
}

RejectionEstimate mc_rejection_estimate(const FunctionSpec& f, uint32_t k, uint64_t trials,
                                        uint64_t seed, unsigned threads) {
    if (trials == 0) throw ConfigError("mc_rejection_estimate: trials must be >= 1");
    const uint32_t n = f.dimension();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, std::max<uint64_t>(trials / 256, 1));

    auto run_range = [&](uint64_t begin, uint64_t end) -> uint64_t {
        ChainValueWalker walker(f);
        const Point zero(n);
        std::vector<uint32_t> flips(n);
        uint64_t rejections = 0;
        for (uint64_t trial = begin; trial < end; ++trial) {
            Xoshiro256 rng = derive_stream(seed, trial);
            std::iota(flips.begin(), flips.end(), 0u);
            shuffle(flips, rng);
            uint32_t sigma = 0;
            const uint32_t cap = k + 1;
            auto push = [&](int v) {
                if (sigma != cap && ((sigma % 2 == 0 && v == 1) || (sigma % 2 == 1 && v == 0)))
                    ++sigma;
            };
            push(walker.reset(zero));
            for (uint32_t i = 0; i < n && sigma != cap; ++i) push(walker.step(flips[i]));
            if (sigma == cap) ++rejections;
        }
        return rejections;
    };

    uint64_t rejections = 0;
    if (threads == 1) {
        rejections = run_range(0, trials);
    } else {
        std::vector<uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        const uint64_t chunk = (trials + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const uint64_t begin = std::min<uint64_t>(w * chunk, trials);
            const uint64_t end = std::min<uint64_t>(begin + chunk, trials);
            pool.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
        }
        for (auto& th : pool) th.join();
        rejections = std::accumulate(partial.begin(), partial.end(), uint64_t{0});
    }

    RejectionEstimate est;
    est.trials = trials;
    est.rejections = rejections;
    est.seed = seed;
    est.p_hat = static_cast<double>(rejections) / static_cast<double>(trials);
    const WilsonInterval ci = wilson_99(rejections, trials);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    return est;
}

Rational middle_mass(uint32_t n, double width) {
    if (width < 0) throw ConfigError("middle_mass: width must be >= 0");
    BigInt outside = 0;
    BigInt level_mass = 1;
    for (uint32_t t = 0; t <= n; ++t) {
        const double dist = std::abs(static_cast<double>(t) - static_cast<double>(n) / 2.0);
        if (dist > width) outside += level_mass;
        if (t < n) level_mass = level_mass * (n - t) / (t + 1);
    }
    return Rational(outside, BigInt(1) << n);
}

LevelMass max_level_mass(uint32_t n) {
    if (n == 0) throw ConfigError("max_level_mass: n must be >= 1");
    LevelMass out;
    if (n <= 64) {
        out.max_fraction = static_cast<double>(binom_u64(n, n / 2)) / std::pow(2.0, n);
    } else {
        out.max_fraction = std::exp(lchoose(n, n / 2) - n * std::log(2.0));
    }
    out.bound = 2.0 / std::sqrt(static_cast<double>(n));
    out.holds = out.max_fraction < out.bound;
    return out;
}

VTailModel v_tail_model(const HardFunctionParams& p) {
    VTailModel m;
    m.u = static_cast<int64_t>(p.n_r);
    m.population = static_cast<int64_t>(std::llround(
        static_cast<double>(p.n_l) / 2.0 + std::sqrt(static_cast<double>(p.n_l)) / p.c_mid +
        static_cast<double>(p.n_r)));
    m.draws = static_cast<int64_t>(std::floor(std::sqrt(static_cast<double>(p.n)) / 3.0));
    m.threshold = p.k * std::sqrt(static_cast<double>(p.n_r)) / (20.0 * p.s);
    m.hypergeom_tail_bound =
        hypergeom_tail(m.u, m.population, m.draws, static_cast<int64_t>(std::ceil(m.threshold)));
    m.exp_route_bound = std::exp(-m.threshold / 180.0);
    return m;
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw ConfigError("fit_line: need >= 2 points");
    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / n;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double pred = fit.slope * xs[i] + fit.intercept;
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

} // namespace kmlab
