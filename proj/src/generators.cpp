#include "kmlab/generators.hpp"

#include <cmath>

#include "kmlab/binom.hpp"

namespace kmlab {

uint32_t BlockPartition::min_interval_length() const {
    uint32_t m = n + 1;
    for (const auto& [lo, hi] : intervals) m = std::min(m, hi - lo + 1);
    return m;
}

BalancedBlocks balanced_blocks(uint32_t n, uint32_t blocks) {
    if (n == 0 || n > kMaxOracleDimension) throw ConfigError("balanced_blocks: n out of range");
    if (blocks == 0 || blocks > n + 1) throw ConfigError("balanced_blocks: need 1 <= blocks <= n+1");

    BlockPartition part;
    part.n = n;
    part.block_count = blocks;

    const BigInt total = BigInt(1) << n;
    BigInt remaining = total;
    BigInt level_mass = 1;  // binom(n, 0)
    uint32_t t = 0;
    for (uint32_t i = 0; i < blocks; ++i) {
        const uint32_t blocks_left = blocks - i;
        const uint32_t start = t;
        BigInt cum = 0;
        while (true) {
            cum += level_mass;
            ++t;
            if (t <= n) {
                level_mass = level_mass * (n - t + 1) / t;
            }
            if (i + 1 == blocks) {
                if (t == n + 1) break;
                continue;  // last block takes all remaining levels
            }
            const uint32_t levels_after = n + 1 - t;
            if (levels_after == blocks_left - 1) break;  // keep a level per remaining block
            if (cum * blocks_left >= remaining) break;
        }
        part.intervals.emplace_back(start, t - 1);
        remaining -= cum;
        part.masses.push_back(Rational(cum, total).convert_to<double>());
    }

    const double root = std::sqrt(static_cast<double>(n));
    part.regime_ok = blocks <= root / 2.0;
    const double lo_bound = (1.0 - blocks / root) / blocks;
    const double hi_bound = (1.0 + blocks / root) / blocks;
    part.mass_bounds_ok = true;
    for (double m : part.masses)
        if (m < lo_bound || m > hi_bound) part.mass_bounds_ok = false;

    LevelProfile profile(n, std::vector<uint8_t>(n + 1, 0));
    for (uint32_t i = 0; i < blocks; ++i) {
        const auto [lo, hi] = part.intervals[i];
        for (uint32_t lv = lo; lv <= hi; ++lv) profile.values[lv] = i % 2;
    }
    return {std::move(profile), std::move(part)};
}

FunctionSpec hard_function(const HardFunctionParams& params) {
    params.validate();
    auto bb = balanced_blocks(static_cast<uint32_t>(params.n_r), params.blocks);
    // side condition from the construction: every inner interval must be at
    // least sqrt(n_R)/(8s) levels long when blocks = 3s
    if (params.blocks == 3 * params.s) {
        const double need = std::sqrt(static_cast<double>(params.n_r)) / (8.0 * params.s);
        if (static_cast<double>(bb.partition.min_interval_length()) < need)
            throw InfeasibleError("hard_function: inner block interval shorter than sqrt(n_R)/(8s)");
    }
    return FunctionSpec::two_part(params, std::move(bb.profile));
}

FunctionSpec hard_family_sample(const HardFunctionParams& params, Xoshiro256& rng) {
    FunctionSpec base = hard_function(params);
    Permutation sigma = Permutation::random(static_cast<uint32_t>(params.n), rng);
    return FunctionSpec::permuted(std::move(base), std::move(sigma));
}

LevelProfile intro_band_function(uint32_t n) {
    if (n < 16) throw ConfigError("intro_band_function: n must be >= 16");
    if (n > kMaxOracleDimension) throw ConfigError("intro_band_function: n out of range");
    const double c = n / 2.0;
    const double root = std::sqrt(static_cast<double>(n));
    const int64_t lo1 = round_level(c - 2 * root, c);
    const int64_t hi1 = round_level(c - root, c);
    const int64_t lo2 = round_level(c + root, c);
    const int64_t hi2 = round_level(c + 2 * root, c);
    if (lo1 > hi1 || lo2 > hi2) throw InfeasibleError("intro_band_function: a band is empty after rounding");
    if (hi1 >= lo2) throw InfeasibleError("intro_band_function: bands overlap after rounding");
    LevelProfile p(n, std::vector<uint8_t>(n + 1, 0));
    for (int64_t lv = std::max<int64_t>(lo1, 0); lv <= hi1; ++lv) p.values[lv] = 1;
    for (int64_t lv = lo2; lv <= std::min<int64_t>(hi2, n); ++lv) p.values[lv] = 1;
    return p;
}

} // namespace kmlab
