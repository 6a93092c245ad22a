#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kmlab/boolfn.hpp"
#include "kmlab/hard_params.hpp"

namespace kmlab {

/// Partition of the levels 0..n into consecutive intervals of roughly equal
/// binomial mass.
struct BlockPartition {
    uint32_t n = 0;
    uint32_t block_count = 0;
    std::vector<std::pair<uint32_t, uint32_t>> intervals;  // inclusive [lo, hi]
    std::vector<double> masses;                            // binomial mass per block
    bool mass_bounds_ok = false;  ///< every mass within (1 +- l/sqrt(n))/l, checked post hoc
    bool regime_ok = false;       ///< l <= sqrt(n)/2, where the mass window is meaningful

    uint32_t min_interval_length() const;
};

struct BalancedBlocks {
    LevelProfile profile;
    BlockPartition partition;
};

/// Balanced blocks function with `blocks` blocks: sweep the levels upward and
/// close a block once its mass reaches 1/(blocks left) of the remaining budget
/// (exact big-integer comparison). Values alternate blockwise; the block
/// containing level 0 takes value 0, which makes the monotonicity index
/// exactly blocks-1 for every block count.
BalancedBlocks balanced_blocks(uint32_t n, uint32_t blocks);

/// The hidden-block construction f(x,y): 0 while |x| is outside the middle
/// band of the L-levels, the inner balanced-blocks profile at |y| inside it.
/// The odd variant instead returns 1 above the band.
FunctionSpec hard_function(const HardFunctionParams& params);

/// A uniformly random member of the hard family: hard_function composed with
/// a uniformly random coordinate permutation.
FunctionSpec hard_family_sample(const HardFunctionParams& params, Xoshiro256& rng);

/// Symmetric profile with value 1 exactly on the two bands
/// [n/2 - 2 sqrt(n), n/2 - sqrt(n)] and [n/2 + sqrt(n), n/2 + 2 sqrt(n)]
/// (boundaries rounded to nearest, ties away from n/2). Requires n >= 16.
LevelProfile intro_band_function(uint32_t n);

} // namespace kmlab
