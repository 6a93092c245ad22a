#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kmlab/binom.hpp"
#include "kmlab/boolfn.hpp"
#include "kmlab/chain.hpp"
#include "kmlab/point.hpp"

namespace kmlab {

/// Ascending comparable points whose values start at 1 and alternate;
/// an m-point tuple witnesses that the function is not (m-1)-monotone.
struct ViolationTuple {
    std::vector<Point> points;
    std::vector<uint8_t> values;

    /// Throws if the tuple is not strictly ascending with exact alternation from 1.
    void validate() const;
};

/// Pairwise vertex-disjoint violating tuples; each m-point tuple forces
/// ceil((m - k)/2) flips, so `bound` is a certified lower bound on the
/// distance to k-monotonicity.
struct MatchingCertificate {
    std::vector<ViolationTuple> tuples;
    uint32_t target_k = 0;
    std::vector<uint32_t> forced_flips;
    Rational bound = 0;
};

/// Length of the longest alternating subsequence beginning with value 1
/// (0 when there are no 1s). Equals the number of value runs counted from
/// the first 1-run, which the greedy scan realizes optimally.
uint32_t alternation_index(std::span<const uint8_t> values);

/// Positions of the greedy maximal alternating-from-1 subsequence.
std::vector<size_t> greedy_alternating_positions(std::span<const uint8_t> values);

/// km(f): the smallest k such that f is k-monotone, by a level-order DP over
/// the hypercube DAG carrying, per point and last value, the longest
/// alternating-from-1 sequence ending at or below that point. km(f) = 0 iff
/// f == 0; km(f) <= 1 iff f is monotone. Requires n <= 24.
uint32_t monotonicity_index(const FunctionSpec& f);

/// Queries every point of Z (charged to the ledger); returns a (k+1)-point
/// tuple if Z's value sequence alternates from 1 at least k+1 times.
std::optional<ViolationTuple> chain_violation(const FunctionSpec& f, const Chain& z,
                                              uint32_t k, QueryLedger& ledger);

/// Minimum number of positions to flip so the alternation index drops to at
/// most k; brute force over all flip subsets, length <= 16.
uint32_t min_flips_to_reduce(std::span<const uint8_t> values, uint32_t k);

/// Certified distance lower bound: decompose the cube into symmetric chains,
/// greedily extract one maximal alternating-from-1 tuple per chain (kept when
/// its length is at least k+1), and charge ceil((m-k)/2) forced flips per
/// tuple. Every extracted tuple of length <= 16 is re-checked against
/// min_flips_to_reduce.
MatchingCertificate matching_lower_bound(const FunctionSpec& f, uint32_t k);

struct SymmetricDistance {
    Rational distance;
    LevelProfile argmin;
};

/// Exact nearest symmetric k-monotone function, by DP over
/// (level, alternation budget); upper-bounds the distance to k-monotonicity
/// for symmetric inputs. Whether the true nearest function is symmetric is
/// not assumed anywhere.
SymmetricDistance symmetric_distance(const LevelProfile& profile, uint32_t k);

/// Ground truth oracle: minimum distance over all 2^(2^n) functions with
/// km <= k. Requires n <= 4.
Rational exact_distance_small(const FunctionSpec& f, uint32_t k);

} // namespace kmlab
