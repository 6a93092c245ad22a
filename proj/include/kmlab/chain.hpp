#pragma once

#include <cstdint>
#include <vector>

#include "kmlab/point.hpp"
#include "kmlab/rng.hpp"

namespace kmlab {

/// An ascending chain: a start vertex plus an ordered sequence of coordinate
/// flips (0 -> 1), one level per step. Stored as start + flip order so a chain
/// costs O(n) memory and points can be materialized lazily.
class Chain {
public:
    Chain(Point start, std::vector<uint32_t> flips);

    uint32_t dimension() const { return start_.dimension(); }
    const Point& start() const { return start_; }
    const std::vector<uint32_t>& flips() const { return flips_; }

    /// Number of points on the chain (flips + 1).
    size_t length() const { return flips_.size() + 1; }

    bool is_full() const { return start_.weight() == 0 && flips_.size() == dimension(); }

    /// Materializes the i-th point (i = 0 is the start).
    Point point_at(size_t i) const;

    std::vector<Point> points() const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    Point start_;
    std::vector<uint32_t> flips_;
};

/// Uniformly random full chain 0^n -> 1^n (flip order = random permutation).
Chain sample_uniform_chain(uint32_t n, Xoshiro256& rng);

/// Uniformly random full chain conditioned on passing through the given
/// strictly ascending points: the flip set of each gap segment (including
/// before the first and after the last point) is permuted independently.
Chain sample_chain_through(const std::vector<Point>& points, Xoshiro256& rng);

struct ChainDecomposition {
    uint32_t n = 0;
    std::vector<Chain> chains;
};

/// Symmetric chain decomposition of {0,1}^n by bracket matching: scanning
/// coordinates 1..n, every 1 closes the nearest unmatched 0 to its left.
/// A chain consists of all points sharing the matched pairs; it is traversed
/// by flipping the unmatched 0s in ascending coordinate order, so each chain
/// spans the consecutive levels [i, n-i] where i is the number of matched pairs.
ChainDecomposition symmetric_chain_decomposition(uint32_t n);

} // namespace kmlab
