#include "kmlab/chain.hpp"

#include <algorithm>
#include <numeric>

#include "kmlab/binom.hpp"

namespace kmlab {

Chain::Chain(Point start, std::vector<uint32_t> flips)
    : start_(std::move(start)), flips_(std::move(flips)) {
    const uint32_t n = start_.dimension();
    std::vector<bool> seen(n, false);
    for (uint32_t c : flips_) {
        if (c >= n) throw ConfigError("Chain: flip index out of range");
        if (seen[c] || start_.get(c)) throw ConfigError("Chain: flip repeats or is already set in start");
        seen[c] = true;
    }
}

Point Chain::point_at(size_t i) const {
    if (i > flips_.size()) throw ConfigError("Chain::point_at: index out of range");
    Point p = start_;
    for (size_t j = 0; j < i; ++j) p.set(flips_[j], true);
    return p;
}

std::vector<Point> Chain::points() const {
    std::vector<Point> out;
    out.reserve(length());
    Point p = start_;
    out.push_back(p);
    for (uint32_t c : flips_) {
        p.set(c, true);
        out.push_back(p);
    }
    return out;
}

Chain sample_uniform_chain(uint32_t n, Xoshiro256& rng) {
    if (n == 0) throw ConfigError("sample_uniform_chain: n must be >= 1");
    if (n > kMaxOracleDimension) throw ConfigError("sample_uniform_chain: n out of range");
    std::vector<uint32_t> flips(n);
    std::iota(flips.begin(), flips.end(), 0u);
    shuffle(flips, rng);
    return Chain(Point(n), std::move(flips));
}

Chain sample_chain_through(const std::vector<Point>& points, Xoshiro256& rng) {
    if (points.empty()) throw ConfigError("sample_chain_through: empty point list");
    const uint32_t n = points.front().dimension();
    for (size_t i = 1; i < points.size(); ++i) {
        if (comparable(points[i - 1], points[i]) != Ordering::less)
            throw ConfigError("sample_chain_through: points must be strictly ascending");
    }

    std::vector<uint32_t> flips;
    flips.reserve(n);
    Point prev(n);
    auto emit_segment = [&](const Point& lo, const Point& hi) {
        std::vector<uint32_t> seg;
        for (uint32_t c = 0; c < n; ++c)
            if (!lo.get(c) && hi.get(c)) seg.push_back(c);
        shuffle(seg, rng);
        flips.insert(flips.end(), seg.begin(), seg.end());
    };
    for (const Point& p : points) {
        emit_segment(prev, p);
        prev = p;
    }
    Point top(n);
    for (uint32_t c = 0; c < n; ++c) top.set(c, true);
    emit_segment(prev, top);
    return Chain(Point(n), std::move(flips));
}

namespace {

// Bracket-matches x; returns the unmatched coordinates in ascending order and
// whether all 1s are matched (i.e. x is the bottom point of its chain).
bool unmatched_of(uint64_t x, uint32_t n, std::vector<uint32_t>& unmatched_zeros) {
    unmatched_zeros.clear();
    std::vector<uint32_t> open;
    for (uint32_t c = 0; c < n; ++c) {
        if ((x >> c) & 1) {
            if (open.empty()) return false;  // an unmatched 1: not a chain bottom
            open.pop_back();
        } else {
            open.push_back(c);
        }
    }
    unmatched_zeros = std::move(open);
    return true;
}

} // namespace

ChainDecomposition symmetric_chain_decomposition(uint32_t n) {
    if (n == 0 || n > kMaxTableDimension)
        throw ConfigError("symmetric_chain_decomposition: n out of range");
    ChainDecomposition dec;
    dec.n = n;
    dec.chains.reserve(static_cast<size_t>(binom_u64(n, n / 2)));
    std::vector<uint32_t> zeros;
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
        if (!unmatched_of(x, n, zeros)) continue;
        dec.chains.emplace_back(Point::from_index(n, x), zeros);
    }
    return dec;
}

} // namespace kmlab
