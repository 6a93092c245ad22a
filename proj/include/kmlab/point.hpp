#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "kmlab/errors.hpp"

namespace kmlab {

/// Operations that materialize all of {0,1}^n are capped here.
inline constexpr uint32_t kMaxTableDimension = 24;
/// Oracle-only operations (points, chains, evaluation) are capped here.
inline constexpr uint32_t kMaxOracleDimension = 1u << 20;

/// A vertex of the hypercube {0,1}^n, word-packed. Coordinate 1 is bit 0
/// (least significant); printed strings read like binary numerals (MSB left).
class Point {
public:
    Point() = default;

    explicit Point(uint32_t n) : n_(n), w_((n + 63) / 64, 0) {
        if (n == 0 || n > kMaxOracleDimension) throw ConfigError("Point: dimension out of range");
    }

    /// Point with the bits of `index`; requires n <= 64.
    static Point from_index(uint32_t n, uint64_t index) {
        if (n > 64) throw ConfigError("Point::from_index: n > 64");
        Point p(n);
        p.w_[0] = (n == 64) ? index : (index & ((uint64_t{1} << n) - 1));
        return p;
    }

    uint32_t dimension() const { return n_; }

    bool get(uint32_t coord) const { return (w_[coord >> 6] >> (coord & 63)) & 1; }

    void set(uint32_t coord, bool v) {
        const uint64_t mask = uint64_t{1} << (coord & 63);
        if (v) w_[coord >> 6] |= mask;
        else w_[coord >> 6] &= ~mask;
    }

    uint32_t weight() const {
        uint32_t c = 0;
        for (uint64_t x : w_) c += static_cast<uint32_t>(std::popcount(x));
        return c;
    }

    /// Number of set bits among coordinates [0, count).
    uint32_t weight_prefix(uint32_t count) const {
        uint32_t c = 0;
        uint32_t full = count >> 6;
        for (uint32_t i = 0; i < full; ++i) c += static_cast<uint32_t>(std::popcount(w_[i]));
        const uint32_t rest = count & 63;
        if (rest) c += static_cast<uint32_t>(std::popcount(w_[full] & ((uint64_t{1} << rest) - 1)));
        return c;
    }

    /// Integer encoding; requires n <= 64.
    uint64_t index() const {
        if (n_ > 64) throw ConfigError("Point::index: n > 64");
        return w_[0];
    }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    std::string to_string() const {
        std::string s(n_, '0');
        for (uint32_t i = 0; i < n_; ++i)
            if (get(i)) s[n_ - 1 - i] = '1';
        return s;
    }

    friend bool operator==(const Point&, const Point&) = default;

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> w_;
};

enum class Ordering { less, equal, greater, incomparable };

/// Bitwise-dominance comparison of two points of the same dimension.
inline Ordering comparable(const Point& p, const Point& q) {
    if (p.dimension() != q.dimension()) throw ConfigError("comparable: dimension mismatch");
    bool p_extra = false, q_extra = false;
    const auto& a = p.words();
    const auto& b = q.words();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] & ~b[i]) p_extra = true;
        if (b[i] & ~a[i]) q_extra = true;
    }
    if (p_extra && q_extra) return Ordering::incomparable;
    if (p_extra) return Ordering::greater;
    if (q_extra) return Ordering::less;
    return Ordering::equal;
}

inline uint32_t weight(const Point& p) { return p.weight(); }

} // namespace kmlab
