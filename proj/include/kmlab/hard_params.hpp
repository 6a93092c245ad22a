#pragma once

#include <cmath>
#include <cstdint>

#include "kmlab/errors.hpp"

namespace kmlab {

/// Rounds x to the nearest integer; ties go away from `center`.
/// Frozen convention for all level-band boundaries.
inline int64_t round_level(double x, double center) {
    if (x >= center) return static_cast<int64_t>(std::floor(x + 0.5));
    return static_cast<int64_t>(std::ceil(x - 0.5));
}

/// Knobs of the hidden-block construction: split [n] into L and R, keep the
/// inner blocks function visible only while |x| lies in a thin middle band of
/// the L-levels. Presets use n_R = n/(c_split r^2) and band half-width
/// sqrt(n_L)/c_mid, with r = s/k.
struct HardFunctionParams {
    uint64_t n = 0;
    uint32_t k = 0;          ///< tested monotonicity order
    uint32_t s = 0;          ///< far-from order
    double r = 0;            ///< s/k
    uint64_t n_l = 0;
    uint64_t n_r = 0;
    double mid_width = 0;    ///< half-width of the band, in L-levels
    int64_t mid_lo = 0;      ///< resolved integer band [mid_lo, mid_hi]
    int64_t mid_hi = 0;
    uint32_t blocks = 0;     ///< inner block count (3s under presets)
    enum class Parity { even, odd };
    Parity parity = Parity::even;
    double c_split = 625;
    double c_mid = 100;

    /// Derives everything from (n, k, s) and the two constants. n_R is rounded
    /// half away from zero; n_L = n - n_R; band boundaries round half away
    /// from the band center. Parity follows the parity of k unless overridden.
    static HardFunctionParams preset(uint64_t n, uint32_t k, uint32_t s,
                                     double c_split = 625, double c_mid = 100);

    /// Recomputes mid_lo/mid_hi from n_l and mid_width.
    void resolve_band();

    /// Throws ConfigError on inconsistent fields, InfeasibleError when the
    /// construction cannot exist at this size (e.g. empty band, blocks > n_R+1).
    void validate() const;

    bool in_band(uint64_t l_weight) const {
        const auto w = static_cast<int64_t>(l_weight);
        return w >= mid_lo && w <= mid_hi;
    }

    friend bool operator==(const HardFunctionParams&, const HardFunctionParams&) = default;
};

inline HardFunctionParams HardFunctionParams::preset(uint64_t n, uint32_t k, uint32_t s,
                                                     double c_split, double c_mid) {
    if (k == 0 || s == 0 || k > s) throw ConfigError("HardFunctionParams: need 1 <= k <= s");
    if (c_split <= 0 || c_mid <= 0) throw ConfigError("HardFunctionParams: constants must be positive");
    HardFunctionParams p;
    p.n = n;
    p.k = k;
    p.s = s;
    p.r = static_cast<double>(s) / k;
    p.c_split = c_split;
    p.c_mid = c_mid;
    p.n_r = static_cast<uint64_t>(std::floor(static_cast<double>(n) / (c_split * p.r * p.r) + 0.5));
    if (p.n_r > n) p.n_r = n;
    p.n_l = n - p.n_r;
    p.mid_width = std::sqrt(static_cast<double>(p.n_l)) / c_mid;
    p.blocks = 3 * s;
    p.parity = (k % 2 == 0) ? Parity::even : Parity::odd;
    p.resolve_band();
    p.validate();
    return p;
}

inline void HardFunctionParams::resolve_band() {
    const double c = static_cast<double>(n_l) / 2.0;
    mid_lo = round_level(c - mid_width, c);
    mid_hi = round_level(c + mid_width, c);
}

inline void HardFunctionParams::validate() const {
    if (n == 0 || k == 0 || s == 0) throw ConfigError("HardFunctionParams: n, k, s must be positive");
    if (k > s) throw ConfigError("HardFunctionParams: k must not exceed s");
    if (n_l + n_r != n) throw ConfigError("HardFunctionParams: n_L + n_R != n");
    if (blocks == 0) throw ConfigError("HardFunctionParams: blocks must be positive");
    if (blocks > n_r + 1) throw InfeasibleError("HardFunctionParams: more blocks than inner levels");
    if (mid_lo > mid_hi || mid_lo < 0 || mid_hi > static_cast<int64_t>(n_l))
        throw InfeasibleError("HardFunctionParams: MID band empty or out of range");
}

} // namespace kmlab
