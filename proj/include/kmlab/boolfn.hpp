#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "kmlab/binom.hpp"
#include "kmlab/hard_params.hpp"
#include "kmlab/point.hpp"
#include "kmlab/rng.hpp"

namespace kmlab {

/// Value of a totally symmetric function at each Hamming level 0..n.
struct LevelProfile {
    uint32_t n = 0;
    std::vector<uint8_t> values;  // length n+1

    LevelProfile() = default;
    LevelProfile(uint32_t n_, std::vector<uint8_t> v) : n(n_), values(std::move(v)) {
        if (values.size() != static_cast<size_t>(n) + 1)
            throw ConfigError("LevelProfile: need n+1 values");
    }
    static LevelProfile constant(uint32_t n, uint8_t v) {
        return LevelProfile(n, std::vector<uint8_t>(n + 1, v));
    }
    friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

/// Bijection sigma on coordinates; pi_sigma sends (a_1..a_n) to (a_sigma(1)..a_sigma(n)).
/// Stored 0-based; serialized 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<uint32_t> image);
    static Permutation identity(uint32_t n);
    static Permutation random(uint32_t n, Xoshiro256& rng);

    uint32_t dimension() const { return static_cast<uint32_t>(image_.size()); }
    uint32_t operator()(uint32_t i) const { return image_[i]; }
    const std::vector<uint32_t>& image() const { return image_; }
    Permutation inverse() const;

    /// pi_sigma(p): coordinate i of the result is p[sigma(i)].
    Point apply(const Point& p) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<uint32_t> image_;
};

/// Per-run query counter; single-writer, never shared across workers.
struct QueryLedger {
    uint64_t count = 0;
    bool log_points = false;
    std::vector<Point> log;

    void record(const Point& p) {
        ++count;
        if (log_points) log.push_back(p);
    }
    void record_unlogged() { ++count; }
};

/// A Boolean function oracle. Truth tables are materialized bit arrays
/// (n <= 24, coordinate 1 = least significant index bit); symmetric and
/// two-part functions evaluate from Hamming weights only, so they scale to
/// the oracle dimension cap; permuted wraps any spec with a pi_sigma.
class FunctionSpec {
public:
    enum class Kind { truth_table, symmetric, two_part, permuted };

    static FunctionSpec truth_table(uint32_t n, std::vector<uint64_t> bits);
    static FunctionSpec symmetric(LevelProfile profile);
    static FunctionSpec two_part(HardFunctionParams params, LevelProfile inner);
    static FunctionSpec permuted(FunctionSpec inner, Permutation sigma);
    static FunctionSpec constant(uint32_t n, uint8_t v) {
        return symmetric(LevelProfile::constant(n, v));
    }

    Kind kind() const { return kind_; }
    uint32_t dimension() const { return n_; }

    /// f(p), without query accounting.
    int value(const Point& p) const;

    /// f at the table index (truth_table kind only).
    int table_bit(uint64_t index) const {
        return static_cast<int>((table_[index >> 6] >> (index & 63)) & 1);
    }

    const std::vector<uint64_t>& table() const { return table_; }
    const LevelProfile& profile() const { return profile_; }
    const HardFunctionParams& params() const { return params_; }
    const FunctionSpec& inner() const { return *inner_; }
    const Permutation& sigma() const { return *sigma_; }

    bool operator==(const FunctionSpec& o) const;

private:
    FunctionSpec() = default;

    Kind kind_ = Kind::symmetric;
    uint32_t n_ = 0;
    std::vector<uint64_t> table_;                  // truth_table
    LevelProfile profile_;                         // symmetric; two_part inner profile
    HardFunctionParams params_;                    // two_part
    std::shared_ptr<const FunctionSpec> inner_;    // permuted
    std::shared_ptr<const Permutation> sigma_;     // permuted
};

/// Queries f at p: returns the bit and charges exactly one query.
int evaluate(const FunctionSpec& f, const Point& p, QueryLedger& ledger);

/// Spec computing f(pi_sigma(x)).
FunctionSpec compose_permutation(const FunctionSpec& f, const Permutation& sigma);

/// Truth-table spec agreeing with f on every point; requires n <= 24.
FunctionSpec materialize(const FunctionSpec& f);

/// Normalized Hamming distance; requires matching dimensions, n <= 24.
Rational hamming_distance(const FunctionSpec& f, const FunctionSpec& g);

/// Incremental evaluator along an ascending chain: reset to the chain start,
/// then step() per coordinate flip. O(1) per step for every kind, which keeps
/// chain walks at large n linear instead of quadratic.
class ChainValueWalker {
public:
    explicit ChainValueWalker(const FunctionSpec& f);

    /// Returns f(start).
    int reset(const Point& start);

    /// Flips `coord` from 0 to 1; returns f at the new point.
    int step(uint32_t coord);

private:
    const FunctionSpec* f_;
    uint64_t index_ = 0;                       // truth_table
    uint32_t level_ = 0;                       // symmetric
    uint64_t a_ = 0, b_ = 0;                   // two_part: L-weight, R-weight
    std::unique_ptr<ChainValueWalker> inner_;  // permuted
    std::vector<uint32_t> inv_sigma_;
    int current_ = 0;
};

} // namespace kmlab
