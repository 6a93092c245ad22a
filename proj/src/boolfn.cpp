#include "kmlab/boolfn.hpp"

#include <algorithm>
#include <numeric>

namespace kmlab {

Permutation::Permutation(std::vector<uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (uint32_t v : image_) {
        if (v >= image_.size() || seen[v]) throw ConfigError("Permutation: image is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(uint32_t n) {
    std::vector<uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    return Permutation(std::move(img));
}

Permutation Permutation::random(uint32_t n, Xoshiro256& rng) {
    std::vector<uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    shuffle(img, rng);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> inv(image_.size());
    for (uint32_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

Point Permutation::apply(const Point& p) const {
    if (p.dimension() != dimension()) throw ConfigError("Permutation::apply: dimension mismatch");
    Point out(dimension());
    for (uint32_t i = 0; i < dimension(); ++i)
        if (p.get(image_[i])) out.set(i, true);
    return out;
}

FunctionSpec FunctionSpec::truth_table(uint32_t n, std::vector<uint64_t> bits) {
    if (n == 0 || n > kMaxTableDimension) throw ConfigError("truth_table: n out of range");
    const size_t words = (size_t{1} << n) <= 64 ? 1 : ((size_t{1} << n) / 64);
    if (bits.size() != words) throw ConfigError("truth_table: wrong table size");
    if (n < 6) bits[0] &= (uint64_t{1} << (uint64_t{1} << n)) - 1;
    FunctionSpec f;
    f.kind_ = Kind::truth_table;
    f.n_ = n;
    f.table_ = std::move(bits);
    return f;
}

FunctionSpec FunctionSpec::symmetric(LevelProfile profile) {
    if (profile.n == 0 || profile.n > kMaxOracleDimension)
        throw ConfigError("symmetric: n out of range");
    FunctionSpec f;
    f.kind_ = Kind::symmetric;
    f.n_ = profile.n;
    f.profile_ = std::move(profile);
    return f;
}

FunctionSpec FunctionSpec::two_part(HardFunctionParams params, LevelProfile inner) {
    params.validate();
    if (inner.n != params.n_r) throw ConfigError("two_part: inner profile dimension != n_R");
    if (params.n > kMaxOracleDimension) throw ConfigError("two_part: n out of range");
    FunctionSpec f;
    f.kind_ = Kind::two_part;
    f.n_ = static_cast<uint32_t>(params.n);
    f.params_ = params;
    f.profile_ = std::move(inner);
    return f;
}

FunctionSpec FunctionSpec::permuted(FunctionSpec inner, Permutation sigma) {
    if (inner.dimension() != sigma.dimension()) throw ConfigError("permuted: dimension mismatch");
    FunctionSpec f;
    f.kind_ = Kind::permuted;
    f.n_ = inner.dimension();
    f.inner_ = std::make_shared<const FunctionSpec>(std::move(inner));
    f.sigma_ = std::make_shared<const Permutation>(std::move(sigma));
    return f;
}

namespace {

int two_part_value(const HardFunctionParams& p, uint64_t l_weight, uint64_t r_weight,
                   const LevelProfile& inner) {
    if (p.in_band(l_weight)) return inner.values[r_weight];
    if (p.parity == HardFunctionParams::Parity::odd &&
        static_cast<int64_t>(l_weight) > p.mid_hi)
        return 1;
    return 0;
}

} // namespace

int FunctionSpec::value(const Point& p) const {
    if (p.dimension() != n_) throw ConfigError("FunctionSpec::value: dimension mismatch");
    switch (kind_) {
        case Kind::truth_table:
            return table_bit(p.index());
        case Kind::symmetric:
            return profile_.values[p.weight()];
        case Kind::two_part: {
            const uint32_t a = p.weight_prefix(static_cast<uint32_t>(params_.n_l));
            const uint32_t b = p.weight() - a;
            return two_part_value(params_, a, b, profile_);
        }
        case Kind::permuted:
            return inner_->value(sigma_->apply(p));
    }
    return 0;
}

int evaluate(const FunctionSpec& f, const Point& p, QueryLedger& ledger) {
    const int v = f.value(p);
    ledger.record(p);
    return v;
}

FunctionSpec compose_permutation(const FunctionSpec& f, const Permutation& sigma) {
    if (f.dimension() != sigma.dimension())
        throw ConfigError("compose_permutation: dimension mismatch");
    return FunctionSpec::permuted(f, sigma);
}

FunctionSpec materialize(const FunctionSpec& f) {
    const uint32_t n = f.dimension();
    if (n > kMaxTableDimension) throw InfeasibleError("materialize: n > 24");
    if (f.kind() == FunctionSpec::Kind::truth_table) return f;
    const uint64_t size = uint64_t{1} << n;
    std::vector<uint64_t> bits(std::max<uint64_t>(size / 64, 1), 0);
    for (uint64_t x = 0; x < size; ++x) {
        if (f.value(Point::from_index(n, x))) bits[x >> 6] |= uint64_t{1} << (x & 63);
    }
    return FunctionSpec::truth_table(n, std::move(bits));
}

Rational hamming_distance(const FunctionSpec& f, const FunctionSpec& g) {
    if (f.dimension() != g.dimension()) throw ConfigError("hamming_distance: dimension mismatch");
    if (f.dimension() > kMaxTableDimension) throw InfeasibleError("hamming_distance: n > 24");
    const FunctionSpec ft = materialize(f);
    const FunctionSpec gt = materialize(g);
    uint64_t diff = 0;
    for (size_t i = 0; i < ft.table().size(); ++i)
        diff += std::popcount(ft.table()[i] ^ gt.table()[i]);
    return Rational(BigInt(diff), BigInt(1) << f.dimension());
}

bool FunctionSpec::operator==(const FunctionSpec& o) const {
    if (kind_ != o.kind_ || n_ != o.n_) return false;
    switch (kind_) {
        case Kind::truth_table: return table_ == o.table_;
        case Kind::symmetric: return profile_ == o.profile_;
        case Kind::two_part: return params_ == o.params_ && profile_ == o.profile_;
        case Kind::permuted: return *sigma_ == *o.sigma_ && *inner_ == *o.inner_;
    }
    return false;
}

ChainValueWalker::ChainValueWalker(const FunctionSpec& f) : f_(&f) {
    if (f.kind() == FunctionSpec::Kind::permuted) {
        inner_ = std::make_unique<ChainValueWalker>(f.inner());
        inv_sigma_ = f.sigma().inverse().image();
    }
}

int ChainValueWalker::reset(const Point& start) {
    switch (f_->kind()) {
        case FunctionSpec::Kind::truth_table:
            index_ = start.index();
            current_ = f_->table_bit(index_);
            break;
        case FunctionSpec::Kind::symmetric:
            level_ = start.weight();
            current_ = f_->profile().values[level_];
            break;
        case FunctionSpec::Kind::two_part:
            a_ = start.weight_prefix(static_cast<uint32_t>(f_->params().n_l));
            b_ = start.weight() - a_;
            current_ = two_part_value(f_->params(), a_, b_, f_->profile());
            break;
        case FunctionSpec::Kind::permuted:
            current_ = inner_->reset(f_->sigma().apply(start));
            break;
    }
    return current_;
}

int ChainValueWalker::step(uint32_t coord) {
    switch (f_->kind()) {
        case FunctionSpec::Kind::truth_table:
            index_ |= uint64_t{1} << coord;
            current_ = f_->table_bit(index_);
            break;
        case FunctionSpec::Kind::symmetric:
            current_ = f_->profile().values[++level_];
            break;
        case FunctionSpec::Kind::two_part:
            if (coord < f_->params().n_l) ++a_; else ++b_;
            current_ = two_part_value(f_->params(), a_, b_, f_->profile());
            break;
        case FunctionSpec::Kind::permuted:
            current_ = inner_->step(inv_sigma_[coord]);
            break;
    }
    return current_;
}

} // namespace kmlab
