#include "kmlab/testers.hpp"

#include <algorithm>
#include <set>

namespace kmlab {

TesterReport chain_tester(const FunctionSpec& f, uint32_t k, uint64_t num_chains,
                          Xoshiro256& rng, QueryLedger& ledger, uint64_t seed_label) {
    if (num_chains == 0) throw ConfigError("chain_tester: num_chains must be >= 1");
    TesterReport report;
    report.seed = seed_label;
    for (uint64_t i = 0; i < num_chains; ++i) {
        const Chain z = sample_uniform_chain(f.dimension(), rng);
        report.queries += z.length();
        ++report.chains_used;
        if (auto witness = chain_violation(f, z, k, ledger)) {
            report.decision = TesterReport::Decision::reject;
            report.witness = std::move(witness);
            return report;
        }
    }
    report.decision = TesterReport::Decision::accept;
    return report;
}

QuerySetSource fixed_query_source(std::vector<Point> points) {
    return [points = std::move(points)](Xoshiro256&) { return points; };
}

uint64_t query_budget(uint32_t q, uint32_t k, uint32_t n) {
    if (q < k + 1) throw ConfigError("query_budget: need q >= k+1");
    return binom_u64(q, k + 1) * (static_cast<uint64_t>(n) + 1);
}

bool point_numeric_less(const Point& a, const Point& b) {
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (size_t i = wa.size(); i-- > 0;) {
        if (wa[i] != wb[i]) return wa[i] < wb[i];
    }
    return false;
}

std::vector<std::vector<size_t>> CanonicalTransform::comparable_tuples(std::vector<Point> points,
                                                                       uint32_t k) {
    // dedupe, then sort numerically; dominance implies numeric order, so every
    // ascending tuple appears as an increasing index sequence
    std::sort(points.begin(), points.end(), point_numeric_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const size_t m = points.size();
    const size_t len = static_cast<size_t>(k) + 1;
    std::vector<std::vector<size_t>> tuples;
    if (m < len) return tuples;

    std::vector<char> less(m * m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            less[i * m + j] = comparable(points[i], points[j]) == Ordering::less;

    std::vector<size_t> idx(len);
    // lexicographic enumeration of index combinations, pruned on comparability
    std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t from) {
        if (depth == len) {
            tuples.push_back(idx);
            return;
        }
        for (size_t i = from; i + (len - depth) <= m; ++i) {
            if (depth > 0 && !less[idx[depth - 1] * m + i]) continue;
            idx[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return tuples;
}

CanonicalTransform::CanonicalTransform(QuerySetSource source, uint32_t q, uint32_t k)
    : source_(std::move(source)), q_(q), k_(k) {
    if (q < k + 1) throw ConfigError("CanonicalTransform: need q >= k+1");
}

TesterReport CanonicalTransform::run_impl(const FunctionSpec& f, bool conjugate, Xoshiro256& rng,
                                          QueryLedger& ledger, uint64_t seed_label) const {
    const uint32_t n = f.dimension();
    TesterReport report;
    report.seed = seed_label;

    const Permutation sigma =
        conjugate ? Permutation::random(n, rng) : Permutation::identity(n);
    std::vector<Point> points = source_(rng);
    if (points.size() > q_) throw ConfigError("CanonicalTransform: source emitted more than q points");
    for (Point& p : points) {
        if (p.dimension() != n) throw ConfigError("CanonicalTransform: query dimension mismatch");
        if (conjugate) p = sigma.apply(p);
    }

    std::sort(points.begin(), points.end(), point_numeric_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const auto tuples = comparable_tuples(points, k_);

    std::set<std::vector<uint32_t>> seen;  // chains dedup: identical flip orders queried once
    for (const auto& tuple_idx : tuples) {
        std::vector<Point> through;
        through.reserve(tuple_idx.size());
        for (size_t i : tuple_idx) through.push_back(points[i]);
        Chain z = sample_chain_through(through, rng);
        if (!seen.insert(z.flips()).second) continue;
        report.queries += z.length();
        ++report.chains_used;
        if (auto witness = chain_violation(f, z, k_, ledger)) {
            report.decision = TesterReport::Decision::reject;
            report.witness = std::move(witness);
            return report;
        }
    }
    report.decision = TesterReport::Decision::accept;
    return report;
}

TesterReport CanonicalTransform::run(const FunctionSpec& f, Xoshiro256& rng, QueryLedger& ledger,
                                     uint64_t seed_label) const {
    return run_impl(f, true, rng, ledger, seed_label);
}

TesterReport CanonicalTransform::run_unconjugated(const FunctionSpec& f, Xoshiro256& rng,
                                                  QueryLedger& ledger, uint64_t seed_label) const {
    return run_impl(f, false, rng, ledger, seed_label);
}

} // namespace kmlab
