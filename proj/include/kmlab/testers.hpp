#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kmlab/boolfn.hpp"
#include "kmlab/chain.hpp"
#include "kmlab/kmono.hpp"

namespace kmlab {

struct TesterReport {
    enum class Decision { accept, reject };
    Decision decision = Decision::accept;
    uint64_t queries = 0;
    std::optional<ViolationTuple> witness;  // present iff reject (one-sidedness)
    uint64_t chains_used = 0;
    uint64_t seed = 0;
};

/// Queries all points on `num_chains` independent uniform full chains and
/// rejects on the first violation to k-monotonicity. One-sided: every f with
/// km(f) <= k is accepted on every seed.
TesterReport chain_tester(const FunctionSpec& f, uint32_t k, uint64_t num_chains,
                          Xoshiro256& rng, QueryLedger& ledger, uint64_t seed_label = 0);

/// A non-adaptive tester's query distribution: draws a set of at most q points
/// independently of any function values.
using QuerySetSource = std::function<std::vector<Point>(Xoshiro256&)>;

/// Source that always emits the same point set.
QuerySetSource fixed_query_source(std::vector<Point> points);

/// Worst-case query count of the transformed tester: binom(q, k+1) * (n+1).
uint64_t query_budget(uint32_t q, uint32_t k, uint32_t n);

/// Transformation of a q-query non-adaptive one-sided tester into a
/// chain-based tester: draw the query set, map it through a random coordinate
/// permutation, and for every ascending comparable (k+1)-tuple among the
/// mapped points sample a uniform chain through the tuple; reject iff some
/// chain reveals a violation. Each chain is marginally a uniform chain.
///
/// run_unconjugated exposes the intermediate tester (no permutation), whose
/// decisions also come only from chain violations.
class CanonicalTransform {
public:
    CanonicalTransform(QuerySetSource source, uint32_t q, uint32_t k);

    TesterReport run(const FunctionSpec& f, Xoshiro256& rng, QueryLedger& ledger,
                     uint64_t seed_label = 0) const;
    TesterReport run_unconjugated(const FunctionSpec& f, Xoshiro256& rng, QueryLedger& ledger,
                                  uint64_t seed_label = 0) const;

    uint32_t max_queries() const { return q_; }
    uint32_t order() const { return k_; }

    /// Ascending comparable (k+1)-tuples among deduplicated points, as index
    /// lists into the numerically sorted point array; enumeration order is
    /// lexicographic over the sorted indices (frozen for reproducibility).
    static std::vector<std::vector<size_t>> comparable_tuples(std::vector<Point> points,
                                                              uint32_t k);

private:
    TesterReport run_impl(const FunctionSpec& f, bool conjugate, Xoshiro256& rng,
                          QueryLedger& ledger, uint64_t seed_label) const;

    QuerySetSource source_;
    uint32_t q_;
    uint32_t k_;
};

/// Numeric order on points of one dimension (most significant word first);
/// subset dominance implies numeric order, so ascending tuples are sorted.
bool point_numeric_less(const Point& a, const Point& b);

} // namespace kmlab
