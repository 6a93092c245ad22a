#include "kmlab/kmono.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace kmlab {

void ViolationTuple::validate() const {
    if (points.empty() || points.size() != values.size())
        throw ConfigError("ViolationTuple: empty or mismatched points/values");
    if (values.front() != 1) throw ConfigError("ViolationTuple: must start with value 1");
    for (size_t i = 1; i < points.size(); ++i) {
        if (comparable(points[i - 1], points[i]) != Ordering::less)
            throw ConfigError("ViolationTuple: points not strictly ascending");
        if (values[i] == values[i - 1]) throw ConfigError("ViolationTuple: values must alternate");
    }
}

uint32_t alternation_index(std::span<const uint8_t> values) {
    uint32_t len = 0;
    uint8_t last = 0;
    for (uint8_t v : values) {
        if (len == 0) {
            if (v == 1) { len = 1; last = 1; }
        } else if (v != last) {
            ++len;
            last = v;
        }
    }
    return len;
}

std::vector<size_t> greedy_alternating_positions(std::span<const uint8_t> values) {
    std::vector<size_t> pos;
    uint8_t last = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        if (pos.empty()) {
            if (values[i] == 1) { pos.push_back(i); last = 1; }
        } else if (values[i] != last) {
            pos.push_back(i);
            last = values[i];
        }
    }
    return pos;
}

uint32_t monotonicity_index(const FunctionSpec& f) {
    const FunctionSpec table = materialize(f);
    const uint32_t n = table.dimension();
    const uint64_t size = uint64_t{1} << n;
    // e1/e0: longest alternating-from-1 sequence ending at or below the point
    // with last value 1/0
    std::vector<uint8_t> e1(size, 0), e0(size, 0);
    for (uint64_t p = 0; p < size; ++p) {
        uint8_t pred1 = 0, pred0 = 0;
        uint64_t bits = p;
        while (bits) {
            const uint64_t q = p & ~(bits & (0 - bits));
            bits &= bits - 1;
            pred1 = std::max(pred1, e1[q]);
            pred0 = std::max(pred0, e0[q]);
        }
        if (table.table_bit(p)) {
            e1[p] = std::max<uint8_t>(pred1, pred0 + 1);  // extend a 0-ending sequence or start fresh
            e0[p] = pred0;
        } else {
            e0[p] = pred1 >= 1 ? std::max<uint8_t>(pred0, pred1 + 1) : pred0;
            e1[p] = pred1;
        }
    }
    return std::max(e1[size - 1], e0[size - 1]);
}

std::optional<ViolationTuple> chain_violation(const FunctionSpec& f, const Chain& z,
                                              uint32_t k, QueryLedger& ledger) {
    if (f.dimension() != z.dimension()) throw ConfigError("chain_violation: dimension mismatch");

    std::vector<uint8_t> values(z.length());
    ChainValueWalker walker(f);
    if (ledger.log_points) {
        // slow path: materialize every queried point into the log
        Point p = z.start();
        values[0] = static_cast<uint8_t>(walker.reset(p));
        ledger.record(p);
        for (size_t i = 0; i < z.flips().size(); ++i) {
            p.set(z.flips()[i], true);
            values[i + 1] = static_cast<uint8_t>(walker.step(z.flips()[i]));
            ledger.record(p);
        }
    } else {
        values[0] = static_cast<uint8_t>(walker.reset(z.start()));
        for (size_t i = 0; i < z.flips().size(); ++i)
            values[i + 1] = static_cast<uint8_t>(walker.step(z.flips()[i]));
        ledger.count += z.length();
    }

    const std::vector<size_t> pos = greedy_alternating_positions(values);
    if (pos.size() < static_cast<size_t>(k) + 1) return std::nullopt;

    ViolationTuple tuple;
    Point p = z.start();
    size_t next_flip = 0;
    for (size_t i = 0; i <= static_cast<size_t>(k); ++i) {
        while (next_flip < pos[i]) p.set(z.flips()[next_flip++], true);
        tuple.points.push_back(p);
        tuple.values.push_back(values[pos[i]]);
    }
    return tuple;
}

uint32_t min_flips_to_reduce(std::span<const uint8_t> values, uint32_t k) {
    const size_t m = values.size();
    if (m > 16) throw ConfigError("min_flips_to_reduce: length > 16");
    if (alternation_index(values) <= k) return 0;
    uint32_t best = static_cast<uint32_t>(m);
    std::vector<uint8_t> flipped(m);
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        if (static_cast<uint32_t>(std::popcount(mask)) >= best) continue;
        for (size_t i = 0; i < m; ++i)
            flipped[i] = values[i] ^ ((mask >> i) & 1);
        if (alternation_index(flipped) <= k)
            best = static_cast<uint32_t>(std::popcount(mask));
    }
    return best;
}

MatchingCertificate matching_lower_bound(const FunctionSpec& f, uint32_t k) {
    const FunctionSpec table = materialize(f);
    const uint32_t n = table.dimension();
    MatchingCertificate cert;
    cert.target_k = k;
    BigInt forced_total = 0;

    const ChainDecomposition dec = symmetric_chain_decomposition(n);
    std::vector<uint8_t> values;
    for (const Chain& chain : dec.chains) {
        values.resize(chain.length());
        uint64_t idx = chain.start().index();
        values[0] = static_cast<uint8_t>(table.table_bit(idx));
        for (size_t i = 0; i < chain.flips().size(); ++i) {
            idx |= uint64_t{1} << chain.flips()[i];
            values[i + 1] = static_cast<uint8_t>(table.table_bit(idx));
        }
        const std::vector<size_t> pos = greedy_alternating_positions(values);
        const auto m = static_cast<uint32_t>(pos.size());
        if (m < k + 1) continue;

        ViolationTuple tuple;
        Point p = chain.start();
        size_t next_flip = 0;
        for (size_t i = 0; i < pos.size(); ++i) {
            while (next_flip < pos[i]) p.set(chain.flips()[next_flip++], true);
            tuple.points.push_back(p);
            tuple.values.push_back(values[pos[i]]);
        }
        const uint32_t forced = (m - k + 1) / 2;  // ceil((m-k)/2)
        if (m <= 16 && min_flips_to_reduce(tuple.values, k) != forced)
            throw std::logic_error("matching_lower_bound: forced-flip formula disagrees with brute force");
        cert.tuples.push_back(std::move(tuple));
        cert.forced_flips.push_back(forced);
        forced_total += forced;
    }
    cert.bound = Rational(forced_total, BigInt(1) << n);
    return cert;
}

SymmetricDistance symmetric_distance(const LevelProfile& profile, uint32_t k) {
    const uint32_t n = profile.n;
    const size_t states = static_cast<size_t>(k) + 1;
    const BigInt unset = -1;
    std::vector<BigInt> cur(states, unset), nxt(states, unset);
    // choice[level][state]: chosen bit and predecessor state, for backtracking
    std::vector<std::vector<std::pair<uint8_t, uint8_t>>> choice(
        n + 1, std::vector<std::pair<uint8_t, uint8_t>>(states, {0, 0}));

    cur[0] = 0;
    BigInt level_mass = 1;  // binom(n, 0)
    for (uint32_t lv = 0; lv <= n; ++lv) {
        std::fill(nxt.begin(), nxt.end(), unset);
        for (size_t sig = 0; sig < states; ++sig) {
            if (cur[sig] < 0) continue;
            for (uint8_t u = 0; u < 2; ++u) {
                size_t sig2;
                if (sig == 0) sig2 = (u == 1) ? 1 : 0;
                else if ((sig % 2 == 1 && u == 0) || (sig % 2 == 0 && u == 1)) sig2 = sig + 1;
                else sig2 = sig;
                if (sig2 > k) continue;
                const BigInt cost = cur[sig] + (u != profile.values[lv] ? level_mass : BigInt(0));
                if (nxt[sig2] < 0 || cost < nxt[sig2]) {
                    nxt[sig2] = cost;
                    choice[lv][sig2] = {u, static_cast<uint8_t>(sig)};
                }
            }
        }
        std::swap(cur, nxt);
        if (lv < n) level_mass = level_mass * (n - lv) / (lv + 1);
    }

    size_t best_sig = 0;
    BigInt best = unset;
    for (size_t sig = 0; sig < states; ++sig) {
        if (cur[sig] < 0) continue;
        if (best < 0 || cur[sig] < best) { best = cur[sig]; best_sig = sig; }
    }

    LevelProfile argmin(n, std::vector<uint8_t>(n + 1, 0));
    size_t sig = best_sig;
    for (int64_t lv = n; lv >= 0; --lv) {
        const auto [u, prev] = choice[lv][sig];
        argmin.values[lv] = u;
        sig = prev;
    }
    return {Rational(best, BigInt(1) << n), std::move(argmin)};
}

namespace {

// km for a function on n <= 4 variables given as a packed table
uint32_t km_small(uint32_t n, uint32_t bits) {
    const uint32_t size = 1u << n;
    uint8_t e1[16] = {0}, e0[16] = {0};
    uint32_t best = 0;
    for (uint32_t p = 0; p < size; ++p) {
        uint8_t pred1 = 0, pred0 = 0;
        uint32_t rest = p;
        while (rest) {
            const uint32_t q = p & ~(rest & (0 - rest));
            rest &= rest - 1;
            pred1 = std::max(pred1, e1[q]);
            pred0 = std::max(pred0, e0[q]);
        }
        if ((bits >> p) & 1) {
            e1[p] = std::max<uint8_t>(pred1, pred0 + 1);
            e0[p] = pred0;
        } else {
            e0[p] = pred1 >= 1 ? std::max<uint8_t>(pred0, pred1 + 1) : pred0;
            e1[p] = pred1;
        }
        best = std::max<uint32_t>(best, std::max(e0[p], e1[p]));
    }
    return best;
}

const std::vector<uint8_t>& km_cache(uint32_t n) {
    static std::mutex mu;
    static std::vector<uint8_t> cache[5];
    std::lock_guard<std::mutex> lock(mu);
    auto& c = cache[n];
    if (c.empty()) {
        const uint64_t tables = uint64_t{1} << (uint64_t{1} << n);
        c.resize(tables);
        for (uint64_t g = 0; g < tables; ++g)
            c[g] = static_cast<uint8_t>(km_small(n, static_cast<uint32_t>(g)));
    }
    return c;
}

} // namespace

Rational exact_distance_small(const FunctionSpec& f, uint32_t k) {
    const uint32_t n = f.dimension();
    if (n > 4) throw ConfigError("exact_distance_small: n > 4");
    const FunctionSpec table = materialize(f);
    const uint32_t size = 1u << n;
    const auto bits = static_cast<uint32_t>(table.table()[0]);
    const auto& km = km_cache(n);
    uint32_t best = size + 1;
    for (uint32_t g = 0; g < (1u << size); ++g) {
        if (km[g] > k) continue;
        best = std::min<uint32_t>(best, std::popcount(bits ^ g));
        if (best == 0) break;
    }
    return Rational(BigInt(best), BigInt(1) << n);
}

} // namespace kmlab
