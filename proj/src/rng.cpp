#include "kmlab/rng.hpp"

#include <algorithm>
#include <unordered_set>

#include "kmlab/errors.hpp"

namespace kmlab {

std::vector<uint32_t> sample_index_subset(uint64_t n, uint64_t m, Xoshiro256& rng) {
    if (m > n) throw ConfigError("sample_index_subset: m > n");
    std::vector<uint32_t> out;
    out.reserve(m);
    std::unordered_set<uint64_t> chosen;
    chosen.reserve(m * 2);
    for (uint64_t j = n - m; j < n; ++j) {
        const uint64_t t = rng.below(j + 1);
        if (chosen.insert(t).second) {
            out.push_back(static_cast<uint32_t>(t));
        } else {
            chosen.insert(j);
            out.push_back(static_cast<uint32_t>(j));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kmlab
