#pragma once

#include <nlohmann/json.hpp>

#include "kmlab/analysis.hpp"
#include "kmlab/boolfn.hpp"
#include "kmlab/chain.hpp"
#include "kmlab/generators.hpp"
#include "kmlab/kmono.hpp"
#include "kmlab/testers.hpp"

// JSON wire formats. Conventions, frozen by golden tests:
//   - bitstrings are hex numerals (MSB nibble first, zero-padded), with
//     coordinate 1 / table index bit 0 as the least significant bit;
//   - coordinates and permutation images are 1-indexed on the wire;
//   - rationals carry exact num/den decimal strings plus a double approx.

namespace kmlab {

using json = nlohmann::ordered_json;

std::string bits_to_hex(const std::vector<uint64_t>& words, uint64_t bit_count);
std::vector<uint64_t> hex_to_bits(const std::string& hex, uint64_t bit_count);

json rational_to_json(const Rational& r);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j);

json profile_to_json(const LevelProfile& p);
LevelProfile profile_from_json(const json& j);

json permutation_to_json(const Permutation& s);
Permutation permutation_from_json(const json& j);

json params_to_json(const HardFunctionParams& p);
HardFunctionParams params_from_json(const json& j);

json spec_to_json(const FunctionSpec& f);
FunctionSpec spec_from_json(const json& j);

json tuple_to_json(const ViolationTuple& t);
ViolationTuple tuple_from_json(const json& j);

json certificate_to_json(const MatchingCertificate& c);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace kmlab
