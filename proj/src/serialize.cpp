#include "kmlab/serialize.hpp"

#include <fstream>

namespace kmlab {

namespace {

char nibble_char(unsigned v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

unsigned nibble_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ConfigError("hex: invalid character");
}

} // namespace

std::string bits_to_hex(const std::vector<uint64_t>& words, uint64_t bit_count) {
    const uint64_t nibbles = (bit_count + 3) / 4;
    std::string out(nibbles, '0');
    for (uint64_t i = 0; i < nibbles; ++i) {
        const uint64_t word = i / 16;
        const unsigned v = word < words.size()
                               ? static_cast<unsigned>((words[word] >> ((i % 16) * 4)) & 0xF)
                               : 0u;
        out[nibbles - 1 - i] = nibble_char(v);
    }
    return out;
}

std::vector<uint64_t> hex_to_bits(const std::string& hex, uint64_t bit_count) {
    const uint64_t nibbles = (bit_count + 3) / 4;
    if (hex.size() != nibbles) throw ConfigError("hex: wrong length for bit count");
    std::vector<uint64_t> words((bit_count + 63) / 64, 0);
    for (uint64_t i = 0; i < nibbles; ++i) {
        const auto v = static_cast<uint64_t>(nibble_value(hex[nibbles - 1 - i]));
        words[i / 16] |= v << ((i % 16) * 4);
    }
    const uint64_t rest = bit_count % 64;
    if (rest && !words.empty()) {
        if (words.back() & ~((uint64_t{1} << rest) - 1))
            throw ConfigError("hex: bits set beyond declared count");
    }
    return words;
}

json rational_to_json(const Rational& r) {
    return json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()},
                {"approx", to_double(r)}};
}

json point_to_json(const Point& p) {
    return json{{"n", p.dimension()}, {"bits", bits_to_hex(p.words(), p.dimension())}};
}

Point point_from_json(const json& j) {
    const auto n = j.at("n").get<uint32_t>();
    Point p(n);
    p.words() = hex_to_bits(j.at("bits").get<std::string>(), n);
    return p;
}

json chain_to_json(const Chain& c) {
    json flips = json::array();
    for (uint32_t f : c.flips()) flips.push_back(f + 1);  // 1-indexed on the wire
    return json{{"n", c.dimension()}, {"start", point_to_json(c.start())}, {"flips", flips}};
}

Chain chain_from_json(const json& j) {
    Point start = point_from_json(j.at("start"));
    std::vector<uint32_t> flips;
    for (const auto& f : j.at("flips")) {
        const auto v = f.get<uint32_t>();
        if (v == 0) throw ConfigError("chain: flip indices are 1-based");
        flips.push_back(v - 1);
    }
    return Chain(std::move(start), std::move(flips));
}

json profile_to_json(const LevelProfile& p) {
    return json{{"n", p.n}, {"values", p.values}};
}

LevelProfile profile_from_json(const json& j) {
    return LevelProfile(j.at("n").get<uint32_t>(), j.at("values").get<std::vector<uint8_t>>());
}

json permutation_to_json(const Permutation& s) {
    json img = json::array();
    for (uint32_t i = 0; i < s.dimension(); ++i) img.push_back(s(i) + 1);
    return img;
}

Permutation permutation_from_json(const json& j) {
    std::vector<uint32_t> img;
    for (const auto& v : j) {
        const auto x = v.get<uint32_t>();
        if (x == 0) throw ConfigError("permutation: image is 1-based");
        img.push_back(x - 1);
    }
    return Permutation(std::move(img));
}

json params_to_json(const HardFunctionParams& p) {
    return json{{"n", p.n},
                {"k", p.k},
                {"s", p.s},
                {"r", p.r},
                {"n_L", p.n_l},
                {"n_R", p.n_r},
                {"mid_width", p.mid_width},
                {"mid_lo", p.mid_lo},
                {"mid_hi", p.mid_hi},
                {"blocks", p.blocks},
                {"parity_variant", p.parity == HardFunctionParams::Parity::even ? "even" : "odd"},
                {"c_split", p.c_split},
                {"c_mid", p.c_mid}};
}

HardFunctionParams params_from_json(const json& j) {
    HardFunctionParams p;
    p.n = j.at("n").get<uint64_t>();
    p.k = j.at("k").get<uint32_t>();
    p.s = j.at("s").get<uint32_t>();
    p.r = j.value("r", static_cast<double>(p.s) / p.k);
    p.n_l = j.at("n_L").get<uint64_t>();
    p.n_r = j.at("n_R").get<uint64_t>();
    p.mid_width = j.at("mid_width").get<double>();
    p.blocks = j.at("blocks").get<uint32_t>();
    const std::string parity = j.value("parity_variant", p.k % 2 == 0 ? "even" : "odd");
    if (parity == "even") p.parity = HardFunctionParams::Parity::even;
    else if (parity == "odd") p.parity = HardFunctionParams::Parity::odd;
    else throw ConfigError("params: parity_variant must be even or odd");
    p.c_split = j.value("c_split", 625.0);
    p.c_mid = j.value("c_mid", 100.0);
    if (j.contains("mid_lo")) {
        p.mid_lo = j.at("mid_lo").get<int64_t>();
        p.mid_hi = j.at("mid_hi").get<int64_t>();
    } else {
        p.resolve_band();
    }
    p.validate();
    return p;
}

json spec_to_json(const FunctionSpec& f) {
    json payload;
    std::string kind;
    switch (f.kind()) {
        case FunctionSpec::Kind::truth_table:
            kind = "truth_table";
            payload = json{{"bits", bits_to_hex(f.table(), uint64_t{1} << f.dimension())}};
            break;
        case FunctionSpec::Kind::symmetric:
            kind = "symmetric";
            payload = json{{"values", f.profile().values}};
            break;
        case FunctionSpec::Kind::two_part:
            kind = "two_part";
            payload = json{{"params", params_to_json(f.params())},
                           {"inner_profile", f.profile().values}};
            break;
        case FunctionSpec::Kind::permuted:
            kind = "permuted";
            payload = json{{"inner", spec_to_json(f.inner())},
                           {"sigma", permutation_to_json(f.sigma())}};
            break;
    }
    return json{{"kind", kind}, {"n", f.dimension()}, {"payload", payload}};
}

FunctionSpec spec_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    const auto n = j.at("n").get<uint32_t>();
    const json& payload = j.at("payload");
    if (kind == "truth_table") {
        if (n > kMaxTableDimension) throw ConfigError("spec: truth_table requires n <= 24");
        return FunctionSpec::truth_table(
            n, hex_to_bits(payload.at("bits").get<std::string>(), uint64_t{1} << n));
    }
    if (kind == "symmetric") {
        return FunctionSpec::symmetric(
            LevelProfile(n, payload.at("values").get<std::vector<uint8_t>>()));
    }
    if (kind == "two_part") {
        HardFunctionParams params = params_from_json(payload.at("params"));
        if (params.n != n) throw ConfigError("spec: two_part params dimension mismatch");
        return FunctionSpec::two_part(
            params, LevelProfile(static_cast<uint32_t>(params.n_r),
                                 payload.at("inner_profile").get<std::vector<uint8_t>>()));
    }
    if (kind == "permuted") {
        FunctionSpec inner = spec_from_json(payload.at("inner"));
        return FunctionSpec::permuted(std::move(inner),
                                      permutation_from_json(payload.at("sigma")));
    }
    throw ConfigError("spec: unknown kind '" + kind + "'");
}

json tuple_to_json(const ViolationTuple& t) {
    json pts = json::array();
    for (const Point& p : t.points) pts.push_back(point_to_json(p));
    return json{{"points", pts}, {"values", t.values}};
}

ViolationTuple tuple_from_json(const json& j) {
    ViolationTuple t;
    for (const auto& p : j.at("points")) t.points.push_back(point_from_json(p));
    t.values = j.at("values").get<std::vector<uint8_t>>();
    t.validate();
    return t;
}

json certificate_to_json(const MatchingCertificate& c) {
    json tuples = json::array();
    for (const auto& t : c.tuples) tuples.push_back(tuple_to_json(t));
    return json{{"target_k", c.target_k},
                {"bound", rational_to_json(c.bound)},
                {"tuple_count", c.tuples.size()},
                {"forced_flips", c.forced_flips},
                {"tuples", tuples}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

} // namespace kmlab
