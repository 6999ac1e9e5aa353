#pragma once

#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "lclab/errors.hpp"

namespace lclab {

/// ordered_json keeps insertion order, which makes emitted files byte-stable
/// for a given seed and parameter set.
using json = nlohmann::ordered_json;

/// Integers cross the JSON boundary as lowercase hex strings with an "0x"
/// prefix ("-0x..." for negatives).
inline std::string to_hex(const mpz_class& v) {
    if (v < 0) return "-0x" + mpz_class(-v).get_str(16);
    return "0x" + v.get_str(16);
}

inline mpz_class from_hex(const std::string& s) {
    bool neg = !s.empty() && s[0] == '-';
    const std::string body = neg ? s.substr(1) : s;
    if (body.size() < 3 || body[0] != '0' || (body[1] != 'x' && body[1] != 'X'))
        throw ParseError("expected 0x-prefixed hex integer, got '" + s + "'");
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), body.c_str() + 2, 16) != 0)
        throw ParseError("bad hex integer '" + s + "'");
    return neg ? mpz_class(-v) : v;
}

inline const json& require_key(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing key '" + key + "'");
    return *it;
}

} // namespace lclab
