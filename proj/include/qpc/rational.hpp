#pragma once

// Exact scalars. GMP-backed big integers and rationals; mpq values are kept
// in lowest terms with a positive denominator by the backend.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "qpc/errors.hpp"

namespace qpc {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Largest integer <= q.
inline BigInt floor(const Rational& q) {
    BigInt n = num(q), d = den(q);
    BigInt f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

/// Smallest integer >= q.
inline BigInt ceil(const Rational& q) {
    BigInt n = num(q), d = den(q);
    BigInt c = n / d;
    if (n > 0 && c * d != n) c += 1;
    return c;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = gcd(a, b);
    BigInt r = (a / g) * b;
    return r < 0 ? BigInt(-r) : r;
}

/// Mathematical modulus: result in [0, m) for m > 0.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

inline Rational make_rational(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

/// `num/den`, or just `num` for integers.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

/// Parses `int` or `int/posint`. Surrounding whitespace is ignored.
/// Throws ParseError with an offset relative to `text`.
inline Rational parse_rational(std::string_view text, std::size_t base_offset = 0) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](bool allow_sign) -> std::string {
        skip_ws();
        std::string digits;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            if (text[pos] == '-') digits.push_back('-');
            ++pos;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits.push_back(text[pos++]);
        if (pos == start) throw ParseError("expected integer", base_offset + pos);
        return digits;
    };
    BigInt n(read_int(true));
    BigInt d(1);
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        d = BigInt(read_int(false));
        if (d == 0) throw ParseError("zero denominator", base_offset + pos);
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected character", base_offset + pos);
    return Rational(n, d);
}

}  // namespace qpc
