#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "eqloc/errors.hpp"

namespace eqloc {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1 and den > 0.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw ZeroDenominator("rational with zero denominator");
    return Rational(std::move(num)) / Rational(std::move(den));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Renders as "p/q" with "/1" omitted, e.g. "-2/3", "5".
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (!is_integer(q)) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

// Grammar: optional sign, digits, optional "/" digits.
inline Rational parse_rational(std::string_view text) {
    const std::string_view full = text;
    auto fail = [&]() -> Rational {
        throw ParseError("invalid rational '" + std::string(full) + "'");
    };

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!digits(num) || !digits(den)) fail();
    Integer d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in rational '" + std::string(full) + "'");
    Rational q = Rational(Integer{std::string(num)}) / Rational(d);
    return negative ? -q : q;
}

}  // namespace eqloc
