// Exact rational arithmetic for density and bound computations.
// Thin helpers over boost::rational; comparisons at tolerance boundaries
// must not depend on floating-point rounding.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace patedit {

using Rational = boost::rational<std::int64_t>;

inline Rational rational_abs(const Rational& r) {
    return r < Rational(0) ? -r : r;
}

// "p/q" form, denominator always printed ("1/2", "3/1").
inline std::string to_fraction_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Integer form when exact ("675"), otherwise "p/q".
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return to_fraction_string(r);
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Parses "0.25", ".5", "3", or "p/q" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den))
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
        std::int64_t p = std::stoll(std::string(num));
        std::int64_t q = std::stoll(std::string(den));
        if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        return Rational(p, q);
    }
    std::string_view whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        whole = text.substr(0, dot);
        frac = text.substr(dot + 1);
        if (frac.size() > 15)
            throw std::invalid_argument("too many fractional digits: " + std::string(text));
    }
    if (!whole.empty() && !is_digits(whole))
        throw std::invalid_argument("malformed decimal literal: " + std::string(text));
    if (!frac.empty() && !is_digits(frac))
        throw std::invalid_argument("malformed decimal literal: " + std::string(text));
    if (whole.empty() && frac.empty())
        throw std::invalid_argument("malformed decimal literal: " + std::string(text));
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t w = whole.empty() ? 0 : std::stoll(std::string(whole));
    std::int64_t f = frac.empty() ? 0 : std::stoll(std::string(frac));
    return Rational(w * den + f, den);
}

}  // namespace patedit
