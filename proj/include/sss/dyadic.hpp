#pragma once

#include <cstdint>

#include "sss/universal.hpp"

namespace sss {

/// Exact rational with gcd-normalized representation, positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.num * b.den <=> b.num * a.den;
    }

    std::string str() const;  // "2/3", integers as "0", "1"
};

/// Value in [0,1] of an address over the two-object interval system with
/// elements e, p0, ph, p1, lo, hi: lo/hi are the binary digits, p0/ph/p1 pin
/// the infimum, midpoint and supremum of the interval reached so far.
/// Addresses anchored at the point object decode to 0.
Rational decode_dyadic(const PeriodicAddress& t);

}  // namespace sss
