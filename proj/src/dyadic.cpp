#include "sss/dyadic.hpp"

#include <numeric>
#include <stdexcept>

namespace sss {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return {a.num * b.den, a.den * b.num};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

int binary_digit(const std::string& e) {
    if (e == "lo") return 0;
    if (e == "hi") return 1;
    return -1;
}

}  // namespace

Rational decode_dyadic(const PeriodicAddress& t) {
    if (t.anchor == "0") {
        for (const auto& d : t.pre)
            if (d != "e") throw std::invalid_argument("not an interval-system address");
        for (const auto& d : t.period)
            if (d != "e") throw std::invalid_argument("not an interval-system address");
        return {0, 1};
    }
    if (t.anchor != "1") throw std::invalid_argument("not an interval-system address");

    Rational lo{0, 1}, hi{1, 1};
    auto step = [&](const std::string& d) -> std::optional<Rational> {
        Rational mid = (lo + hi) / Rational{2, 1};
        if (d == "lo") {
            hi = mid;
            return std::nullopt;
        }
        if (d == "hi") {
            lo = mid;
            return std::nullopt;
        }
        if (d == "p0") return lo;
        if (d == "ph") return mid;
        if (d == "p1") return hi;
        throw std::invalid_argument("not an interval-system address: digit " + d);
    };

    for (const auto& d : t.pre)
        if (auto v = step(d)) return *v;

    // purely binary tail: the first period pass either pins a point or loops
    std::size_t q = t.period.size();
    std::int64_t c = 0;
    for (const auto& d : t.period) {
        int b = binary_digit(d);
        if (b < 0) {
            if (auto v = step(d)) return *v;
            throw std::invalid_argument("not an interval-system address: digit " + d);
        }
        c = 2 * c + b;
    }
    if (q > 62) throw std::invalid_argument("period too long for exact decoding");
    Rational tail{c, (std::int64_t(1) << q) - 1};
    return lo + (hi - lo) * tail;
}

}  // namespace sss
