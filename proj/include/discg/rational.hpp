#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace discg {

using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// Parses "p", "p/q" or a finite decimal such as "-2.5".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline int sign(const Rational& q) { return q.sign(); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Value of the form m*M + r where M is a symbolic, infinitely large cost.
/// Ordered lexicographically: the M coefficient first, then the rational part.
struct BigM {
    Rational m;
    Rational r;

    BigM() = default;
    BigM(Rational real) : m(0), r(std::move(real)) {}  // NOLINT(implicit)
    BigM(Rational mcoef, Rational real) : m(std::move(mcoef)), r(std::move(real)) {}

    static BigM big() { return BigM(Rational(1), Rational(0)); }

    bool is_real() const { return m.is_zero(); }
    int sign() const { return m.sign() != 0 ? m.sign() : r.sign(); }

    BigM& operator+=(const BigM& o) {
        m += o.m;
        r += o.r;
        return *this;
    }
    BigM& operator-=(const BigM& o) {
        m -= o.m;
        r -= o.r;
        return *this;
    }
    BigM& operator*=(const Rational& s) {
        m *= s;
        r *= s;
        return *this;
    }
    friend BigM operator+(BigM a, const BigM& b) { return a += b; }
    friend BigM operator-(BigM a, const BigM& b) { return a -= b; }
    friend BigM operator*(BigM a, const Rational& s) { return a *= s; }
    friend BigM operator-(BigM a) {
        a.m = -a.m;
        a.r = -a.r;
        return a;
    }

    friend bool operator==(const BigM& a, const BigM& b) { return a.m == b.m && a.r == b.r; }
    friend std::strong_ordering operator<=>(const BigM& a, const BigM& b) {
        if (auto c = compare(a.m, b.m); c != 0) return c;
        return compare(a.r, b.r);
    }
};

std::string to_string(const BigM& v);

}  // namespace discg
