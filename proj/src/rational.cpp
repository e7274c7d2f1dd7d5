#include "discg/rational.hpp"

#include "discg/errors.hpp"

#include <cctype>

namespace discg {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        if (auto dot_pos = text.find('.'); dot_pos != std::string::npos) {
            std::string digits = text.substr(0, dot_pos) + text.substr(dot_pos + 1);
            const auto frac_len = text.size() - dot_pos - 1;
            for (std::size_t k = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; k < digits.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(digits[k])))
                    throw ParseError("bad decimal literal '" + text + "'");
            if (digits == "-" || digits == "+" || digits.empty())
                throw ParseError("bad decimal literal '" + text + "'");
            Rational value{boost::multiprecision::mpz_int(digits)};
            boost::multiprecision::mpz_int scale = 1;
            for (std::size_t k = 0; k < frac_len; ++k) scale *= 10;
            return value / Rational(scale);
        }
        Rational q(text);
        return q;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::string to_string(const Rational& q) { return q.str(); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational acc = 0;
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
    return acc;
}

std::string to_string(const BigM& v) {
    if (v.is_real()) return v.r.str();
    std::string out = v.m.str() + "M";
    if (!v.r.is_zero()) out += (v.r.sign() > 0 ? "+" : "") + v.r.str();
    return out;
}

}  // namespace discg
