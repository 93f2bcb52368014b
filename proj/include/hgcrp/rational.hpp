#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "hgcrp/errors.hpp"

namespace hgcrp {

// Exact rational stored as int64 numerator / positive int64 denominator in
// lowest terms. All arithmetic goes through 128-bit intermediates and throws
// OverflowError instead of wrapping. Joint utilities, welfare sums and
// price-of-anarchy ratios all ride on this type, so comparisons must never
// round.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    // Accepts "p" or "p/q", optionally negative, no whitespace.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        std::int64_t p = parse_int(text.substr(0, slash));
        std::int64_t q = 1;
        if (slash != std::string_view::npos) {
            q = parse_int(text.substr(slash + 1));
        }
        if (q == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
        return Rational(p, q);
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 g = gcd128(a.den_, b.den_);
        i128 bd = b.den_ / g, ad = a.den_ / g;
        return make(i128(a.num_) * bd + i128(b.num_) * ad, i128(a.den_) * bd);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        i128 g1 = gcd128(a.num_, b.den_);
        i128 g2 = gcd128(b.num_, a.den_);
        return make((i128(a.num_) / g1) * (i128(b.num_) / g2),
                    (i128(a.den_) / g2) * (i128(b.den_) / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("division by zero rational");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;  // num_ > INT64_MIN always holds for normalized values
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        i128 lhs = i128(a.num_) * b.den_;
        i128 rhs = i128(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

private:
    using i128 = __int128;
    using u128 = unsigned __int128;

    static u128 abs128(i128 x) { return x < 0 ? u128(-x) : u128(x); }

    static i128 gcd128(i128 a, i128 b) {
        u128 x = abs128(a), y = abs128(b);
        while (y != 0) {
            u128 t = x % y;
            x = y;
            y = t;
        }
        return x == 0 ? i128(1) : i128(x);
    }

    static Rational make(i128 num, i128 den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num, den);
        num /= g;
        den /= g;
        constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi) {
            throw OverflowError("rational exceeds 64-bit range");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static std::int64_t parse_int(std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc::result_out_of_range) {
            throw OverflowError("integer literal exceeds 64-bit range: '" + std::string(s) + "'");
        }
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw ParseError("malformed integer '" + std::string(s) + "'");
        }
        return v;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace hgcrp
