#include "amdkit/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace amdkit {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        fail(errc::overflow, "rational arithmetic overflowed 64-bit storage");
    return static_cast<std::int64_t>(v);
}

} // namespace

Rational Rational::normalized(__int128 num, __int128 den) {
    if (den == 0) fail(errc::usage, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) den = 1;
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = normalized(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& rhs) const {
    // Knuth-style addition: pre-divide by gcd of denominators to keep the
    // 128-bit intermediates as small as possible.
    std::int64_t g = std::gcd(den_, rhs.den_);
    __int128 num = static_cast<__int128>(num_) * (rhs.den_ / g) +
                   static_cast<__int128>(rhs.num_) * (den_ / g);
    __int128 den = static_cast<__int128>(den_) * (rhs.den_ / g);
    return normalized(num, den);
}

Rational Rational::operator-(const Rational& rhs) const {
    std::int64_t g = std::gcd(den_, rhs.den_);
    __int128 num = static_cast<__int128>(num_) * (rhs.den_ / g) -
                   static_cast<__int128>(rhs.num_) * (den_ / g);
    __int128 den = static_cast<__int128>(den_) * (rhs.den_ / g);
    return normalized(num, den);
}

Rational Rational::operator*(const Rational& rhs) const {
    __int128 num = static_cast<__int128>(num_) * rhs.num_;
    __int128 den = static_cast<__int128>(den_) * rhs.den_;
    return normalized(num, den);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) fail(errc::usage, "division of rational by zero");
    __int128 num = static_cast<__int128>(num_) * rhs.den_;
    __int128 den = static_cast<__int128>(den_) * rhs.num_;
    return normalized(num, den);
}

int Rational::compare(const Rational& rhs) const {
    __int128 lhs = static_cast<__int128>(num_) * rhs.den_;
    __int128 r = static_cast<__int128>(rhs.num_) * den_;
    if (lhs < r) return -1;
    if (lhs > r) return 1;
    return 0;
}

int Rational::compare_squared_to(const Rational& rhs) const {
    // num^2 * rhs.den vs rhs.num * den^2. Squares of int64 always fit in
    // __int128; the final multiplications are overflow-checked and throw
    // rather than wrap in the (far beyond desk-scale) worst case.
    __int128 lhs, r;
    if (__builtin_mul_overflow(static_cast<__int128>(num_) * num_,
                               static_cast<__int128>(rhs.den_), &lhs) ||
        __builtin_mul_overflow(static_cast<__int128>(den_) * den_,
                               static_cast<__int128>(rhs.num_), &r))
        fail(errc::overflow, "squared comparison out of range");
    if (lhs < r) return -1;
    if (lhs > r) return 1;
    return 0;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            fail(errc::usage, "malformed rational literal");
        return v;
    };
    std::string_view sv(text);
    auto slash = sv.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(sv));
    return Rational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace amdkit
