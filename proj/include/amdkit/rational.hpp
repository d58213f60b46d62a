#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "amdkit/errors.hpp"

namespace amdkit {

/// Exact fraction with 64-bit storage, kept in lowest terms with a positive
/// denominator. All arithmetic runs through 128-bit intermediates; if a
/// reduced result leaves the 64-bit range the operation throws
/// errc::overflow rather than silently wrapping. Probabilities and bounds in
/// this toolkit are desk-scale, so 64 bits of reduced numerator/denominator
/// is ample, but the failure mode has to be loud.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;
    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const Rational& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const Rational& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const Rational& rhs) const { return compare(rhs) >= 0; }

    /// Sign of *this - rhs, exact (128-bit cross multiplication).
    int compare(const Rational& rhs) const;

    /// Sign of (*this)^2 - rhs without materializing the square, so squared
    /// probabilities never overflow even when the square itself would.
    int compare_squared_to(const Rational& rhs) const;

    /// Lowest-terms "num/den" string; integers render as "k/1".
    std::string str() const;

    /// Parses "num/den" or a bare integer. Throws errc::usage on bad input.
    static Rational parse(const std::string& text);

private:
    static Rational normalized(__int128 num, __int128 den);

    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace amdkit
