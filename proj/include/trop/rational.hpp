#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

namespace trop {

/// Exact rational scalar. Stored in lowest terms with a positive denominator,
/// so equality and ordering are exact. Intermediate products are computed in
/// 128-bit arithmetic; a result whose reduced numerator or denominator leaves
/// the 64-bit range throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    /// Accepts "n", "n/d" and plain decimals like "-1.5". Throws
    /// std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

private:
    static Rational make_reduced(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace trop
