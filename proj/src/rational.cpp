#include "trop/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace trop {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 uabs128(int128 v) { return v < 0 ? static_cast<uint128>(-v) : static_cast<uint128>(v); }

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(int128 v) {
    // INT64_MIN is excluded so negation of a stored value can never overflow.
    if (v > std::numeric_limits<std::int64_t>::max() || v <= std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow: value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

} // namespace

Rational Rational::make_reduced(int128 n, int128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    uint128 g = gcd128(uabs128(n), static_cast<uint128>(d));
    n /= static_cast<int128>(g);
    d /= static_cast<int128>(g);
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = make_reduced(n, d);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_,
                        static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_,
                        static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(static_cast<int128>(num_) * o.num_, static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make_reduced(static_cast<int128>(num_) * o.den_, static_cast<int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int128 lhs = static_cast<int128>(num_) * o.den_;
    int128 rhs = static_cast<int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    size_t pos = 0;
    auto fail = [&]() -> int128 { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };

    auto read_digits = [&]() -> int128 {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        int128 v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (static_cast<int128>(1) << 100)) fail();
            ++pos;
        }
        return v;
    };

    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    text = text.substr(0, end);
    if (pos >= text.size()) fail();

    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    int128 n = read_digits();
    if (pos == text.size()) return make_reduced(sign * n, 1);

    if (text[pos] == '/') {
        ++pos;
        int128 d = read_digits();
        if (pos != text.size() || d == 0) fail();
        return make_reduced(sign * n, d);
    }
    if (text[pos] == '.') {
        ++pos;
        int128 d = 1;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            n = n * 10 + (text[pos] - '0');
            d *= 10;
            ++pos;
            if (d > (static_cast<int128>(1) << 100)) fail();
        }
        if (pos != text.size()) fail();
        return make_reduced(sign * n, d);
    }
    fail();
    return Rational();
}

} // namespace trop
