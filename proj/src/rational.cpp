#include "tough/rational.hpp"

#include <charconv>
#include <numeric>

namespace tough {

namespace {

std::int64_t narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw RationalError("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational from_wide(__int128 num, __int128 den)
{
    if (den == 0)
        throw RationalError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s)
{
    if (s.empty())
        throw RationalError("empty integer in rational literal");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw RationalError("malformed rational literal '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw RationalError("zero denominator");
    if (den < 0) {
        if (num == INT64_MIN || den == INT64_MIN)
            throw RationalError("rational overflow");
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-')
        throw RationalError("denominator must be positive");
    return Rational(parse_int(text.substr(0, slash)), parse_int(den_text));
}

std::string Rational::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    if (l < r)
        return std::strong_ordering::less;
    if (l > r)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational operator+(const Rational& lhs, const Rational& rhs)
{
    return from_wide(static_cast<__int128>(lhs.num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * lhs.den_,
                     static_cast<__int128>(lhs.den_) * rhs.den_);
}

Rational operator-(const Rational& lhs, const Rational& rhs)
{
    return from_wide(static_cast<__int128>(lhs.num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * lhs.den_,
                     static_cast<__int128>(lhs.den_) * rhs.den_);
}

Rational operator*(const Rational& lhs, const Rational& rhs)
{
    return from_wide(static_cast<__int128>(lhs.num_) * rhs.num_, static_cast<__int128>(lhs.den_) * rhs.den_);
}

Rational operator/(const Rational& lhs, const Rational& rhs)
{
    if (rhs.num_ == 0)
        throw RationalError("division by zero");
    return from_wide(static_cast<__int128>(lhs.num_) * rhs.den_, static_cast<__int128>(lhs.den_) * rhs.num_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace tough
