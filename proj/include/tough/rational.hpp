#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tough {

/// Exact fraction kept in lowest terms with a positive denominator.
/// Comparisons cross-multiply in 128-bit integers, so no value ever passes
/// through floating point.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// Accepts "a/b" or "a" with optional leading '-'. Decimals are rejected.
    static Rational parse(std::string_view text);

    /// Always "a/b", including integers ("2/1").
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend Rational operator+(const Rational& lhs, const Rational& rhs);
    friend Rational operator-(const Rational& lhs, const Rational& rhs);
    friend Rational operator*(const Rational& lhs, const Rational& rhs);
    friend Rational operator/(const Rational& lhs, const Rational& rhs);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class RationalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tough
