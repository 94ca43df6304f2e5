#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dtroots {

__extension__ typedef __int128 wide_int;

/// Exact rational number with a positive denominator, always kept reduced.
///
/// Every threshold and turning fraction in the library is carried through
/// this type so that strict inequalities are decided without rounding.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)

    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        normalize();
    }

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    /// Representative of this value modulo 1, in [0, 1).
    [[nodiscard]] constexpr Rational frac() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return {r, den_};
    }

    friend constexpr Rational operator+(const Rational& l, const Rational& r) {
        return {l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_};
    }
    friend constexpr Rational operator-(const Rational& l, const Rational& r) {
        return {l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_};
    }
    friend constexpr Rational operator*(const Rational& l, const Rational& r) {
        return {l.num_ * r.num_, l.den_ * r.den_};
    }
    friend constexpr Rational operator/(const Rational& l, const Rational& r) {
        if (r.num_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        return {l.num_ * r.den_, l.den_ * r.num_};
    }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
        // Denominators are positive, so cross-multiplication keeps the order.
        const wide_int lhs = static_cast<wide_int>(l.num_) * r.den_;
        const wide_int rhs = static_cast<wide_int>(r.num_) * l.den_;
        return lhs <=> rhs;
    }

    [[nodiscard]] std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    constexpr void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace dtroots
