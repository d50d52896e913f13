#ifndef WKTAU_EXACT_HPP
#define WKTAU_EXACT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <wktau/errors.hpp>

namespace wktau {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    /// Parses "a" or "a/b" (optional leading sign, no whitespace).
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] std::string to_string() const { return value_.get_str(); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& other) { return *this = *this + other; }
    Rational& operator-=(const Rational& other) { return *this = *this - other; }
    Rational& operator*=(const Rational& other) { return *this = *this * other; }
    Rational& operator/=(const Rational& other) { return *this = *this / other; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Element re + im*s of the quadratic field Q(s), s*s = -2.
///
/// The symbol s stands for sqrt(-2). It is never approximated; the two
/// rational components are stored separately and compared componentwise.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
    ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// The generator s = sqrt(-2).
    static ExactScalar s() { return {Rational(0), Rational(1)}; }

    /// Parses the textual form produced by to_string(), e.g. "3/4 - 1/2*s".
    static ExactScalar parse(std::string_view text);

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }

    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return im_.is_zero(); }

    /// Galois conjugate re - im*s.
    [[nodiscard]] ExactScalar conjugate() const { return {re_, -im_}; }
    /// Field norm re^2 + 2*im^2, always a nonnegative rational.
    [[nodiscard]] Rational norm() const { return re_ * re_ + Rational(2) * im_ * im_; }
    [[nodiscard]] ExactScalar inverse() const;

    [[nodiscard]] std::string to_string() const;
    /// Floating rendering for human scanning only; never used for comparisons.
    [[nodiscard]] std::string to_approx_string() const;

    ExactScalar operator-() const { return {-re_, -im_}; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ * b.re_ - Rational(2) * a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

    ExactScalar& operator+=(const ExactScalar& other) { return *this = *this + other; }
    ExactScalar& operator-=(const ExactScalar& other) { return *this = *this - other; }
    ExactScalar& operator*=(const ExactScalar& other) { return *this = *this * other; }
    ExactScalar& operator/=(const ExactScalar& other) { return *this = *this / other; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& value);

ExactScalar pow(const ExactScalar& base, unsigned exponent);
Rational pow(const Rational& base, unsigned exponent);

/// n!! for odd n >= -1, with (-1)!! = 1. Even arguments are a usage error.
Rational double_factorial(long n);
/// n! for n >= 0.
Rational factorial(long n);

}  // namespace wktau

#endif  // WKTAU_EXACT_HPP
