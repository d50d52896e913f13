#include <wktau/exact.hpp>

#include <cctype>
#include <cstdio>
#include <string>

namespace wktau {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string str(text);
    if (str.empty()) {
        throw UsageError("empty rational literal");
    }
    std::size_t i = (str[0] == '-' || str[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (; i < str.size(); ++i) {
        const char c = str[i];
        if (c == '/' && !seen_slash) {
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw UsageError("malformed rational literal '" + str + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) {
        throw UsageError("malformed rational literal '" + str + "'");
    }
    mpq_class value;
    const std::string body = str[0] == '+' ? str.substr(1) : str;
    if (value.set_str(body, 10) != 0 || value.get_den() == 0) {
        throw UsageError("malformed rational literal '" + str + "'");
    }
    return Rational(std::move(value));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw DomainError("division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) {
        throw DomainError("division by zero");
    }
    // 1/(a+bs) = (a-bs)/(a^2+2b^2)
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::string ExactScalar::to_string() const {
    if (im_.is_zero()) {
        return re_.to_string();
    }
    auto imag_term = [](const Rational& v) {
        if (v == Rational(1)) {
            return std::string("s");
        }
        return v.to_string() + "*s";
    };
    if (re_.is_zero()) {
        return im_ == Rational(-1) ? std::string("-s") : imag_term(im_);
    }
    if (im_.sign() < 0) {
        return re_.to_string() + " - " + imag_term(-im_);
    }
    return re_.to_string() + " + " + imag_term(im_);
}

std::string ExactScalar::to_approx_string() const {
    char buf[64];
    if (im_.is_zero()) {
        std::snprintf(buf, sizeof buf, "%.6e", re_.to_double());
    } else {
        std::snprintf(buf, sizeof buf, "%.6e%+.6e*s", re_.to_double(), im_.to_double());
    }
    return buf;
}

ExactScalar ExactScalar::parse(std::string_view text) {
    std::string str;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) {
            str.push_back(c);
        }
    }
    if (str.empty()) {
        throw UsageError("empty field literal");
    }
    if (str.back() != 's') {
        return ExactScalar(Rational::parse(str));
    }
    str.pop_back();
    if (!str.empty() && str.back() == '*') {
        str.pop_back();
    }
    std::size_t split = std::string::npos;
    for (std::size_t i = str.size(); i-- > 1;) {
        if (str[i] == '+' || str[i] == '-') {
            split = i;
            break;
        }
    }
    const std::string re_text = split == std::string::npos ? std::string() : str.substr(0, split);
    std::string im_text = split == std::string::npos ? str : str.substr(split);
    if (im_text.empty() || im_text == "+") {
        im_text = "1";
    } else if (im_text == "-") {
        im_text = "-1";
    }
    return {re_text.empty() ? Rational(0) : Rational::parse(re_text), Rational::parse(im_text)};
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& value) { return os << value.to_string(); }

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
    ExactScalar result(1);
    ExactScalar square = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= square;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            square *= square;
        }
    }
    return result;
}

Rational pow(const Rational& base, unsigned exponent) {
    mpq_class result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(std::move(result));
}

Rational double_factorial(long n) {
    if (n < -1 || n % 2 == 0) {
        throw UsageError("double factorial is defined here on odd n >= -1, got " + std::to_string(n));
    }
    if (n <= 1) {
        return Rational(1);
    }
    mpz_class result;
    mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(result);
}

Rational factorial(long n) {
    if (n < 0) {
        throw UsageError("factorial of negative argument " + std::to_string(n));
    }
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(result);
}

}  // namespace wktau
