#include "support.hpp"

using namespace wktau;
using namespace wktau::test;

TEST_SUITE("exact") {

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational::parse("-45045/2") == Rational(-45045, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("s squares to -2") {
    const ExactScalar s = ExactScalar::s();
    CHECK(s * s == real(-2));
    CHECK((real(1) + s) * (real(1) - s) == real(3));
    CHECK(pow(s, 4) == real(4));
    CHECK(imag(-5, 96).to_string() == "-5/96*s");
    CHECK(s.to_string() == "s");
    CHECK((-s).to_string() == "-s");
    CHECK(ExactScalar(q(3, 4), q(-1, 2)).to_string() == "3/4 - 1/2*s");
    CHECK(ExactScalar().to_string() == "0");
}

TEST_CASE("parse round trip") {
    for (int i = 0; i < 200; ++i) {
        const ExactScalar x = random_scalar();
        CHECK(ExactScalar::parse(x.to_string()) == x);
    }
    for (int i = 0; i < 50; ++i) {
        const ExactScalar x(random_rational());
        CHECK(ExactScalar::parse(x.to_string()) == x);
        const ExactScalar y(Rational(0), random_rational());
        CHECK(ExactScalar::parse(y.to_string()) == y);
    }
}

TEST_CASE("field axioms on random elements") {
    for (int i = 0; i < 300; ++i) {
        const ExactScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ExactScalar());
        CHECK(a * ExactScalar(1) == a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == ExactScalar(1));
            CHECK((b / a) * a == b);
        }
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK(a * a.conjugate() == ExactScalar(a.norm()));
    }
}

TEST_CASE("zero has no inverse") {
    CHECK_THROWS_AS(ExactScalar().inverse(), DomainError);
    CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(), DomainError);
}

TEST_CASE("factorials") {
    CHECK(double_factorial(-1) == Rational(1));
    CHECK(double_factorial(1) == Rational(1));
    CHECK(double_factorial(7) == Rational(105));
    CHECK(double_factorial(13) == Rational(135135));
    CHECK_THROWS_AS(double_factorial(4), UsageError);
    CHECK_THROWS_AS(double_factorial(-3), UsageError);
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(10) == Rational(3628800));
    Rational prod(1);
    for (long k = 1; k <= 25; ++k) {
        prod *= Rational(k);
        CHECK(factorial(k) == prod);
    }
    // (2n-1)!! = (2n)! / (2^n n!)
    for (long n = 0; n <= 15; ++n) {
        CHECK(double_factorial(2 * n - 1) == factorial(2 * n) / (pow(Rational(2), n) * factorial(n)));
    }
}

TEST_CASE("approximate rendering is only decoration") {
    CHECK(imag(1, 2).to_approx_string().find('s') != std::string::npos);
    CHECK_FALSE(real(1, 3).to_approx_string().empty());
}

}
