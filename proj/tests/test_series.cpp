#include "support.hpp"

using namespace wktau;
using namespace wktau::test;

TEST_SUITE("series") {

TEST_CASE("monomials") {
    const Monomial m = Monomial::from_indices({3, 1, 1, 1});
    CHECK(m.to_string(Family::p) == "p1^3*p3");
    CHECK(m.degree(Family::p) == 6);
    CHECK(m.total_exponent() == 4);
    CHECK(m.exponent(1) == 3);
    CHECK(m.exponent(2) == 0);
    CHECK(Monomial().to_string(Family::T) == "1");
    CHECK(Monomial::variable(1, 3) * Monomial::variable(3) == m);
    CHECK(Monomial({{1, 2}, {1, 1}, {5, 0}}) == Monomial::variable(1, 3));
    CHECK(m.shifted(3, -1) == Monomial::variable(1, 3));
    CHECK_FALSE(m.shifted(5, -1).has_value());

    const Monomial t = Monomial::from_indices({0, 0, 2});
    CHECK(t.degree(Family::t) == 1 + 1 + 5);
    CHECK(t.to_string(Family::t) == "t0^2*t2");
    CHECK(variable_degree(Family::u, 4) == 9);
    CHECK_THROWS(variable_degree(Family::p, 0));
}

TEST_CASE("family names") {
    CHECK(parse_family("T") == Family::T);
    CHECK(parse_family("u") == Family::u);
    CHECK_THROWS(parse_family("q"));
}

TEST_CASE("coefficients above the bound are refused") {
    FormalSeries s(Family::p, 6);
    s.add_term(Monomial::variable(3), imag(-1, 96));
    s.add_term(Monomial::variable(9), real(1));  // silently above bound
    CHECK(s.size() == 1);
    CHECK(s.coefficient(Monomial::variable(3)) == imag(-1, 96));
    CHECK(s.coefficient(Monomial::variable(5)) == ExactScalar());
    CHECK_THROWS_AS(s.coefficient(Monomial::variable(7)), DegreeError);
}

TEST_CASE("cancellation removes terms") {
    FormalSeries s(Family::T, 5);
    s.add_term(Monomial::variable(1), real(2));
    s.add_term(Monomial::variable(1), real(-2));
    CHECK(s.is_zero());
}

TEST_CASE("truncated product") {
    // (1 + x)(1 - x + x^2 - x^3) = 1 + x^4, truncated at degree 3 in p_1.
    FormalSeries a(Family::p, 3), b(Family::p, 3);
    a.add_term(Monomial(), real(1));
    a.add_term(Monomial::variable(1), real(1));
    for (int k = 0; k <= 3; ++k) {
        b.add_term(Monomial::variable(1, k), real(k % 2 == 0 ? 1 : -1));
    }
    const FormalSeries c = a * b;
    CHECK(c.size() == 1);
    CHECK(c.constant_term() == real(1));
    CHECK(c.degree_bound() == 3);
}

TEST_CASE("product is bilinear and commutative on random series") {
    auto random_series = [](int bound) {
        FormalSeries s(Family::T, bound);
        for (int i = 0; i < 8; ++i) {
            std::uniform_int_distribution<int> idx(1, 4), ex(0, 2);
            s.add_term(Monomial({{idx(rng()), ex(rng())}, {idx(rng()), ex(rng())}}), random_scalar(9));
        }
        return s;
    };
    for (int i = 0; i < 20; ++i) {
        const FormalSeries a = random_series(8), b = random_series(8), c = random_series(8);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("slicing") {
    FormalSeries s(Family::T, 9);
    s.add_term(Monomial(), real(1));
    s.add_term(Monomial::variable(3), imag(-1, 32));
    s.add_term(Monomial::variable(1, 3), imag(-1, 24));
    s.add_term(Monomial::variable(1, 6), real(-1, 576));
    const FormalSeries three = s.homogeneous_part(3);
    CHECK(three.size() == 2);
    CHECK(three.is_homogeneous(3));
    CHECK_FALSE(s.is_homogeneous(3));
    CHECK(s.truncated(3).size() == 3);
    CHECK(s.with_bound(12).degree_bound() == 12);
    const auto sorted = s.sorted_terms();
    REQUIRE(sorted.size() == 4);
    CHECK(sorted[0].first == Monomial());
    CHECK(sorted[1].first == Monomial::variable(1, 3));
    CHECK(sorted[2].first == Monomial::variable(3));
}

TEST_CASE("mixing families is a usage error") {
    FormalSeries a(Family::T, 3), b(Family::p, 3);
    CHECK_THROWS_AS(a += b, UsageError);
}

}
