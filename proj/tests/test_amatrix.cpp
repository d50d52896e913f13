#include "support.hpp"

#include <wktau/amatrix.hpp>
#include <wktau/verify.hpp>

using namespace wktau;
using namespace wktau::test;

namespace {

Polynomial poly(std::vector<Rational> coeffs_high_first) {
    std::reverse(coeffs_high_first.begin(), coeffs_high_first.end());
    return Polynomial(std::move(coeffs_high_first));
}

bool poly_equal(const Polynomial& a, const Polynomial& b) {
    const Polynomial d = a - b;
    for (int i = 0; i <= std::max(d.degree(), 0); ++i) {
        if (!d.coefficient(i).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("amatrix") {

TEST_CASE("b_n table") {
    const Rational expected[] = {q(1),
                                 q(105),
                                 q(45045, 2),
                                 q(14549535, 2),
                                 q(25097947875, 8),
                                 q(13537833083775, 8),
                                 Rational::parse("17531493843488625/16")};
    for (int n = 0; n <= 6; ++n) {
        CHECK(b_const(n) == expected[n]);
    }
}

TEST_CASE("B_n table") {
    CHECK(poly_equal(b_poly(0), Polynomial()));
    CHECK(poly_equal(b_poly(1), poly({q(18)})));
    CHECK(poly_equal(b_poly(2), poly({q(1944), q(5778)})));
    // recursion-derived: 108 (x+3) B_2 + 18 b_2
    CHECK(poly_equal(b_poly(3), poly({q(209952), q(1253880), q(2277477)})));
    CHECK(poly_equal(b_poly(4), poly({q(22674816), q(226118304), q(787643676), q(1114815879)})));
    CHECK(poly_equal(b_poly(5), poly({Rational::parse("2448880128"), Rational::parse("36665177472"),
                                      Rational::parse("207169401168"), Rational::parse("545727699972"),
                                      Rational::parse("2633883829515/4")})));
    CHECK(poly_equal(b_poly(6), poly({Rational::parse("264479053824"), Rational::parse("5546713489920"),
                                      Rational::parse("46133330328000"), Rational::parse("193184363553840"),
                                      Rational::parse("424746412978761"), Rational::parse("1828597219279695/4")})));
    CHECK(b_poly(2).to_string() == "1944x + 5778");
}

TEST_CASE("falling factorial") {
    CHECK(poly_equal(falling_factorial(q(0), 0), poly({q(1)})));
    // (x+2)(x+1)
    CHECK(poly_equal(falling_factorial(q(2), 2), poly({q(1), q(3), q(2)})));
}

TEST_CASE("small entries") {
    CHECK(a_closed(0, 0) == ExactScalar());
    CHECK(a_closed(2, 0) == imag(-5, 96));
    CHECK(a_closed(1, 1) == imag(7, 96));
    CHECK(a_closed(0, 2) == imag(-5, 96));
    CHECK(a_closed(4, 1) == real(455, 9216));
    CHECK(a_closed(5, 0) == real(-385, 9216));
    CHECK(a_closed(3, 2) == real(-385, 9216));
    CHECK(a_closed(3, 3) == ExactScalar());
    CHECK_THROWS_AS(static_cast<void>(a_closed(-1, 3)), UsageError);
}

TEST_CASE("hook entries agree with printed Schur coefficients") {
    for (int d : {3, 6, 9}) {
        for (const GoldenRow& row : load_golden(d)) {
            const auto& p = row.mu.parts();
            if (p.size() > 1 && p[1] > 1) {
                continue;  // not a hook
            }
            const int m = p[0] - 1, n = static_cast<int>(p.size()) - 1;
            const ExactScalar expected = n % 2 == 0 ? row.value : -row.value;
            CHECK_MESSAGE(a_closed(m, n) == expected, "A_{" << m << "," << n << "}");
        }
    }
}

TEST_CASE("support is m + n = 2 mod 3") {
    for (int m = 0; m <= 20; ++m) {
        for (int n = 0; n <= 20; ++n) {
            if ((m + n) % 3 != 2) {
                CHECK(a_closed(m, n).is_zero());
            } else {
                CHECK_FALSE(a_closed(m, n).is_zero());
            }
        }
    }
}

TEST_CASE("closed form equals both recursion seeds") {
    RecursiveTable column(RecursionSeed::column), row(RecursionSeed::row);
    for (int total = 0; total <= 30; ++total) {
        for (int m = 0; m <= total; ++m) {
            const ExactScalar c = a_closed(m, total - m);
            CHECK(c == column.at(m, total - m));
            CHECK(c == row.at(m, total - m));
        }
    }
    CHECK(a_recursive(10, 7) == a_closed(10, 7));
}

TEST_CASE("parity symmetry uses m + n") {
    for (int total = 0; total <= 30; ++total) {
        for (int m = 0; m <= total; ++m) {
            const int n = total - m;
            const ExactScalar mirrored = total % 2 == 0 ? a_closed(n, m) : -a_closed(n, m);
            CHECK(a_closed(m, n) == mirrored);
        }
    }
    // A sign (-1)^n alone is refuted by the diagonal entry A_{1,1} != 0.
    CHECK(a_closed(1, 1) != -a_closed(1, 1));
}

TEST_CASE("entries are real or purely imaginary by parity of (m+n+1)/3") {
    for (int total = 2; total <= 29; total += 3) {
        const bool real_entry = ((total + 1) / 3) % 2 == 0;
        for (int m = 0; m <= total; ++m) {
            const ExactScalar v = a_closed(m, total - m);
            CHECK((real_entry ? v.im() : v.re()).is_zero());
        }
    }
}

TEST_CASE("branch formulas coincide") {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            CHECK(a_branch(HookBranch::first, a, b) == a_branch(HookBranch::third, a, b));
            CHECK(a_closed(3 * a - 1, 3 * b) == a_closed(3 * a - 3, 3 * b + 2));
        }
    }
}

TEST_CASE("b and B recursions") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(b_const(n) == q(36L * (6 * n - 1)) * b_const(n - 1) -
                                pow(q(2), n) * q(6L * n - 1) * double_factorial(6L * n - 1) / factorial(2L * n));
        CHECK(b_const(n) == q(3L * (6 * n + 1) * (6 * n - 1), n) * b_const(n - 1));
    }
    for (int n = 1; n <= 8; ++n) {
        CHECK(poly_equal(b_poly(n), Polynomial::linear(q(n)) * (q(108) * b_poly(n - 1)) + Polynomial({q(18) * b_const(n - 1)})));
    }
}

TEST_CASE("Rec1-3 at sample points") {
    const auto points = recursion_sample_points(20, 6);
    CHECK(points.size() == 20);
    for (int n = 1; n <= 6; ++n) {
        for (const Rational& x : points) {
            CHECK(rec1_residual(n, x).is_zero());
            CHECK(rec2_residual(n, x).is_zero());
            CHECK(rec3_residual(n, x).is_zero());
        }
    }
    CHECK_THROWS_AS(hook_factor(1, q(-1, 6), 1), DomainError);
}

TEST_CASE("L0 scalar identity") {
    CHECK(ExactScalar::s() * (a_closed(2, 0) + a_closed(1, 1) + a_closed(0, 2)) == real(1, 16));
}

TEST_CASE("coefficient blocks") {
    const CoeffMatrix t = a_block(5, 1);
    CHECK(t.at(4, 1) == real(455, 9216));
    CHECK(t.covers(5, 1));
    CHECK_FALSE(t.covers(1, 2));
    CHECK_THROWS_AS(static_cast<void>(t.at(1, 2)), UsageError);
    CHECK(a_block(2, 2).nonzero_positions().size() == 3);
    CHECK(a_block(0, 0).at(0, 0).is_zero());
}

}
