#include <wktau/verify.hpp>

#include <wktau/amatrix.hpp>
#include <wktau/fock.hpp>
#include <wktau/schur.hpp>
#include <wktau/tau.hpp>
#include <wktau/virasoro.hpp>

namespace wktau {

namespace {

std::string pair_label(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Rational r(long v) { return Rational(v); }

}  // namespace

Rational hook_factor(int n, const Rational& x, int c) {
    return b_poly(n)(x) + b_const(n) / (r(6) * x + r(c));
}

Rational rec1_residual(int n, const Rational& x) {
    const Rational lhs = hook_factor(n, x, 1);
    const Rational rhs = r(-3) * hook_factor(n - 1, x + r(1), 1) * (r(6) * x + r(5)) * (r(6) * x + r(7)) / x +
                         pow(r(2), static_cast<unsigned>(n)) * (x + r(n)) / (r(6) * x + r(1)) * double_factorial(6L * n - 1) /
                             (factorial(2L * n) * x) +
                         r(216) * (x + r(n)) * hook_factor(n - 1, x, 1);
    return lhs - rhs;
}

Rational rec2_residual(int n, const Rational& x) {
    const Rational lhs = hook_factor(n, x, -1);
    const Rational rhs = -hook_factor(n, x, 1) +
                         r(12) * (x + r(n)) * (x - r(1)) * (r(6) * x - r(5)) /
                             ((x + r(n - 1)) * (r(6) * x + r(1)) * (r(6) * x - r(1))) * hook_factor(n, x - r(1), 1) +
                         r(18L * (6 * n - 1)) * r(2) * (x + r(n)) / (x + r(n - 1)) * hook_factor(n - 1, x, -1);
    return lhs - rhs;
}

Rational rec3_residual(int n, const Rational& x) {
    const Rational lhs = hook_factor(n, x, 1);
    const Rational rhs = -hook_factor(n, x, -1) +
                         r(12) * (x + r(n)) * (x - r(1)) * (r(6) * x - r(7)) /
                             ((x + r(n - 1)) * (r(6) * x + r(1)) * (r(6) * x - r(1))) * hook_factor(n, x - r(1), -1) +
                         r(18L * (6 * n + 1)) * r(2) * (x + r(n)) / (x + r(n - 1)) * hook_factor(n - 1, x, 1);
    return lhs - rhs;
}

std::vector<Rational> recursion_sample_points(std::size_t count, int max_n) {
    std::vector<Rational> poles{r(0), Rational(1, 6), Rational(-1, 6), Rational(-7, 6), Rational(5, 6), Rational(7, 6)};
    for (int n = 1; n <= max_n; ++n) {
        poles.push_back(r(1 - n));
    }
    std::vector<Rational> out;
    for (long k = 1; out.size() < count; ++k) {
        const Rational x = Rational(k % 2 == 0 ? -(3 * k + 2) : 3 * k + 2, 2 * k + 5);
        if (std::find(poles.begin(), poles.end(), x) == poles.end() && std::find(out.begin(), out.end(), x) == out.end()) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<CheckReport> verify_recursion(int max_weight) {
    CheckReport column;
    column.check = "closed_vs_recursion_column_seed";
    column.add_param("max_weight", max_weight);
    CheckReport row;
    row.check = "closed_vs_recursion_row_seed";
    row.add_param("max_weight", max_weight);
    CheckReport symmetry;
    symmetry.check = "parity_symmetry";
    symmetry.add_param("max_weight", max_weight);

    RecursiveTable column_table(RecursionSeed::column);
    RecursiveTable row_table(RecursionSeed::row);
    for (int total = 0; total <= max_weight; ++total) {
        for (int m = 0; m <= total; ++m) {
            const int n = total - m;
            const ExactScalar closed = a_closed(m, n);
            if (const ExactScalar d = closed - column_table.at(m, n); !d.is_zero()) {
                column.fail(pair_label(m, n), d);
            }
            if (const ExactScalar d = closed - row_table.at(m, n); !d.is_zero()) {
                row.fail(pair_label(m, n), d);
            }
            const ExactScalar mirrored = (total % 2 == 0) ? a_closed(n, m) : -a_closed(n, m);
            if (const ExactScalar d = closed - mirrored; !d.is_zero()) {
                symmetry.fail(pair_label(m, n), d);
            }
        }
    }
    return {column, row, symmetry};
}

std::vector<CheckReport> verify_identities() {
    std::vector<CheckReport> out;

    CheckReport b_rec;
    b_rec.check = "b_recursions";
    for (int n = 1; n <= 12; ++n) {
        const Rational first = r(36L * (6 * n - 1)) * b_const(n - 1) -
                               pow(r(2), static_cast<unsigned>(n)) * r(6L * n - 1) * double_factorial(6L * n - 1) / factorial(2L * n);
        if (const Rational d = b_const(n) - first; !d.is_zero()) {
            b_rec.fail("I n=" + std::to_string(n), ExactScalar(d));
        }
        const Rational second = r(3L * (6 * n + 1) * (6 * n - 1)) / r(n) * b_const(n - 1);
        if (const Rational d = b_const(n) - second; !d.is_zero()) {
            b_rec.fail("II n=" + std::to_string(n), ExactScalar(d));
        }
    }
    out.push_back(b_rec);

    CheckReport big_b;
    big_b.check = "B_recursion";
    for (int n = 1; n <= 8; ++n) {
        const Polynomial expected = Polynomial::linear(r(n)) * (r(108) * b_poly(n - 1)) + Polynomial({r(18) * b_const(n - 1)});
        const Polynomial diff = b_poly(n) - expected;
        for (int p = 0; p <= diff.degree(); ++p) {
            if (!diff.coefficient(p).is_zero()) {
                big_b.fail("n=" + std::to_string(n) + " x^" + std::to_string(p), ExactScalar(diff.coefficient(p)));
            }
        }
    }
    out.push_back(big_b);

    const std::vector<Rational> points = recursion_sample_points(20, 6);
    const std::pair<const char*, Rational (*)(int, const Rational&)> recs[] = {
        {"rec1", rec1_residual}, {"rec2", rec2_residual}, {"rec3", rec3_residual}};
    for (const auto& [name, fn] : recs) {
        CheckReport rec;
        rec.check = name;
        rec.add_param("samples", static_cast<long>(points.size()));
        rec.add_param("max_n", 6);
        for (int n = 1; n <= 6; ++n) {
            for (const Rational& x : points) {
                if (const Rational d = fn(n, x); !d.is_zero()) {
                    rec.fail("n=" + std::to_string(n) + " x=" + x.to_string(), ExactScalar(d));
                }
            }
        }
        out.push_back(rec);
    }

    CheckReport branch;
    branch.check = "branch_consistency";
    for (int a = 1; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            const ExactScalar lhs = a_branch(HookBranch::first, a, b);
            const ExactScalar rhs = a_branch(HookBranch::third, a, b);
            if (const ExactScalar d = lhs - rhs; !d.is_zero()) {
                branch.fail("a=" + std::to_string(a) + " b=" + std::to_string(b), d);
            }
            if (const ExactScalar d = lhs - a_recursive(3 * a - 1, 3 * b); !d.is_zero()) {
                branch.fail(pair_label(3 * a - 1, 3 * b) + " vs recursion", d);
            }
            if (const ExactScalar d = rhs - a_recursive(3 * a - 3, 3 * b + 2); !d.is_zero()) {
                branch.fail(pair_label(3 * a - 3, 3 * b + 2) + " vs recursion", d);
            }
        }
    }
    out.push_back(branch);

    CheckReport scalar;
    scalar.check = "L0_scalar_identity";
    const ExactScalar lhs = ExactScalar::s() * (a_closed(2, 0) + a_closed(1, 1) + a_closed(0, 2));
    if (const ExactScalar d = lhs - ExactScalar(Rational(1, 16)); !d.is_zero()) {
        scalar.fail("s(A20+A11+A02) - 1/16", d);
    }
    out.push_back(scalar);
    return out;
}

std::vector<CheckReport> verify_virasoro(int max_degree) {
    const FormalSeries z = z_series(Family::T, max_degree);
    std::vector<CheckReport> out;
    for (int n = -1; n <= 4; ++n) {
        const int d_out = max_degree - (2 * n + 3);
        if (d_out < 0) {
            break;
        }
        out.push_back(virasoro_check(n, z, d_out));
    }
    return out;
}

std::vector<CheckReport> verify_cutjoin(int max_degree) {
    CheckReport report;
    report.check = "cutjoin";
    report.add_param("degree", max_degree);
    const FormalSeries schur = z_series(Family::T, max_degree);
    const FormalSeries cutjoin = z_cutjoin(max_degree);
    for (const auto& [mono, value] : (cutjoin - schur).sorted_terms()) {
        report.fail(mono.to_string(Family::T), value);
    }
    return {report};
}

std::vector<CheckReport> verify_fock(int max_degree) {
    CheckReport report;
    report.check = "fock";
    report.add_param("degree", max_degree);
    const int cover = std::max(max_degree - 1, 0);
    const CoeffMatrix table = a_block(cover, cover);
    const FockVector v = fock_exp(table, max_degree);
    for (int w = 0; w <= max_degree; ++w) {
        for (const Partition& mu : enumerate_partitions(w)) {
            const ExactScalar expected = (w % 3 == 0) ? a_mu(mu, table) : ExactScalar();
            if (const ExactScalar d = v.coefficient(mu) - expected; !d.is_zero()) {
                report.fail(mu.to_string(), d);
            }
        }
    }
    return {report};
}

std::vector<CheckReport> verify_commutators(int max_degree) {
    std::vector<CheckReport> out;
    for (int m = -1; m <= 2; ++m) {
        for (int n = -1; n <= 2; ++n) {
            if (m != n) {
                out.push_back(commutator_check(m, n, max_degree));
            }
        }
    }
    return out;
}

std::vector<CheckReport> verify_structure(int max_degree) {
    CheckReport even;
    even.check = "even_variable_vanishing";
    even.add_param("degree", max_degree);
    const FormalSeries zp = z_p(max_degree);
    for (const auto& [mono, value] : zp.sorted_terms()) {
        for (const auto& [index, exp] : mono.factors()) {
            if (index % 2 == 0) {
                even.fail(mono.to_string(Family::p), value);
                break;
            }
        }
    }
    std::vector<CheckReport> out{even};
    if (!even.pass) {
        return out;
    }

    const FormalSeries f = free_energy(change_coords(zp, Family::t));
    CheckReport real;
    real.check = "free_energy_reality";
    real.add_param("degree", max_degree);
    CheckReport selection;
    selection.check = "selection_rule";
    selection.add_param("degree", max_degree);
    for (const auto& [mono, value] : f.sorted_terms()) {
        if (!value.is_rational()) {
            real.fail(mono.to_string(Family::t), value);
        }
        if (!monomial_genus(mono)) {
            selection.fail(mono.to_string(Family::t), value);
        }
    }
    out.push_back(real);
    out.push_back(selection);
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"recursion", "identities", "structure", "virasoro",
                                                "cutjoin",   "fock",       "commutator"};
    return names;
}

std::vector<CheckReport> run_suite(std::string_view name, int degree, int max_weight) {
    if (name == "recursion") {
        return verify_recursion(max_weight);
    }
    if (name == "identities") {
        return verify_identities();
    }
    if (name == "structure") {
        return verify_structure(degree);
    }
    if (name == "virasoro") {
        return verify_virasoro(degree);
    }
    if (name == "cutjoin") {
        return verify_cutjoin(degree);
    }
    if (name == "fock") {
        return verify_fock(degree);
    }
    if (name == "commutator") {
        return verify_commutators(std::min(degree, 9));
    }
    throw UsageError("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace wktau
