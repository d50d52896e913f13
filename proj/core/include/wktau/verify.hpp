#ifndef WKTAU_VERIFY_HPP
#define WKTAU_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include <wktau/exact.hpp>
#include <wktau/report.hpp>

namespace wktau {

/// f_c(n, x) = B_n(x) + b_n / (6x + c), the building block of the
/// coefficient recursions. Throws DomainError at a pole.
Rational hook_factor(int n, const Rational& x, int c);

/// LHS - RHS of the three recursions in x obtained from the L_{-1} constraint
/// (one per residue class of the hook index); zero when the identity holds.
Rational rec1_residual(int n, const Rational& x);
Rational rec2_residual(int n, const Rational& x);
Rational rec3_residual(int n, const Rational& x);

/// Deterministic sample points avoiding every pole of rec1..rec3 for 1 <= n <= max_n.
std::vector<Rational> recursion_sample_points(std::size_t count, int max_n);

/// closed form vs L_{-1} recursion (both seeds) and the parity symmetry
/// A_{m,n} = (-1)^{m+n} A_{n,m}, for m + n <= max_weight.
std::vector<CheckReport> verify_recursion(int max_weight);

/// b_n and B_n recursions, Rec1-3 at sample points, branch consistency and the
/// L_0 scalar identity.
std::vector<CheckReport> verify_identities();

/// L_n Z = 0 for n = -1..4 (as far as the degree allows) with Z from the Schur pipeline.
std::vector<CheckReport> verify_virasoro(int max_degree);

/// e^W 1 against the Schur pipeline in T, slice by slice.
std::vector<CheckReport> verify_cutjoin(int max_degree);

/// e^A |0> against the determinant formula for all |mu| <= max_degree.
std::vector<CheckReport> verify_fock(int max_degree);

/// [L_m, L_n] = (m - n) L_{m+n} for m, n in {-1, 0, 1, 2}.
std::vector<CheckReport> verify_commutators(int max_degree);

/// Even-variable vanishing in p, reality and selection rule of F in t.
std::vector<CheckReport> verify_structure(int max_degree);

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
/// `degree` bounds the series suites; `max_weight` bounds the recursion suite.
std::vector<CheckReport> run_suite(std::string_view name, int degree, int max_weight);

}  // namespace wktau

#endif  // WKTAU_VERIFY_HPP
