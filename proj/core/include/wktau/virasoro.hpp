#ifndef WKTAU_VIRASORO_HPP
#define WKTAU_VIRASORO_HPP

#include <map>
#include <vector>

#include <wktau/exact.hpp>
#include <wktau/report.hpp>
#include <wktau/series.hpp>

namespace wktau {

/// gamma_n on C[T_1, T_3, ...]: multiplication by (-n) T_{-n} for n < 0 and
/// d/dT_n for n > 0. Throws UsageError unless n is odd.
FormalSeries gamma_apply(int n, const FormalSeries& series);

/// Finite linear combination of words in the gamma generators.
///
/// A word (w_1, ..., w_r) acts as gamma_{w_1} ... gamma_{w_r}, i.e. the last
/// letter is applied first. Identical words are merged on insertion.
class LadderOperator {
public:
    using Word = std::vector<int>;

    /// Throws UsageError if a letter is even.
    void add(const ExactScalar& coefficient, Word word);

    [[nodiscard]] const std::map<Word, ExactScalar>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Applies the operator; the result keeps the input's family and bound,
    /// dropping monomials above the bound.
    [[nodiscard]] FormalSeries apply(const FormalSeries& series) const;
    [[nodiscard]] FormalSeries operator()(const FormalSeries& series) const { return apply(series); }

    LadderOperator& operator+=(const LadderOperator& other);
    LadderOperator& operator*=(const ExactScalar& factor);

private:
    std::map<Word, ExactScalar> terms_;
};

/// Normal-ordered words for sum_{i+j=total} :gamma_i gamma_j: over odd i, j,
/// restricted to pairs whose derivative letters are at most max_degree.
/// Each ordered pair contributes once.
std::vector<LadderOperator::Word> normal_ordered_pairs(int total, int max_degree);

/// L_n = (-1)^{n+1} s gamma_{2n+3} + ((-1)^n / 4) sum_{a+b=n-1} :gamma_{2a+1} gamma_{2b+1}: + delta_{n,0}/16,
/// truncated to the terms that act nontrivially on series of degree <= max_degree.
LadderOperator build_L(int n, int max_degree);

/// Cut-and-join operator
/// W = -(s/24) sum_k gamma_{-(2k+1)} (sum_{a+b=k-2} :gamma_{2a+1} gamma_{2b+1}: + delta_{k,1}/4),
/// truncated to inputs of degree <= max_degree.
LadderOperator build_W(int max_degree);

/// Z^{(k+1)} = W Z^{(k)} / (k+1). Throws UsageError unless zk is a T-series
/// homogeneous of degree 3k.
FormalSeries cutjoin_step(const FormalSeries& zk, int k);

/// e^W 1 = sum_{3k <= D} Z^{(k)} in T-coordinates.
FormalSeries z_cutjoin(int max_degree);

/// Checks that every coefficient of L_n(z) of degree <= d_out vanishes.
/// Throws DegreeError unless z's bound is at least d_out + 2n + 3.
CheckReport virasoro_check(int n, const FormalSeries& z, int d_out);

/// Checks [L_m, L_n] = (m - n) L_{m+n} on every T-monomial of degree <= max_degree.
CheckReport commutator_check(int m, int n, int max_degree);

/// All monomials in odd T variables of degree exactly d.
std::vector<Monomial> odd_t_monomials(int d);

}  // namespace wktau

#endif  // WKTAU_VIRASORO_HPP
