#ifndef WKTAU_TAU_HPP
#define WKTAU_TAU_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <wktau/exact.hpp>
#include <wktau/partition.hpp>
#include <wktau/series.hpp>

namespace wktau {

struct SchurCoefficient {
    Partition mu;
    ExactScalar value;
};

/// A_mu for every |mu| <= max_degree with |mu| = 0 (mod 3), zeros included,
/// ordered by weight and then reverse lexicographically.
std::vector<SchurCoefficient> z_schur(int max_degree);

/// Tau-function in power sums: sum of A_mu s_mu expanded in p, bound max_degree.
FormalSeries z_p(int max_degree);

/// Rescales variables monomial-wise between families. The substitutions are
///   p_k = k T_k,
///   t_a = (-1)^a s prod_{j=0}^{a} (j + 1/2) T_{2a+1},
///   u_a = (-1)^a (s/2) T_{2a+1},
/// all degree-preserving. Throws ConsistencyError when a p/T series with a
/// nonzero even-indexed monomial is sent to t or u.
FormalSeries change_coords(const FormalSeries& series, Family target);

/// Tau-function in any family, bound max_degree.
FormalSeries z_series(Family family, int max_degree);

/// log z as a truncated series. Throws UsageError unless z has constant term 1.
FormalSeries free_energy(const FormalSeries& z);

/// Multiset of descendant indices a_1..a_n of a correlator <tau_a1 ... tau_an>.
class CorrelatorKey {
public:
    CorrelatorKey() = default;
    /// Throws UsageError on a negative index.
    explicit CorrelatorKey(std::vector<int> indices);

    [[nodiscard]] const std::vector<int>& indices() const { return indices_; }
    /// g with a_1 + ... + a_n = 3g - 3 + n, if such an integer g >= 0 exists.
    [[nodiscard]] std::optional<int> genus() const;
    [[nodiscard]] Monomial monomial() const { return Monomial::from_indices(indices_); }
    /// p-degree of the t-monomial, sum (2a_i + 1).
    [[nodiscard]] int degree() const;
    /// prod_a k_a! where k_a is the multiplicity of a.
    [[nodiscard]] Rational symmetry_factor() const;
    /// "<tau_0 tau_0 tau_0>"
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<int> indices_;
};

/// Genus of a t-monomial by the selection rule, if it satisfies it.
std::optional<int> monomial_genus(const Monomial& m);

/// Splits F (in t) into genus components. Throws ConsistencyError if a nonzero
/// monomial violates the selection rule.
std::map<int, FormalSeries> genus_split(const FormalSeries& free_energy_t);

/// <prod tau_a^{k_a}> = (prod k_a!) * [prod t_a^{k_a}] F. Throws DegreeError
/// when the monomial exceeds the bound of F and ConsistencyError when the
/// coefficient is not rational.
Rational intersection(const CorrelatorKey& key, const FormalSeries& free_energy_t);

}  // namespace wktau

#endif  // WKTAU_TAU_HPP
