#ifndef WKTAU_SCHUR_HPP
#define WKTAU_SCHUR_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <wktau/amatrix.hpp>
#include <wktau/exact.hpp>
#include <wktau/partition.hpp>
#include <wktau/series.hpp>

namespace wktau {

/// Memoized irreducible characters chi^mu_nu of the symmetric group,
/// evaluated by the Murnaghan-Nakayama border-strip rule. Thread-safe.
class CharacterTable {
public:
    /// Throws UsageError if |mu| != |nu|.
    Rational character(const Partition& mu, const Partition& nu);
    [[nodiscard]] std::size_t cached_entries() const;

private:
    long evaluate(const Partition& mu, const Partition& nu);

    std::map<std::pair<Partition, Partition>, long> memo_;
    mutable std::mutex mutex_;
};

/// chi^mu_nu on a process-wide cache.
Rational character(const Partition& mu, const Partition& nu);

/// s_mu = sum_nu chi^mu_nu / z_nu p_nu as a series in p with bound |mu|.
FormalSeries schur_to_p(const Partition& mu);

using ScalarMatrix = std::vector<std::vector<ExactScalar>>;

/// Determinant by Laplace expansion along the first row.
ExactScalar determinant_cofactor(const ScalarMatrix& matrix);
/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
ExactScalar determinant_bareiss(const ScalarMatrix& matrix);
/// Cofactor expansion up to 4x4, Bareiss above.
ExactScalar determinant(const ScalarMatrix& matrix);

/// A_mu = (-1)^{n_1+...+n_k} det(A_{m_i,n_j}) for mu = (m_1..m_k | n_1..n_k).
/// A_empty = 1. Throws UsageError if the table does not cover the hook entries.
ExactScalar a_mu(const Partition& mu, const CoeffMatrix& table);

}  // namespace wktau

#endif  // WKTAU_SCHUR_HPP
