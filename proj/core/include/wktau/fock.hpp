#ifndef WKTAU_FOCK_HPP
#define WKTAU_FOCK_HPP

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <wktau/amatrix.hpp>
#include <wktau/exact.hpp>
#include <wktau/partition.hpp>

namespace wktau {

/// Basis vector of the semi-infinite wedge space, stored as its finite
/// difference from the vacuum -1/2 ^ -3/2 ^ ...:
///   particles: occupied slots m + 1/2 (m >= 0), decreasing;
///   holes:     empty slots -n - 1/2 (n >= 0), decreasing.
/// Slots are addressed by twice their value (an odd integer).
struct WedgeState {
    std::vector<int> particles;
    std::vector<int> holes;

    static WedgeState from_partition(const Partition& mu);
    [[nodiscard]] int charge() const { return static_cast<int>(particles.size()) - static_cast<int>(holes.size()); }
    /// The partition with these Frobenius coordinates; nullopt off charge 0.
    [[nodiscard]] std::optional<Partition> to_partition() const;
    [[nodiscard]] bool occupied(int slot2) const;

    friend bool operator==(const WedgeState&, const WedgeState&) = default;
    friend auto operator<=>(const WedgeState&, const WedgeState&) = default;
};

using SignedWedge = std::optional<std::pair<int, WedgeState>>;

/// psi_{-r}: wedges slot r (given as slot2 = 2r) into its sorted position with
/// sign (-1)^{#occupied slots above r}; zero if r is already occupied.
SignedWedge insert_slot(int slot2, const WedgeState& state);
/// psi*_r: removes slot r with sign (-1)^{#occupied slots above r}; zero if
/// r is empty.
SignedWedge remove_slot(int slot2, const WedgeState& state);

/// A basis vector with a sign, or nothing when an operator annihilates.
using SignedState = std::optional<std::pair<int, Partition>>;

/// psi_{-m-1/2} psi*_{-n-1/2} |mu>.
SignedState apply_bilinear(int m, int n, const Partition& mu);

/// Vector in the charge-0 Fock space in the orthonormal basis |mu>,
/// truncated at |mu| <= degree_bound.
class FockVector {
public:
    explicit FockVector(int degree_bound);
    static FockVector vacuum(int degree_bound);

    [[nodiscard]] int degree_bound() const { return degree_bound_; }
    [[nodiscard]] const std::map<Partition, ExactScalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] ExactScalar coefficient(const Partition& mu) const;

    /// Partitions above the bound are dropped.
    void add_term(const Partition& mu, const ExactScalar& value);

    FockVector& operator+=(const FockVector& other);
    FockVector& operator*=(const ExactScalar& factor);

private:
    int degree_bound_;
    std::map<Partition, ExactScalar> terms_;
};

/// A |v> for A = sum A_{m,n} psi_{-m-1/2} psi*_{-n-1/2} over the table.
FockVector apply_creation_operator(const CoeffMatrix& table, const FockVector& v);

/// e^A |0> truncated at |mu| <= max_degree. Throws UsageError unless the table
/// covers m, n <= max_degree - 1.
FockVector fock_exp(const CoeffMatrix& table, int max_degree);

}  // namespace wktau

#endif  // WKTAU_FOCK_HPP
