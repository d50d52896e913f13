#ifndef WKTAU_PARTITION_HPP
#define WKTAU_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <wktau/exact.hpp>

namespace wktau {

/// Integer partition mu_1 >= mu_2 >= ... > 0. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    /// Throws UsageError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "[3,2]" or "[]".
    static Partition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int weight() const { return weight_; }
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    /// Part i (0-based); zero past the end.
    [[nodiscard]] int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    /// Number of boxes on the main diagonal of the Young diagram.
    [[nodiscard]] int diagonal_size() const;
    /// Multiplicity of part k.
    [[nodiscard]] int multiplicity(int k) const;

    [[nodiscard]] Partition conjugate() const;

    /// "[3,2]"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& mu);

/// Frobenius coordinates (arms | legs), both strictly decreasing, equal length.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;

    [[nodiscard]] std::size_t rank() const { return arms.size(); }
    /// "(2,0|1,0)"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

FrobeniusCoords to_frobenius(const Partition& mu);
/// Throws UsageError on unequal lengths or non-strictly-decreasing coordinates.
Partition from_frobenius(const FrobeniusCoords& fc);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Centralizer order z_nu = prod_k k^{m_k} m_k!.
Rational z_order(const Partition& nu);

}  // namespace wktau

#endif  // WKTAU_PARTITION_HPP
