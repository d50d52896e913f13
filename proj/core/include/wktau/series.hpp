#ifndef WKTAU_SERIES_HPP
#define WKTAU_SERIES_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <wktau/exact.hpp>

namespace wktau {

/// Variable family of a series. All four are graded by the same p-degree:
/// deg p_k = deg T_k = k, deg t_a = deg u_a = 2a + 1.
enum class Family { p, T, t, u };

std::string_view family_name(Family family);
/// Accepts "p", "T", "t", "u".
Family parse_family(std::string_view name);
/// p-grading weight of the variable with the given index in a family.
int variable_degree(Family family, int index);

/// Monomial prod x_i^{e_i}, stored as (index, exponent) pairs sorted by index
/// with positive exponents. Two monomials are equal iff their encodings are.
class Monomial {
public:
    using Factor = std::pair<int, int>;

    Monomial() = default;
    /// Factors may be unsorted or repeat an index; zero exponents are dropped.
    explicit Monomial(std::vector<Factor> factors);
    Monomial(std::initializer_list<Factor> factors) : Monomial(std::vector<Factor>(factors)) {}

    /// The monomial prod_i x_{indices_i}; repeated indices multiply.
    static Monomial from_indices(const std::vector<int>& indices);
    static Monomial variable(int index, int exponent = 1) { return Monomial({{index, exponent}}); }

    [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
    [[nodiscard]] bool is_one() const { return factors_.empty(); }
    [[nodiscard]] int exponent(int index) const;
    /// Sum of exponents (number of variables counted with multiplicity).
    [[nodiscard]] int total_exponent() const;
    [[nodiscard]] int degree(Family family) const;

    /// The monomial with the exponent of `index` changed by `delta`; nullopt if
    /// the result would have a negative exponent.
    [[nodiscard]] std::optional<Monomial> shifted(int index, int delta) const;

    /// e.g. "p1^3*p3"; "1" for the unit monomial.
    [[nodiscard]] std::string to_string(Family family) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<Factor> factors_;
};

/// Sparse truncated series over one variable family with exact coefficients.
///
/// The truncation is a hard invariant: every stored monomial has p-degree at
/// most degree_bound() and every stored coefficient is nonzero. Products and
/// insertions drop overflowing monomials eagerly.
class FormalSeries {
public:
    using TermMap = std::map<Monomial, ExactScalar>;

    FormalSeries(Family family, int degree_bound);
    static FormalSeries constant(Family family, int degree_bound, const ExactScalar& value);

    [[nodiscard]] Family family() const { return family_; }
    [[nodiscard]] int degree_bound() const { return degree_bound_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a monomial. Throws DegreeError above the bound.
    [[nodiscard]] ExactScalar coefficient(const Monomial& m) const;
    [[nodiscard]] ExactScalar constant_term() const { return coefficient(Monomial()); }

    /// Adds value to the coefficient of m. Monomials above the bound are dropped.
    void add_term(const Monomial& m, const ExactScalar& value);

    /// The part of exact degree d.
    [[nodiscard]] FormalSeries homogeneous_part(int d) const;
    /// True iff every stored monomial has degree d (the zero series qualifies).
    [[nodiscard]] bool is_homogeneous(int d) const;
    /// The same series with a lower (or equal) bound.
    [[nodiscard]] FormalSeries truncated(int degree_bound) const;
    /// Same terms under a larger bound (no information is invented).
    [[nodiscard]] FormalSeries with_bound(int degree_bound) const;
    /// Terms ordered by (degree, monomial) for deterministic emission.
    [[nodiscard]] std::vector<std::pair<Monomial, ExactScalar>> sorted_terms() const;

    FormalSeries operator-() const;
    FormalSeries& operator+=(const FormalSeries& other);
    FormalSeries& operator-=(const FormalSeries& other);
    FormalSeries& operator*=(const ExactScalar& factor);

    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(FormalSeries a, const ExactScalar& factor) { return a *= factor; }
    friend FormalSeries operator*(const ExactScalar& factor, FormalSeries a) { return a *= factor; }
    /// Truncated product; the result bound is the smaller of the two bounds.
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);

    /// Equal family and terms (bounds may differ).
    friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
        return a.family_ == b.family_ && a.terms_ == b.terms_;
    }

private:
    void require_compatible(const FormalSeries& other) const;

    Family family_;
    int degree_bound_;
    TermMap terms_;
};

}  // namespace wktau

#endif  // WKTAU_SERIES_HPP
