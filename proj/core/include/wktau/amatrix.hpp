#ifndef WKTAU_AMATRIX_HPP
#define WKTAU_AMATRIX_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wktau/exact.hpp>

namespace wktau {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    /// Trailing zero coefficients are trimmed.
    explicit Polynomial(std::vector<Rational> coefficients);

    /// The monic linear polynomial x + shift.
    static Polynomial linear(const Rational& shift);

    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational coefficient(int power) const;
    [[nodiscard]] Rational operator()(const Rational& x) const;

    /// e.g. "1944x + 5778".
    [[nodiscard]] std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Falling factorial (a)_[j] = a(a-1)...(a-j+1) as a polynomial in x, a = x + shift.
Polynomial falling_factorial(const Rational& shift, int j);

/// b_n = 2^n (6n+1)!! / (2n)!.
Rational b_const(int n);

/// B_n(x) = 1/6 sum_{j=1}^{n} 108^j b_{n-j} (x+n)_[j-1]; B_0 = 0.
Polynomial b_poly(int n);

/// The three overlapping parametrizations of the support of A.
enum class HookBranch {
    first,   ///< A_{3a-1, 3b}
    second,  ///< A_{3a-2, 3b+1}
    third,   ///< A_{3a-3, 3b+2}
};

/// Closed-form value of one branch at parameters a >= 1, b >= 0.
ExactScalar a_branch(HookBranch branch, int a, int b);

/// Closed-form A_{m,n}. Zero unless m + n = 2 (mod 3); otherwise dispatches
/// on m mod 3 (2 -> first, 1 -> second, 0 -> third branch).
ExactScalar a_closed(int m, int n);

/// Which axis carries the initial data of the L_{-1} recursion.
enum class RecursionSeed {
    column,  ///< A_{m,0} given; iterate in increasing n.
    row,     ///< A_{0,n} given; iterate in increasing m.
};

/// A_{m,n} computed purely from the L_{-1} recursion and its seed values,
/// memoized. Entries with a negative index are zero. Thread-safe.
class RecursiveTable {
public:
    explicit RecursiveTable(RecursionSeed seed = RecursionSeed::column) : seed_(seed) {}

    ExactScalar at(int m, int n);
    [[nodiscard]] RecursionSeed seed() const { return seed_; }

private:
    ExactScalar lookup(int m, int n);
    ExactScalar seed_value(int k) const;

    RecursionSeed seed_;
    std::map<std::pair<int, int>, ExactScalar> memo_;
    std::recursive_mutex mutex_;
};

/// a_recursive(m, n) on a process-wide column-seeded table.
ExactScalar a_recursive(int m, int n);

enum class Provenance { closed_form, recursion };

/// Table of A_{m,n} on a rectangle [0, max_m] x [0, max_n].
class CoeffMatrix {
public:
    struct Entry {
        ExactScalar value;
        Provenance provenance;
    };

    CoeffMatrix(int max_m, int max_n);

    [[nodiscard]] int max_m() const { return max_m_; }
    [[nodiscard]] int max_n() const { return max_n_; }
    [[nodiscard]] bool covers(int m, int n) const { return m >= 0 && n >= 0 && m <= max_m_ && n <= max_n_; }

    /// Throws UsageError outside the covered rectangle.
    [[nodiscard]] const ExactScalar& at(int m, int n) const;
    [[nodiscard]] Provenance provenance(int m, int n) const;
    void set(int m, int n, ExactScalar value, Provenance provenance);

    /// Positions of nonzero entries in row-major order.
    [[nodiscard]] std::vector<std::pair<int, int>> nonzero_positions() const;

private:
    [[nodiscard]] std::size_t offset(int m, int n) const;

    int max_m_;
    int max_n_;
    std::vector<Entry> entries_;
};

/// All entries m <= M, n <= N from the closed form.
CoeffMatrix a_block(int max_m, int max_n);

}  // namespace wktau

#endif  // WKTAU_AMATRIX_HPP
