#include <wktau/amatrix.hpp>

#include <algorithm>

namespace wktau {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::linear(const Rational& shift) { return Polynomial({shift, Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (int p = degree(); p >= 0; --p) {
        const Rational& c = coeffs_[static_cast<std::size_t>(p)];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (p == 0 || mag != Rational(1)) {
            out += mag.to_string();
        }
        if (p >= 1) {
            out += 'x';
        }
        if (p >= 2) {
            out += '^' + std::to_string(p);
        }
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    std::vector<Rational> out = a.coeffs_;
    for (auto& v : out) {
        v *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial falling_factorial(const Rational& shift, int j) {
    Polynomial out({Rational(1)});
    for (int i = 0; i < j; ++i) {
        out = out * Polynomial::linear(shift - Rational(i));
    }
    return out;
}

Rational b_const(int n) {
    if (n < 0) {
        throw UsageError("b_n needs n >= 0");
    }
    return pow(Rational(2), static_cast<unsigned>(n)) * double_factorial(6L * n + 1) / factorial(2L * n);
}

namespace {

const Polynomial& cached_b_poly(int n) {
    static std::mutex mutex;
    static std::vector<Polynomial> cache;
    std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        const int k = static_cast<int>(cache.size());
        Polynomial acc;
        for (int j = 1; j <= k; ++j) {
            acc = acc + (pow(Rational(108), static_cast<unsigned>(j)) * b_const(k - j)) * falling_factorial(Rational(k), j - 1);
        }
        cache.push_back(Rational(1, 6) * acc);
    }
    return cache[static_cast<std::size_t>(n)];
}

/// -s/144, the common ratio of every closed form.
ExactScalar hook_ratio() { return {Rational(0), Rational(-1, 144)}; }

}  // namespace

Polynomial b_poly(int n) {
    if (n < 0) {
        throw UsageError("B_n needs n >= 0");
    }
    return cached_b_poly(n);
}

ExactScalar a_branch(HookBranch branch, int a, int b) {
    if (a < 1 || b < 0) {
        throw UsageError("closed-form branch parameters need a >= 1, b >= 0");
    }
    Rational magnitude = double_factorial(6L * a + 1) / factorial(2L * (a + b));
    for (int j = 0; j < b; ++j) {
        magnitude *= Rational(a + j);
    }
    for (int j = 1; j <= b; ++j) {
        magnitude *= Rational(2L * a + 2L * j - 1);
    }
    const int pole = branch == HookBranch::second ? 6 * a - 1 : 6 * a + 1;
    magnitude *= b_poly(b)(Rational(a)) + b_const(b) / Rational(pole);
    const bool negate = (b % 2 == 1) != (branch == HookBranch::second);
    const ExactScalar value = pow(hook_ratio(), static_cast<unsigned>(a + b)) * ExactScalar(magnitude);
    return negate ? -value : value;
}

ExactScalar a_closed(int m, int n) {
    if (m < 0 || n < 0) {
        throw UsageError("A_{m,n} needs m, n >= 0");
    }
    if ((m + n) % 3 != 2) {
        return {};
    }
    switch (m % 3) {
        case 2:
            return a_branch(HookBranch::first, (m + 1) / 3, n / 3);
        case 1:
            return a_branch(HookBranch::second, (m + 2) / 3, (n - 1) / 3);
        default:
            return a_branch(HookBranch::third, m / 3 + 1, (n - 2) / 3);
    }
}

ExactScalar RecursiveTable::seed_value(int k) const {
    // Nonzero only at k = 3j - 1: (-s/144)^j (6j-1)!!/(2j)!, with the extra
    // sign (-1)^{3j-1} on the row axis.
    if ((k + 1) % 3 != 0) {
        return {};
    }
    const int j = (k + 1) / 3;
    ExactScalar value = pow(hook_ratio(), static_cast<unsigned>(j)) *
                        ExactScalar(double_factorial(6L * j - 1) / factorial(2L * j));
    if (seed_ == RecursionSeed::row && (3 * j - 1) % 2 == 1) {
        value = -value;
    }
    return value;
}

ExactScalar RecursiveTable::at(int m, int n) {
    std::lock_guard lock(mutex_);
    return lookup(m, n);
}

ExactScalar RecursiveTable::lookup(int m, int n) {
    if (m < 0 || n < 0) {
        return {};
    }
    if (seed_ == RecursionSeed::column && n == 0) {
        return seed_value(m);
    }
    if (seed_ == RecursionSeed::row && m == 0) {
        return seed_value(n);
    }
    const auto key = std::make_pair(m, n);
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    // L_{-1} constraint at (i, j):
    //   A_{i,j+1} = A_{i+1,j} - A_{i,0} A_{0,j}
    //             - 1/(4s) (d_{i,1} d_{j,0} - d_{i,0} d_{j,1} + (2i-1) A_{i-2,j} + (2j-1) A_{i,j-2}).
    // The column seed solves it for A_{i,j+1}, the row seed for A_{i+1,j}.
    const ExactScalar inv_4s = ExactScalar(1) / (ExactScalar(4) * ExactScalar::s());
    auto bracket = [&](int i, int j) {
        ExactScalar delta((i == 1 && j == 0 ? 1 : 0) - (i == 0 && j == 1 ? 1 : 0));
        return delta + ExactScalar(2L * i - 1) * lookup(i - 2, j) + ExactScalar(2L * j - 1) * lookup(i, j - 2);
    };
    ExactScalar value;
    if (seed_ == RecursionSeed::column) {
        const int i = m;
        const int j = n - 1;
        value = lookup(i + 1, j) - lookup(i, 0) * lookup(0, j) - inv_4s * bracket(i, j);
    } else {
        const int i = m - 1;
        const int j = n;
        value = lookup(i, j + 1) + lookup(i, 0) * lookup(0, j) + inv_4s * bracket(i, j);
    }
    memo_.emplace(key, value);
    return value;
}

ExactScalar a_recursive(int m, int n) {
    static RecursiveTable table(RecursionSeed::column);
    return table.at(m, n);
}

CoeffMatrix::CoeffMatrix(int max_m, int max_n) : max_m_(max_m), max_n_(max_n) {
    if (max_m < 0 || max_n < 0) {
        throw UsageError("coefficient block bounds must be nonnegative");
    }
    entries_.assign(static_cast<std::size_t>(max_m + 1) * static_cast<std::size_t>(max_n + 1),
                    Entry{ExactScalar(), Provenance::closed_form});
}

std::size_t CoeffMatrix::offset(int m, int n) const {
    if (!covers(m, n)) {
        throw UsageError("A_{" + std::to_string(m) + "," + std::to_string(n) + "} is outside the coefficient table (" +
                         std::to_string(max_m_) + "x" + std::to_string(max_n_) + ")");
    }
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(max_n_ + 1) + static_cast<std::size_t>(n);
}

const ExactScalar& CoeffMatrix::at(int m, int n) const { return entries_[offset(m, n)].value; }

Provenance CoeffMatrix::provenance(int m, int n) const { return entries_[offset(m, n)].provenance; }

void CoeffMatrix::set(int m, int n, ExactScalar value, Provenance provenance) {
    entries_[offset(m, n)] = Entry{std::move(value), provenance};
}

std::vector<std::pair<int, int>> CoeffMatrix::nonzero_positions() const {
    std::vector<std::pair<int, int>> out;
    for (int m = 0; m <= max_m_; ++m) {
        for (int n = 0; n <= max_n_; ++n) {
            if (!at(m, n).is_zero()) {
                out.emplace_back(m, n);
            }
        }
    }
    return out;
}

CoeffMatrix a_block(int max_m, int max_n) {
    CoeffMatrix table(max_m, max_n);
    for (int m = 0; m <= max_m; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            table.set(m, n, a_closed(m, n), Provenance::closed_form);
        }
    }
    return table;
}

}  // namespace wktau
