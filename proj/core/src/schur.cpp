#include <wktau/schur.hpp>

#include <algorithm>
#include <functional>

namespace wktau {

namespace {

/// Beta-set of mu padded to `length` parts: beta_i = mu_i + length - 1 - i.
std::vector<int> beta_set(const Partition& mu, std::size_t length) {
    std::vector<int> beta(length);
    for (std::size_t i = 0; i < length; ++i) {
        beta[i] = mu.part(i) + static_cast<int>(length - 1 - i);
    }
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const std::size_t length = beta.size();
    std::vector<int> parts;
    for (std::size_t i = 0; i < length; ++i) {
        const int part = beta[i] - static_cast<int>(length - 1 - i);
        if (part > 0) {
            parts.push_back(part);
        }
    }
    return Partition(std::move(parts));
}

}  // namespace

long CharacterTable::evaluate(const Partition& mu, const Partition& nu) {
    if (nu.empty()) {
        return 1;
    }
    const auto key = std::make_pair(mu, nu);
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    // Strip the largest part of nu as a border strip of mu. On the beta-set a
    // strip of length r is a bead moving from b to b - r onto an empty slot;
    // its height is the number of beads jumped over.
    const int r = nu.parts().front();
    const Partition rest(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
    const std::vector<int> beta = beta_set(mu, mu.length());
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        const auto height = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > target && b < beta[i]; });
        std::vector<int> moved = beta;
        moved[i] = target;
        const long sub = evaluate(from_beta_set(std::move(moved)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(key, total);
    return total;
}

Rational CharacterTable::character(const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight()) {
        throw UsageError("character needs |mu| = |nu|, got " + mu.to_string() + " and " + nu.to_string());
    }
    std::lock_guard lock(mutex_);
    return Rational(evaluate(mu, nu));
}

std::size_t CharacterTable::cached_entries() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

Rational character(const Partition& mu, const Partition& nu) {
    static CharacterTable table;
    return table.character(mu, nu);
}

FormalSeries schur_to_p(const Partition& mu) {
    FormalSeries out(Family::p, mu.weight());
    for (const Partition& nu : enumerate_partitions(mu.weight())) {
        const Rational chi = character(mu, nu);
        if (!chi.is_zero()) {
            out.add_term(Monomial::from_indices(nu.parts()), ExactScalar(chi / z_order(nu)));
        }
    }
    return out;
}

ExactScalar determinant_cofactor(const ScalarMatrix& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) {
        return ExactScalar(1);
    }
    if (n == 1) {
        return matrix[0][0];
    }
    ExactScalar total;
    for (std::size_t col = 0; col < n; ++col) {
        if (matrix[0][col].is_zero()) {
            continue;
        }
        ScalarMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t row = 1; row < n; ++row) {
            std::vector<ExactScalar> line;
            line.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    line.push_back(matrix[row][c]);
                }
            }
            minor.push_back(std::move(line));
        }
        const ExactScalar term = matrix[0][col] * determinant_cofactor(minor);
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

ExactScalar determinant_bareiss(const ScalarMatrix& matrix) {
    ScalarMatrix a = matrix;
    const std::size_t n = a.size();
    if (n == 0) {
        return ExactScalar(1);
    }
    bool negate = false;
    ExactScalar previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return {};
            }
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            }
        }
        previous = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

ExactScalar determinant(const ScalarMatrix& matrix) {
    return matrix.size() <= 4 ? determinant_cofactor(matrix) : determinant_bareiss(matrix);
}

ExactScalar a_mu(const Partition& mu, const CoeffMatrix& table) {
    const FrobeniusCoords fc = to_frobenius(mu);
    const std::size_t k = fc.rank();
    ScalarMatrix hooks(k, std::vector<ExactScalar>(k));
    int leg_sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        leg_sum += fc.legs[i];
        for (std::size_t j = 0; j < k; ++j) {
            hooks[i][j] = table.at(fc.arms[i], fc.legs[j]);
        }
    }
    const ExactScalar det = determinant(hooks);
    return leg_sum % 2 == 0 ? det : -det;
}

}  // namespace wktau
