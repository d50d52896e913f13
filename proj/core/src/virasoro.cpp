#include <wktau/virasoro.hpp>

#include <algorithm>
#include <cstdlib>

#include <wktau/partition.hpp>

namespace wktau {

namespace {

bool is_odd(int n) { return n % 2 != 0; }

/// Applies one letter to c * mono, in place. Returns false if the result is zero.
bool apply_letter(int letter, Monomial& mono, ExactScalar& coeff) {
    if (letter < 0) {
        mono = *mono.shifted(-letter, 1);
        coeff *= ExactScalar(-letter);
        return true;
    }
    const int e = mono.exponent(letter);
    if (e == 0) {
        return false;
    }
    mono = *mono.shifted(letter, -1);
    coeff *= ExactScalar(e);
    return true;
}

ExactScalar sign_power(int n) { return ExactScalar(n % 2 == 0 ? 1 : -1); }

}  // namespace

FormalSeries gamma_apply(int n, const FormalSeries& series) {
    if (!is_odd(n)) {
        throw UsageError("gamma_n needs an odd index, got " + std::to_string(n));
    }
    LadderOperator op;
    op.add(ExactScalar(1), {n});
    return op.apply(series);
}

void LadderOperator::add(const ExactScalar& coefficient, Word word) {
    for (int letter : word) {
        if (!is_odd(letter)) {
            throw UsageError("gamma letters must be odd, got " + std::to_string(letter));
        }
    }
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(word), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FormalSeries LadderOperator::apply(const FormalSeries& series) const {
    if (series.family() != Family::T) {
        throw UsageError("ladder operators act on series in T");
    }
    FormalSeries out(Family::T, series.degree_bound());
    for (const auto& [word, c] : terms_) {
        for (const auto& [mono, value] : series.terms()) {
            Monomial m = mono;
            ExactScalar coeff = c * value;
            bool alive = true;
            for (auto it = word.rbegin(); it != word.rend() && alive; ++it) {
                alive = apply_letter(*it, m, coeff);
            }
            if (alive) {
                out.add_term(m, coeff);
            }
        }
    }
    return out;
}

LadderOperator& LadderOperator::operator+=(const LadderOperator& other) {
    for (const auto& [word, c] : other.terms_) {
        add(c, word);
    }
    return *this;
}

LadderOperator& LadderOperator::operator*=(const ExactScalar& factor) {
    if (factor.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.second *= factor;
    }
    return *this;
}

std::vector<LadderOperator::Word> normal_ordered_pairs(int total, int max_degree) {
    std::vector<LadderOperator::Word> out;
    // A mixed pair (-k, total + k) needs total + k <= max_degree; a pair of
    // derivatives has both letters below total; a pair of multiplications
    // needs total < 0.
    const int reach = max_degree + std::abs(total) + 2;
    for (int i = -reach; i <= reach; ++i) {
        const int j = total - i;
        if (!is_odd(i) || !is_odd(j)) {
            continue;
        }
        if ((i > 0 && i > max_degree) || (j > 0 && j > max_degree)) {
            continue;
        }
        // Derivatives to the right.
        if (i > 0 && j < 0) {
            out.push_back({j, i});
        } else {
            out.push_back({i, j});
        }
    }
    return out;
}

LadderOperator build_L(int n, int max_degree) {
    if (n < -1) {
        throw UsageError("L_n is defined for n >= -1");
    }
    LadderOperator op;
    op.add(sign_power(n + 1) * ExactScalar::s(), {2 * n + 3});
    const ExactScalar quarter = sign_power(n) * ExactScalar(Rational(1, 4));
    for (auto& word : normal_ordered_pairs(2 * n, max_degree)) {
        op.add(quarter, std::move(word));
    }
    if (n == 0) {
        op.add(ExactScalar(Rational(1, 16)), {});
    }
    return op;
}

LadderOperator build_W(int max_degree) {
    LadderOperator op;
    const ExactScalar prefactor = ExactScalar(Rational(0), Rational(-1, 24));
    // Inner pairs have letters summing to 2k - 2; beyond k = max_degree + 1
    // every pair contains a derivative above max_degree.
    for (int k = 0; k <= max_degree + 1; ++k) {
        const int outer = -(2 * k + 1);
        for (auto& inner : normal_ordered_pairs(2 * k - 2, max_degree)) {
            LadderOperator::Word word{outer};
            word.insert(word.end(), inner.begin(), inner.end());
            op.add(prefactor, std::move(word));
        }
        if (k == 1) {
            op.add(prefactor * ExactScalar(Rational(1, 4)), {outer});
        }
    }
    return op;
}

FormalSeries cutjoin_step(const FormalSeries& zk, int k) {
    if (zk.family() != Family::T) {
        throw UsageError("cut-and-join acts on series in T");
    }
    if (k < 0 || !zk.is_homogeneous(3 * k)) {
        throw UsageError("cut-and-join step " + std::to_string(k) + " needs input homogeneous of degree " +
                         std::to_string(3 * k));
    }
    const FormalSeries input = zk.with_bound(std::max(zk.degree_bound(), 3 * k + 3));
    return build_W(3 * k).apply(input) * ExactScalar(Rational(1, k + 1));
}

FormalSeries z_cutjoin(int max_degree) {
    if (max_degree < 0) {
        throw UsageError("degree bound must be nonnegative");
    }
    FormalSeries z = FormalSeries::constant(Family::T, max_degree, ExactScalar(1));
    FormalSeries slice = z;
    for (int k = 0; 3 * (k + 1) <= max_degree; ++k) {
        slice = cutjoin_step(slice, k);
        z += slice;
    }
    return z;
}

CheckReport virasoro_check(int n, const FormalSeries& z, int d_out) {
    if (z.family() != Family::T) {
        throw UsageError("Virasoro check needs the tau-function in T");
    }
    const int needed = d_out + 2 * n + 3;
    if (z.degree_bound() < needed) {
        throw DegreeError("L_" + std::to_string(n) + " up to output degree " + std::to_string(d_out) + " needs input degree " +
                          std::to_string(needed) + ", have " + std::to_string(z.degree_bound()) + "; increase D");
    }
    CheckReport report;
    report.check = "virasoro";
    report.add_param("n", n);
    report.add_param("degree", z.degree_bound());
    report.add_param("output_degree", d_out);
    const FormalSeries image = build_L(n, z.degree_bound()).apply(z);
    for (const auto& [mono, value] : image.sorted_terms()) {
        if (mono.degree(Family::T) <= d_out) {
            report.fail(mono.to_string(Family::T), value);
        }
    }
    return report;
}

std::vector<Monomial> odd_t_monomials(int d) {
    std::vector<Monomial> out;
    for (const Partition& mu : enumerate_partitions(d)) {
        const auto& parts = mu.parts();
        if (std::all_of(parts.begin(), parts.end(), is_odd)) {
            out.push_back(Monomial::from_indices(parts));
        }
    }
    return out;
}

CheckReport commutator_check(int m, int n, int max_degree) {
    CheckReport report;
    report.check = "commutator";
    report.add_param("m", m);
    report.add_param("n", n);
    report.add_param("degree", max_degree);
    // Each L raises degree by at most 2, so this bound holds every
    // intermediate and final monomial without truncation.
    const int bound = max_degree + 4;
    const LadderOperator lm = build_L(m, bound);
    const LadderOperator ln = build_L(n, bound);
    const LadderOperator lmn = build_L(m + n, bound);
    for (int d = 0; d <= max_degree; ++d) {
        for (const Monomial& mono : odd_t_monomials(d)) {
            FormalSeries x(Family::T, bound);
            x.add_term(mono, ExactScalar(1));
            const FormalSeries lhs = lm(ln(x)) - ln(lm(x));
            const FormalSeries rhs = lmn(x) * ExactScalar(m - n);
            for (const auto& [where, value] : (lhs - rhs).sorted_terms()) {
                report.fail("[" + mono.to_string(Family::T) + "] " + where.to_string(Family::T), value);
            }
        }
    }
    return report;
}

}  // namespace wktau
