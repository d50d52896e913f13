#include <wktau/tau.hpp>

#include <algorithm>

#include <wktau/amatrix.hpp>
#include <wktau/schur.hpp>

namespace wktau {

std::vector<SchurCoefficient> z_schur(int max_degree) {
    if (max_degree < 0) {
        throw UsageError("degree bound must be nonnegative");
    }
    // Hook arms and legs of |mu| <= D are at most D - 1.
    const CoeffMatrix table = a_block(std::max(max_degree, 0), std::max(max_degree, 0));
    std::vector<SchurCoefficient> out;
    for (int weight = 0; weight <= max_degree; weight += 3) {
        for (Partition& mu : enumerate_partitions(weight)) {
            ExactScalar value = a_mu(mu, table);
            out.push_back({std::move(mu), std::move(value)});
        }
    }
    return out;
}

FormalSeries z_p(int max_degree) {
    FormalSeries z(Family::p, max_degree);
    for (const auto& [mu, value] : z_schur(max_degree)) {
        if (!value.is_zero()) {
            z += schur_to_p(mu).with_bound(max_degree) * value;
        }
    }
    return z;
}

namespace {

/// A variable of a family written as scale * T_index.
struct TImage {
    int index;
    ExactScalar scale;
};

TImage to_t_image(Family family, int index) {
    switch (family) {
        case Family::p:
            return {index, ExactScalar(index)};
        case Family::T:
            return {index, ExactScalar(1)};
        case Family::t: {
            // (-1)^a s prod_{j=0}^{a} (j + 1/2) = (-1)^a s (2a+1)!! / 2^{a+1}
            const Rational magnitude = double_factorial(2L * index + 1) / pow(Rational(2), static_cast<unsigned>(index + 1));
            const ExactScalar value = ExactScalar::s() * ExactScalar(magnitude);
            return {2 * index + 1, index % 2 == 0 ? value : -value};
        }
        case Family::u: {
            const ExactScalar value = ExactScalar(Rational(0), Rational(1, 2));
            return {2 * index + 1, index % 2 == 0 ? value : -value};
        }
    }
    throw UsageError("unknown family");
}

/// Index in `family` of the variable proportional to T_t_index.
std::optional<int> from_t_index(Family family, int t_index) {
    if (family == Family::p || family == Family::T) {
        return t_index;
    }
    if (t_index % 2 == 0) {
        return std::nullopt;
    }
    return (t_index - 1) / 2;
}

}  // namespace

FormalSeries change_coords(const FormalSeries& series, Family target) {
    const Family source = series.family();
    if (source == target) {
        return series;
    }
    FormalSeries out(target, series.degree_bound());
    for (const auto& [mono, coeff] : series.terms()) {
        ExactScalar value = coeff;
        std::vector<Monomial::Factor> factors;
        for (const auto& [index, exp] : mono.factors()) {
            const TImage image = to_t_image(source, index);
            const std::optional<int> target_index = from_t_index(target, image.index);
            if (!target_index) {
                throw ConsistencyError("nonzero coefficient on " + mono.to_string(source) +
                                       ", which has an even index and no image in the " +
                                       std::string(family_name(target)) + " family");
            }
            const TImage back = to_t_image(target, *target_index);
            value *= pow(image.scale / back.scale, static_cast<unsigned>(exp));
            factors.emplace_back(*target_index, exp);
        }
        out.add_term(Monomial(std::move(factors)), value);
    }
    return out;
}

FormalSeries z_series(Family family, int max_degree) { return change_coords(z_p(max_degree), family); }

FormalSeries free_energy(const FormalSeries& z) {
    if (z.constant_term() != ExactScalar(1)) {
        throw UsageError("logarithm needs a series with constant term 1, got " + z.constant_term().to_string());
    }
    FormalSeries w = z - FormalSeries::constant(z.family(), z.degree_bound(), ExactScalar(1));
    FormalSeries f(z.family(), z.degree_bound());
    FormalSeries power = w;
    for (long k = 1; !power.is_zero(); ++k) {
        const ExactScalar weight(Rational(k % 2 == 1 ? 1 : -1, k));
        f += power * weight;
        power = power * w;
    }
    return f;
}

CorrelatorKey::CorrelatorKey(std::vector<int> indices) : indices_(std::move(indices)) {
    if (std::any_of(indices_.begin(), indices_.end(), [](int a) { return a < 0; })) {
        throw UsageError("descendant indices must be nonnegative");
    }
    std::sort(indices_.begin(), indices_.end());
}

std::optional<int> CorrelatorKey::genus() const { return monomial_genus(monomial()); }

int CorrelatorKey::degree() const {
    int d = 0;
    for (int a : indices_) {
        d += 2 * a + 1;
    }
    return d;
}

Rational CorrelatorKey::symmetry_factor() const {
    Rational out(1);
    const Monomial m = monomial();
    for (const auto& [index, exp] : m.factors()) {
        out *= factorial(exp);
    }
    return out;
}

std::string CorrelatorKey::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        out += (i == 0 ? "tau_" : " tau_") + std::to_string(indices_[i]);
    }
    return out + ">";
}

std::optional<int> monomial_genus(const Monomial& m) {
    int index_sum = 0;
    for (const auto& [a, exp] : m.factors()) {
        index_sum += a * exp;
    }
    const int three_g = index_sum - m.total_exponent() + 3;
    if (three_g < 0 || three_g % 3 != 0) {
        return std::nullopt;
    }
    return three_g / 3;
}

std::map<int, FormalSeries> genus_split(const FormalSeries& free_energy_t) {
    if (free_energy_t.family() != Family::t) {
        throw UsageError("genus split needs a series in t");
    }
    std::map<int, FormalSeries> out;
    for (const auto& [mono, coeff] : free_energy_t.terms()) {
        const std::optional<int> g = monomial_genus(mono);
        if (!g) {
            throw ConsistencyError("monomial " + mono.to_string(Family::t) + " violates the selection rule but has coefficient " +
                                   coeff.to_string());
        }
        auto it = out.try_emplace(*g, Family::t, free_energy_t.degree_bound()).first;
        it->second.add_term(mono, coeff);
    }
    return out;
}

Rational intersection(const CorrelatorKey& key, const FormalSeries& free_energy_t) {
    if (free_energy_t.family() != Family::t) {
        throw UsageError("intersection numbers are read off a series in t");
    }
    const ExactScalar coeff = free_energy_t.coefficient(key.monomial());
    if (!coeff.is_rational()) {
        throw ConsistencyError("coefficient of " + key.monomial().to_string(Family::t) + " is not rational: " + coeff.to_string());
    }
    return key.symmetry_factor() * coeff.re();
}

}  // namespace wktau
