#include <wktau/fock.hpp>

#include <algorithm>
#include <functional>

namespace wktau {

// Internally particles hold m for slot m + 1/2 and holes hold n for slot
// -n - 1/2, both sorted decreasing, which is exactly Frobenius (arms | legs).

WedgeState WedgeState::from_partition(const Partition& mu) {
    FrobeniusCoords fc = to_frobenius(mu);
    return {std::move(fc.arms), std::move(fc.legs)};
}

std::optional<Partition> WedgeState::to_partition() const {
    if (charge() != 0) {
        return std::nullopt;
    }
    return from_frobenius(FrobeniusCoords{particles, holes});
}

namespace {

bool contains(const std::vector<int>& values, int v) { return std::find(values.begin(), values.end(), v) != values.end(); }

void insert_sorted(std::vector<int>& values, int v) {
    values.insert(std::upper_bound(values.begin(), values.end(), v, std::greater<>()), v);
}

void erase_value(std::vector<int>& values, int v) { values.erase(std::find(values.begin(), values.end(), v)); }

int slots_above(int slot2, const WedgeState& state) {
    if (slot2 > 0) {
        const int m = (slot2 - 1) / 2;
        return static_cast<int>(std::count_if(state.particles.begin(), state.particles.end(), [&](int p) { return p > m; }));
    }
    const int n = (-slot2 - 1) / 2;
    const auto holes_above = std::count_if(state.holes.begin(), state.holes.end(), [&](int h) { return h < n; });
    return static_cast<int>(state.particles.size()) + n - static_cast<int>(holes_above);
}

void require_odd(int slot2) {
    if (slot2 % 2 == 0) {
        throw UsageError("fermion slots are half-integers; pass twice the slot value (odd)");
    }
}

}  // namespace

bool WedgeState::occupied(int slot2) const {
    require_odd(slot2);
    if (slot2 > 0) {
        return contains(particles, (slot2 - 1) / 2);
    }
    return !contains(holes, (-slot2 - 1) / 2);
}

SignedWedge insert_slot(int slot2, const WedgeState& state) {
    if (state.occupied(slot2)) {
        return std::nullopt;
    }
    const int sign = slots_above(slot2, state) % 2 == 0 ? 1 : -1;
    WedgeState out = state;
    if (slot2 > 0) {
        insert_sorted(out.particles, (slot2 - 1) / 2);
    } else {
        erase_value(out.holes, (-slot2 - 1) / 2);
    }
    return std::make_pair(sign, std::move(out));
}

SignedWedge remove_slot(int slot2, const WedgeState& state) {
    if (!state.occupied(slot2)) {
        return std::nullopt;
    }
    const int sign = slots_above(slot2, state) % 2 == 0 ? 1 : -1;
    WedgeState out = state;
    if (slot2 > 0) {
        erase_value(out.particles, (slot2 - 1) / 2);
    } else {
        insert_sorted(out.holes, (-slot2 - 1) / 2);
    }
    return std::make_pair(sign, std::move(out));
}

SignedState apply_bilinear(int m, int n, const Partition& mu) {
    if (m < 0 || n < 0) {
        throw UsageError("creator indices must be nonnegative");
    }
    const auto removed = remove_slot(-2 * n - 1, WedgeState::from_partition(mu));
    if (!removed) {
        return std::nullopt;
    }
    const auto inserted = insert_slot(2 * m + 1, removed->second);
    if (!inserted) {
        return std::nullopt;
    }
    return std::make_pair(removed->first * inserted->first, *inserted->second.to_partition());
}

FockVector::FockVector(int degree_bound) : degree_bound_(degree_bound) {
    if (degree_bound < 0) {
        throw UsageError("degree bound must be nonnegative");
    }
}

FockVector FockVector::vacuum(int degree_bound) {
    FockVector v(degree_bound);
    v.add_term(Partition(), ExactScalar(1));
    return v;
}

ExactScalar FockVector::coefficient(const Partition& mu) const {
    const auto it = terms_.find(mu);
    return it == terms_.end() ? ExactScalar() : it->second;
}

void FockVector::add_term(const Partition& mu, const ExactScalar& value) {
    if (value.is_zero() || mu.weight() > degree_bound_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mu, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FockVector& FockVector::operator+=(const FockVector& other) {
    for (const auto& [mu, value] : other.terms_) {
        add_term(mu, value);
    }
    return *this;
}

FockVector& FockVector::operator*=(const ExactScalar& factor) {
    if (factor.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.second *= factor;
    }
    return *this;
}

FockVector apply_creation_operator(const CoeffMatrix& table, const FockVector& v) {
    FockVector out(v.degree_bound());
    const auto positions = table.nonzero_positions();
    for (const auto& [mu, value] : v.terms()) {
        for (const auto& [m, n] : positions) {
            if (mu.weight() + m + n + 1 > v.degree_bound()) {
                continue;
            }
            if (const SignedState image = apply_bilinear(m, n, mu)) {
                const ExactScalar term = table.at(m, n) * value;
                out.add_term(image->second, image->first > 0 ? term : -term);
            }
        }
    }
    return out;
}

FockVector fock_exp(const CoeffMatrix& table, int max_degree) {
    if (max_degree > 0 && (table.max_m() < max_degree - 1 || table.max_n() < max_degree - 1)) {
        throw UsageError("coefficient table must cover m, n <= " + std::to_string(max_degree - 1));
    }
    FockVector total = FockVector::vacuum(max_degree);
    FockVector power = total;
    for (long k = 1; !power.is_zero(); ++k) {
        power = apply_creation_operator(table, power);
        power *= ExactScalar(Rational(1, k));
        total += power;
    }
    return total;
}

}  // namespace wktau
