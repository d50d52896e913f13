#include "support.hpp"

#include <wktau/amatrix.hpp>
#include <wktau/fock.hpp>
#include <wktau/schur.hpp>

using namespace wktau;
using namespace wktau::test;

namespace {

// Charge-0 and near-charge-0 states: random small sets of particles and holes.
WedgeState random_state() {
    std::uniform_int_distribution<int> count(0, 3), slot(0, 6);
    WedgeState w;
    for (int i = count(rng()); i > 0; --i) {
        const int p = slot(rng());
        if (std::find(w.particles.begin(), w.particles.end(), p) == w.particles.end()) {
            w.particles.push_back(p);
        }
    }
    for (int i = count(rng()); i > 0; --i) {
        const int h = slot(rng());
        if (std::find(w.holes.begin(), w.holes.end(), h) == w.holes.end()) {
            w.holes.push_back(h);
        }
    }
    std::sort(w.particles.rbegin(), w.particles.rend());
    std::sort(w.holes.rbegin(), w.holes.rend());
    return w;
}

using Combination = std::map<WedgeState, int>;

void accumulate(Combination& c, const SignedWedge& term, int factor) {
    if (term) {
        c[term->second] += factor * term->first;
        if (c[term->second] == 0) {
            c.erase(term->second);
        }
    }
}

// op(slot, state) applied after another op.
template <typename F, typename G>
Combination compose(F outer, int a, G inner, int b, const WedgeState& w) {
    Combination c;
    if (const SignedWedge first = inner(b, w)) {
        accumulate(c, outer(a, first->second), first->first);
    }
    return c;
}

Combination add(Combination a, const Combination& b) {
    for (const auto& [k, v] : b) {
        a[k] += v;
        if (a[k] == 0) {
            a.erase(k);
        }
    }
    return a;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("wedge states of partitions") {
    const WedgeState w = WedgeState::from_partition(Partition{3, 3});
    CHECK(w.particles == std::vector<int>{2, 1});
    CHECK(w.holes == std::vector<int>{1, 0});
    CHECK(w.charge() == 0);
    CHECK(w.to_partition() == Partition{3, 3});
    CHECK(w.occupied(5));    // 5/2
    CHECK_FALSE(w.occupied(-1));  // -1/2 emptied
    CHECK(w.occupied(-5));   // -5/2 still in the sea
    CHECK_THROWS_AS(static_cast<void>(w.occupied(2)), UsageError);
    WedgeState charged{{0}, {}};
    CHECK_FALSE(charged.to_partition().has_value());
}

TEST_CASE("single hooks") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            const SignedState r = apply_bilinear(m, n, Partition{});
            REQUIRE(r.has_value());
            CHECK(r->second == from_frobenius({{m}, {n}}));
            CHECK(r->first == (n % 2 == 0 ? 1 : -1));
        }
    }
    CHECK_FALSE(apply_bilinear(0, 0, Partition{1}).has_value());
    CHECK_THROWS_AS(apply_bilinear(-1, 0, Partition{}), UsageError);
}

TEST_CASE("anticommutation relations") {
    for (int trial = 0; trial < 300; ++trial) {
        const WedgeState w = random_state();
        std::uniform_int_distribution<int> pick(-7, 6);
        const int a = 2 * pick(rng()) + 1, b = 2 * pick(rng()) + 1;
        // psi psi + psi psi = 0, psi* psi* + psi* psi* = 0
        CHECK(add(compose(insert_slot, a, insert_slot, b, w), compose(insert_slot, b, insert_slot, a, w)).empty());
        CHECK(add(compose(remove_slot, a, remove_slot, b, w), compose(remove_slot, b, remove_slot, a, w)).empty());
        // psi_{-r} psi*_{r'} + psi*_{r'} psi_{-r} = delta
        const Combination anti = add(compose(insert_slot, a, remove_slot, b, w), compose(remove_slot, b, insert_slot, a, w));
        if (a == b) {
            REQUIRE(anti.size() == 1);
            CHECK(anti.begin()->first == w);
            CHECK(anti.begin()->second == 1);
        } else {
            CHECK(anti.empty());
        }
    }
}

TEST_CASE("exponential of the creation operator") {
    const CoeffMatrix table = a_block(8, 8);
    const FockVector v = fock_exp(table, 9);
    CHECK(v.coefficient(Partition{}) == real(1));
    CHECK(v.coefficient(Partition{3}) == imag(-5, 96));
    CHECK(v.coefficient(Partition{2, 2, 2}) == real(70, 9216));
    CHECK(v.coefficient(Partition{4, 2}).is_zero());
    CHECK(v.coefficient(Partition{2, 2}).is_zero());
    for (const auto& [mu, value] : v.terms()) {
        CHECK(mu.weight() % 3 == 0);
    }
    CHECK_THROWS_AS(fock_exp(a_block(3, 3), 9), UsageError);
}

TEST_CASE("Fock expansion equals determinant formula up to weight 9") {
    const CoeffMatrix table = a_block(8, 8);
    const FockVector v = fock_exp(table, 9);
    for (int n = 0; n <= 9; ++n) {
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK_MESSAGE(v.coefficient(mu) == a_mu(mu, table), mu.to_string());
        }
    }
}

TEST_CASE("vector arithmetic") {
    FockVector v(3);
    v.add_term(Partition{2, 1}, real(1));
    v.add_term(Partition{4}, real(1));  // above bound
    CHECK(v.terms().size() == 1);
    v *= real(3);
    CHECK(v.coefficient(Partition{2, 1}) == real(3));
    FockVector w(3);
    w.add_term(Partition{2, 1}, real(-3));
    v += w;
    CHECK(v.is_zero());
    CHECK_THROWS_AS(FockVector(-1), UsageError);
}

}
