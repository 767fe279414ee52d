#include <catch2/catch_amalgamated.hpp>

#include "fourstab/forms.hpp"
#include "fourstab/json_io.hpp"
#include "support/oracles.hpp"

using namespace fourstab;
using namespace fourstab::lattice;

namespace {

IntegralForm k3_form() {
    return direct_sum(repeated_sum(negate(e8_form()), 2), repeated_sum(hyperbolic_plane(), 3));
}

// Outcome of stable_class including its typed failures, for invariance checks.
enum class ClassOutcome { Sphere, Even, Odd, NotUnimodular, BadEvenSignature };

ClassOutcome classify_outcome(const IntegralForm& f, Int& payload) {
    try {
        const StableClass c = stable_class(f);
        payload = c.kind == StableKind::EvenClass ? c.k3_count : c.odd_signature;
        switch (c.kind) {
            case StableKind::Sphere: return ClassOutcome::Sphere;
            case StableKind::EvenClass: return ClassOutcome::Even;
            case StableKind::OddClass: return ClassOutcome::Odd;
        }
    } catch (const NotUnimodular&) {
        return ClassOutcome::NotUnimodular;
    } catch (const EvenSignatureNotDivisibleBy16&) {
        return ClassOutcome::BadEvenSignature;
    }
    return ClassOutcome::NotUnimodular;
}

}  // namespace

TEST_CASE("form construction validates shape and symmetry") {
    CHECK_THROWS_AS(IntegralForm({{0, 1}, {2, 0}}), NonSymmetric);
    CHECK_THROWS_AS(IntegralForm({{1, 2}}), NonSymmetric);
    CHECK_NOTHROW(IntegralForm({{5}}));
    CHECK(IntegralForm().rank() == 0);
}

TEST_CASE("invariants of the standard forms") {
    const FormInvariants u = invariants(hyperbolic_plane());
    CHECK(u.rank == 2);
    CHECK(u.b_plus == 1);
    CHECK(u.b_minus == 1);
    CHECK(u.signature == 0);
    CHECK(u.parity == Parity::Even);
    CHECK(u.definiteness == Definiteness::Indefinite);

    const FormInvariants one = invariants(unit_form(1));
    CHECK(one.rank == 1);
    CHECK(one.b_plus == 1);
    CHECK(one.b_minus == 0);
    CHECK(one.signature == 1);
    CHECK(one.parity == Parity::Odd);
    CHECK(one.definiteness == Definiteness::Positive);

    const FormInvariants e8 = invariants(e8_form());
    CHECK(e8.rank == 8);
    CHECK(e8.signature == 8);
    CHECK(e8.parity == Parity::Even);
    CHECK(e8.definiteness == Definiteness::Positive);

    const FormInvariants empty = invariants(empty_form());
    CHECK(empty.rank == 0);
    CHECK(empty.signature == 0);
    CHECK(empty.definiteness == Definiteness::Zero);
}

TEST_CASE("degenerate forms are rejected") {
    CHECK_THROWS_AS(invariants(IntegralForm({{0}})), Degenerate);
    CHECK_THROWS_AS(invariants(IntegralForm({{1, 1}, {1, 1}})), Degenerate);
    CHECK_THROWS_AS(invariants(IntegralForm({{0, 0}, {0, 0}})), Degenerate);
    CHECK(determinant(IntegralForm({{1, 1}, {1, 1}})) == 0);
}

TEST_CASE("determinant and unimodularity") {
    CHECK(determinant(hyperbolic_plane()) == -1);
    CHECK(determinant(e8_form()) == 1);
    CHECK(determinant(k3_form()) == -1);
    CHECK(determinant(empty_form()) == 1);
    CHECK(is_unimodular(k3_form()));
    CHECK_FALSE(is_unimodular(diagonal_form({2})));
}

TEST_CASE("direct sum basics") {
    CHECK(direct_sum(empty_form(), hyperbolic_plane()) == hyperbolic_plane());
    CHECK(invariants(direct_sum(e8_form(), hyperbolic_plane())).signature == 8);
    CHECK(invariants(direct_sum(unit_form(1), hyperbolic_plane())).parity == Parity::Odd);
    CHECK(invariants(direct_sum(hyperbolic_plane(), hyperbolic_plane())).parity == Parity::Even);
}

TEST_CASE("hyperbolic stabilisation") {
    const IntegralForm three_u = hyperbolic_stabilize(empty_form(), 3);
    const FormInvariants i3 = invariants(three_u);
    CHECK(i3.rank == 6);
    CHECK(i3.signature == 0);
    CHECK(i3.parity == Parity::Even);

    const FormInvariants io = invariants(hyperbolic_stabilize(unit_form(1), 1));
    CHECK(io.parity == Parity::Odd);
    CHECK(io.definiteness == Definiteness::Indefinite);
    CHECK(io.signature == 1);

    const FormInvariants ie = invariants(hyperbolic_stabilize(e8_form(), 1));
    CHECK(ie.parity == Parity::Even);
    CHECK(ie.definiteness == Definiteness::Indefinite);
    CHECK(ie.signature == 8);

    CHECK_THROWS_AS(hyperbolic_stabilize(empty_form(), -1), Error);
}

TEST_CASE("stable classification of unimodular forms") {
    const StableClass k3 = stable_class(k3_form());
    CHECK(k3.kind == StableKind::EvenClass);
    CHECK(k3.k3_count == 1);
    CHECK(render(k3.representative) == "K3");

    const StableClass odd0 = stable_class(diagonal_form({1, -1}));
    CHECK(odd0.kind == StableKind::OddClass);
    CHECK(odd0.odd_signature == 0);
    CHECK(render(odd0.representative) == "CP2 # ~CP2");

    const StableClass odd2 = stable_class(diagonal_form({1, 1, 1, -1, -1, -1, -1, -1}));
    CHECK(odd2.odd_signature == -2);
    CHECK(render(odd2.representative) == "CP2 # 3*~CP2");

    const StableClass pos = stable_class(diagonal_form({1, 1, 1}));
    CHECK(pos.odd_signature == 3);
    CHECK(render(pos.representative) == "4*CP2 # ~CP2");

    CHECK(stable_class(empty_form()).kind == StableKind::Sphere);
    CHECK(stable_class(repeated_sum(hyperbolic_plane(), 2)).kind == StableKind::Sphere);

    const StableClass rev = stable_class(direct_sum(repeated_sum(e8_form(), 2),
                                                    repeated_sum(hyperbolic_plane(), 3)));
    CHECK(rev.kind == StableKind::EvenClass);
    CHECK(rev.k3_count == -1);
    CHECK(render(rev.representative) == "~K3");

    CHECK_THROWS_AS(stable_class(e8_form()), EvenSignatureNotDivisibleBy16);
    CHECK_THROWS_AS(stable_class(direct_sum(e8_form(), hyperbolic_plane())),
                    EvenSignatureNotDivisibleBy16);
    CHECK_THROWS_AS(stable_class(diagonal_form({2})), NotUnimodular);
}

TEST_CASE("stable isomorphism matches the classifying invariants") {
    const IntegralForm lhs = direct_sum(hyperbolic_plane(), diagonal_form({1, -1}));
    const IntegralForm rhs = diagonal_form({1, 1, -1, -1});
    CHECK(is_stably_isomorphic(lhs, rhs));
    CHECK_FALSE(is_stably_isomorphic(hyperbolic_plane(), diagonal_form({1, -1})));
    CHECK(is_stably_isomorphic(direct_sum(e8_form(), negate(e8_form())),
                               repeated_sum(hyperbolic_plane(), 8)));
    CHECK_THROWS_AS(is_stably_isomorphic(diagonal_form({2}), hyperbolic_plane()), NotUnimodular);
}

TEST_CASE("stable equivalence ignores rank") {
    CHECK(is_stably_equivalent(hyperbolic_plane(), repeated_sum(hyperbolic_plane(), 5)));
    const IntegralForm a = direct_sum(repeated_sum(negate(e8_form()), 2),
                                      repeated_sum(hyperbolic_plane(), 3));
    const IntegralForm b = direct_sum(repeated_sum(negate(e8_form()), 2),
                                      repeated_sum(hyperbolic_plane(), 7));
    CHECK(is_stably_equivalent(a, b));
    CHECK_FALSE(is_stably_equivalent(hyperbolic_plane(), diagonal_form({1, -1})));
    CHECK_THROWS_AS(is_stably_equivalent(diagonal_form({3}), hyperbolic_plane()), NotUnimodular);
}

TEST_CASE("invariants are additive under direct sum") {
    oracles::Rng rng(20240801);
    for (int iter = 0; iter < 60; ++iter) {
        const IntegralForm a = oracles::random_block_form(rng, 3);
        const IntegralForm b = oracles::random_block_form(rng, 3);
        if (a.rank() == 0 && b.rank() == 0) continue;
        const FormInvariants ia = invariants(a), ib = invariants(b);
        const FormInvariants isum = invariants(direct_sum(a, b));
        CHECK(isum.rank == ia.rank + ib.rank);
        CHECK(isum.b_plus == ia.b_plus + ib.b_plus);
        CHECK(isum.b_minus == ia.b_minus + ib.b_minus);
        CHECK(isum.signature == ia.signature + ib.signature);
        const bool both_even = ia.parity == Parity::Even && ib.parity == Parity::Even;
        CHECK(isum.parity == (both_even ? Parity::Even : Parity::Odd));
    }
}

TEST_CASE("stable class is invariant under hyperbolic stabilisation") {
    oracles::Rng rng(20240802);
    for (int iter = 0; iter < 40; ++iter) {
        const IntegralForm a = oracles::random_block_form(rng, 4);
        Int payload_a = 0;
        const auto base = classify_outcome(a, payload_a);
        for (Int k = 1; k <= 3; ++k) {
            Int payload_b = 0;
            const auto stabilised = classify_outcome(hyperbolic_stabilize(a, k), payload_b);
            CHECK(base == stabilised);
            CHECK(payload_a == payload_b);
        }
    }
}

TEST_CASE("stable isomorphism implies stable equivalence but not conversely") {
    oracles::Rng rng(20240803);
    for (int iter = 0; iter < 40; ++iter) {
        const IntegralForm a = oracles::random_block_form(rng, 3);
        const IntegralForm b = oracles::random_block_form(rng, 3);
        if (!is_unimodular(a) || !is_unimodular(b)) continue;
        if (is_stably_isomorphic(a, b)) CHECK(is_stably_equivalent(a, b));
    }
    // witness pair for the failing converse
    CHECK(is_stably_equivalent(hyperbolic_plane(), repeated_sum(hyperbolic_plane(), 5)));
    CHECK_FALSE(is_stably_isomorphic(hyperbolic_plane(), repeated_sum(hyperbolic_plane(), 5)));
}

TEST_CASE("even unimodular block sums have signature divisible by 8") {
    oracles::Rng rng(20240804);
    std::uniform_int_distribution<Int> pick(0, 2);
    std::uniform_int_distribution<Int> count(0, 3);
    for (int iter = 0; iter < 50; ++iter) {
        IntegralForm f = empty_form();
        const Int blocks = count(rng);
        for (Int t = 0; t < blocks; ++t) {
            switch (pick(rng)) {
                case 0: f = direct_sum(f, hyperbolic_plane()); break;
                case 1: f = direct_sum(f, e8_form()); break;
                case 2: f = direct_sum(f, negate(e8_form())); break;
            }
        }
        if (f.rank() == 0) continue;
        const FormInvariants inv = invariants(f);
        CHECK(inv.parity == Parity::Even);
        CHECK(inv.signature % 8 == 0);
    }
}

TEST_CASE("fraction-free pivoting agrees with the rational diagonalisation oracle") {
    oracles::Rng rng(20240805);
    std::uniform_int_distribution<Int> dim(0, 6);
    int nondegenerate = 0;
    for (int iter = 0; iter < 300; ++iter) {
        const IntegralForm f = oracles::random_symmetric(rng, dim(rng), -3, 3);
        const oracles::Inertia expected = oracles::rational_diagonalization_inertia(f);
        if (expected.degenerate) {
            CHECK_THROWS_AS(invariants(f), Degenerate);
            continue;
        }
        ++nondegenerate;
        const FormInvariants inv = invariants(f);
        CHECK(inv.b_plus == expected.b_plus);
        CHECK(inv.b_minus == expected.b_minus);
        CHECK(inv.b_plus + inv.b_minus == inv.rank);
        CHECK((inv.signature - inv.rank) % 2 == 0);
    }
    CHECK(nondegenerate > 150);  // the corpus must actually exercise the main path
}

TEST_CASE("zero-diagonal forms exercise the hyperbolic fallback") {
    // permuted sums of hyperbolic planes keep the whole diagonal at zero
    const IntegralForm two_u_tangled({{0, 0, 1, 0},
                                      {0, 0, 0, 1},
                                      {1, 0, 0, 0},
                                      {0, 1, 0, 0}});
    const FormInvariants tangled = invariants(two_u_tangled);
    CHECK(tangled.b_plus == 2);
    CHECK(tangled.b_minus == 2);

    // zero diagonal does not force signature zero
    const FormInvariants ring = invariants(IntegralForm({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(ring.b_plus == 1);
    CHECK(ring.b_minus == 2);
    CHECK(ring.signature == -1);

    oracles::Rng rng(20240806);
    std::uniform_int_distribution<Int> dim(2, 7), entry(-2, 2);
    int nondegenerate = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const Int n = dim(rng);
        std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
        for (Int i = 0; i < n; ++i)
            for (Int j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = entry(rng);
        const IntegralForm f(std::move(rows));
        const oracles::Inertia expected = oracles::rational_diagonalization_inertia(f);
        if (expected.degenerate) {
            CHECK_THROWS_AS(invariants(f), Degenerate);
            continue;
        }
        ++nondegenerate;
        const FormInvariants inv = invariants(f);
        CHECK(inv.b_plus == expected.b_plus);
        CHECK(inv.b_minus == expected.b_minus);
        CHECK(inv.parity == Parity::Even);
    }
    CHECK(nondegenerate > 80);
}

TEST_CASE("form JSON round-trip and parse diagnostics") {
    const IntegralForm f = direct_sum(hyperbolic_plane(), unit_form(-1));
    CHECK(io::form_from_json(io::form_to_json(f)) == f);

    const auto inv = invariants(f);
    CHECK(io::invariants_from_json(io::to_json(inv)) == inv);

    const auto cls = stable_class(diagonal_form({1, -1, -1}));
    CHECK(io::stable_class_from_json(io::to_json(cls)) == cls);

    using io::json;
    CHECK_THROWS_AS(io::form_from_json(json{{"rows", json::array()}}), ParseError);
    CHECK_THROWS_WITH(io::form_from_json(json::parse(R"({"matrix": [[0,1],[2,0]]})")),
                      Catch::Matchers::ContainsSubstring("entry (0,1) = 1") &&
                          Catch::Matchers::ContainsSubstring("entry (1,0) = 2"));
    CHECK_THROWS_WITH(io::form_from_json(json::parse(R"({"matrix": [[0,1]]})")),
                      Catch::Matchers::ContainsSubstring("square"));
    CHECK_THROWS_AS(io::form_from_json(json::parse(R"({"matrix": [[0.5]]})")), ParseError);
}
