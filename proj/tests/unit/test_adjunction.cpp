#include <frobx/adjunction.hpp>

#include "../support/fixtures.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace frobx;

namespace {

Rational r(long long num, long long den = 1) { return Rational(num, den); }

} // namespace

TEST_CASE("induction and restriction are adjoint in both orders") {
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        CHECK(amb.fwd.verified);
        CHECK(amb.bwd.verified);
        CHECK(check_triangles(amb.fwd).ok());
        CHECK(check_triangles(amb.bwd).ok());

        CHECK(one_cells_equal(amb.fwd.left, fixtures::induced_cell(fs.algebra, 1)));
        CHECK(one_cells_equal(amb.fwd.right, fixtures::free_restriction_cell(fs.algebra, 1)));
        CHECK(one_cells_equal(amb.bwd.left, amb.fwd.right));
        CHECK(one_cells_equal(amb.bwd.right, amb.fwd.left));

        // backward unit carries the Casimir element, backward counit the counit
        const std::size_t n = fs.algebra.dim;
        CHECK(amb.bwd.unit.rho == fs.casimir.reshaped(Legs{n, n}, Legs{1}));
        CHECK(amb.bwd.counit.rho == counit_map(fs).reshaped(Legs{1, 1}, Legs{n}));
    }
}

TEST_CASE("a wrong counit functional breaks the zig-zags and poisons later use") {
    FrobeniusStructure fs = fixtures::dual_numbers();
    Ambijunction amb = build_ambijunction(fs);
    LinearMap wrong(Legs{1, 1}, Legs{2});
    wrong.set(0, 0, r(1)); // evaluates at the unit coefficient, misses the socle
    TwoCell counit =
        make_two_cell(amb.bwd.counit.src, identity_one_cell(trivial_algebra()), wrong);
    Adjunction broken = make_adjunction(amb.bwd.left, amb.bwd.right, amb.bwd.unit, counit);
    CHECK_FALSE(broken.verified);
    Report report = check_triangles(broken);
    CHECK_FALSE(report.ok());
    bool witnessed = false;
    for (const auto& check : report.checks)
        if (!check.passed && !check.witnesses.empty())
            witnessed = true;
    CHECK(witnessed);
    CHECK_THROWS_AS(compose_adjunctions(broken, amb.fwd), std::invalid_argument);
    CHECK_THROWS_AS(monad_from_adjunction(broken), std::invalid_argument);
}

TEST_CASE("degenerate counit candidates never reach the adjunction layer") {
    CHECK_THROWS_AS(build_frobenius(fixtures::dual_numbers_algebra(), {r(1), r(0)}),
                    DegenerateForm);
}

TEST_CASE("composing with identity adjunctions changes nothing") {
    FrobeniusStructure fs = fixtures::group_z2();
    Ambijunction amb = build_ambijunction(fs);
    Adjunction id_base = identity_adjunction(trivial_algebra());
    Adjunction id_alg = identity_adjunction(fs.algebra);

    Adjunction padded_inner = compose_adjunctions(amb.fwd, id_base);
    CHECK(padded_inner.verified);
    CHECK(one_cells_equal(padded_inner.left, amb.fwd.left));
    CHECK(one_cells_equal(padded_inner.right, amb.fwd.right));
    CHECK(two_cells_equal(padded_inner.unit, amb.fwd.unit));
    CHECK(two_cells_equal(padded_inner.counit, amb.fwd.counit));

    Adjunction padded_outer = compose_adjunctions(id_alg, amb.fwd);
    CHECK(padded_outer.verified);
    CHECK(one_cells_equal(padded_outer.left, amb.fwd.left));
    CHECK(one_cells_equal(padded_outer.right, amb.fwd.right));
    CHECK(two_cells_equal(padded_outer.unit, amb.fwd.unit));
    CHECK(two_cells_equal(padded_outer.counit, amb.fwd.counit));
}

TEST_CASE("both pasted squares of the ambijunction verify") {
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        const std::size_t n = fs.algebra.dim;

        Adjunction monad_side = compose_adjunctions(amb.bwd, amb.fwd);
        CHECK(monad_side.verified);
        CHECK(monad_side.left.carrier_dim == n);
        CHECK(one_cells_equal(monad_side.left, monad_side.right));

        Adjunction comonad_side = compose_adjunctions(amb.fwd, amb.bwd);
        CHECK(comonad_side.verified);
        CHECK(algebras_equal(comonad_side.left.dom, fs.algebra));
        CHECK(one_cells_equal(comonad_side.left,
                              compose_one_cells(amb.bwd.left, amb.bwd.right)));
    }
}

TEST_CASE("self-adjunction unit is the Casimir element, counit the form pairing") {
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        Adjunction self = self_adjunction_from_ambijunction(amb);
        const std::size_t n = fs.algebra.dim;
        CHECK(self.verified);
        CHECK(self.unit.rho == fs.casimir.reshaped(Legs{1, n * n}, Legs{1}));
        LinearMap pairing = compose(counit_map(fs), mult_map(fs.algebra));
        CHECK(self.counit.rho == pairing.reshaped(Legs{1, 1}, Legs{n * n}));
    }
    // frozen pairings
    Ambijunction dual = build_ambijunction(fixtures::dual_numbers());
    LinearMap sigma = self_adjunction_from_ambijunction(dual).counit.rho.reshaped(
        Legs{1}, Legs{4});
    CHECK(sigma == LinearMap(Legs{1}, Legs{4}, {r(0), r(1), r(1), r(0)}));
    Ambijunction z2 = build_ambijunction(fixtures::group_z2());
    LinearMap sigma_z2 = self_adjunction_from_ambijunction(z2).counit.rho.reshaped(
        Legs{1}, Legs{4});
    CHECK(sigma_z2 == LinearMap(Legs{1}, Legs{4}, {r(1), r(0), r(0), r(1)}));
}

TEST_CASE("the adjunction monad is the algebra itself") {
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        MonadData monad = monad_from_adjunction(amb.fwd);
        const std::size_t n = fs.algebra.dim;
        CHECK(monad.report.ok());
        CHECK(monad.t.carrier_dim == n);
        CHECK(one_cells_equal(monad.mult.src, compose_one_cells(monad.t, monad.t)));
        CHECK(one_cells_equal(monad.mult.tgt, monad.t));
        CHECK(monad.mult.rho == mult_map(fs.algebra).reshaped(Legs{1, n}, Legs{n * n}));
        CHECK(monad.unit.rho == unit_map(fs.algebra).reshaped(Legs{1, n}, Legs{1}));

        // the same machinery run on the backward adjunction is lawful too
        CHECK(monad_from_adjunction(amb.bwd).report.ok());
    }
}

TEST_CASE("the mate of multiplication is comultiplication") {
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        Adjunction self = self_adjunction_from_ambijunction(amb);
        Adjunction id_base = identity_adjunction(trivial_algebra());
        const std::size_t n = fs.algebra.dim;
        OneCell t = self.left;

        MonadData monad = monad_from_adjunction(amb.fwd);
        TwoCell mu = monad.mult;
        CHECK(one_cells_equal(compose_one_cells(self.right, t), mu.src));

        TwoCell zeta = mate(self, id_base, t, t, mu);
        CHECK(one_cells_equal(zeta.src, t));
        CHECK(one_cells_equal(zeta.tgt, compose_one_cells(t, t)));
        CHECK(zeta.rho == fs.comult.reshaped(Legs{1, n * n}, Legs{n}));
    }
}

TEST_CASE("the mate of the unit is the counit") {
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        Adjunction self = self_adjunction_from_ambijunction(amb);
        Adjunction id_base = identity_adjunction(trivial_algebra());
        OneCell id_cell = identity_one_cell(trivial_algebra());

        TwoCell eta = amb.fwd.unit;
        CHECK(one_cells_equal(eta.tgt, self.left));

        TwoCell zeta = mate(id_base, self, id_cell, id_cell, eta);
        CHECK(two_cells_equal(zeta, amb.bwd.counit));
    }
}

TEST_CASE("mates round-trip over the induction adjunction") {
    fixtures::TestRng rng(0xF0B2);
    int trials = 0;
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        Adjunction id_base = identity_adjunction(trivial_algebra());
        for (std::size_t db = 1; db <= 2; ++db)
            for (std::size_t k = 1; k <= 2; ++k)
                for (int draw = 0; draw < 10; ++draw) {
                    OneCell b = fixtures::forced_trivial_cell(db);
                    OneCell a = fixtures::free_restriction_cell(fs.algebra, k);
                    // xi: b∘restriction => a, a module homomorphism between free modules
                    TwoCell xi = fixtures::left_mult_hom(fs.algebra, db, k, rng);
                    CHECK(one_cells_equal(xi.src, compose_one_cells(amb.fwd.right, b)));
                    TwoCell zeta = mate(amb.fwd, id_base, a, b, xi);
                    TwoCell back = mate_inv(amb.fwd, id_base, a, b, zeta);
                    CHECK(two_cells_equal(back, xi));
                    ++trials;
                }
    }
    CHECK(trials == 120);
}

TEST_CASE("mates round-trip in the other direction too") {
    fixtures::TestRng rng(0xF0B2);
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        Adjunction id_base = identity_adjunction(trivial_algebra());
        const std::size_t n = fs.algebra.dim;
        for (std::size_t db = 1; db <= 2; ++db)
            for (std::size_t k = 1; k <= 2; ++k)
                for (int draw = 0; draw < 4; ++draw) {
                    OneCell b = fixtures::forced_trivial_cell(db);
                    OneCell a = fixtures::free_restriction_cell(fs.algebra, k);
                    // zeta: b => a∘induction lives over the base, any matrix works
                    OneCell af = compose_one_cells(amb.fwd.left, a);
                    TwoCell zeta =
                        make_two_cell(b, af, rng.matrix(Legs{1, k * n}, Legs{db}));
                    TwoCell xi = mate_inv(amb.fwd, id_base, a, b, zeta);
                    TwoCell forth = mate(amb.fwd, id_base, a, b, xi);
                    CHECK(two_cells_equal(forth, zeta));
                }
    }
}

TEST_CASE("mates round-trip across two copies of the backward adjunction") {
    fixtures::TestRng rng(0xF0B9);
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        const std::size_t n = fs.algebra.dim;
        OneCell comonad = compose_one_cells(amb.bwd.left, amb.bwd.right);
        std::vector<OneCell> outer_cells = {comonad};
        if (n <= 2)
            outer_cells.push_back(compose_one_cells(comonad, comonad));
        for (const OneCell& b : outer_cells)
            for (std::size_t da = 1; da <= 2; ++da)
                for (int draw = 0; draw < 3; ++draw) {
                    OneCell a = fixtures::forced_trivial_cell(da);
                    OneCell src = compose_one_cells(amb.bwd.right, b);
                    OneCell tgt = compose_one_cells(a, amb.bwd.right);
                    TwoCell xi = make_two_cell(
                        src, tgt, rng.matrix(Legs{n, tgt.carrier_dim}, Legs{src.carrier_dim}));
                    TwoCell zeta = mate(amb.bwd, amb.bwd, a, b, xi);
                    TwoCell back = mate_inv(amb.bwd, amb.bwd, a, b, zeta);
                    CHECK(two_cells_equal(back, xi));
                }
    }
}

TEST_CASE("the algebra is recovered from its ambijunction") {
    for (const auto& fs : fixtures::all_examples()) {
        Ambijunction amb = build_ambijunction(fs);
        FrobeniusStructure back = frobenius_from_ambijunction(amb);
        CHECK(algebras_equal(back.algebra, fs.algebra));
        CHECK(back.counit_vec == fs.counit_vec);
        CHECK(back.gram == fs.gram);
        CHECK(back.comult == fs.comult);
        CHECK(back.casimir == fs.casimir);
        CHECK(back.dual_basis == fs.dual_basis);
    }
}

TEST_CASE("recovery refuses a nontrivial base object") {
    FrobeniusStructure fs = fixtures::group_z2();
    Ambijunction amb = build_ambijunction(fs);
    // flip the roles: the comonad side lives over the algebra, not the base
    Ambijunction flipped{fs, amb.bwd, amb.fwd};
    CHECK_THROWS_AS(frobenius_from_ambijunction(flipped), ObjectMismatch);
}
