#include <frobx/adjunction.hpp>

#include <frobx/errors.hpp>

#include <utility>

namespace frobx {

namespace {

void require_verified(const Adjunction& adj, const char* who) {
    if (!adj.verified)
        throw std::invalid_argument(std::string(who) + ": adjunction between \"" +
                                    adj.left.dom.name + "\" and \"" + adj.left.cod.name +
                                    "\" is not verified");
}

void check_two_cells(Report& report, const char* name, const TwoCell& lhs, const TwoCell& rhs) {
    Check& c = report.add(name);
    if (!one_cells_equal(lhs.src, rhs.src))
        report.fail(c, "source cells differ");
    else if (!one_cells_equal(lhs.tgt, rhs.tgt))
        report.fail(c, "target cells differ");
    else if (lhs.rho != rhs.rho)
        report.fail(c, first_difference(lhs.rho, rhs.rho));
}

} // namespace

Adjunction make_adjunction(OneCell left, OneCell right, TwoCell unit, TwoCell counit) {
    if (!algebras_equal(left.cod, right.dom) || !algebras_equal(right.cod, left.dom))
        throw ObjectMismatch("adjunction cells " + left.dom.name + "->" + left.cod.name +
                             " and " + right.dom.name + "->" + right.cod.name +
                             " do not form a loop");
    if (!one_cells_equal(unit.src, identity_one_cell(left.dom)) ||
        !one_cells_equal(unit.tgt, compose_one_cells(left, right)))
        throw ObjectMismatch("adjunction unit is not a 2-cell 1 => right∘left");
    if (!one_cells_equal(counit.src, compose_one_cells(right, left)) ||
        !one_cells_equal(counit.tgt, identity_one_cell(right.dom)))
        throw ObjectMismatch("adjunction counit is not a 2-cell left∘right => 1");
    Adjunction adj{std::move(left), std::move(right), std::move(unit), std::move(counit), false};
    adj.verified = check_triangles(adj).ok();
    return adj;
}

Adjunction identity_adjunction(const Algebra& a) {
    OneCell id = identity_one_cell(a);
    TwoCell unit = identity_two_cell(id);
    // 1∘1 is 1 on the nose, so the identity 2-cell serves as both structure maps.
    return make_adjunction(id, id, unit, unit);
}

Report check_triangles(const Adjunction& adj) {
    Report report;
    TwoCell unit_then_counit_right =
        vertical_compose(whisker_right(adj.unit, adj.right), whisker_left(adj.right, adj.counit));
    check_two_cells(report, "zigzag_right_leg", unit_then_counit_right,
                    identity_two_cell(adj.right));
    TwoCell unit_then_counit_left =
        vertical_compose(whisker_left(adj.left, adj.unit), whisker_right(adj.counit, adj.left));
    check_two_cells(report, "zigzag_left_leg", unit_then_counit_left,
                    identity_two_cell(adj.left));
    return report;
}

Adjunction compose_adjunctions(const Adjunction& a1, const Adjunction& a2) {
    require_verified(a1, "compose_adjunctions");
    require_verified(a2, "compose_adjunctions");
    if (!algebras_equal(a1.left.dom, a2.left.cod))
        throw ObjectMismatch("compose_adjunctions: middle objects \"" + a1.left.dom.name +
                             "\" and \"" + a2.left.cod.name + "\" differ");
    OneCell left = compose_one_cells(a2.left, a1.left);
    OneCell right = compose_one_cells(a1.right, a2.right);
    TwoCell unit = vertical_compose(
        a2.unit, whisker_left(a2.right, whisker_right(a1.unit, a2.left)));
    TwoCell counit = vertical_compose(
        whisker_left(a1.left, whisker_right(a2.counit, a1.right)), a1.counit);
    return make_adjunction(std::move(left), std::move(right), std::move(unit), std::move(counit));
}

TwoCell mate(const Adjunction& adj, const Adjunction& adj_p, const OneCell& a, const OneCell& b,
             const TwoCell& xi) {
    require_verified(adj, "mate");
    require_verified(adj_p, "mate");
    TwoCell step1 = whisker_left(compose_one_cells(b, adj_p.left), adj.unit);
    TwoCell step2 = whisker_right(whisker_left(adj_p.left, xi), adj.left);
    TwoCell step3 = whisker_right(whisker_right(adj_p.counit, a), adj.left);
    return vertical_compose(vertical_compose(step1, step2), step3);
}

TwoCell mate_inv(const Adjunction& adj, const Adjunction& adj_p, const OneCell& a,
                 const OneCell& b, const TwoCell& zeta) {
    require_verified(adj, "mate_inv");
    require_verified(adj_p, "mate_inv");
    TwoCell step1 = whisker_right(adj_p.unit, compose_one_cells(adj.right, b));
    TwoCell step2 = whisker_left(adj_p.right, whisker_right(zeta, adj.right));
    TwoCell step3 = whisker_left(compose_one_cells(a, adj_p.right), adj.counit);
    return vertical_compose(vertical_compose(step1, step2), step3);
}

Ambijunction build_ambijunction(const FrobeniusStructure& fs) {
    const Algebra& alg = fs.algebra;
    const std::size_t n = alg.dim;
    const Algebra base = trivial_algebra();

    // Induction: carrier Q, phi = unit coordinates.
    OneCell induction =
        make_one_cell(base, alg, 1, unit_map(alg).reshaped(Legs{n, 1}, Legs{1, 1}));
    // Restriction: carrier A itself, phi = multiplication.
    OneCell restriction =
        make_one_cell(alg, base, n, mult_map(alg).reshaped(Legs{1, n}, Legs{n, n}));

    OneCell monad_cell = compose_one_cells(induction, restriction);   // U∘F on the base
    OneCell comonad_cell = compose_one_cells(restriction, induction); // F∘U on the algebra

    TwoCell fwd_unit = make_two_cell(identity_one_cell(base), monad_cell,
                                     unit_map(alg).reshaped(Legs{1, n}, Legs{1}));
    TwoCell fwd_counit = make_two_cell(comonad_cell, identity_one_cell(alg),
                                       LinearMap::identity(n).reshaped(Legs{n, 1}, Legs{n}));
    Adjunction fwd = make_adjunction(induction, restriction, fwd_unit, fwd_counit);

    TwoCell bwd_unit = make_two_cell(identity_one_cell(alg), comonad_cell,
                                     fs.casimir.reshaped(Legs{n, n}, Legs{1}));
    TwoCell bwd_counit = make_two_cell(monad_cell, identity_one_cell(base),
                                       counit_map(fs).reshaped(Legs{1, 1}, Legs{n}));
    Adjunction bwd = make_adjunction(restriction, induction, bwd_unit, bwd_counit);

    if (!fwd.verified || !bwd.verified)
        throw AxiomFailure("ambijunction for \"" + alg.name + "\" failed its zig-zag checks: fwd " +
                           check_triangles(fwd).summary() + "; bwd " +
                           check_triangles(bwd).summary());
    return Ambijunction{fs, std::move(fwd), std::move(bwd)};
}

MonadData monad_from_adjunction(const Adjunction& adj) {
    require_verified(adj, "monad_from_adjunction");
    OneCell t = compose_one_cells(adj.left, adj.right);
    TwoCell mult = whisker_right(whisker_left(adj.right, adj.counit), adj.left);
    TwoCell unit = adj.unit;

    Report report;
    TwoCell assoc_outer = vertical_compose(whisker_right(mult, t), mult);
    TwoCell assoc_inner = vertical_compose(whisker_left(t, mult), mult);
    check_two_cells(report, "monad_associativity", assoc_outer, assoc_inner);
    TwoCell unit_left = vertical_compose(whisker_right(unit, t), mult);
    TwoCell unit_right = vertical_compose(whisker_left(t, unit), mult);
    check_two_cells(report, "monad_left_unit", unit_left, identity_two_cell(t));
    check_two_cells(report, "monad_right_unit", unit_right, identity_two_cell(t));
    return MonadData{std::move(t), std::move(mult), std::move(unit), std::move(report)};
}

namespace {

/* rho of a 2-cell over the trivial base is an honest matrix once the unit
 * cod factor is flattened away. */
LinearMap plain_matrix(const TwoCell& t) {
    return t.rho.reshaped(Legs{t.tgt.carrier_dim}, Legs{t.src.carrier_dim});
}

} // namespace

Adjunction self_adjunction_from_ambijunction(const Ambijunction& amb) {
    require_verified(amb.fwd, "self_adjunction_from_ambijunction");
    require_verified(amb.bwd, "self_adjunction_from_ambijunction");
    Adjunction self = compose_adjunctions(amb.bwd, amb.fwd);
    if (!self.verified)
        throw AxiomFailure("self-adjunction zig-zags failed for \"" + amb.frob.algebra.name +
                           "\"");
    // The counit must be eps∘mu, the pairing of the Frobenius form.
    LinearMap sigma = plain_matrix(self.counit);
    LinearMap pairing = compose(counit_map(amb.frob), mult_map(amb.frob.algebra))
                            .reshaped(Legs{1}, Legs{amb.frob.algebra.dim * amb.frob.algebra.dim});
    if (sigma != pairing)
        throw AxiomFailure("self-adjunction counit is not eps∘mu: " +
                           first_difference(sigma, pairing));
    return self;
}

FrobeniusStructure frobenius_from_ambijunction(const Ambijunction& amb) {
    require_verified(amb.fwd, "frobenius_from_ambijunction");
    require_verified(amb.bwd, "frobenius_from_ambijunction");
    if (!is_trivial(amb.fwd.left.dom))
        throw ObjectMismatch("frobenius_from_ambijunction: base object \"" +
                             amb.fwd.left.dom.name + "\" is not the trivial algebra");

    MonadData monad = monad_from_adjunction(amb.fwd);
    if (!monad.report.ok())
        throw AxiomFailure("monad axioms failed: " + monad.report.summary());

    const std::size_t n = monad.t.carrier_dim;
    const Algebra& source = amb.fwd.left.cod;
    if (source.dim != n)
        throw ObjectMismatch("monad carrier dimension " + std::to_string(n) +
                             " does not match algebra dimension " + std::to_string(source.dim));

    LinearMap mu = plain_matrix(monad.mult).reshaped(Legs{n}, Legs{n, n});
    LinearMap eta = plain_matrix(monad.unit).reshaped(Legs{n}, Legs{});

    // Comonad structure off the backward adjunction: delta = U j F, eps = k.
    TwoCell delta_cell = whisker_right(whisker_left(amb.bwd.left, amb.bwd.unit), amb.bwd.right);
    LinearMap delta = plain_matrix(delta_cell).reshaped(Legs{n, n}, Legs{n});
    LinearMap eps = plain_matrix(amb.bwd.counit).reshaped(Legs{}, Legs{n});

    const LinearMap id = LinearMap::identity(n);
    if (compose(kron(delta, id), delta) != compose(kron(id, delta), delta))
        throw AxiomFailure("extracted comultiplication is not coassociative");
    if (compose(kron(eps, id), delta) != id || compose(kron(id, eps), delta) != id)
        throw AxiomFailure("extracted counit does not split the comultiplication");

    Adjunction self = self_adjunction_from_ambijunction(amb);
    // ribbon consistency: the self-adjunction unit must produce the Casimir column.
    LinearMap coevaluation = plain_matrix(self.unit).reshaped(Legs{n, n}, Legs{});

    std::vector<Rational> mul(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                mul[(i * n + j) * n + k] = mu.at(k, i * n + j);
    std::vector<Rational> unit_vec(n);
    std::vector<Rational> counit_vec(n);
    for (std::size_t k = 0; k < n; ++k) {
        unit_vec[k] = eta.at(k, 0);
        counit_vec[k] = eps.at(0, k);
    }

    Algebra algebra = make_algebra(source.name, n, source.basis_names, std::move(mul),
                                   std::move(unit_vec));
    FrobeniusStructure fs = build_frobenius(algebra, counit_vec);

    if (fs.comult != delta)
        throw AxiomFailure("whiskered comultiplication disagrees with the dual-basis one: " +
                           first_difference(fs.comult, delta));
    if (fs.casimir != coevaluation)
        throw AxiomFailure("self-adjunction unit disagrees with the Casimir element: " +
                           first_difference(fs.casimir, coevaluation));
    return fs;
}

} // namespace frobx
