#pragma once

#include <frobx/em_bicategory.hpp>
#include <frobx/frobenius.hpp>

namespace frobx {

/* left: B→A and right: A→B with unit: 1_B ⇒ right∘left and
 * counit: left∘right ⇒ 1_A.  verified records that both zig-zag
 * identities held when the record was built. */
struct Adjunction {
    OneCell left;
    OneCell right;
    TwoCell unit;
    TwoCell counit;
    bool verified = false;
};

/* Boundary-checks the four pieces (ObjectMismatch), runs the zig-zags and
 * stores the outcome in verified. */
Adjunction make_adjunction(OneCell left, OneCell right, TwoCell unit, TwoCell counit);

Adjunction identity_adjunction(const Algebra& a);

/* zig-zag on the right leg: (right∘counit)·(unit∘right) = 1_right;
 * zig-zag on the left leg: (counit∘left)·(left∘unit) = 1_left.
 * Both computed through whiskering and compared as exact 2-cells. */
Report check_triangles(const Adjunction& adj);

/* Prop-style pasting: from F⊣U and F'⊣U' with matching middle object,
 * produces F∘F' ⊣ U'∘U with unit (U' unit F')·unit' and
 * counit counit·(F counit' U). */
Adjunction compose_adjunctions(const Adjunction& a1, const Adjunction& a2);

/* Mate of xi: b∘U ⇒ U'∘a across adj = (F⊣U) and adj_p = (F'⊣U'), landing in
 * zeta: F'∘b ⇒ a∘F; mate_inv goes back.  The two are mutually inverse
 * bijections whenever both adjunctions are verified. */
TwoCell mate(const Adjunction& adj, const Adjunction& adj_p, const OneCell& a, const OneCell& b,
             const TwoCell& xi);
TwoCell mate_inv(const Adjunction& adj, const Adjunction& adj_p, const OneCell& a,
                 const OneCell& b, const TwoCell& zeta);

/* Induction ⊣ restriction in both orders.  fwd: F ⊣ U with unit from the
 * algebra unit and counit from multiplication; bwd: U ⊣ F with unit from
 * the Casimir element and counit from the Frobenius counit. */
struct Ambijunction {
    FrobeniusStructure frob;
    Adjunction fwd;
    Adjunction bwd;
};

Ambijunction build_ambijunction(const FrobeniusStructure& fs);

/* T = right∘left on the base object together with mult = (right counit left)
 * and unit 2-cells; report carries the monoid axioms. */
struct MonadData {
    OneCell t;
    TwoCell mult;
    TwoCell unit;
    Report report;
};

MonadData monad_from_adjunction(const Adjunction& adj);

/* Reads the algebra back off the monad of fwd, the counit and
 * comultiplication off bwd, re-derives the Frobenius data, and verifies the
 * T ⊣ T self-adjunction on the way.  AxiomFailure if anything fails;
 * ObjectMismatch unless the base object is the trivial algebra. */
FrobeniusStructure frobenius_from_ambijunction(const Ambijunction& amb);

/* The T ⊣ T adjunction with unit (U j F)·i and counit k·(U e F); also
 * verifies that the counit 2-cell equals eps∘mu as a matrix. */
Adjunction self_adjunction_from_ambijunction(const Ambijunction& amb);

} // namespace frobx
