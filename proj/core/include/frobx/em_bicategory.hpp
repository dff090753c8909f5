#pragma once

#include <frobx/algebra.hpp>

namespace frobx {

/* 1-cell X → Y between algebras, carried by a vector space V of dimension
 * carrier_dim.  phi: V⊗X → Y⊗V (legs [carrier, dim X] -> [dim Y, carrier])
 * encodes the right X-action on the free left Y-module Y⊗V; the functor of
 * the cell sends an X-module M to Y⊗V ⊗_X M.  Composition of cells stores
 * the second factor's carrier as the major tensor factor, which keeps
 * composition strictly associative and strictly unital on the nose, so no
 * separate associator bookkeeping is needed. */
struct OneCell {
    Algebra dom;
    Algebra cod;
    std::size_t carrier_dim = 1;
    LinearMap phi;
};

/* Shape- and leg-checks only (ShapeMismatch); use check_one_cell for axioms. */
OneCell make_one_cell(Algebra dom, Algebra cod, std::size_t carrier_dim, const LinearMap& phi);

OneCell identity_one_cell(const Algebra& a);

/* Multiplication square and unit triangle for phi, each failure witnessed. */
Report check_one_cell(const OneCell& cell);

/* Functor composite g∘f of f: X→Y, g: Y→Z; ObjectMismatch unless
 * f.cod equals g.dom.  Carrier is V_g ⊗ V_f. */
OneCell compose_one_cells(const OneCell& f, const OneCell& g);

bool one_cells_equal(const OneCell& a, const OneCell& b);

/* 2-cell src ⇒ tgt between parallel 1-cells X → Y, stored as
 * rho: V_src → Y ⊗ V_tgt (legs [carrier src] -> [dim Y, carrier tgt]),
 * the free-module form of a bimodule homomorphism. */
struct TwoCell {
    OneCell src;
    OneCell tgt;
    LinearMap rho;
};

/* Boundary and shape checks (ObjectMismatch / ShapeMismatch). */
TwoCell make_two_cell(OneCell src, OneCell tgt, const LinearMap& rho);

TwoCell identity_two_cell(const OneCell& cell);

/* The single coherence square making rho a bimodule homomorphism. */
Report check_two_cell(const TwoCell& t);

/* s: a ⇒ b, then t: b ⇒ c. */
TwoCell vertical_compose(const TwoCell& s, const TwoCell& t);

/* f∘s ⇒ f∘t for f: Y→Z and a 2-cell between cells X→Y. */
TwoCell whisker_left(const OneCell& f, const TwoCell& t);

/* s∘f ⇒ t∘f for f: W→X and a 2-cell between cells X→Y. */
TwoCell whisker_right(const TwoCell& t, const OneCell& f);

bool two_cells_equal(const TwoCell& a, const TwoCell& b);

/* The cell X→Y made concrete: left and right actions on the free module
 * Y ⊗ V.  left_action: Y⊗(Y⊗V) → Y⊗V is multiplication on the first
 * factor; right_action: (Y⊗V)⊗X → Y⊗V threads phi through. */
struct BimoduleRealization {
    LinearMap left_action;
    LinearMap right_action;
};

/* Independent road to the same axioms: builds both actions and checks
 * unitality, associativity, and commutation of the two actions. */
BimoduleRealization realize_bimodule(const OneCell& cell);
Report check_bimodule(const OneCell& cell);

} // namespace frobx
