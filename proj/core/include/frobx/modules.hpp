#pragma once

#include <frobx/frobenius.hpp>

namespace frobx {

/* Left module over the algebra of fs: action nu: A⊗M → M with legs
 * [n, m] -> [m].  carrier_dim may be 0 (the zero module). */
struct ModuleAction {
    FrobeniusStructure frob;
    std::size_t carrier_dim = 0;
    LinearMap action;
};

/* Left comodule over the coalgebra of fs: coaction: M → A⊗M, legs
 * [m] -> [n, m]. */
struct ComoduleCoaction {
    FrobeniusStructure frob;
    std::size_t carrier_dim = 0;
    LinearMap coaction;
};

Report check_module(const FrobeniusStructure& fs, const LinearMap& action);
Report check_comodule(const FrobeniusStructure& fs, const LinearMap& coaction);

/* Shape-check plus full axiom check; AxiomFailure with witnesses. */
ModuleAction make_module(const FrobeniusStructure& fs, const LinearMap& action);
ComoduleCoaction make_comodule(const FrobeniusStructure& fs, const LinearMap& coaction);

/* The algebra acting on itself by multiplication. */
ModuleAction regular_module(const FrobeniusStructure& fs);

/* Coaction m ↦ sum_i e_i ⊗ nu(e^i ⊗ m), i.e. (A⊗nu)∘(C⊗M); the mate of the
 * action across the ambijunction.  The inverse direction composes the
 * Frobenius pairing back in: nu = (eps∘mu ⊗ M)∘(A ⊗ coaction). */
ComoduleCoaction module_to_comodule(const ModuleAction& m);
ModuleAction comodule_to_module(const ComoduleCoaction& c);

/* On the free module A⊗V the converted coaction of mu⊗V must equal
 * Delta⊗V; the report records the comparison and the validity of both
 * structures. */
Report free_module_coaction_agreement(const FrobeniusStructure& fs, std::size_t v_dim);

} // namespace frobx
