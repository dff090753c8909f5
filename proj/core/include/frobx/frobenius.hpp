#pragma once

#include <frobx/algebra.hpp>

namespace frobx {

/* Algebra plus counit, with everything the counit determines when its
 * pairing is nondegenerate: gram(i,j) = eps(e_i e_j), the right dual basis
 * e^j (columns of gram^-1, so eps(e_i e^j) = delta_ij), the Casimir element
 * C = sum_i e_i ⊗ e^i, and the comultiplication Delta(a) = (a⊗1)·C. */
struct FrobeniusStructure {
    Algebra algebra;
    std::vector<Rational> counit_vec;
    LinearMap gram;                          // [n] -> [n]
    std::vector<std::vector<Rational>> dual_basis;
    LinearMap casimir;                       // []  -> [n,n]
    LinearMap comult;                        // [n] -> [n,n]
};

/* Validates the algebra (AxiomFailure on any broken axiom), then derives the
 * full structure; DegenerateForm if the pairing is not invertible. */
FrobeniusStructure build_frobenius(const Algebra& algebra, std::vector<Rational> counit_vec);

LinearMap counit_map(const FrobeniusStructure& fs); // [n] -> []

/* Re-verifies, as exact matrix identities: coassociativity, both counit
 * laws, both Frobenius identities, and Casimir invariance
 * (a⊗1)·C = C·(1⊗a). */
Report check_frobenius(const FrobeniusStructure& fs);

} // namespace frobx
