#pragma once

#include <frobx/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace frobx {

using Legs = std::vector<std::size_t>;

std::size_t legs_product(const Legs& legs);
std::string legs_str(const Legs& legs);

/* Dense matrix of exact rationals together with tensor-factor annotations
 * ("legs") on both sides.  A map with dom_factors [a,b] and cod_factors [c]
 * is a linear map  Q^a ⊗ Q^b → Q^c;  rows = product of cod factors,
 * cols = product of dom factors.
 *
 * Index convention (leftmost factor major): the column index of the basis
 * vector e_i ⊗ e_j of Q^a ⊗ Q^b is i*b + j.  Composition requires equal leg
 * lists, not just equal products, so tensor bookkeeping errors surface as
 * ShapeMismatch instead of silent misreads. */
class LinearMap {
public:
    LinearMap() : rows_(1), cols_(1), entries_(1) {}
    LinearMap(Legs cod_factors, Legs dom_factors);
    LinearMap(Legs cod_factors, Legs dom_factors, std::vector<Rational> entries);

    static LinearMap identity(std::size_t n);
    static LinearMap identity_on(const Legs& legs);
    static LinearMap scalar(const Rational& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Legs& dom_factors() const { return dom_; }
    const Legs& cod_factors() const { return cod_; }

    const Rational& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Rational value);

    /* Same entries, new leg annotations; products must match. */
    LinearMap reshaped(Legs cod_factors, Legs dom_factors) const;

    bool is_zero() const;
    std::string str() const;

    LinearMap operator-() const;
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator*(const Rational& s, const LinearMap& f);

    friend bool operator==(const LinearMap& a, const LinearMap& b);
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    Legs cod_, dom_;
    std::vector<Rational> entries_; // row-major
};

/* compose(g, f) = g∘f, f applied first.
 * Requires f.cod_factors == g.dom_factors. */
LinearMap compose(const LinearMap& g, const LinearMap& f);

/* Kronecker product, left factor major.
 * Worked example: f: Q^2→Q^2, g: Q^3→Q^3, h = kron(f, g).
 * h has legs [2,3]→[2,3]; the column for e_i⊗e_j is i*3+j, the row for
 * e_p⊗e_q is p*3+q, and h[(p,q),(i,j)] = f[p,i]·g[q,j].  So entry
 * h[5][2] sits at row (p,q)=(1,2), column (i,j)=(0,2) and equals
 * f[1,0]·g[2,2]. */
LinearMap kron(const LinearMap& f, const LinearMap& g);

/* Exact inverse by Gauss-Jordan elimination; throws Singular. */
LinearMap inverse(const LinearMap& f);

/* v⊗w ↦ w⊗v on Q^n ⊗ Q^n, legs [n,n]→[n,n]. */
LinearMap swap_map(std::size_t n);

/* Entry-level equality ignoring leg annotations (dimensions must agree). */
bool entries_equal(const LinearMap& a, const LinearMap& b);

/* Equality after deleting tensor factors of dimension 1 from both leg lists. */
bool equal_up_to_unit_legs(const LinearMap& a, const LinearMap& b);

/* "entry (r,c): lhs vs rhs" for the first differing entry, or "" if equal. */
std::string first_difference(const LinearMap& a, const LinearMap& b);

} // namespace frobx
