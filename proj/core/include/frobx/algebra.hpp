#pragma once

#include <frobx/linear_map.hpp>
#include <frobx/report.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace frobx {

/* Finite-dimensional unital associative algebra over Q, presented by
 * structure constants: e_i · e_j = sum_k c(i,j,k) e_k.  mul is the flat
 * c table indexed (i*dim + j)*dim + k; unit_vec holds the coordinates of 1. */
struct Algebra {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Rational> mul;
    std::vector<Rational> unit_vec;

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return mul[(i * dim + j) * dim + k];
    }
};

/* Size-checks the tables (DimensionMismatch); does not check axioms. */
Algebra make_algebra(std::string name, std::size_t dim, std::vector<std::string> basis_names,
                     std::vector<Rational> mul, std::vector<Rational> unit_vec);

/* One-dimensional algebra Q with basis "1". */
Algebra trivial_algebra();

bool is_trivial(const Algebra& a);

/* Structural equality: name, dimension, basis names, tables.  Deliberately
 * no isomorphism detection; cells over distinct presentations never match. */
bool algebras_equal(const Algebra& a, const Algebra& b);

/* Checks associativity on all basis triples and both unit laws on all basis
 * elements; every failed instance is listed as a witness. */
Report validate_algebra(const Algebra& a);

/* Coordinates of (a_coords · b_coords) under the structure constants. */
std::vector<Rational> multiply_coords(const Algebra& a, const std::vector<Rational>& x,
                                      const std::vector<Rational>& y);

LinearMap mult_map(const Algebra& a);  // [n,n] -> [n]
LinearMap unit_map(const Algebra& a);  // []    -> [n]

bool is_commutative(const Algebra& a);

} // namespace frobx
