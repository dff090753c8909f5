#pragma once

#include <frobx/algebra.hpp>

#include <string>

namespace frobx {

/* File could not be read, parsed, or does not match the schema. */
struct InputError : Error {
    using Error::Error;
};

/* On-disk description of an algebra with a counit candidate:
 *   {
 *     "name":  string,
 *     "dim":   n,
 *     "basis": [n strings],
 *     "mul":   n x n array of length-n rational-string vectors,
 *               mul[i][j][k] = coefficient of e_k in e_i * e_j,
 *     "unit":  [n rational strings],
 *     "counit":[n rational strings]
 *   }
 * Rationals use the same "-?digits[/digits]" text form as Rational::parse. */
struct AlgebraFile {
    Algebra algebra;
    std::vector<Rational> counit;
};

AlgebraFile load_algebra_file(const std::string& path);
AlgebraFile parse_algebra_json(const std::string& text);

} // namespace frobx
