#pragma once

#include <frobx/frobenius.hpp>

#include <string_view>

namespace frobx {

/* Cobordism-word generators, one letter each:
 *   u: 0→1 unit       c: 1→0 counit     m: 2→1 multiplication
 *   d: 1→2 comult     i: 1→1 identity   s: 2→2 strand swap */
enum class Generator : char {
    Unit = 'u',
    Counit = 'c',
    Mult = 'm',
    Comult = 'd',
    Identity = 'i',
    Swap = 's',
};

std::size_t generator_in_strands(Generator g);
std::size_t generator_out_strands(Generator g);

struct Slice {
    std::vector<Generator> gens;
    std::size_t in_strands = 0;
    std::size_t out_strands = 0;
};

struct DiagramWord {
    std::vector<Slice> slices;
    std::size_t in_strands() const { return slices.front().in_strands; }
    std::size_t out_strands() const { return slices.back().out_strands; }
};

/* Grammar: word := slice ('|' slice)*;  slice := gen+;  whitespace is
 * insignificant everywhere.  SyntaxError carries the byte offset of the bad
 * token; StrandMismatch carries the 1-based slice index with expected and
 * actual strand counts.
 *
 * Worked strand example for "u u | m | c": slice 1 is the tensor u⊗u
 * (0 strands in, 2 out), slice 2 consumes both strands into one, slice 3
 * closes it off; the whole word is a map from 0 strands to 0 strands. */
DiagramWord parse_word(std::string_view text);

std::string word_str(const DiagramWord& word);

LinearMap generator_map(const FrobeniusStructure& fs, Generator g);

/* Kronecker product across each slice (left to right), then matrix product
 * over slices with the first slice applied first.  Result has one [n] leg
 * per strand on each side. */
LinearMap evaluate_word(const FrobeniusStructure& fs, const DiagramWord& word);

/* mu∘Delta: merge after split, the genus-adding operator. */
LinearMap handle_operator(const FrobeniusStructure& fs);

/* eps(H^g(1)) for the closed genus-g surface; NotCommutative when the
 * algebra is not commutative. */
Rational surface_invariant(const FrobeniusStructure& fs, std::size_t genus);

} // namespace frobx
