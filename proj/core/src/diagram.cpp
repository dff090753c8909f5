#include <frobx/diagram.hpp>

#include <frobx/errors.hpp>

#include <cctype>

namespace frobx {

std::size_t generator_in_strands(Generator g) {
    switch (g) {
    case Generator::Unit: return 0;
    case Generator::Counit: return 1;
    case Generator::Mult: return 2;
    case Generator::Comult: return 1;
    case Generator::Identity: return 1;
    case Generator::Swap: return 2;
    }
    return 0;
}

std::size_t generator_out_strands(Generator g) {
    switch (g) {
    case Generator::Unit: return 1;
    case Generator::Counit: return 0;
    case Generator::Mult: return 1;
    case Generator::Comult: return 2;
    case Generator::Identity: return 1;
    case Generator::Swap: return 2;
    }
    return 0;
}

DiagramWord parse_word(std::string_view text) {
    DiagramWord word;
    Slice slice;
    std::size_t slice_start = 0;

    auto close_slice = [&](std::size_t pos) {
        if (slice.gens.empty())
            throw SyntaxError("empty slice at offset " + std::to_string(pos), pos);
        if (!word.slices.empty()) {
            std::size_t prev_out = word.slices.back().out_strands;
            if (slice.in_strands != prev_out)
                throw StrandMismatch("slice " + std::to_string(word.slices.size() + 1) +
                                         " expects " + std::to_string(slice.in_strands) +
                                         " strands but receives " + std::to_string(prev_out),
                                     word.slices.size() + 1, slice.in_strands, prev_out);
        }
        word.slices.push_back(slice);
        slice = Slice{};
    };

    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        if (ch == '|') {
            close_slice(slice_start);
            slice_start = pos + 1;
            continue;
        }
        switch (ch) {
        case 'u': case 'c': case 'm': case 'd': case 'i': case 's': {
            Generator g = static_cast<Generator>(ch);
            slice.gens.push_back(g);
            slice.in_strands += generator_in_strands(g);
            slice.out_strands += generator_out_strands(g);
            break;
        }
        default:
            throw SyntaxError("unexpected character '" + std::string(1, ch) + "' at offset " +
                                  std::to_string(pos),
                              pos);
        }
    }
    close_slice(text.size());
    return word;
}

std::string word_str(const DiagramWord& word) {
    std::string out;
    for (std::size_t s = 0; s < word.slices.size(); ++s) {
        if (s)
            out += " | ";
        for (std::size_t g = 0; g < word.slices[s].gens.size(); ++g) {
            if (g)
                out += ' ';
            out += static_cast<char>(word.slices[s].gens[g]);
        }
    }
    return out;
}

LinearMap generator_map(const FrobeniusStructure& fs, Generator g) {
    switch (g) {
    case Generator::Unit: return unit_map(fs.algebra);
    case Generator::Counit: return counit_map(fs);
    case Generator::Mult: return mult_map(fs.algebra);
    case Generator::Comult: return fs.comult;
    case Generator::Identity: return LinearMap::identity(fs.algebra.dim);
    case Generator::Swap: return swap_map(fs.algebra.dim);
    }
    throw Error("unknown generator");
}

LinearMap evaluate_word(const FrobeniusStructure& fs, const DiagramWord& word) {
    LinearMap result = LinearMap::identity_on(Legs(word.in_strands(), fs.algebra.dim));
    for (const Slice& slice : word.slices) {
        LinearMap slice_map = LinearMap::identity_on(Legs{});
        for (Generator g : slice.gens)
            slice_map = kron(slice_map, generator_map(fs, g));
        result = compose(slice_map, result);
    }
    return result;
}

LinearMap handle_operator(const FrobeniusStructure& fs) {
    return compose(mult_map(fs.algebra), fs.comult);
}

Rational surface_invariant(const FrobeniusStructure& fs, std::size_t genus) {
    if (!is_commutative(fs.algebra))
        throw NotCommutative("algebra is not commutative: closed surface invariants are "
                             "undefined over \"" +
                             fs.algebra.name + "\"");
    LinearMap state = unit_map(fs.algebra);
    const LinearMap handle = handle_operator(fs);
    for (std::size_t g = 0; g < genus; ++g)
        state = compose(handle, state);
    return compose(counit_map(fs), state).at(0, 0);
}

} // namespace frobx
