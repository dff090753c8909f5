#pragma once

#include <frobx/adjunction.hpp>
#include <frobx/frobenius.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using namespace frobx;

/* Seed manifest.  Every randomized test draws from TestRng with one of
 * these seeds so failures replay exactly.
 *
 *   0xF0B1  kron/compose interchange quadruples
 *   0xF0B2  mate round-trips over the dual-numbers self-adjunction
 *   0xF0B3  random modules, dual numbers
 *   0xF0B4  random modules, group algebra Z/2
 *   0xF0B5  random modules, 2x2 matrix algebra
 *   0xF0B6  module homomorphism draws for vertical-composition tests
 *   0xF0B7  whisker/vertical interchange draws
 *   0xF0B8  counit rescaling spot checks
 *   0xF0B9  random 2-cells with nontrivial outer cells for mates
 */
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : rng_(seed) {}

    /* Integer rationals in {-2,...,2}; the documented generator range. */
    Rational entry() { return Rational(static_cast<long long>(rng_() % 5) - 2); }

    std::size_t index(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }

    LinearMap matrix(const Legs& cod, const Legs& dom) {
        LinearMap f(cod, dom);
        for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t c = 0; c < f.cols(); ++c)
                f.set(r, c, entry());
        return f;
    }

    /* Retry until invertible; entries stay in {-2..2}. */
    LinearMap invertible(std::size_t n) {
        for (;;) {
            LinearMap f = matrix(Legs{n}, Legs{n});
            try {
                inverse(f);
                return f;
            } catch (const Singular&) {
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

/* Q[x]/(x^2), basis (1, x), counit picking the x coordinate. */
inline Algebra dual_numbers_algebra() {
    auto r = [](long long v) { return Rational(v); };
    return make_algebra("dual_numbers", 2, {"1", "x"},
                        {r(1), r(0), r(0), r(1), r(0), r(1), r(0), r(0)},
                        {r(1), r(0)});
}
inline std::vector<Rational> dual_numbers_counit() { return {Rational(0), Rational(1)}; }
inline FrobeniusStructure dual_numbers() {
    return build_frobenius(dual_numbers_algebra(), dual_numbers_counit());
}

/* Group algebra of Z/2, basis (1, t), counit evaluating at the identity. */
inline Algebra group_z2_algebra() {
    auto r = [](long long v) { return Rational(v); };
    return make_algebra("group_z2", 2, {"1", "t"},
                        {r(1), r(0), r(0), r(1), r(0), r(1), r(1), r(0)},
                        {r(1), r(0)});
}
inline std::vector<Rational> group_z2_counit() { return {Rational(1), Rational(0)}; }
inline FrobeniusStructure group_z2() {
    return build_frobenius(group_z2_algebra(), group_z2_counit());
}

/* 2x2 matrices over Q, basis (E11, E12, E21, E22), counit = trace. */
inline Algebra mat2_algebra() {
    const std::size_t n = 4;
    std::vector<Rational> mul(n * n * n);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        mul[(i * n + j) * n + k] = Rational(1);
    };
    // E(a,b) = basis index 2a+b; E(a,b)E(c,d) = [b==c] E(a,d).
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t d = 0; d < 2; ++d)
                set(2 * a + b, 2 * b + d, 2 * a + d);
    return make_algebra("mat2", n, {"E11", "E12", "E21", "E22"}, std::move(mul),
                        {Rational(1), Rational(0), Rational(0), Rational(1)});
}
inline std::vector<Rational> mat2_counit() {
    return {Rational(1), Rational(0), Rational(0), Rational(1)};
}
inline FrobeniusStructure mat2() { return build_frobenius(mat2_algebra(), mat2_counit()); }

inline std::vector<FrobeniusStructure> all_examples() {
    return {dual_numbers(), group_z2(), mat2()};
}

/* Cell Q -> Q with carrier dimension d.  The action map is forced to be the
 * identity, so these are the d-dimensional vector-space cells. */
inline OneCell forced_trivial_cell(std::size_t d) {
    Algebra q = trivial_algebra();
    return make_one_cell(q, q, d, LinearMap::identity_on(Legs{d}));
}

/* Cell Q -> A with carrier dimension d; the action map is forced to insert
 * the unit, giving the rank-d free left module. */
inline OneCell induced_cell(const Algebra& a, std::size_t d) {
    return make_one_cell(trivial_algebra(), a, d,
                         kron(unit_map(a), LinearMap::identity_on(Legs{d})));
}

/* Cell A -> Q whose carrier is the free right module A^k: the action map is
 * the block-diagonal copy of multiplication on each summand. */
inline OneCell free_restriction_cell(const Algebra& a, std::size_t k) {
    const std::size_t n = a.dim;
    LinearMap phi(Legs{1, k * n}, Legs{k * n, n});
    for (std::size_t block = 0; block < k; ++block)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t q = 0; q < n; ++q)
                    phi.set(block * n + q, (block * n + i) * n + j, a.c(i, j, q));
    return make_one_cell(a, trivial_algebra(), k * n, phi);
}

/* The indecomposable left modules of each example algebra, as canonical
 * action matrices with legs [m] <- [n, m].  Direct sums of these, conjugated
 * by a change of basis, range over all modules of dimension <= 4. */
inline std::vector<LinearMap> indecomposable_actions(const Algebra& a) {
    const std::size_t n = a.dim;
    std::vector<LinearMap> out;
    if (a.name == "mat2") {
        LinearMap standard(Legs{2}, Legs{n, 2});
        for (std::size_t row = 0; row < 2; ++row)
            for (std::size_t col = 0; col < 2; ++col)
                standard.set(row, (2 * row + col) * 2 + col, Rational(1));
        out.push_back(std::move(standard));
        return out;
    }
    LinearMap trivial(Legs{1}, Legs{n, 1});
    trivial.set(0, 0, Rational(1));
    if (a.name == "group_z2") {
        trivial.set(0, 1, Rational(1));
        LinearMap sign(Legs{1}, Legs{n, 1});
        sign.set(0, 0, Rational(1));
        sign.set(0, 1, Rational(-1));
        out.push_back(std::move(sign));
    }
    out.push_back(std::move(trivial));
    out.push_back(mult_map(a));
    return out;
}

/* Random module of dimension 1..max_dim: a direct sum of indecomposables in
 * a randomly conjugated basis.  nu' = P ∘ nu ∘ (id (x) P^{-1}). */
inline LinearMap random_module_action(const FrobeniusStructure& fs, TestRng& rng,
                                      std::size_t max_dim = 4) {
    const std::size_t n = fs.algebra.dim;
    std::vector<LinearMap> blocks = indecomposable_actions(fs.algebra);
    std::vector<const LinearMap*> chosen;
    std::size_t total = 0;
    for (;;) {
        std::vector<const LinearMap*> fitting;
        for (const auto& b : blocks)
            if (total + b.rows() <= max_dim)
                fitting.push_back(&b);
        if (fitting.empty())
            break;
        chosen.push_back(fitting[rng.index(fitting.size())]);
        total += chosen.back()->rows();
        if (total > 0 && rng.index(3) == 0)
            break;
    }
    LinearMap nu(Legs{total}, Legs{n, total});
    std::size_t offset = 0;
    for (const LinearMap* block : chosen) {
        const std::size_t m = block->rows();
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t q = 0; q < m; ++q)
                    nu.set(offset + p, i * total + offset + q, block->at(p, i * m + q));
        offset += m;
    }
    LinearMap change = rng.invertible(total);
    return compose(change, compose(nu, kron(LinearMap::identity(n), inverse(change))));
}

/* Module homomorphism A^{k_src} -> A^{k_tgt} given by a block matrix of left
 * multiplications; every right-module map between free modules has this form,
 * so drawing the block entries at random ranges over all valid 2-cells. */
inline TwoCell left_mult_hom(const Algebra& a, std::size_t k_src, std::size_t k_tgt,
                             TestRng& rng) {
    const std::size_t n = a.dim;
    LinearMap rho(Legs{1, k_tgt * n}, Legs{k_src * n});
    for (std::size_t tb = 0; tb < k_tgt; ++tb)
        for (std::size_t sb = 0; sb < k_src; ++sb) {
            std::vector<Rational> coeff(n);
            for (auto& v : coeff)
                v = rng.entry();
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t q = 0; q < n; ++q) {
                        Rational add = coeff[s] * a.c(s, i, q);
                        if (!add.is_zero())
                            rho.set(tb * n + q, sb * n + i,
                                    rho.at(tb * n + q, sb * n + i) + add);
                    }
        }
    return make_two_cell(free_restriction_cell(a, k_src), free_restriction_cell(a, k_tgt),
                         rho);
}

} // namespace fixtures
