#include <frobx/frobenius.hpp>

#include <frobx/errors.hpp>

#include <utility>

namespace frobx {

namespace {

void check_matrix(Report& report, const char* name, const LinearMap& lhs, const LinearMap& rhs) {
    Check& c = report.add(name);
    if (lhs != rhs)
        report.fail(c, first_difference(lhs, rhs));
}

} // namespace

FrobeniusStructure build_frobenius(const Algebra& algebra, std::vector<Rational> counit_vec) {
    if (counit_vec.size() != algebra.dim)
        throw DimensionMismatch("counit vector has " + std::to_string(counit_vec.size()) +
                                " entries over a " + std::to_string(algebra.dim) +
                                "-dimensional algebra");
    Report algebra_report = validate_algebra(algebra);
    if (!algebra_report.ok())
        throw AxiomFailure("algebra \"" + algebra.name + "\" is not associative unital: " +
                           algebra_report.summary());

    const std::size_t n = algebra.dim;
    LinearMap gram(Legs{n}, Legs{n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v;
            for (std::size_t k = 0; k < n; ++k)
                v += algebra.c(i, j, k) * counit_vec[k];
            gram.set(i, j, v);
        }

    LinearMap gram_inv;
    try {
        gram_inv = inverse(gram);
    } catch (const Singular&) {
        throw DegenerateForm("counit induces a degenerate pairing on \"" + algebra.name +
                             "\": gram matrix " + gram.str() + " is singular");
    }

    // eps(e_i e^j) = delta_ij picks out the columns of gram^-1.
    std::vector<std::vector<Rational>> dual_basis(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            dual_basis[j][k] = gram_inv.at(k, j);

    LinearMap casimir(Legs{n, n}, Legs{});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            casimir.set(a * n + b, 0, gram_inv.at(b, a));

    LinearMap comult(Legs{n, n}, Legs{n});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                Rational v;
                for (std::size_t i = 0; i < n; ++i)
                    v += algebra.c(j, i, p) * gram_inv.at(q, i);
                comult.set(p * n + q, j, v);
            }

    FrobeniusStructure fs{algebra, std::move(counit_vec), std::move(gram), std::move(dual_basis),
                          std::move(casimir), std::move(comult)};
    Report report = check_frobenius(fs);
    if (!report.ok())
        throw AxiomFailure("derived Frobenius data fails verification on \"" + algebra.name +
                           "\": " + report.summary());
    return fs;
}

LinearMap counit_map(const FrobeniusStructure& fs) {
    const std::size_t n = fs.algebra.dim;
    LinearMap e(Legs{}, Legs{n});
    for (std::size_t k = 0; k < n; ++k)
        e.set(0, k, fs.counit_vec[k]);
    return e;
}

Report check_frobenius(const FrobeniusStructure& fs) {
    const std::size_t n = fs.algebra.dim;
    const LinearMap id = LinearMap::identity(n);
    const LinearMap mu = mult_map(fs.algebra);
    const LinearMap delta = fs.comult;
    const LinearMap eps = counit_map(fs);

    Report report;
    check_matrix(report, "coassociativity",
                 compose(kron(delta, id), delta), compose(kron(id, delta), delta));

    Check& counit_laws = report.add("counit_laws");
    LinearMap left = compose(kron(eps, id), delta);
    LinearMap right = compose(kron(id, eps), delta);
    if (left != id)
        report.fail(counit_laws, "(eps⊗id)∘Delta: " + first_difference(left, id));
    if (right != id)
        report.fail(counit_laws, "(id⊗eps)∘Delta: " + first_difference(right, id));

    const LinearMap delta_mu = compose(delta, mu);
    check_matrix(report, "frobenius_left",
                 compose(kron(mu, id), kron(id, delta)), delta_mu);
    check_matrix(report, "frobenius_right",
                 compose(kron(id, mu), kron(delta, id)), delta_mu);

    // (a⊗1)·C and C·(1⊗a) as maps A -> A⊗A, equal iff the Casimir element
    // commutes with every algebra element.
    LinearMap left_insert = compose(kron(mu, id), kron(id, fs.casimir));
    LinearMap right_insert = compose(kron(id, mu), kron(fs.casimir, id));
    check_matrix(report, "casimir_invariance", left_insert, right_insert);
    return report;
}

} // namespace frobx
