#include <frobx/algebra.hpp>

#include <frobx/errors.hpp>

#include <utility>

namespace frobx {

Algebra make_algebra(std::string name, std::size_t dim, std::vector<std::string> basis_names,
                     std::vector<Rational> mul, std::vector<Rational> unit_vec) {
    if (basis_names.size() != dim)
        throw DimensionMismatch("algebra \"" + name + "\": " + std::to_string(basis_names.size()) +
                                " basis names for dimension " + std::to_string(dim));
    if (mul.size() != dim * dim * dim)
        throw DimensionMismatch("algebra \"" + name + "\": structure-constant table has " +
                                std::to_string(mul.size()) + " entries, expected " +
                                std::to_string(dim * dim * dim));
    if (unit_vec.size() != dim)
        throw DimensionMismatch("algebra \"" + name + "\": unit vector has " +
                                std::to_string(unit_vec.size()) + " entries, expected " +
                                std::to_string(dim));
    return Algebra{std::move(name), dim, std::move(basis_names), std::move(mul),
                   std::move(unit_vec)};
}

Algebra trivial_algebra() {
    return Algebra{"Q", 1, {"1"}, {Rational(1)}, {Rational(1)}};
}

bool is_trivial(const Algebra& a) {
    return a.dim == 1 && a.mul == std::vector<Rational>{Rational(1)} &&
           a.unit_vec == std::vector<Rational>{Rational(1)};
}

bool algebras_equal(const Algebra& a, const Algebra& b) {
    return a.name == b.name && a.dim == b.dim && a.basis_names == b.basis_names &&
           a.mul == b.mul && a.unit_vec == b.unit_vec;
}

std::vector<Rational> multiply_coords(const Algebra& a, const std::vector<Rational>& x,
                                      const std::vector<Rational>& y) {
    if (x.size() != a.dim || y.size() != a.dim)
        throw DimensionMismatch("coordinate vectors of sizes " + std::to_string(x.size()) +
                                " and " + std::to_string(y.size()) + " over a " +
                                std::to_string(a.dim) + "-dimensional algebra");
    std::vector<Rational> out(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (y[j].is_zero())
                continue;
            Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim; ++k)
                out[k] += s * a.c(i, j, k);
        }
    }
    return out;
}

namespace {

std::vector<Rational> basis_vector(std::size_t dim, std::size_t i) {
    std::vector<Rational> v(dim);
    v[i] = Rational(1);
    return v;
}

std::string coords_str(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += v[i].str();
    }
    return out + ")";
}

} // namespace

Report validate_algebra(const Algebra& a) {
    Report report;
    Check& assoc = report.add("associativity");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            std::vector<Rational> ij = multiply_coords(a, basis_vector(a.dim, i), basis_vector(a.dim, j));
            for (std::size_t k = 0; k < a.dim; ++k) {
                std::vector<Rational> jk = multiply_coords(a, basis_vector(a.dim, j), basis_vector(a.dim, k));
                std::vector<Rational> lhs = multiply_coords(a, ij, basis_vector(a.dim, k));
                std::vector<Rational> rhs = multiply_coords(a, basis_vector(a.dim, i), jk);
                for (std::size_t q = 0; q < a.dim; ++q)
                    if (lhs[q] != rhs[q])
                        report.fail(assoc, "(i,j,k,q)=(" + std::to_string(i) + "," +
                                               std::to_string(j) + "," + std::to_string(k) + "," +
                                               std::to_string(q) + "): " + lhs[q].str() + " vs " +
                                               rhs[q].str());
            }
        }
    Check& unit = report.add("unit_laws");
    for (std::size_t i = 0; i < a.dim; ++i) {
        std::vector<Rational> e = basis_vector(a.dim, i);
        std::vector<Rational> left = multiply_coords(a, a.unit_vec, e);
        std::vector<Rational> right = multiply_coords(a, e, a.unit_vec);
        if (left != e)
            report.fail(unit, "1*" + a.basis_names[i] + " = " + coords_str(left));
        if (right != e)
            report.fail(unit, a.basis_names[i] + "*1 = " + coords_str(right));
    }
    return report;
}

LinearMap mult_map(const Algebra& a) {
    LinearMap m(Legs{a.dim}, Legs{a.dim, a.dim});
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                m.set(k, i * a.dim + j, a.c(i, j, k));
    return m;
}

LinearMap unit_map(const Algebra& a) {
    LinearMap u(Legs{a.dim}, Legs{});
    for (std::size_t k = 0; k < a.dim; ++k)
        u.set(k, 0, a.unit_vec[k]);
    return u;
}

bool is_commutative(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.c(i, j, k) != a.c(j, i, k))
                    return false;
    return true;
}

} // namespace frobx
