#include <frobx/linear_map.hpp>

#include <frobx/errors.hpp>

#include <sstream>
#include <utility>

namespace frobx {

std::size_t legs_product(const Legs& legs) {
    std::size_t p = 1;
    for (std::size_t d : legs)
        p *= d;
    return p;
}

std::string legs_str(const Legs& legs) {
    std::string out = "[";
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(legs[i]);
    }
    return out + "]";
}

LinearMap::LinearMap(Legs cod_factors, Legs dom_factors)
    : rows_(legs_product(cod_factors)),
      cols_(legs_product(dom_factors)),
      cod_(std::move(cod_factors)),
      dom_(std::move(dom_factors)),
      entries_(rows_ * cols_) {}

LinearMap::LinearMap(Legs cod_factors, Legs dom_factors, std::vector<Rational> entries)
    : LinearMap(std::move(cod_factors), std::move(dom_factors)) {
    if (entries.size() != rows_ * cols_)
        throw DimensionMismatch("entry count " + std::to_string(entries.size()) +
                                " does not fill a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " map");
    entries_ = std::move(entries);
}

LinearMap LinearMap::identity(std::size_t n) {
    return identity_on(Legs{n});
}

LinearMap LinearMap::identity_on(const Legs& legs) {
    LinearMap f(legs, legs);
    for (std::size_t i = 0; i < f.rows_; ++i)
        f.set(i, i, Rational(1));
    return f;
}

LinearMap LinearMap::scalar(const Rational& value) {
    LinearMap f(Legs{}, Legs{});
    f.set(0, 0, value);
    return f;
}

const Rational& LinearMap::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw DimensionMismatch("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " map");
    return entries_[r * cols_ + c];
}

void LinearMap::set(std::size_t r, std::size_t c, Rational value) {
    if (r >= rows_ || c >= cols_)
        throw DimensionMismatch("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " map");
    entries_[r * cols_ + c] = std::move(value);
}

LinearMap LinearMap::reshaped(Legs cod_factors, Legs dom_factors) const {
    if (legs_product(cod_factors) != rows_ || legs_product(dom_factors) != cols_)
        throw ShapeMismatch("reshape " + legs_str(dom_) + "->" + legs_str(cod_) + " to " +
                            legs_str(dom_factors) + "->" + legs_str(cod_factors) +
                            " changes total dimensions");
    LinearMap f(std::move(cod_factors), std::move(dom_factors));
    f.entries_ = entries_;
    return f;
}

bool LinearMap::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

std::string LinearMap::str() const {
    std::ostringstream os;
    os << legs_str(dom_) << "->" << legs_str(cod_) << " [";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            os << "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                os << ", ";
            os << entries_[r * cols_ + c];
        }
    }
    os << "]";
    return os.str();
}

LinearMap LinearMap::operator-() const {
    LinearMap f = *this;
    for (auto& e : f.entries_)
        e = -e;
    return f;
}

namespace {

void require_same_shape(const LinearMap& a, const LinearMap& b, const char* op) {
    if (a.cod_factors() != b.cod_factors() || a.dom_factors() != b.dom_factors())
        throw ShapeMismatch(std::string(op) + " of maps with legs " +
                            legs_str(a.dom_factors()) + "->" + legs_str(a.cod_factors()) +
                            " and " + legs_str(b.dom_factors()) + "->" +
                            legs_str(b.cod_factors()));
}

} // namespace

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    require_same_shape(a, b, "sum");
    LinearMap f = a;
    for (std::size_t r = 0; r < f.rows_; ++r)
        for (std::size_t c = 0; c < f.cols_; ++c)
            f.entries_[r * f.cols_ + c] += b.entries_[r * f.cols_ + c];
    return f;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    require_same_shape(a, b, "difference");
    LinearMap f = a;
    for (std::size_t r = 0; r < f.rows_; ++r)
        for (std::size_t c = 0; c < f.cols_; ++c)
            f.entries_[r * f.cols_ + c] -= b.entries_[r * f.cols_ + c];
    return f;
}

LinearMap operator*(const Rational& s, const LinearMap& f) {
    LinearMap g = f;
    for (auto& e : g.entries_)
        e *= s;
    return g;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.cod_ == b.cod_ && a.dom_ == b.dom_ && a.entries_ == b.entries_;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (f.cod_factors() != g.dom_factors())
        throw ShapeMismatch("compose: inner legs " + legs_str(f.cod_factors()) + " vs " +
                            legs_str(g.dom_factors()));
    LinearMap h(g.cod_factors(), f.dom_factors());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t k = 0; k < g.cols(); ++k) {
            const Rational& gv = g.at(r, k);
            if (gv.is_zero())
                continue;
            for (std::size_t c = 0; c < f.cols(); ++c) {
                const Rational& fv = f.at(k, c);
                if (fv.is_zero())
                    continue;
                h.set(r, c, h.at(r, c) + gv * fv);
            }
        }
    return h;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
    Legs cod = f.cod_factors();
    cod.insert(cod.end(), g.cod_factors().begin(), g.cod_factors().end());
    Legs dom = f.dom_factors();
    dom.insert(dom.end(), g.dom_factors().begin(), g.dom_factors().end());
    LinearMap h(std::move(cod), std::move(dom));
    for (std::size_t rf = 0; rf < f.rows(); ++rf)
        for (std::size_t cf = 0; cf < f.cols(); ++cf) {
            const Rational& fv = f.at(rf, cf);
            if (fv.is_zero())
                continue;
            for (std::size_t rg = 0; rg < g.rows(); ++rg)
                for (std::size_t cg = 0; cg < g.cols(); ++cg) {
                    const Rational& gv = g.at(rg, cg);
                    if (gv.is_zero())
                        continue;
                    h.set(rf * g.rows() + rg, cf * g.cols() + cg, fv * gv);
                }
        }
    return h;
}

LinearMap inverse(const LinearMap& f) {
    if (f.rows() != f.cols())
        throw ShapeMismatch("inverse of non-square " + std::to_string(f.rows()) + "x" +
                            std::to_string(f.cols()) + " map");
    const std::size_t n = f.rows();
    // Augmented Gauss-Jordan over Q; exact, so any nonzero pivot works.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = f.at(r, c);
        a[r][n + r] = Rational(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            throw Singular("matrix is singular (no pivot in column " + std::to_string(col) + ")");
        std::swap(a[pivot], a[col]);
        Rational inv_p = Rational(1) / a[col][col];
        for (std::size_t c = col; c < 2 * n; ++c)
            a[col][c] *= inv_p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero())
                continue;
            Rational factor = a[r][col];
            for (std::size_t c = col; c < 2 * n; ++c)
                a[r][c] -= factor * a[col][c];
        }
    }
    LinearMap g(f.dom_factors(), f.cod_factors());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            g.set(r, c, a[r][n + c]);
    return g;
}

LinearMap swap_map(std::size_t n) {
    LinearMap s(Legs{n, n}, Legs{n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.set(j * n + i, i * n + j, Rational(1));
    return s;
}

bool entries_equal(const LinearMap& a, const LinearMap& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c))
                return false;
    return true;
}

namespace {

Legs strip_unit_legs(const Legs& legs) {
    Legs out;
    for (std::size_t d : legs)
        if (d != 1)
            out.push_back(d);
    return out;
}

} // namespace

bool equal_up_to_unit_legs(const LinearMap& a, const LinearMap& b) {
    return entries_equal(a, b) &&
           strip_unit_legs(a.dom_factors()) == strip_unit_legs(b.dom_factors()) &&
           strip_unit_legs(a.cod_factors()) == strip_unit_legs(b.cod_factors());
}

std::string first_difference(const LinearMap& a, const LinearMap& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
               std::to_string(b.rows()) + "x" + std::to_string(b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c))
                return "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " +
                       a.at(r, c).str() + " vs " + b.at(r, c).str();
    return "";
}

} // namespace frobx
