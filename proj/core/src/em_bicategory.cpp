#include <frobx/em_bicategory.hpp>

#include <frobx/errors.hpp>

#include <utility>

namespace frobx {

namespace {

void check_matrix(Report& report, const char* name, const LinearMap& lhs, const LinearMap& rhs) {
    Check& c = report.add(name);
    if (lhs != rhs)
        report.fail(c, first_difference(lhs, rhs));
}

std::string cell_desc(const OneCell& cell) {
    return cell.dom.name + "->" + cell.cod.name + " (carrier " +
           std::to_string(cell.carrier_dim) + ")";
}

} // namespace

OneCell make_one_cell(Algebra dom, Algebra cod, std::size_t carrier_dim, const LinearMap& phi) {
    const Legs want_dom{carrier_dim, dom.dim};
    const Legs want_cod{cod.dim, carrier_dim};
    if (legs_product(phi.dom_factors()) != legs_product(want_dom) ||
        legs_product(phi.cod_factors()) != legs_product(want_cod))
        throw ShapeMismatch("cell " + dom.name + "->" + cod.name + " with carrier " +
                            std::to_string(carrier_dim) + " needs phi " + legs_str(want_dom) +
                            "->" + legs_str(want_cod) + ", got " + legs_str(phi.dom_factors()) +
                            "->" + legs_str(phi.cod_factors()));
    return OneCell{std::move(dom), std::move(cod), carrier_dim, phi.reshaped(want_cod, want_dom)};
}

OneCell identity_one_cell(const Algebra& a) {
    LinearMap phi = LinearMap::identity(a.dim).reshaped(Legs{a.dim, 1}, Legs{1, a.dim});
    return OneCell{a, a, 1, std::move(phi)};
}

Report check_one_cell(const OneCell& cell) {
    const std::size_t d = cell.carrier_dim;
    const std::size_t nx = cell.dom.dim;
    const std::size_t ny = cell.cod.dim;
    const LinearMap id_v = LinearMap::identity(d);
    const LinearMap id_x = LinearMap::identity(nx);
    const LinearMap id_y = LinearMap::identity(ny);
    const LinearMap phi = cell.phi.reshaped(Legs{ny, d}, Legs{d, nx});

    Report report;
    // V⊗X⊗X -> Y⊗V both ways around the square.
    LinearMap acting_twice = compose(compose(kron(mult_map(cell.cod), id_v), kron(id_y, phi)),
                                     kron(phi, id_x));
    LinearMap acting_on_product = compose(phi, kron(id_v, mult_map(cell.dom)));
    check_matrix(report, "multiplication_square", acting_twice, acting_on_product);

    LinearMap unit_in = compose(phi, kron(id_v, unit_map(cell.dom)));
    LinearMap unit_out = kron(unit_map(cell.cod), id_v);
    check_matrix(report, "unit_triangle", unit_in, unit_out);
    return report;
}

OneCell compose_one_cells(const OneCell& f, const OneCell& g) {
    if (!algebras_equal(f.cod, g.dom))
        throw ObjectMismatch("compose of cells " + cell_desc(f) + " and " + cell_desc(g) +
                             ": middle objects \"" + f.cod.name + "\" and \"" + g.dom.name +
                             "\" differ");
    const std::size_t d = g.carrier_dim * f.carrier_dim;
    LinearMap phi = compose(kron(g.phi, LinearMap::identity(f.carrier_dim)),
                            kron(LinearMap::identity(g.carrier_dim), f.phi));
    return make_one_cell(f.dom, g.cod, d, phi);
}

bool one_cells_equal(const OneCell& a, const OneCell& b) {
    return algebras_equal(a.dom, b.dom) && algebras_equal(a.cod, b.cod) &&
           a.carrier_dim == b.carrier_dim && a.phi == b.phi;
}

TwoCell make_two_cell(OneCell src, OneCell tgt, const LinearMap& rho) {
    if (!algebras_equal(src.dom, tgt.dom) || !algebras_equal(src.cod, tgt.cod))
        throw ObjectMismatch("2-cell between non-parallel cells " + cell_desc(src) + " and " +
                             cell_desc(tgt));
    const Legs want_dom{src.carrier_dim};
    const Legs want_cod{src.cod.dim, tgt.carrier_dim};
    if (legs_product(rho.dom_factors()) != legs_product(want_dom) ||
        legs_product(rho.cod_factors()) != legs_product(want_cod))
        throw ShapeMismatch("2-cell " + cell_desc(src) + " => " + cell_desc(tgt) + " needs rho " +
                            legs_str(want_dom) + "->" + legs_str(want_cod) + ", got " +
                            legs_str(rho.dom_factors()) + "->" + legs_str(rho.cod_factors()));
    return TwoCell{std::move(src), std::move(tgt), rho.reshaped(want_cod, want_dom)};
}

TwoCell identity_two_cell(const OneCell& cell) {
    LinearMap rho = kron(unit_map(cell.cod), LinearMap::identity(cell.carrier_dim));
    return make_two_cell(cell, cell, rho);
}

Report check_two_cell(const TwoCell& t) {
    const std::size_t ds = t.src.carrier_dim;
    const std::size_t dt = t.tgt.carrier_dim;
    const std::size_t nx = t.src.dom.dim;
    const std::size_t ny = t.src.cod.dim;
    const LinearMap id_x = LinearMap::identity(nx);
    const LinearMap id_y = LinearMap::identity(ny);
    const LinearMap m_y = mult_map(t.src.cod);
    const LinearMap id_dt = LinearMap::identity(dt);

    // Both routes V_src⊗X -> Y⊗V_tgt: act by X then map, or map then act.
    LinearMap rho = t.rho.reshaped(Legs{ny, dt}, Legs{ds});
    LinearMap phi_src = t.src.phi.reshaped(Legs{ny, ds}, Legs{ds, nx});
    LinearMap phi_tgt = t.tgt.phi.reshaped(Legs{ny, dt}, Legs{dt, nx});
    LinearMap act_then_map =
        compose(compose(kron(m_y, id_dt), kron(id_y, rho)), phi_src);
    LinearMap map_then_act =
        compose(compose(kron(m_y, id_dt), kron(id_y, phi_tgt)), kron(rho, id_x));

    Report report;
    check_matrix(report, "bimodule_homomorphism_square", act_then_map, map_then_act);
    return report;
}

TwoCell vertical_compose(const TwoCell& s, const TwoCell& t) {
    if (!one_cells_equal(s.tgt, t.src))
        throw ObjectMismatch("vertical compose: middle cells differ, " + cell_desc(s.tgt) +
                             " vs " + cell_desc(t.src));
    const std::size_t ny = s.src.cod.dim;
    LinearMap rho = compose(compose(kron(mult_map(s.src.cod), LinearMap::identity(t.tgt.carrier_dim)),
                                    kron(LinearMap::identity(ny), t.rho)),
                            s.rho);
    return make_two_cell(s.src, t.tgt, rho);
}

TwoCell whisker_left(const OneCell& f, const TwoCell& t) {
    if (!algebras_equal(t.src.cod, f.dom))
        throw ObjectMismatch("left whisker: cell " + cell_desc(f) + " does not attach to 2-cell with codomain \"" +
                             t.src.cod.name + "\"");
    const LinearMap id_vf = LinearMap::identity(f.carrier_dim);
    LinearMap rho = compose(kron(f.phi, LinearMap::identity(t.tgt.carrier_dim)),
                            kron(id_vf, t.rho));
    return make_two_cell(compose_one_cells(t.src, f), compose_one_cells(t.tgt, f), rho);
}

TwoCell whisker_right(const TwoCell& t, const OneCell& f) {
    if (!algebras_equal(f.cod, t.src.dom))
        throw ObjectMismatch("right whisker: cell " + cell_desc(f) + " does not attach to 2-cell with domain \"" +
                             t.src.dom.name + "\"");
    LinearMap rho = kron(t.rho, LinearMap::identity(f.carrier_dim));
    return make_two_cell(compose_one_cells(f, t.src), compose_one_cells(f, t.tgt), rho);
}

bool two_cells_equal(const TwoCell& a, const TwoCell& b) {
    return one_cells_equal(a.src, b.src) && one_cells_equal(a.tgt, b.tgt) && a.rho == b.rho;
}

BimoduleRealization realize_bimodule(const OneCell& cell) {
    const std::size_t d = cell.carrier_dim;
    const std::size_t ny = cell.cod.dim;
    const LinearMap id_v = LinearMap::identity(d);
    const LinearMap id_y = LinearMap::identity(ny);
    LinearMap left = kron(mult_map(cell.cod), id_v);
    LinearMap right = compose(kron(mult_map(cell.cod), id_v), kron(id_y, cell.phi));
    return BimoduleRealization{std::move(left), std::move(right)};
}

Report check_bimodule(const OneCell& cell) {
    const std::size_t d = cell.carrier_dim;
    const std::size_t nx = cell.dom.dim;
    const std::size_t ny = cell.cod.dim;
    const BimoduleRealization bm = realize_bimodule(cell);
    const LinearMap id_x = LinearMap::identity(nx);
    const LinearMap id_y = LinearMap::identity(ny);
    const LinearMap id_m = LinearMap::identity_on(Legs{ny, d}); // the module Y⊗V
    const LinearMap m_y = mult_map(cell.cod);

    Report report;
    LinearMap unit_left = compose(bm.left_action, kron(unit_map(cell.cod), id_m));
    check_matrix(report, "left_unital", unit_left, id_m);
    LinearMap assoc_left_a = compose(bm.left_action, kron(id_y, bm.left_action));
    LinearMap assoc_left_b = compose(bm.left_action, kron(m_y, id_m));
    check_matrix(report, "left_associative", assoc_left_a, assoc_left_b);

    LinearMap unit_right = compose(bm.right_action, kron(id_m, unit_map(cell.dom)));
    check_matrix(report, "right_unital", unit_right, id_m);
    LinearMap assoc_right_a = compose(bm.right_action, kron(bm.right_action, id_x));
    LinearMap assoc_right_b = compose(bm.right_action, kron(id_m, mult_map(cell.dom)));
    check_matrix(report, "right_associative", assoc_right_a, assoc_right_b);

    LinearMap commute_a = compose(bm.left_action, kron(id_y, bm.right_action));
    LinearMap commute_b = compose(bm.right_action, kron(bm.left_action, id_x));
    check_matrix(report, "actions_commute", commute_a, commute_b);
    return report;
}

} // namespace frobx
