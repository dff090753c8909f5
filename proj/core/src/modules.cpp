#include <frobx/modules.hpp>

#include <frobx/errors.hpp>

namespace frobx {

namespace {

void check_matrix(Report& report, const char* name, const LinearMap& lhs, const LinearMap& rhs) {
    Check& c = report.add(name);
    if (lhs != rhs)
        report.fail(c, first_difference(lhs, rhs));
}

std::size_t module_dim(const FrobeniusStructure& fs, const LinearMap& action) {
    const std::size_t n = fs.algebra.dim;
    if (n == 0 || action.cols() % n != 0 || action.rows() * n != action.cols())
        throw ShapeMismatch("module action must map [n,m]->[m] over a " + std::to_string(n) +
                            "-dimensional algebra, got " + std::to_string(action.cols()) + "->" +
                            std::to_string(action.rows()));
    return action.rows();
}

std::size_t comodule_dim(const FrobeniusStructure& fs, const LinearMap& coaction) {
    const std::size_t n = fs.algebra.dim;
    if (n == 0 || coaction.rows() % n != 0 || coaction.cols() * n != coaction.rows())
        throw ShapeMismatch("comodule coaction must map [m]->[n,m] over a " + std::to_string(n) +
                            "-dimensional algebra, got " + std::to_string(coaction.cols()) + "->" +
                            std::to_string(coaction.rows()));
    return coaction.cols();
}

} // namespace

Report check_module(const FrobeniusStructure& fs, const LinearMap& action) {
    const std::size_t n = fs.algebra.dim;
    const std::size_t m = module_dim(fs, action);
    const LinearMap nu = action.reshaped(Legs{m}, Legs{n, m});
    const LinearMap id_m = LinearMap::identity(m);
    const LinearMap id_a = LinearMap::identity(n);

    Report report;
    check_matrix(report, "action_unital", compose(nu, kron(unit_map(fs.algebra), id_m)), id_m);
    check_matrix(report, "action_associative",
                 compose(nu, kron(mult_map(fs.algebra), id_m)),
                 compose(nu, kron(id_a, nu)));
    return report;
}

Report check_comodule(const FrobeniusStructure& fs, const LinearMap& coaction) {
    const std::size_t n = fs.algebra.dim;
    const std::size_t m = comodule_dim(fs, coaction);
    const LinearMap nu = coaction.reshaped(Legs{n, m}, Legs{m});
    const LinearMap id_m = LinearMap::identity(m);
    const LinearMap id_a = LinearMap::identity(n);

    Report report;
    check_matrix(report, "coaction_counital", compose(kron(counit_map(fs), id_m), nu), id_m);
    check_matrix(report, "coaction_coassociative",
                 compose(kron(fs.comult, id_m), nu),
                 compose(kron(id_a, nu), nu));
    return report;
}

ModuleAction make_module(const FrobeniusStructure& fs, const LinearMap& action) {
    const std::size_t m = module_dim(fs, action);
    Report report = check_module(fs, action);
    if (!report.ok())
        throw AxiomFailure("module axioms failed over \"" + fs.algebra.name + "\": " +
                           report.summary());
    return ModuleAction{fs, m, action.reshaped(Legs{m}, Legs{fs.algebra.dim, m})};
}

ComoduleCoaction make_comodule(const FrobeniusStructure& fs, const LinearMap& coaction) {
    const std::size_t m = comodule_dim(fs, coaction);
    Report report = check_comodule(fs, coaction);
    if (!report.ok())
        throw AxiomFailure("comodule axioms failed over \"" + fs.algebra.name + "\": " +
                           report.summary());
    return ComoduleCoaction{fs, m, coaction.reshaped(Legs{fs.algebra.dim, m}, Legs{m})};
}

ModuleAction regular_module(const FrobeniusStructure& fs) {
    return make_module(fs, mult_map(fs.algebra));
}

ComoduleCoaction module_to_comodule(const ModuleAction& m) {
    const std::size_t n = m.frob.algebra.dim;
    const LinearMap id_a = LinearMap::identity(n);
    const LinearMap id_m = LinearMap::identity(m.carrier_dim);
    LinearMap coaction = compose(kron(id_a, m.action), kron(m.frob.casimir, id_m));
    return make_comodule(m.frob, coaction);
}

ModuleAction comodule_to_module(const ComoduleCoaction& c) {
    const std::size_t n = c.frob.algebra.dim;
    const LinearMap id_a = LinearMap::identity(n);
    const LinearMap id_m = LinearMap::identity(c.carrier_dim);
    LinearMap pairing = compose(counit_map(c.frob), mult_map(c.frob.algebra));
    LinearMap action = compose(kron(pairing, id_m), kron(id_a, c.coaction));
    return make_module(c.frob, action);
}

Report free_module_coaction_agreement(const FrobeniusStructure& fs, std::size_t v_dim) {
    const std::size_t n = fs.algebra.dim;
    const LinearMap id_v = LinearMap::identity(v_dim);
    LinearMap free_action = kron(mult_map(fs.algebra), id_v)
                                .reshaped(Legs{n * v_dim}, Legs{n, n * v_dim});

    Report report;
    Check& valid = report.add("free_module_valid");
    Report module_report = check_module(fs, free_action);
    if (!module_report.ok())
        report.fail(valid, module_report.summary());

    ComoduleCoaction converted = module_to_comodule(ModuleAction{fs, n * v_dim, free_action});
    LinearMap cofree = kron(fs.comult, id_v).reshaped(Legs{n, n * v_dim}, Legs{n * v_dim});
    check_matrix(report, "coaction_is_cofree", converted.coaction, cofree);
    return report;
}

} // namespace frobx
