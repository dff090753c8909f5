#include <frobx/adjunction.hpp>
#include <frobx/algebra_io.hpp>
#include <frobx/diagram.hpp>
#include <frobx/modules.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace frobx;
using nlohmann::ordered_json;

ordered_json json_vector(const std::vector<Rational>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v)
        out.push_back(x.str());
    return out;
}

ordered_json json_matrix(const LinearMap& f) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < f.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < f.cols(); ++c)
            row.push_back(f.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_matrix(const LinearMap& f, const std::string& indent) {
    for (std::size_t r = 0; r < f.rows(); ++r) {
        std::cout << indent;
        for (std::size_t c = 0; c < f.cols(); ++c) {
            if (c)
                std::cout << ' ';
            std::cout << f.at(r, c).str();
        }
        std::cout << '\n';
    }
}

std::string element_str(const std::vector<Rational>& coords,
                        const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        if (coords[i].is_one())
            out += names[i];
        else
            out += coords[i].str() + "*" + names[i];
    }
    return out.empty() ? "0" : out;
}

void add_check(Report& report, const std::string& name, bool passed,
               const std::string& witness) {
    Check& check = report.add(name);
    if (!passed)
        report.fail(check, witness);
}

/* Renders the shared report document and returns the process exit code. */
int emit(const std::string& command, const Report& report, const ordered_json& values,
         const std::string& format, const std::string& headline,
         const std::string& success_line = "all checks passed") {
    if (format == "json") {
        ordered_json doc;
        doc["command"] = command;
        doc["passed"] = report.ok();
        ordered_json checks = ordered_json::array();
        for (const auto& check : report.checks) {
            ordered_json c;
            c["name"] = check.name;
            c["passed"] = check.passed;
            c["witness"] = check.witnesses.empty() ? "" : check.witnesses.front();
            checks.push_back(std::move(c));
        }
        doc["checks"] = std::move(checks);
        doc["values"] = values;
        std::cout << doc.dump(2) << '\n';
    } else {
        if (!headline.empty())
            std::cout << headline << '\n';
        std::size_t failed = 0;
        for (const auto& check : report.checks) {
            if (check.passed) {
                std::cout << "  ok " << check.name << '\n';
            } else {
                ++failed;
                std::cout << "  FAIL " << check.name;
                if (!check.witnesses.empty())
                    std::cout << ": " << check.witnesses.front();
                std::cout << '\n';
            }
        }
        if (!report.checks.empty())
            std::cout << (failed ? std::to_string(failed) + " check(s) failed" : success_line)
                      << '\n';
    }
    return report.ok() ? 0 : 1;
}

std::string title(const AlgebraFile& file) {
    return file.algebra.name + " (dim " + std::to_string(file.algebra.dim) + ")";
}

ordered_json basic_values(const AlgebraFile& file) {
    ordered_json values;
    values["name"] = file.algebra.name;
    values["dim"] = file.algebra.dim;
    return values;
}

int cmd_validate(const std::string& path, const std::string& format) {
    AlgebraFile file = load_algebra_file(path);
    Report report = validate_algebra(file.algebra);
    return emit("validate", report, basic_values(file), format, "validate " + title(file));
}

int cmd_frobenius(const std::string& path, const std::string& format) {
    AlgebraFile file = load_algebra_file(path);
    Report axioms = validate_algebra(file.algebra);
    if (!axioms.ok())
        return emit("frobenius", axioms, basic_values(file), format,
                    "frobenius " + title(file));
    FrobeniusStructure fs = build_frobenius(file.algebra, file.counit);
    Report report = check_frobenius(fs);
    ordered_json values = basic_values(file);
    values["gram"] = json_matrix(fs.gram);
    ordered_json duals = ordered_json::array();
    for (const auto& d : fs.dual_basis)
        duals.push_back(json_vector(d));
    values["dual_basis"] = duals;
    values["comultiplication"] = json_matrix(fs.comult);
    if (format != "json") {
        std::cout << "frobenius " << title(file) << '\n';
        std::cout << "gram matrix of the counit pairing:" << '\n';
        print_matrix(fs.gram, "  ");
        std::cout << "dual basis:" << '\n';
        for (std::size_t j = 0; j < fs.dual_basis.size(); ++j)
            std::cout << "  dual of " << fs.algebra.basis_names[j] << " = "
                      << element_str(fs.dual_basis[j], fs.algebra.basis_names) << '\n';
        std::cout << "comultiplication, rows indexed by output pairs:" << '\n';
        print_matrix(fs.comult, "  ");
    }
    return emit("frobenius", report, values, format, "", "all Frobenius axioms hold");
}

int cmd_gram(const std::string& path, const std::string& format) {
    AlgebraFile file = load_algebra_file(path);
    FrobeniusStructure fs = build_frobenius(file.algebra, file.counit);
    Report report;
    report.add("pairing_nondegenerate");
    ordered_json values = basic_values(file);
    values["gram"] = json_matrix(fs.gram);
    if (format != "json") {
        std::cout << "gram " << title(file) << '\n';
        print_matrix(fs.gram, "  ");
    }
    return emit("gram", report, values, format, "");
}

int cmd_delta(const std::string& path, const std::string& format) {
    AlgebraFile file = load_algebra_file(path);
    FrobeniusStructure fs = build_frobenius(file.algebra, file.counit);
    Report full = check_frobenius(fs);
    Report report;
    for (const auto& check : full.checks)
        if (check.name == "coassociativity" || check.name == "counit_laws")
            report.checks.push_back(check);
    ordered_json values = basic_values(file);
    values["comultiplication"] = json_matrix(fs.comult);
    if (format != "json") {
        std::cout << "delta " << title(file) << '\n';
        std::cout << "comultiplication, rows indexed by output pairs:" << '\n';
        print_matrix(fs.comult, "  ");
    }
    return emit("delta", report, values, format, "");
}

int cmd_ambijunction(const std::string& path, const std::string& format) {
    AlgebraFile file = load_algebra_file(path);
    FrobeniusStructure fs = build_frobenius(file.algebra, file.counit);
    Ambijunction amb = build_ambijunction(fs);
    Report report;
    for (const auto& check : check_triangles(amb.fwd).checks) {
        report.checks.push_back(check);
        report.checks.back().name = "fwd_" + check.name;
    }
    for (const auto& check : check_triangles(amb.bwd).checks) {
        report.checks.push_back(check);
        report.checks.back().name = "bwd_" + check.name;
    }
    ordered_json values = basic_values(file);
    values["fwd"] = "induction left adjoint to restriction";
    values["bwd"] = "restriction left adjoint to induction";
    return emit("ambijunction", report, values, format, "ambijunction " + title(file));
}

int cmd_roundtrip(const std::string& path, const std::string& format) {
    AlgebraFile file = load_algebra_file(path);
    FrobeniusStructure fs = build_frobenius(file.algebra, file.counit);
    FrobeniusStructure back = frobenius_from_ambijunction(build_ambijunction(fs));
    Report report;
    auto compare = [&report](const std::string& name, const LinearMap& got,
                             const LinearMap& want) {
        add_check(report, name, entries_equal(got, want), first_difference(got, want));
    };
    compare("multiplication_recovered", mult_map(back.algebra), mult_map(fs.algebra));
    compare("unit_recovered", unit_map(back.algebra), unit_map(fs.algebra));
    compare("counit_recovered", counit_map(back), counit_map(fs));
    compare("comultiplication_recovered", back.comult, fs.comult);
    compare("casimir_recovered", back.casimir, fs.casimir);
    return emit("roundtrip", report, basic_values(file), format,
                "roundtrip " + title(file));
}

/* One-cell from the trivial algebra to itself with the given carrier. */
OneCell trivial_cell(std::size_t carrier) {
    Algebra base = trivial_algebra();
    return make_one_cell(base, base, carrier, LinearMap::identity_on({carrier}));
}

int cmd_mate_demo(const std::string& path, const std::string& format,
                  std::uint64_t seed) {
    AlgebraFile file = load_algebra_file(path);
    FrobeniusStructure fs = build_frobenius(file.algebra, file.counit);
    Ambijunction amb = build_ambijunction(fs);
    Adjunction self = self_adjunction_from_ambijunction(amb);
    MonadData monad = monad_from_adjunction(amb.fwd);
    const std::size_t n = fs.algebra.dim;

    Report report;
    Adjunction id_adj = identity_adjunction(trivial_algebra());
    TwoCell mu_mate = mate(self, id_adj, self.left, self.left, monad.mult);
    add_check(report, "mate_of_multiplication_is_comultiplication",
              entries_equal(mu_mate.rho, fs.comult.reshaped(Legs{1, n * n}, Legs{n})),
              "mate of the monad multiplication differs from the comultiplication");
    OneCell id_cell = identity_one_cell(trivial_algebra());
    TwoCell eta_mate = mate(id_adj, self, id_cell, id_cell, amb.fwd.unit);
    add_check(report, "mate_of_unit_is_counit",
              entries_equal(eta_mate.rho, amb.bwd.counit.rho),
              "mate of the adjunction unit differs from the counit");

    // Round trips over the self-adjunction. Cells at the trivial algebra put
    // no constraint on a 2-cell matrix, so uniform random draws are all valid.
    std::mt19937_64 rng(seed);
    auto entry = [&rng]() { return Rational(static_cast<long long>(rng() % 5) - 2); };
    const std::size_t trials = 20;
    std::size_t bad = 0;
    std::string witness;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        OneCell a = trivial_cell(trial % 3 + 1);
        OneCell b = trivial_cell(trial % 2 + 1);
        OneCell src = compose_one_cells(self.right, b);
        OneCell tgt = compose_one_cells(a, self.right);
        LinearMap xi(Legs{1, tgt.carrier_dim}, Legs{src.carrier_dim});
        for (std::size_t r = 0; r < xi.rows(); ++r)
            for (std::size_t c = 0; c < xi.cols(); ++c)
                xi.set(r, c, entry());
        TwoCell cell = make_two_cell(src, tgt, xi);
        TwoCell back = mate_inv(self, self, a, b, mate(self, self, a, b, cell));
        if (!entries_equal(back.rho, cell.rho) && ++bad == 1)
            witness = "trial " + std::to_string(trial) + " failed to round trip";
    }
    add_check(report, "mate_round_trips", bad == 0, witness);

    ordered_json values = basic_values(file);
    values["seed"] = seed;
    values["trials"] = trials;
    return emit("mate-demo", report, values, format, "mate-demo " + title(file));
}

int cmd_tqft(const std::string& path, const std::string& format, bool has_genus,
             std::uint64_t genus, const std::string& word_text) {
    AlgebraFile file = load_algebra_file(path);
    FrobeniusStructure fs = build_frobenius(file.algebra, file.counit);
    if (has_genus == !word_text.empty()) {
        std::cerr << "error: tqft needs exactly one of --genus or --word" << '\n';
        return 2;
    }
    Report report;
    ordered_json values = basic_values(file);
    if (has_genus) {
        Rational z = surface_invariant(fs, static_cast<std::size_t>(genus));
        report.add("surface_evaluated");
        values["genus"] = genus;
        values["invariant"] = z.str();
        if (format != "json") {
            std::cout << z.str() << '\n';
            return 0;
        }
        return emit("tqft", report, values, format, "");
    }
    DiagramWord word = parse_word(word_text);
    LinearMap value = evaluate_word(fs, word);
    report.add("word_evaluated");
    values["word"] = word_str(word);
    values["in_strands"] = word.in_strands();
    values["out_strands"] = word.out_strands();
    values["matrix"] = json_matrix(value);
    if (format != "json") {
        if (value.rows() == 1 && value.cols() == 1)
            std::cout << value.at(0, 0).str() << '\n';
        else
            print_matrix(value, "");
        return 0;
    }
    return emit("tqft", report, values, format, "");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius algebra toolkit over the rationals"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string path;
    std::uint64_t seed = 0xF0B2;
    std::uint64_t genus = 0;
    std::string word_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", path, "algebra description file")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    };

    add_common(app.add_subcommand("validate", "check the algebra axioms"));
    add_common(app.add_subcommand("frobenius", "derive and check the Frobenius structure"));
    add_common(app.add_subcommand("gram", "print the gram matrix of the counit pairing"));
    add_common(app.add_subcommand("delta", "print the comultiplication"));
    add_common(app.add_subcommand("ambijunction",
                                  "check both induction/restriction adjunctions"));
    add_common(app.add_subcommand("roundtrip",
                                  "rebuild the Frobenius structure from its ambijunction"));
    CLI::App* mate_demo = add_common(app.add_subcommand("mate-demo", "mate correspondence checks"));
    mate_demo->add_option("--seed", seed, "seed for the random round trip draws");
    CLI::App* tqft =
        add_common(app.add_subcommand("tqft", "evaluate closed surfaces or cobordism words"));
    CLI::Option* genus_opt = tqft->add_option("--genus", genus, "genus of a closed surface");
    tqft->add_option("--word", word_text, "cobordism word to evaluate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("validate"))
            return cmd_validate(path, format);
        if (app.got_subcommand("frobenius"))
            return cmd_frobenius(path, format);
        if (app.got_subcommand("gram"))
            return cmd_gram(path, format);
        if (app.got_subcommand("delta"))
            return cmd_delta(path, format);
        if (app.got_subcommand("ambijunction"))
            return cmd_ambijunction(path, format);
        if (app.got_subcommand("roundtrip"))
            return cmd_roundtrip(path, format);
        if (app.got_subcommand("mate-demo"))
            return cmd_mate_demo(path, format, seed);
        if (app.got_subcommand("tqft"))
            return cmd_tqft(path, format, genus_opt->count() > 0, genus, word_text);
    } catch (const AxiomFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
