#include <frobx/algebra_io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace frobx {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<Rational> rational_vector(const json& j, std::size_t want, const char* what) {
    if (!j.is_array() || j.size() != want)
        throw InputError(std::string(what) + " must be an array of " + std::to_string(want) +
                         " rational strings");
    std::vector<Rational> out;
    out.reserve(want);
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw InputError(std::string(what) + " entries must be rational strings");
        out.push_back(Rational::parse(entry.get<std::string>()));
    }
    return out;
}

} // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InputError("top level must be an object");

    const json& jname = field(j, "name");
    if (!jname.is_string())
        throw InputError("\"name\" must be a string");
    const json& jdim = field(j, "dim");
    if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() == 0)
        throw InputError("\"dim\" must be a positive integer");
    const std::size_t dim = jdim.get<std::size_t>();

    const json& jbasis = field(j, "basis");
    if (!jbasis.is_array() || jbasis.size() != dim)
        throw InputError("\"basis\" must be an array of " + std::to_string(dim) + " strings");
    std::vector<std::string> basis;
    for (const auto& entry : jbasis) {
        if (!entry.is_string())
            throw InputError("\"basis\" entries must be strings");
        basis.push_back(entry.get<std::string>());
    }

    const json& jmul = field(j, "mul");
    if (!jmul.is_array() || jmul.size() != dim)
        throw InputError("\"mul\" must be an array of " + std::to_string(dim) + " rows");
    std::vector<Rational> mul;
    mul.reserve(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const json& row = jmul[i];
        if (!row.is_array() || row.size() != dim)
            throw InputError("\"mul\" row " + std::to_string(i) + " must have " +
                             std::to_string(dim) + " product vectors");
        for (std::size_t k = 0; k < dim; ++k) {
            std::vector<Rational> product =
                rational_vector(row[k], dim, "\"mul\" product vector");
            mul.insert(mul.end(), product.begin(), product.end());
        }
    }

    std::vector<Rational> unit = rational_vector(field(j, "unit"), dim, "\"unit\"");
    std::vector<Rational> counit = rational_vector(field(j, "counit"), dim, "\"counit\"");

    try {
        return AlgebraFile{
            make_algebra(jname.get<std::string>(), dim, std::move(basis), std::move(mul),
                         std::move(unit)),
            std::move(counit)};
    } catch (const DimensionMismatch& e) {
        throw InputError(e.what());
    }
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_algebra_json(buffer.str());
    } catch (const MalformedRational& e) {
        throw InputError("in \"" + path + "\": " + e.what());
    } catch (const ZeroDenominator& e) {
        throw InputError("in \"" + path + "\": " + e.what());
    } catch (const InputError& e) {
        throw InputError("in \"" + path + "\": " + e.what());
    }
}

} // namespace frobx
