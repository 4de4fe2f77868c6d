#pragma once

// JSON interchange for matrices, trigonometric polynomials, rational
// functions, models and reports.  nlohmann::json is the carrier; complex
// numbers are [re, im] pairs throughout.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opradii/models.hpp"
#include "opradii/radii.hpp"
#include "opradii/rational.hpp"
#include "opradii/trigpoly.hpp"

namespace opradii {

using json = nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument(where + ": expected a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const auto& z : m.entries()) entries.push_back(complex_to_json(z));
    return json{{"dim", m.dim()}, {"entries", entries}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("matrix: expected an object with \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
        throw std::invalid_argument("matrix: \"dim\" must be a positive integer");
    const int dim = j["dim"].get<int>();
    const auto& ent = j["entries"];
    if (!ent.is_array())
        throw std::invalid_argument("matrix: \"entries\" must be an array of [re, im] pairs");
    const size_t expect = static_cast<size_t>(dim) * static_cast<size_t>(dim);
    if (ent.size() != expect)
        throw std::invalid_argument("matrix: \"entries\" has length " +
                                    std::to_string(ent.size()) + ", expected dim*dim = " +
                                    std::to_string(expect));
    std::vector<Complex> v;
    v.reserve(expect);
    for (size_t i = 0; i < ent.size(); ++i)
        v.push_back(complex_from_json(ent[i], "matrix: entries[" + std::to_string(i) + "]"));
    return ComplexMatrix(dim, std::move(v));
}

inline json trigpoly_to_json(const TrigPoly& p) {
    json coeffs = json::array();
    for (const auto& z : p.coeffs()) coeffs.push_back(complex_to_json(z));
    return json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

inline TrigPoly trigpoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw std::invalid_argument(
            "trigpoly: expected an object with \"degree\" and \"coeffs\"");
    if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 0)
        throw std::invalid_argument("trigpoly: \"degree\" must be a nonnegative integer");
    const int m = j["degree"].get<int>();
    const auto& cj = j["coeffs"];
    if (!cj.is_array() || cj.size() != static_cast<size_t>(2 * m + 1))
        throw std::invalid_argument("trigpoly: \"coeffs\" must list the 2*degree+1 values "
                                    "c_{-m}..c_m");
    std::vector<Complex> c;
    for (size_t i = 0; i < cj.size(); ++i)
        c.push_back(complex_from_json(cj[i], "trigpoly: coeffs[" + std::to_string(i) + "]"));
    return TrigPoly(m, std::move(c), 1e-12);
}

inline json rational_to_json(const RationalTorusFunction& f) {
    json num = json::array(), den = json::array();
    for (const auto& z : f.num()) num.push_back(complex_to_json(z));
    for (const auto& z : f.den()) den.push_back(complex_to_json(z));
    return json{{"num", num}, {"den", den}};
}

inline RationalTorusFunction rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational: expected an object with \"num\" and \"den\"");
    auto parse = [&](const char* field) {
        const auto& a = j[field];
        if (!a.is_array() || a.empty())
            throw std::invalid_argument(std::string("rational: \"") + field +
                                        "\" must be a nonempty array of [re, im] pairs");
        std::vector<Complex> v;
        for (size_t i = 0; i < a.size(); ++i)
            v.push_back(complex_from_json(a[i], std::string("rational: ") + field + "[" +
                                                    std::to_string(i) + "]"));
        return v;
    };
    return RationalTorusFunction(parse("num"), parse("den"));
}

inline json model_to_json(const ModelOperator& m) {
    json roots = json::array();
    for (const auto& [beta, mult] : m.roots)
        roots.push_back(json{{"root", complex_to_json(beta)}, {"multiplicity", mult}});
    json poly = json::array();
    for (const auto& c : m.defining_poly) poly.push_back(complex_to_json(c));
    return json{{"kind", model_kind_name(m.kind)},
                {"dim", m.matrix.dim()},
                {"matrix", matrix_to_json(m.matrix)},
                {"roots", roots},
                {"defining_poly", poly},
                {"gram_condition", m.gram_condition}};
}

inline json radius_to_json(const RadiusValue& r, double rho) {
    json j{{"rho", rho}, {"value", r.value}, {"tolerance", r.tolerance}};
    if (r.witness) {
        json vec = json::array();
        for (const auto& z : r.witness->vector) vec.push_back(complex_to_json(z));
        j["witness"] = json{{"theta", r.witness->theta}, {"vector", vec}};
    }
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": JSON parse error: " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace opradii
