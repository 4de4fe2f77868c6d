// Command-line front end: compute radii, emit model matrices, run the
// verification suites, print bound tables and generate extremal witnesses.
//
// Exit codes: 0 success / no violations, 1 violation found, 2 invalid input.

#include <iostream>

#include <CLI11.hpp>

#include "opradii/opradii.hpp"

namespace {

using opradii::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        opradii::write_text_file(out_path, text + "\n");
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

std::vector<opradii::Complex> parse_poly(const std::string& s) {
    std::vector<opradii::Complex> coeffs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--poly: expected re:im pairs separated by commas, got \"" +
                                        item + "\"");
        try {
            coeffs.emplace_back(std::stod(item.substr(0, colon)),
                                std::stod(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("--poly: cannot parse \"" + item + "\" as re:im");
        }
    }
    if (coeffs.empty()) throw std::invalid_argument("--poly: empty coefficient list");
    return coeffs;
}

int run(int argc, char** argv) {
    CLI::App app{"operator radii, extremal models and torus coefficient bounds"};
    app.require_subcommand(1);

    std::string matrix_path, poly_arg, out_path, format = "json";
    double rho = 2.0, tol = 0.0;
    int n = 0, k = 0, l = 0;
    uint64_t seed = 42;
    int trials = 1000;

    auto* radius = app.add_subcommand("radius", "compute omega_rho of a matrix");
    radius->add_option("--rho", rho, "radius parameter (1 = norm, 2 = numerical radius)");
    radius->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    radius->add_option("--tol", tol, "accuracy");
    radius->add_option("--format", format)->check(CLI::IsMember({"json"}));
    radius->add_option("--out", out_path, "write result here instead of stdout");

    auto* model = app.add_subcommand("model", "emit a model operator matrix");
    std::string model_kind;
    model->add_option("kind", model_kind, "jordan | bergman | kernel")
        ->required()
        ->check(CLI::IsMember({"jordan", "bergman", "kernel"}));
    model->add_option("--n", n, "cell dimension (jordan, bergman)");
    model->add_option("--poly", poly_arg, "q coefficients re:im,... low->high (kernel)");
    model->add_option("--format", format)->check(CLI::IsMember({"json"}));
    model->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite;
    verify->add_option("suite", suite, "all | nilpotent | kernel-sections | epsilonized | constants")
        ->required()
        ->check(CLI::IsMember({"all", "nilpotent", "kernel-sections", "epsilonized", "constants"}));
    verify->add_option("--seed", seed, "base seed (per-trial seed = seed XOR index)");
    verify->add_option("--trials", trials, "trials per suite");
    verify->add_option("--tol", tol, "override the conclusion tolerances");
    verify->add_option("--format", format)->check(CLI::IsMember({"json"}));
    verify->add_option("--out", out_path, "write the report here");

    auto* bounds = app.add_subcommand("bounds", "print the closed-form bound table");
    std::string table;
    bounds->add_option("what", table, "table")->required()->check(CLI::IsMember({"table"}));
    bounds->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    bounds->add_option("--out", out_path);

    auto* witness = app.add_subcommand("witness", "extremal positive polynomial for (n, k)");
    witness->add_option("--n", n, "degree + 1")->required();
    witness->add_option("--k", k, "coefficient index")->required();
    auto* l_opt =
        witness->add_option("--l", l, "also report the two-coefficient bounds for (k, l)");
    witness->add_option("--format", format)->check(CLI::IsMember({"json"}));
    witness->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean, bad flags are input errors
    }

    if (radius->parsed()) {
        // accept either the bare matrix format or a `model` emission wrapping it
        json mj = opradii::load_json_file(matrix_path);
        if (mj.is_object() && mj.contains("matrix") && !mj.contains("entries"))
            mj = mj["matrix"];
        const auto m = opradii::matrix_from_json(mj);
        const double use_tol = tol > 0.0 ? tol : (rho == 1.0 || rho == 2.0 ? 1e-8 : 1e-4);
        const auto r = opradii::omega_rho(m, rho, use_tol);
        emit_json(opradii::radius_to_json(r, rho), out_path);
        return 0;
    }
    if (model->parsed()) {
        opradii::ModelOperator mo = [&] {
            if (model_kind == "jordan") {
                if (n < 1) throw std::invalid_argument("model jordan: --n must be >= 1");
                return opradii::jordan_cell(n);
            }
            if (model_kind == "bergman") {
                if (n < 2) throw std::invalid_argument("model bergman: --n must be >= 2");
                return opradii::bergman_cell(n);
            }
            if (poly_arg.empty())
                throw std::invalid_argument("model kernel: --poly is required");
            return opradii::kernel_model(parse_poly(poly_arg));
        }();
        emit_json(opradii::model_to_json(mo), out_path);
        return 0;
    }
    if (verify->parsed()) {
        opradii::SuiteConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        if (tol > 0.0)
            for (const char* name : {"omega2_power", "pair", "epsilonized", "omega_rho_poly"})
                cfg.tolerances[name] = tol;
        std::vector<opradii::VerificationReport> reports;
        if (suite == "all")
            reports = opradii::run_all_suites(cfg);
        else if (suite == "nilpotent")
            reports.push_back(opradii::run_nilpotent_suite(cfg));
        else if (suite == "kernel-sections")
            reports.push_back(opradii::run_kernel_sections_suite(cfg));
        else if (suite == "epsilonized")
            reports.push_back(opradii::run_epsilonized_suite(cfg));
        else
            reports.push_back(opradii::reproduce_constants());
        size_t violations = 0;
        json out;
        if (reports.size() == 1) {
            out = reports[0].to_json();
            violations = reports[0].violations.size();
        } else {
            json arr = json::array();
            for (const auto& r : reports) {
                arr.push_back(r.to_json());
                violations += r.violations.size();
            }
            out = json{{"reports", arr}, {"total_violations", violations}};
        }
        emit_json(out, out_path);
        return violations == 0 ? 0 : 1;
    }
    if (bounds->parsed()) {
        const auto t = opradii::standard_bound_table();
        if (format == "csv") {
            std::string csv = t.to_csv();
            if (!csv.empty() && csv.back() == '\n') csv.pop_back();
            emit(csv, out_path);
        } else {
            json rows = json::array();
            for (const auto& r : t.rows)
                rows.push_back(json{{"name", r.name},
                                    {"n", r.n},
                                    {"k", r.k},
                                    {"l", r.l},
                                    {"rho", r.rho},
                                    {"epsilon", r.epsilon},
                                    {"value", r.value}});
            emit_json(rows, out_path);
        }
        return 0;
    }
    if (witness->parsed()) {
        const auto w = opradii::extremal_witness(n, k);
        json j = opradii::trigpoly_to_json(w);
        j["achieved_ratio"] = std::abs(w.coeff(k)) / w.coeff(0).real();
        j["bound"] = opradii::es_omega(n, k);
        if (l_opt->count() > 0) {
            const auto rep = opradii::check_two_coeff(w, k, l);
            j["two_coeff"] = json{{"k", rep.k},
                                  {"l", rep.l},
                                  {"gamma", rep.gamma},
                                  {"sum_abs", rep.sum_abs},
                                  {"sharp_bound", rep.sharp_bound},
                                  {"closed_bound", rep.closed_bound},
                                  {"sharp_margin", rep.sharp_margin},
                                  {"closed_margin", rep.closed_margin}};
        }
        emit_json(j, out_path);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
