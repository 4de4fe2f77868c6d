#pragma once

// Randomized verification suites and the constants-reproduction table.
// Every margin, in the suites and in replay, goes through compute_margin,
// so a recorded violation is a one-call reproduction.

#include <chrono>

#include "opradii/bounds.hpp"
#include "opradii/io.hpp"
#include "opradii/models.hpp"
#include "opradii/radii.hpp"
#include "opradii/rng.hpp"
#include "opradii/trigpoly.hpp"

namespace opradii {

struct SuiteConfig {
    uint64_t seed = 42;
    int trials = 1000;
    int n_min = 2;
    int n_max = 8;
    std::map<std::string, double> tolerances;  // overrides of the defaults below

    double tol(const std::string& name, double def) const {
        const auto it = tolerances.find(name);
        return it == tolerances.end() ? def : it->second;
    }
    json to_json() const {
        return json{{"seed", seed},
                    {"trials", trials},
                    {"n_min", n_min},
                    {"n_max", n_max},
                    {"tolerances", tolerances}};
    }
};

struct Violation {
    int trial = -1;
    std::string check;
    double margin = 0.0;
    json inputs;  // everything needed to replay
};

struct ConstantRow {
    std::string name;
    double expected = 0.0;
    double computed = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    SuiteConfig config;
    std::vector<double> per_trial_margins;  // min margin across the trial's checks
    std::vector<Violation> violations;
    std::vector<ConstantRow> constants;
    double wall_clock_seconds = 0.0;

    bool ok() const { return violations.empty(); }

    json to_json(bool include_wall_clock = true) const {
        json v = json::array();
        for (const auto& x : violations)
            v.push_back(json{{"trial", x.trial},
                             {"check", x.check},
                             {"margin", x.margin},
                             {"inputs", x.inputs}});
        json c = json::array();
        for (const auto& r : constants)
            c.push_back(json{{"name", r.name},
                             {"expected", r.expected},
                             {"computed", r.computed},
                             {"abs_diff", std::abs(r.expected - r.computed)},
                             {"tol", r.tol},
                             {"pass", r.pass}});
        json j{{"suite", suite},
               {"config", config.to_json()},
               {"per_trial_margins", per_trial_margins},
               {"violations", v},
               {"constants", c}};
        if (include_wall_clock) j["wall_clock_seconds"] = wall_clock_seconds;
        return j;
    }
};

namespace harness_detail {

inline ComplexMatrix random_nilpotent(Rng& rng, int n) {
    ComplexMatrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t(i, j) = rng.cnormal();
    const double s = operator_norm(t);
    if (s > 0.0) t *= Complex(0.999 / s, 0.0);
    return t;
}

// P_I S_N* P_I for a random index subset I of size n: a nilpotent partial
// isometry, unitarily a direct sum of smaller Jordan cells.
inline ComplexMatrix compressed_cell(Rng& rng, int n) {
    const int big = n + 1 + rng.uniform_int(0, 3);
    std::vector<int> picked;
    int remaining = n;
    for (int idx = 0; idx < big && remaining > 0; ++idx) {
        const int left = big - idx;
        if (rng.uniform_int(0, left - 1) < remaining) {
            picked.push_back(idx);
            --remaining;
        }
    }
    ComplexMatrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (picked[j] == picked[i] + 1) t(i, j) = 1.0;
    return t;
}

inline int nilpotency_index(const ComplexMatrix& t) {
    const int n = t.dim();
    ComplexMatrix p = t;
    for (int k = 1; k <= n; ++k) {
        if (operator_norm(p) <= 1e-12) return k;
        p = p * t;
    }
    return n;  // strictly upper triangular input always lands here or earlier
}

inline std::vector<Complex> poly_from_json(const json& arr) {
    std::vector<Complex> p;
    for (size_t i = 0; i < arr.size(); ++i)
        p.push_back(complex_from_json(arr[i], "poly[" + std::to_string(i) + "]"));
    return p;
}

inline json poly_to_json(const std::vector<Complex>& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(complex_to_json(c));
    return a;
}

// min over a 256-point torus grid of lambda_min(R_lambda(T*,T)) with
// R_lambda = I + sum_{k=1}^{n-1} lambda^k T*^k + conj(lambda)^k T^k.
inline double kernel_sections_hypothesis_margin(const ComplexMatrix& t, int n) {
    const int dim = t.dim();
    std::vector<ComplexMatrix> pow{ComplexMatrix::identity(dim)};
    for (int k = 1; k <= n - 1; ++k) pow.push_back(pow.back() * t);
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 256; ++j) {
        const Complex lam = std::polar(1.0, 2.0 * M_PI * j / 256.0);
        ComplexMatrix r = ComplexMatrix::identity(dim);
        Complex lk(1.0, 0.0);
        for (int k = 1; k <= n - 1; ++k) {
            lk *= lam;
            ComplexMatrix term = pow[k].adjoint();
            term *= lk;
            r += term;
            ComplexMatrix term2 = pow[k];
            term2 *= std::conj(lk);
            r += term2;
        }
        worst = std::min(worst, detail::herm_lambda_min(detail::symmetrize(r)));
    }
    return worst;
}

}  // namespace harness_detail

// Single entry point for every suite margin; violations replay through it.
// A margin is bound minus value: negative beyond tolerance means violation.
inline double compute_margin(const std::string& check, const json& inputs) {
    using harness_detail::poly_from_json;
    if (check == "nilpotent_omega2_power") {
        const ComplexMatrix t = matrix_from_json(inputs.at("matrix"));
        const int n = inputs.at("n").get<int>();
        const int m = inputs.at("m").get<int>();
        return es_omega(n, m) - numerical_radius(mat_pow(t, m), 1e-9).value;
    }
    if (check == "nilpotent_omega_rho_poly") {
        const ComplexMatrix t = matrix_from_json(inputs.at("matrix"));
        const int n = inputs.at("n").get<int>();
        const double rho = inputs.at("rho").get<double>();
        const auto p = poly_from_json(inputs.at("poly"));
        const double tol = inputs.at("radius_tol").get<double>();
        const ComplexMatrix model = mat_poly(jordan_cell(n).matrix, p);
        return omega_rho(model, rho, tol).value - omega_rho(mat_poly(t, p), rho, tol).value;
    }
    if (check == "kernel_sections_hypothesis") {
        const ComplexMatrix t = matrix_from_json(inputs.at("matrix"));
        return harness_detail::kernel_sections_hypothesis_margin(t, inputs.at("n").get<int>());
    }
    if (check == "kernel_sections_power") {
        const ComplexMatrix t = matrix_from_json(inputs.at("matrix"));
        const int n = inputs.at("n").get<int>();
        const int m = inputs.at("m").get<int>();
        return es_omega(n, m) - numerical_radius(mat_pow(t, m), 1e-9).value;
    }
    if (check == "kernel_sections_pair") {
        const ComplexMatrix t = matrix_from_json(inputs.at("matrix"));
        const int n = inputs.at("n").get<int>();
        const int m = inputs.at("m").get<int>();
        const int l = inputs.at("l").get<int>();
        const std::string radius = inputs.at("radius").get<std::string>();
        const ComplexMatrix lhs = mat_pow(t, m) + mat_pow(t, l);
        const ComplexMatrix sn = jordan_cell(n).matrix;
        const ComplexMatrix rhs = mat_pow(sn, m) + mat_pow(sn, l);
        auto eval = [&](const ComplexMatrix& x) {
            if (radius == "norm") return operator_norm(x);
            if (radius == "omega2") return numerical_radius(x, 1e-9).value;
            return diam_numerical_range(x, 1e-9);
        };
        return eval(rhs) - eval(lhs);
    }
    if (check == "epsilonized_bound") {
        const int n = inputs.at("n").get<int>();
        const int m = inputs.at("m").get<int>();
        const double c = inputs.at("c").get<double>();
        const std::string which = inputs.at("which").get<std::string>();
        const double eps = (m > n) ? std::pow(c, n) : 0.0;
        ComplexMatrix t = jordan_cell(m).matrix;
        t *= Complex(c, 0.0);
        const double w2 = numerical_radius(t, 1e-9).value;
        if (which == "eps_fejer") return eps_fejer_bound(n, eps) - w2;
        if (which == "herrero") return hh_bound(n) + herrero_delta(n, eps) - w2;
        return combined_bound(n, m, eps) - w2;
    }
    if (check == "constant") {
        return inputs.at("tol").get<double>() -
               std::abs(inputs.at("expected").get<double>() -
                        inputs.at("computed").get<double>());
    }
    throw std::invalid_argument("compute_margin: unknown check \"" + check + "\"");
}

inline double replay_violation(const Violation& v) { return compute_margin(v.check, v.inputs); }

namespace harness_detail {

struct TrialRecorder {
    VerificationReport& rep;
    int trial;
    double trial_min = std::numeric_limits<double>::infinity();

    void record(const std::string& check, const json& inputs, double margin, double tol) {
        trial_min = std::min(trial_min, margin);
        if (margin < -tol) rep.violations.push_back({trial, check, margin, inputs});
    }
    ~TrialRecorder() {
        rep.per_trial_margins.push_back(
            std::isfinite(trial_min) ? trial_min : 0.0);
    }
};

}  // namespace harness_detail

// Random nilpotent contractions: omega_2 power bounds and the polynomial
// calculus comparison against the Jordan-cell model.
inline VerificationReport run_nilpotent_suite(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "nilpotent";
    rep.config = cfg;
    const double tol_pow = cfg.tol("omega2_power", 1e-6);
    const double tol_poly = cfg.tol("omega_rho_poly", 5e-3);
    const double radius_tol = cfg.tol("omega_rho_radius_tol", 1e-3);
    const int span = std::max(cfg.n_max - cfg.n_min, 0);
    for (int i = 0; i < cfg.trials; ++i) {
        harness_detail::TrialRecorder rec{rep, i};
        Rng rng(cfg.seed ^ static_cast<uint64_t>(i));
        const int n = cfg.n_min + (span ? i % (span + 1) : 0);
        const ComplexMatrix t = harness_detail::random_nilpotent(rng, n);
        const json mj = matrix_to_json(t);
        for (int m = 1; m <= n - 1; ++m) {
            const json inputs{{"matrix", mj}, {"n", n}, {"m", m}};
            rec.record("nilpotent_omega2_power", inputs,
                       compute_margin("nilpotent_omega2_power", inputs), tol_pow);
        }
        // one random polynomial and rho per trial
        const int deg = 1 + rng.uniform_int(0, n - 1 > 0 ? n - 2 : 0);
        std::vector<Complex> p = rng.cnormal_vector(deg + 1);
        const double rho_choices[3] = {1.0, 1.5, 2.0};
        const double rho = rho_choices[rng.uniform_int(0, 2)];
        const json inputs{{"matrix", mj},
                          {"n", n},
                          {"rho", rho},
                          {"poly", harness_detail::poly_to_json(p)},
                          {"radius_tol", radius_tol}};
        rec.record("nilpotent_omega_rho_poly", inputs,
                   compute_margin("nilpotent_omega_rho_poly", inputs), tol_poly);
    }
    rep.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Operators with nonnegative torus kernel sections (realized by nilpotent
// contractions): hypothesis verified on a 256-point grid, then the power and
// two-power conclusions checked against the Jordan-cell values.
inline VerificationReport run_kernel_sections_suite(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "kernel-sections";
    rep.config = cfg;
    const double tol_hyp = cfg.tol("hypothesis", 1e-9);
    const double tol_pow = cfg.tol("omega2_power", 1e-6);
    const double tol_pair = cfg.tol("pair", 1e-6);
    const int span = std::max(cfg.n_max - cfg.n_min, 0);
    for (int i = 0; i < cfg.trials; ++i) {
        harness_detail::TrialRecorder rec{rep, i};
        Rng rng(cfg.seed ^ static_cast<uint64_t>(i));
        const int n_dim = cfg.n_min + (span ? i % (span + 1) : 0);
        ComplexMatrix t(1);
        switch (i % 3) {
            case 0: t = harness_detail::compressed_cell(rng, n_dim); break;
            case 1: t = harness_detail::random_nilpotent(rng, n_dim); break;
            default: {
                t = jordan_cell(n_dim).matrix;
                t *= Complex(rng.uniform(0.3, 1.0), 0.0);
                break;
            }
        }
        const int n = harness_detail::nilpotency_index(t);
        const json mj = matrix_to_json(t);
        {
            const json inputs{{"matrix", mj}, {"n", n}};
            const double margin = compute_margin("kernel_sections_hypothesis", inputs);
            rec.record("kernel_sections_hypothesis", inputs, margin, tol_hyp);
            if (margin < -tol_hyp) continue;  // generator bug; conclusions not asserted
        }
        for (int m = 1; m <= n - 1; ++m) {
            const json inputs{{"matrix", mj}, {"n", n}, {"m", m}};
            rec.record("kernel_sections_power", inputs,
                       compute_margin("kernel_sections_power", inputs), tol_pow);
        }
        if (n >= 2) {
            const int m = 1 + rng.uniform_int(0, n - 2);
            int l = rng.uniform_int(0, n - 1);
            if (l == m) l = (m + 1) % n;
            for (const char* radius : {"norm", "omega2", "diamw"}) {
                const json inputs{{"matrix", mj}, {"n", n},      {"m", m},
                                  {"l", l},       {"radius", radius}};
                rec.record("kernel_sections_pair", inputs,
                           compute_margin("kernel_sections_pair", inputs), tol_pair);
            }
        }
    }
    rep.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Scaled Jordan cells T = c S_m* with ||T^n|| = c^n = eps: the epsilonized
// bound, the Herrero chain, and the combined bound.
inline VerificationReport run_epsilonized_suite(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "epsilonized";
    rep.config = cfg;
    const double tol = cfg.tol("epsilonized", 1e-7);
    for (int i = 0; i < cfg.trials; ++i) {
        harness_detail::TrialRecorder rec{rep, i};
        Rng rng(cfg.seed ^ static_cast<uint64_t>(i));
        const int n = std::max(2, cfg.n_min) + i % 5;
        const int m = n + i % 4;
        const double c = (i % 7 == 0) ? 1.0 : rng.uniform(0.55, 1.0);
        for (const char* which : {"eps_fejer", "herrero", "combined"}) {
            const json inputs{{"n", n}, {"m", m}, {"c", c}, {"which", which}};
            rec.record("epsilonized_bound", inputs,
                       compute_margin("epsilonized_bound", inputs), tol);
        }
    }
    rep.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Closed-form constants reproduced by the numerical paths.
inline VerificationReport reproduce_constants() {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = "constants";
    auto row = [&](const std::string& name, double expected, double computed,
                   double tol = 1e-8) {
        const bool pass = std::abs(expected - computed) <= tol;
        rep.constants.push_back({name, expected, computed, tol, pass});
        if (!pass)
            rep.violations.push_back(
                {static_cast<int>(rep.constants.size()) - 1, "constant",
                 tol - std::abs(expected - computed),
                 json{{"name", name}, {"expected", expected}, {"computed", computed},
                      {"tol", tol}}});
    };

    for (int n = 2; n <= 12; ++n)
        row("omega2(S" + std::to_string(n) + "*)", std::cos(M_PI / (n + 1)),
            numerical_radius(jordan_cell(n).matrix, 1e-10).value);
    {
        const ModelOperator b3 = bergman_cell(3);
        row("omega2(B3*)", std::sqrt(7.0 / 24.0), numerical_radius(b3.matrix, 1e-10).value);
        row("omega2(B3*^2)", std::sqrt(1.0 / 12.0),
            numerical_radius(b3.matrix * b3.matrix, 1e-10).value);
        const ComplexMatrix a3 = b3.matrix + b3.matrix.adjoint();
        row("lambda_max(B3*+B3)", std::sqrt(7.0 / 6.0), herm_eig(a3).eigenvalues.back());
    }
    {
        const ComplexMatrix s9 = jordan_cell(9).matrix;
        row("omega2(S9*^3+S9*^7)", std::cos(M_PI / 10.0),
            numerical_radius(mat_pow(s9, 3) + mat_pow(s9, 7), 1e-10).value);
    }
    {
        const ComplexMatrix t(2, {Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0),
                                  Complex(-1.0, 0.0)});
        auto ando_nishio = [](double b, double rho) {
            return (std::sqrt(b * b / 4.0 + 1.0) +
                    std::sqrt(b * b / 4.0 + 1.0 + rho * (rho - 2.0))) /
                   rho;
        };
        row("norm([[1,1],[0,-1]])", (1.0 + std::sqrt(5.0)) / 2.0, operator_norm(t));
        row("omega2([[1,1],[0,-1]])", std::sqrt(5.0) / 2.0,
            numerical_radius(t, 1e-10).value);
        row("omega3([[1,1],[0,-1]])", ando_nishio(1.0, 3.0), omega_rho(t, 3.0, 1e-6).value,
            1e-4);
        row("omega1.5([[1,1],[0,-1]])", ando_nishio(1.0, 1.5),
            omega_rho(t, 1.5, 1e-6).value, 1e-4);
    }
    row("two_coeff_closed(4,1,3)", std::sqrt(1.5), two_coeff_closed(4, 1, 3), 1e-12);
    row("two_coeff_closed(9,3,7)", std::sqrt(1.0 + std::cos(M_PI / 4.0)),
        two_coeff_closed(9, 3, 7), 1e-12);
    row("es_omega(9,3)", std::cos(M_PI / 4.0), es_omega(9, 3), 1e-15);
    row("herrero_delta(2,0.02)", 0.2, herrero_delta(2, 0.02), 1e-15);
    row("herrero_delta(3,1e-4)", std::sqrt(1e-4 + 4e-2), herrero_delta(3, 1e-4), 1e-15);
    row("eps_fejer(5,0)=hh(5)", hh_bound(5), eps_fejer_bound(5, 0.0), 0.0);
    {
        const TrigPoly w = extremal_witness(4, 1);
        row("witness(4,1) ratio", std::cos(M_PI / 5.0),
            w.coeff(1).real() / w.coeff(0).real(), 1e-6);
    }
    {
        const auto f = cauchy_square({Complex(0.5, 0.0)}, {Complex(1.0, 0.0)});
        const auto c = fourier_coeffs(f, 1, 1e-12);
        row("single_pole_c0", 4.0 / 3.0, c[1].real(), 1e-10);
        row("single_pole_c1", 2.0 / 3.0, c[2].real(), 1e-10);
    }
    rep.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline std::vector<VerificationReport> run_all_suites(const SuiteConfig& cfg) {
    std::vector<VerificationReport> reports;
    reports.push_back(run_nilpotent_suite(cfg));
    reports.push_back(run_kernel_sections_suite(cfg));
    reports.push_back(run_epsilonized_suite(cfg));
    reports.push_back(reproduce_constants());
    return reports;
}

}  // namespace opradii
