#pragma once

// Closed-form evaluators for the inequality constants.

#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "opradii/linalg.hpp"
#include "opradii/poly_roots.hpp"

namespace opradii {

// cos(pi/(n+1)): the nilpotent-contraction numerical radius bound.
inline double hh_bound(int n) {
    if (n < 2) throw std::invalid_argument("hh_bound: n must be >= 2");
    return std::cos(M_PI / (n + 1));
}

// cos(pi/([(n-1)/p]+2)) for 1 <= p <= n-1, else 0 (the power annihilates).
inline double es_omega(int n, int p) {
    if (n < 2) throw std::invalid_argument("es_omega: n must be >= 2");
    if (p < 0) throw std::invalid_argument("es_omega: p must be >= 0");
    if (p < 1 || p > n - 1) return 0.0;
    const int k = (n - 1) / p;
    return std::cos(M_PI / (k + 2));
}

// sqrt(1 + es(n,k+l)) * sqrt(1 + es(n,|k-l|)): the two-coefficient bound.
inline double two_coeff_closed(int n, int k, int l) {
    if (n < 2) throw std::invalid_argument("two_coeff_closed: n must be >= 2");
    if (k == l) throw std::invalid_argument("two_coeff_closed: k and l must be distinct");
    if (k < 0 || l < 0 || k > n - 1 || l > n - 1)
        throw std::invalid_argument("two_coeff_closed: k, l must lie in 0..n-1");
    return std::sqrt(1.0 + es_omega(n, k + l)) * std::sqrt(1.0 + es_omega(n, std::abs(k - l)));
}

namespace detail {

inline double poly_sup_on_circle(const std::vector<Complex>& p, int grid) {
    double m = 0.0;
    for (int j = 0; j < grid; ++j)
        m = std::max(m, std::abs(poly_eval(p, std::polar(1.0, 2.0 * M_PI * j / grid))));
    return m;
}

}  // namespace detail

// Interpolation bound on omega_rho(p(T)) for contractions with T^n = 0:
//   rho in (0,1]:  (2/rho - 1) ||p||_inf^rho * I(p,n)^(1-rho)
//   rho in [1,2]:  ||p||_inf^(2-rho) * I(p,n)^(rho-1)
// where I(p,n) = inf_theta sup{ |p(zeta)| : zeta^(2n-1) = e^(i theta) }.
inline double interp_bound(double rho, const std::vector<Complex>& p, int n) {
    if (!(rho > 0.0) || rho > 2.0)
        throw std::invalid_argument("interp_bound: rho must lie in (0,2]");
    if (p.empty()) throw std::invalid_argument("interp_bound: empty polynomial");
    if (n < 2) throw std::invalid_argument("interp_bound: n must be >= 2");
    const double pinf = detail::poly_sup_on_circle(p, 4096);
    const int m = 2 * n - 1;
    double infsup = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 1024; ++j) {
        const double theta = 2.0 * M_PI * j / 1024.0;
        double sup = 0.0;
        for (int k = 0; k < m; ++k) {
            const Complex zeta = std::polar(1.0, (theta + 2.0 * M_PI * k) / m);
            sup = std::max(sup, std::abs(poly_eval(p, zeta)));
        }
        infsup = std::min(infsup, sup);
    }
    if (rho <= 1.0)
        return (2.0 / rho - 1.0) * std::pow(pinf, rho) * std::pow(infsup, 1.0 - rho);
    return std::pow(pinf, 2.0 - rho) * std::pow(infsup, rho - 1.0);
}

// cos(pi/(n+1)) + 3 [pi cos^4(pi/(2(n+1)))]^(1/3) (eps/(n+1))^(2/3)
inline double eps_fejer_bound(int n, double eps) {
    if (n < 2) throw std::invalid_argument("eps_fejer_bound: n must be >= 2");
    if (eps < 0.0) throw std::invalid_argument("eps_fejer_bound: eps must be >= 0");
    const double c = std::cos(M_PI / (2.0 * (n + 1)));
    return hh_bound(n) +
           3.0 * std::cbrt(M_PI * c * c * c * c) * std::pow(eps / (n + 1), 2.0 / 3.0);
}

// delta_2(eps) = sqrt(2 eps); delta_k(eps) = sqrt(eps + delta_{k-1}((k-1) sqrt(eps))^2)
inline double herrero_delta(int n, double eps) {
    if (n < 2) throw std::invalid_argument("herrero_delta: n must be >= 2");
    if (eps < 0.0) throw std::invalid_argument("herrero_delta: eps must be >= 0");
    if (n == 2) return std::sqrt(2.0 * eps);
    const double inner = herrero_delta(n - 1, (n - 1) * std::sqrt(eps));
    return std::sqrt(eps + inner * inner);
}

// min of the pure-nilpotency bound at order m and the epsilonized bound at n.
inline double combined_bound(int n, int m, double eps) {
    if (m < n) throw std::invalid_argument("combined_bound: requires m >= n");
    return std::min(hh_bound(m), eps_fejer_bound(n, eps));
}

struct BoundRow {
    std::string name;
    int n = 0, k = 0, l = 0;
    double rho = 0.0, epsilon = 0.0;
    double value = 0.0;
};

struct BoundTable {
    std::vector<BoundRow> rows;

    std::string to_csv() const {
        std::string out = "name,n,k,l,rho,epsilon,value\n";
        char buf[160];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%.17g,%.17g,%.17g\n", r.name.c_str(),
                          r.n, r.k, r.l, r.rho, r.epsilon, r.value);
            out += buf;
        }
        return out;
    }
};

// Standard sweep of every closed-form constant, as emitted by the CLI.
inline BoundTable standard_bound_table() {
    BoundTable t;
    for (int n = 2; n <= 12; ++n)
        t.rows.push_back({"hh", n, 0, 0, 0.0, 0.0, hh_bound(n)});
    for (int n = 2; n <= 12; ++n)
        for (int p = 1; p <= n - 1; ++p)
            t.rows.push_back({"es", n, p, 0, 0.0, 0.0, es_omega(n, p)});
    for (int n = 4; n <= 10; ++n) {
        t.rows.push_back({"two_coeff", n, 1, n - 1, 0.0, 0.0, two_coeff_closed(n, 1, n - 1)});
        t.rows.push_back({"two_coeff", n, 1, 2, 0.0, 0.0, two_coeff_closed(n, 1, 2)});
    }
    t.rows.push_back({"two_coeff", 9, 3, 7, 0.0, 0.0, two_coeff_closed(9, 3, 7)});
    for (int n = 2; n <= 8; ++n)
        for (double eps : {0.0, 1e-4, 1e-2, 0.1})
            t.rows.push_back({"eps_fejer", n, 0, 0, 0.0, eps, eps_fejer_bound(n, eps)});
    for (int n = 2; n <= 8; ++n)
        for (double eps : {1e-4, 1e-2, 0.1})
            t.rows.push_back({"herrero", n, 0, 0, 0.0, eps, herrero_delta(n, eps)});
    for (int n = 2; n <= 6; ++n)
        for (int m = n; m <= n + 3; ++m)
            t.rows.push_back({"combined", n, m, 0, 0.0, 0.01, combined_bound(n, m, 0.01)});
    return t;
}

}  // namespace opradii
