#pragma once

// Polynomial root finding: Aberth-Ehrlich simultaneous iteration with a
// Cauchy-bound initial circle, plus multiplicity clustering.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "opradii/linalg.hpp"

namespace opradii {

inline Complex poly_eval(const std::vector<Complex>& c, Complex z) {
    Complex r(0.0, 0.0);
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) r = r * z + c[k];
    return r;
}

inline std::vector<Complex> poly_derivative(const std::vector<Complex>& c) {
    std::vector<Complex> d;
    for (size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
    if (d.empty()) d.push_back(Complex(0.0, 0.0));
    return d;
}

inline std::vector<Complex> poly_mul(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b) {
    std::vector<Complex> r(a.size() + b.size() - 1, Complex(0.0, 0.0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// All roots of a degree >= 1 polynomial, coefficients low -> high.  Trailing
// near-zero coefficients are trimmed relative to the largest coefficient.
inline std::vector<Complex> poly_roots(std::vector<Complex> c) {
    double cmax = 0.0;
    for (const auto& x : c) cmax = std::max(cmax, std::abs(x));
    if (cmax == 0.0) throw std::invalid_argument("poly_roots: zero polynomial");
    while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * cmax) c.pop_back();
    if (c.size() < 2) throw std::invalid_argument("poly_roots: constant polynomial");

    std::vector<Complex> roots;
    // factor out exact-ish roots at the origin
    size_t low = 0;
    while (low + 1 < c.size() && std::abs(c[low]) <= 1e-300) ++low;
    for (size_t i = 0; i < low; ++i) roots.push_back(Complex(0.0, 0.0));
    if (low > 0) c.erase(c.begin(), c.begin() + low);
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;

    // monic
    const Complex lead = c.back();
    for (auto& x : c) x /= lead;
    const std::vector<Complex> dc = poly_derivative(c);

    double cauchy = 0.0;
    for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(c[k]));
    const double radius = 1.0 + cauchy;

    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * M_PI * (k + 0.5) / n + 0.4;
        z[k] = radius * Complex(std::cos(ang), std::sin(ang));
    }

    for (int iter = 0; iter < 400; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            const Complex pk = poly_eval(c, z[k]);
            const Complex dpk = poly_eval(dc, z[k]);
            Complex w;
            if (std::abs(dpk) > 1e-300) {
                w = pk / dpk;
            } else {
                w = Complex(1e-8, 1e-8);
            }
            Complex sum(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                const Complex diff = z[k] - z[j];
                if (std::abs(diff) > 1e-300) sum += 1.0 / diff;
            }
            const Complex denom = 1.0 - w * sum;
            const Complex step = (std::abs(denom) > 1e-300) ? w / denom : w;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
        }
        if (max_step < 1e-14) break;
    }
    for (int k = 0; k < n; ++k) roots.push_back(z[k]);
    return roots;
}

// Greedy clustering of numerically coincident roots; returns (center, mult).
inline std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots,
                                                          double tol = 1e-7) {
    std::vector<std::pair<Complex, int>> clusters;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex sum = roots[i];
        int cnt = 1;
        used[i] = true;
        bool grew = true;
        Complex center = roots[i];
        while (grew) {
            grew = false;
            for (size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(roots[j] - center) <= tol) {
                    used[j] = true;
                    sum += roots[j];
                    ++cnt;
                    center = sum / static_cast<double>(cnt);
                    grew = true;
                }
            }
        }
        clusters.push_back({center, cnt});
    }
    return clusters;
}

// expand prod (z - beta_i)^{m_i} into coefficients low -> high
inline std::vector<Complex> poly_from_roots(const std::vector<std::pair<Complex, int>>& roots) {
    std::vector<Complex> p{Complex(1.0, 0.0)};
    for (const auto& [beta, mult] : roots)
        for (int t = 0; t < mult; ++t) p = poly_mul(p, {-beta, Complex(1.0, 0.0)});
    return p;
}

}  // namespace opradii
