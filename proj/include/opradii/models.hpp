#pragma once

// Extremal model operators: Jordan cells, Bergman cells, and exact finite
// matrices for the backward shift restricted to polynomial kernels.

#include "opradii/linalg.hpp"
#include "opradii/poly_roots.hpp"

namespace opradii {

enum class ModelKind { jordan, bergman, kernel_of_q, hereditary_kernel };

inline const char* model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::jordan: return "jordan";
        case ModelKind::bergman: return "bergman";
        case ModelKind::kernel_of_q: return "kernel-of-q";
        case ModelKind::hereditary_kernel: return "hereditary-kernel";
    }
    return "?";
}

struct ModelOperator {
    ComplexMatrix matrix;
    ModelKind kind;
    std::vector<std::pair<Complex, int>> roots;  // (beta, multiplicity), when applicable
    std::vector<Complex> defining_poly;          // low -> high, when applicable
    double gram_condition = 1.0;
};

// n x n nilpotent cell with ones on the superdiagonal.
inline ModelOperator jordan_cell(int n) {
    if (n < 1) throw std::invalid_argument("jordan_cell: n must be >= 1");
    ComplexMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
    std::vector<Complex> q(n + 1, Complex(0.0, 0.0));
    q[n] = 1.0;  // z^n
    return {std::move(m), ModelKind::jordan, {{Complex(0.0, 0.0), n}}, std::move(q), 1.0};
}

// n x n cell with superdiagonal sqrt(k/(k+1)), k = 1..n-1.
inline ModelOperator bergman_cell(int n) {
    if (n < 2) throw std::invalid_argument("bergman_cell: n must be >= 2");
    ComplexMatrix m(n);
    for (int i = 0; i + 1 < n; ++i)
        m(i, i + 1) = std::sqrt(static_cast<double>(i + 1) / static_cast<double>(i + 2));
    return {std::move(m), ModelKind::bergman, {{Complex(0.0, 0.0), n}}, {}, 1.0};
}

namespace detail {

// Confluent Cauchy-Pick Gram entry: with v^{(t)}_j = C(j,t) beta^{j-t},
// <v^{(t)}_beta, v^{(t')}_{beta'}> equals the closed-form mixed partial
// (1/t! t'!) d^t/d beta^t d^t'/d w^t' [1/(1-beta w)] at w = conj(beta').
inline Complex gram_entry(Complex beta, int t, Complex betap, int tp) {
    const Complex w = std::conj(betap);
    const Complex f = 1.0 / (1.0 - beta * w);
    auto fact = [](int k) {
        double r = 1.0;
        for (int i = 2; i <= k; ++i) r *= i;
        return r;
    };
    Complex sum(0.0, 0.0);
    for (int s = 0; s <= std::min(t, tp); ++s) {
        const double coef = fact(t + tp - s) / (fact(s) * fact(t - s) * fact(tp - s));
        sum += coef * std::pow(beta, tp - s) * std::pow(w, t - s) *
               std::pow(f, 1 + t + tp - s);
    }
    return sum;
}

// Cholesky G = L L* for Hermitian positive definite G; throws if a pivot
// degenerates (numerically singular Gram matrix).
inline ComplexMatrix cholesky(const ComplexMatrix& g) {
    const int n = g.dim();
    ComplexMatrix l(n);
    for (int j = 0; j < n; ++j) {
        double diag = g(j, j).real();
        for (int k = 0; k < j; ++k) diag -= std::norm(l(j, k));
        if (!(diag > 0.0))
            throw std::runtime_error(
                "kernel_model: Gram matrix numerically singular (roots too close to each "
                "other or to the unit circle)");
        l(j, j) = std::sqrt(diag);
        for (int i = j + 1; i < n; ++i) {
            Complex s = g(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / l(j, j).real();
        }
    }
    return l;
}

// Model matrix from clustered roots strictly inside the disc:
// M = L* D (L*)^{-1} with G = L L* and D the Jordan-form action.
inline ModelOperator kernel_model_from_roots(std::vector<std::pair<Complex, int>> roots,
                                             std::vector<Complex> defining_poly,
                                             ModelKind kind) {
    int dim = 0;
    for (const auto& [beta, mult] : roots) {
        (void)beta;
        dim += mult;
    }
    // basis index (root index, derivative order)
    std::vector<std::pair<int, int>> basis;
    for (size_t i = 0; i < roots.size(); ++i)
        for (int t = 0; t < roots[i].second; ++t) basis.push_back({static_cast<int>(i), t});

    // G = V*V: entry (r,c) = <v_r, v_c> conjugate-linear in the first slot,
    // i.e. gram_entry evaluated with the column root in the beta position
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            g(r, c) = gram_entry(roots[basis[c].first].first, basis[c].second,
                                 roots[basis[r].first].first, basis[r].second);
    // D: block upper Jordan, S* v^{(t)} = beta v^{(t)} + v^{(t-1)}
    ComplexMatrix d(dim);
    for (int c = 0; c < dim; ++c) {
        d(c, c) = roots[basis[c].first].first;
        if (basis[c].second > 0) d(c - 1, c) = 1.0;
    }
    const ComplexMatrix l = cholesky(detail::symmetrize(g));
    const ComplexMatrix lstar = l.adjoint();  // upper triangular
    const ComplexMatrix x = lstar * d;
    // solve M L* = X column by column (L* upper triangular)
    ComplexMatrix m(dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            Complex s = x(i, j);
            for (int k = 0; k < j; ++k) s -= m(i, k) * lstar(k, j);
            m(i, j) = s / lstar(j, j);
        }
    }
    const auto eig = herm_eig(g);
    const double cond =
        eig.eigenvalues.back() / std::max(eig.eigenvalues.front(), 1e-300);
    return {std::move(m), kind, std::move(roots), std::move(defining_poly), cond};
}

}  // namespace detail

// S* restricted to Ker q(S*), in an orthonormal basis of the kernel.  All
// roots of q must lie strictly inside the open unit disc.
inline ModelOperator kernel_model(const std::vector<Complex>& q) {
    double qmax = 0.0;
    for (const auto& c : q) qmax = std::max(qmax, std::abs(c));
    if (qmax == 0.0) throw std::invalid_argument("kernel_model: zero polynomial");
    std::vector<Complex> qq = q;
    while (qq.size() > 1 && std::abs(qq.back()) <= 1e-14 * qmax) qq.pop_back();
    if (qq.size() < 2) throw std::invalid_argument("kernel_model: q must be nonconstant");

    const std::vector<Complex> raw = poly_roots(qq);
    for (const auto& z : raw) {
        const double r = std::abs(z);
        if (r >= 1.0)
            throw std::invalid_argument(
                "kernel_model: root of modulus " + std::to_string(r) +
                " on or outside the closed unit disc; the kernel degenerates (solutions of "
                "the recurrence are not square-summable)");
        if (r > 1.0 - 1e-8)
            throw std::invalid_argument(
                "kernel_model: root of modulus " + std::to_string(r) +
                " within 1e-8 of the unit circle; the Gram matrix is too ill-conditioned");
    }
    auto clusters = cluster_roots(raw, 1e-7);
    return detail::kernel_model_from_roots(std::move(clusters), qq, ModelKind::kernel_of_q);
}

// Model for Ker(S*^d Q(S,S*)): the hereditary constraint reduces, via
// S* S = I, to a one-variable polynomial r(S*) of degree at most 2d; the
// model is kernel_model of the factor of r with roots strictly inside the
// disc.  Roots on the unit circle are rejected: the corresponding kernel
// directions are formal periodic sequences with no square-summable
// representative, so no finite model exists for them.
inline ModelOperator hereditary_kernel_model(const HereditaryPoly& qpoly, int d) {
    const int dw = qpoly.deg_w(), dz = qpoly.deg_z();
    if (d < std::max(dw, dz))
        throw std::invalid_argument("hereditary_kernel_model: d must be >= the degree of Q");
    double csum = 0.0;
    for (const auto& [k, c] : qpoly.terms) {
        (void)k;
        csum += std::abs(c);
    }
    if (csum == 0.0) throw std::invalid_argument("hereditary_kernel_model: zero polynomial");
    double qmax = 0.0;
    for (int j = 0; j < 512; ++j) {
        const double t = 2.0 * M_PI * j / 512.0;
        qmax = std::max(qmax,
                        std::abs(qpoly.eval(std::polar(1.0, -t), std::polar(1.0, t))));
    }
    if (qmax < 1e-12 * csum)
        throw std::invalid_argument(
            "hereditary_kernel_model: Q vanishes identically on the torus, so "
            "S*^d Q(S,S*) reduces to the zero operator");

    // S*^d sum c_{a,b} S*^a S^b = r(S*) with r(z) = sum c_{a,b} z^{d+a-b}
    std::vector<Complex> r(2 * d + 1, Complex(0.0, 0.0));
    for (const auto& [k, c] : qpoly.terms) r[d + k.first - k.second] += c;

    double rmax = 0.0;
    for (const auto& c : r) rmax = std::max(rmax, std::abs(c));
    std::vector<Complex> rt = r;
    while (rt.size() > 1 && std::abs(rt.back()) <= 1e-14 * rmax) rt.pop_back();
    if (rt.size() < 2)
        throw std::invalid_argument("hereditary_kernel_model: trivial kernel (r is constant)");

    const std::vector<Complex> raw = poly_roots(rt);
    std::vector<Complex> inside;
    for (const auto& z : raw) {
        const double m = std::abs(z);
        if (std::abs(m - 1.0) <= 1e-8)
            throw std::invalid_argument(
                "hereditary_kernel_model: r(S*) has a root on the unit circle; its kernel "
                "directions are periodic sequences, which are not square-summable, so no "
                "finite-dimensional model represents this constraint");
        if (m < 1.0) inside.push_back(z);
    }
    if (inside.empty())
        throw std::invalid_argument(
            "hereditary_kernel_model: no root of r inside the disc; the kernel is trivial");
    auto clusters = cluster_roots(inside, 1e-7);
    return detail::kernel_model_from_roots(std::move(clusters), r,
                                           ModelKind::hereditary_kernel);
}

}  // namespace opradii
