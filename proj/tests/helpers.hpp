#pragma once

// Shared fixtures for the unit and acceptance suites: small matrix
// utilities and the l^2-truncation oracle for kernel models.

#include "opradii/opradii.hpp"

namespace testutil {

using opradii::Complex;
using opradii::ComplexMatrix;

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

// singular values, descending
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    const auto eig = opradii::herm_eig(a.adjoint() * a);
    std::vector<double> sv;
    for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it)
        sv.push_back(std::sqrt(std::max(*it, 0.0)));
    return sv;
}

// Independent oracle for S*|Ker q(S*): truncate l^2 to `trunc` coordinates,
// span the kernel by the geometric sequences C(j,t) beta^{j-t}, orthonormalize
// numerically (modified Gram-Schmidt, twice), and compress the backward
// shift onto that basis.  Shares no code with kernel_model's closed-form
// Gram/Cholesky path.
inline ComplexMatrix kernel_model_oracle(const std::vector<std::pair<Complex, int>>& roots,
                                         int trunc = 200) {
    std::vector<std::vector<Complex>> basis;
    for (const auto& [beta, mult] : roots) {
        for (int t = 0; t < mult; ++t) {
            std::vector<Complex> v(trunc, Complex(0.0, 0.0));
            for (int j = t; j < trunc; ++j) {
                double binom = 1.0;
                for (int s = 0; s < t; ++s) binom *= static_cast<double>(j - s) / (t - s);
                v[j] = binom * std::pow(beta, j - t);
            }
            basis.push_back(std::move(v));
        }
    }
    const int d = static_cast<int>(basis.size());
    auto dot = [&](const std::vector<Complex>& x, const std::vector<Complex>& y) {
        Complex s(0.0, 0.0);
        for (int i = 0; i < trunc; ++i) s += std::conj(x[i]) * y[i];
        return s;
    };
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < j; ++k) {
                const Complex c = dot(basis[k], basis[j]);
                for (int i = 0; i < trunc; ++i) basis[j][i] -= c * basis[k][i];
            }
            double nrm = 0.0;
            for (int i = 0; i < trunc; ++i) nrm += std::norm(basis[j][i]);
            nrm = std::sqrt(nrm);
            for (int i = 0; i < trunc; ++i) basis[j][i] /= nrm;
        }
    }
    // M[i][j] = <b_i, S* b_j>, (S* x)_k = x_{k+1}
    ComplexMatrix m(d);
    for (int j = 0; j < d; ++j) {
        std::vector<Complex> shifted(trunc, Complex(0.0, 0.0));
        for (int i = 0; i + 1 < trunc; ++i) shifted[i] = basis[j][i + 1];
        for (int i = 0; i < d; ++i) m(i, j) = dot(basis[i], shifted);
    }
    return m;
}

}  // namespace testutil
