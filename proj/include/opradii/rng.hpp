#pragma once

// Deterministic random sources for the harness and the randomized property
// suites.  Generator: std::mt19937_64 driven uniforms, Gaussians by
// Box-Muller.  Identical seeds give identical streams on a given platform.

#include <cstdint>
#include <random>

#include "opradii/linalg.hpp"

namespace opradii {

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // uniform in [0,1)
    double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (eng_() >> 11) * 0x1.0p-53 + 0x1.0p-54;  // (0,1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Complex cnormal() { return Complex(normal(), normal()); }

    std::vector<Complex> cnormal_vector(int n) {
        std::vector<Complex> v(n);
        for (auto& x : v) x = cnormal();
        return v;
    }

    ComplexMatrix cnormal_matrix(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = cnormal();
        return m;
    }

    ComplexMatrix hermitian_matrix(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = normal();
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = cnormal();
                m(j, i) = std::conj(m(i, j));
            }
        }
        return m;
    }

    // Haar-ish unitary: modified Gram-Schmidt of a Gaussian matrix.
    ComplexMatrix unitary(int n) {
        ComplexMatrix g = cnormal_matrix(n);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                Complex dot(0.0, 0.0);
                for (int i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
                for (int i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
            }
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += std::norm(g(i, j));
            s = std::sqrt(s);
            if (s < 1e-12) {  // improbable degenerate draw
                g(j, j) += 1.0;
                s = 1.0;
            }
            for (int i = 0; i < n; ++i) g(i, j) /= s;
        }
        return g;
    }

    // n x k isometric columns (V*V = I_k), stored as column vectors.
    std::vector<std::vector<Complex>> isometry_columns(int n, int k) {
        std::vector<std::vector<Complex>> cols;
        for (int j = 0; j < k; ++j) {
            std::vector<Complex> v = cnormal_vector(n);
            for (const auto& c : cols) {
                Complex dot(0.0, 0.0);
                for (int i = 0; i < n; ++i) dot += std::conj(c[i]) * v[i];
                for (int i = 0; i < n; ++i) v[i] -= dot * c[i];
            }
            cols.push_back(vec_normalized(std::move(v)));
        }
        return cols;
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Compression V* A V for isometric columns V (n x k).
inline ComplexMatrix compress(const ComplexMatrix& a,
                              const std::vector<std::vector<Complex>>& cols) {
    const int n = a.dim();
    const int k = static_cast<int>(cols.size());
    ComplexMatrix r(k);
    for (int j = 0; j < k; ++j) {
        const std::vector<Complex> av = a.apply(cols[j]);
        for (int i = 0; i < k; ++i) {
            Complex dot(0.0, 0.0);
            for (int t = 0; t < n; ++t) dot += std::conj(cols[i][t]) * av[t];
            r(i, j) = dot;
        }
    }
    return r;
}

}  // namespace opradii
