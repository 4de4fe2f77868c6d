#pragma once

// Rational functions positive on the torus with no principal part: Fourier
// coefficients by trapezoidal quadrature with an aliasing certificate, and
// the kernel-model coefficient bound |c_k| <= c_0 w2(R^k).

#include "opradii/models.hpp"
#include "opradii/poly_roots.hpp"
#include "opradii/radii.hpp"

namespace opradii {

class RationalTorusFunction {
  public:
    // num/den coefficients low -> high; deg(num) < deg(den) ("no principal
    // part"), no pole within 1e-6 of the torus, and the boundary values must
    // be real and positive on a 4096-point grid.
    RationalTorusFunction(std::vector<Complex> num, std::vector<Complex> den)
        : num_(std::move(num)), den_(std::move(den)) {
        trim(num_);
        trim(den_);
        if (den_.empty()) throw std::invalid_argument("rational: zero denominator");
        if (num_.empty()) throw std::invalid_argument("rational: zero numerator");
        if (num_.size() >= den_.size())
            throw std::invalid_argument(
                "rational: deg(num) must be < deg(den) (no principal part); got deg(num) = " +
                std::to_string(num_.size() - 1) +
                ", deg(den) = " + std::to_string(den_.size() - 1));
        pole_margin_ = std::numeric_limits<double>::infinity();
        for (const auto& z : poly_roots(den_))
            pole_margin_ = std::min(pole_margin_, std::abs(std::abs(z) - 1.0));
        if (!(pole_margin_ > 1e-6))
            throw std::invalid_argument("rational: denominator root within 1e-6 of the torus "
                                        "(pole margin " +
                                        std::to_string(pole_margin_) + ")");
        double sup = 0.0;
        for (int j = 0; j < 4096; ++j) {
            const Complex v = eval(std::polar(1.0, 2.0 * M_PI * j / 4096.0));
            sup = std::max(sup, std::abs(v));
            if (!(v.real() > 0.0))
                throw std::invalid_argument(
                    "rational: not positive on the torus (value " + std::to_string(v.real()) +
                    " at grid point " + std::to_string(j) + ")");
            if (std::abs(v.imag()) > 1e-9 * std::max(std::abs(v.real()), 1.0))
                throw std::invalid_argument(
                    "rational: not real on the torus (imaginary part " +
                    std::to_string(v.imag()) + " at grid point " + std::to_string(j) + ")");
        }
        sup_ = sup;
    }

    Complex eval(Complex z) const { return poly_eval(num_, z) / poly_eval(den_, z); }

    const std::vector<Complex>& num() const { return num_; }
    const std::vector<Complex>& den() const { return den_; }
    double pole_margin() const { return pole_margin_; }
    double sup_on_torus() const { return sup_; }

  private:
    static void trim(std::vector<Complex>& p) {
        double m = 0.0;
        for (const auto& c : p) m = std::max(m, std::abs(c));
        while (!p.empty() && std::abs(p.back()) <= 1e-14 * std::max(m, 1e-300)) p.pop_back();
    }
    std::vector<Complex> num_, den_;
    double pole_margin_ = 0.0;
    double sup_ = 0.0;
};

// Fourier coefficients c_{-k_max}..c_{k_max} on the torus by N-point
// trapezoidal sums; N grows until the geometric aliasing bound
// sup|F| r^(N-k_max)/(1-r^N), r = 1/(1+pole_margin), drops below tol.
inline std::vector<Complex> fourier_coeffs(const RationalTorusFunction& f, int k_max,
                                           double tol = 1e-10) {
    if (k_max < 0) throw std::invalid_argument("fourier_coeffs: k_max must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("fourier_coeffs: tol must be > 0");
    const double r = 1.0 / (1.0 + f.pole_margin());
    int n = 256;
    while (n <= k_max * 2 + 2) n *= 2;
    const int n_cap = 1 << 20;
    while (true) {
        const double bound =
            f.sup_on_torus() * std::pow(r, n - k_max) / (1.0 - std::pow(r, n));
        if (bound < tol) break;
        n *= 2;
        if (n > n_cap)
            throw std::runtime_error(
                "fourier_coeffs: pole margin too small to reach the requested tolerance with "
                "N <= 2^20 quadrature points");
    }
    std::vector<Complex> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = f.eval(std::polar(1.0, 2.0 * M_PI * j / n));
    std::vector<Complex> c(2 * k_max + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= k_max; ++k) {
        Complex s(0.0, 0.0);
        for (int j = 0; j < n; ++j) s += vals[j] * std::polar(1.0, -2.0 * M_PI * k * j / n);
        s /= static_cast<double>(n);
        Complex sneg(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            sneg += vals[j] * std::polar(1.0, 2.0 * M_PI * k * j / n);
        sneg /= static_cast<double>(n);
        // Hermitian symmetry enforced by averaging
        const Complex avg = 0.5 * (s + std::conj(sneg));
        c[static_cast<size_t>(k + k_max)] = (k == 0) ? Complex(avg.real(), 0.0) : avg;
        c[static_cast<size_t>(-k + k_max)] = std::conj(c[static_cast<size_t>(k + k_max)]);
    }
    return c;
}

struct RationalBoundRow {
    int k = 0;
    double abs_ck = 0.0;
    double bound = 0.0;   // c_0 * w2(R^k)
    double margin = 0.0;  // bound - |c_k|
};

struct RationalBoundReport {
    bool trivial_model = false;  // no denominator root inside the disc
    int model_dim = 0;
    double c0 = 0.0;
    std::vector<RationalBoundRow> rows;
};

// |c_k| <= c_0 w2(R^k) for R the backward shift restricted to the kernel of
// the inside-disc factor of the denominator.  With no inside root the model
// is trivial and every bound is 0: such F must have c_k = 0 for k >= 1.
inline RationalBoundReport check_rational_bound(const RationalTorusFunction& f, int k_max) {
    if (k_max < 1) throw std::invalid_argument("check_rational_bound: k_max must be >= 1");
    const auto c = fourier_coeffs(f, k_max, 1e-11);
    const double c0 = c[static_cast<size_t>(k_max)].real();

    std::vector<Complex> inside;
    for (const auto& z : poly_roots(f.den()))
        if (std::abs(z) < 1.0) inside.push_back(z);

    RationalBoundReport rep;
    rep.c0 = c0;
    if (inside.empty()) {
        rep.trivial_model = true;
        rep.model_dim = 0;
        for (int k = 1; k <= k_max; ++k) {
            const double a = std::abs(c[static_cast<size_t>(k + k_max)]);
            rep.rows.push_back({k, a, 0.0, -a});
        }
        return rep;
    }
    const auto clusters = cluster_roots(inside, 1e-7);
    const ModelOperator model =
        detail::kernel_model_from_roots(clusters, poly_from_roots(clusters),
                                        ModelKind::kernel_of_q);
    rep.model_dim = model.matrix.dim();
    ComplexMatrix rk = ComplexMatrix::identity(model.matrix.dim());
    for (int k = 1; k <= k_max; ++k) {
        rk = rk * model.matrix;
        const double b = c0 * numerical_radius(rk, 1e-10).value;
        const double a = std::abs(c[static_cast<size_t>(k + k_max)]);
        rep.rows.push_back({k, a, b, b - a});
    }
    return rep;
}

// F = |h|^2 for h = sum a_i / (1 - conj(beta_i) z), a vector in the model
// space of the Blaschke product with zeros beta_i.  This realizes the
// equality-family / random-corpus construction as a rational function:
//   |h|^2 = sum_{i,j} a_i conj(a_j) z / ((1 - conj(beta_i) z)(z - beta_j)).
inline RationalTorusFunction cauchy_square(const std::vector<Complex>& poles,
                                           const std::vector<Complex>& amplitudes) {
    if (poles.empty() || poles.size() != amplitudes.size())
        throw std::invalid_argument("cauchy_square: poles/amplitudes size mismatch");
    for (const auto& b : poles)
        if (!(std::abs(b) < 1.0))
            throw std::invalid_argument("cauchy_square: poles must lie inside the disc");
    const size_t q = poles.size();
    // den = prod_i (1 - conj(beta_i) z) * prod_j (z - beta_j)
    std::vector<Complex> den{Complex(1.0, 0.0)};
    for (size_t i = 0; i < q; ++i)
        den = poly_mul(den, {Complex(1.0, 0.0), -std::conj(poles[i])});
    for (size_t j = 0; j < q; ++j)
        den = poly_mul(den, {-poles[j], Complex(1.0, 0.0)});
    // num = sum_{i,j} a_i conj(a_j) z * prod_{i'!=i}(1-conj(b_i')z) prod_{j'!=j}(z-b_j')
    std::vector<Complex> num(den.size(), Complex(0.0, 0.0));
    for (size_t i = 0; i < q; ++i) {
        for (size_t j = 0; j < q; ++j) {
            std::vector<Complex> term{Complex(0.0, 0.0), amplitudes[i] * std::conj(amplitudes[j])};
            for (size_t i2 = 0; i2 < q; ++i2)
                if (i2 != i) term = poly_mul(term, {Complex(1.0, 0.0), -std::conj(poles[i2])});
            for (size_t j2 = 0; j2 < q; ++j2)
                if (j2 != j) term = poly_mul(term, {-poles[j2], Complex(1.0, 0.0)});
            for (size_t t = 0; t < term.size(); ++t) num[t] += term[t];
        }
    }
    return RationalTorusFunction(std::move(num), std::move(den));
}

}  // namespace opradii
