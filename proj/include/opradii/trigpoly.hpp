#pragma once

// Real trigonometric polynomials on the torus: construction from analytic
// polynomials, positivity certification, spectral (Fejer-Riesz)
// factorization, coefficient-bound checking and extremal witnesses.

#include "opradii/bounds.hpp"
#include "opradii/models.hpp"
#include "opradii/poly_roots.hpp"
#include "opradii/radii.hpp"
#include "opradii/rng.hpp"

namespace opradii {

struct AnalyticPoly {
    std::vector<Complex> coeffs;  // low -> high
};

// Hermitian-symmetric coefficient vector c_{-m}..c_m of a real function
// sum c_k e^{ikt} on the torus.
class TrigPoly {
  public:
    // from the full coefficient list c_{-m}..c_m; validates the symmetry
    TrigPoly(int degree, std::vector<Complex> coeffs, double sym_tol = 1e-12)
        : m_(degree), c_(std::move(coeffs)) {
        if (m_ < 0) throw std::invalid_argument("TrigPoly: degree must be >= 0");
        if (c_.size() != static_cast<size_t>(2 * m_ + 1))
            throw std::invalid_argument("TrigPoly: coeffs must have length 2*degree+1, got " +
                                        std::to_string(c_.size()));
        double scale = 0.0;
        for (const auto& x : c_) {
            if (!is_finite(x)) throw std::invalid_argument("TrigPoly: non-finite coefficient");
            scale = std::max(scale, std::abs(x));
        }
        for (int k = 0; k <= m_; ++k) {
            const double dev = std::abs(coeff(-k) - std::conj(coeff(k)));
            if (dev > sym_tol * std::max(scale, 1.0))
                throw std::invalid_argument(
                    "TrigPoly: Hermitian symmetry violated at k = " + std::to_string(k) +
                    " (|c_{-k} - conj(c_k)| = " + std::to_string(dev) + ")");
        }
        // exact symmetrization kills parser rounding
        for (int k = 1; k <= m_; ++k) {
            const Complex avg = 0.5 * (coeff(k) + std::conj(coeff(-k)));
            set(k, avg);
            set(-k, std::conj(avg));
        }
        set(0, Complex(coeff(0).real(), 0.0));
    }

    int degree() const { return m_; }
    Complex coeff(int k) const { return c_[static_cast<size_t>(k + m_)]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    double eval(double t) const {
        // real by symmetry: c_0 + 2 Re sum_{k>0} c_k e^{ikt}
        double s = coeff(0).real();
        const Complex w = std::polar(1.0, t);
        Complex wk(1.0, 0.0);
        for (int k = 1; k <= m_; ++k) {
            wk *= w;
            s += 2.0 * (coeff(k) * wk).real();
        }
        return s;
    }

  private:
    void set(int k, Complex v) { c_[static_cast<size_t>(k + m_)] = v; }
    int m_;
    std::vector<Complex> c_;
};

// |Q|^2 on the torus: c_k = sum_j q_{j+k} conj(q_j); c_0 = ||Q||_2^2.
inline TrigPoly from_analytic(const AnalyticPoly& q) {
    double qmax = 0.0;
    for (const auto& x : q.coeffs) qmax = std::max(qmax, std::abs(x));
    if (qmax == 0.0) throw std::invalid_argument("from_analytic: Q must be nonzero");
    const int m = static_cast<int>(q.coeffs.size()) - 1;
    std::vector<Complex> c(2 * m + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= m; ++k) {
        Complex s(0.0, 0.0);
        for (int j = 0; j + k <= m; ++j) s += q.coeffs[j + k] * std::conj(q.coeffs[j]);
        c[static_cast<size_t>(k + m)] = s;
        c[static_cast<size_t>(-k + m)] = std::conj(s);
    }
    return TrigPoly(m, std::move(c));
}

enum class Positivity { positive, violated, inconclusive };

struct PositivityCertificate {
    Positivity status = Positivity::inconclusive;
    double min_value = 0.0;
    double min_point = 0.0;  // angle of the grid minimum
    double margin = 0.0;     // grid_min - Bernstein slack; certified sign when > 0
};

// Grid positivity with a Bernstein-derivative certificate: on a grid of
// 64(m+1) points, ||P'||_inf <= m ||P||_inf turns the grid minimum into a
// verdict.  Inconclusive results get one 4x refinement.
inline PositivityCertificate certify_positive(const TrigPoly& p, double tol = 1e-12) {
    if (!(tol > 0.0)) throw std::invalid_argument("certify_positive: tol must be > 0");
    const int m = p.degree();
    auto pass = [&](int grid) {
        PositivityCertificate cert;
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0, arg = 0.0;
        for (int j = 0; j < grid; ++j) {
            const double t = 2.0 * M_PI * j / grid;
            const double v = p.eval(t);
            hi = std::max(hi, std::abs(v));
            if (v < lo) {
                lo = v;
                arg = t;
            }
        }
        const double slack = m * hi * (M_PI / grid);  // half grid spacing
        cert.min_value = lo;
        cert.min_point = arg;
        cert.margin = lo - slack;
        if (lo < -tol)
            cert.status = Positivity::violated;
        else if (cert.margin > tol)
            cert.status = Positivity::positive;
        else
            cert.status = Positivity::inconclusive;
        return cert;
    };
    PositivityCertificate cert = pass(64 * (m + 1));
    if (cert.status == Positivity::inconclusive) cert = pass(4 * 64 * (m + 1));
    return cert;
}

// Spectral factorization of a certified strictly positive P: returns Q with
// |Q|^2 = P on the torus.  Roots of the Laurent lift z^m P(z) are paired
// (alpha, 1/conj(alpha)) and the inside-disc member of each pair is kept.
inline AnalyticPoly fejer_riesz(const TrigPoly& p, double tol = 1e-8) {
    if (!(tol > 0.0)) throw std::invalid_argument("fejer_riesz: tol must be > 0");
    const auto cert = certify_positive(p);
    if (cert.status != Positivity::positive)
        throw std::invalid_argument(
            "fejer_riesz: input is not certified strictly positive (grid min " +
            std::to_string(cert.min_value) + ")");
    // trim numerically-zero top coefficients
    int m = p.degree();
    double scale = 0.0;
    for (int k = -m; k <= m; ++k) scale = std::max(scale, std::abs(p.coeff(k)));
    while (m > 0 && std::abs(p.coeff(m)) <= 1e-13 * scale) --m;
    if (m == 0) return {{Complex(std::sqrt(p.coeff(0).real()), 0.0)}};

    std::vector<Complex> lift(2 * m + 1);
    for (int k = -m; k <= m; ++k) lift[static_cast<size_t>(k + m)] = p.coeff(k);
    std::vector<Complex> roots = poly_roots(lift);

    // pair each root with its mirror 1/conj(alpha)
    std::vector<bool> used(roots.size(), false);
    std::vector<Complex> inside;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        const Complex alpha = roots[i];
        const Complex mirror = 1.0 / std::conj(alpha);
        size_t match = roots.size();
        double bestdist = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < roots.size(); ++j) {
            if (j == i || used[j]) continue;
            const double d = std::abs(roots[j] - mirror);
            if (d < bestdist) {
                bestdist = d;
                match = j;
            }
        }
        if (match == roots.size() || bestdist > 1e-6 * (1.0 + std::abs(mirror)))
            throw std::runtime_error(
                "fejer_riesz: failed to pair root with its circle mirror (nearest candidate "
                "off by " +
                std::to_string(bestdist) +
                "); the polynomial has near-circle double roots -- increase its positivity "
                "margin");
        used[i] = used[match] = true;
        inside.push_back(std::abs(alpha) <= 1.0 ? alpha : roots[match]);
    }

    std::vector<Complex> q{Complex(1.0, 0.0)};
    for (const auto& alpha : inside) q = poly_mul(q, {-alpha, Complex(1.0, 0.0)});
    // scale so the top autocorrelation coefficient matches c_m
    const TrigPoly probe = from_analytic({q});
    const Complex ratio = p.coeff(m) / probe.coeff(m);
    if (std::abs(ratio.imag()) > 1e-6 * std::abs(ratio) + 1e-14)
        throw std::runtime_error("fejer_riesz: inconsistent leading coefficient after pairing");
    const double s = std::sqrt(std::abs(ratio));
    for (auto& x : q) x *= s;

    // round-trip guard
    const TrigPoly back = from_analytic({q});
    const double c0 = p.coeff(0).real();
    for (int k = 0; k <= m; ++k)
        if (std::abs(back.coeff(k) - p.coeff(k)) > tol * std::max(c0, 1e-300))
            throw std::runtime_error("fejer_riesz: round-trip error above tolerance at k = " +
                                     std::to_string(k));
    return {q};
}

struct CoeffBoundRow {
    int k = 0;
    double abs_ck = 0.0;
    double bound = 0.0;   // c_0 * cos(pi/([(n-1)/k]+2))
    double margin = 0.0;  // bound - |c_k|
};

// Per-k margins against c_0 cos(pi/([(n-1)/k]+2)) for a positive polynomial
// of degree n-1.
inline std::vector<CoeffBoundRow> check_classical_bounds(const TrigPoly& p) {
    const int m = p.degree();
    const double c0 = p.coeff(0).real();
    std::vector<CoeffBoundRow> rows;
    for (int k = 1; k <= m; ++k) {
        const double b = c0 * es_omega(m + 1, k);
        const double a = std::abs(p.coeff(k));
        rows.push_back({k, a, b, b - a});
    }
    return rows;
}

struct TwoCoeffReport {
    int k = 0, l = 0;
    double gamma = 0.0;
    double sum_abs = 0.0;       // |c_k| + |c_l|
    double sharp_bound = 0.0;   // c_0 * w2(S_n^k + e^{i gamma} S_n^l)
    double closed_bound = 0.0;  // c_0 * two_coeff_closed(n,k,l)
    double sharp_margin = 0.0;
    double closed_margin = 0.0;  // closed vs sharp
};

// w2(S_n^k + e^{i gamma} S_n^l), computed on the n x n cell.
inline double two_power_radius(int n, int k, int l, double gamma, double tol = 1e-8) {
    const ComplexMatrix sn = jordan_cell(n).matrix.adjoint();  // forward cell S_n
    ComplexMatrix m = mat_pow(sn, k);
    ComplexMatrix t = mat_pow(sn, l);
    t *= std::polar(1.0, gamma);
    m += t;
    return numerical_radius(m, tol).value;
}

// Both two-coefficient bounds at the proof's phase gamma = arg c_k - arg c_l.
inline TwoCoeffReport check_two_coeff(const TrigPoly& p, int k, int l) {
    if (k == l) throw std::invalid_argument("check_two_coeff: k and l must be distinct");
    const int n = p.degree() + 1;
    if (k < 0 || l < 0 || k > n - 1 || l > n - 1)
        throw std::invalid_argument("check_two_coeff: k, l must lie in 0..n-1");
    const double c0 = p.coeff(0).real();
    const Complex ck = p.coeff(k), cl = p.coeff(l);
    const double gamma = std::arg(ck) - std::arg(cl);
    TwoCoeffReport r;
    r.k = k;
    r.l = l;
    r.gamma = gamma;
    r.sum_abs = std::abs(ck) + std::abs(cl);
    r.sharp_bound = c0 * two_power_radius(n, k, l, gamma);
    r.closed_bound = c0 * two_coeff_closed(n, k, l);
    r.sharp_margin = r.sharp_bound - r.sum_abs;
    r.closed_margin = r.closed_bound - r.sharp_bound;
    return r;
}

// The numerical-radius witness vector of (S_n*)^k read as an analytic
// polynomial; its |Q|^2 attains |c_k|/c_0 = w2((S_n*)^k) up to the radius
// tolerance.  The result is rotated so that c_k is real nonnegative.
inline TrigPoly extremal_witness(int n, int k) {
    if (n < 2) throw std::invalid_argument("extremal_witness: n must be >= 2");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("extremal_witness: k must lie in 1..n-1");
    const ComplexMatrix snk = mat_pow(jordan_cell(n).matrix, k);
    const RadiusValue r = numerical_radius(snk, 1e-10);
    std::vector<Complex> q = vec_normalized(r.witness->vector);
    // gauge fix: q_j -> e^{i j phi} q_j rotates c_k by e^{i k phi}
    Complex ck(0.0, 0.0);
    for (int j = 0; j + k < n; ++j) ck += q[j + k] * std::conj(q[j]);
    if (std::abs(ck) > 0.0) {
        const double phi = -std::arg(ck) / k;
        for (int j = 0; j < n; ++j) q[j] *= std::polar(1.0, phi * j);
    }
    return from_analytic({q});
}

// |Q|^2 for Q with i.i.d. complex standard normal coefficients drawn from
// mt19937_64(seed) via Box-Muller; reproducible per seed.
inline TrigPoly random_positive(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_positive: n must be >= 1");
    Rng rng(seed);
    return from_analytic({rng.cnormal_vector(n)});
}

}  // namespace opradii
