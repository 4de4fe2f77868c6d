#pragma once

// Dense complex matrix arithmetic and the Hermitian eigensolvers everything
// else is built on.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opradii {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Square dense complex matrix, row-major.  Values are immutable in spirit:
// every operation returns a fresh matrix, nothing is shared.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim) : dim_(dim), a_(check_dim(dim), Complex(0.0, 0.0)) {}

    ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(dim), a_(std::move(entries)) {
        check_dim(dim);
        if (a_.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim))
            throw std::invalid_argument("ComplexMatrix: entries has length " +
                                        std::to_string(a_.size()) + ", expected dim*dim = " +
                                        std::to_string(static_cast<size_t>(dim) * dim));
        for (size_t i = 0; i < a_.size(); ++i)
            if (!is_finite(a_[i]))
                throw std::invalid_argument("ComplexMatrix: non-finite entry at flat index " +
                                            std::to_string(i));
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    Complex operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    const std::vector<Complex>& entries() const { return a_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_dim(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_dim(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    ComplexMatrix& operator*=(Complex c) {
        for (auto& x : a_) x *= c;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex c, ComplexMatrix a) { return a *= c; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_same_dim(b);
        const int n = a.dim_;
        ComplexMatrix r(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0, 0.0)) continue;
                const Complex* brow = &b.a_[static_cast<size_t>(k) * n];
                Complex* rrow = &r.a_[static_cast<size_t>(i) * n];
                for (int j = 0; j < n; ++j) rrow[j] += aik * brow[j];
            }
        }
        return r;
    }

    std::vector<Complex> apply(const std::vector<Complex>& x) const {
        if (static_cast<int>(x.size()) != dim_)
            throw std::invalid_argument("ComplexMatrix::apply: size mismatch");
        std::vector<Complex> y(dim_, Complex(0.0, 0.0));
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& x : a_) s += std::norm(x);
        return std::sqrt(s);
    }

    void require_finite(const char* where) const {
        for (size_t i = 0; i < a_.size(); ++i)
            if (!is_finite(a_[i]))
                throw std::invalid_argument(std::string(where) + ": non-finite entry at (" +
                                            std::to_string(i / dim_) + "," +
                                            std::to_string(i % dim_) + ")");
    }

  private:
    static size_t check_dim(int dim) {
        if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
        return static_cast<size_t>(dim) * static_cast<size_t>(dim);
    }
    void require_same_dim(const ComplexMatrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }

    int dim_;
    std::vector<Complex> a_;
};

inline ComplexMatrix mat_pow(const ComplexMatrix& a, int p) {
    if (p < 0) throw std::invalid_argument("mat_pow: negative power");
    ComplexMatrix r = ComplexMatrix::identity(a.dim());
    for (int i = 0; i < p; ++i) r = r * a;
    return r;
}

inline std::vector<Complex> vec_normalized(std::vector<Complex> v) {
    double s = 0.0;
    for (auto& x : v) s += std::norm(x);
    s = std::sqrt(s);
    if (s > 0.0)
        for (auto& x : v) x /= s;
    return v;
}

struct HermitianEigenResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, orthonormal
};

namespace detail {

// Relative Hermiticity check; throws naming the worst entry pair.
inline void require_hermitian(const ComplexMatrix& a, double rel_tol) {
    const int n = a.dim();
    const double scale = std::max(a.max_abs(), 1e-300);
    double worst = 0.0;
    int wi = 0, wj = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double dev = std::abs(a(i, j) - std::conj(a(j, i)));
            if (dev > worst) {
                worst = dev;
                wi = i;
                wj = j;
            }
        }
    if (worst > rel_tol * scale)
        throw std::invalid_argument("herm_eig: input is not Hermitian; entries (" +
                                    std::to_string(wi) + "," + std::to_string(wj) + ") and (" +
                                    std::to_string(wj) + "," + std::to_string(wi) +
                                    ") differ by " + std::to_string(worst));
}

inline ComplexMatrix symmetrize(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

inline double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q); accumulates into v when given.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, int p, int q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double psi = (aqq - app) / (2.0 * r);
    // smaller root of t^2 - 2 psi t - 1 = 0
    double t;
    if (psi >= 0.0)
        t = -1.0 / (psi + std::sqrt(psi * psi + 1.0));
    else
        t = 1.0 / (-psi + std::sqrt(psi * psi + 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const int n = a.dim();
    // A <- J* A J with J acting on columns p,q:
    //   col_p' =  c col_p + s conj(phase) col_q
    //   col_q' = -s phase col_p + c col_q
    for (int i = 0; i < n; ++i) {
        const Complex aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip + s * std::conj(phase) * aiq;
        a(i, q) = -s * phase * aip + c * aiq;
    }
    for (int j = 0; j < n; ++j) {
        const Complex apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj + s * phase * aqj;
        a(q, j) = -s * std::conj(phase) * apj + c * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
    if (v) {
        for (int i = 0; i < n; ++i) {
            const Complex vip = (*v)(i, p), viq = (*v)(i, q);
            (*v)(i, p) = c * vip + s * std::conj(phase) * viq;
            (*v)(i, q) = -s * phase * vip + c * viq;
        }
    }
}

// Scratch for the values-only Hermitian eigenvalue path below; re-used across
// calls to keep the sweep loops in radii allocation-free.
struct HermScratch {
    std::vector<Complex> a, w, p;
    std::vector<double> d, e;
};

inline HermScratch& herm_scratch() {
    thread_local HermScratch s;
    return s;
}

// Householder reduction of a Hermitian matrix (row-major buffer, destroyed)
// to a real symmetric tridiagonal (d, e).
inline void tridiagonalize_inplace(std::vector<Complex>& a, int n, std::vector<double>& d,
                                   std::vector<double>& e, std::vector<Complex>& w,
                                   std::vector<Complex>& p) {
    auto at = [&](int i, int j) -> Complex& { return a[static_cast<size_t>(i) * n + j]; };
    d.assign(n, 0.0);
    e.assign(std::max(n - 1, 0), 0.0);
    w.assign(n, Complex(0.0, 0.0));
    p.assign(n, Complex(0.0, 0.0));
    for (int k = 0; k < n - 2; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(at(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;
        const Complex x0 = at(k + 1, k);
        const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex(1.0, 0.0);
        const Complex alpha = -phase * colnorm;
        for (int i = 0; i <= k; ++i) w[i] = Complex(0.0, 0.0);
        w[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) w[i] = at(i, k);
        double wn2 = 0.0;
        for (int i = k + 1; i < n; ++i) wn2 += std::norm(w[i]);
        if (wn2 == 0.0) continue;
        // A <- H A H, H = I - 2 w w*/|w|^2, via the rank-two update
        // A -= p w* + w p*.
        for (int i = 0; i < n; ++i) {
            Complex s(0.0, 0.0);
            for (int j = k + 1; j < n; ++j) s += at(i, j) * w[j];
            p[i] = 2.0 * s / wn2;
        }
        Complex kfac(0.0, 0.0);
        for (int i = k + 1; i < n; ++i) kfac += std::conj(w[i]) * p[i];
        kfac /= wn2;
        for (int i = k + 1; i < n; ++i) p[i] -= kfac * w[i];
        for (int i = 0; i < n; ++i) {
            const Complex pi = p[i], wi = w[i];
            for (int j = k + 1; j < n; ++j)
                at(i, j) -= pi * std::conj(w[j]) + wi * std::conj(p[j]);
        }
        for (int i = k + 1; i < n; ++i) at(i, k) = std::conj(at(k, i));
    }
    for (int i = 0; i < n; ++i) d[i] = at(i, i).real();
    for (int i = 0; i + 1 < n; ++i) e[i] = std::abs(at(i, i + 1));
}

// Count of eigenvalues of the tridiagonal (d,e) strictly below x (Sturm).
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        const double e2 = e[i - 1] * e[i - 1];
        double denom = q;
        if (std::abs(denom) < 1e-300) denom = (denom < 0.0 ? -1e-300 : 1e-300);
        q = d[i] - x - e2 / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

enum class EigWant { Min, Max, Both };

// Extreme eigenvalues of a Hermitian matrix given as a row-major buffer
// (destroyed).  Values only, no vectors.
inline std::pair<double, double> extremal_eigs_buffer(std::vector<Complex>& buf, int n,
                                                      EigWant want = EigWant::Both) {
    if (n == 1) {
        const double x = buf[0].real();
        return {x, x};
    }
    if (n == 2) {
        const double d0 = buf[0].real(), d1 = buf[3].real();
        const double off = std::abs(buf[1]);
        const double disc = std::sqrt(0.25 * (d0 - d1) * (d0 - d1) + off * off);
        const double mid = 0.5 * (d0 + d1);
        return {mid - disc, mid + disc};
    }
    HermScratch& s = herm_scratch();
    tridiagonalize_inplace(buf, n, s.d, s.e, s.w, s.p);
    double lo = s.d[0], hi = s.d[0];
    for (int i = 0; i < n; ++i) {
        double rad = 0.0;
        if (i > 0) rad += std::abs(s.e[i - 1]);
        if (i + 1 < n) rad += std::abs(s.e[i]);
        lo = std::min(lo, s.d[i] - rad);
        hi = std::max(hi, s.d[i] + rad);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
    auto bisect = [&](int target_below) {
        double a0 = lo, b0 = hi;
        for (int it = 0; it < 64 && (b0 - a0) > 1e-14 * scale; ++it) {
            const double mid = 0.5 * (a0 + b0);
            if (sturm_count(s.d, s.e, mid) >= target_below)
                b0 = mid;
            else
                a0 = mid;
        }
        return 0.5 * (a0 + b0);
    };
    double lmin = lo, lmax = hi;
    if (want != EigWant::Max) lmin = bisect(1);
    if (want != EigWant::Min) lmax = bisect(n);
    return {lmin, lmax};
}

inline std::pair<double, double> herm_extremal_eigenvalues(const ComplexMatrix& a) {
    std::vector<Complex>& buf = herm_scratch().a;
    buf = a.entries();
    return extremal_eigs_buffer(buf, a.dim());
}

inline double herm_lambda_max(const ComplexMatrix& a) {
    std::vector<Complex>& buf = herm_scratch().a;
    buf = a.entries();
    return extremal_eigs_buffer(buf, a.dim(), EigWant::Max).second;
}
inline double herm_lambda_min(const ComplexMatrix& a) {
    std::vector<Complex>& buf = herm_scratch().a;
    buf = a.entries();
    return extremal_eigs_buffer(buf, a.dim(), EigWant::Min).first;
}

}  // namespace detail

// Full spectral decomposition of a Hermitian matrix by cyclic Jacobi sweeps.
// Input must be Hermitian to 1e-12 relative; it is symmetrized afterwards to
// kill rounding drift.
inline HermitianEigenResult herm_eig(const ComplexMatrix& a0) {
    a0.require_finite("herm_eig");
    detail::require_hermitian(a0, 1e-12);
    ComplexMatrix a = detail::symmetrize(a0);
    const int n = a.dim();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double fro = std::max(a.frobenius(), 1e-300);
    for (int sweep = 0; sweep < 64; ++sweep) {
        if (detail::offdiag_frobenius(a) < 1e-14 * fro) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(a, &v, p, q);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[x] < diag[y]; });
    HermitianEigenResult res{std::vector<double>(n), ComplexMatrix(n)};
    for (int j = 0; j < n; ++j) {
        res.eigenvalues[j] = diag[order[j]];
        for (int i = 0; i < n; ++i) res.eigenvectors(i, j) = v(i, order[j]);
    }
    return res;
}

// Largest singular value, computed as sqrt(lambda_max(A* A)).
inline double operator_norm(const ComplexMatrix& a) {
    a.require_finite("operator_norm");
    if (a.max_abs() == 0.0) return 0.0;
    const ComplexMatrix ata = a.adjoint() * a;
    const double lmax = detail::herm_lambda_max(detail::symmetrize(ata));
    return std::sqrt(std::max(lmax, 0.0));
}

// Spectral radius by the Gelfand formula on dyadic powers, with a
// Richardson-style fit of the ln ||A^{2^k}||^{1/2^k} tail and early exit once
// successive estimates agree within tol.
inline double spectral_radius(const ComplexMatrix& a, double tol = 1e-8) {
    if (!(tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be > 0");
    a.require_finite("spectral_radius");
    ComplexMatrix b = a;
    double accum = 0.0;   // sum of log s_j / 2^j
    double prev_est = -1.0, prev_fit = -1.0;
    std::vector<double> lnest;
    for (int k = 0; k <= 48; ++k) {
        const double s = operator_norm(b);
        if (s == 0.0) return 0.0;
        accum += std::log(s) / std::ldexp(1.0, k);
        const double est = std::exp(accum);
        lnest.push_back(accum);
        double fit = est;
        if (k >= 2) {
            // model ln est_k = L + (alpha + beta k)/2^k, solved from the last
            // three iterates
            const double u = 1.0 / std::ldexp(1.0, k);
            const double d1 = lnest[k] - lnest[k - 1];
            const double d2 = lnest[k - 1] - lnest[k - 2];
            const double beta = (d2 / 2.0 - d1) / u;
            const double alpha = -d1 / u - beta * (k - 2);
            const double L = lnest[k] - u * (alpha + beta * k);
            if (std::isfinite(L)) {
                const double cand = std::exp(L);
                if (cand >= 0.0 && cand <= est * (1.0 + 1e-12)) fit = cand;
            }
        }
        if (k >= 3 && std::abs(est - prev_est) < tol && std::abs(fit - prev_fit) < tol)
            return fit;
        prev_est = est;
        prev_fit = fit;
        if (est < tol) return est;
        ComplexMatrix bn = b;
        bn *= Complex(1.0 / s, 0.0);
        b = bn * bn;
    }
    return prev_fit >= 0.0 ? prev_fit : prev_est;
}

// p(A) by Horner's scheme; coefficients low -> high.
inline ComplexMatrix mat_poly(const ComplexMatrix& a, const std::vector<Complex>& p) {
    if (p.empty()) throw std::invalid_argument("mat_poly: empty coefficient list");
    a.require_finite("mat_poly");
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) r(i, i) = p.back();
    for (int k = static_cast<int>(p.size()) - 2; k >= 0; --k) {
        r = r * a;
        for (int i = 0; i < n; ++i) r(i, i) += p[k];
    }
    return r;
}

// Two-variable hereditary polynomial: finitely many coefficients c_{alpha,beta}
// on monomials w^alpha z^beta, evaluated as P(T*,T) with adjoints on the left.
struct HereditaryPoly {
    // (alpha, beta) -> coefficient
    std::map<std::pair<int, int>, Complex> terms;

    HereditaryPoly() = default;
    HereditaryPoly(std::initializer_list<std::pair<std::pair<int, int>, Complex>> init) {
        for (const auto& t : init) add(t.first.first, t.first.second, t.second);
    }
    void add(int alpha, int beta, Complex c) {
        if (alpha < 0 || beta < 0)
            throw std::invalid_argument("HereditaryPoly: negative exponent");
        terms[{alpha, beta}] += c;
    }
    int deg_w() const {
        int d = 0;
        for (const auto& [k, c] : terms)
            if (c != Complex(0.0, 0.0)) d = std::max(d, k.first);
        return d;
    }
    int deg_z() const {
        int d = 0;
        for (const auto& [k, c] : terms)
            if (c != Complex(0.0, 0.0)) d = std::max(d, k.second);
        return d;
    }
    Complex eval(Complex w, Complex z) const {
        Complex s(0.0, 0.0);
        for (const auto& [k, c] : terms)
            s += c * std::pow(w, k.first) * std::pow(z, k.second);
        return s;
    }
};

// P(A*, A) = sum c_{alpha,beta} A*^alpha A^beta; powers computed once.
inline ComplexMatrix hereditary_eval(const ComplexMatrix& a, const HereditaryPoly& p) {
    a.require_finite("hereditary_eval");
    const int n = a.dim();
    int amax = 0, bmax = 0;
    for (const auto& [k, c] : p.terms) {
        (void)c;
        amax = std::max(amax, k.first);
        bmax = std::max(bmax, k.second);
    }
    std::vector<ComplexMatrix> pow_a, pow_star;
    pow_a.reserve(bmax + 1);
    pow_star.reserve(amax + 1);
    pow_a.push_back(ComplexMatrix::identity(n));
    const ComplexMatrix astar = a.adjoint();
    pow_star.push_back(ComplexMatrix::identity(n));
    for (int i = 1; i <= bmax; ++i) pow_a.push_back(pow_a.back() * a);
    for (int i = 1; i <= amax; ++i) pow_star.push_back(pow_star.back() * astar);
    ComplexMatrix r(n);
    for (const auto& [k, c] : p.terms) {
        if (c == Complex(0.0, 0.0)) continue;
        ComplexMatrix term = pow_star[k.first] * pow_a[k.second];
        term *= c;
        r += term;
    }
    return r;
}

}  // namespace opradii
