#pragma once

// Admissible and strongly admissible operator radii: operator norm, the
// numerical radius, the omega_rho family, and the numerical-range diameter.

#include <limits>
#include <optional>

#include "opradii/linalg.hpp"

namespace opradii {

struct RadiusWitness {
    double theta = 0.0;            // maximizing angle in [0, 2*pi)
    std::vector<Complex> vector;   // unit vector achieving the value
};

struct RadiusValue {
    double value = 0.0;
    std::optional<RadiusWitness> witness;
    double tolerance = 0.0;
};

struct MembershipCertificate {
    bool member = false;
    Complex worst_lambda{0.0, 0.0};  // in the closed unit disc
    double worst_eigenvalue = 0.0;   // lambda_min of P_lambda(A*, A) there
    double tolerance = 0.0;
};

namespace detail {

inline double norm_angle(double theta, double period) {
    double t = std::fmod(theta, period);
    if (t < 0.0) t += period;
    return t;
}

// Extreme eigenvalues of Re(e^{i theta} A), evaluated without allocations.
struct RotatedSpectrum {
    const ComplexMatrix& a;
    ComplexMatrix astar;
    int n;

    explicit RotatedSpectrum(const ComplexMatrix& a_) : a(a_), astar(a_.adjoint()), n(a_.dim()) {}

    std::pair<double, double> extremes(double theta) const {
        const Complex u = std::polar(1.0, theta);
        const Complex uc = std::conj(u);
        std::vector<Complex>& buf = herm_scratch().a;
        buf.resize(static_cast<size_t>(n) * n);
        const std::vector<Complex>& ae = a.entries();
        const std::vector<Complex>& se = astar.entries();
        for (size_t i = 0; i < buf.size(); ++i) buf[i] = 0.5 * (u * ae[i] + uc * se[i]);
        return extremal_eigs_buffer(buf, n);
    }
    double lambda_max(double theta) const {
        const Complex u = std::polar(1.0, theta);
        const Complex uc = std::conj(u);
        std::vector<Complex>& buf = herm_scratch().a;
        buf.resize(static_cast<size_t>(n) * n);
        const std::vector<Complex>& ae = a.entries();
        const std::vector<Complex>& se = astar.entries();
        for (size_t i = 0; i < buf.size(); ++i) buf[i] = 0.5 * (u * ae[i] + uc * se[i]);
        return extremal_eigs_buffer(buf, n, EigWant::Max).second;
    }
};

struct SweepResult {
    double value = 0.0;
    double theta = 0.0;
};

// Maximize f over [0, period): 256-point grid, then golden-section
// refinement around each grid-local maximum that can still beat the grid
// champion given the Lipschitz constant.  Brackets shrink to tol/lipschitz.
template <typename F>
SweepResult sweep_maximize(F&& f, double period, double lipschitz, double tol) {
    constexpr int kGrid = 256;
    const double h = period / kGrid;
    std::vector<double> val(kGrid);
    for (int i = 0; i < kGrid; ++i) val[i] = f(h * i);
    double grid_best = val[0];
    for (int i = 1; i < kGrid; ++i) grid_best = std::max(grid_best, val[i]);

    const double lcap = std::max(lipschitz, 1e-300);
    const double slack = lcap * h;
    const double target_width = tol / lcap;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);

    std::vector<int> cand;
    for (int i = 0; i < kGrid; ++i) {
        const double prev = val[(i + kGrid - 1) % kGrid];
        const double next = val[(i + 1) % kGrid];
        if (val[i] >= prev && val[i] >= next && val[i] >= grid_best - slack) cand.push_back(i);
    }
    std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) { return val[x] > val[y]; });
    if (cand.size() > 12) cand.resize(12);  // plateaus make every point a local max
    if (cand.size() > 1 &&
        val[cand.front()] - val[cand.back()] <= 1e-14 * (1.0 + std::abs(grid_best)))
        cand.resize(1);  // flat in theta: one refinement tells all

    std::vector<SweepResult> refined;
    for (int i : cand) {
        const double theta0 = h * i;
        double a = theta0 - h, b = theta0 + h;
        double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
        double f1 = f(x1), f2 = f(x2);
        SweepResult local{val[i], theta0};
        auto note = [&](double th, double v) {
            if (v > local.value) local = {v, th};
        };
        note(x1, f1);
        note(x2, f2);
        for (int it = 0; it < 120 && (b - a) > target_width; ++it) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + golden * (b - a);
                f2 = f(x2);
                note(x2, f2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - golden * (b - a);
                f1 = f(x1);
                note(x1, f1);
            }
        }
        local.theta = norm_angle(local.theta, period);
        refined.push_back(local);
    }
    if (refined.empty()) return {grid_best, 0.0};
    double best = refined[0].value;
    for (const auto& r : refined) best = std::max(best, r.value);
    // smallest angle among the maximizers found
    double theta = std::numeric_limits<double>::infinity();
    const double tie = 1e-12 * (1.0 + std::abs(best));
    for (const auto& r : refined)
        if (r.value >= best - tie) theta = std::min(theta, r.theta);
    return {best, theta};
}

}  // namespace detail

// omega_2: max over theta of lambda_max(Re(e^{i theta} A)) on a 256-point
// grid with golden-section refinement; witness is the top eigenvector at the
// smallest maximizing angle.
inline RadiusValue numerical_radius(const ComplexMatrix& a, double tol = 1e-8) {
    if (!(tol > 0.0)) throw std::invalid_argument("numerical_radius: tol must be > 0");
    a.require_finite("numerical_radius");
    const int n = a.dim();
    const double scale = operator_norm(a);
    if (scale == 0.0) {
        std::vector<Complex> e0(n, Complex(0.0, 0.0));
        e0[0] = 1.0;
        return {0.0, RadiusWitness{0.0, e0}, tol};
    }
    detail::RotatedSpectrum rot(a);
    const auto sr = detail::sweep_maximize([&](double t) { return rot.lambda_max(t); },
                                           2.0 * M_PI, scale, tol);
    const Complex u = std::polar(1.0, sr.theta);
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h(i, j) = 0.5 * (u * a(i, j) + std::conj(u) * std::conj(a(j, i)));
    const auto eig = herm_eig(h);
    std::vector<Complex> top(n);
    for (int i = 0; i < n; ++i) top[i] = eig.eigenvectors(i, n - 1);
    return {std::max(sr.value, eig.eigenvalues.back()), RadiusWitness{sr.theta, top}, tol};
}

// max over theta in [0, pi) of the spread of Re(e^{i theta} A)
inline double diam_numerical_range(const ComplexMatrix& a, double tol = 1e-8) {
    if (!(tol > 0.0)) throw std::invalid_argument("diam_numerical_range: tol must be > 0");
    a.require_finite("diam_numerical_range");
    const double scale = operator_norm(a);
    if (scale == 0.0) return 0.0;
    detail::RotatedSpectrum rot(a);
    auto f = [&](double theta) {
        const auto [lmin, lmax] = rot.extremes(theta);
        return lmax - lmin;
    };
    // the spread is pi-periodic and 2||A||-Lipschitz
    return detail::sweep_maximize(f, M_PI, 2.0 * scale, tol).value;
}

namespace detail {

// lambda_min of P_lambda(B*, B) for B = A/r over the closed disc, with
// P_lambda = I - (1-1/rho)(conj(lambda) B* + lambda B)
//              + (1-2/rho)|lambda|^2 B* B.
struct CRhoEvaluator {
    const ComplexMatrix& a;
    ComplexMatrix astar;
    ComplexMatrix ata;
    double rho;
    int n;

    CRhoEvaluator(const ComplexMatrix& a_, double rho_)
        : a(a_), astar(a_.adjoint()), ata(a_.adjoint() * a_), rho(rho_), n(a_.dim()) {}

    double lambda_min(Complex lam, double r) const {
        const double c1 = (1.0 - 1.0 / rho) / r;
        const double c2 = (1.0 - 2.0 / rho) * std::norm(lam) / (r * r);
        const Complex lc = std::conj(lam);
        std::vector<Complex>& buf = herm_scratch().a;
        buf.resize(static_cast<size_t>(n) * n);
        const std::vector<Complex>& ae = a.entries();
        const std::vector<Complex>& se = astar.entries();
        const std::vector<Complex>& te = ata.entries();
        for (size_t i = 0; i < buf.size(); ++i)
            buf[i] = -c1 * (lc * se[i] + lam * ae[i]) + c2 * te[i];
        for (int i = 0; i < n; ++i) buf[static_cast<size_t>(i) * n + i] += 1.0;
        return extremal_eigs_buffer(buf, n, EigWant::Min).first;
    }

    // Lipschitz constant of lambda -> lambda_min(P_lambda) on the disc
    double lipschitz(double r, double norm_a) const {
        const double nb = norm_a / r;
        return 2.0 * std::abs(1.0 - 1.0 / rho) * nb +
               2.0 * std::abs(1.0 - 2.0 / rho) * nb * nb;
    }
};

struct DiscMin {
    double value = 0.0;
    Complex lambda{0.0, 0.0};
};

// Minimize lambda_min(P_lambda) over the closed unit disc: polar grid with
// radii k/32 and 128 phases, then local polar refinement of the deepest
// cells; the Lipschitz constant decides how deep refinement must go.
// For rho <= 2 the form is concave in |lambda| pointwise, so the disc
// minimum sits on the boundary circle (or equals 1 at the center); the
// interior radii are skipped in that case.
inline DiscMin disc_minimize(const CRhoEvaluator& ev, double r, double lipschitz, double tol) {
    constexpr int kRad = 32;
    constexpr int kPhase = 128;
    const bool boundary_only = ev.rho <= 2.0;
    const double dr0 = boundary_only ? 0.0 : 1.0 / kRad;
    const double dphi0 = 2.0 * M_PI / kPhase;

    DiscMin best{ev.lambda_min(Complex(0.0, 0.0), r), Complex(0.0, 0.0)};
    struct Cell {
        double value, rad, phi;
    };
    std::vector<Cell> cells;
    cells.reserve(boundary_only ? kPhase : kRad * kPhase);
    for (int k = boundary_only ? kRad : 1; k <= kRad; ++k) {
        const double rad = static_cast<double>(k) / kRad;
        for (int j = 0; j < kPhase; ++j) {
            const double phi = dphi0 * j;
            const double v = ev.lambda_min(std::polar(rad, phi), r);
            cells.push_back({v, rad, phi});
            if (v < best.value) best = {v, std::polar(rad, phi)};
        }
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const Cell& x, const Cell& y) { return x.value < y.value; });
    const size_t keep = std::min<size_t>(boundary_only ? 4 : 6, cells.size());
    const double lcap = std::max(lipschitz, 1e-12);
    for (size_t c = 0; c < keep; ++c) {
        if (cells[c].value > best.value + lcap * (dr0 + dphi0)) continue;
        double rad = cells[c].rad, phi = cells[c].phi;
        double vbest = cells[c].value;
        double dr = dr0, dphi = dphi0;
        for (int level = 0; level < 60 && lcap * (dr + dphi) > tol; ++level) {
            dr *= 0.5;
            dphi *= 0.5;
            double nrad = rad, nphi = phi;
            for (int ir = boundary_only ? 0 : -1; ir <= (boundary_only ? 0 : 1); ++ir) {
                for (int ip = -1; ip <= 1; ++ip) {
                    if (ir == 0 && ip == 0) continue;
                    const double rr = std::clamp(rad + ir * dr, 0.0, 1.0);
                    const double pp = phi + ip * dphi;
                    const double v = ev.lambda_min(std::polar(rr, pp), r);
                    if (v < vbest) {
                        vbest = v;
                        nrad = rr;
                        nphi = pp;
                    }
                }
            }
            rad = nrad;
            phi = nphi;
        }
        if (vbest < best.value) best = {vbest, std::polar(rad, phi)};
    }
    return best;
}

}  // namespace detail

// Scalar C_rho criterion over the closed disc: member iff the worst
// lambda_min of P_lambda(A*, A) stays above -tol.
inline MembershipCertificate c_rho_membership(const ComplexMatrix& a, double rho,
                                              double tol = 1e-7) {
    if (!(rho > 0.0)) throw std::invalid_argument("c_rho_membership: rho must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("c_rho_membership: tol must be > 0");
    a.require_finite("c_rho_membership");
    const double norm_a = operator_norm(a);
    if (norm_a == 0.0) return {true, Complex(0.0, 0.0), 1.0, tol};
    detail::CRhoEvaluator ev(a, rho);
    const auto m = detail::disc_minimize(ev, 1.0, ev.lipschitz(1.0, norm_a), tol);
    return {m.value >= -tol, m.lambda, m.value, tol};
}

// omega_rho by bisection on r with the C_rho disc certificate; exact fast
// paths at rho = 1 (operator norm) and rho = 2 (numerical radius).
inline RadiusValue omega_rho(const ComplexMatrix& a, double rho, double tol = 1e-4) {
    if (!(rho > 0.0)) throw std::invalid_argument("omega_rho: rho must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("omega_rho: tol must be > 0");
    a.require_finite("omega_rho");
    if (rho == 1.0) return {operator_norm(a), std::nullopt, tol};
    if (rho == 2.0) return numerical_radius(a, std::min(tol, 1e-8));

    const double norm_a = operator_norm(a);
    if (norm_a == 0.0) return {0.0, std::nullopt, tol};

    detail::CRhoEvaluator ev(a, rho);
    const double eig_tol = std::clamp(tol * 1e-3, 1e-12, 1e-7);
    auto member = [&](double r) {
        return detail::disc_minimize(ev, r, ev.lipschitz(r, norm_a), eig_tol).value >= -eig_tol;
    };

    double lo = spectral_radius(a, std::min(tol, 1e-6) * std::max(norm_a, 1.0));
    double hi = std::max(norm_a, rho * norm_a);
    // validated bracket: membership must hold at the upper end, else double
    for (int guard = 0; guard < 60 && !member(hi); ++guard) {
        lo = std::max(lo, hi);
        hi *= 2.0;
    }
    if (!member(hi))
        throw std::runtime_error("omega_rho: failed to bracket (no member upper bound)");
    if (lo <= 0.0) lo = hi * 1e-12;
    if (lo < hi && member(lo)) hi = lo;  // e.g. normal matrices: omega = spectral radius
    while (hi - lo > tol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (member(mid))
            hi = mid;
        else
            lo = mid;
    }
    return {0.5 * (lo + hi), std::nullopt, tol};
}

}  // namespace opradii
