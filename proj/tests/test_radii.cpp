#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace opradii;

namespace {

double ando_nishio(double b, double rho) {
    return (std::sqrt(b * b / 4.0 + 1.0) + std::sqrt(b * b / 4.0 + 1.0 + rho * (rho - 2.0))) /
           rho;
}

ComplexMatrix upper_2x2(double b) { return ComplexMatrix(2, {1.0, b, 0.0, -1.0}); }

}  // namespace

TEST_CASE("numerical_radius anchors") {
    SECTION("Jordan cells: cos(pi/(n+1))") {
        for (int n = 2; n <= 12; ++n)
            CHECK(numerical_radius(jordan_cell(n).matrix).value ==
                  Catch::Approx(std::cos(M_PI / (n + 1))).margin(1e-8));
    }
    SECTION("[[1,1],[0,-1]] gives sqrt(5)/2") {
        CHECK(numerical_radius(upper_2x2(1.0)).value ==
              Catch::Approx(std::sqrt(5.0) / 2.0).margin(1e-8));
    }
    SECTION("zero matrix") {
        const auto r = numerical_radius(ComplexMatrix(3));
        CHECK(r.value == 0.0);
        REQUIRE(r.witness.has_value());
    }
}

TEST_CASE("numerical_radius witness reproduces the value as a Rayleigh quotient") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const ComplexMatrix a = rng.cnormal_matrix(2 + trial % 5);
        const auto r = numerical_radius(a, 1e-9);
        REQUIRE(r.witness.has_value());
        const auto& x = r.witness->vector;
        const auto ax = a.apply(x);
        Complex q(0.0, 0.0);
        double nx = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            q += std::conj(x[i]) * ax[i];
            nx += std::norm(x[i]);
        }
        CHECK(std::abs(q) / nx == Catch::Approx(r.value).margin(20 * r.tolerance));
        CHECK(r.witness->theta >= 0.0);
        CHECK(r.witness->theta < 2.0 * M_PI);
    }
}

TEST_CASE("c_rho_membership") {
    SECTION("contractions are C_1 members") {
        Rng rng(31);
        ComplexMatrix a = rng.cnormal_matrix(4);
        a *= Complex(0.9 / operator_norm(a), 0.0);
        const auto c = c_rho_membership(a, 1.0);
        CHECK(c.member);
    }
    SECTION("scaled Jordan cell sits on the C_2 boundary") {
        for (int n : {3, 5}) {
            ComplexMatrix a = jordan_cell(n).matrix;
            a *= Complex(1.0 / std::cos(M_PI / (n + 1)), 0.0);
            const auto c = c_rho_membership(a, 2.0, 1e-7);
            CHECK(c.member);
            CHECK(std::abs(c.worst_eigenvalue) <= 1e-6);
        }
    }
    SECTION("2I is not a C_1 member") {
        ComplexMatrix two = ComplexMatrix::identity(2);
        two *= Complex(2.0, 0.0);
        const auto c = c_rho_membership(two, 1.0);
        CHECK_FALSE(c.member);
        CHECK(c.worst_eigenvalue < -0.5);
    }
    SECTION("the certificate is recomputable through the hereditary calculus") {
        Rng rng(37);
        for (double rho : {0.7, 1.4, 3.0}) {
            const ComplexMatrix a = rng.cnormal_matrix(3);
            const auto c = c_rho_membership(a, rho, 1e-8);
            const Complex lam = c.worst_lambda;
            HereditaryPoly p;
            p.add(0, 0, 1.0);
            p.add(1, 0, -(1.0 - 1.0 / rho) * std::conj(lam));
            p.add(0, 1, -(1.0 - 1.0 / rho) * lam);
            p.add(1, 1, (1.0 - 2.0 / rho) * std::norm(lam));
            const auto eig = herm_eig(hereditary_eval(a, p));
            CAPTURE(rho);
            CHECK(std::abs(lam) <= 1.0 + 1e-15);
            CHECK(eig.eigenvalues.front() ==
                  Catch::Approx(c.worst_eigenvalue).margin(1e-10));
        }
    }
}

TEST_CASE("omega_rho matches the Ando-Nishio closed form") {
    for (double b : {0.5, 1.0, 2.0}) {
        const ComplexMatrix t = upper_2x2(b);
        for (double rho : {1.0, 1.5, 2.0, 3.0}) {
            CAPTURE(b, rho);
            CHECK(omega_rho(t, rho, 1e-6).value ==
                  Catch::Approx(ando_nishio(b, rho)).margin(1e-4));
        }
    }
}

TEST_CASE("omega_rho special parameter values") {
    Rng rng(41);
    SECTION("rho = 1 is the operator norm") {
        const ComplexMatrix a = rng.cnormal_matrix(4);
        CHECK(omega_rho(a, 1.0).value == Catch::Approx(operator_norm(a)).margin(1e-12));
    }
    SECTION("large rho approaches the spectral radius") {
        CHECK(omega_rho(upper_2x2(1.0), 1e4, 1e-5).value == Catch::Approx(1.0).margin(1e-2));
    }
    SECTION("invalid arguments") {
        CHECK_THROWS_AS(omega_rho(upper_2x2(1.0), 0.0), std::invalid_argument);
        CHECK_THROWS_AS(omega_rho(upper_2x2(1.0), 2.0, -1.0), std::invalid_argument);
    }
}

TEST_CASE("diam_numerical_range") {
    SECTION("diag(1,-1) spans a segment of length 2") {
        ComplexMatrix d(2);
        d(0, 0) = 1.0;
        d(1, 1) = -1.0;
        CHECK(diam_numerical_range(d) == Catch::Approx(2.0).margin(1e-8));
    }
    SECTION("S2* is a disc of radius 1/2") {
        CHECK(diam_numerical_range(jordan_cell(2).matrix) == Catch::Approx(1.0).margin(1e-8));
    }
    SECTION("Hermitian gives the eigenvalue spread") {
        Rng rng(43);
        const ComplexMatrix a = rng.hermitian_matrix(5);
        const auto eig = herm_eig(a);
        CHECK(diam_numerical_range(a) ==
              Catch::Approx(eig.eigenvalues.back() - eig.eigenvalues.front()).margin(1e-8));
    }
}

TEST_CASE("radius invariance properties") {
    Rng rng(47);
    SECTION("unitary invariance") {
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 2 + trial % 4;
            const ComplexMatrix a = rng.cnormal_matrix(n);
            const ComplexMatrix u = rng.unitary(n);
            const ComplexMatrix b = u.adjoint() * a * u;
            CHECK(numerical_radius(b).value ==
                  Catch::Approx(numerical_radius(a).value).margin(1e-7));
            CHECK(operator_norm(b) == Catch::Approx(operator_norm(a)).margin(1e-10));
            CHECK(diam_numerical_range(b) ==
                  Catch::Approx(diam_numerical_range(a)).margin(1e-7));
            CHECK(omega_rho(b, 1.5, 1e-5).value ==
                  Catch::Approx(omega_rho(a, 1.5, 1e-5).value).margin(1e-4));
        }
    }
    SECTION("homogeneity of omega_rho") {
        for (double rho : {1.5, 3.0}) {
            const ComplexMatrix a = rng.cnormal_matrix(3);
            const Complex c = rng.cnormal();
            ComplexMatrix ca = a;
            ca *= c;
            const double lhs = omega_rho(ca, rho, 1e-5).value;
            const double rhs = std::abs(c) * omega_rho(a, rho, 1e-5).value;
            CHECK(lhs == Catch::Approx(rhs).margin(1e-4 * (1.0 + rhs)));
        }
    }
}

TEST_CASE("omega_rho is nonincreasing in rho and dominates the spectral radius") {
    Rng rng(53);
    for (int trial = 0; trial < 4; ++trial) {
        const ComplexMatrix a = rng.cnormal_matrix(2 + trial % 3);
        const double sr = spectral_radius(a, 1e-8);
        double prev = std::numeric_limits<double>::infinity();
        for (double rho : {0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) {
            const double w = omega_rho(a, rho, 1e-5).value;
            CAPTURE(trial, rho);
            CHECK(w <= prev * (1.0 + 2e-4) + 1e-9);
            CHECK(w >= sr - 1e-4 * (1.0 + sr));
            prev = w;
        }
    }
}

TEST_CASE("power inequality omega_rho(A^n) <= omega_rho(A)^n") {
    Rng rng(59);
    for (double rho : {1.0, 1.5, 2.0}) {
        const ComplexMatrix a = rng.cnormal_matrix(3);
        const double w = omega_rho(a, rho, 1e-6).value;
        for (int n = 2; n <= 4; ++n) {
            const double wn = omega_rho(mat_pow(a, n), rho, 1e-6).value;
            CAPTURE(rho, n);
            CHECK(wn <= std::pow(w, n) * (1.0 + 1e-3) + 1e-8);
        }
    }
}

TEST_CASE("Ando-Nishio reciprocity law") {
    Rng rng(61);
    for (double rho : {0.5, 0.75}) {
        for (int trial = 0; trial < 6; ++trial) {
            const ComplexMatrix a = rng.cnormal_matrix(2 + trial % 3);
            const double lhs = omega_rho(a, rho, 1e-5).value;
            const double rhs = (2.0 / rho - 1.0) * omega_rho(a, 2.0 - rho, 1e-5).value;
            CAPTURE(rho, trial);
            CHECK(lhs == Catch::Approx(rhs).epsilon(1e-3));
        }
    }
}

TEST_CASE("compressions cannot increase omega_rho for rho <= 2") {
    Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 3;
        const int k = 1 + trial % (n - 1);
        const ComplexMatrix a = rng.cnormal_matrix(n);
        const ComplexMatrix c = compress(a, rng.isometry_columns(n, k));
        for (double rho : {1.0, 1.5, 2.0}) {
            CAPTURE(trial, rho);
            CHECK(omega_rho(c, rho, 1e-5).value <=
                  omega_rho(a, rho, 1e-5).value * (1.0 + 2e-4) + 1e-6);
        }
    }
}

TEST_CASE("the rho = 3 compression counterexample") {
    const ComplexMatrix t = upper_2x2(1.0);
    const auto r2 = numerical_radius(t, 1e-10);
    REQUIRE(r2.witness.has_value());
    // rank-one compression onto the numerical-radius witness
    const ComplexMatrix c = compress(t, {vec_normalized(r2.witness->vector)});
    const double w3_compressed = omega_rho(c, 3.0, 1e-6).value;
    const double w3_full = omega_rho(t, 3.0, 1e-6).value;
    CHECK(w3_compressed == Catch::Approx(std::sqrt(5.0) / 2.0).margin(1e-6));
    CHECK(w3_full == Catch::Approx(ando_nishio(1.0, 3.0)).margin(1e-4));
    CHECK(w3_compressed > w3_full + 0.05);
}
