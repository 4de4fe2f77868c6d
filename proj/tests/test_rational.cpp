#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace opradii;

namespace {

// z / ((z - beta)(1 - beta z)) = 1/|e^{it} - beta|^2 on the torus (beta real)
RationalTorusFunction poisson_like(double beta) {
    return RationalTorusFunction({Complex(0.0, 0.0), Complex(1.0, 0.0)},
                                 poly_mul({-beta, Complex(1.0, 0.0)},
                                          {Complex(1.0, 0.0), -beta}));
}

}  // namespace

TEST_CASE("RationalTorusFunction validation") {
    SECTION("degree rule") {
        CHECK_THROWS_WITH(RationalTorusFunction({Complex(1.0, 0.0), Complex(1.0, 0.0)},
                                                {Complex(1.0, 0.0), Complex(0.5, 0.0)}),
                          Catch::Matchers::ContainsSubstring("no principal part"));
    }
    SECTION("pole too close to the torus") {
        const double beta = 1.0 - 1e-7;
        CHECK_THROWS_WITH(poisson_like(beta), Catch::Matchers::ContainsSubstring("pole"));
    }
    SECTION("sign-changing boundary values rejected") {
        // z/((z-1/2)(1-z/2)) * (-1) is negative on the torus
        CHECK_THROWS_WITH(
            RationalTorusFunction({Complex(0.0, 0.0), Complex(-1.0, 0.0)},
                                  poly_mul({Complex(-0.5, 0.0), Complex(1.0, 0.0)},
                                           {Complex(1.0, 0.0), Complex(-0.5, 0.0)})),
            Catch::Matchers::ContainsSubstring("positive"));
    }
    SECTION("non-real boundary values rejected") {
        CHECK_THROWS_WITH(
            RationalTorusFunction({Complex(1.0, 0.0)},
                                  {Complex(1.0, 0.0), Complex(-0.5, 0.0)}),
            Catch::Matchers::ContainsSubstring("real"));
    }
}

TEST_CASE("fourier_coeffs") {
    SECTION("geometric series of the single-pole kernel") {
        const auto f = poisson_like(0.5);
        const auto c = fourier_coeffs(f, 4, 1e-12);
        const double c0 = 1.0 / (1.0 - 0.25);
        for (int k = -4; k <= 4; ++k) {
            CAPTURE(k);
            CHECK(std::abs(c[static_cast<size_t>(k + 4)] -
                           Complex(c0 * std::pow(0.5, std::abs(k)), 0.0)) <= 1e-11);
        }
        CHECK(c[4].real() == Catch::Approx(4.0 / 3.0).margin(1e-11));
        CHECK(c[5].real() == Catch::Approx(2.0 / 3.0).margin(1e-11));
    }
    SECTION("Hermitian symmetry") {
        const auto f = cauchy_square({Complex(0.3, 0.2), Complex(-0.1, 0.45)},
                                     {Complex(1.0, -0.5), Complex(0.7, 0.1)});
        const auto c = fourier_coeffs(f, 5, 1e-10);
        for (int k = 1; k <= 5; ++k)
            CHECK(std::abs(c[static_cast<size_t>(5 - k)] -
                           std::conj(c[static_cast<size_t>(5 + k)])) == 0.0);
        CHECK(c[5].imag() == 0.0);
    }
    SECTION("k_max = 0 returns the positive mean") {
        const auto c = fourier_coeffs(poisson_like(0.3), 0, 1e-10);
        REQUIRE(c.size() == 1);
        CHECK(c[0].real() > 0.0);
    }
    SECTION("tightening the tolerance does not move the coefficients") {
        const auto f = cauchy_square({Complex(0.5, -0.3)}, {Complex(1.0, 1.0)});
        const auto a = fourier_coeffs(f, 3, 1e-6);
        const auto b = fourier_coeffs(f, 3, 1e-12);
        for (size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-6);
    }
    SECTION("unreachable tolerance reports the quadrature cap") {
        const auto f = poisson_like(1.0 - 5e-6);
        CHECK_THROWS_WITH(fourier_coeffs(f, 1, 1e-14),
                          Catch::Matchers::ContainsSubstring("2^20"));
    }
}

TEST_CASE("check_rational_bound") {
    SECTION("single-pole equality family") {
        for (double beta : {0.3, 0.5, 0.7}) {
            const auto rep = check_rational_bound(poisson_like(beta), 5);
            REQUIRE(rep.model_dim == 1);
            CHECK(rep.c0 == Catch::Approx(1.0 / (1.0 - beta * beta)).margin(1e-10));
            for (const auto& r : rep.rows) {
                CAPTURE(beta, r.k);
                // |c_k| = c0 beta^k exactly: the model is the 1x1 matrix [beta]
                CHECK(std::abs(r.abs_ck - rep.c0 * std::pow(beta, r.k)) <= 1e-10);
                CHECK(std::abs(r.margin) <= 1e-10);
            }
        }
    }
    SECTION("two-pole random corpus") {
        Rng rng(91);
        for (int trial = 0; trial < 60; ++trial) {
            const std::vector<Complex> poles{Complex(0.3, 0.0), Complex(0.0, 0.5)};
            const auto f = cauchy_square(poles, {rng.cnormal(), rng.cnormal()});
            const auto rep = check_rational_bound(f, 5);
            REQUIRE(rep.model_dim == 2);
            for (const auto& r : rep.rows) {
                CAPTURE(trial, r.k);
                CHECK(r.margin >= -1e-8);
            }
        }
    }
    SECTION("random pole placement") {
        Rng rng(97);
        for (int trial = 0; trial < 40; ++trial) {
            const int q = 1 + trial % 3;
            std::vector<Complex> poles, amps;
            for (int i = 0; i < q; ++i) {
                poles.push_back(0.8 * std::sqrt(rng.uniform()) *
                                std::polar(1.0, 2.0 * M_PI * rng.uniform()));
                amps.push_back(rng.cnormal());
            }
            const auto f = cauchy_square(poles, amps);
            const auto rep = check_rational_bound(f, 4);
            for (const auto& r : rep.rows) {
                CAPTURE(trial, r.k);
                CHECK(r.margin >= -1e-8);
            }
        }
    }
}

TEST_CASE("cauchy_square input validation") {
    CHECK_THROWS_AS(cauchy_square({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(cauchy_square({Complex(1.2, 0.0)}, {Complex(1.0, 0.0)}),
                    std::invalid_argument);
}
