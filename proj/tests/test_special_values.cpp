#include <doctest.h>

#include <cmath>

#include "orbitasym/special_values.hpp"

using namespace orbitasym;

namespace {

bool close_rel(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), 1e-300});
}

bool close_abs(double x, double y, double tol) { return std::abs(x - y) <= tol; }

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace

TEST_SUITE("special_values") {

TEST_CASE("bernoulli numbers") {
    const auto& sv = special_values();
    CHECK(sv.bernoulli(0) == 1);
    CHECK(sv.bernoulli(1) == Rational(-1, 2));
    CHECK(sv.bernoulli(2) == Rational(1, 6));
    CHECK(sv.bernoulli(12) == Rational(-691, 2730));
    for (int m = 3; m <= 21; m += 2) CHECK(sv.bernoulli(m) == 0);
    // defining recurrence sum_{j<=m} C(m+1,j) B_j = 0
    for (int m = 1; m <= 20; ++m) {
        Rational acc = 0;
        BigInt c = 1;
        for (int j = 0; j <= m; ++j) {
            acc += Rational(c) * sv.bernoulli(j);
            c = c * (m + 1 - j) / (j + 1);
        }
        CHECK(acc == 0);
    }
}

TEST_CASE("zeta special values") {
    const auto& sv = special_values();
    CHECK(sv.zeta(0) == -0.5);
    CHECK(close_rel(sv.zeta(2), kPi * kPi / 6, 1e-14));
    CHECK(sv.zeta(-2) == 0.0);
    CHECK(sv.zeta(-4) == 0.0);
    CHECK(close_rel(sv.zeta(-1), -1.0 / 12, 1e-15));
    CHECK(close_rel(sv.zeta(-1) * sv.zeta(0), 1.0 / 24, 1e-15));
    CHECK(close_rel(sv.zeta(1.5), 2.6123753486854883, 1e-13));
    CHECK(close_rel(sv.zeta(-2.5), 0.0085169287778503305, 1e-12));
    CHECK(close_rel(sv.zeta(30), 1.0000000009313274, 1e-14));
    CHECK_THROWS_AS(sv.zeta(1.0), std::invalid_argument);
}

TEST_CASE("zeta at the far negative end of the contract") {
    const auto& sv = special_values();
    // frozen 256-bit references
    CHECK(close_rel(sv.zeta(-29.5), -30854533.472396763609, 1e-13));
    CHECK(close_rel(sv.zeta(-15.5), 0.49627121991205760787, 1e-13));
    CHECK(close_rel(sv.zeta(-10.5), 0.011146122473942814136, 1e-13));
    CHECK(close_rel(sv.zeta(-5.5), -0.0026714580198992245990, 1e-13));
    // two-path check where the direct Euler-Maclaurin sum is still sound
    const wide direct = sv.hurwitz_zeta_derivs(-5.5Q, 1, 0)[0];
    CHECK(close_rel(sv.zeta(-5.5), to_double(direct), 1e-12));
}

TEST_CASE("zeta(2k) closed form vs Euler-Maclaurin") {
    const auto& sv = special_values();
    for (int k = 1; k <= 8; ++k) {
        const wide em = sv.hurwitz_zeta_derivs(static_cast<wide>(2 * k), 1, 0)[0];
        const wide b2k = to_wide(sv.bernoulli(2 * k));
        wide pw = 1;
        for (int i = 0; i < 2 * k; ++i) pw *= 2 * wide_pi();
        wide fact = 1;
        for (int i = 2; i <= 2 * k; ++i) fact *= i;
        const wide closed = (k % 2 == 0 ? -1 : 1) * b2k * pw / (2 * fact);
        CHECK(close_rel(to_double(em), to_double(closed), 1e-12));
    }
}

TEST_CASE("zeta derivative") {
    const auto& sv = special_values();
    CHECK(close_rel(sv.zeta_deriv(0), -0.5 * std::log(2 * kPi), 1e-13));
    CHECK(close_rel(sv.zeta_deriv(-2), -sv.zeta(3) / (4 * kPi * kPi), 1e-12));
    CHECK(close_rel(sv.zeta_deriv(2), -0.93754825431584375, 1e-11));
    CHECK_THROWS_AS(sv.zeta_deriv(1.0), std::invalid_argument);
    // central-difference cross-check at even positive integers
    for (double s : {2.0, 4.0, 6.0}) {
        const double hstep = 1e-4;
        const double fd = (sv.zeta(s + hstep) - sv.zeta(s - hstep)) / (2 * hstep);
        CHECK(close_abs(sv.zeta_deriv(s), fd, 1e-6));
    }
}

TEST_CASE("stieltjes constants") {
    const auto& sv = special_values();
    CHECK(close_abs(sv.stieltjes(0), kEulerGamma, 1e-13));
    CHECK(close_abs(sv.stieltjes(1), -0.072815845483676725, 1e-12));
    CHECK(close_abs(sv.stieltjes(2), -0.0096903631928723184, 1e-12));
    CHECK(close_abs(sv.stieltjes(3), 0.0020538344203033459, 1e-12));
    CHECK(close_abs(sv.stieltjes(4), 0.0023253700654673000, 1e-12));
    CHECK(close_abs(sv.stieltjes(12), 0.00016727291210514019, 1e-10));
    CHECK_THROWS_AS(sv.stieltjes(13), std::invalid_argument);
    CHECK_THROWS_AS(sv.stieltjes(-1), std::invalid_argument);
}

TEST_CASE("gamma taylor coefficients") {
    const auto& sv = special_values();
    const LaurentCoeffs g1 = sv.gamma_taylor(1.0, 2);
    CHECK(g1.coeffs[0] == 0.0);
    CHECK(close_rel(g1.coeffs[1], 1.0, 1e-15));
    CHECK(close_rel(g1.coeffs[2], -kEulerGamma, 1e-14));

    CHECK(close_rel(sv.gamma_taylor(0.0, 3).coeffs[0], 1.0, 1e-15));
    CHECK(close_rel(sv.gamma_taylor(-2.0, 1).coeffs[1], 0.5 * (1.5 - kEulerGamma), 1e-13));
    CHECK(close_rel(sv.gamma_taylor(-3.0, 0).coeffs[0], -1.0 / 6, 1e-14));

    // regular integer case: [z^1] z Gamma(4+z) = Gamma(4) = 6
    CHECK(close_rel(sv.gamma_taylor(4.0, 2).coeffs[1], 6.0, 1e-13));
    // Gamma'(4) = 6 (psi(4)) = 6 (11/6 - gamma)
    CHECK(close_rel(sv.gamma_taylor(4.0, 2).coeffs[2], 6.0 * (11.0 / 6 - kEulerGamma), 1e-13));
    // non-integer centers via the Hurwitz route
    CHECK(close_rel(sv.gamma_taylor(0.5, 1).coeffs[1], std::sqrt(kPi), 1e-13));
    CHECK(close_rel(sv.gamma_taylor(-0.5, 1).coeffs[1], -2 * std::sqrt(kPi), 1e-13));
}

TEST_CASE("log gamma cumulant identity") {
    // ln Gamma(1+z) = -gamma z + sum_{m>=2} (-1)^m zeta(m) z^m / m, termwise.
    const auto& sv = special_values();
    Series<wide> g(10);
    for (int k = 0; k <= 10; ++k) g[k] = sv.gamma_one_series()[static_cast<std::size_t>(k)];
    const Series<wide> lg = series_log(g);
    CHECK(close_abs(to_double(lg[1]), -kEulerGamma, 1e-14));
    for (int m = 2; m <= 8; ++m) {
        const double expect = (m % 2 == 0 ? 1.0 : -1.0) * sv.zeta(m) / m;
        CHECK(close_abs(to_double(lg[m]), expect, 1e-12));
    }
}

TEST_CASE("zeta taylor coefficients") {
    const auto& sv = special_values();
    const LaurentCoeffs z1 = sv.zeta_taylor(1.0, 1);
    CHECK(z1.coeffs[0] == 1.0);
    CHECK(close_rel(z1.coeffs[1], kEulerGamma, 1e-13));
    const LaurentCoeffs z2 = sv.zeta_taylor(2.0, 1);
    CHECK(z2.coeffs[0] == 0.0);
    CHECK(close_rel(z2.coeffs[1], kPi * kPi / 6, 1e-14));
    const LaurentCoeffs z0 = sv.zeta_taylor(0.0, 2);
    CHECK(z0.coeffs[0] == 0.0);
    CHECK(close_rel(z0.coeffs[1], -0.5, 1e-14));
    CHECK(close_rel(z0.coeffs[2], sv.zeta_deriv(0), 1e-13));
    // second-order coefficient at u=1 is -gamma_1 / 1!
    const LaurentCoeffs z1b = sv.zeta_taylor(1.0, 2);
    CHECK(close_rel(z1b.coeffs[2], 0.072815845483676725, 1e-12));
}

TEST_CASE("higher derivatives and classical identities") {
    const auto& sv = special_values();
    // frozen 512-bit references for second derivatives
    const auto d0 = sv.riemann_zeta_derivs(0.0, 2);
    CHECK(close_rel(to_double(d0[2]), -2.0063564559085848512, 1e-13));
    const auto d2 = sv.riemann_zeta_derivs(2.0, 2);
    CHECK(close_rel(to_double(d2[2]), 1.9892802342989010234, 1e-13));
    // zeta_taylor packs zeta''(0)/2 at k = 3
    CHECK(close_rel(sv.zeta_taylor(0.0, 3).coeffs[3], -2.0063564559085848512 / 2, 1e-12));
    // Gamma''(1) = gamma^2 + pi^2/6
    const double g2 = kEulerGamma * kEulerGamma + kPi * kPi / 6;
    CHECK(close_rel(sv.gamma_taylor(1.0, 3).coeffs[3], g2 / 2, 1e-13));
    // Hurwitz at base 1/2: zeta(s, 1/2) = (2^s - 1) zeta(s)
    CHECK(close_rel(to_double(sv.hurwitz_zeta_derivs(3.0, 0.5Q, 0)[0]), 7 * sv.zeta(3), 1e-13));
    // digamma(1/2) = -gamma - 2 ln 2, log Gamma(1/2) = ln sqrt(pi)
    CHECK(close_rel(to_double(sv.digamma_w(0.5Q)), -kEulerGamma - 2 * std::log(2.0), 1e-13));
    CHECK(close_rel(to_double(sv.log_gamma_w(0.5Q)), 0.5 * std::log(kPi), 1e-14));
}

TEST_CASE("k_ell") {
    const auto& sv = special_values();
    CHECK(sv.k_ell(1) == 1.0);
    CHECK(close_rel(sv.k_ell(2), kPi * kPi / 6, 1e-14));
    CHECK(close_rel(sv.k_ell(4), 6 * sv.zeta(2) * sv.zeta(3) * sv.zeta(4), 1e-14));
}

}  // TEST_SUITE
