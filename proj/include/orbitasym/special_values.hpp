#pragma once

// High-accuracy evaluation of zeta(s), zeta'(s), Bernoulli numbers,
// Stieltjes constants, and the Taylor coefficients of z*Gamma(u+z) and
// z*zeta(u+z) needed to assemble asymptotic-expansion coefficients.
// Everything runs in wide (software 113-bit) floats; double values are
// produced at the API boundary.

#include <vector>

#include "orbitasym/series.hpp"
#include "orbitasym/wide_float.hpp"

namespace orbitasym {

// Coefficients [z^k] z*F(u+z), k = 0..K, for F = Gamma or zeta.
struct LaurentCoeffs {
    enum class Kind { gamma, zeta };
    double center = 0.0;
    Kind kind = Kind::gamma;
    std::vector<double> coeffs;
};

class SpecialValues {
  public:
    SpecialValues();

    // Exact Bernoulli numbers, B_1 = -1/2 convention; m <= 60.
    const Rational& bernoulli(int m) const;

    // Riemann zeta and its derivatives at real s != 1.  Integer s <= 0
    // uses the Bernoulli closed form; everything else Euler-Maclaurin.
    wide zeta_w(wide s) const;
    wide zeta_deriv_w(wide s) const;
    double zeta(double s) const { return to_double(zeta_w(s)); }
    double zeta_deriv(double s) const { return to_double(zeta_deriv_w(s)); }

    // Hurwitz zeta derivatives d^m/ds^m zeta(s, a), m = 0..K, for a > 0.
    // Euler-Maclaurin; accurate for s > -8 or so, after which the direct
    // sum cancels catastrophically.
    std::vector<wide> hurwitz_zeta_derivs(wide s, wide a, int K) const;

    // Riemann zeta derivatives d^m/ds^m zeta(s), m = 0..K: Euler-Maclaurin
    // for s > -1/2, the reflection formula otherwise.
    std::vector<wide> riemann_zeta_derivs(wide s, int K) const;

    // Stieltjes constants gamma_0..gamma_12.
    wide stieltjes_w(int k) const;
    double stieltjes(int k) const { return to_double(stieltjes_w(k)); }

    std::vector<wide> gamma_taylor_w(wide u, int K) const;
    std::vector<wide> zeta_taylor_w(wide u, int K) const;
    LaurentCoeffs gamma_taylor(double u, int K) const;
    LaurentCoeffs zeta_taylor(double u, int K) const;

    // K_ell = (ell-1)! zeta(2) zeta(3) ... zeta(ell); K_1 = 1.
    wide k_ell_w(int ell) const;
    double k_ell(int ell) const { return to_double(k_ell_w(ell)); }

    // Taylor coefficients of Gamma(1+z) to the cached order.
    const std::vector<wide>& gamma_one_series() const { return gamma1_; }

    wide log_gamma_w(wide x) const;  // x > 0
    wide digamma_w(wide x) const;    // x > 0

  private:
    std::vector<Rational> bernoulli_;
    std::vector<wide> bernoulli_w_;
    std::vector<wide> stieltjes_;
    std::vector<wide> gamma1_;  // Gamma(1+z) Taylor coefficients

    static constexpr int kEmTerms = 50;   // direct-sum cutoff M
    static constexpr int kEmOrder = 25;   // B_2..B_50 corrections
    static constexpr int kStieltjesMax = 12;
};

const SpecialValues& special_values();

}  // namespace orbitasym
