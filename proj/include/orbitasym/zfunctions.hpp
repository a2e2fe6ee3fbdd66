#pragma once

// The multiple sums Z^{[ell]}_{alpha_1..alpha_ell}(t) =
// sum over d_1..d_ell >= 1 of d_1^(a1-1)...d_ell^(a_ell-1) e^(-d1...d_ell t):
// direct evaluation, complete small-t asymptotic expansions, and the
// ratio h_ell with its inverse (the saddle radius solve).

#include <vector>

#include "orbitasym/wide_float.hpp"

namespace orbitasym {

struct ZSpec {
    int ell = 0;
    std::vector<double> alphas;  // exactly ell entries

    static ZSpec staircase(int ell, int m);
};

// One term coeff * t^a * (-ln t)^b.  For the staircase specializations all
// exponents a are integers, so the double representation is exact.
struct ExpansionTerm {
    double a = 0.0;
    int b = 0;
    double coeff = 0.0;
};

// Terms ordered by (a ascending, b descending); no duplicate (a,b) pairs,
// zero coefficients dropped.
struct AsymptoticExpansion {
    std::vector<ExpansionTerm> terms;
};

struct ZDirectResult {
    double value = 0.0;
    long terms_used = 0;
};

// Value with absolute error <= eps, by grouping the sum over the product
// D = d1...d_ell with a divisor-convolution table.
ZDirectResult z_direct_info(const ZSpec& spec, double t, double eps);
double z_direct(const ZSpec& spec, double t, double eps);

// Relative-accuracy convenience used by h and the saddle solver.
double z_direct_rel(const ZSpec& spec, double t, double rel_eps);

// Expansion coefficient C_{a,b} from the general residue formula
// (product of z*Gamma and z*zeta Taylor coefficient series).
double c_coeff(const ZSpec& spec, double a, int b);
wide c_coeff_w(const ZSpec& spec, wide a, int b);

// Complete expansion of the staircase Z_m^{[ell]} for exponents a <= N,
// from the closed-form case analysis (independent of c_coeff).
AsymptoticExpansion staircase_expansion(int ell, int m, double N);

double eval_expansion(const AsymptoticExpansion& e, double t);

// h_ell(t) = (ell-1) Z_{ell-1}^{[ell]}(t) / Z_ell^{[ell]}(t), a strictly
// increasing bijection (0,inf) -> (0, ell-1); ell >= 2.
double h(int ell, double t);

// Solves h(ell, t) = v to 1e-12 relative via bracketed bisection plus a
// Newton polish using d/dt Z_m = -Z_{m+1}.
double h_inverse(int ell, double v);

}  // namespace orbitasym
