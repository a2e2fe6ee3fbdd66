#pragma once

// The constant sequences A_j..H_j (ell >= 4), the I pair (ell = 2) and
// the J triple (ell = 3) feeding the correction polynomial E_ell(u).
// Every sequence with both a closed combinatorial sum and a functional
// (series-composition) derivation is computed by both routes; the sums
// live here as explicit index enumerations, the functional route runs on
// Series<wide>.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitasym/wide_float.hpp"

namespace orbitasym {

// Shape of E_ell(u):
//   ell >= 4: coeffs[j-1] multiplies u^j, j = 1..ell-1
//   ell == 2: coeffs = {I_1log, I_1} acting on (u ln u, u)
//   ell == 3: coeffs = {J_1, J_2log, J_2} acting on (u, u^2 ln u, u^2)
struct CorrectionPolynomial {
    int ell = 2;
    std::vector<double> coeffs;
};

struct ConstantsBundle {
    int ell = 2;
    std::string kind;  // "H-series", "I-pair", "J-triple"
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::pair<std::string, std::vector<double>>> intermediates;
};

// Index convention: result[j] = X_j.  A[0] = B[0] = 1, C[1] = D[1] = 1;
// E/F/G/H are zero at index 0.
std::vector<wide> a_sequence_w(int ell, int max_j);
std::vector<wide> b_sequence_w(int ell, int max_j);
std::vector<wide> c_sequence_w(int ell, int max_j);         // nested-sum definition
std::vector<wide> c_sequence_series_w(int ell, int max_j);  // t V(t)/U(t) division
std::vector<wide> d_sequence_w(int ell, int max_j);         // tree-sum formula
std::vector<wide> d_sequence_revert_w(int ell, int max_j);  // reversion of the C series

struct EfghSequences {
    std::vector<wide> e, f, g, h;
};
EfghSequences efgh_sequences_w(int ell, int max_j);          // nested-sum definitions
std::vector<wide> h_sequence_series_w(int ell, int max_j);   // series-composition route

std::pair<wide, wide> i_constants_w();           // (I_1log, I_1)
std::tuple<wide, wide, wide> j_constants_w();    // (J_1, J_2log, J_2)

// Double-facing spec operations.
std::pair<std::vector<double>, std::vector<double>> ab_sequences(int ell, int max_j);
std::vector<double> c_sequence(int ell, int max_j);
std::vector<double> d_sequence(int ell, int max_j);
struct Efgh {
    std::vector<double> e, f, g, h;
};
Efgh efgh_sequences(int ell, int max_j);
std::pair<double, double> i_constants();
std::tuple<double, double, double> j_constants();

CorrectionPolynomial correction_poly(int ell);
double eval_correction(int ell, double u);
double eval_correction(const CorrectionPolynomial& poly, double u);

ConstantsBundle constants_bundle(int ell, int max_j);

}  // namespace orbitasym
