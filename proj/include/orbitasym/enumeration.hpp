#pragma once

// Exact counts A(ell, n, k) of ell-tuples of pairwise commuting
// permutations of [n] with exactly k joint orbits, computed from the
// infinite-product generating function exp(x * L_ell(z)), plus an
// independent brute-force oracle that enumerates tuples directly.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitasym/series.hpp"

namespace orbitasym {

// Coefficients c_ell(1..N) of L_ell(z) = sum_n c_ell(n) z^n, where
// c_ell(n) is the sum over ordered factorizations d1*...*d_ell = n of
// d1^(ell-2) d2^(ell-3) ... d_{ell-1}^0 d_ell^(-1).  All positive.
struct LogGFSeries {
    int ell = 1;
    std::vector<Rational> coeffs;  // coeffs[n-1] = c_ell(n), n = 1..N

    int max_n() const { return static_cast<int>(coeffs.size()); }
    const Rational& c(int n) const { return coeffs.at(static_cast<std::size_t>(n) - 1); }
};

LogGFSeries log_gf_series(int ell, int max_n);

// c_ell(n) alone (convenience around log_gf_series).
Rational dirichlet_coeff(int ell, int n);

class CountTable {
  public:
    CountTable(int ell, int max_n) : ell_(ell), max_n_(max_n) {}

    int ell() const { return ell_; }
    int max_n() const { return max_n_; }

    // A(ell, n, k); valid for 0 <= k <= n <= max_n.
    const BigInt& at(int n, int k) const;
    void set(int n, int k, BigInt v);

    BigInt row_sum(int n) const;

    std::string to_csv() const;
    std::string to_json() const;

  private:
    int ell_;
    int max_n_;
    std::map<std::pair<int, int>, BigInt> values_;
};

// Full table for 0 <= k <= n <= max_n via exact power-series extraction:
// A(ell,n,k) = n! [z^n] L_ell(z)^k / k!.  Throws internal_error if some
// entry fails to come out integral.
CountTable count_table(int ell, int max_n);

// Single row (n fixed) by direct enumeration of pairwise commuting
// tuples, counting orbits of the generated subgroup with union-find.
// Guarded: ell=1 needs n<=8, ell=2 n<=6, ell=3 n<=5, ell>=4 n<=4.
CountTable brute_force_table(int ell, int n);

// Row sum over k: total number of commuting ell-tuples in S_n.
BigInt commuting_tuple_count(const CountTable& table, int n);

}  // namespace orbitasym
