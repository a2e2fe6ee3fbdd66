#pragma once

// Log-concavity checks on the rows of a CountTable: exact big-integer
// sign decisions plus the second difference Upsilon and its predicted
// leading term in the typical regime.

#include <vector>

#include "orbitasym/enumeration.hpp"

namespace orbitasym {

struct ConcavityReport {
    int ell = 1;
    int n = 0;
    std::vector<int> checked_k;
    std::vector<int> violations;  // k with A(n,k)^2 <= A(n,k-1) A(n,k+1)
    std::vector<std::pair<int, double>> upsilon;  // k -> 2 ln A(k) - ln A(k-1) - ln A(k+1)
};

// Upsilon at one k (2 <= k <= n-1); the sign is decided by exact integer
// comparison, the returned value is the float log difference.
double upsilon(const CountTable& table, int n, int k);

// Exact strictness check at one k.
bool strictly_log_concave_at(const CountTable& table, int n, int k);

ConcavityReport scan(const CountTable& table, int n);

// Leading term ell / (s n^{(ell-1)/ell}) of Upsilon along k ~ s n^{(l-1)/l}.
double predicted_upsilon(int ell, long n, double s);

}  // namespace orbitasym
