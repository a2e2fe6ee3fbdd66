#include "orbitasym/logconcavity.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitasym/wide_float.hpp"

namespace orbitasym {

namespace {

void check_range(const CountTable& table, int n, int k) {
    if (n > table.max_n()) throw std::invalid_argument("upsilon: n beyond table");
    if (k < 2 || k > n - 1) throw std::invalid_argument("upsilon: need 2 <= k <= n-1");
    if (table.at(n, k) <= 0 || table.at(n, k - 1) <= 0 || table.at(n, k + 1) <= 0)
        throw std::invalid_argument("upsilon: zero count in window");
}

}  // namespace

bool strictly_log_concave_at(const CountTable& table, int n, int k) {
    check_range(table, n, k);
    const BigInt& mid = table.at(n, k);
    return mid * mid > table.at(n, k - 1) * table.at(n, k + 1);
}

double upsilon(const CountTable& table, int n, int k) {
    check_range(table, n, k);
    return 2.0 * log_bigint(table.at(n, k)) - log_bigint(table.at(n, k - 1)) -
           log_bigint(table.at(n, k + 1));
}

ConcavityReport scan(const CountTable& table, int n) {
    if (n > table.max_n()) throw std::invalid_argument("scan: n beyond table");
    ConcavityReport rep;
    rep.ell = table.ell();
    rep.n = n;
    for (int k = 2; k <= n - 1; ++k) {
        rep.checked_k.push_back(k);
        if (!strictly_log_concave_at(table, n, k)) rep.violations.push_back(k);
        rep.upsilon.push_back({k, upsilon(table, n, k)});
    }
    return rep;
}

double predicted_upsilon(int ell, long n, double s) {
    if (!(s > 0)) throw std::invalid_argument("predicted_upsilon: s must be > 0");
    if (ell < 1 || n < 1) throw std::invalid_argument("predicted_upsilon: bad ell or n");
    const double expo = static_cast<double>(ell - 1) / static_cast<double>(ell);
    return ell / (s * std::pow(static_cast<double>(n), expo));
}

}  // namespace orbitasym
