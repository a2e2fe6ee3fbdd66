#include "orbitasym/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "orbitasym/errors.hpp"

namespace orbitasym {

namespace {

// One divisor-convolution pass: out[m] = sum_{d | m} in[m/d] * d^power.
// Visits divisor pairs sieve-style, O(N log N) pair visits.
std::vector<Rational> divisor_convolve_power(const std::vector<Rational>& in, int power, int max_n) {
    std::vector<Rational> out(static_cast<std::size_t>(max_n), Rational(0));
    for (int d = 1; d <= max_n; ++d) {
        BigInt dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(power));
        const Rational w(dp);
        for (int m = d; m <= max_n; m += d) {
            const Rational& base = in[static_cast<std::size_t>(m / d) - 1];
            if (base != 0) out[static_cast<std::size_t>(m) - 1] += base * w;
        }
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int roots() {
        int r = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++r;
        return r;
    }
};

using Perm = std::vector<int>;

bool commute(const Perm& a, const Perm& b) {
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])] !=
            b[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])])
            return false;
    return true;
}

int joint_orbits(const std::vector<const Perm*>& tuple, int n) {
    UnionFind uf(n);
    for (const Perm* p : tuple)
        for (int i = 0; i < n; ++i) uf.unite(i, (*p)[static_cast<std::size_t>(i)]);
    return uf.roots();
}

void enumerate_tuples(const std::vector<Perm>& perms, int ell, int n,
                      std::vector<const Perm*>& tuple, std::vector<BigInt>& by_orbits) {
    if (static_cast<int>(tuple.size()) == ell) {
        by_orbits[static_cast<std::size_t>(joint_orbits(tuple, n))] += 1;
        return;
    }
    for (const Perm& q : perms) {
        bool ok = true;
        for (const Perm* p : tuple)
            if (!commute(*p, q)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        tuple.push_back(&q);
        enumerate_tuples(perms, ell, n, tuple, by_orbits);
        tuple.pop_back();
    }
}

}  // namespace

LogGFSeries log_gf_series(int ell, int max_n) {
    if (ell < 1) throw std::invalid_argument("log_gf_series: ell must be >= 1");
    if (max_n < 0) throw std::invalid_argument("log_gf_series: max_n must be >= 0");
    LogGFSeries gf;
    gf.ell = ell;
    if (max_n == 0) return gf;
    // Iterated convolution of the power sequences n^(ell-2), ..., n^1, n^0,
    // then one pass with weight 1/d for the last index.
    std::vector<Rational> acc(static_cast<std::size_t>(max_n), Rational(0));
    acc[0] = 1;  // identity for divisor convolution
    for (int power = ell - 2; power >= 0; --power)
        acc = divisor_convolve_power(acc, power, max_n);
    std::vector<Rational> out(static_cast<std::size_t>(max_n), Rational(0));
    for (int d = 1; d <= max_n; ++d) {
        const Rational w(1, d);
        for (int m = d; m <= max_n; m += d) {
            const Rational& base = acc[static_cast<std::size_t>(m / d) - 1];
            if (base != 0) out[static_cast<std::size_t>(m) - 1] += base * w;
        }
    }
    gf.coeffs = std::move(out);
    return gf;
}

Rational dirichlet_coeff(int ell, int n) {
    if (n < 1) throw std::invalid_argument("dirichlet_coeff: n must be >= 1");
    return log_gf_series(ell, n).c(n);
}

const BigInt& CountTable::at(int n, int k) const {
    auto it = values_.find({n, k});
    if (it == values_.end()) throw std::invalid_argument("CountTable: (n,k) out of range");
    return it->second;
}

void CountTable::set(int n, int k, BigInt v) { values_[{n, k}] = std::move(v); }

BigInt CountTable::row_sum(int n) const {
    BigInt s = 0;
    for (int k = 0; k <= n; ++k) {
        auto it = values_.find({n, k});
        if (it == values_.end()) throw std::invalid_argument("CountTable: incomplete row");
        s += it->second;
    }
    return s;
}

std::string CountTable::to_csv() const {
    std::ostringstream os;
    os << "ell,n,k,count\n";
    for (const auto& [nk, v] : values_)
        os << ell_ << ',' << nk.first << ',' << nk.second << ',' << v.get_str() << '\n';
    return os.str();
}

std::string CountTable::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [nk, v] : values_) {
        if (!first) os << ",";
        first = false;
        os << "{\"ell\":" << ell_ << ",\"n\":" << nk.first << ",\"k\":" << nk.second
           << ",\"count\":\"" << v.get_str() << "\"}";
    }
    os << "]";
    return os.str();
}

CountTable count_table(int ell, int max_n) {
    if (ell < 1) throw std::invalid_argument("count_table: ell must be >= 1");
    if (max_n < 0) throw std::invalid_argument("count_table: max_n must be >= 0");
    const LogGFSeries gf = log_gf_series(ell, max_n);

    CountTable table(ell, max_n);
    std::vector<BigInt> factorial(static_cast<std::size_t>(max_n) + 1);
    factorial[0] = 1;
    for (int n = 1; n <= max_n; ++n) factorial[static_cast<std::size_t>(n)] = factorial[static_cast<std::size_t>(n) - 1] * n;

    for (int n = 0; n <= max_n; ++n) table.set(n, 0, n == 0 ? 1 : 0);

    // L^k maintained incrementally; A(n,k) = n!/k! [z^n] L^k.
    std::vector<Rational> lpow(static_cast<std::size_t>(max_n) + 1, Rational(0));
    lpow[0] = 1;
    BigInt k_factorial = 1;
    for (int k = 1; k <= max_n; ++k) {
        std::vector<Rational> next(static_cast<std::size_t>(max_n) + 1, Rational(0));
        for (int i = k - 1; i <= max_n; ++i) {  // lpow = L^{k-1} has valuation k-1
            if (lpow[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 1; i + j <= max_n; ++j)
                next[static_cast<std::size_t>(i + j)] += lpow[static_cast<std::size_t>(i)] * gf.c(j);
        }
        lpow = std::move(next);
        k_factorial *= k;
        for (int n = k; n <= max_n; ++n) {
            Rational a = lpow[static_cast<std::size_t>(n)] * factorial[static_cast<std::size_t>(n)];
            a /= Rational(k_factorial);
            a.canonicalize();
            if (a.get_den() != 1)
                throw internal_error("count_table: non-integral count at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
            table.set(n, k, a.get_num());
        }
    }
    return table;
}

CountTable brute_force_table(int ell, int n) {
    if (ell < 1) throw std::invalid_argument("brute_force_table: ell must be >= 1");
    if (n < 0) throw std::invalid_argument("brute_force_table: n must be >= 0");
    const int bound = ell == 1 ? 8 : ell == 2 ? 6 : ell == 3 ? 5 : 4;
    if (n > bound)
        throw std::invalid_argument("brute_force_table: n=" + std::to_string(n) +
                                    " exceeds bound " + std::to_string(bound) +
                                    " for ell=" + std::to_string(ell));
    CountTable table(ell, n);
    for (int k = 0; k <= n; ++k) table.set(n, k, 0);
    if (n == 0) {
        table.set(0, 0, 1);  // the empty tuple acting on the empty set
        return table;
    }
    std::vector<Perm> perms;
    Perm base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    std::vector<BigInt> by_orbits(static_cast<std::size_t>(n) + 1, BigInt(0));
    std::vector<const Perm*> tuple;
    enumerate_tuples(perms, ell, n, tuple, by_orbits);
    for (int k = 0; k <= n; ++k) table.set(n, k, by_orbits[static_cast<std::size_t>(k)]);
    return table;
}

BigInt commuting_tuple_count(const CountTable& table, int n) {
    if (n > table.max_n()) throw std::invalid_argument("commuting_tuple_count: n beyond table");
    return table.row_sum(n);
}

}  // namespace orbitasym
