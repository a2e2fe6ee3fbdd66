#pragma once

// Truncated power series with exact rational coefficients: the substrate
// for coefficient extraction and formal reversion.  The template also
// instantiates with a floating coefficient type, which the constants
// pipeline uses to run the same compositional machinery on numeric data.
//
// Truncation convention: a series of order N is known mod z^{N+1} and
// carries exactly N+1 coefficients.  Binary operations truncate to the
// min of the two orders; nothing ever zero-pads silently.

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace orbitasym {

using Rational = mpq_class;
using BigInt = mpz_class;

template <class K>
class Series {
  public:
    // Zero series of the given truncation order.
    explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1, K(0)) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    explicit Series(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs a constant term");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const K& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    K& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    const std::vector<K>& coeffs() const { return coeffs_; }

    Series truncated(int order) const {
        if (order >= this->order()) return *this;
        std::vector<K> c(coeffs_.begin(), coeffs_.begin() + order + 1);
        return Series(std::move(c));
    }

    friend Series operator+(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series r(n);
        for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series r(n);
        for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
        return r;
    }

    // Cauchy product truncated to min order.
    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (a[i] == K(0)) continue;
            for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    friend Series operator*(const K& s, const Series& a) {
        Series r(a.order());
        for (int k = 0; k <= a.order(); ++k) r[k] = s * a[k];
        return r;
    }

  private:
    std::vector<K> coeffs_;
};

using RationalSeries = Series<Rational>;

// exp of a series with zero constant term, via (exp a)' = a' exp a:
//   k b_k = sum_{j=1..k} j a_j b_{k-j}.
// A nonzero constant term is rejected: exp of a rational is irrational,
// and the floating instantiation keeps the same contract.
template <class K>
Series<K> series_exp(const Series<K>& a) {
    if (a[0] != K(0)) throw std::invalid_argument("series_exp: nonzero constant term");
    const int n = a.order();
    Series<K> b(n);
    b[0] = K(1);
    for (int k = 1; k <= n; ++k) {
        K acc(0);
        for (int j = 1; j <= k; ++j) acc += K(j) * a[j] * b[k - j];
        b[k] = acc / K(k);
    }
    return b;
}

// log of a series with constant term 1; inverse of series_exp to order.
template <class K>
Series<K> series_log(const Series<K>& f) {
    if (f[0] != K(1)) throw std::invalid_argument("series_log: constant term must be 1");
    const int n = f.order();
    Series<K> a(n);
    for (int k = 1; k <= n; ++k) {
        K acc(0);
        for (int j = 1; j < k; ++j) acc += K(j) * a[j] * f[k - j];
        a[k] = (K(k) * f[k] - acc) / K(k);
    }
    return a;
}

// outer(inner) truncated to min of the two orders; inner must have zero
// constant term so the substitution is well defined on truncations.
template <class K>
Series<K> series_compose(const Series<K>& outer, const Series<K>& inner) {
    if (inner[0] != K(0)) throw std::invalid_argument("series_compose: inner constant term must be 0");
    const int n = std::min(outer.order(), inner.order());
    Series<K> in = inner.truncated(n);
    // Horner: r = outer[n]; r = r*inner + outer[k].
    Series<K> r(n);
    r[0] = outer[n];
    for (int k = n - 1; k >= 0; --k) {
        r = r * in;
        r[0] += outer[k];
    }
    return r;
}

// Compositional inverse of a = z + a2 z^2 + ...: returns b with
// a(b(z)) = b(a(z)) = z to the truncation order.  Order-by-order solve:
// the coefficient of z^k in a(b) is b_k plus terms of b below k only.
template <class K>
Series<K> series_revert(const Series<K>& a) {
    if (a[0] != K(0) || a[1] != K(1))
        throw std::invalid_argument("series_revert: series must be z + O(z^2)");
    const int n = a.order();
    Series<K> b(n);
    if (n >= 1) b[1] = K(1);
    // pw holds b^j truncated at the current working order.
    for (int k = 2; k <= n; ++k) {
        Series<K> pw = b.truncated(k);
        K acc(0);  // coefficient of z^k in sum_{j>=2} a_j b^j
        for (int j = 2; j <= k; ++j) {
            pw = pw * b.truncated(k);
            acc += a[j] * pw[k];
        }
        b[k] = -acc;
    }
    return b;
}

// Spec-facing names for the exact-rational instantiation.
inline RationalSeries ps_add(const RationalSeries& a, const RationalSeries& b) { return a + b; }
inline RationalSeries ps_mul(const RationalSeries& a, const RationalSeries& b) { return a * b; }
inline RationalSeries ps_exp(const RationalSeries& a) { return series_exp(a); }
inline RationalSeries ps_log(const RationalSeries& a) { return series_log(a); }
inline RationalSeries ps_compose(const RationalSeries& outer, const RationalSeries& inner) {
    return series_compose(outer, inner);
}
inline RationalSeries ps_revert(const RationalSeries& a) { return series_revert(a); }

}  // namespace orbitasym
