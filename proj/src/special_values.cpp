#include "orbitasym/special_values.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitasym {

namespace {

constexpr int kBernoulliMax = 60;

bool is_integer(wide x) { return x == floorq(x); }

// Binomial coefficients as wide, small arguments.
wide binom_w(int n, int k) {
    if (k < 0 || k > n) return 0;
    wide r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<wide>(n - k + i) / static_cast<wide>(i);
    return r;
}

}  // namespace

SpecialValues::SpecialValues() {
    // Bernoulli numbers from sum_{j<=m} C(m+1,j) B_j = 0.
    bernoulli_.resize(kBernoulliMax + 1);
    bernoulli_[0] = 1;
    for (int m = 1; m <= kBernoulliMax; ++m) {
        Rational acc(0);
        BigInt c(1);  // C(m+1, j), starting at j=0
        for (int j = 0; j < m; ++j) {
            acc += Rational(c) * bernoulli_[static_cast<std::size_t>(j)];
            c = c * (m + 1 - j) / (j + 1);
        }
        bernoulli_[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    bernoulli_w_.resize(bernoulli_.size());
    for (std::size_t i = 0; i < bernoulli_.size(); ++i) bernoulli_w_[i] = to_wide(bernoulli_[i]);

    // Stieltjes constants via Euler-Maclaurin on f(x) = (ln x)^k / x:
    //   gamma_k = sum_{n<=M} f(n) - (ln M)^{k+1}/(k+1) - f(M)/2
    //             - sum_j B_{2j}/(2j)! f^{(2j-1)}(M).
    // f^{(r)}(x) = x^{-1-r} sum_i c_{r,i} (ln x)^i with integer c's from
    // d/dx [L^i x^{-p}] = i L^{i-1} x^{-p-1} - p L^i x^{-p-1}.
    stieltjes_.resize(kStieltjesMax + 1);
    const int M = kEmTerms;
    const wide logM = wlog(static_cast<wide>(M));
    for (int k = 0; k <= kStieltjesMax; ++k) {
        wide acc = 0;
        for (int n = 1; n <= M; ++n)
            acc += wpow(wlog(static_cast<wide>(n)), static_cast<wide>(k)) / static_cast<wide>(n);
        acc -= wpow(logM, static_cast<wide>(k + 1)) / static_cast<wide>(k + 1);
        acc -= wpow(logM, static_cast<wide>(k)) / (2 * static_cast<wide>(M));
        std::vector<wide> c(static_cast<std::size_t>(k) + 1, 0);
        c[static_cast<std::size_t>(k)] = 1;
        int p = 1;
        wide fact = 1;  // (2j)! running
        for (int r = 1; r <= 2 * kEmOrder - 1; ++r) {
            std::vector<wide> nc(c.size(), 0);
            for (int i = 0; i <= k; ++i) {
                if (i + 1 <= k) nc[static_cast<std::size_t>(i)] += static_cast<wide>(i + 1) * c[static_cast<std::size_t>(i) + 1];
                nc[static_cast<std::size_t>(i)] -= static_cast<wide>(p) * c[static_cast<std::size_t>(i)];
            }
            c = std::move(nc);
            ++p;
            if (r % 2 == 1) {
                const int j = (r + 1) / 2;  // using f^{(2j-1)}
                fact = 1;
                for (int i = 2; i <= 2 * j; ++i) fact *= static_cast<wide>(i);
                wide deriv = 0;
                wide lp = 1;
                for (int i = 0; i <= k; ++i) {
                    deriv += c[static_cast<std::size_t>(i)] * lp;
                    lp *= logM;
                }
                deriv *= wpow(static_cast<wide>(M), static_cast<wide>(-1 - r));
                acc -= bernoulli_w_[static_cast<std::size_t>(2 * j)] / fact * deriv;
            }
        }
        stieltjes_[static_cast<std::size_t>(k)] = acc;
    }

    // Gamma(1+z) = exp(-gamma z + sum_{m>=2} (-1)^m zeta(m) z^m / m).
    const int order = 24;
    Series<wide> cum(order);
    cum[1] = -stieltjes_[0];
    for (int m = 2; m <= order; ++m) {
        const wide zm = zeta_w(static_cast<wide>(m));
        cum[m] = (m % 2 == 0 ? zm : -zm) / static_cast<wide>(m);
    }
    gamma1_ = series_exp(cum).coeffs();
}

const Rational& SpecialValues::bernoulli(int m) const {
    if (m < 0 || m > kBernoulliMax) throw std::invalid_argument("bernoulli: index out of range");
    return bernoulli_[static_cast<std::size_t>(m)];
}

std::vector<wide> SpecialValues::hurwitz_zeta_derivs(wide s, wide a, int K) const {
    if (s == 1) throw std::invalid_argument("hurwitz_zeta_derivs: pole at s=1");
    if (a <= 0) throw std::invalid_argument("hurwitz_zeta_derivs: base must be positive");
    if (s < -2 * kEmOrder + 10)
        throw std::invalid_argument("hurwitz_zeta_derivs: s below Euler-Maclaurin validity");
    if (K < 0) throw std::invalid_argument("hurwitz_zeta_derivs: K must be >= 0");
    const int N = kEmTerms;
    const wide X = a + static_cast<wide>(N);
    const wide L = wlog(X);
    std::vector<wide> out(static_cast<std::size_t>(K) + 1, 0);

    // Direct part: d^m/ds^m (a+i)^{-s} = (-ln(a+i))^m (a+i)^{-s}.
    for (int i = 0; i < N; ++i) {
        const wide x = a + static_cast<wide>(i);
        const wide lx = wlog(x);
        const wide xs = wexp(-s * lx);
        wide lp = 1;
        for (int m = 0; m <= K; ++m) {
            out[static_cast<std::size_t>(m)] += lp * xs;
            lp *= -lx;
        }
    }

    // Integral term X^{1-s}/(s-1), differentiated with the product rule.
    const wide X1s = wexp((1 - s) * L);
    for (int m = 0; m <= K; ++m) {
        wide acc = 0;
        wide lr = 1;  // (-L)^r
        for (int r = 0; r <= m; ++r) {
            // d^{m-r}/ds^{m-r} (s-1)^{-1} = (-1)^{m-r} (m-r)! (s-1)^{-(m-r)-1}
            wide fac = 1;
            for (int i = 1; i <= m - r; ++i) fac *= static_cast<wide>(i);
            wide inv = 1;
            for (int i = 0; i <= m - r; ++i) inv /= (s - 1);
            if ((m - r) % 2 == 1) fac = -fac;
            acc += binom_w(m, r) * lr * fac * inv;
            lr *= -L;
        }
        out[static_cast<std::size_t>(m)] += acc * X1s;
    }

    // Midpoint term X^{-s}/2.
    {
        const wide Xs = wexp(-s * L);
        wide lp = 1;
        for (int m = 0; m <= K; ++m) {
            out[static_cast<std::size_t>(m)] += lp * Xs / 2;
            lp *= -L;
        }
    }

    // Corrections: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * X^{-s-2j+1}.
    // The Pochhammer polynomial is expanded in z around s (truncated at
    // z^K) by multiplying linear factors, so derivatives P^{(r)} = r! c_r.
    for (int j = 1; j <= kEmOrder; ++j) {
        wide fact = 1;
        for (int i = 2; i <= 2 * j; ++i) fact *= static_cast<wide>(i);
        const wide cj = bernoulli_w_[static_cast<std::size_t>(2 * j)] / fact;
        std::vector<wide> poly(static_cast<std::size_t>(K) + 1, 0);
        poly[0] = 1;
        for (int i = 0; i <= 2 * j - 2; ++i) {
            const wide cfac = s + static_cast<wide>(i);
            for (int r = K; r >= 1; --r)
                poly[static_cast<std::size_t>(r)] = cfac * poly[static_cast<std::size_t>(r)] + poly[static_cast<std::size_t>(r) - 1];
            poly[0] *= cfac;
        }
        const wide Xp = wexp((-s - 2 * j + 1) * L);
        wide rfact = 1;
        std::vector<wide> pd(static_cast<std::size_t>(K) + 1, 0);  // P^{(r)}(s)
        for (int r = 0; r <= K; ++r) {
            if (r > 0) rfact *= static_cast<wide>(r);
            pd[static_cast<std::size_t>(r)] = rfact * poly[static_cast<std::size_t>(r)];
        }
        for (int m = 0; m <= K; ++m) {
            wide acc = 0;
            wide lr = 1;  // (-L)^{m-r} built downward
            for (int r = m; r >= 0; --r) {
                acc += binom_w(m, r) * pd[static_cast<std::size_t>(r)] * lr;
                lr *= -L;
            }
            out[static_cast<std::size_t>(m)] += cj * acc * Xp;
        }
    }
    return out;
}

std::vector<wide> SpecialValues::riemann_zeta_derivs(wide s, int K) const {
    if (s == 1) throw std::invalid_argument("riemann_zeta_derivs: pole at s=1");
    if (s > -0.5Q) return hurwitz_zeta_derivs(s, 1, K);

    // Reflection: zeta(s+z) = 2^{s+z} pi^{s+z-1} sin(pi(s+z)/2)
    //             * Gamma(1-s-z) zeta(1-s-z), multiplied out as Taylor
    // series in z.  The direct Euler-Maclaurin sum loses ~|s| log10(M)
    // digits to cancellation out here, the reflected side none.
    const std::size_t sz = static_cast<std::size_t>(K) + 1;
    const wide pi = wide_pi();
    const wide ln2pi = wlog(2 * pi);

    std::vector<wide> acc(sz, 0);  // A(z) = 2^{s+z} pi^{s+z-1}
    {
        const wide front = wexp(s * wlog(wide(2)) + (s - 1) * wlog(pi));
        wide term = front;
        for (int k = 0; k <= K; ++k) {
            acc[static_cast<std::size_t>(k)] = term;
            term = term * ln2pi / static_cast<wide>(k + 1);
        }
    }
    auto mul_into = [&](const std::vector<wide>& f) {
        std::vector<wide> next(sz, 0);
        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j)
                next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
        acc = std::move(next);
    };

    // sin(pi(s+z)/2): coefficient k is (pi/2)^k/k! sin(pi s/2 + k pi/2).
    {
        std::vector<wide> f(sz, 0);
        const wide half_pi_s = pi * s / 2;
        wide pw = 1, fact = 1;
        for (int k = 0; k <= K; ++k) {
            if (k > 0) {
                pw *= pi / 2;
                fact *= static_cast<wide>(k);
            }
            const int phase = ((k % 4) + 4) % 4;
            wide sval;
            switch (phase) {
                case 0: sval = sinq(half_pi_s); break;
                case 1: sval = cosq(half_pi_s); break;
                case 2: sval = -sinq(half_pi_s); break;
                default: sval = -cosq(half_pi_s); break;
            }
            f[static_cast<std::size_t>(k)] = pw / fact * sval;
        }
        // exact trivial zeros at negative even integers
        if (is_integer(s) && static_cast<long>(-s) % 2 == 0) f[0] = 0;
        mul_into(f);
    }

    // Gamma(1-s-z): Taylor of Gamma at w = 1-s with alternating signs.
    {
        const wide w = 1 - s;
        const std::vector<wide> zg = gamma_taylor_w(w, K + 1);
        std::vector<wide> f(sz, 0);
        for (int j = 0; j <= K; ++j) {
            const wide tj = zg[static_cast<std::size_t>(j) + 1];  // Gamma^{(j)}(w)/j!
            f[static_cast<std::size_t>(j)] = (j % 2 == 0 ? tj : -tj);
        }
        mul_into(f);
    }

    // zeta(1-s-z): Euler-Maclaurin derivatives at 1-s > 3/2.
    {
        const std::vector<wide> zd = hurwitz_zeta_derivs(1 - s, 1, K);
        std::vector<wide> f(sz, 0);
        wide fact = 1;
        for (int j = 0; j <= K; ++j) {
            if (j > 0) fact *= static_cast<wide>(j);
            const wide tj = zd[static_cast<std::size_t>(j)] / fact;
            f[static_cast<std::size_t>(j)] = (j % 2 == 0 ? tj : -tj);
        }
        mul_into(f);
    }

    std::vector<wide> out(sz, 0);
    wide fact = 1;
    for (int m = 0; m <= K; ++m) {
        if (m > 0) fact *= static_cast<wide>(m);
        out[static_cast<std::size_t>(m)] = acc[static_cast<std::size_t>(m)] * fact;
    }
    return out;
}

wide SpecialValues::zeta_w(wide s) const {
    if (s == 1) throw std::invalid_argument("zeta: pole at s=1");
    if (s <= 0 && is_integer(s)) {
        const long n = static_cast<long>(-s);
        // zeta(-n) = (-1)^n B_{n+1} / (n+1)
        if (n + 1 > kBernoulliMax) throw std::invalid_argument("zeta: argument too negative");
        const wide b = bernoulli_w_[static_cast<std::size_t>(n + 1)];
        return (n % 2 == 0 ? b : -b) / static_cast<wide>(n + 1);
    }
    return riemann_zeta_derivs(s, 0)[0];
}

wide SpecialValues::zeta_deriv_w(wide s) const {
    if (s == 1) throw std::invalid_argument("zeta_deriv: pole at s=1");
    return riemann_zeta_derivs(s, 1)[1];
}

wide SpecialValues::stieltjes_w(int k) const {
    if (k < 0 || k > kStieltjesMax) throw std::invalid_argument("stieltjes: index out of 0..12");
    return stieltjes_[static_cast<std::size_t>(k)];
}

wide SpecialValues::log_gamma_w(wide x) const {
    if (x <= 0) throw std::invalid_argument("log_gamma: argument must be positive");
    // Stirling at x+R with downshift.
    const int R = 20;
    wide shift = 0;
    for (int i = 0; i < R; ++i) shift += wlog(x + static_cast<wide>(i));
    const wide y = x + static_cast<wide>(R);
    const wide ly = wlog(y);
    wide acc = (y - 0.5Q) * ly - y + 0.5Q * wlog(2 * wide_pi());
    wide ypow = y;
    for (int j = 1; j <= kEmOrder; ++j) {
        acc += bernoulli_w_[static_cast<std::size_t>(2 * j)] /
               (static_cast<wide>(2 * j) * static_cast<wide>(2 * j - 1) * ypow);
        ypow *= y * y;
    }
    return acc - shift;
}

wide SpecialValues::digamma_w(wide x) const {
    if (x <= 0) throw std::invalid_argument("digamma: argument must be positive");
    const int R = 20;
    wide shift = 0;
    for (int i = 0; i < R; ++i) shift += 1 / (x + static_cast<wide>(i));
    const wide y = x + static_cast<wide>(R);
    wide acc = wlog(y) - 1 / (2 * y);
    wide ypow = y * y;
    for (int j = 1; j <= kEmOrder; ++j) {
        acc -= bernoulli_w_[static_cast<std::size_t>(2 * j)] / (static_cast<wide>(2 * j) * ypow);
        ypow *= y * y;
    }
    return acc - shift;
}

std::vector<wide> SpecialValues::gamma_taylor_w(wide u, int K) const {
    if (K < 0) throw std::invalid_argument("gamma_taylor: K must be >= 0");
    if (is_integer(u) && K >= static_cast<int>(gamma1_.size()))
        throw std::invalid_argument("gamma_taylor: K exceeds cached order");
    const std::size_t sz = static_cast<std::size_t>(K) + 1;

    if (is_integer(u) && u <= 0) {
        // z Gamma(-a+z) = (-1)^a/a! * Gamma(1+z) / prod_{i<=a} (1 - z/i)
        const long a = static_cast<long>(-u);
        std::vector<wide> c(sz, 0);
        for (int k = 0; k <= K && k < static_cast<int>(gamma1_.size()); ++k)
            c[static_cast<std::size_t>(k)] = gamma1_[static_cast<std::size_t>(k)];
        for (long i = 1; i <= a; ++i) {
            // multiply by sum_k (z/i)^k
            for (int k = 1; k <= K; ++k)
                c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k) - 1] / static_cast<wide>(i);
        }
        wide afact = 1;
        for (long i = 2; i <= a; ++i) afact *= static_cast<wide>(i);
        const wide scale = (a % 2 == 0 ? 1 : -1) / afact;
        for (auto& x : c) x *= scale;
        return c;
    }

    // Regular case: [z^k] z Gamma(u+z) = Gamma^{(k-1)}(u)/(k-1)!, i.e. the
    // Taylor series of Gamma(u+z) shifted up by one power of z.
    std::vector<wide> taylor;
    if (is_integer(u) && u >= 1) {
        const long r = static_cast<long>(u);
        taylor.assign(gamma1_.begin(), gamma1_.begin() + std::min<std::size_t>(sz, gamma1_.size()));
        taylor.resize(sz, 0);
        for (long i = 1; i <= r - 1; ++i) {
            // multiply by (i + z)
            for (int k = K; k >= 1; --k)
                taylor[static_cast<std::size_t>(k)] =
                    static_cast<wide>(i) * taylor[static_cast<std::size_t>(k)] + taylor[static_cast<std::size_t>(k) - 1];
            taylor[0] *= static_cast<wide>(i);
        }
    } else {
        // Non-integer u: expand at w = u + r >= 3/2 via log-Gamma cumulants
        //   ln Gamma(w+z) = ln Gamma(w) + psi(w) z + sum_{m>=2} (-1)^m zeta(m,w) z^m/m,
        // then divide by the r downshift factors (u+i+z).
        int r = 0;
        while (u + static_cast<wide>(r) < 1.5Q) ++r;
        const wide w = u + static_cast<wide>(r);
        const int order = K > 1 ? K : 1;
        Series<wide> cum(order);
        cum[1] = digamma_w(w);
        for (int m = 2; m <= order; ++m) {
            const wide zm = hurwitz_zeta_derivs(static_cast<wide>(m), w, 0)[0];
            cum[m] = (m % 2 == 0 ? zm : -zm) / static_cast<wide>(m);
        }
        Series<wide> t = series_exp(cum);
        const wide g = wexp(log_gamma_w(w));
        taylor.assign(sz, 0);
        for (int k = 0; k <= K && k <= t.order(); ++k) taylor[static_cast<std::size_t>(k)] = g * t[k];
        for (int i = 0; i < r; ++i) {
            const wide c0 = u + static_cast<wide>(i);  // divide by (c0 + z)
            std::vector<wide> q(sz, 0);
            wide carry = 0;
            for (int k = 0; k <= K; ++k) {
                q[static_cast<std::size_t>(k)] = (taylor[static_cast<std::size_t>(k)] - carry) / c0;
                carry = q[static_cast<std::size_t>(k)];
            }
            taylor = std::move(q);
        }
    }
    std::vector<wide> c(sz, 0);
    for (int k = 1; k <= K; ++k) c[static_cast<std::size_t>(k)] = taylor[static_cast<std::size_t>(k) - 1];
    return c;
}

std::vector<wide> SpecialValues::zeta_taylor_w(wide u, int K) const {
    if (K < 0) throw std::invalid_argument("zeta_taylor: K must be >= 0");
    std::vector<wide> c(static_cast<std::size_t>(K) + 1, 0);
    if (u == 1) {
        c[0] = 1;
        wide fact = 1;
        for (int k = 1; k <= K; ++k) {
            if (k >= 2) fact *= static_cast<wide>(k - 1);
            const wide g = stieltjes_w(k - 1);
            c[static_cast<std::size_t>(k)] = ((k - 1) % 2 == 0 ? g : -g) / fact;
        }
        return c;
    }
    if (K >= 1) {
        const auto d = riemann_zeta_derivs(u, K - 1);
        wide fact = 1;
        for (int k = 1; k <= K; ++k) {
            if (k >= 2) fact *= static_cast<wide>(k - 1);
            c[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k) - 1] / fact;
        }
        if (is_integer(u) && u <= 0) c[1] = zeta_w(u);  // Bernoulli closed form
    }
    return c;
}

LaurentCoeffs SpecialValues::gamma_taylor(double u, int K) const {
    LaurentCoeffs lc;
    lc.center = u;
    lc.kind = LaurentCoeffs::Kind::gamma;
    for (wide x : gamma_taylor_w(static_cast<wide>(u), K)) lc.coeffs.push_back(to_double(x));
    return lc;
}

LaurentCoeffs SpecialValues::zeta_taylor(double u, int K) const {
    LaurentCoeffs lc;
    lc.center = u;
    lc.kind = LaurentCoeffs::Kind::zeta;
    for (wide x : zeta_taylor_w(static_cast<wide>(u), K)) lc.coeffs.push_back(to_double(x));
    return lc;
}

wide SpecialValues::k_ell_w(int ell) const {
    if (ell < 1) throw std::invalid_argument("k_ell: ell must be >= 1");
    wide acc = 1;
    for (int i = 2; i <= ell - 1; ++i) acc *= static_cast<wide>(i);  // (ell-1)!
    for (int i = 2; i <= ell; ++i) acc *= zeta_w(static_cast<wide>(i));
    return acc;
}

const SpecialValues& special_values() {
    static const SpecialValues engine;
    return engine;
}

}  // namespace orbitasym
