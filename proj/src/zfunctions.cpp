#include "orbitasym/zfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "orbitasym/special_values.hpp"

namespace orbitasym {

namespace {

// Divisor-convolution table d(D) for D = 1..max_d, where d is the
// ell-fold convolution of the power laws d^(alpha_j - 1).
std::vector<double> product_weights(const ZSpec& spec, long max_d) {
    std::vector<double> acc(static_cast<std::size_t>(max_d), 0.0);
    acc[0] = 1.0;
    for (double alpha : spec.alphas) {
        std::vector<double> next(static_cast<std::size_t>(max_d), 0.0);
        for (long d = 1; d <= max_d; ++d) {
            const double w = std::pow(static_cast<double>(d), alpha - 1.0);
            for (long mult = d; mult <= max_d; mult += d) {
                const double base = acc[static_cast<std::size_t>(mult / d) - 1];
                if (base != 0.0) next[static_cast<std::size_t>(mult) - 1] += base * w;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// Weight tables are reused across calls: the saddle solve evaluates the
// same staircase spec at many nearby t values.
std::shared_ptr<const std::vector<double>> cached_weights(const ZSpec& spec, long max_d) {
    static std::mutex mu;
    static std::map<std::vector<double>, std::shared_ptr<const std::vector<double>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(spec.alphas);
        if (it != cache.end() && static_cast<long>(it->second->size()) >= max_d)
            return it->second;
    }
    auto fresh = std::make_shared<const std::vector<double>>(product_weights(spec, max_d));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[spec.alphas];
    if (!slot || slot->size() < fresh->size()) slot = fresh;
    return slot;
}

long tail_cutoff(const ZSpec& spec, double t, double eps) {
    double max_alpha = 0.0;
    for (double a : spec.alphas) max_alpha = std::max(max_alpha, a);
    const double q = max_alpha + spec.ell;  // d(D) <= D^q, crude
    const double denom = -std::expm1(-t / 2);
    const double target = std::log(eps / 10.0) + std::log(denom);
    double d0 = std::max(2.0 * q / t, 4.0);
    for (int it = 0; it < 200; ++it) {
        const double next = std::max((q * std::log(d0) - target) / t, 2.0 * q / t);
        if (next <= d0 + 0.5) break;
        d0 = next;
    }
    if (!(d0 < 5e7))
        throw std::invalid_argument("z_direct: cutoff too large (t or eps too small)");
    return static_cast<long>(std::ceil(d0)) + 1;
}

}  // namespace

ZSpec ZSpec::staircase(int ell, int m) {
    if (ell < 1) throw std::invalid_argument("staircase: ell must be >= 1");
    ZSpec s;
    s.ell = ell;
    for (int j = 0; j < ell; ++j) s.alphas.push_back(static_cast<double>(m - j));
    return s;
}

ZDirectResult z_direct_info(const ZSpec& spec, double t, double eps) {
    if (!(t > 0)) throw std::invalid_argument("z_direct: t must be > 0");
    if (!(eps > 0)) throw std::invalid_argument("z_direct: eps must be > 0");
    if (static_cast<int>(spec.alphas.size()) != spec.ell)
        throw std::invalid_argument("z_direct: alphas size must equal ell");
    if (spec.ell == 0) return {std::exp(-t), 1};

    const long max_d = tail_cutoff(spec, t, eps);
    const auto wts = cached_weights(spec, max_d);
    long double sum = 0.0L;
    for (long d = max_d; d >= 1; --d)  // smallest terms first
        sum += static_cast<long double>((*wts)[static_cast<std::size_t>(d) - 1]) *
               expl(-static_cast<long double>(d) * t);
    return {static_cast<double>(sum), max_d};
}

double z_direct(const ZSpec& spec, double t, double eps) { return z_direct_info(spec, t, eps).value; }

double z_direct_rel(const ZSpec& spec, double t, double rel_eps) {
    if (!(t > 0)) throw std::invalid_argument("z_direct_rel: t must be > 0");
    if (!(rel_eps > 0)) throw std::invalid_argument("z_direct_rel: rel_eps must be > 0");
    // Z >= e^{-t} always (the D=1 term); bootstrap a magnitude estimate.
    const double floor_mag = std::exp(-t);
    const double rough = z_direct(spec, t, floor_mag);
    const double eps = rel_eps * 0.5 * std::max(rough, floor_mag);
    return z_direct(spec, t, eps);
}

wide c_coeff_w(const ZSpec& spec, wide a, int b) {
    if (static_cast<int>(spec.alphas.size()) != spec.ell)
        throw std::invalid_argument("c_coeff: alphas size must equal ell");
    if (b < 0 || b > spec.ell) return 0;
    const int ell = spec.ell;
    const int order = ell - b;
    if (order < 0) return 0;
    const auto& sv = special_values();
    // [z^{ell-b}] of zGamma(-a+z) * prod_j zZeta(-a+1-alpha_j+z), / b!.
    std::vector<wide> prod = sv.gamma_taylor_w(-a, order);
    for (double alpha : spec.alphas) {
        const std::vector<wide> zf = sv.zeta_taylor_w(-a + 1 - static_cast<wide>(alpha), order);
        std::vector<wide> next(static_cast<std::size_t>(order) + 1, 0);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                next[static_cast<std::size_t>(i + j)] += prod[static_cast<std::size_t>(i)] * zf[static_cast<std::size_t>(j)];
        prod = std::move(next);
    }
    wide bfact = 1;
    for (int i = 2; i <= b; ++i) bfact *= static_cast<wide>(i);
    return prod[static_cast<std::size_t>(order)] / bfact;
}

double c_coeff(const ZSpec& spec, double a, int b) {
    return to_double(c_coeff_w(spec, static_cast<wide>(a), b));
}

AsymptoticExpansion staircase_expansion(int ell, int m, double N) {
    if (ell < 1) throw std::invalid_argument("staircase_expansion: ell must be >= 1");
    const auto& sv = special_values();
    AsymptoticExpansion exp;
    const int s_lo = -m, s_hi = -m + ell - 1;  // S_{ell,m}
    const int a_lo = std::min(0, s_lo);
    for (int a = a_lo; a <= static_cast<int>(std::floor(N)); ++a) {
        const bool in_s = a >= s_lo && a <= s_hi;
        const bool in_n = a >= 0;
        if (!in_s && !in_n) continue;
        const int pole_j = a + m + 1;  // zeta factor hitting the pole, if in range

        auto zeta_at = [&](int j) { return sv.zeta_w(static_cast<wide>(-a - m + j)); };

        if (in_n && !in_s) {
            wide coeff = 1;
            for (int i = 2; i <= a; ++i) coeff *= static_cast<wide>(i);
            coeff = (a % 2 == 0 ? 1 : -1) / coeff;
            for (int j = 1; j <= ell; ++j) coeff *= zeta_at(j);
            if (coeff != 0) exp.terms.push_back({static_cast<double>(a), 0, to_double(coeff)});
        } else if (in_s && !in_n) {
            wide coeff = 1;
            for (int i = 2; i <= -a - 1; ++i) coeff *= static_cast<wide>(i);  // (-a-1)!
            for (int j = 1; j <= ell; ++j)
                if (j != pole_j) coeff *= zeta_at(j);
            if (coeff != 0) exp.terms.push_back({static_cast<double>(a), 0, to_double(coeff)});
        } else {
            wide afact = 1;
            for (int i = 2; i <= a; ++i) afact *= static_cast<wide>(i);
            const wide sign_over_fact = (a % 2 == 0 ? 1 : -1) / afact;
            wide zprod = 1;
            for (int j = 1; j <= ell; ++j)
                if (j != pole_j) zprod *= zeta_at(j);
            const wide c1 = sign_over_fact * zprod;
            if (c1 != 0) exp.terms.push_back({static_cast<double>(a), 1, to_double(c1)});

            wide harmonic = 0;
            for (int i = 1; i <= a; ++i) harmonic += wide(1) / static_cast<wide>(i);
            wide c0 = sign_over_fact * harmonic * zprod;
            for (int j = 1; j <= ell; ++j) {
                if (j == pole_j) continue;
                wide term = sv.zeta_deriv_w(static_cast<wide>(-a - m + j));
                for (int r = 1; r <= ell; ++r)
                    if (r != pole_j && r != j) term *= zeta_at(r);
                c0 += term;
            }
            if (c0 != 0) exp.terms.push_back({static_cast<double>(a), 0, to_double(c0)});
        }
    }
    return exp;
}

double eval_expansion(const AsymptoticExpansion& e, double t) {
    if (!(t > 0)) throw std::invalid_argument("eval_expansion: t must be > 0");
    const double nlt = -std::log(t);
    double acc = 0.0;
    for (const ExpansionTerm& term : e.terms)
        acc += term.coeff * std::pow(t, term.a) * std::pow(nlt, static_cast<double>(term.b));
    return acc;
}

double h(int ell, double t) {
    if (ell < 2) throw std::invalid_argument("h: ell must be >= 2");
    if (!(t > 0)) throw std::invalid_argument("h: t must be > 0");
    const double znum = z_direct_rel(ZSpec::staircase(ell, ell - 1), t, 1e-14);
    const double zden = z_direct_rel(ZSpec::staircase(ell, ell), t, 1e-14);
    return (ell - 1) * znum / zden;
}

double h_inverse(int ell, double v) {
    if (ell < 2) throw std::invalid_argument("h_inverse: ell must be >= 2");
    if (!(v > 0) || !(v < ell - 1))
        throw std::invalid_argument("h_inverse: v must lie in (0, ell-1)");

    const ZSpec lower = ZSpec::staircase(ell, ell - 1);
    const ZSpec mid = ZSpec::staircase(ell, ell);
    const ZSpec upper = ZSpec::staircase(ell, ell + 1);

    double lo = v, hi = v;
    while (h(ell, lo) > v) {
        lo /= 2;
        if (lo < 1e-300) throw std::runtime_error("h_inverse: bracketing failed below");
    }
    while (h(ell, hi) < v) {
        hi *= 2;
        if (hi > 1e3) throw std::runtime_error("h_inverse: bracketing failed above");
    }

    const double tol = 1e-12;
    double t = std::clamp(v, lo, hi);  // h ~ t near zero, so v is a good start
    for (int it = 0; it < 200; ++it) {
        const double zn = z_direct_rel(lower, t, 1e-14);
        const double zd = z_direct_rel(mid, t, 1e-14);
        const double hv = (ell - 1) * zn / zd;
        const double resid = hv - v;
        if (std::abs(resid) <= 0.5 * tol * v) return t;
        if (resid > 0)
            hi = t;
        else
            lo = t;
        // Newton step using h' = (ell-1)(Z_{l+1} Z_{l-1} - Z_l^2)/Z_l^2.
        const double zu = z_direct_rel(upper, t, 1e-14);
        const double hp = (ell - 1) * (zu * zn - zd * zd) / (zd * zd);
        double next = t - resid / hp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == t) return t;
        t = next;
    }
    return t;
}

}  // namespace orbitasym
