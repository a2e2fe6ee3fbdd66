#include "orbitasym/constants_pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitasym/errors.hpp"
#include "orbitasym/series.hpp"
#include "orbitasym/special_values.hpp"

namespace orbitasym {

namespace {

void require_h_series_ell(int ell) {
    if (ell < 4) throw std::invalid_argument("constants pipeline: H-series sequences need ell >= 4");
}

std::vector<double> narrow(const std::vector<wide>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (wide x : v) out.push_back(to_double(x));
    return out;
}

// Sum over compositions (parts >= min_part) of `total` into `slots`
// parts, of the product of weight(part_i).  Plain recursion; totals here
// are <= ~12 so the state space is tiny.
void for_each_composition(int total, int slots, int min_part,
                          const std::vector<wide>& weight, wide partial,
                          wide& acc) {
    if (slots == 0) {
        if (total == 0) acc += partial;
        return;
    }
    const int lo = min_part;
    for (int part = lo; part <= total - min_part * (slots - 1); ++part) {
        const wide w = weight[static_cast<std::size_t>(part)];
        if (w == 0) continue;
        for_each_composition(total - part, slots - 1, min_part, weight, partial * w, acc);
    }
}

wide composition_sum(int total, int slots, int min_part, const std::vector<wide>& weight) {
    if (total < min_part * slots) return 0;
    wide acc = 0;
    for_each_composition(total, slots, min_part, weight, 1, acc);
    return acc;
}

Series<wide> to_series(const std::vector<wide>& coeffs, int order) {
    Series<wide> s(order);
    for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) s[i] = coeffs[static_cast<std::size_t>(i)];
    return s;
}

}  // namespace

std::vector<wide> a_sequence_w(int ell, int max_j) {
    require_h_series_ell(ell);
    const auto& sv = special_values();
    std::vector<wide> a(static_cast<std::size_t>(max_j) + 1, 0);
    a[0] = 1;
    if (max_j >= 1) a[1] = sv.zeta_w(0) / ((ell - 1) * sv.zeta_w(ell));
    if (max_j >= 2)
        a[2] = sv.zeta_w(-1) * sv.zeta_w(0) /
               ((ell - 1) * (ell - 2) * sv.zeta_w(ell - 1) * sv.zeta_w(ell));
    return a;
}

std::vector<wide> b_sequence_w(int ell, int max_j) {
    require_h_series_ell(ell);
    const auto& sv = special_values();
    std::vector<wide> b(static_cast<std::size_t>(max_j) + 1, 0);
    b[0] = 1;
    if (max_j >= 1) b[1] = sv.zeta_w(0) / ((ell - 2) * sv.zeta_w(ell));
    if (max_j >= 2)
        b[2] = sv.zeta_w(-1) * sv.zeta_w(0) /
               ((ell - 2) * (ell - 3) * sv.zeta_w(ell - 1) * sv.zeta_w(ell));
    if (ell - 1 <= max_j) {
        if (ell == 4)
            b[3] = sv.zeta_deriv_w(-2) * sv.zeta_w(-1) * sv.zeta_w(0) /
                   (2 * sv.zeta_w(2) * sv.zeta_w(3) * sv.zeta_w(4));
        else if (ell == 5)
            b[4] = sv.zeta_w(-3) * sv.zeta_deriv_w(-2) * sv.zeta_w(-1) * sv.zeta_w(0) /
                   (6 * sv.zeta_w(2) * sv.zeta_w(3) * sv.zeta_w(4) * sv.zeta_w(5));
        // ell >= 6: zero
    }
    return b;
}

std::vector<wide> c_sequence_w(int ell, int max_j) {
    // C_j = sum_m B_m sum_k (-1)^k sum_{j_1..j_k >= 1, m + sum j_i = j-1} A_{j_1}..A_{j_k}.
    // A vanishes beyond index 2, so the inner tuples only use parts 1 and 2.
    const auto a = a_sequence_w(ell, 2);
    const auto b = b_sequence_w(ell, std::max(2, ell - 1));
    std::vector<wide> c(static_cast<std::size_t>(max_j) + 1, 0);
    for (int j = 1; j <= max_j; ++j) {
        wide acc = 0;
        for (int m = 0; m < static_cast<int>(b.size()); ++m) {
            if (b[static_cast<std::size_t>(m)] == 0 || m > j - 1) continue;
            const int rest = j - 1 - m;
            // n1 parts equal to 1, n2 parts equal to 2; ordered tuples.
            for (int n2 = 0; 2 * n2 <= rest; ++n2) {
                const int n1 = rest - 2 * n2;
                wide multinom = 1;  // (n1+n2)! / (n1! n2!)
                for (int i = 1; i <= n2; ++i)
                    multinom = multinom * static_cast<wide>(n1 + i) / static_cast<wide>(i);
                wide term = multinom;
                for (int i = 0; i < n1; ++i) term *= a[1];
                for (int i = 0; i < n2; ++i) term *= a[2];
                if ((n1 + n2) % 2 == 1) term = -term;
                acc += b[static_cast<std::size_t>(m)] * term;
            }
        }
        c[static_cast<std::size_t>(j)] = acc;
    }
    return c;
}

std::vector<wide> c_sequence_series_w(int ell, int max_j) {
    // h(t)/t = V(t)/U(t); C_j = [t^{j-1}] V/U.
    const int order = max_j;  // need coefficients up to t^{max_j - 1}
    const Series<wide> u = to_series(a_sequence_w(ell, order), order);
    const Series<wide> v = to_series(b_sequence_w(ell, std::max(order, ell - 1)), order);
    const Series<wide> inv_u = series_exp(wide(-1) * series_log(u));
    const Series<wide> ratio = v * inv_u;
    std::vector<wide> c(static_cast<std::size_t>(max_j) + 1, 0);
    for (int j = 1; j <= max_j; ++j) c[static_cast<std::size_t>(j)] = ratio[j - 1];
    return c;
}

std::vector<wide> d_sequence_w(int ell, int max_j) {
    // D_p = 1/p! sum over part multiplicities (m_j)_{j>=2} with
    // sum (j-1) m_j = p-1 of (sum j m_j)! / prod m_j! * (-1)^{sum m_j}
    // * prod C_j^{m_j}.
    const auto c = c_sequence_w(ell, max_j);
    std::vector<wide> d(static_cast<std::size_t>(max_j) + 1, 0);
    if (max_j >= 1) d[1] = 1;
    for (int p = 2; p <= max_j; ++p) {
        wide acc = 0;
        // Recursive enumeration over parts j = 2..p with multiplicities.
        struct Rec {
            const std::vector<wide>& c;
            wide total = 0;
            void go(int j, int remaining, long sum_jm, long sum_m, wide prod) {
                if (remaining == 0) {
                    wide fact = 1;
                    for (long i = 2; i <= sum_jm; ++i) fact *= static_cast<wide>(i);
                    total += (sum_m % 2 == 0 ? fact : -fact) * prod;
                    return;
                }
                if (j - 1 > remaining) return;
                go(j + 1, remaining, sum_jm, sum_m, prod);
                // take one or more parts of size j
                wide pw = prod;
                long mj = 0;
                int rem = remaining;
                wide mj_fact = 1;
                while (rem >= j - 1) {
                    rem -= j - 1;
                    ++mj;
                    mj_fact *= static_cast<wide>(mj);
                    pw *= c[static_cast<std::size_t>(j)];
                    go(j + 1, rem, sum_jm + j * mj, sum_m + mj, pw / mj_fact);
                }
            }
        } rec{c};
        rec.go(2, p - 1, 0, 0, 1);
        wide pfact = 1;
        for (int i = 2; i <= p; ++i) pfact *= static_cast<wide>(i);
        acc = rec.total / pfact;
        d[static_cast<std::size_t>(p)] = acc;
    }
    return d;
}

std::vector<wide> d_sequence_revert_w(int ell, int max_j) {
    const auto c = c_sequence_series_w(ell, max_j);
    const Series<wide> cs = to_series(c, max_j);  // z + C_2 z^2 + ...
    const Series<wide> rev = series_revert(cs);
    std::vector<wide> d(static_cast<std::size_t>(max_j) + 1, 0);
    for (int p = 1; p <= max_j; ++p) d[static_cast<std::size_t>(p)] = rev[p];
    return d;
}

EfghSequences efgh_sequences_w(int ell, int max_j) {
    require_h_series_ell(ell);
    const auto a = a_sequence_w(ell, std::max(2, max_j));
    const auto c = c_sequence_w(ell, max_j + 2);
    const auto d = d_sequence_w(ell, max_j + 1);

    EfghSequences out;
    out.e.assign(static_cast<std::size_t>(max_j) + 1, 0);
    out.f.assign(static_cast<std::size_t>(max_j) + 1, 0);
    out.g.assign(static_cast<std::size_t>(max_j) + 1, 0);
    out.h.assign(static_cast<std::size_t>(max_j) + 1, 0);

    // Weight C_{j_i + 1} for nonnegative parts: shifted C array.
    std::vector<wide> c_shift(static_cast<std::size_t>(max_j) + 1, 0);
    for (int i = 0; i <= max_j; ++i) c_shift[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i) + 1];

    for (int j = 1; j <= max_j; ++j) {
        wide acc = 0;
        for (int k = 0; k <= std::min(2, j); ++k) {
            if (a[static_cast<std::size_t>(k)] == 0) continue;
            acc += a[static_cast<std::size_t>(k)] * composition_sum(j - k, ell, 0, c_shift);
        }
        out.e[static_cast<std::size_t>(j)] = acc;
    }

    for (int j = 1; j <= max_j; ++j) {
        wide acc = 0;
        for (int k = 1; k <= j; ++k) {
            if (out.e[static_cast<std::size_t>(k)] == 0) continue;
            acc += out.e[static_cast<std::size_t>(k)] * composition_sum(j, k, 1, d);
        }
        wide scale = 1;
        for (int i = 0; i < j; ++i) scale *= static_cast<wide>(ell - 1);
        out.f[static_cast<std::size_t>(j)] = scale * acc;
    }

    for (int j = 1; j <= max_j; ++j) {
        wide acc = 0;
        for (int k = 1; k <= j; ++k) {
            const wide s = composition_sum(j, k, 1, out.f);
            if (s == 0) continue;
            acc += (k % 2 == 1 ? s : -s) / static_cast<wide>(k);
        }
        out.g[static_cast<std::size_t>(j)] = acc;
    }

    for (int j = 1; j <= max_j; ++j) {
        wide scale = 1;
        for (int i = 0; i < j + 1; ++i) scale *= static_cast<wide>(ell - 1);
        out.h[static_cast<std::size_t>(j)] = scale * d[static_cast<std::size_t>(j) + 1] + out.g[static_cast<std::size_t>(j)];
    }
    return out;
}

std::vector<wide> h_sequence_series_w(int ell, int max_j) {
    require_h_series_ell(ell);
    const int order = max_j + 1;
    const Series<wide> u = to_series(a_sequence_w(ell, order), order);
    const auto c = c_sequence_series_w(ell, order);
    const auto d_rev = d_sequence_revert_w(ell, order);

    // ratio series h/t = 1 + C_2 t + C_3 t^2 + ...
    Series<wide> ratio(order);
    for (int i = 0; i <= order; ++i)
        ratio[i] = (i + 1 < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i) + 1] : wide(0);

    // E-hat(t) = U(t) (h/t)^ell
    Series<wide> ehat = u;
    for (int i = 0; i < ell; ++i) ehat = ehat * ratio;

    // t(u) = sum_p D_p ((ell-1) u)^p
    Series<wide> t_of_u(order);
    wide scale = 1;
    for (int p = 1; p <= order; ++p) {
        scale *= static_cast<wide>(ell - 1);
        t_of_u[p] = d_rev[static_cast<std::size_t>(p)] * scale;
    }

    // ln(E-hat(t(u))) = -ln(1+eta); add (ell-1) eps series H_j = (l-1)^{j+1} D_{j+1} + G_j.
    const Series<wide> g_series = series_log(series_compose(ehat, t_of_u));
    std::vector<wide> h(static_cast<std::size_t>(max_j) + 1, 0);
    for (int j = 1; j <= max_j; ++j) {
        wide sc = 1;
        for (int i = 0; i < j + 1; ++i) sc *= static_cast<wide>(ell - 1);
        h[static_cast<std::size_t>(j)] = sc * d_rev[static_cast<std::size_t>(j) + 1] + g_series[j];
    }
    return h;
}

std::pair<wide, wide> i_constants_w() {
    const auto& sv = special_values();
    const wide i1log = -sv.zeta_w(0) / sv.zeta_w(2);
    const wide i1 = sv.zeta_deriv_w(0) / sv.zeta_w(2);
    const wide pi = wide_pi();
    const wide i1log_closed = 3 / (pi * pi);
    const wide i1_closed = -3 * wlog(2 * pi) / (pi * pi);
    if (wfabs(i1log - i1log_closed) > 1e-20Q || wfabs(i1 - i1_closed) > 1e-20Q)
        throw internal_error("i_constants: zeta route disagrees with closed forms");
    return {i1log, i1};
}

std::tuple<wide, wide, wide> j_constants_w() {
    const auto& sv = special_values();
    const wide z0 = sv.zeta_w(0);
    const wide zm1 = sv.zeta_w(-1);
    const wide z2 = sv.zeta_w(2);
    const wide z3 = sv.zeta_w(3);
    const wide z0p = sv.zeta_deriv_w(0);
    const wide zm1p = sv.zeta_deriv_w(-1);

    const wide j1 = 2 * z0 / z3;
    const wide j2log = -4 * zm1 * z0 / (z2 * z3);
    const wide j2 = (-3 * z0 * z0 * z2 - 4 * wlog(wide(2)) * zm1 * z0 * z3 + 4 * zm1p * z0 * z3 +
                     4 * zm1 * z0p * z3) /
                    (z2 * z3 * z3);

    if (wfabs(j1 - (-1 / z3)) > 1e-20Q || wfabs(j2log - (-1 / (wide_pi() * wide_pi() * z3))) > 1e-20Q)
        throw internal_error("j_constants: zeta route disagrees with closed forms");
    return {j1, j2log, j2};
}

std::pair<std::vector<double>, std::vector<double>> ab_sequences(int ell, int max_j) {
    return {narrow(a_sequence_w(ell, max_j)), narrow(b_sequence_w(ell, max_j))};
}

std::vector<double> c_sequence(int ell, int max_j) { return narrow(c_sequence_w(ell, max_j)); }

std::vector<double> d_sequence(int ell, int max_j) { return narrow(d_sequence_w(ell, max_j)); }

Efgh efgh_sequences(int ell, int max_j) {
    const EfghSequences w = efgh_sequences_w(ell, max_j);
    return {narrow(w.e), narrow(w.f), narrow(w.g), narrow(w.h)};
}

std::pair<double, double> i_constants() {
    const auto [a, b] = i_constants_w();
    return {to_double(a), to_double(b)};
}

std::tuple<double, double, double> j_constants() {
    const auto [a, b, c] = j_constants_w();
    return {to_double(a), to_double(b), to_double(c)};
}

CorrectionPolynomial correction_poly(int ell) {
    if (ell < 2) throw std::invalid_argument("correction_poly: ell must be >= 2");
    CorrectionPolynomial poly;
    poly.ell = ell;
    if (ell == 2) {
        const auto [i1log, i1] = i_constants();
        poly.coeffs = {i1log, i1};
    } else if (ell == 3) {
        const auto [j1, j2log, j2] = j_constants();
        poly.coeffs = {j1, j2log, j2};
    } else {
        const EfghSequences w = efgh_sequences_w(ell, ell - 1);
        for (int j = 1; j <= ell - 1; ++j) poly.coeffs.push_back(to_double(w.h[static_cast<std::size_t>(j)]));
    }
    return poly;
}

double eval_correction(const CorrectionPolynomial& poly, double u) {
    if (!(u > 0) || u > 1) throw std::invalid_argument("eval_correction: u must lie in (0, 1]");
    if (poly.ell == 2) return poly.coeffs[0] * u * std::log(u) + poly.coeffs[1] * u;
    if (poly.ell == 3)
        return poly.coeffs[0] * u + poly.coeffs[1] * u * u * std::log(u) + poly.coeffs[2] * u * u;
    double acc = 0.0, up = 1.0;
    for (double cj : poly.coeffs) {
        up *= u;
        acc += cj * up;
    }
    return acc;
}

double eval_correction(int ell, double u) { return eval_correction(correction_poly(ell), u); }

ConstantsBundle constants_bundle(int ell, int max_j) {
    if (ell < 2) throw std::invalid_argument("constants_bundle: ell must be >= 2");
    ConstantsBundle bundle;
    bundle.ell = ell;
    if (ell == 2) {
        bundle.kind = "I-pair";
        const auto [i1log, i1] = i_constants();
        bundle.values = {{"I_1log", i1log}, {"I_1", i1}};
    } else if (ell == 3) {
        bundle.kind = "J-triple";
        const auto [j1, j2log, j2] = j_constants();
        bundle.values = {{"J_1", j1}, {"J_2log", j2log}, {"J_2", j2}};
    } else {
        bundle.kind = "H-series";
        const auto [a, b] = ab_sequences(ell, max_j);
        const auto c = c_sequence(ell, max_j);
        const auto d = d_sequence(ell, max_j + 1);
        const Efgh efgh = efgh_sequences(ell, max_j);
        for (int j = 1; j <= std::min(max_j, ell - 1); ++j)
            bundle.values.push_back({"H_" + std::to_string(j), efgh.h[static_cast<std::size_t>(j)]});
        bundle.intermediates = {{"A", a}, {"B", b}, {"C", c}, {"D", d},
                                {"E", efgh.e}, {"F", efgh.f}, {"G", efgh.g}, {"H", efgh.h}};
    }
    return bundle;
}

}  // namespace orbitasym
