#include "orbitasym/saddle_point.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "orbitasym/constants_pipeline.hpp"
#include "orbitasym/special_values.hpp"
#include "orbitasym/zfunctions.hpp"

namespace orbitasym {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// b_ell(m): (ell-1)-fold divisor convolution of m^(ell-2), ..., m^1, m^0;
// the exponent weights of the infinite product for G_ell.
std::vector<double> product_exponents(int ell, long max_m) {
    std::vector<double> acc(static_cast<std::size_t>(max_m), 0.0);
    acc[0] = 1.0;
    for (int power = ell - 2; power >= 0; --power) {
        std::vector<double> next(static_cast<std::size_t>(max_m), 0.0);
        for (long d = 1; d <= max_m; ++d) {
            const double w = std::pow(static_cast<double>(d), power);
            for (long m = d; m <= max_m; m += d)
                next[static_cast<std::size_t>(m) - 1] += acc[static_cast<std::size_t>(m / d) - 1] * w;
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

SaddleSolution solve(int ell, long n, long k) {
    if (ell < 2) throw std::invalid_argument("solve: ell must be >= 2");
    if (!(k > 0 && k < n)) throw std::invalid_argument("solve: need 0 < k < n");
    SaddleSolution sol;
    sol.ell = ell;
    sol.n = n;
    sol.k = k;
    const double v = static_cast<double>(ell - 1) * static_cast<double>(k) / static_cast<double>(n);
    sol.t_n = h_inverse(ell, v);
    const double z_ell = z_direct_rel(ZSpec::staircase(ell, ell), sol.t_n, 1e-14);
    const double z_minus = z_direct_rel(ZSpec::staircase(ell, ell - 1), sol.t_n, 1e-14);
    const double z_plus = z_direct_rel(ZSpec::staircase(ell, ell + 1), sol.t_n, 1e-14);
    sol.rho_n = static_cast<double>(n) / z_ell;
    sol.lambda_n = 1.0 / std::sqrt(z_plus);
    sol.mu_n = 1.0 / std::sqrt(z_minus);
    return sol;
}

double starr(int ell, long n, long k) {
    if (ell < 2) throw std::invalid_argument("starr: ell must be >= 2");
    if (k < 1 || k > n) throw std::invalid_argument("starr: need 1 <= k <= n");
    const double kd = static_cast<double>(k);
    const double lnk = std::log(kd);
    const double lnn = std::log(static_cast<double>(n));
    const double ln_kell = std::log(special_values().k_ell(ell));
    return -ell * kd * lnk +
           kd * ((ell - 1) * lnn - ell * std::log(static_cast<double>(ell - 1)) + ell + ln_kell);
}

double log_prefactor(const SaddleSolution& sol) {
    return static_cast<double>(sol.n) * sol.t_n -
           static_cast<double>(sol.k) * std::log(sol.rho_n) + static_cast<double>(sol.k);
}

double exact_log_ratio(const CountTable& table, long n, long k) {
    const BigInt& a = table.at(static_cast<int>(n), static_cast<int>(k));
    if (a <= 0) throw std::invalid_argument("exact_log_ratio: count is zero");
    return log_bigint(a) - std::lgamma(static_cast<double>(n));
}

EstimateReport estimate(int ell, long n, long k, const CountTable* exact) {
    if (ell < 2) throw std::invalid_argument("estimate: ell must be >= 2");
    if (!(k > 0 && k < n)) throw std::invalid_argument("estimate: need 0 < k < n");
    EstimateReport rep;
    rep.ell = ell;
    rep.n = n;
    rep.k = k;
    rep.starr = starr(ell, n, k);
    const double u = static_cast<double>(k) / static_cast<double>(n);
    rep.correction = static_cast<double>(k) * eval_correction(ell, u);
    const double front = std::log(std::sqrt(static_cast<double>(ell - 1)) / kTwoPi);
    rep.estimate_log = front + rep.starr + rep.correction;
    const SaddleSolution sol = solve(ell, n, k);
    rep.prefactor_log = log_prefactor(sol);
    rep.alt_estimate_log = rep.prefactor_log + front;
    if (exact != nullptr) rep.exact_log = exact_log_ratio(*exact, n, k);
    return rep;
}

CauchyResult cauchy_integral(int ell, long n, long k, int grid, int max_doublings, int threads) {
    if (grid < 16) throw std::invalid_argument("cauchy_integral: grid must be >= 16");
    if (threads < 1) throw std::invalid_argument("cauchy_integral: threads must be >= 1");
    const SaddleSolution sol = solve(ell, n, k);
    const double t = sol.t_n;
    const double rho = sol.rho_n;

    // Truncate L_ell(e^{-t+i theta}) = sum_m b(m) (-Log(1 - z^m)) where
    // e^{-m t} drops below 1e-18.
    const long max_m = static_cast<long>(std::ceil(18.0 * std::log(10.0) / t)) + 2;
    const std::vector<double> b = product_exponents(ell, max_m);

    const std::complex<double> i_unit(0.0, 1.0);
    auto l_value = [&](double theta) {
        std::complex<double> acc(0.0, 0.0);
        for (long m = 1; m <= max_m; ++m) {
            if (b[static_cast<std::size_t>(m) - 1] == 0.0) continue;
            const std::complex<double> zm =
                std::polar(std::exp(-static_cast<double>(m) * t), static_cast<double>(m) * theta);
            acc -= b[static_cast<std::size_t>(m) - 1] * std::log(1.0 - zm);
        }
        return acc;
    };
    const double l0 = l_value(0.0).real();

    CauchyResult res;
    double prev = 0.0;
    bool have_prev = false;
    int g = grid;
    for (int pass = 0; pass <= max_doublings; ++pass, g *= 2) {
        // Uniform grid containing the origin; spectrally accurate for the
        // periodic integrand.
        std::vector<std::complex<double>> lvals(static_cast<std::size_t>(g));
        std::vector<double> thetas(static_cast<std::size_t>(g));
        for (int i = 0; i < g; ++i) {
            thetas[static_cast<std::size_t>(i)] = -M_PI + kTwoPi * i / g;
            lvals[static_cast<std::size_t>(i)] = l_value(thetas[static_cast<std::size_t>(i)]);
        }
        std::vector<double> omegas(static_cast<std::size_t>(g));
        std::vector<std::complex<double>> eiw(static_cast<std::size_t>(g));
        for (int j = 0; j < g; ++j) {
            omegas[static_cast<std::size_t>(j)] = -M_PI + kTwoPi * j / g;
            eiw[static_cast<std::size_t>(j)] = std::polar(1.0, omegas[static_cast<std::size_t>(j)]);
        }

        std::vector<double> row_sums(static_cast<std::size_t>(g), 0.0);
        std::vector<double> row_max(static_cast<std::size_t>(g), 0.0);
        std::vector<int> row_argmax(static_cast<std::size_t>(g), 0);
        auto run_rows = [&](int lo, int hi) {
            for (int i = lo; i < hi; ++i) {
                const double theta = thetas[static_cast<std::size_t>(i)];
                const std::complex<double> li = lvals[static_cast<std::size_t>(i)];
                double sum = 0.0, comp = 0.0;  // Kahan
                double mx = -1.0;
                int arg = 0;
                for (int j = 0; j < g; ++j) {
                    const std::complex<double> w =
                        rho * (eiw[static_cast<std::size_t>(j)] * li - l0) -
                        i_unit * (static_cast<double>(n) * theta +
                                  static_cast<double>(k) * omegas[static_cast<std::size_t>(j)]);
                    const double mod = std::exp(w.real());
                    if (mod > mx) {
                        mx = mod;
                        arg = j;
                    }
                    const double val = mod * std::cos(w.imag());
                    const double y = val - comp;
                    const double s = sum + y;
                    comp = (s - sum) - y;
                    sum = s;
                }
                row_sums[static_cast<std::size_t>(i)] = sum;
                row_max[static_cast<std::size_t>(i)] = mx;
                row_argmax[static_cast<std::size_t>(i)] = arg;
            }
        };
        if (threads <= 1) {
            run_rows(0, g);
        } else {
            std::vector<std::thread> pool;
            const int chunk = (g + threads - 1) / threads;
            for (int c = 0; c < threads; ++c) {
                const int lo = c * chunk, hi = std::min(g, lo + chunk);
                if (lo < hi) pool.emplace_back(run_rows, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        double total = 0.0, comp = 0.0;
        double mx = -1.0;
        int arg_i = 0;
        for (int i = 0; i < g; ++i) {
            const double y = row_sums[static_cast<std::size_t>(i)] - comp;
            const double s = total + y;
            comp = (s - total) - y;
            total = s;
            if (row_max[static_cast<std::size_t>(i)] > mx) {
                mx = row_max[static_cast<std::size_t>(i)];
                arg_i = i;
            }
        }
        const double value = total / (static_cast<double>(g) * static_cast<double>(g));

        res.value = value;
        res.grid_used = g;
        res.integrand_max = mx;
        res.integrand_max_theta = thetas[static_cast<std::size_t>(arg_i)];
        res.integrand_max_omega = omegas[static_cast<std::size_t>(row_argmax[static_cast<std::size_t>(arg_i)])];
        if (have_prev && std::abs(value - prev) <= 1e-8 * std::abs(value)) {
            res.converged = true;
            res.previous = prev;
            return res;
        }
        res.previous = prev;
        prev = value;
        have_prev = true;
    }
    res.converged = false;
    return res;
}

}  // namespace orbitasym
