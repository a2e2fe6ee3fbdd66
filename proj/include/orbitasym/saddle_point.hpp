#pragma once

// Bivariate saddle solve, the explicit leading exponent, the asymptotic
// estimate of A(ell,n,k), and validation of the exact two-contour
// identity A(ell,n,k)/n! = M_ell(t_n, rho_n) * I_n by torus quadrature.

#include <optional>

#include "orbitasym/enumeration.hpp"

namespace orbitasym {

struct SaddleSolution {
    int ell = 2;
    long n = 0;
    long k = 0;
    double t_n = 0.0;     // h_ell^{-1}((ell-1) k / n)
    double rho_n = 0.0;   // n / Z_ell(t_n)
    double lambda_n = 0.0;  // Z_{ell+1}(t_n)^{-1/2}
    double mu_n = 0.0;      // Z_{ell-1}(t_n)^{-1/2}
};

struct EstimateReport {
    int ell = 2;
    long n = 0;
    long k = 0;
    double starr = 0.0;           // S_ell(n, k)
    double correction = 0.0;      // k * E_ell(k/n)
    double prefactor_log = 0.0;   // ln M_ell(t_n, rho_n) = n t - k ln rho + k
    double estimate_log = 0.0;    // ln(asymptotic estimate / (n-1)!)
    double alt_estimate_log = 0.0;  // prefactor route: ln M + ln(sqrt(ell-1)/(2 pi))
    std::optional<double> exact_log;  // ln(A(ell,n,k)/(n-1)!) when a table is given
};

struct CauchyResult {
    double value = 0.0;     // I_n
    int grid_used = 0;
    bool converged = false;
    double previous = 0.0;  // value at the previous grid, for diagnostics
    double integrand_max = 0.0;
    double integrand_max_theta = 0.0;
    double integrand_max_omega = 0.0;
};

SaddleSolution solve(int ell, long n, long k);

// S_ell(n,k) = -ell k ln k + k((ell-1) ln n - ell ln(ell-1) + ell + ln K_ell).
double starr(int ell, long n, long k);

double log_prefactor(const SaddleSolution& sol);

EstimateReport estimate(int ell, long n, long k, const CountTable* exact = nullptr);

// ln(A(ell,n,k)/(n-1)!) from an exact table.
double exact_log_ratio(const CountTable& table, long n, long k);

// I_n by periodic-trapezoid quadrature over the torus, doubling the grid
// until two successive values agree to 1e-8 relative.  `threads` > 1
// parallelizes rows; the reduction order is fixed either way.
CauchyResult cauchy_integral(int ell, long n, long k, int grid, int max_doublings = 8,
                             int threads = 1);

}  // namespace orbitasym
