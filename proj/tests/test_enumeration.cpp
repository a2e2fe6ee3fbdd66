#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "orbitasym/enumeration.hpp"

using namespace orbitasym;

TEST_SUITE("enumeration") {

TEST_CASE("dirichlet coefficients") {
    for (int n = 1; n <= 10; ++n) CHECK(dirichlet_coeff(1, n) == Rational(1, n));
    CHECK(dirichlet_coeff(2, 2) == Rational(3, 2));
    CHECK(dirichlet_coeff(2, 4) == Rational(7, 4));
    CHECK(dirichlet_coeff(3, 2) == Rational(2 + 1 + Rational(1, 2)));  // (2,1,1),(1,2,1),(1,1,2)
}

TEST_CASE("log gf coefficients are positive with divisor-bounded denominators") {
    for (int ell = 1; ell <= 4; ++ell) {
        const LogGFSeries gf = log_gf_series(ell, 40);
        BigInt lcm = 1;
        for (int n = 1; n <= 40; ++n) {
            CHECK(gf.c(n) > 0);
            mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(n));
            Rational scaled = gf.c(n) * Rational(lcm);
            scaled.canonicalize();
            CHECK(scaled.get_den() == 1);
        }
    }
}

TEST_CASE("small tables match brute force") {
    const CountTable c1 = count_table(1, 5);
    const CountTable c2 = count_table(2, 4);
    const CountTable c3 = count_table(3, 3);
    for (int n = 0; n <= 5; ++n) {
        const CountTable b = brute_force_table(1, n);
        for (int k = 0; k <= n; ++k) CHECK(c1.at(n, k) == b.at(n, k));
    }
    for (int n = 0; n <= 4; ++n) {
        const CountTable b = brute_force_table(2, n);
        for (int k = 0; k <= n; ++k) CHECK(c2.at(n, k) == b.at(n, k));
    }
    for (int n = 0; n <= 3; ++n) {
        const CountTable b = brute_force_table(3, n);
        for (int k = 0; k <= n; ++k) CHECK(c3.at(n, k) == b.at(n, k));
    }
}

TEST_CASE("named small values") {
    const CountTable c1 = count_table(1, 3);
    CHECK(c1.at(3, 1) == 2);
    CHECK(c1.at(3, 2) == 3);
    CHECK(c1.at(3, 3) == 1);
    const CountTable c2 = count_table(2, 2);
    CHECK(c2.at(2, 1) == 3);
    CHECK(c2.at(2, 2) == 1);
    const CountTable b = brute_force_table(2, 2);
    CHECK(b.at(2, 1) == 3);
    CHECK(b.at(2, 2) == 1);
    for (int ell = 1; ell <= 4; ++ell) {
        const CountTable single = brute_force_table(ell, 1);
        CHECK(single.at(1, 1) == 1);
        CHECK(single.at(1, 0) == 0);
    }
}

TEST_CASE("structural identities") {
    for (int ell = 1; ell <= 4; ++ell) {
        const CountTable t = count_table(ell, 12);
        CHECK(t.at(0, 0) == 1);
        for (int n = 1; n <= 12; ++n) {
            CHECK(t.at(n, n) == 1);
            CHECK(t.at(n, 0) == 0);
        }
        if (ell >= 2)
            for (int n = 2; n <= 12; ++n) {
                const BigInt expected = ((BigInt(1) << ell) - 1) * n * (n - 1) / 2;
                CHECK(t.at(n, n - 1) == expected);
            }
    }
}

TEST_CASE("row sums") {
    const CountTable c2 = count_table(2, 20);
    const auto p = oracles::partition_counts(20);
    for (int n = 0; n <= 20; ++n)
        CHECK(commuting_tuple_count(c2, n) == p[static_cast<std::size_t>(n)] * oracles::factorial(n));
    CHECK(c2.row_sum(4) == 120);
    CHECK(c2.row_sum(6) == 7920);
    const CountTable c1 = count_table(1, 12);
    for (int n = 0; n <= 12; ++n) CHECK(commuting_tuple_count(c1, n) == oracles::factorial(n));
}

TEST_CASE("stirling recurrence and oracle rows") {
    const CountTable c1 = count_table(1, 12);
    const auto s = oracles::stirling_first(12);
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) CHECK(c1.at(n, k) == s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    // |s(n+1,k)| = |s(n,k-1)| + n |s(n,k)|
    for (int n = 1; n <= 11; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(c1.at(n + 1, k) == c1.at(n, k - 1) + n * c1.at(n, k));
}

TEST_CASE("brute force guard") {
    bool threw = false;
    try {
        brute_force_table(2, 7);
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("bound 6") != std::string::npos);
    }
    CHECK(threw);
    CHECK_THROWS_AS(brute_force_table(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_table(3, 6), std::invalid_argument);
}

TEST_CASE("csv and json export") {
    const CountTable t = count_table(2, 10);
    const std::string csv = t.to_csv();
    CHECK(csv.rfind("ell,n,k,count\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 67);  // header + 66 rows
    const std::string json = t.to_json();
    CHECK(json.find("\"count\":\"1\"") != std::string::npos);
    CHECK(json.find("\"ell\":2") != std::string::npos);
}

}  // TEST_SUITE
