#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trizeta/arch.hpp"
#include "trizeta/arch_oracle.hpp"

#include <cmath>

using namespace trizeta;

TEST_CASE("norm consistency: closed pairing vs 1-D quadrature") {
    for (int k = 1; k <= 8; ++k) {
        for (int m = 0; m <= 3; ++m) {
            double closed = pairing_norm_closed(k, m).to_double();
            double oracle = pairing_norm_oracle(k, m);
            CHECK(std::abs(oracle - closed) / std::abs(closed) < 1e-9);
        }
    }
}

TEST_CASE("matrix coefficient agrees with the pairing-based oracle") {
    // Phi(h; V^m) = B(rho(h) W^m, W^m) / B(rho(tau) W, W); at a=-1, x=0 the
    // numerator is the quadrature of the norm integrand.
    int k = 2, m = 1;
    double numer = pairing_norm_oracle(k, m);
    double denom = pairing_norm_closed(k, 0).to_double();
    double phi = matrix_coeff_raised(k, m, -1.0, 0.0).real();
    CHECK(std::abs(phi - numer / denom) / std::abs(phi) < 1e-10);
}

TEST_CASE("ikeda integrals vs quadrature") {
    CHECK(std::abs(ikeda1_quadrature(2, 1, 1) - 1.0) < 1e-9);
    CHECK(std::abs(ikeda1_quadrature(3, 1, 1) - 0.5) < 1e-9);
    double v = std::get<PiMonomial>(ikeda_integral_1(HalfInt{7}, HalfInt{3}, Rat(2))).to_double();
    CHECK(std::abs(ikeda1_quadrature(3.5, 1.5, 2) - v) / v < 1e-9);
    double pi = 3.14159265358979323846;
    CHECK(std::abs(ikeda2_quadrature(1, 1) - pi) < 1e-9);
    CHECK(std::abs(ikeda2_quadrature(2, 2) - pi / 2) < 1e-9);
    CHECK(std::abs(ikeda2_quadrature(2.5, 1.5) -
                   ikeda_integral_2(HalfInt{5}, HalfInt{3}).to_double()) < 1e-9);
}

TEST_CASE("unbalanced oracle reproduces I* on small triples") {
    for (auto [k1, k2, k3] : {std::array<int, 3>{2, 2, 4}, {2, 2, 6}, {2, 4, 6}}) {
        int m = (k3 - k1 - k2) / 2;
        ArchOracleResult r = zeta_unbalanced_oracle(k1, k2, k3, 0, m);
        double closed = zeta_unbalanced_closed(k1, k2, k3).istar.to_double();
        CHECK(r.converged);
        CHECK(std::abs(r.istar - closed) / closed < 1e-6);
    }
}

TEST_CASE("oracle raw integral matches the closed pre-normalization value") {
    UnbalancedClosed c = zeta_unbalanced_closed(2, 2, 4);
    ArchOracleResult r = zeta_unbalanced_oracle(2, 2, 4, 0, 0);
    CHECK(std::abs(r.raw_integral - c.integral.to_double()) / c.integral.to_double() < 1e-8);
}

TEST_CASE("split invariance of the raising operators") {
    ArchOracleResult a = zeta_unbalanced_oracle(2, 2, 6, 0, 1);
    ArchOracleResult b = zeta_unbalanced_oracle(2, 2, 6, 1, 0);
    CHECK(std::abs(a.istar - b.istar) / std::abs(a.istar) < 1e-6);
    CHECK_THROWS(zeta_unbalanced_oracle(2, 2, 6, 1, 1)); // m1+m2 != m
    CHECK_THROWS(zeta_unbalanced_oracle(2, 2, 2, 0, 0)); // balanced triple
}

TEST_CASE("rankin-selberg oracle vs closed form") {
    // the torus reduction is the right evaluation when m1+m2 = (k3-k1-k2)/2
    for (auto [k1, k2, k3, m1, m2] : {std::array<int, 5>{2, 2, 2, 0, 0},
                                      {2, 2, 4, 0, 0},
                                      {2, 2, 6, 1, 0},
                                      {2, 2, 6, 0, 1},
                                      {2, 2, 8, 2, 0},
                                      {2, 4, 8, 1, 0}}) {
        double closed = rankin_selberg_closed(k1, k2, k3, m1, m2).to_double();
        double oracle = rankin_selberg_oracle(k1, k2, k3, m1, m2);
        CHECK(std::abs(oracle - closed) / std::abs(closed) < 1e-8);
    }
}

TEST_CASE("split-invariance identity via raising constants") {
    // (c(k2,m1,m2)/c(k2,0,m))^2 (Psi(m1,m2)/Psi(0,m))^2 = 1
    int k1 = 2, k2 = 2, k3 = 6, m = 1;
    for (int m1 = 0; m1 <= m; ++m1) {
        int m2 = m - m1;
        Rat c_ratio = raising_constant(k2, m1, m2) / raising_constant(k2, 0, m);
        PiMonomial psi_ratio = rankin_selberg_closed(k1, k2, k3, m1, m2) /
                               rankin_selberg_closed(k1, k2, k3, 0, m);
        PiMonomial prod = PiMonomial::from_rat(c_ratio) * psi_ratio;
        CHECK(prod.pow(2) == PiMonomial::one());
    }
}

TEST_CASE("invariant vector is numerically SU(2)-invariant") {
    for (auto [k1, k2, k3] : {std::array<int, 3>{2, 2, 2}, {2, 4, 4}, {4, 4, 4}, {4, 6, 8}}) {
        BalancedTriple t(k1, k2, k3);
        double defect = invariant_vector_su2_defect(invariant_vector(t), 20, 20240801u);
        CHECK(defect < 1e-10);
    }
}

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
    auto triples = unbalanced_triples(8);
    ArchOracleConfig cfg;
    auto serial = unbalanced_sweep(triples, cfg, false);
    auto parallel = unbalanced_sweep(triples, cfg, true);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].istar_oracle == parallel[i].istar_oracle);
        CHECK(serial[i].istar_closed == parallel[i].istar_closed);
    }
}

TEST_CASE("triple enumeration") {
    auto u = unbalanced_triples(8);
    for (auto [k1, k2, k3] : u) {
        CHECK(k3 >= k1 + k2);
        CHECK((k1 + k2 + k3) % 2 == 0);
    }
    auto b = balanced_triples(8);
    for (auto [k1, k2, k3] : b) CHECK(2 * k3 < k1 + k2 + k3);
    CHECK(!u.empty());
    CHECK(!b.empty());
}
