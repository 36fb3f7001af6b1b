#pragma once

#include "trizeta/arch.hpp"
#include "trizeta/quadrature.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace trizeta {

struct ArchOracleConfig {
    QuadOptions quad{1e-10, 1e-16, 13};
    double tail_rel = 1e-13;
};

struct ArchOracleResult {
    double istar = 0.0;        // normalized value, compare against 2^(k1+k2-k3+1)
    double raw_integral = 0.0; // the trilinear integral before normalization
    bool converged = true;
    long evals = 0;
};

/// 2-D quadrature of the trilinear matrix-coefficient integral with raising
/// operators split (m1, m2), normalized by the exact archimedean factors.
/// Requires m1 + m2 = (k3 - k1 - k2)/2 >= 0.
ArchOracleResult zeta_unbalanced_oracle(int k1, int k2, int k3, int m1, int m2,
                                        const ArchOracleConfig& cfg = {});

/// 1-D quadrature of the Rankin-Selberg integrand reduced to the torus.
double rankin_selberg_oracle(int k1, int k2, int k3, int m1, int m2,
                             const ArchOracleConfig& cfg = {});

/// 1-D quadrature of the norm pairing: int_0^inf [2^m P^m(t) e^(-2 pi t)]^2 dt/t.
double pairing_norm_oracle(int k, int m, const ArchOracleConfig& cfg = {});

/// Numeric check of the ikeda integrals against quadrature.
double ikeda1_quadrature(double alpha, double beta, double z,
                         const ArchOracleConfig& cfg = {});
double ikeda2_quadrature(double alpha, double beta, const ArchOracleConfig& cfg = {});

/// Largest entrywise defect of the invariant tensor under n random SU(2)
/// elements (seeded, deterministic), relative to the largest entry.
double invariant_vector_su2_defect(const InvariantVector& v, int n_samples, uint64_t seed);

/// All weight triples k1 <= k2 <= k3 <= k_max with even sum, k_i >= min_k,
/// satisfying the unbalanced (k3 >= k1+k2) resp. strictly balanced condition.
std::vector<std::array<int, 3>> unbalanced_triples(int k_max, int min_k = 2);
std::vector<std::array<int, 3>> balanced_triples(int k_max, int min_k = 2);

struct UnbalancedSweepRow {
    int k1, k2, k3, m1, m2;
    double istar_oracle;
    double istar_closed;
    double rel_err;
    bool converged;
};

/// Oracle-vs-closed sweep over unbalanced triples. The parallel path assigns
/// one row per task and writes by index, so results are bit-identical to the
/// serial reference.
std::vector<UnbalancedSweepRow> unbalanced_sweep(const std::vector<std::array<int, 3>>& triples,
                                                 const ArchOracleConfig& cfg, bool parallel);

} // namespace trizeta
