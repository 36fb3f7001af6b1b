#pragma once

#include "trizeta/nonarch.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace trizeta {

struct NonarchOracleConfig {
    int n_max = 80;
    double tol = 1e-9;
};

struct NonarchOracleResult {
    double istar = 0.0;      // normalized value, compare with the closed form
    double raw = 0.0;        // truncated lattice sum before normalization
    double tail_bound = 0.0; // geometric tail estimate of the truncation
    bool converged = true;   // tail below tolerance (always true for exact sums)
    std::optional<Rat> exact_istar; // division cases: exact two-term evaluation
};

/// Truncated Iwahori / Cartan sum for the matrix-algebra cases, or the exact
/// two-cell sum for the division-algebra cases, normalized by
/// zeta_F(2)/zeta_E(2) * L(1,Ad)/L(1/2,r).
///
/// satake[i] supplies the Satake parameter of a spherical component in slot
/// i (ignored at special slots, defaults to 1). The convergence guard
/// requires |alpha| inside (q^-0.49, q^0.49).
NonarchOracleResult zeta_nonarch_oracle(const NonarchCase& c,
                                        const std::vector<std::complex<double>>& satake,
                                        const NonarchOracleConfig& cfg = {});

/// Division-algebra evaluation with exact rational Satake parameters.
Rat zeta_division_exact(const NonarchCase& c, const std::vector<Rat>& satake);

/// Every supported case at residue size q, matrix and division.
std::vector<NonarchCase> enumerate_cases(long q);

struct NonarchSweepRow {
    std::string label;
    long q;
    double istar_oracle;
    double istar_closed;
    double rel_err;
    bool converged;
};

std::vector<NonarchSweepRow> nonarch_sweep(const std::vector<NonarchCase>& cases,
                                           const std::vector<std::complex<double>>& satake,
                                           const NonarchOracleConfig& cfg, bool parallel);

} // namespace trizeta
