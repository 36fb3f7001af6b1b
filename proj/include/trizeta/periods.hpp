#pragma once

#include <string>
#include <utility>
#include <vector>

namespace trizeta {

/// Period class modulo Q(f,g)^x as an exponent vector over the symbols
/// (2 pi i), i, <f,f>, <g,g>, Omega+, Omega-. Rational prefactors are never
/// tracked; the equivalence is exponent-vector equality.
struct PeriodMonomial {
    int two_pi_i = 0;
    int imag_unit = 0;
    int pet_f = 0;
    int pet_g = 0;
    int omega_plus = 0;
    int omega_minus = 0;

    friend bool operator==(const PeriodMonomial&, const PeriodMonomial&) = default;
    std::string str() const;
};

enum class PeriodSign { Plus, Minus };
enum class DeligneKind { Sym2TensorF, Sym3 };

/// c^+- of Sym^2 M(g) (x) M(f) (branch by the regime kappa' >= 2 kappa vs
/// 2 kappa > kappa'), or of Sym^3 M(f). Weights must be positive even.
PeriodMonomial deligne_period(DeligneKind kind, int kappa, int kappa_prime, PeriodSign sign);

enum class MotiveKind { Mf, Sym2Mg, Tensor };

struct HodgeData {
    int weight = 0;
    std::vector<std::pair<int, int>> hodge_types; // (p, q), p + q = weight
    std::vector<int> filtration_jumps;            // distinct F^j jump indices
    int d_plus = 0;
    int d_minus = 0;
    int k0 = 0;    // number of distinct positive jump heights in the tensor grid
    int r_mid = 0; // the middle jump parameter of the appendix layouts
};

HodgeData hodge_data(MotiveKind kind, int kappa, int kappa_prime);

struct PeriodRatioTemplate {
    int w = 0;
    int epsilon = 1;            // (-1)^(kappa'/2 - 1)
    int numerator_two_pi_i = 0; // exponent of (2 pi i) in the numerator
    PeriodMonomial denominator;
    bool boundary_first_branch = false; // kappa' == 2 kappa goes to branch one
    std::string rendered;
};

/// The normalized central-value ratio template of the two headline
/// statements: numerator power of (2 pi i), denominator period, sign epsilon.
PeriodRatioTemplate period_ratio(DeligneKind kind, int kappa, int kappa_prime);

} // namespace trizeta
