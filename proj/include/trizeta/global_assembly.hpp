#pragma once

#include "trizeta/nonarch.hpp"
#include "trizeta/rat.hpp"
#include "trizeta/satake.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace trizeta {

enum class GlobalShape { Split, RealQuadTimesQ, RealCubicField };

/// Local data at one finite prime of the level (or a prime where the cubic
/// algebra ramifies).
struct LevelPrime {
    long p = 2;
    EtaleShape local_shape = EtaleShape::Split;
    bool field_ramified = false;
    std::vector<PadicComponent> comps;
};

/// Global input data: weights, the etale cubic algebra, square-free level
/// described prime by prime, class number and absolute discriminant.
struct GlobalDescriptor {
    std::array<int, 3> weights{2, 2, 2};
    GlobalShape shape = GlobalShape::Split;
    long disc = 1;
    long class_number = 1;
    std::vector<LevelPrime> level;

    void validate() const; // throws CaseError / PreconditionError
    int k_max() const { return std::max({weights[0], weights[1], weights[2]}); }
    int weight_sum() const { return weights[0] + weights[1] + weights[2]; }
    /// c = 3, 2, 1 for split, quad x Q, cubic field.
    int little_c() const;
    /// Norm of the level ideal down to Q.
    long level_norm() const;
};

/// Archimedean root number: +1 iff 2 max(k) >= k1+k2+k3 (unbalanced).
int epsilon_arch(int k1, int k2, int k3);

struct RamificationData {
    std::vector<long> sigma_d_finite; // finite places of Sigma_D
    bool arch_in_sigma = false;
    int global_sign = 1;   // product of all local root numbers
    long n_minus = 1;      // product over finite Sigma_D
    long m_level = 1;      // product of primes dividing the level norm
};

RamificationData quaternion_ramification(const GlobalDescriptor& g);

/// Number of level primes in one of the four special configurations.
int nu_count(const GlobalDescriptor& g);

struct CentralValueConstant {
    bool forced_zero = false; // global sign -1: central value vanishes
    bool balanced_side = false;
    int two_exponent = 0;
    long m = 1;
    int disc_half_exponent = -1; // always D_E^(-1/2) when not forced zero
    int nu = 0;
    std::string rendered;
    std::string solve_template;
};

CentralValueConstant central_constant(const GlobalDescriptor& g);

struct PeterssonConstant {
    int two_exponent = 0;
    long h = 1;
    long disc = 1;
    long level_norm = 1;
    std::string rendered;          // the exact prefactor, e.g. "2^-8"
    std::string symbolic_suffix;   // " * L(1,Pi,Ad)"
};

PeterssonConstant petersson_constant(const GlobalDescriptor& g);

enum class FactorizationKind { Sym2Twist, Sym3Twists };

struct PolyIdentityReport {
    XPoly lhs;
    XPoly rhs;
    bool equal = false;
};

/// Split-prime local L-factor factorizations, as exact polynomial identities
/// in X: degree 8 = 6 * 2 (Sym^2 x twist) and 8 = 4 + 2 + 2 (Sym^3, twists).
/// Variables: "a" for the Satake parameter of f, "b" for g.
PolyIdentityReport factorization_check(FactorizationKind kind);
PolyIdentityReport factorization_check_at(FactorizationKind kind, const Rat& satake_f,
                                          const Rat& satake_g);

} // namespace trizeta
