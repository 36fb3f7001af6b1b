#pragma once

#include "trizeta/halfint.hpp"
#include "trizeta/pi_monomial.hpp"
#include "trizeta/rat.hpp"

#include <array>
#include <complex>
#include <variant>
#include <vector>

namespace trizeta {

/// Polynomial part P^m of the raised Whittaker function: the weight k+2m
/// vector's restriction to the torus is 2^m P^m(a) e^(-2 pi a) on a > 0.
/// Coefficient of a^(k/2+j) is (-4 pi)^j C(m,j) Gamma(k+m)/Gamma(k+j).
struct WhittakerPoly {
    int k = 0;
    int m = 0;
    std::vector<PiMonomial> coeffs; // index j = 0..m

    int outer_two_power() const { return m; }
    HalfInt exponent(int j) const { return HalfInt{k + 2 * j}; }
    /// P^m(a), without the outer 2^m.
    double eval(double a) const;
    /// Full Whittaker value 2^m P^m(a) e^(-2 pi a) for a > 0, 0 otherwise.
    double whittaker_value(double a) const;
};

WhittakerPoly whittaker_poly(int k, int m);

/// One application of the weight-raising recursion
/// W^(m+1)(a) = 2a d/da W^m(a) + (k + 2m - 4 pi a) W^m(a), acting on P^m.
WhittakerPoly whittaker_raise(const WhittakerPoly& w);

/// Phi_pi(n(x) diag(a,1); V_+^m): vanishes for a > 0.
std::complex<double> matrix_coeff_raised(int k, int m, double a, double x);

/// Phi_pi(n(x) diag(a,1); tau): 2^k (-a)^(k/2) / [(1-a) - i x]^k on a < 0.
std::complex<double> matrix_coeff_tau(int k, double a, double x);

/// The pairing B(rho(n(x) diag(a,1)) W^m, W^m) in closed form.
std::complex<double> pairing_mc_closed(int k, int m, double a, double x);

/// B(rho(diag(-1,1)) W^m, W^m) = 4^(m-k) pi^-k Gamma(k+m) Gamma(m+1).
PiMonomial pairing_norm_closed(int k, int m);

/// int_0^inf t^beta (t+z)^-alpha dt/t = z^(beta-alpha) Gamma(alpha-beta)
/// Gamma(beta) / Gamma(alpha). Exact when beta-alpha is an integer.
std::variant<PiMonomial, double> ikeda_integral_1(HalfInt alpha, HalfInt beta, const Rat& z);
double ikeda_integral_1_value(double alpha, double beta, double z);

/// int_R dx / [(1+ix)^alpha (1-ix)^beta]
///   = 2^(2-alpha-beta) pi Gamma(alpha+beta-1) / (Gamma(alpha) Gamma(beta)).
/// Requires alpha+beta an integer > 1 for the exact 2-power.
PiMonomial ikeda_integral_2(HalfInt alpha, HalfInt beta);

/// zeta_C shift arguments mu_i with L(s, r) = prod_i zeta_C(s + mu_i).
std::vector<HalfInt> arch_r_factor_shifts(int k1, int k2, int k3, bool balanced);

/// Exact zeta_F(2)/zeta_E(2) * L(1,Ad)/L(1/2,r) for three discrete series.
PiMonomial arch_normalization(int k1, int k2, int k3, bool balanced);

struct UnbalancedClosed {
    PiMonomial integral; // pre-normalization value of the trilinear integral
    PiMonomial istar;    // 2^(k1+k2-k3+1)
    int m = 0;
};

/// Closed forms for the unbalanced archimedean case; requires k_i >= 1,
/// k1+k2+k3 even and k3 >= k1+k2 (k3 the maximum).
UnbalancedClosed zeta_unbalanced_closed(int k1, int k2, int k3);

/// c(pi, n, l) = 2^l Gamma(k+n+l)/Gamma(k+n).
Rat raising_constant(int k, int n, int l);

/// Value of the Rankin-Selberg integral Psi(W_1^(m1) x f_2^(m2) x rho(tau) W_3):
/// (-1)^m1 2^(k1+k3+m1) (4 pi)^(1-(k1+k2+k3)/2)
///   Gamma((k1+k2+k3)/2 - 1) Gamma(k2+m1+m2)/Gamma(k2+m2).
PiMonomial rankin_selberg_closed(int k1, int k2, int k3, int m1, int m2);

/// Balanced weight triple with the derived co-weights
/// k_i^* = (k_j + k_l - k_i - 2)/2, all required non-negative.
struct BalancedTriple {
    int k1, k2, k3;
    int ks1, ks2, ks3;
    BalancedTriple(int k1_, int k2_, int k3_);
};

/// Coefficient tensor of the invariant vector, indexed by the X-degree of
/// each slot (0..k_j-2).
class InvariantVector {
public:
    explicit InvariantVector(const BalancedTriple& t);
    const BalancedTriple& triple() const { return t_; }
    const Rat& at(int d1, int d2, int d3) const;
    int dim(int slot) const;
    bool nonzero() const;

private:
    friend InvariantVector invariant_vector(const BalancedTriple&);
    BalancedTriple t_;
    std::vector<Rat> data_;
    size_t index(int d1, int d2, int d3) const;
};

InvariantVector invariant_vector(const BalancedTriple& t);

/// <P,P> via the Gamma-ratio closed form.
Rat balanced_pairing_gamma(const BalancedTriple& t);
/// <P,P> via the finite bilinear expansion of the invariant vector.
Rat balanced_pairing_bilinear(const InvariantVector& v);
/// <P,P> via exact SU(2) moment integration (independent oracle).
Rat balanced_pairing_moment_oracle(const InvariantVector& v);

/// I* = (k1-1)(k2-1)(k3-1) / (4 pi^2).
PiMonomial zeta_balanced(const BalancedTriple& t);

} // namespace trizeta
