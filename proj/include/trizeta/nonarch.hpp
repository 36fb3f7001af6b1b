#pragma once

#include "trizeta/pi_monomial.hpp"
#include "trizeta/rat.hpp"
#include "trizeta/satake.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace trizeta {

/// Spherical value Phi(diag(w^n,1)) as q^(half_exp/2) times a Laurent
/// polynomial in the Satake variable. The displayed rational function has
/// removable poles at alpha = +-1; this is the resolved polynomial form.
struct MacdonaldValue {
    int q_half_exp = 0; // power of q^(1/2)
    SatakePoly sym;     // Laurent polynomial in one variable

    std::complex<double> eval(std::complex<double> alpha, long q,
                              const std::string& var = "a") const;
};

/// Macdonald's formula for a spherical representation with Satake alpha.
MacdonaldValue macdonald(long q, int n, const std::string& var = "a");
std::complex<double> macdonald_value(std::complex<double> alpha, long q, int n);

/// Matrix coefficient of an unramified special representation:
/// chi(w^n) q^-|n| off the Weyl chamber flip, -chi(w^n) q^-|n-1| on it.
Rat special_matrix_coeff(int sign, long q, int n, bool weyl);

enum class EtaleShape { Split, QuadTimesF, CubicField };

struct PadicComponent {
    bool special = false;
    int sign = 1; // chi(w) for special components; ignored for spherical
};

/// One non-archimedean case: shape, ramification of the field part,
/// component kinds and the algebra side. Construction validates membership
/// in the supported enumeration and computes the matrix-algebra root number.
struct NonarchCase {
    EtaleShape shape;
    bool field_ramified = false; // K/F or E/F ramified (ignored for Split)
    bool division = false;
    long q = 2;
    std::vector<PadicComponent> comps; // Split: [pi1,pi2,pi3]; Quad: [pi'(K), pi(F)]; Cubic: [Pi]

    NonarchCase(EtaleShape shape_, bool ramified_, bool division_, long q_,
                std::vector<PadicComponent> comps_);

    int special_count() const;
    int sign_product() const;
    std::string label() const;
};

/// +1 iff the matrix-algebra Hom space is non-zero for the given data.
/// Accepts the component data irrespective of the division flag.
int nonarch_epsilon(EtaleShape shape, bool field_ramified, long q,
                    const std::vector<PadicComponent>& comps);

/// Standard local adjoint L-factor of one GL(2) component over a field of
/// residue size q_comp: spherical (1-a^2 X)(1-X)(1-a^-2 X), special (1-q^-1 X),
/// with X = q_comp^-s.
LaurentLFactor adjoint_Lfactor(bool special, long q_comp, const std::string& var = "a");

struct NonarchClosed {
    Rat istar;                      // exact normalized value
    FactorProduct integral_display; // pre-normalization integral per the proofs
    LaurentLFactor lfactor_r;       // L(s, Pi', r); X = q^-s, u = q^-1/2
    std::string case_label;
};

/// Closed forms for every supported case.
NonarchClosed zeta_nonarch_closed(const NonarchCase& c);

/// zeta_F(2)/zeta_E(2) for the case's etale shape, exact.
Rat nonarch_zeta_ratio(const NonarchCase& c);

/// L(1, Pi', Ad) as a LaurentLFactor-valued product evaluated numerically,
/// and its exact value for rational Satake parameters.
std::complex<double> nonarch_adjoint_value(const NonarchCase& c,
                                           const std::vector<std::complex<double>>& satake);

} // namespace trizeta
