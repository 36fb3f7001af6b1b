#pragma once

#include "trizeta/halfint.hpp"
#include "trizeta/pi_monomial.hpp"
#include "trizeta/satake.hpp"

namespace trizeta {

enum class FieldKind { Real, Complex, NonArch };

/// zeta_R(s) = pi^(-s/2) Gamma(s/2), exact. Throws PoleError at poles.
PiMonomial zeta_real(HalfInt s);

/// zeta_C(s) = 2 (2 pi)^(-s) Gamma(s) for integer s.
PiMonomial zeta_complex(int s);

/// zeta_F(s) = (1 - q^-s)^-1 for a non-archimedean field of residue size q.
/// Requires q^-s rational: integer s, or even twice-value with square q.
Rat zeta_nonarch(HalfInt s, long q);

/// The inverse factor (1 - X) of the non-archimedean local zeta function,
/// X = q^-s, for use inside LaurentLFactor products.
XPoly zeta_nonarch_inverse_factor();

/// Dispatcher used by the CLI; q ignored for archimedean kinds.
PiMonomial local_zeta(FieldKind kind, HalfInt s, long q = 0);

} // namespace trizeta
