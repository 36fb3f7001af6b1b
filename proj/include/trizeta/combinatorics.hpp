#pragma once

#include "trizeta/gamma.hpp"
#include "trizeta/halfint.hpp"
#include "trizeta/pi_monomial.hpp"

namespace trizeta {

/// Result of checking one combinatorial identity instance exactly.
struct IdentityReport {
    PiMonomial lhs;
    PiMonomial rhs;
    bool equal = false;
};

/// sum_{i=0}^{N} (-1)^i C(N,i) Gamma(z+i)/Gamma(w+i)
///   = Gamma(z)/Gamma(w-z) * Gamma(w-z+N)/Gamma(w+N).
IdentityReport identity1(int N, HalfInt z, HalfInt w);

/// Gamma(alpha+N) sum_{i=0}^{N} (-1)^i C(N,i)
///     Gamma(t+i)/Gamma(alpha+i) * Gamma(t+beta+alpha+N-1+i)/Gamma(2t+beta+i)
///   = (-1)^N Gamma(t) Gamma(t+beta+alpha+N-1)/Gamma(2t+beta+N)
///     * Gamma(t+beta+N)/Gamma(t+beta) * Gamma(t-alpha+1)/Gamma(t-alpha-N+1).
/// Degenerate Gamma arguments follow the reciprocal-Gamma convention.
IdentityReport identity2(int N, HalfInt t, HalfInt alpha, HalfInt beta);

/// sum_{j=0}^{n} (-1)^j C(a,j) C(a+b+n-j, a+b) = C(b+n, b), for a >= n.
IdentityReport identity3(int a, int b, int n);

} // namespace trizeta
