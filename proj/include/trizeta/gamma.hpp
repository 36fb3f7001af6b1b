#pragma once

#include "trizeta/halfint.hpp"
#include "trizeta/pi_monomial.hpp"

#include <vector>

namespace trizeta {

/// Gamma at a half-integer away from the poles. Integer n > 0 gives (n-1)!,
/// half-odd arguments (either sign) contribute a single sqrt(pi). Throws
/// GammaPoleError at the non-positive integers.
PiMonomial gamma_value(HalfInt z);

/// z (z+1) ... (z+n-1), defined for every half-integer z (can be zero).
Rat rising_factorial(HalfInt z, int n);

/// A ratio of products of Gamma values given by argument multisets.
struct GammaRatio {
    std::vector<HalfInt> numerator_args;
    std::vector<HalfInt> denominator_args;

    /// Strict evaluation: throws at any non-positive integer argument.
    PiMonomial value() const;

    /// Evaluation with the reciprocal-Gamma convention: a denominator
    /// argument at a non-positive integer is first paired with a numerator
    /// argument at integer offset >= 0 and the pair becomes a rising
    /// factorial (possibly zero); an unpaired one makes the whole ratio 0
    /// since 1/Gamma is entire. An unpaired non-positive numerator argument
    /// is a genuine pole and throws.
    PiMonomial value_with_limits() const;
};

} // namespace trizeta
