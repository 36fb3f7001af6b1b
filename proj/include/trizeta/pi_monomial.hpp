#pragma once

#include "trizeta/rat.hpp"

#include <string>

namespace trizeta {

/// Exact scalar of the form r * 2^a * pi^(h/2) with r an odd/odd rational.
///
/// The pi exponent is stored doubled so sqrt(pi) (h odd) is representable;
/// products of half-integer Gamma values land here before the halves pair up.
/// Canonical form: the 2-part of the coefficient lives in two_exp, and the
/// zero value has two_exp = pi_half = 0.
class PiMonomial {
public:
    PiMonomial() = default;
    PiMonomial(const Rat& value) { *this = from_rat(value); } // NOLINT implicit

    static PiMonomial from_rat(const Rat& value);
    /// r * 2^two * pi^(pi_half/2); r may carry 2-parts, they get normalized in.
    static PiMonomial make(const Rat& r, int two, int pi_half);
    static PiMonomial zero() { return PiMonomial(); }
    static PiMonomial one() { return from_rat(Rat(1)); }

    const Rat& coeff() const { return coeff_; }
    int two_exp() const { return two_exp_; }
    int pi_half_exp() const { return pi_half_; }
    bool is_zero() const { return coeff_.is_zero(); }
    bool is_rational() const { return pi_half_ == 0; }

    /// Exact rational value; requires pi_half_exp() == 0.
    Rat as_rat() const;

    friend PiMonomial operator*(const PiMonomial& a, const PiMonomial& b);
    friend PiMonomial operator/(const PiMonomial& a, const PiMonomial& b);
    /// Addition requires matching pi exponents (or a zero operand).
    friend PiMonomial operator+(const PiMonomial& a, const PiMonomial& b);
    friend PiMonomial operator-(const PiMonomial& a, const PiMonomial& b);
    friend PiMonomial operator-(const PiMonomial& a);
    PiMonomial pow(long e) const;
    friend bool operator==(const PiMonomial& a, const PiMonomial& b);
    friend bool operator!=(const PiMonomial& a, const PiMonomial& b) { return !(a == b); }

    double to_double() const;

    /// Canonical rendering "r * 2^a * pi^b"; trivial parts are omitted and a
    /// lone unit renders as "1". Half pi powers render as pi^(h/2).
    std::string str() const;

private:
    Rat coeff_;        // odd numerator and denominator
    int two_exp_ = 0;
    int pi_half_ = 0;  // doubled pi exponent
};

} // namespace trizeta
