#pragma once

#include "trizeta/rat.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace trizeta {

/// Laurent monomial in named formal variables, e.g. {a:2, b:-1} for a^2 b^-1.
using Mono = std::map<std::string, int>;

/// Laurent polynomial in named Satake-type variables with exact rational
/// coefficients. Variables are formal; numbers enter only via substitution.
/// No zero coefficients are stored.
class SatakePoly {
public:
    SatakePoly() = default;
    SatakePoly(const Rat& c) { add_term({}, c); } // NOLINT implicit
    static SatakePoly var(const std::string& name, int exp = 1);
    static SatakePoly monomial(const Mono& m, const Rat& c);

    void add_term(const Mono& m, const Rat& c);
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;

    friend SatakePoly operator+(const SatakePoly& a, const SatakePoly& b);
    friend SatakePoly operator-(const SatakePoly& a, const SatakePoly& b);
    friend SatakePoly operator*(const SatakePoly& a, const SatakePoly& b);
    friend SatakePoly operator*(const Rat& c, const SatakePoly& a);
    friend SatakePoly operator-(const SatakePoly& a);
    SatakePoly pow(int e) const; // e >= 0
    friend bool operator==(const SatakePoly& a, const SatakePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SatakePoly& a, const SatakePoly& b) { return !(a == b); }

    /// Substitute some variables by exact rationals (values must be nonzero
    /// when negative exponents occur). Unlisted variables stay formal.
    SatakePoly substitute(const std::map<std::string, Rat>& values) const;

    /// Swap v -> v^-1 for one variable.
    SatakePoly invert_var(const std::string& name) const;

    std::complex<double> eval(const std::map<std::string, std::complex<double>>& values) const;

    std::string str() const;

private:
    std::map<Mono, Rat> terms_;
};

/// Polynomial in X (one distinguished variable) with SatakePoly coefficients.
/// In L-factor contexts X stands for q^-s.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<SatakePoly> coeffs) : c_(std::move(coeffs)) { trim(); }
    static XPoly constant(const SatakePoly& p) { return XPoly({p}); }
    /// 1 + c X^d
    static XPoly one_plus(const SatakePoly& c, int d = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const SatakePoly& coeff(int d) const;
    const std::vector<SatakePoly>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    XPoly substitute(const std::map<std::string, Rat>& values) const;
    std::complex<double> eval(const std::map<std::string, std::complex<double>>& vars,
                              std::complex<double> x) const;
    std::string str() const;

private:
    void trim();
    std::vector<SatakePoly> c_;
};

/// Local L-factor as a list of inverse factors, each a polynomial in
/// X = q^-s with constant term 1. The reserved variable "u" denotes q^-1/2.
class LaurentLFactor {
public:
    LaurentLFactor() : q_(2) {} // empty product, value 1
    LaurentLFactor(std::vector<XPoly> inverse_factors, long q);

    const std::vector<XPoly>& inverse_factors() const { return inv_; }
    long q() const { return q_; }

    /// Product of the inverse factors, optionally after substitution.
    XPoly expand(const std::map<std::string, Rat>& values = {}) const;

    /// Numeric value of the L-factor at s, substituting u = q^-1/2 and the
    /// given Satake values. Throws PoleError on a vanishing inverse factor.
    std::complex<double> value_at(
        double s, const std::map<std::string, std::complex<double>>& vars = {}) const;

    /// Product of parenthesized inverse factors, e.g. "(1 - a*u*X)^-1 (...)^-1".
    std::string str() const;

private:
    std::vector<XPoly> inv_;
    long q_;
};

/// Product-form expression scalar * prod(num) / prod(den) used to carry the
/// displayed pre-normalization integrals; factors are SatakePolys in the
/// Satake variables and u = q^-1/2.
struct FactorProduct {
    Rat scalar{1};
    std::vector<SatakePoly> num;
    std::vector<SatakePoly> den;

    std::complex<double> eval(const std::map<std::string, std::complex<double>>& vars) const;
    std::string str() const;
};

} // namespace trizeta
