#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace trizeta {

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) { v_.canonicalize(); }             // NOLINT implicit
    Rat(long n, long d);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    /// Integer power; e < 0 requires a nonzero value.
    Rat pow(long e) const;

    /// 2-adic valuation (0 for the zero value).
    long two_valuation() const;
    /// *this / 2^two_valuation(); numerator and denominator both odd.
    Rat odd_part() const;

    static Rat factorial(unsigned long n);
    static Rat binomial(unsigned long n, unsigned long k);

    std::string str() const;
    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

} // namespace trizeta
