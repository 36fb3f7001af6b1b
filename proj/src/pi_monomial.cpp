#include "trizeta/pi_monomial.hpp"

#include "trizeta/errors.hpp"

#include <cmath>

namespace trizeta {

PiMonomial PiMonomial::from_rat(const Rat& value) { return make(value, 0, 0); }

PiMonomial PiMonomial::make(const Rat& r, int two, int pi_half) {
    PiMonomial m;
    if (r.is_zero()) return m;
    m.coeff_ = r.odd_part();
    m.two_exp_ = two + static_cast<int>(r.two_valuation());
    m.pi_half_ = pi_half;
    return m;
}

Rat PiMonomial::as_rat() const {
    if (is_zero()) return Rat(0);
    if (pi_half_ != 0) throw PreconditionError("PiMonomial: not rational, pi^" +
                                               std::to_string(pi_half_) + "/2 present");
    return coeff_ * Rat(2).pow(two_exp_);
}

PiMonomial operator*(const PiMonomial& a, const PiMonomial& b) {
    if (a.is_zero() || b.is_zero()) return PiMonomial::zero();
    return PiMonomial::make(a.coeff_ * b.coeff_, a.two_exp_ + b.two_exp_,
                            a.pi_half_ + b.pi_half_);
}

PiMonomial operator/(const PiMonomial& a, const PiMonomial& b) {
    if (b.is_zero()) throw PreconditionError("PiMonomial: division by zero");
    if (a.is_zero()) return PiMonomial::zero();
    return PiMonomial::make(a.coeff_ / b.coeff_, a.two_exp_ - b.two_exp_,
                            a.pi_half_ - b.pi_half_);
}

PiMonomial operator+(const PiMonomial& a, const PiMonomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_half_ != b.pi_half_)
        throw PreconditionError("PiMonomial: addition across distinct pi powers");
    int base = a.two_exp_ < b.two_exp_ ? a.two_exp_ : b.two_exp_;
    Rat sum = a.coeff_ * Rat(2).pow(a.two_exp_ - base) +
              b.coeff_ * Rat(2).pow(b.two_exp_ - base);
    return PiMonomial::make(sum, base, a.pi_half_);
}

PiMonomial operator-(const PiMonomial& a, const PiMonomial& b) { return a + (-b); }

PiMonomial operator-(const PiMonomial& a) {
    PiMonomial m = a;
    m.coeff_ = -m.coeff_;
    return m;
}

PiMonomial PiMonomial::pow(long e) const {
    if (e == 0) return one();
    if (is_zero()) {
        if (e < 0) throw PreconditionError("PiMonomial: negative power of zero");
        return zero();
    }
    return make(coeff_.pow(e), static_cast<int>(two_exp_ * e),
                static_cast<int>(pi_half_ * e));
}

bool operator==(const PiMonomial& a, const PiMonomial& b) {
    return a.coeff_ == b.coeff_ && a.two_exp_ == b.two_exp_ && a.pi_half_ == b.pi_half_;
}

double PiMonomial::to_double() const {
    if (is_zero()) return 0.0;
    return coeff_.to_double() * std::pow(2.0, two_exp_) *
           std::pow(3.14159265358979323846, pi_half_ / 2.0);
}

std::string PiMonomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " * ";
        out += part;
    };
    if (!coeff_.is_one() || (two_exp_ == 0 && pi_half_ == 0)) append(coeff_.str());
    if (two_exp_ != 0) append("2^" + std::to_string(two_exp_));
    if (pi_half_ != 0) {
        if (pi_half_ % 2 == 0)
            append("pi^" + std::to_string(pi_half_ / 2));
        else
            append("pi^(" + std::to_string(pi_half_) + "/2)");
    }
    return out;
}

} // namespace trizeta
