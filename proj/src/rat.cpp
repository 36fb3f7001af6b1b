#include "trizeta/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace trizeta {

Rat::Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rat: negative power of zero");
        return Rat(0);
    }
    mpz_class num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
    mpq_class r = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return Rat(r);
}

long Rat::two_valuation() const {
    if (is_zero()) return 0;
    const mpz_class num = v_.get_num();
    const mpz_class den = v_.get_den();
    long vn = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
    long vd = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    return vn - vd;
}

Rat Rat::odd_part() const {
    if (is_zero()) return Rat(0);
    return *this * Rat(2).pow(-two_valuation());
}

Rat Rat::factorial(unsigned long n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return Rat(mpq_class(z));
}

Rat Rat::binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rat(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Rat(mpq_class(z));
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

} // namespace trizeta
