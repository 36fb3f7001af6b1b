#include "trizeta/zeta_local.hpp"

#include "trizeta/errors.hpp"
#include "trizeta/gamma.hpp"

#include <cmath>

namespace trizeta {

PiMonomial zeta_real(HalfInt s) {
    if (s.twice % 2 != 0)
        throw PreconditionError("zeta_real: integer argument required, got " + s.str());
    HalfInt half_s{s.twice / 2};
    if (half_s.twice <= 0 && half_s.is_integer())
        throw PoleError("zeta_real: Gamma pole at s = " + s.str());
    if (half_s.twice <= 0)
        throw PreconditionError("zeta_real: argument must be positive");
    PiMonomial g = gamma_value(half_s);
    return g * PiMonomial::make(Rat(1), 0, -s.twice / 2);
}

PiMonomial zeta_complex(int s) {
    if (s <= 0) throw PoleError("zeta_complex: Gamma pole at s = " + std::to_string(s));
    // 2 (2 pi)^-s Gamma(s)
    return PiMonomial::make(Rat::factorial(static_cast<unsigned long>(s - 1)), 1 - s, -2 * s);
}

Rat zeta_nonarch(HalfInt s, long q) {
    if (q < 2) throw PreconditionError("zeta_nonarch: q must be a prime power >= 2");
    Rat q_to_minus_s;
    if (s.is_integer()) {
        q_to_minus_s = Rat(q).pow(-s.as_int());
    } else {
        long root = std::lround(std::sqrt(static_cast<double>(q)));
        if (root * root != q)
            throw PreconditionError("zeta_nonarch: q^-s irrational for s = " + s.str());
        q_to_minus_s = Rat(root).pow(-s.twice);
    }
    Rat denom = Rat(1) - q_to_minus_s;
    if (denom.is_zero()) throw PoleError("zeta_nonarch: pole at s = " + s.str());
    return Rat(1) / denom;
}

XPoly zeta_nonarch_inverse_factor() {
    return XPoly::one_plus(SatakePoly(Rat(-1)));
}

PiMonomial local_zeta(FieldKind kind, HalfInt s, long q) {
    switch (kind) {
        case FieldKind::Real: return zeta_real(s);
        case FieldKind::Complex:
            if (!s.is_integer())
                throw PreconditionError("zeta_complex: integer argument required");
            return zeta_complex(s.as_int());
        case FieldKind::NonArch: return PiMonomial::from_rat(zeta_nonarch(s, q));
    }
    throw PreconditionError("local_zeta: unknown field kind");
}

} // namespace trizeta
