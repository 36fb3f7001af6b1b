#include "trizeta/nonarch.hpp"

#include "trizeta/errors.hpp"
#include "trizeta/zeta_local.hpp"

#include <cmath>
#include <cstdlib>

namespace trizeta {

namespace {

Rat qinv(long q, int e = 1) { return Rat(1, q).pow(e); }

SatakePoly one_minus(const SatakePoly& p) { return SatakePoly(Rat(1)) - p; }

SatakePoly vpow(const std::string& var, int e) { return SatakePoly::var(var, e); }

// (1 - c X^d) as an inverse L-factor entry.
XPoly lin(const SatakePoly& c, int d = 1) { return XPoly::one_plus(-c, d); }

} // namespace

std::complex<double> MacdonaldValue::eval(std::complex<double> alpha, long q,
                                          const std::string& var) const {
    std::complex<double> s = sym.eval({{var, alpha}});
    return s * std::pow(static_cast<double>(q), 0.5 * q_half_exp);
}

MacdonaldValue macdonald(long q, int n, const std::string& var) {
    // q^(-|n|/2)/(1+q^-1) * [ sum_{j=0..|n|} a^(|n|-2j)
    //                         - q^-1 sum_{j=0..|n|-2} a^(|n|-2-2j) ],
    // the pole-free form of the displayed rational function; the |n| = 0
    // value is exactly 1.
    MacdonaldValue out;
    int an = std::abs(n);
    out.q_half_exp = -an;
    if (an == 0) {
        out.sym = SatakePoly(Rat(1));
        return out;
    }
    Rat norm = Rat(1) / (Rat(1) + qinv(q));
    SatakePoly acc;
    for (int j = 0; j <= an; ++j) acc = acc + vpow(var, an - 2 * j);
    for (int j = 0; j <= an - 2; ++j) acc = acc - qinv(q) * vpow(var, an - 2 - 2 * j);
    out.sym = norm * acc;
    return out;
}

std::complex<double> macdonald_value(std::complex<double> alpha, long q, int n) {
    return macdonald(q, n).eval(alpha, q);
}

Rat special_matrix_coeff(int sign, long q, int n, bool weyl) {
    if (sign != 1 && sign != -1)
        throw PreconditionError("special_matrix_coeff: sign must be +-1");
    Rat chi_n(n % 2 == 0 ? 1 : sign);
    if (!weyl) return chi_n * qinv(q, std::abs(n));
    return -chi_n * qinv(q, std::abs(n - 1));
}

int NonarchCase::special_count() const {
    int c = 0;
    for (const auto& p : comps) c += p.special ? 1 : 0;
    return c;
}

int NonarchCase::sign_product() const {
    int s = 1;
    for (const auto& p : comps)
        if (p.special) s *= p.sign;
    return s;
}

int nonarch_epsilon(EtaleShape shape, bool field_ramified, long q,
                    const std::vector<PadicComponent>& comps) {
    (void)q;
    switch (shape) {
        case EtaleShape::Split: {
            int specials = 0, prod = 1;
            for (const auto& p : comps)
                if (p.special) {
                    ++specials;
                    prod *= p.sign;
                }
            if (specials < 3) return 1;
            return prod == -1 ? 1 : -1;
        }
        case EtaleShape::QuadTimesF: {
            const PadicComponent& pi_prime = comps[0];
            const PadicComponent& pi = comps[1];
            if (!pi.special) return 1;
            if (!pi_prime.special)
                return (field_ramified && pi.sign == -1) ? 1 : -1;
            if (field_ramified) return 1;
            return pi_prime.sign * pi.sign == 1 ? 1 : -1;
        }
        case EtaleShape::CubicField: {
            const PadicComponent& Pi = comps[0];
            if (!Pi.special) return 1;
            return Pi.sign == -1 ? 1 : -1;
        }
    }
    throw CaseError("nonarch_epsilon: unknown shape");
}

NonarchCase::NonarchCase(EtaleShape shape_, bool ramified_, bool division_, long q_,
                         std::vector<PadicComponent> comps_)
    : shape(shape_), field_ramified(ramified_), division(division_), q(q_),
      comps(std::move(comps_)) {
    size_t expected = shape == EtaleShape::Split ? 3 : (shape == EtaleShape::QuadTimesF ? 2 : 1);
    if (comps.size() != expected)
        throw CaseError("NonarchCase: expected " + std::to_string(expected) + " components");
    if (q < 2) throw CaseError("NonarchCase: q must be a prime power >= 2");
    if (shape == EtaleShape::Split && field_ramified)
        throw CaseError("NonarchCase: split algebra cannot ramify");
    for (const auto& p : comps)
        if (p.special && p.sign != 1 && p.sign != -1)
            throw CaseError("NonarchCase: special sign must be +-1");
    int eps = nonarch_epsilon(shape, field_ramified, q, comps);
    if (!division && eps != 1)
        throw CaseError("NonarchCase: no matrix-algebra functional for " + label());
    if (division && eps != -1)
        throw CaseError("NonarchCase: no division-algebra functional for " + label());
    if (division) {
        // Components living on the division algebra must be one-dimensional
        // (Jacquet-Langlands transfers of unramified specials).
        bool k_slot_ok = true;
        if (shape == EtaleShape::Split)
            k_slot_ok = comps[0].special && comps[1].special && comps[2].special;
        else if (shape == EtaleShape::QuadTimesF)
            k_slot_ok = comps[1].special; // the K-factor stays a GL(2) representation
        else
            k_slot_ok = comps[0].special;
        if (!k_slot_ok) throw CaseError("NonarchCase: spherical component on a division algebra");
    }
}

std::string NonarchCase::label() const {
    std::string out;
    switch (shape) {
        case EtaleShape::Split: {
            int sp = special_count();
            out = "split " + std::to_string(sp) + "sp+" + std::to_string(3 - sp) + "sph";
            break;
        }
        case EtaleShape::QuadTimesF:
            out = std::string("quad(") + (field_ramified ? "ram" : "unram") + ") pi'=" +
                  (comps[0].special ? "sp" : "sph") + " pi=" + (comps[1].special ? "sp" : "sph");
            break;
        case EtaleShape::CubicField:
            out = std::string("cubic(") + (field_ramified ? "ram" : "unram") + ") " +
                  (comps[0].special ? "sp" : "sph");
            break;
    }
    out += division ? " [division]" : " [matrix]";
    return out;
}

LaurentLFactor adjoint_Lfactor(bool special, long q_comp, const std::string& var) {
    if (special) {
        // (1 - q^-1 X), X = q_comp^-s
        return LaurentLFactor({lin(SatakePoly(qinv(q_comp)))}, q_comp);
    }
    return LaurentLFactor({lin(vpow(var, 2)), lin(SatakePoly(Rat(1))), lin(vpow(var, -2))},
                          q_comp);
}

Rat nonarch_zeta_ratio(const NonarchCase& c) {
    Rat zf2 = Rat(1) - qinv(c.q, 2);
    switch (c.shape) {
        case EtaleShape::Split: return zf2 * zf2;
        case EtaleShape::QuadTimesF:
            return c.field_ramified ? zf2 : Rat(1) - qinv(c.q, 4);
        case EtaleShape::CubicField:
            return c.field_ramified ? Rat(1) : (Rat(1) - qinv(c.q, 6)) / zf2;
    }
    throw CaseError("nonarch_zeta_ratio: unknown shape");
}

std::complex<double> nonarch_adjoint_value(const NonarchCase& c,
                                           const std::vector<std::complex<double>>& satake) {
    auto one_comp = [&](const PadicComponent& p, long q_comp,
                        std::complex<double> a) -> std::complex<double> {
        if (p.special) return 1.0 / (1.0 - std::pow(static_cast<double>(q_comp), -2.0));
        double qi = 1.0 / static_cast<double>(q_comp);
        std::complex<double> a2 = a * a;
        return 1.0 / ((1.0 - a2 * qi) * (1.0 - qi) * (1.0 - qi / a2));
    };
    std::complex<double> out = 1.0;
    long qk = c.field_ramified ? c.q : c.q * c.q;
    long qe = c.field_ramified ? c.q : c.q * c.q * c.q;
    for (size_t i = 0; i < c.comps.size(); ++i) {
        long q_comp = c.q;
        if (c.shape == EtaleShape::QuadTimesF && i == 0) q_comp = qk;
        if (c.shape == EtaleShape::CubicField) q_comp = qe;
        std::complex<double> a = i < satake.size() ? satake[i] : 1.0;
        out *= one_comp(c.comps[i], q_comp, a);
    }
    return out;
}

namespace {

// Variable name for the spherical component in slot i.
std::string slot_var(size_t i) { return std::string(1, static_cast<char>('a' + i)); }

std::vector<XPoly> r_factor_split(const NonarchCase& c) {
    std::vector<XPoly> inv;
    int sp = c.special_count();
    if (sp == 0) {
        for (int e1 : {1, -1})
            for (int e2 : {1, -1})
                for (int e3 : {1, -1})
                    inv.push_back(lin(vpow("a", e1) * vpow("b", e2) * vpow("c", e3)));
    } else if (sp == 1) {
        int chi = 0;
        std::vector<std::string> sph;
        for (size_t i = 0; i < 3; ++i) {
            if (c.comps[i].special)
                chi = c.comps[i].sign;
            else
                sph.push_back(slot_var(i));
        }
        for (int e1 : {1, -1})
            for (int e2 : {1, -1})
                inv.push_back(lin(Rat(chi) * vpow(sph[0], e1) * vpow(sph[1], e2) * vpow("u", 1)));
    } else if (sp == 2) {
        int sigma = 1;
        std::string sph;
        for (size_t i = 0; i < 3; ++i) {
            if (c.comps[i].special)
                sigma *= c.comps[i].sign;
            else
                sph = slot_var(i);
        }
        for (int e : {1, -1}) {
            inv.push_back(lin(Rat(sigma) * vpow(sph, e)));
            inv.push_back(lin(Rat(sigma) * vpow(sph, e) * vpow("u", 2)));
        }
    } else {
        int sigma = c.sign_product();
        inv.push_back(lin(Rat(sigma) * vpow("u", 1)));
        inv.push_back(lin(Rat(sigma) * vpow("u", 1)));
        inv.push_back(lin(Rat(sigma) * vpow("u", 3)));
    }
    return inv;
}

std::vector<XPoly> r_factor_quad(const NonarchCase& c) {
    std::vector<XPoly> inv;
    const PadicComponent& pp = c.comps[0]; // pi' on K
    const PadicComponent& pi = c.comps[1]; // pi on F
    if (!pp.special && !pi.special) {
        if (c.field_ramified) {
            // As eigenvalues {a^2, 1, a^-2} tensored with {b, b^-1}
            for (int e : {1, -1})
                for (int j : {2, 0, -2})
                    inv.push_back(lin(vpow("a", j) * vpow("b", e)));
        } else {
            // As eigenvalues {a, a^-1, 1, -1} tensored with {b, b^-1}; the
            // Satake parameter is taken per w_K with Frob_F^2 = Frob_K.
            for (int e : {1, -1}) {
                inv.push_back(lin(vpow("a", 1) * vpow("b", e)));
                inv.push_back(lin(vpow("a", -1) * vpow("b", e)));
                inv.push_back(lin(vpow("b", e)));
                inv.push_back(lin(Rat(-1) * vpow("b", e)));
            }
        }
    } else if (pp.special && !pi.special) {
        int s = pp.sign;
        if (c.field_ramified) {
            for (int e : {1, -1}) inv.push_back(lin(vpow("b", e) * vpow("u", 2)));
            (void)s;
        } else {
            for (int e : {1, -1}) {
                inv.push_back(lin(Rat(-s) * vpow("b", e)));
                inv.push_back(lin(Rat(s) * vpow("b", e) * vpow("u", 2)));
            }
        }
    } else if (!pp.special && pi.special) {
        int chi = pi.sign;
        int e = c.field_ramified ? 2 : 1; // As eigenvalues a^(+-2) ram, a^(+-1) unram
        inv.push_back(lin(Rat(chi) * vpow("a", e) * vpow("u", 1)));
        inv.push_back(lin(Rat(chi) * vpow("a", -e) * vpow("u", 1)));
        inv.push_back(lin(Rat(chi) * vpow("u", 1)));
        if (!c.field_ramified) inv.push_back(lin(Rat(-chi) * vpow("u", 1)));
    } else {
        if (c.field_ramified) {
            int chi = pi.sign;
            inv.push_back(lin(Rat(chi) * vpow("u", 3)));
            inv.push_back(lin(Rat(chi) * vpow("u", 1)));
        } else {
            int sigma = pp.sign * pi.sign;
            inv.push_back(lin(Rat(sigma) * vpow("u", 3)));
            inv.push_back(lin(SatakePoly(qinv(c.q)), 2)); // (1 - q^-1 X^2)
        }
    }
    return inv;
}

std::vector<XPoly> r_factor_cubic(const NonarchCase& c) {
    std::vector<XPoly> inv;
    const PadicComponent& Pi = c.comps[0];
    if (!Pi.special) {
        if (c.field_ramified) {
            for (int e : {3, 1, -1, -3}) inv.push_back(lin(vpow("a", e)));
        } else {
            inv.push_back(lin(vpow("a", 1)));
            inv.push_back(lin(vpow("a", -1)));
            inv.push_back(lin(vpow("a", 1), 3));
            inv.push_back(lin(vpow("a", -1), 3));
        }
    } else {
        int s = Pi.sign;
        inv.push_back(lin(Rat(s) * vpow("u", 3)));
        if (!c.field_ramified) {
            // (1 + s u X + u^2 X^2)
            XPoly f({SatakePoly(Rat(1)), Rat(s) * vpow("u", 1), vpow("u", 2)});
            inv.push_back(f);
        }
    }
    return inv;
}

FactorProduct display_from(Rat scalar, std::vector<SatakePoly> num,
                           std::vector<SatakePoly> den) {
    FactorProduct fp;
    fp.scalar = scalar;
    fp.num = std::move(num);
    fp.den = std::move(den);
    return fp;
}

} // namespace

NonarchClosed zeta_nonarch_closed(const NonarchCase& c) {
    NonarchClosed out;
    out.case_label = c.label();
    const long q = c.q;
    const Rat qi = qinv(q);
    const Rat one(1);

    std::vector<XPoly> inv;
    switch (c.shape) {
        case EtaleShape::Split: inv = r_factor_split(c); break;
        case EtaleShape::QuadTimesF: inv = r_factor_quad(c); break;
        case EtaleShape::CubicField: inv = r_factor_cubic(c); break;
    }
    out.lfactor_r = LaurentLFactor(std::move(inv), q);

    if (!c.division) {
        switch (c.shape) {
            case EtaleShape::Split: {
                int sp = c.special_count();
                if (sp == 0) {
                    out.istar = one;
                } else if (sp == 1) {
                    out.istar = qi / (one + qi);
                    // (1+q)^-1 (1-q^-1)/(1+q^-1) prod(1 - v^±2 q^-1) / prod(1 - chi a^± b^± q^-1)
                    int chi = 0;
                    std::vector<std::string> sph;
                    for (size_t i = 0; i < 3; ++i) {
                        if (c.comps[i].special)
                            chi = c.comps[i].sign;
                        else
                            sph.push_back(slot_var(i));
                    }
                    std::vector<SatakePoly> num, den;
                    for (const auto& v : sph)
                        for (int e : {2, -2}) num.push_back(one_minus(qi * vpow(v, e)));
                    for (int e1 : {1, -1})
                        for (int e2 : {1, -1})
                            den.push_back(
                                one_minus(Rat(chi) * qi * vpow(sph[0], e1) * vpow(sph[1], e2)));
                    out.integral_display =
                        display_from((one / Rat(1 + q)) * (one - qi) / (one + qi),
                                     std::move(num), std::move(den));
                } else if (sp == 2) {
                    out.istar = qi;
                } else {
                    out.istar = Rat(2) * qi * (one + qi);
                }
                break;
            }
            case EtaleShape::QuadTimesF: {
                const PadicComponent& pp = c.comps[0];
                const PadicComponent& pi = c.comps[1];
                if (!pp.special && !pi.special) {
                    out.istar = one;
                    if (c.field_ramified) {
                        std::vector<SatakePoly> num = {
                            one_minus(qi * vpow("a", 2)), one_minus(qi * vpow("a", -2)),
                            SatakePoly(one) + vpow("b", 1) * vpow("u", 1),
                            SatakePoly(one) + vpow("b", -1) * vpow("u", 1)};
                        std::vector<SatakePoly> den;
                        for (int ea : {2, -2})
                            for (int eb : {1, -1})
                                den.push_back(
                                    one_minus(vpow("a", ea) * vpow("b", eb) * vpow("u", 1)));
                        out.integral_display = display_from((one - qi) / (one + qi),
                                                            std::move(num), std::move(den));
                    }
                } else if (pp.special && !pi.special) {
                    if (c.field_ramified) {
                        out.istar = qi / (one + qi);
                        out.integral_display = display_from(qi * (one - qi) / (one + qi),
                            {one_minus(qi * vpow("b", 2)), one_minus(qi * vpow("b", -2))},
                            {one_minus(vpow("b", 1) * vpow("u", 3)),
                             one_minus(vpow("b", -1) * vpow("u", 3))});
                    } else {
                        out.istar = qi * (one + qinv(q, 2)) / ((one + qi) * (one + qi));
                        int s = pp.sign;
                        out.integral_display = display_from(
                            (one - qi) * (one + qinv(q, 2)) / ((one + qi) * Rat(1 + q)),
                            {one_minus(Rat(s) * vpow("b", 1) * vpow("u", 1)),
                             one_minus(Rat(s) * vpow("b", -1) * vpow("u", 1))},
                            {one_minus(Rat(s) * vpow("b", 1) * vpow("u", 3)),
                             one_minus(Rat(s) * vpow("b", -1) * vpow("u", 3))});
                    }
                } else if (!pp.special && pi.special) {
                    // valid matrix case only for K ramified with chi(w) = -1
                    out.istar = Rat(2) * qi / (one + qi);
                    out.integral_display = display_from(
                        Rat(2) * qi * (one - qi) / ((one + qi) * (one + qi)),
                        {one_minus(qi * vpow("a", 2)), one_minus(qi * vpow("a", -2))},
                        {SatakePoly(one) + qi * vpow("a", 2), SatakePoly(one) + qi * vpow("a", -2)});
                } else {
                    if (c.field_ramified) {
                        out.istar = qi;
                        int chi = pi.sign;
                        out.integral_display = display_from(
                            qi, {SatakePoly(one + Rat(chi) * qi)},
                            {SatakePoly(one - Rat(chi) * qinv(q, 2))});
                    } else {
                        out.istar = Rat(2) * qi * (one + qinv(q, 2)) / (one + qi);
                        int sigma = pp.sign * pi.sign; // +1 on the matrix side
                        out.integral_display = display_from(
                            (one / Rat(1 + q)) * Rat(1 + sigma) *
                                (one + Rat(sigma) * qinv(q, 2)) /
                                (one - Rat(sigma) * qinv(q, 2)),
                            {}, {});
                    }
                }
                break;
            }
            case EtaleShape::CubicField: {
                const PadicComponent& Pi = c.comps[0];
                if (!Pi.special) {
                    out.istar = one;
                    if (c.field_ramified) {
                        out.integral_display = display_from(
                            one - qi,
                            {SatakePoly(one) + vpow("a", 1) * vpow("u", 1),
                             SatakePoly(one) + vpow("a", -1) * vpow("u", 1)},
                            {one_minus(vpow("a", 3) * vpow("u", 1)),
                             one_minus(vpow("a", -3) * vpow("u", 1))});
                    }
                } else {
                    if (c.field_ramified) {
                        out.istar = Rat(2) * qi / (one + qi);
                        out.integral_display = display_from(
                            Rat(2) * (one / Rat(1 + q)) * (one - qinv(q, 2)) /
                                (one + qinv(q, 2)),
                            {}, {});
                    } else {
                        out.istar = Rat(2) * qi * (one - qi + qinv(q, 2)) / (one + qi);
                        int s = Pi.sign; // -1 on the matrix side
                        out.integral_display = display_from(
                            (one / Rat(1 + q)) * Rat(1 - s) * (one + Rat(s) * qinv(q, 2)) /
                                (one - Rat(s) * qinv(q, 2)),
                            {}, {});
                    }
                }
                break;
            }
        }
    } else {
        switch (c.shape) {
            case EtaleShape::Split:
                out.istar = Rat(2) * (one - qi) * (one - qi);
                out.integral_display = display_from(Rat(2), {}, {});
                break;
            case EtaleShape::QuadTimesF: {
                const PadicComponent& pp = c.comps[0];
                if (!pp.special) {
                    if (c.field_ramified) {
                        out.istar = Rat(2);
                        out.integral_display = display_from(Rat(2), {}, {});
                    } else {
                        out.istar = one;
                        int chi = c.comps[1].sign;
                        out.integral_display = display_from(
                            one,
                            {SatakePoly(one) + Rat(chi) * qi * vpow("a", 1),
                             SatakePoly(one) + Rat(chi) * qi * vpow("a", -1)},
                            {SatakePoly(one + qinv(q, 2))});
                    }
                } else {
                    out.istar = Rat(2) * (one + qinv(q, 2));
                    out.integral_display = display_from(Rat(2), {}, {});
                }
                break;
            }
            case EtaleShape::CubicField:
                out.istar = c.field_ramified ? Rat(2)
                                             : Rat(2) * (one + qi + qinv(q, 2));
                out.integral_display = display_from(Rat(2), {}, {});
                break;
        }
    }
    return out;
}

} // namespace trizeta
