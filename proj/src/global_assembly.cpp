#include "trizeta/global_assembly.hpp"

#include "trizeta/errors.hpp"
#include "trizeta/pi_monomial.hpp"

#include <algorithm>
#include <set>

namespace trizeta {

int GlobalDescriptor::little_c() const {
    switch (shape) {
        case GlobalShape::Split: return 3;
        case GlobalShape::RealQuadTimesQ: return 2;
        case GlobalShape::RealCubicField: return 1;
    }
    throw CaseError("GlobalDescriptor: unknown shape");
}

void GlobalDescriptor::validate() const {
    for (int k : weights)
        if (k < 2 || k % 2 != 0)
            throw PreconditionError("GlobalDescriptor: weights must be positive even integers");
    if ((shape == GlobalShape::Split) != (disc == 1))
        throw CaseError("GlobalDescriptor: split algebra iff discriminant 1");
    if (class_number < 1) throw PreconditionError("GlobalDescriptor: class number >= 1");
    std::set<long> seen;
    for (const LevelPrime& lp : level) {
        if (lp.p < 2) throw CaseError("GlobalDescriptor: invalid prime");
        if (!seen.insert(lp.p).second)
            throw CaseError("GlobalDescriptor: level not square-free at p=" +
                            std::to_string(lp.p));
        if (shape == GlobalShape::Split && lp.local_shape != EtaleShape::Split)
            throw CaseError("GlobalDescriptor: split algebra has split local shape at p=" +
                            std::to_string(lp.p));
        if (shape == GlobalShape::RealQuadTimesQ && lp.local_shape == EtaleShape::CubicField)
            throw CaseError("GlobalDescriptor: quadratic algebra cannot have a cubic place");
        if (lp.field_ramified && disc % lp.p != 0)
            throw CaseError("GlobalDescriptor: ramified place p=" + std::to_string(lp.p) +
                            " must divide the discriminant");
        if (lp.field_ramified && lp.local_shape == EtaleShape::Split)
            throw CaseError("GlobalDescriptor: split local shape cannot ramify");
        size_t expected = lp.local_shape == EtaleShape::Split
                              ? 3
                              : (lp.local_shape == EtaleShape::QuadTimesF ? 2 : 1);
        if (lp.comps.size() != expected)
            throw CaseError("GlobalDescriptor: wrong component count at p=" +
                            std::to_string(lp.p));
        for (const PadicComponent& pc : lp.comps)
            if (pc.special && pc.sign != 1 && pc.sign != -1)
                throw CaseError("GlobalDescriptor: special sign must be +-1");
    }
}

long GlobalDescriptor::level_norm() const {
    long n = 1;
    for (const LevelPrime& lp : level) {
        int e = 0;
        switch (lp.local_shape) {
            case EtaleShape::Split:
                for (const auto& pc : lp.comps) e += pc.special ? 1 : 0;
                break;
            case EtaleShape::QuadTimesF:
                if (lp.comps[0].special) e += lp.field_ramified ? 1 : 2;
                if (lp.comps[1].special) e += 1;
                break;
            case EtaleShape::CubicField:
                if (lp.comps[0].special) e += lp.field_ramified ? 1 : 3;
                break;
        }
        for (int i = 0; i < e; ++i) n *= lp.p;
    }
    return n;
}

int epsilon_arch(int k1, int k2, int k3) {
    return 2 * std::max({k1, k2, k3}) >= k1 + k2 + k3 ? 1 : -1;
}

RamificationData quaternion_ramification(const GlobalDescriptor& g) {
    g.validate();
    RamificationData out;
    int eps_inf = epsilon_arch(g.weights[0], g.weights[1], g.weights[2]);
    out.arch_in_sigma = eps_inf == -1;
    out.global_sign = eps_inf;
    for (const LevelPrime& lp : g.level) {
        int eps = nonarch_epsilon(lp.local_shape, lp.field_ramified, lp.p, lp.comps);
        out.global_sign *= eps;
        if (eps == -1) {
            out.sigma_d_finite.push_back(lp.p);
            out.n_minus *= lp.p;
        }
        bool in_level = false;
        for (const auto& pc : lp.comps) in_level = in_level || pc.special;
        if (in_level) out.m_level *= lp.p;
    }
    std::sort(out.sigma_d_finite.begin(), out.sigma_d_finite.end());
    return out;
}

int nu_count(const GlobalDescriptor& g) {
    g.validate();
    int nu = 0;
    for (const LevelPrime& lp : g.level) {
        switch (lp.local_shape) {
            case EtaleShape::Split: {
                int sp = 0;
                for (const auto& pc : lp.comps) sp += pc.special ? 1 : 0;
                if (sp == 3) ++nu;
                break;
            }
            case EtaleShape::QuadTimesF:
                if (lp.comps[0].special && lp.comps[1].special) ++nu;
                else if (lp.field_ramified && !lp.comps[0].special && lp.comps[1].special) ++nu;
                break;
            case EtaleShape::CubicField:
                if (lp.comps[0].special) ++nu;
                break;
        }
    }
    return nu;
}

namespace {

std::string render_exact_constant(long m, int two_exp, long disc) {
    std::string out = PiMonomial::make(Rat(m), two_exp, 0).str();
    if (disc != 1) out += " * D^(-1/2)";
    return out;
}

} // namespace

CentralValueConstant central_constant(const GlobalDescriptor& g) {
    RamificationData ram = quaternion_ramification(g);
    CentralValueConstant out;
    out.nu = nu_count(g);
    out.balanced_side = epsilon_arch(g.weights[0], g.weights[1], g.weights[2]) == -1;
    if (ram.global_sign != 1) {
        out.forced_zero = true;
        out.rendered = "0 (central value forced by sign)";
        out.solve_template = "L(1/2, Pi, r) = 0";
        return out;
    }
    out.m = ram.m_level;
    out.two_exponent = out.balanced_side ? -(g.weight_sum() + 1) + out.nu
                                         : -2 * g.k_max() - 1 + out.nu;
    out.rendered = render_exact_constant(out.m, out.two_exponent, g.disc);
    out.solve_template = "L(1/2, Pi, r) = P^2 * <f_E, f_E> / (" + out.rendered +
                         " * <f_E^D, f_E^D>)";
    return out;
}

PeterssonConstant petersson_constant(const GlobalDescriptor& g) {
    g.validate();
    PeterssonConstant out;
    out.two_exponent = -g.weight_sum() + g.little_c() - 3;
    out.h = g.class_number;
    out.disc = g.disc;
    out.level_norm = g.level_norm();
    out.rendered = PiMonomial::make(Rat(out.h) * Rat(out.disc) * Rat(out.level_norm),
                                    out.two_exponent, 0)
                       .str();
    out.symbolic_suffix = " * L(1,Pi,Ad)";
    return out;
}

namespace {

XPoly product_of(const std::vector<SatakePoly>& roots) {
    XPoly out = XPoly::constant(SatakePoly(Rat(1)));
    for (const auto& r : roots) out = out * XPoly::one_plus(-r);
    return out;
}

} // namespace

PolyIdentityReport factorization_check(FactorizationKind kind) {
    SatakePoly a = SatakePoly::var("a");
    SatakePoly ai = SatakePoly::var("a", -1);
    SatakePoly b = SatakePoly::var("b");
    SatakePoly bi = SatakePoly::var("b", -1);
    PolyIdentityReport rep;
    if (kind == FactorizationKind::Sym2Twist) {
        std::vector<SatakePoly> lhs_roots;
        for (const SatakePoly& b1 : {b, bi})
            for (const SatakePoly& b2 : {b, bi})
                for (const SatakePoly& af : {a, ai}) lhs_roots.push_back(b1 * b2 * af);
        std::vector<SatakePoly> rhs_roots;
        for (int j : {2, 0, -2})
            for (const SatakePoly& af : {a, ai})
                rhs_roots.push_back(SatakePoly::var("b", j) * af);
        rhs_roots.push_back(a);
        rhs_roots.push_back(ai);
        rep.lhs = product_of(lhs_roots);
        rep.rhs = product_of(rhs_roots);
    } else {
        std::vector<SatakePoly> lhs_roots;
        for (int e1 : {1, -1})
            for (int e2 : {1, -1})
                for (int e3 : {1, -1})
                    lhs_roots.push_back(SatakePoly::var("a", e1 + e2 + e3));
        std::vector<SatakePoly> rhs_roots;
        for (int j : {3, 1, -1, -3}) rhs_roots.push_back(SatakePoly::var("a", j));
        for (int rep2 = 0; rep2 < 2; ++rep2) {
            rhs_roots.push_back(a);
            rhs_roots.push_back(ai);
        }
        rep.lhs = product_of(lhs_roots);
        rep.rhs = product_of(rhs_roots);
    }
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

PolyIdentityReport factorization_check_at(FactorizationKind kind, const Rat& satake_f,
                                          const Rat& satake_g) {
    if (satake_f.is_zero() || satake_g.is_zero())
        throw PreconditionError("factorization_check_at: Satake values must be nonzero");
    PolyIdentityReport sym = factorization_check(kind);
    std::map<std::string, Rat> vals{{"a", satake_f}, {"b", satake_g}};
    PolyIdentityReport rep;
    rep.lhs = sym.lhs.substitute(vals);
    rep.rhs = sym.rhs.substitute(vals);
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

} // namespace trizeta
