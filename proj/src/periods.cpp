#include "trizeta/periods.hpp"

#include "trizeta/errors.hpp"

#include <algorithm>
#include <set>

namespace trizeta {

namespace {

void check_weight(int k, const char* name) {
    if (k <= 0 || k % 2 != 0)
        throw PreconditionError(std::string("deligne_period: ") + name +
                                " must be a positive even weight");
}

void append_power(std::string& out, const char* symbol, int e) {
    if (e == 0) return;
    if (!out.empty()) out += " * ";
    out += symbol;
    if (e != 1) out += "^" + std::to_string(e);
}

} // namespace

std::string PeriodMonomial::str() const {
    std::string out;
    append_power(out, "(2pi*i)", two_pi_i);
    append_power(out, "i", imag_unit);
    append_power(out, "<f,f>", pet_f);
    append_power(out, "<g,g>", pet_g);
    append_power(out, "Omega+", omega_plus);
    append_power(out, "Omega-", omega_minus);
    return out.empty() ? "1" : out;
}

PeriodMonomial deligne_period(DeligneKind kind, int kappa, int kappa_prime, PeriodSign sign) {
    check_weight(kappa_prime, "kappa'");
    PeriodMonomial m;
    int& omega = sign == PeriodSign::Plus ? m.omega_plus : m.omega_minus;
    if (kind == DeligneKind::Sym3) {
        m.two_pi_i = 1 - kappa_prime;
        m.imag_unit = 1 - kappa_prime;
        m.pet_f = 1;
        omega = 2;
        return m;
    }
    check_weight(kappa, "kappa");
    if (kappa_prime >= 2 * kappa) {
        m.two_pi_i = 3 - 3 * kappa;
        m.imag_unit = 1 - kappa_prime;
        m.pet_f = 1;
        omega = 1;
    } else {
        m.two_pi_i = 2 - kappa - kappa_prime;
        m.pet_g = 2;
        omega = 1;
    }
    return m;
}

HodgeData hodge_data(MotiveKind kind, int kappa, int kappa_prime) {
    HodgeData h;
    switch (kind) {
        case MotiveKind::Mf: {
            check_weight(kappa_prime, "kappa'");
            h.weight = kappa_prime - 1;
            h.hodge_types = {{0, h.weight}, {h.weight, 0}};
            h.filtration_jumps = {0, h.weight};
            h.d_plus = h.d_minus = 1;
            return h;
        }
        case MotiveKind::Sym2Mg: {
            check_weight(kappa, "kappa");
            h.weight = 2 * kappa - 2;
            h.hodge_types = {{0, h.weight}, {kappa - 1, kappa - 1}, {h.weight, 0}};
            h.filtration_jumps = {0, kappa - 1, h.weight};
            h.d_plus = 2;
            h.d_minus = 1;
            return h;
        }
        case MotiveKind::Tensor: {
            check_weight(kappa, "kappa");
            check_weight(kappa_prime, "kappa'");
            h.weight = 2 * kappa + kappa_prime - 3;
            std::set<int> shifts;
            if (kappa_prime >= 2 * kappa)
                shifts = {0, kappa - 1, 2 * kappa - 2};
            else
                shifts = {0, kappa - 1, kappa_prime - 1};
            std::set<int> jumps;
            for (int s : shifts) {
                h.hodge_types.emplace_back(s, h.weight - s);
                h.hodge_types.emplace_back(h.weight - s, s);
                jumps.insert(s);
                jumps.insert(h.weight - s);
            }
            std::sort(h.hodge_types.begin(), h.hodge_types.end());
            h.hodge_types.erase(std::unique(h.hodge_types.begin(), h.hodge_types.end()),
                                h.hodge_types.end());
            h.filtration_jumps.assign(jumps.begin(), jumps.end());
            h.d_plus = h.d_minus = 3;
            if (kappa == kappa_prime) {
                h.k0 = 2; // degenerate layout: the middle types collide
                h.r_mid = kappa - 1;
            } else {
                h.k0 = 3;
                if (kappa_prime >= 2 * kappa)
                    h.r_mid = 2 * kappa - 2;
                else
                    h.r_mid = std::min(kappa, kappa_prime) == kappa ? kappa_prime - 1
                                                                    : kappa - 1;
            }
            return h;
        }
    }
    throw PreconditionError("hodge_data: unknown motive kind");
}

PeriodRatioTemplate period_ratio(DeligneKind kind, int kappa, int kappa_prime) {
    check_weight(kappa_prime, "kappa'");
    PeriodRatioTemplate t;
    t.epsilon = (kappa_prime / 2 - 1) % 2 == 0 ? 1 : -1;
    PeriodSign sign = t.epsilon == 1 ? PeriodSign::Plus : PeriodSign::Minus;
    if (kind == DeligneKind::Sym2TensorF) {
        check_weight(kappa, "kappa");
        t.w = 2 * kappa + kappa_prime - 3;
        t.numerator_two_pi_i = 3 * (t.w + 1) / 2;
        t.denominator = deligne_period(kind, kappa, kappa_prime, sign);
        t.boundary_first_branch = (kappa_prime == 2 * kappa);
        t.rendered = "L((w+1)/2, Sym^2(g) x f) / [ (2pi*i)^" +
                     std::to_string(t.numerator_two_pi_i) + " * " + t.denominator.str() +
                     " ]";
    } else {
        t.w = 3 * kappa_prime - 3;
        t.numerator_two_pi_i = 0;
        t.denominator = deligne_period(kind, kappa, kappa_prime, sign);
        std::string omega = t.epsilon == 1 ? "Omega+" : "Omega-";
        t.rendered = "L((w+1)/2, Sym^3(f)) / [ pi^" + std::to_string(2 * kappa_prime - 1) +
                     " * i^" + std::to_string(kappa_prime) + " * <f,f> * (" + omega + ")^2 ]";
    }
    return t;
}

} // namespace trizeta
