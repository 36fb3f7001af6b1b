#include "trizeta/arch.hpp"

#include "trizeta/errors.hpp"
#include "trizeta/gamma.hpp"
#include "trizeta/satake.hpp"
#include "trizeta/zeta_local.hpp"

#include <cmath>

namespace trizeta {

namespace {

constexpr double kPi = 3.14159265358979323846;

PiMonomial minus_four_pi_pow(int j) {
    // (-4 pi)^j
    return PiMonomial::make(Rat(j % 2 == 0 ? 1 : -1), 2 * j, 2 * j);
}

} // namespace

double WhittakerPoly::eval(double a) const {
    double out = 0.0;
    for (int j = 0; j <= m; ++j)
        out += coeffs[static_cast<size_t>(j)].to_double() * std::pow(a, k / 2.0 + j);
    return out;
}

double WhittakerPoly::whittaker_value(double a) const {
    if (a <= 0.0) return 0.0;
    return std::pow(2.0, m) * eval(a) * std::exp(-2.0 * kPi * a);
}

WhittakerPoly whittaker_poly(int k, int m) {
    if (k < 1 || m < 0) throw PreconditionError("whittaker_poly: need k >= 1, m >= 0");
    WhittakerPoly w;
    w.k = k;
    w.m = m;
    w.coeffs.resize(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        PiMonomial c = minus_four_pi_pow(j) *
                       PiMonomial::from_rat(Rat::binomial(m, j)) *
                       (gamma_value(HalfInt::of_int(k + m)) / gamma_value(HalfInt::of_int(k + j)));
        w.coeffs[static_cast<size_t>(j)] = c;
    }
    return w;
}

WhittakerPoly whittaker_raise(const WhittakerPoly& w) {
    // On the polynomial part: P^(m+1) = a P' + ((k+2m)/2) P - 4 pi a P.
    // Exponents are k/2 + j, so a P' contributes (k/2 + j) at degree j and
    // -4 pi a P shifts degree j to j+1.
    WhittakerPoly out;
    out.k = w.k;
    out.m = w.m + 1;
    out.coeffs.assign(static_cast<size_t>(w.m) + 2, PiMonomial::zero());
    for (int j = 0; j <= w.m; ++j) {
        const PiMonomial& c = w.coeffs[static_cast<size_t>(j)];
        Rat factor = Rat(w.k + 2 * j, 2) + Rat(w.k + 2 * w.m, 2);
        out.coeffs[static_cast<size_t>(j)] =
            out.coeffs[static_cast<size_t>(j)] + PiMonomial::from_rat(factor) * c;
        out.coeffs[static_cast<size_t>(j) + 1] =
            out.coeffs[static_cast<size_t>(j) + 1] + minus_four_pi_pow(1) * c;
    }
    return out;
}

std::complex<double> matrix_coeff_raised(int k, int m, double a, double x) {
    if (a >= 0.0) return 0.0;
    const double b = -a;
    const std::complex<double> z(1.0 + b, x);
    const std::complex<double> zinv = 1.0 / z;
    // z^-(k+i+j) for i+j up to 2m
    std::vector<std::complex<double>> zp(static_cast<size_t>(k + 2 * m) + 1);
    zp[0] = 1.0;
    for (size_t n = 1; n < zp.size(); ++n) zp[n] = zp[n - 1] * zinv;

    double lg_k = std::lgamma(static_cast<double>(k));
    double lg_km = std::lgamma(static_cast<double>(k + m));
    double pref = std::pow(2.0, k + 2 * m) * std::exp(2.0 * lg_km - lg_k);
    double bk2 = std::pow(b, k / 2.0);

    std::complex<double> sum = 0.0;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            double c = std::pow(-2.0, i + j) *
                       Rat::binomial(m, i).to_double() * Rat::binomial(m, j).to_double() *
                       std::exp(std::lgamma(static_cast<double>(k + i + j)) -
                                std::lgamma(static_cast<double>(k + i)) -
                                std::lgamma(static_cast<double>(k + j)));
            sum += c * bk2 * std::pow(b, i) * zp[static_cast<size_t>(k + i + j)];
        }
    }
    return pref * sum;
}

std::complex<double> matrix_coeff_tau(int k, double a, double x) {
    if (a >= 0.0) return 0.0;
    const double b = -a;
    const std::complex<double> zbar(1.0 + b, -x);
    return std::pow(2.0, k) * std::pow(b, k / 2.0) / std::pow(zbar, k);
}

std::complex<double> pairing_mc_closed(int k, int m, double a, double x) {
    // 2^(2m-k) pi^-k Gamma(k+m)^2 * (the same double sum as the Phi formula).
    std::complex<double> phi = matrix_coeff_raised(k, m, a, x);
    // matrix_coeff_raised = B / B(tau W, W) with prefactor 2^(k+2m) G(k+m)^2/G(k);
    // the raw pairing carries 2^(2m-k) pi^-k G(k+m)^2 instead.
    double ratio = std::pow(2.0, -2 * k) * std::pow(kPi, -k) *
                   std::exp(std::lgamma(static_cast<double>(k)));
    return phi * ratio;
}

PiMonomial pairing_norm_closed(int k, int m) {
    return PiMonomial::make(Rat(1), 2 * (m - k), -2 * k) *
           gamma_value(HalfInt::of_int(k + m)) * gamma_value(HalfInt::of_int(m + 1));
}

std::variant<PiMonomial, double> ikeda_integral_1(HalfInt alpha, HalfInt beta, const Rat& z) {
    if (!(HalfInt{0} < beta && beta < alpha))
        throw PreconditionError("ikeda_integral_1: need 0 < beta < alpha");
    if (z.sign() <= 0) throw PreconditionError("ikeda_integral_1: need z > 0");
    HalfInt diff = beta - alpha;
    PiMonomial gammas = GammaRatio{{alpha - beta, beta}, {alpha}}.value();
    if (diff.is_integer()) {
        return gammas * PiMonomial::from_rat(z.pow(diff.as_int()));
    }
    return std::pow(z.to_double(), diff.to_double()) * gammas.to_double();
}

double ikeda_integral_1_value(double alpha, double beta, double z) {
    return std::pow(z, beta - alpha) *
           std::exp(std::lgamma(alpha - beta) + std::lgamma(beta) - std::lgamma(alpha));
}

PiMonomial ikeda_integral_2(HalfInt alpha, HalfInt beta) {
    HalfInt s = alpha + beta;
    if (s.twice <= 2) throw PreconditionError("ikeda_integral_2: diverges for alpha+beta <= 1");
    if (!s.is_integer())
        throw PreconditionError("ikeda_integral_2: alpha+beta must be an integer");
    PiMonomial gammas = GammaRatio{{s - 1}, {alpha, beta}}.value();
    return PiMonomial::make(Rat(1), 2 - s.as_int(), 2) * gammas;
}

std::vector<HalfInt> arch_r_factor_shifts(int k1, int k2, int k3, bool balanced) {
    // Unbalanced: zeta_C(s + (k1+k2+k3-3)/2) zeta_C(s + (k3-k2-k1+1)/2)
    //             zeta_C(s + (k3-k2+k1-1)/2) zeta_C(s + (k3+k2-k1-1)/2);
    // balanced flips the second shift to (k1+k2-k3-1)/2.
    int second = balanced ? (k1 + k2 - k3 - 1) : (k3 - k2 - k1 + 1);
    return {HalfInt{k1 + k2 + k3 - 3}, HalfInt{second}, HalfInt{k3 - k2 + k1 - 1},
            HalfInt{k3 + k2 - k1 - 1}};
}

PiMonomial arch_normalization(int k1, int k2, int k3, bool balanced) {
    // zeta_R(2)^-2 * prod_i [zeta_C(k_i) zeta_R(2)] / L(1/2, r)
    PiMonomial num = zeta_real(HalfInt::of_int(2)) * zeta_complex(k1) * zeta_complex(k2) *
                     zeta_complex(k3);
    PiMonomial den = PiMonomial::one();
    for (HalfInt mu : arch_r_factor_shifts(k1, k2, k3, balanced)) {
        HalfInt arg = mu + HalfInt{1};
        if (arg.twice % 2 != 0 || arg.as_int() <= 0)
            throw PoleError("arch_normalization: zeta_C pole at shift " + mu.str());
        den = den * zeta_complex(arg.as_int());
    }
    return num / den;
}

UnbalancedClosed zeta_unbalanced_closed(int k1, int k2, int k3) {
    if (k1 < 1 || k2 < 1 || k3 < 1)
        throw PreconditionError("zeta_unbalanced_closed: weights must be positive");
    if ((k1 + k2 + k3) % 2 != 0)
        throw PreconditionError("zeta_unbalanced_closed: weight parity violated");
    if (k3 < k1 + k2 || k3 < k1 || k3 < k2)
        throw PreconditionError("zeta_unbalanced_closed: requires k3 = max and k3 >= k1+k2");
    UnbalancedClosed out;
    out.m = (k3 - k1 - k2) / 2;
    const int m = out.m;
    out.integral = PiMonomial::make(Rat(1), 2 - 4 * m, 2 * (1 - 2 * m)) *
                   GammaRatio{{HalfInt::of_int(k3 - m - 1), HalfInt::of_int(k2 + m),
                               HalfInt::of_int(k1 + m), HalfInt::of_int(m + 1)},
                              {HalfInt::of_int(k1), HalfInt::of_int(k2), HalfInt::of_int(k3)}}
                       .value();
    out.istar = PiMonomial::make(Rat(1), k1 + k2 - k3 + 1, 0);
    return out;
}

Rat raising_constant(int k, int n, int l) {
    if (n < 0 || l < 0) throw PreconditionError("raising_constant: negative index");
    return Rat(2).pow(l) * rising_factorial(HalfInt::of_int(k + n), l);
}

PiMonomial rankin_selberg_closed(int k1, int k2, int k3, int m1, int m2) {
    int half_sum = (k1 + k2 + k3) / 2;
    if ((k1 + k2 + k3) % 2 != 0)
        throw PreconditionError("rankin_selberg_closed: weight parity violated");
    PiMonomial four_pi_pow = PiMonomial::make(Rat(1), 2 * (1 - half_sum), 2 * (1 - half_sum));
    PiMonomial gammas = GammaRatio{{HalfInt::of_int(half_sum - 1), HalfInt::of_int(k2 + m1 + m2)},
                                   {HalfInt::of_int(k2 + m2)}}
                            .value();
    return PiMonomial::make(Rat(m1 % 2 == 0 ? 1 : -1), k1 + k3 + m1, 0) * four_pi_pow * gammas;
}

BalancedTriple::BalancedTriple(int k1_, int k2_, int k3_) : k1(k1_), k2(k2_), k3(k3_) {
    if (k1 < 2 || k2 < 2 || k3 < 2)
        throw PreconditionError("BalancedTriple: weights must be >= 2");
    if ((k1 + k2 + k3) % 2 != 0)
        throw PreconditionError("BalancedTriple: weight parity violated");
    ks1 = (k2 + k3 - k1 - 2) / 2;
    ks2 = (k1 + k3 - k2 - 2) / 2;
    ks3 = (k1 + k2 - k3 - 2) / 2;
    if (ks1 < 0 || ks2 < 0 || ks3 < 0)
        throw PreconditionError("BalancedTriple: triple is not balanced");
}

size_t InvariantVector::index(int d1, int d2, int d3) const {
    return (static_cast<size_t>(d1) * static_cast<size_t>(t_.k2 - 1) +
            static_cast<size_t>(d2)) *
               static_cast<size_t>(t_.k3 - 1) +
           static_cast<size_t>(d3);
}

int InvariantVector::dim(int slot) const {
    switch (slot) {
        case 0: return t_.k1 - 1;
        case 1: return t_.k2 - 1;
        default: return t_.k3 - 1;
    }
}

const Rat& InvariantVector::at(int d1, int d2, int d3) const {
    return data_[index(d1, d2, d3)];
}

bool InvariantVector::nonzero() const {
    for (const Rat& r : data_)
        if (!r.is_zero()) return true;
    return false;
}

InvariantVector::InvariantVector(const BalancedTriple& t) : t_(t) {
    data_.assign(static_cast<size_t>(t.k1 - 1) * static_cast<size_t>(t.k2 - 1) *
                     static_cast<size_t>(t.k3 - 1),
                 Rat(0));
    // (X1 Y2 - X2 Y1)^ks3 (X2 Y3 - X3 Y2)^ks1 (X3 Y1 - X1 Y3)^ks2, expanded.
    for (int c3 = 0; c3 <= t.ks3; ++c3) {
        for (int c1 = 0; c1 <= t.ks1; ++c1) {
            for (int c2 = 0; c2 <= t.ks2; ++c2) {
                int d1 = c3 + t.ks2 - c2;
                int d2 = t.ks3 - c3 + c1;
                int d3 = t.ks1 - c1 + c2;
                int sign_exp = (t.ks3 - c3) + (t.ks1 - c1) + (t.ks2 - c2);
                Rat coeff = Rat::binomial(t.ks3, c3) * Rat::binomial(t.ks1, c1) *
                            Rat::binomial(t.ks2, c2) * Rat(sign_exp % 2 == 0 ? 1 : -1);
                data_[index(d1, d2, d3)] += coeff;
            }
        }
    }
}

InvariantVector invariant_vector(const BalancedTriple& t) { return InvariantVector(t); }

Rat balanced_pairing_gamma(const BalancedTriple& t) {
    PiMonomial v = GammaRatio{{HalfInt::of_int(t.ks1 + t.ks2 + t.ks3 + 2),
                               HalfInt::of_int(t.ks1 + 1), HalfInt::of_int(t.ks2 + 1),
                               HalfInt::of_int(t.ks3 + 1)},
                              {HalfInt::of_int(t.ks1 + t.ks2 + 1),
                               HalfInt::of_int(t.ks1 + t.ks3 + 1),
                               HalfInt::of_int(t.ks2 + t.ks3 + 1)}}
                      .value();
    return v.as_rat();
}

Rat balanced_pairing_bilinear(const InvariantVector& v) {
    const BalancedTriple& t = v.triple();
    Rat out(0);
    for (int d1 = 0; d1 <= t.k1 - 2; ++d1) {
        for (int d2 = 0; d2 <= t.k2 - 2; ++d2) {
            for (int d3 = 0; d3 <= t.k3 - 2; ++d3) {
                const Rat& a = v.at(d1, d2, d3);
                if (a.is_zero()) continue;
                const Rat& b = v.at(t.k1 - 2 - d1, t.k2 - 2 - d2, t.k3 - 2 - d3);
                if (b.is_zero()) continue;
                Rat pair = Rat((d1 + d2 + d3) % 2 == 0 ? 1 : -1) /
                           (Rat::binomial(t.k1 - 2, d1) * Rat::binomial(t.k2 - 2, d2) *
                            Rat::binomial(t.k3 - 2, d3));
                out += a * b * pair;
            }
        }
    }
    return out;
}

namespace {

// Monomial integral over SU(2) of total volume 2:
// int a^p conj(a)^q b^r conj(b)^s du = [p==q][r==s] 2 p! r! / (p+r+1)!.
Rat su2_moment(int p, int q, int r, int s) {
    if (p != q || r != s) return Rat(0);
    return Rat(2) * Rat::factorial(static_cast<unsigned long>(p)) *
           Rat::factorial(static_cast<unsigned long>(r)) /
           Rat::factorial(static_cast<unsigned long>(p + r + 1));
}

// Coefficient of X^d Y^(k-2-d) in (aX - bc Y)^n (bX + ac Y)^(k-2-n), as a
// polynomial in the symbols a, ac, b, bc.
SatakePoly rho_entry(int k, int n, int d) {
    SatakePoly out;
    int n2 = k - 2 - n;
    for (int j = std::max(0, d - n2); j <= std::min(n, d); ++j) {
        int l = d - j;
        Rat c = Rat::binomial(n, j) * Rat::binomial(n2, l) *
                Rat((n - j) % 2 == 0 ? 1 : -1);
        Mono m;
        if (j) m["a"] = j;
        if (n - j) m["bc"] = n - j;
        if (l) m["b"] = l;
        if (n2 - l) m["ac"] = n2 - l;
        out.add_term(m, c);
    }
    return out;
}

} // namespace

Rat balanced_pairing_moment_oracle(const InvariantVector& v) {
    const BalancedTriple& t = v.triple();
    // v1 = X1^(k1-2) x Y2^(k2-2) x X3^ks1 Y3^ks2, v2 with slots 1,2 flipped
    // and slot 3 exponents swapped; then
    // <P,P> = <v1,P><v2,P> / ((1/2) int <Pi(u) v1, v2> du).
    auto pair_with_tensor = [&](int e1, int e2, int e3) {
        const Rat& entry = v.at(t.k1 - 2 - e1, t.k2 - 2 - e2, t.k3 - 2 - e3);
        Rat denom = Rat::binomial(t.k1 - 2, e1) * Rat::binomial(t.k2 - 2, e2) *
                    Rat::binomial(t.k3 - 2, e3);
        return entry * Rat((e1 + e2 + e3) % 2 == 0 ? 1 : -1) / denom;
    };
    Rat v1P = pair_with_tensor(t.k1 - 2, 0, t.ks1);
    Rat v2P = pair_with_tensor(0, t.k2 - 2, t.ks2);

    // <Pi(u) v1, v2>: slot pairing forces the X-degree of rho(u) v1 in slot j
    // to be (k_j - 2) - (v2 slot-j X-degree).
    SatakePoly s1 = rho_entry(t.k1, t.k1 - 2, t.k1 - 2); // against Y1^(k1-2)
    SatakePoly s2 = rho_entry(t.k2, 0, 0);               // against X2^(k2-2)
    SatakePoly s3 = rho_entry(t.k3, t.ks1, t.ks1);       // against X3^ks2 Y3^ks1
    Rat pairing_consts = Rat((t.k1 - 2) % 2 == 0 ? 1 : -1) /
                         Rat::binomial(t.k1 - 2, t.k1 - 2) *
                         Rat(1) / Rat::binomial(t.k2 - 2, 0) *
                         Rat((t.ks1) % 2 == 0 ? 1 : -1) / Rat::binomial(t.k3 - 2, t.ks1);
    SatakePoly integrand = s1 * s2 * s3;
    Rat integral(0);
    for (const auto& [mono, c] : integrand.terms()) {
        auto get = [&mono](const char* name) {
            auto it = mono.find(name);
            return it == mono.end() ? 0 : it->second;
        };
        integral += c * su2_moment(get("a"), get("ac"), get("b"), get("bc"));
    }
    Rat l_pairing = pairing_consts * integral / Rat(2);
    if (l_pairing.is_zero())
        throw PreconditionError("balanced_pairing_moment_oracle: degenerate projection");
    return v1P * v2P / l_pairing;
}

PiMonomial zeta_balanced(const BalancedTriple& t) {
    Rat num = Rat(t.k1 - 1) * Rat(t.k2 - 1) * Rat(t.k3 - 1);
    return PiMonomial::make(num / Rat(4), 0, -4);
}

} // namespace trizeta
