#include "trizeta/nonarch_oracle.hpp"

#include "trizeta/errors.hpp"

#include <cmath>
#include <cstdlib>

#ifdef TRIZETA_HAVE_OPENMP
#include <omp.h>
#endif

namespace trizeta {

namespace {

using C = std::complex<double>;

// Macdonald value at diag(w^m, 1), numeric, via the pole-free polynomial.
C mac(C alpha, double q, int m) {
    m = std::abs(m);
    if (m == 0) return 1.0;
    C sum = 0.0;
    C apow = std::pow(alpha, -m);
    C a2 = alpha * alpha;
    for (int j = m; j >= 0; --j) {
        sum += apow; // alpha^(m-2j), j descending
        apow *= a2;
    }
    C sum2 = 0.0;
    if (m >= 2) {
        apow = std::pow(alpha, -(m - 2));
        for (int j = m - 2; j >= 0; --j) {
            sum2 += apow;
            apow *= a2;
        }
    }
    double qi = 1.0 / q;
    return std::pow(q, -0.5 * m) / (1.0 + qi) * (sum - qi * sum2);
}

double sgn_pow(int sign, int n) { return (sign == 1 || n % 2 == 0) ? 1.0 : -1.0; }

struct LatticeSum {
    double value = 0.0;
    double tail = 0.0;
};

// (1+q)^-1 sum_n [plain(n) q^|n| + weyl(n) q^|n-1|], |n| <= n_max, with a
// geometric tail estimate from the outermost terms.
template <typename Plain, typename Weyl>
LatticeSum iwahori_sum(long q, int n_max, Plain plain, Weyl weyl) {
    double total = 0.0;
    double qd = static_cast<double>(q);
    double last = 0.0, prev = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        // underflowed coefficients multiply overflowing weights; their true
        // contribution is below representability, so skip them
        double p = plain(n), w = weyl(n);
        double term = (p == 0.0 ? 0.0 : p * std::pow(qd, std::abs(n))) +
                      (w == 0.0 ? 0.0 : w * std::pow(qd, std::abs(n - 1)));
        total += term;
        if (n == n_max) last = std::abs(term);
        if (n == n_max - 1) prev = std::abs(term);
    }
    LatticeSum out;
    out.value = total / (1.0 + qd);
    double r = prev > 0.0 ? std::min(last / prev, 0.9) : 0.0;
    out.tail = 2.0 * (last * r / (1.0 - r) + last) / (1.0 + qd);
    return out;
}

// sum_{n>=0} f(n) Vol(X_n), Vol(X_0) = 1, Vol(X_n) = q^n (1 + q^-1).
template <typename F>
LatticeSum cartan_sum(long q, int n_max, F f) {
    double qd = static_cast<double>(q);
    double total = f(0);
    double last = 0.0, prev = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        double term = f(n) * std::pow(qd, n) * (1.0 + 1.0 / qd);
        total += term;
        if (n == n_max) last = std::abs(term);
        if (n == n_max - 1) prev = std::abs(term);
    }
    LatticeSum out;
    out.value = total;
    double r = prev > 0.0 ? std::min(last / prev, 0.9) : 0.0;
    out.tail = last * r / (1.0 - r) + last;
    return out;
}

// Exact value of prod of inverse factors at s = 1/2 (X = q^-1/2) with
// rational variable values; u X-parities must pair to integer q-powers.
Rat exact_inverse_product_at_half(const LaurentLFactor& L, const std::map<std::string, Rat>& vars) {
    Rat out(1);
    for (const XPoly& f : L.inverse_factors()) {
        Rat val(0);
        for (int d = 0; d <= f.degree(); ++d) {
            for (const auto& [mono, coeff] : f.coeff(d).terms()) {
                Rat c = coeff;
                int half_power = d;
                for (const auto& [name, exp] : mono) {
                    if (name == "u") {
                        half_power += exp;
                    } else {
                        auto it = vars.find(name);
                        if (it == vars.end())
                            throw PreconditionError("exact L-value: unbound variable " + name);
                        c *= it->second.pow(exp);
                    }
                }
                if (half_power % 2 != 0)
                    throw PreconditionError("exact L-value: odd q^(1/2) power survives");
                c *= Rat(1, L.q()).pow(half_power / 2);
                val += c;
            }
        }
        if (val.is_zero()) throw PoleError("exact L-value: inverse factor vanishes");
        out *= val;
    }
    return out;
}

Rat exact_adjoint_inverse_at_one(const NonarchCase& c, const std::vector<Rat>& satake) {
    Rat out(1);
    long qk = c.field_ramified ? c.q : c.q * c.q;
    long qe = c.field_ramified ? c.q : c.q * c.q * c.q;
    for (size_t i = 0; i < c.comps.size(); ++i) {
        long q_comp = c.q;
        if (c.shape == EtaleShape::QuadTimesF && i == 0) q_comp = qk;
        if (c.shape == EtaleShape::CubicField) q_comp = qe;
        if (c.comps[i].special) {
            out *= Rat(1) - Rat(1, q_comp).pow(2);
        } else {
            Rat a = i < satake.size() ? satake[i] : Rat(1);
            Rat qi(1, q_comp);
            out *= (Rat(1) - a.pow(2) * qi) * (Rat(1) - qi) * (Rat(1) - qi / a.pow(2));
        }
    }
    return out;
}

} // namespace

Rat zeta_division_exact(const NonarchCase& c, const std::vector<Rat>& satake) {
    if (!c.division) throw PreconditionError("zeta_division_exact: matrix-algebra case");
    // Two cells: the identity cell and the uniformizer cell, unit volume each.
    Rat raw(0);
    switch (c.shape) {
        case EtaleShape::Split:
            raw = Rat(1) + Rat(c.sign_product());
            break;
        case EtaleShape::QuadTimesF: {
            const PadicComponent& pp = c.comps[0];
            int chi = c.comps[1].sign;
            Rat phi;
            if (!pp.special) {
                if (c.field_ramified) {
                    phi = Rat(1); // w_D central up to units
                } else {
                    Rat a = satake.empty() ? Rat(1) : satake[0];
                    // Macdonald over K (residue size q^2) at distance 1.
                    phi = (a + Rat(1) / a) * Rat(1, c.q) / (Rat(1) + Rat(1, c.q).pow(2));
                }
            } else {
                phi = -Rat(pp.sign); // Weyl-translated Iwahori value at w^(1-1)
            }
            raw = Rat(1) + Rat(chi) * phi;
            break;
        }
        case EtaleShape::CubicField:
            raw = Rat(2); // trivial character
            break;
    }

    NonarchClosed closed = zeta_nonarch_closed(c);
    std::map<std::string, Rat> vars;
    for (size_t i = 0; i < c.comps.size(); ++i)
        if (!c.comps[i].special)
            vars[std::string(1, static_cast<char>('a' + i))] =
                i < satake.size() ? satake[i] : Rat(1);
    Rat r_inv = exact_inverse_product_at_half(closed.lfactor_r, vars);
    Rat ad_inv = exact_adjoint_inverse_at_one(c, satake);
    // I* = zeta-ratio * L(1,Ad)/L(1/2,r) * I = zeta-ratio * r_inv/ad_inv * I
    return nonarch_zeta_ratio(c) * r_inv / ad_inv * raw;
}

NonarchOracleResult zeta_nonarch_oracle(const NonarchCase& c,
                                        const std::vector<std::complex<double>>& satake,
                                        const NonarchOracleConfig& cfg) {
    if (cfg.n_max < 10) throw PreconditionError("zeta_nonarch_oracle: n_max >= 10 required");
    const double qd = static_cast<double>(c.q);
    auto alpha_of = [&](size_t slot) -> C {
        C a = slot < satake.size() ? satake[slot] : C(1.0);
        double lo = std::pow(qd, -0.49), hi = std::pow(qd, 0.49);
        if (std::abs(a) <= lo || std::abs(a) >= hi)
            throw PreconditionError("zeta_nonarch_oracle: Satake parameter out of the "
                                    "temperedness window");
        return a;
    };

    NonarchOracleResult out;

    if (c.division) {
        std::vector<Rat> rat_satake; // exact path only at alpha = 1
        bool all_one = true;
        for (size_t i = 0; i < c.comps.size(); ++i)
            if (!c.comps[i].special && i < satake.size() &&
                std::abs(satake[i] - C(1.0)) > 1e-15)
                all_one = false;
        if (all_one) {
            Rat ex = zeta_division_exact(c, {});
            out.exact_istar = ex;
            out.istar = ex.to_double();
            out.raw = 0.0;
            out.converged = true;
            return out;
        }
        // complex Satake: numeric two-term sum, still no truncation
        const PadicComponent& pp = c.comps[0];
        C phi = 1.0;
        if (c.shape == EtaleShape::QuadTimesF) {
            int chi = c.comps[1].sign;
            if (!pp.special) {
                phi = c.field_ramified ? C(1.0) : mac(alpha_of(0), qd * qd, 1);
            } else {
                phi = -static_cast<double>(pp.sign);
            }
            out.raw = 1.0 + static_cast<double>(chi) * phi.real();
        } else {
            out.raw = c.shape == EtaleShape::Split
                          ? 1.0 + static_cast<double>(c.sign_product())
                          : 2.0;
        }
    } else {
        LatticeSum sum;
        switch (c.shape) {
            case EtaleShape::Split: {
                int sp = c.special_count();
                if (sp == 0) {
                    C a = alpha_of(0), b = alpha_of(1), cc = alpha_of(2);
                    sum = cartan_sum(c.q, cfg.n_max, [&](int n) {
                        return (mac(a, qd, n) * mac(b, qd, n) * mac(cc, qd, n)).real();
                    });
                } else if (sp == 1) {
                    int s = 0;
                    std::vector<size_t> sph;
                    for (size_t i = 0; i < 3; ++i) {
                        if (c.comps[i].special)
                            s = c.comps[i].sign;
                        else
                            sph.push_back(i);
                    }
                    C a = alpha_of(sph[0]), b = alpha_of(sph[1]); // b carries t
                    sum = iwahori_sum(
                        c.q, cfg.n_max,
                        [&](int n) {
                            return sgn_pow(s, n) * std::pow(qd, -std::abs(n)) *
                                   (mac(a, qd, n) * mac(b, qd, n)).real();
                        },
                        [&](int n) {
                            return -sgn_pow(s, n) * std::pow(qd, -std::abs(n - 1)) *
                                   (mac(a, qd, n) * mac(b, qd, n - 2)).real();
                        });
                } else if (sp == 2) {
                    int sigma = 1;
                    size_t sph = 0;
                    for (size_t i = 0; i < 3; ++i) {
                        if (c.comps[i].special)
                            sigma *= c.comps[i].sign;
                        else
                            sph = i;
                    }
                    C a = alpha_of(sph);
                    sum = iwahori_sum(
                        c.q, cfg.n_max,
                        [&](int n) {
                            return sgn_pow(sigma, n) * std::pow(qd, -2.0 * std::abs(n)) *
                                   mac(a, qd, n).real();
                        },
                        [&](int n) {
                            return sgn_pow(sigma, n) * std::pow(qd, -2.0 * std::abs(n - 1)) *
                                   mac(a, qd, n).real();
                        });
                } else {
                    int sigma = c.sign_product();
                    sum = iwahori_sum(
                        c.q, cfg.n_max,
                        [&](int n) {
                            return sgn_pow(sigma, n) * std::pow(qd, -3.0 * std::abs(n));
                        },
                        [&](int n) {
                            return -sgn_pow(sigma, n) * std::pow(qd, -3.0 * std::abs(n - 1));
                        });
                }
                break;
            }
            case EtaleShape::QuadTimesF: {
                const PadicComponent& pp = c.comps[0];
                const PadicComponent& pi = c.comps[1];
                if (!pp.special && !pi.special) {
                    C a = alpha_of(0), b = alpha_of(1);
                    if (c.field_ramified) {
                        sum = cartan_sum(c.q, cfg.n_max, [&](int n) {
                            return (mac(a, qd, 2 * n) * mac(b, qd, n)).real();
                        });
                    } else {
                        sum = cartan_sum(c.q, cfg.n_max, [&](int n) {
                            return (mac(a, qd * qd, n) * mac(b, qd, n)).real();
                        });
                    }
                } else if (pp.special && !pi.special) {
                    C b = alpha_of(1);
                    int s = pp.sign;
                    if (c.field_ramified) {
                        // t = diag(w_F, 1) on the K slot; substituting
                        // h -> t h t^-1 moves the twist onto the spherical
                        // factor, which keeps the integrand Iwahori-invariant.
                        sum = iwahori_sum(
                            c.q, cfg.n_max,
                            [&](int n) {
                                return std::pow(qd, -2.0 * std::abs(n)) *
                                       mac(b, qd, n).real();
                            },
                            [&](int n) {
                                return -std::pow(qd, -1.0 * std::abs(2 * n - 1)) *
                                       mac(b, qd, n - 2).real();
                            });
                    } else {
                        sum = iwahori_sum(
                            c.q, cfg.n_max,
                            [&](int n) {
                                return sgn_pow(s, n) * std::pow(qd, -2.0 * std::abs(n)) *
                                       mac(b, qd, n).real();
                            },
                            [&](int n) {
                                return -sgn_pow(s, n) *
                                       std::pow(qd, -2.0 * std::abs(n - 1)) *
                                       mac(b, qd, n).real();
                            });
                    }
                } else if (!pp.special && pi.special) {
                    // K ramified, chi(w) = -1; t = diag(w_K^-1, 1) on the K slot.
                    C a = alpha_of(0);
                    int chi = pi.sign;
                    sum = iwahori_sum(
                        c.q, cfg.n_max,
                        [&](int n) {
                            return sgn_pow(chi, n) * std::pow(qd, -std::abs(n)) *
                                   mac(a, qd, 2 * n).real();
                        },
                        [&](int n) {
                            return -sgn_pow(chi, n) * std::pow(qd, -std::abs(n - 1)) *
                                   mac(a, qd, 2 * n - 2).real();
                        });
                } else {
                    int s_prime = pp.sign, s = pi.sign;
                    if (c.field_ramified) {
                        sum = iwahori_sum(
                            c.q, cfg.n_max,
                            [&](int n) {
                                return sgn_pow(s, n) * std::pow(qd, -3.0 * std::abs(n));
                            },
                            [&](int n) {
                                return sgn_pow(s, n) *
                                       std::pow(qd, -static_cast<double>(std::abs(2 * n - 1) +
                                                                         std::abs(n - 1)));
                            });
                    } else {
                        int sigma = s_prime * s;
                        sum = iwahori_sum(
                            c.q, cfg.n_max,
                            [&](int n) {
                                return sgn_pow(sigma, n) * std::pow(qd, -3.0 * std::abs(n));
                            },
                            [&](int n) {
                                return sgn_pow(sigma, n) * std::pow(qd, -3.0 * std::abs(n - 1));
                            });
                    }
                }
                break;
            }
            case EtaleShape::CubicField: {
                const PadicComponent& Pi = c.comps[0];
                if (!Pi.special) {
                    C a = alpha_of(0);
                    if (c.field_ramified) {
                        sum = cartan_sum(c.q, cfg.n_max,
                                         [&](int n) { return mac(a, qd, 3 * n).real(); });
                    } else {
                        sum = cartan_sum(c.q, cfg.n_max,
                                         [&](int n) { return mac(a, qd * qd * qd, n).real(); });
                    }
                } else {
                    int s = Pi.sign;
                    sum = iwahori_sum(
                        c.q, cfg.n_max,
                        [&](int n) {
                            return sgn_pow(s, n) * std::pow(qd, -3.0 * std::abs(n));
                        },
                        [&](int n) {
                            return -sgn_pow(s, n) * std::pow(qd, -3.0 * std::abs(n - 1));
                        });
                }
                break;
            }
        }
        out.raw = sum.value;
        out.tail_bound = sum.tail;
    }

    // Normalize: I* = zeta-ratio * L(1,Ad)/L(1/2,r) * I.
    NonarchClosed closed = zeta_nonarch_closed(c);
    std::map<std::string, C> vars;
    for (size_t i = 0; i < c.comps.size(); ++i)
        vars[std::string(1, static_cast<char>('a' + i))] =
            i < satake.size() ? satake[i] : C(1.0);
    C r_val = closed.lfactor_r.value_at(0.5, vars);
    C ad_val = nonarch_adjoint_value(c, std::vector<C>(satake.begin(), satake.end()));
    double norm = (nonarch_zeta_ratio(c).to_double() * (ad_val / r_val)).real();
    out.istar = out.raw * norm;
    out.tail_bound *= std::abs(norm);
    out.converged = out.tail_bound <= cfg.tol * std::max(std::abs(out.istar), 1e-30);
    return out;
}

std::vector<NonarchCase> enumerate_cases(long q) {
    std::vector<NonarchCase> out;
    using S = EtaleShape;
    PadicComponent sph{false, 1};
    auto sp = [](int sign) { return PadicComponent{true, sign}; };

    // Split, matrix algebra.
    out.emplace_back(S::Split, false, false, q, std::vector<PadicComponent>{sph, sph, sph});
    out.emplace_back(S::Split, false, false, q, std::vector<PadicComponent>{sp(1), sph, sph});
    out.emplace_back(S::Split, false, false, q, std::vector<PadicComponent>{sp(-1), sph, sph});
    out.emplace_back(S::Split, false, false, q, std::vector<PadicComponent>{sp(1), sp(-1), sph});
    out.emplace_back(S::Split, false, false, q, std::vector<PadicComponent>{sp(1), sp(1), sph});
    out.emplace_back(S::Split, false, false, q,
                     std::vector<PadicComponent>{sp(1), sp(1), sp(-1)});
    out.emplace_back(S::Split, false, false, q,
                     std::vector<PadicComponent>{sp(-1), sp(-1), sp(-1)});
    // Split, division algebra.
    out.emplace_back(S::Split, false, true, q, std::vector<PadicComponent>{sp(1), sp(1), sp(1)});
    out.emplace_back(S::Split, false, true, q,
                     std::vector<PadicComponent>{sp(-1), sp(-1), sp(1)});

    // Quad x F, matrix algebra.
    for (bool ram : {false, true}) {
        out.emplace_back(S::QuadTimesF, ram, false, q, std::vector<PadicComponent>{sph, sph});
        out.emplace_back(S::QuadTimesF, ram, false, q, std::vector<PadicComponent>{sp(1), sph});
        out.emplace_back(S::QuadTimesF, ram, false, q, std::vector<PadicComponent>{sp(-1), sph});
    }
    out.emplace_back(S::QuadTimesF, true, false, q, std::vector<PadicComponent>{sph, sp(-1)});
    out.emplace_back(S::QuadTimesF, false, false, q, std::vector<PadicComponent>{sp(1), sp(1)});
    out.emplace_back(S::QuadTimesF, false, false, q, std::vector<PadicComponent>{sp(-1), sp(-1)});
    out.emplace_back(S::QuadTimesF, true, false, q, std::vector<PadicComponent>{sp(1), sp(1)});
    out.emplace_back(S::QuadTimesF, true, false, q, std::vector<PadicComponent>{sp(1), sp(-1)});
    out.emplace_back(S::QuadTimesF, true, false, q, std::vector<PadicComponent>{sp(-1), sp(1)});
    out.emplace_back(S::QuadTimesF, true, false, q, std::vector<PadicComponent>{sp(-1), sp(-1)});
    // Quad x F, division algebra.
    out.emplace_back(S::QuadTimesF, false, true, q, std::vector<PadicComponent>{sph, sp(1)});
    out.emplace_back(S::QuadTimesF, false, true, q, std::vector<PadicComponent>{sph, sp(-1)});
    out.emplace_back(S::QuadTimesF, true, true, q, std::vector<PadicComponent>{sph, sp(1)});
    out.emplace_back(S::QuadTimesF, false, true, q, std::vector<PadicComponent>{sp(1), sp(-1)});
    out.emplace_back(S::QuadTimesF, false, true, q, std::vector<PadicComponent>{sp(-1), sp(1)});

    // Cubic field.
    for (bool ram : {false, true}) {
        out.emplace_back(S::CubicField, ram, false, q, std::vector<PadicComponent>{sph});
        out.emplace_back(S::CubicField, ram, false, q, std::vector<PadicComponent>{sp(-1)});
        out.emplace_back(S::CubicField, ram, true, q, std::vector<PadicComponent>{sp(1)});
    }
    return out;
}

std::vector<NonarchSweepRow> nonarch_sweep(const std::vector<NonarchCase>& cases,
                                           const std::vector<std::complex<double>>& satake,
                                           const NonarchOracleConfig& cfg, bool parallel) {
    std::vector<NonarchSweepRow> rows(cases.size());
    auto run_one = [&](size_t i) {
        const NonarchCase& c = cases[i];
        NonarchOracleResult r = zeta_nonarch_oracle(c, satake, cfg);
        double closed = zeta_nonarch_closed(c).istar.to_double();
        rows[i] = {c.label(), c.q, r.istar, closed,
                   std::abs(r.istar - closed) / std::abs(closed), r.converged};
    };
#ifdef TRIZETA_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(cases.size()); ++i)
            run_one(static_cast<size_t>(i));
        return rows;
    }
#else
    (void)parallel;
#endif
    for (size_t i = 0; i < cases.size(); ++i) run_one(i);
    return rows;
}

} // namespace trizeta
