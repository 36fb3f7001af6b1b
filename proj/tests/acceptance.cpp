// Acceptance suite: one criterion per section, one pass/fail line each, with
// every tolerance pinned in code. Exit status is nonzero iff a criterion
// fails. Usage: acceptance [descriptor-dir].
#include "trizeta/arch.hpp"
#include "trizeta/arch_oracle.hpp"
#include "trizeta/combinatorics.hpp"
#include "trizeta/errors.hpp"
#include "trizeta/global_assembly.hpp"
#include "trizeta/nonarch_oracle.hpp"
#include "trizeta/periods.hpp"
#include "trizeta/report.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef TRIZETA_HAVE_OPENMP
#include <omp.h>
#endif

using namespace trizeta;

namespace {

int g_failed = 0;

class Criterion {
public:
    explicit Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (!first_failure_.empty()) first_failure_ += "; ";
            first_failure_ += detail;
        }
    }

    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

    ~Criterion() {
        double secs = elapsed_s();
        std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok_ ? "PASS" : "FAIL", number_,
                    title_.c_str(), secs, ok_ ? "" : " -- ",
                    ok_ ? "" : first_failure_.c_str());
        if (!ok_) ++g_failed;
    }

private:
    int number_;
    std::string title_;
    bool ok_ = true;
    std::string first_failure_;
    std::chrono::steady_clock::time_point start_;
};

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::abs(b);
}

} // namespace

int main(int argc, char** argv) {
    std::string descriptor_dir = argc > 1 ? argv[1] : "descriptors";

    // 1. Archimedean unbalanced: full sweep k_i <= 12, oracle vs
    //    I* = 2^(k1+k2-k3+1) within 1e-6 relative, under 60 s.
    {
        Criterion c(1, "archimedean unbalanced sweep (k <= 12, rel 1e-6, <= 60 s)");
        auto triples = unbalanced_triples(12);
        c.require(!triples.empty(), "empty sweep");
        ArchOracleConfig cfg;
        auto rows = unbalanced_sweep(triples, cfg, /*parallel=*/true);
        for (const auto& row : rows) {
            std::ostringstream tag;
            tag << "(" << row.k1 << "," << row.k2 << "," << row.k3 << ") rel "
                << row.rel_err;
            c.require(row.converged, "quadrature not converged at " + tag.str());
            c.require(row.rel_err <= 1e-6, "mismatch at " + tag.str());
        }
        c.require(c.elapsed_s() <= 60.0, "sweep exceeded 60 s");
    }

    // 2. Raising-split invariance. The splits must satisfy m1+m2 =
    //    (k3-k1-k2)/2, so (2,2,6) admits (0,1),(1,0) and the three-way
    //    comparison (0,2),(1,1),(2,0) lives at (2,2,8).
    {
        Criterion c(2, "raising-split invariance at (2,2,6) and (2,2,8), pairwise 1e-6");
        auto pairwise = [&](int k3, std::vector<std::pair<int, int>> splits) {
            std::vector<double> vals;
            for (auto [m1, m2] : splits) {
                ArchOracleResult r = zeta_unbalanced_oracle(2, 2, k3, m1, m2);
                c.require(r.converged, "not converged at k3=" + std::to_string(k3));
                vals.push_back(r.istar);
            }
            for (size_t i = 0; i < vals.size(); ++i)
                for (size_t j = i + 1; j < vals.size(); ++j)
                    c.require(close_rel(vals[i], vals[j], 1e-6),
                              "split values differ at k3=" + std::to_string(k3));
        };
        pairwise(6, {{0, 1}, {1, 0}});
        pairwise(8, {{0, 2}, {1, 1}, {2, 0}});
    }

    // 3. Archimedean balanced: exact pairing equality for all k_i <= 12.
    {
        Criterion c(3, "archimedean balanced exact pairing (k <= 12, <= 5 s)");
        auto triples = balanced_triples(12);
        c.require(!triples.empty(), "empty balanced sweep");
        for (auto [k1, k2, k3] : triples) {
            BalancedTriple t(k1, k2, k3);
            Rat gamma = balanced_pairing_gamma(t);
            Rat bilinear = balanced_pairing_bilinear(invariant_vector(t));
            std::ostringstream tag;
            tag << "(" << k1 << "," << k2 << "," << k3 << ")";
            c.require(gamma == bilinear, "pairing mismatch at " + tag.str());
            PiMonomial istar = zeta_balanced(t);
            Rat expect = Rat(k1 - 1) * Rat(k2 - 1) * Rat(k3 - 1);
            c.require(istar == PiMonomial::make(expect / Rat(4), 0, -4),
                      "I* emission wrong at " + tag.str());
        }
        c.require(c.elapsed_s() <= 5.0, "balanced sweep exceeded 5 s");
    }

    // 4. Non-archimedean matrix cases: q in {2,3,5}, unit and generic Satake,
    //    n_max = 80, rel 1e-8, spot targets pinned.
    {
        Criterion c(4, "non-archimedean matrix cases (q in {2,3,5}, rel 1e-8, <= 30 s)");
        NonarchOracleConfig cfg;
        cfg.n_max = 80;
        cfg.tol = 1e-8;
        std::vector<std::vector<std::complex<double>>> satake_sets = {
            {},
            {std::polar(1.0, 0.8191), std::polar(1.0, 2.113), std::polar(1.0, 1.447)}};
        std::vector<NonarchCase> all;
        for (long q : {2L, 3L, 5L})
            for (const NonarchCase& nc : enumerate_cases(q))
                if (!nc.division) all.push_back(nc);
        for (const auto& satake : satake_sets) {
            auto rows = nonarch_sweep(all, satake, cfg, /*parallel=*/true);
            for (const auto& row : rows) {
                c.require(row.converged, "tail not converged: " + row.label);
                c.require(row.rel_err <= 1e-8,
                          "oracle/closed mismatch: q=" + std::to_string(row.q) + " " +
                              row.label);
            }
        }
        auto spot = [&](const NonarchCase& nc, Rat expect, const std::string& what) {
            NonarchClosed closed = zeta_nonarch_closed(nc);
            c.require(closed.istar == expect, "spot target " + what);
            NonarchOracleResult r = zeta_nonarch_oracle(nc, {}, cfg);
            c.require(close_rel(r.istar, expect.to_double(), 1e-8),
                      "spot oracle " + what);
        };
        spot(NonarchCase(EtaleShape::Split, false, false, 2,
                         {{true, 1}, {false, 1}, {false, 1}}),
             Rat(1, 3), "split one-special q=2 -> 1/3");
        spot(NonarchCase(EtaleShape::Split, false, false, 3,
                         {{true, 1}, {true, 1}, {true, -1}}),
             Rat(8, 9), "three-special q=3 -> 8/9");
        spot(NonarchCase(EtaleShape::CubicField, false, false, 2, {{true, -1}}), Rat(1, 2),
             "cubic-field special unramified q=2 -> 1/2");
        c.require(c.elapsed_s() <= 30.0, "non-archimedean sweep exceeded 30 s");
    }

    // 5. Division-algebra cases: exact agreement, no truncation.
    {
        Criterion c(5, "division-algebra exact two-cell sums (q in {2,3,5})");
        for (long q : {2L, 3L, 5L}) {
            for (const NonarchCase& nc : enumerate_cases(q)) {
                if (!nc.division) continue;
                Rat oracle = zeta_division_exact(nc, {});
                Rat closed = zeta_nonarch_closed(nc).istar;
                c.require(oracle == closed,
                          "q=" + std::to_string(q) + " " + nc.label());
            }
        }
        Rat split2 = zeta_division_exact(
            NonarchCase(EtaleShape::Split, false, true, 2, {{true, 1}, {true, 1}, {true, 1}}),
            {});
        c.require(split2 == Rat(1, 2), "spot: division split q=2 -> 1/2");
        Rat cubic2 = zeta_division_exact(
            NonarchCase(EtaleShape::CubicField, false, true, 2, {{true, 1}}), {});
        c.require(cubic2 == Rat(7, 2), "spot: division cubic unramified q=2 -> 7/2");
    }

    // 6. Identity suites, Whittaker recursion, ikeda quadrature.
    {
        Criterion c(6, "identity suites + Whittaker recursion + ikeda (<= 10 s)");
        long checked = 0, skipped = 0, failed1 = 0, failed2 = 0, failed3 = 0;
#ifdef TRIZETA_HAVE_OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) \
    reduction(+ : checked, skipped, failed1)
#endif
        for (int N = 0; N <= 12; ++N) {
            for (int tz = 1; tz <= 30; ++tz) {
                for (int tw = 1; tw <= 30; ++tw) {
                    try {
                        if (!identity1(N, HalfInt{tz}, HalfInt{tw}).equal) ++failed1;
                        ++checked;
                    } catch (const GammaPoleError&) {
                        ++skipped;
                    }
                }
            }
        }
#ifdef TRIZETA_HAVE_OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) \
    reduction(+ : checked, skipped, failed2)
#endif
        for (int N = 0; N <= 8; ++N) {
            for (int tt = 1; tt <= 30; ++tt) {
                for (int ta = 1; ta <= 30; ++ta) {
                    for (int tb = 1; tb <= 30; ++tb) {
                        try {
                            if (!identity2(N, HalfInt{tt}, HalfInt{ta}, HalfInt{tb}).equal)
                                ++failed2;
                            ++checked;
                        } catch (const GammaPoleError&) {
                            ++skipped;
                        }
                    }
                }
            }
        }
        for (int a = 0; a <= 15; ++a)
            for (int b = 0; b <= 15; ++b)
                for (int n = 0; n <= a && n <= 15; ++n) {
                    if (!identity3(a, b, n).equal) ++failed3;
                    ++checked;
                }
        c.require(failed1 == 0, "identity1 fails " + std::to_string(failed1) + " instances");
        c.require(failed2 == 0, "identity2 fails " + std::to_string(failed2) + " instances");
        c.require(failed3 == 0, "identity3 fails " + std::to_string(failed3) + " instances");
        c.require(checked > 200000, "sweep unexpectedly small (" + std::to_string(checked) +
                                        " checked, " + std::to_string(skipped) + " skipped)");

        for (int k = 1; k <= 10; ++k) {
            WhittakerPoly w = whittaker_poly(k, 0);
            for (int m = 0; m <= 5; ++m) {
                WhittakerPoly next = whittaker_raise(w);
                WhittakerPoly direct = whittaker_poly(k, m + 1);
                bool same = next.coeffs.size() == direct.coeffs.size();
                for (size_t j = 0; same && j < next.coeffs.size(); ++j)
                    same = next.coeffs[j] == direct.coeffs[j];
                c.require(same, "Whittaker recursion at k=" + std::to_string(k));
                w = next;
            }
        }

        c.require(std::abs(ikeda1_quadrature(2, 1, 1) - 1.0) < 1e-9, "ikeda1 (2,1,1)");
        c.require(std::abs(ikeda1_quadrature(3, 1, 1) - 0.5) < 1e-9, "ikeda1 (3,1,1)");
        double i1 =
            std::get<PiMonomial>(ikeda_integral_1(HalfInt{7}, HalfInt{3}, Rat(2))).to_double();
        c.require(std::abs(ikeda1_quadrature(3.5, 1.5, 2.0) - i1) < 1e-9 * i1,
                  "ikeda1 (7/2,3/2,2)");
        for (auto [al, be] : {std::pair{1, 1}, {2, 2}, {3, 1}}) {
            double exact = ikeda_integral_2(HalfInt::of_int(al), HalfInt::of_int(be)).to_double();
            c.require(std::abs(ikeda2_quadrature(al, be) - exact) < 1e-9 * exact,
                      "ikeda2 quadrature");
        }
        c.require(c.elapsed_s() <= 10.0, "identity suites exceeded 10 s");
    }

    // 7. Factorization identities, symbolic plus 10 exact substitutions.
    {
        Criterion c(7, "split-prime L-factor factorizations (deg 8 = 6*2 and 4+2+2)");
        PolyIdentityReport s2 = factorization_check(FactorizationKind::Sym2Twist);
        c.require(s2.equal && s2.lhs.degree() == 8, "Sym^2 x twist symbolic identity");
        PolyIdentityReport s3 = factorization_check(FactorizationKind::Sym3Twists);
        c.require(s3.equal && s3.lhs.degree() == 8, "Sym^3 twists symbolic identity");
        const Rat subs[10][2] = {{Rat(2), Rat(3)},      {Rat(1, 2), Rat(5)},
                                 {Rat(7, 3), Rat(2, 5)}, {Rat(1), Rat(1)},
                                 {Rat(-2), Rat(3, 7)},   {Rat(4, 9), Rat(-1, 2)},
                                 {Rat(5), Rat(5)},       {Rat(3, 2), Rat(2, 3)},
                                 {Rat(-1), Rat(-1)},     {Rat(11, 4), Rat(9, 7)}};
        for (const auto& sub : subs) {
            c.require(factorization_check_at(FactorizationKind::Sym2Twist, sub[0], sub[1]).equal,
                      "Sym^2 substitution");
            c.require(factorization_check_at(FactorizationKind::Sym3Twists, sub[0], sub[1]).equal,
                      "Sym^3 substitution");
        }
    }

    // 8. Global assembly: the worked descriptors' rendered constants.
    {
        Criterion c(8, "worked descriptors render 2^-9, 11 * 2^-7 (with D-part), 2^-8");
        try {
            GlobalDescriptor ex1 =
                load_descriptor(descriptor_dir + "/ex1_unbalanced_level1.json");
            CentralValueConstant c1 = central_constant(ex1);
            c.require(c1.rendered == "2^-9", "ex1 constant, got " + c1.rendered);
            PeterssonConstant p1 = petersson_constant(ex1);
            c.require(p1.rendered == "2^-8", "ex1 Petersson, got " + p1.rendered);

            GlobalDescriptor ex3 = load_descriptor(descriptor_dir + "/ex3_balanced_quad11.json");
            CentralValueConstant c3 = central_constant(ex3);
            c.require(c3.two_exponent == -7 && c3.m == 11 && c3.disc_half_exponent == -1,
                      "ex3 structured constant");
            c.require(c3.rendered == "11 * 2^-7 * D^(-1/2)", "ex3 rendering, got " + c3.rendered);

            // the split three-special variant is kept with its honest nu = 1
            GlobalDescriptor ex2 = load_descriptor(descriptor_dir + "/ex2_balanced_split11.json");
            CentralValueConstant c2 = central_constant(ex2);
            c.require(c2.rendered == "11 * 2^-6" && c2.nu == 1, "ex2 honest constant (nu=1)");
        } catch (const std::exception& e) {
            c.require(false, std::string("descriptor load failed: ") + e.what());
        }
    }

    // 9. Deligne periods: exact exponent vectors of the three branches.
    {
        Criterion c(9, "Deligne period exponent vectors");
        auto expect = [&](PeriodMonomial got, int tpi, int iu, int pf, int pg, int op, int om,
                          const std::string& what) {
            PeriodMonomial want;
            want.two_pi_i = tpi;
            want.imag_unit = iu;
            want.pet_f = pf;
            want.pet_g = pg;
            want.omega_plus = op;
            want.omega_minus = om;
            c.require(got == want, what + ", got " + got.str());
        };
        expect(deligne_period(DeligneKind::Sym2TensorF, 2, 12, PeriodSign::Plus), -3, -11, 1, 0,
               1, 0, "(sym2, 2, 12, +)");
        expect(deligne_period(DeligneKind::Sym2TensorF, 2, 12, PeriodSign::Minus), -3, -11, 1,
               0, 0, 1, "(sym2, 2, 12, -)");
        expect(deligne_period(DeligneKind::Sym2TensorF, 4, 4, PeriodSign::Plus), -6, 0, 0, 2, 1,
               0, "(sym2, 4, 4, +)");
        expect(deligne_period(DeligneKind::Sym2TensorF, 2, 4, PeriodSign::Plus), -3, -3, 1, 0,
               1, 0, "(sym2, 2, 4, +) boundary -> first branch");
        expect(deligne_period(DeligneKind::Sym3, 2, 4, PeriodSign::Plus), -3, -3, 1, 0, 2, 0,
               "(sym3, 4, +)");
        expect(deligne_period(DeligneKind::Sym3, 2, 12, PeriodSign::Minus), -11, -11, 1, 0, 0,
               2, "(sym3, 12, -)");
    }

    if (g_failed == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failed);
    return 1;
}
