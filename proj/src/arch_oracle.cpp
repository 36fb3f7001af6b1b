#include "trizeta/arch_oracle.hpp"

#include "trizeta/errors.hpp"
#include "trizeta/gamma.hpp"

#include <cmath>
#include <complex>
#include <random>

#ifdef TRIZETA_HAVE_OPENMP
#include <omp.h>
#endif

namespace trizeta {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Precomputed double-sum data for Phi(n(x) diag(a,1); V_+^m) at one weight.
struct RaisedCoeffs {
    int k, m;
    double pref;                      // 2^(k+2m) Gamma(k+m)^2 / Gamma(k)
    std::vector<double> cij;          // (m+1)^2 entries
    int max_pow;                      // k + 2m

    RaisedCoeffs(int k_, int m_) : k(k_), m(m_), max_pow(k_ + 2 * m_) {
        double lgk = std::lgamma(static_cast<double>(k));
        double lgkm = std::lgamma(static_cast<double>(k + m));
        pref = std::pow(2.0, k + 2 * m) * std::exp(2.0 * lgkm - lgk);
        cij.resize(static_cast<size_t>(m + 1) * static_cast<size_t>(m + 1));
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                cij[static_cast<size_t>(i) * static_cast<size_t>(m + 1) +
                    static_cast<size_t>(j)] =
                    std::pow(-2.0, i + j) * Rat::binomial(m, i).to_double() *
                    Rat::binomial(m, j).to_double() *
                    std::exp(std::lgamma(static_cast<double>(k + i + j)) -
                             std::lgamma(static_cast<double>(k + i)) -
                             std::lgamma(static_cast<double>(k + j)));
    }

    // b = -a > 0; zpow[n] = ((1+b) + ix)^-n precomputed by the caller.
    std::complex<double> value(double b, const std::vector<std::complex<double>>& zpow,
                               double sqrt_b) const {
        std::complex<double> sum = 0.0;
        double bk2 = std::pow(sqrt_b, k);
        double bi = bk2;
        for (int i = 0; i <= m; ++i) {
            std::complex<double> inner = 0.0;
            for (int j = 0; j <= m; ++j)
                inner += cij[static_cast<size_t>(i) * static_cast<size_t>(m + 1) +
                             static_cast<size_t>(j)] *
                         zpow[static_cast<size_t>(k + i + j)];
            sum += bi * inner;
            bi *= b;
        }
        return pref * sum;
    }
};

} // namespace

ArchOracleResult zeta_unbalanced_oracle(int k1, int k2, int k3, int m1, int m2,
                                        const ArchOracleConfig& cfg) {
    if (m1 < 0 || m2 < 0) throw PreconditionError("zeta_unbalanced_oracle: negative split");
    if ((k1 + k2 + k3) % 2 != 0 || k3 < k1 + k2 || k3 < 1 || k1 < 1 || k2 < 1)
        throw PreconditionError("zeta_unbalanced_oracle: triple outside the unbalanced range");
    const int m = (k3 - k1 - k2) / 2;
    if (m1 + m2 != m)
        throw PreconditionError("zeta_unbalanced_oracle: split must satisfy m1+m2 = m");

    RaisedCoeffs c1(k1, m1), c2(k2, m2);
    const int max_pow = std::max(std::max(c1.max_pow, c2.max_pow), k3);

    ArchOracleResult out;
    long evals = 0;

    // Integrand over (u, x): u = log a with a the positive torus variable,
    // measure d^x a / a = e^-u du; x-integral folded onto [0, inf) by the
    // conjugation symmetry of the product.
    std::vector<std::complex<double>> zpow(static_cast<size_t>(max_pow) + 1);
    auto inner_over_x = [&](double u) {
        double b = std::exp(u);
        double sqrt_b = std::sqrt(b);
        double one_b = 1.0 + b;
        double tau_pref = std::pow(2.0, k3) * std::pow(sqrt_b, k3);
        auto integrand = [&](double x) {
            std::complex<double> z(one_b, x);
            std::complex<double> zinv = 1.0 / z;
            zpow[0] = 1.0;
            for (size_t n = 1; n < zpow.size(); ++n) zpow[n] = zpow[n - 1] * zinv;
            std::complex<double> phi1 = c1.value(b, zpow, sqrt_b);
            std::complex<double> phi2 = c2.value(b, zpow, sqrt_b);
            // Phi(tau) has the conjugate denominator: conj(z)^-k3.
            std::complex<double> phi3 = tau_pref * std::conj(zpow[static_cast<size_t>(k3)]);
            ++evals;
            return (phi1 * phi2 * phi3).real();
        };
        QuadOutcome q = gk_halfline(integrand, 0.0, 1.0, cfg.tail_rel, cfg.quad);
        out.converged = out.converged && q.converged;
        return 2.0 * q.value * std::exp(-u);
    };

    QuadOutcome outer = gk_line(inner_over_x, 1.0, cfg.tail_rel, cfg.quad);
    out.converged = out.converged && outer.converged;
    double raw = outer.value * std::pow(8.0 * kPi, -2.0 * m);
    out.raw_integral = raw;
    out.evals = evals;
    out.istar = raw * arch_normalization(k1, k2, k3, /*balanced=*/false).to_double();
    return out;
}

double rankin_selberg_oracle(int k1, int k2, int k3, int m1, int m2,
                             const ArchOracleConfig& cfg) {
    WhittakerPoly p1 = whittaker_poly(k1, m1);
    (void)m2; // the section vector contributes |a|^(k2/2 - 1) regardless of m2
    double pref = std::pow(2.0, k1 + k3 + m1);
    auto integrand = [&](double u) {
        double a = std::exp(u);
        // P^m1(a) * a^((k2+k3)/2 - 1) * e^(-4 pi a), against d^x a = du
        return p1.eval(a) * std::pow(a, (k2 + k3) / 2.0 - 1.0) * std::exp(-4.0 * kPi * a);
    };
    QuadOutcome q = gk_line(integrand, 1.0, cfg.tail_rel, cfg.quad);
    return pref * q.value;
}

double pairing_norm_oracle(int k, int m, const ArchOracleConfig& cfg) {
    WhittakerPoly p = whittaker_poly(k, m);
    auto integrand = [&](double u) {
        double t = std::exp(u);
        double w = p.whittaker_value(t);
        return w * w;
    };
    QuadOutcome q = gk_line(integrand, 1.0, cfg.tail_rel, cfg.quad);
    return q.value;
}

double ikeda1_quadrature(double alpha, double beta, double z, const ArchOracleConfig& cfg) {
    auto integrand = [&](double u) {
        double t = std::exp(u);
        return std::pow(t, beta) / std::pow(t + z, alpha);
    };
    return gk_line(integrand, 1.0, cfg.tail_rel, cfg.quad).value;
}

double ikeda2_quadrature(double alpha, double beta, const ArchOracleConfig& cfg) {
    auto integrand = [&](double x) {
        std::complex<double> p = std::pow(std::complex<double>(1.0, x), alpha);
        std::complex<double> q = std::pow(std::complex<double>(1.0, -x), beta);
        return (1.0 / (p * q)).real();
    };
    return gk_line(integrand, 1.0, cfg.tail_rel, cfg.quad).value;
}

double invariant_vector_su2_defect(const InvariantVector& v, int n_samples, uint64_t seed) {
    using C = std::complex<double>;
    const BalancedTriple& t = v.triple();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    const int dims[3] = {t.k1 - 1, t.k2 - 1, t.k3 - 1};
    // Tensor as doubles.
    std::vector<double> T(static_cast<size_t>(dims[0]) * dims[1] * dims[2]);
    double t_max = 0.0;
    for (int d1 = 0; d1 < dims[0]; ++d1)
        for (int d2 = 0; d2 < dims[1]; ++d2)
            for (int d3 = 0; d3 < dims[2]; ++d3) {
                double val = v.at(d1, d2, d3).to_double();
                T[(static_cast<size_t>(d1) * dims[1] + d2) * dims[2] + d3] = val;
                t_max = std::max(t_max, std::abs(val));
            }

    auto slot_matrix = [](int k, C a, C b) {
        // entry[n][d] = coeff of X^d Y^(k-2-d) in (aX - conj(b) Y)^n (bX + conj(a) Y)^(k-2-n)
        int dim = k - 1;
        std::vector<C> mtx(static_cast<size_t>(dim) * dim, C(0.0));
        for (int n = 0; n < dim; ++n) {
            for (int j = 0; j <= n; ++j) {
                for (int l = 0; l <= k - 2 - n; ++l) {
                    int d = j + l;
                    C term = Rat::binomial(n, j).to_double() *
                             Rat::binomial(k - 2 - n, l).to_double() * std::pow(a, j) *
                             std::pow(-std::conj(b), n - j) * std::pow(b, l) *
                             std::pow(std::conj(a), k - 2 - n - l);
                    mtx[static_cast<size_t>(n) * dim + d] += term;
                }
            }
        }
        return mtx;
    };

    double worst = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        double theta = 0.5 * kPi * unif(rng);
        double phi = 2.0 * kPi * unif(rng);
        double chi = 2.0 * kPi * unif(rng);
        C a = std::polar(std::cos(theta), phi);
        C b = std::polar(std::sin(theta), chi);
        auto m1 = slot_matrix(t.k1, a, b);
        auto m2 = slot_matrix(t.k2, a, b);
        auto m3 = slot_matrix(t.k3, a, b);
        for (int e1 = 0; e1 < dims[0]; ++e1)
            for (int e2 = 0; e2 < dims[1]; ++e2)
                for (int e3 = 0; e3 < dims[2]; ++e3) {
                    C acc = 0.0;
                    for (int d1 = 0; d1 < dims[0]; ++d1)
                        for (int d2 = 0; d2 < dims[1]; ++d2)
                            for (int d3 = 0; d3 < dims[2]; ++d3) {
                                double tv = T[(static_cast<size_t>(d1) * dims[1] + d2) *
                                                  dims[2] +
                                              d3];
                                if (tv == 0.0) continue;
                                acc += tv * m1[static_cast<size_t>(d1) * dims[0] + e1] *
                                       m2[static_cast<size_t>(d2) * dims[1] + e2] *
                                       m3[static_cast<size_t>(d3) * dims[2] + e3];
                            }
                    double ref = T[(static_cast<size_t>(e1) * dims[1] + e2) * dims[2] + e3];
                    worst = std::max(worst, std::abs(acc - C(ref)) / t_max);
                }
    }
    return worst;
}

std::vector<std::array<int, 3>> unbalanced_triples(int k_max, int min_k) {
    std::vector<std::array<int, 3>> out;
    for (int k1 = min_k; k1 <= k_max; ++k1)
        for (int k2 = k1; k2 <= k_max; ++k2)
            for (int k3 = std::max(k2, k1 + k2); k3 <= k_max; ++k3)
                if ((k1 + k2 + k3) % 2 == 0) out.push_back({k1, k2, k3});
    return out;
}

std::vector<std::array<int, 3>> balanced_triples(int k_max, int min_k) {
    std::vector<std::array<int, 3>> out;
    for (int k1 = min_k; k1 <= k_max; ++k1)
        for (int k2 = k1; k2 <= k_max; ++k2)
            for (int k3 = k2; k3 <= k_max; ++k3)
                if ((k1 + k2 + k3) % 2 == 0 && 2 * k3 < k1 + k2 + k3)
                    out.push_back({k1, k2, k3});
    return out;
}

std::vector<UnbalancedSweepRow> unbalanced_sweep(const std::vector<std::array<int, 3>>& triples,
                                                 const ArchOracleConfig& cfg, bool parallel) {
    std::vector<UnbalancedSweepRow> rows(triples.size());
    auto run_one = [&](size_t i) {
        const auto& [k1, k2, k3] = triples[i];
        const int m = (k3 - k1 - k2) / 2;
        ArchOracleResult r = zeta_unbalanced_oracle(k1, k2, k3, 0, m, cfg);
        double closed = zeta_unbalanced_closed(k1, k2, k3).istar.to_double();
        rows[i] = {k1, k2, k3, 0, m, r.istar, closed,
                   std::abs(r.istar - closed) / std::abs(closed), r.converged};
    };
#ifdef TRIZETA_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(triples.size()); ++i)
            run_one(static_cast<size_t>(i));
        return rows;
    }
#else
    (void)parallel;
#endif
    for (size_t i = 0; i < triples.size(); ++i) run_one(i);
    return rows;
}

} // namespace trizeta
