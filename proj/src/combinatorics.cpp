#include "trizeta/combinatorics.hpp"

#include "trizeta/errors.hpp"

namespace trizeta {

namespace {

// Gamma(top)/Gamma(bot) with the rising-factorial limit when both arguments
// sit at integer offset; plain evaluation otherwise.
PiMonomial gamma_ratio_term(HalfInt top, HalfInt bot) {
    return GammaRatio{{top}, {bot}}.value_with_limits();
}

} // namespace

IdentityReport identity1(int N, HalfInt z, HalfInt w) {
    if (N < 0) throw PreconditionError("identity1: N must be non-negative");
    IdentityReport rep;
    PiMonomial lhs;
    for (int i = 0; i <= N; ++i) {
        PiMonomial term = gamma_ratio_term(z + i, w + i);
        PiMonomial c = PiMonomial::from_rat(Rat::binomial(N, i) * Rat(i % 2 == 0 ? 1 : -1));
        lhs = lhs + c * term;
    }
    PiMonomial rhs = GammaRatio{{z, w - z + N}, {w - z, w + N}}.value_with_limits();
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.equal = (lhs == rhs);
    return rep;
}

IdentityReport identity2(int N, HalfInt t, HalfInt alpha, HalfInt beta) {
    if (N < 0) throw PreconditionError("identity2: N must be non-negative");
    IdentityReport rep;
    HalfInt two_t{2 * t.twice};
    PiMonomial lhs;
    for (int i = 0; i <= N; ++i) {
        PiMonomial term = GammaRatio{{t + i, t + beta + alpha + (N - 1) + i},
                                     {alpha + i, two_t + beta + i}}
                              .value_with_limits();
        PiMonomial c = PiMonomial::from_rat(Rat::binomial(N, i) * Rat(i % 2 == 0 ? 1 : -1));
        lhs = lhs + c * term;
    }
    lhs = lhs * gamma_value(alpha + N);

    PiMonomial rhs = GammaRatio{{t, t + beta + alpha + (N - 1), t + beta + N, t - alpha + 1},
                                {two_t + beta + N, t + beta, t - alpha - (N - 1)}}
                         .value_with_limits();
    if (N % 2 == 1) rhs = -rhs;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.equal = (lhs == rhs);
    return rep;
}

IdentityReport identity3(int a, int b, int n) {
    if (a < 0 || b < 0 || n < 0) throw PreconditionError("identity3: negative parameter");
    if (a < n) throw PreconditionError("identity3: requires a >= n");
    Rat lhs(0);
    for (int j = 0; j <= n; ++j) {
        Rat term = Rat::binomial(a, j) * Rat::binomial(a + b + n - j, a + b);
        lhs += Rat(j % 2 == 0 ? 1 : -1) * term;
    }
    Rat rhs = Rat::binomial(b + n, b);
    IdentityReport rep;
    rep.lhs = PiMonomial::from_rat(lhs);
    rep.rhs = PiMonomial::from_rat(rhs);
    rep.equal = (lhs == rhs);
    return rep;
}

} // namespace trizeta
