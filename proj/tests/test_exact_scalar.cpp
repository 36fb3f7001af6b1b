#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trizeta/errors.hpp"
#include "trizeta/gamma.hpp"
#include "trizeta/pi_monomial.hpp"
#include "trizeta/satake.hpp"
#include "trizeta/zeta_local.hpp"

#include <random>

using namespace trizeta;

TEST_CASE("rat basics") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2).pow(-3) == Rat(1, 8));
    CHECK(Rat(12).two_valuation() == 2);
    CHECK(Rat(12).odd_part() == Rat(3));
    CHECK(Rat(3, 8).two_valuation() == -3);
    CHECK(Rat::factorial(6) == Rat(720));
    CHECK(Rat::binomial(10, 3) == Rat(120));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("pi monomial canonicalization and rendering") {
    PiMonomial a = PiMonomial::make(Rat(12), 0, 0);
    CHECK(a.coeff() == Rat(3));
    CHECK(a.two_exp() == 2);
    CHECK(a.str() == "3 * 2^2");
    CHECK(PiMonomial::make(Rat(1), -9, 0).str() == "2^-9");
    CHECK(PiMonomial::make(Rat(11), -7, 0).str() == "11 * 2^-7");
    CHECK(PiMonomial::make(Rat(1, 4), 0, -4).str() == "2^-2 * pi^-2");
    CHECK(PiMonomial::make(Rat(1), 0, 1).str() == "pi^(1/2)");
    CHECK(PiMonomial::zero().str() == "0");
    CHECK(PiMonomial::one().str() == "1");
    // addition aligns 2-powers exactly
    CHECK(PiMonomial::make(Rat(1), 2, 0) + PiMonomial::make(Rat(1), 0, 0) ==
          PiMonomial::make(Rat(5), 0, 0));
    CHECK_THROWS_AS(PiMonomial::make(Rat(1), 0, 1) + PiMonomial::make(Rat(1), 0, 2),
                    PreconditionError);
    CHECK(PiMonomial::make(Rat(3), 1, 2).pow(2) == PiMonomial::make(Rat(9), 2, 4));
}

TEST_CASE("gamma values at half integers") {
    CHECK(gamma_value(HalfInt::of_int(5)).as_rat() == Rat(24));
    // Gamma(1/2)^2 = pi
    PiMonomial g = gamma_value(HalfInt{1}) * gamma_value(HalfInt{1});
    CHECK(g == PiMonomial::make(Rat(1), 0, 2));
    // Gamma(7/2) = 15/8 sqrt(pi)
    CHECK(gamma_value(HalfInt{7}) == PiMonomial::make(Rat(15, 8), 0, 1));
    CHECK_THROWS_AS(gamma_value(HalfInt::of_int(0)), GammaPoleError);
}

TEST_CASE("gamma ratio examples") {
    // Gamma(5)/Gamma(3) = 12
    CHECK(GammaRatio{{HalfInt::of_int(5)}, {HalfInt::of_int(3)}}.value().as_rat() == Rat(12));
    // Gamma(2)Gamma(4)/Gamma(6) = 1/20
    CHECK(GammaRatio{{HalfInt::of_int(2), HalfInt::of_int(4)}, {HalfInt::of_int(6)}}
              .value()
              .as_rat() == Rat(1, 20));
    CHECK_THROWS_AS((GammaRatio{{HalfInt::of_int(-1)}, {}}.value()), GammaPoleError);
}

TEST_CASE("gamma ratio rising factorial property") {
    // Gamma(z+N)/Gamma(z) = z (z+1) ... (z+N-1) for half-integers z > 0, N <= 20
    for (int twice_z = 1; twice_z <= 9; ++twice_z) {
        HalfInt z{twice_z};
        for (int N = 0; N <= 20; ++N) {
            PiMonomial ratio = GammaRatio{{z + N}, {z}}.value();
            CHECK(ratio.as_rat() == rising_factorial(z, N));
        }
    }
}

TEST_CASE("reciprocal gamma convention") {
    // Gamma(0)/Gamma(-m) resolves as a rising factorial: (-1)^m m!
    for (int m = 1; m <= 5; ++m) {
        PiMonomial v = GammaRatio{{HalfInt::of_int(0)}, {HalfInt::of_int(-m)}}.value_with_limits();
        Rat expect = Rat(m % 2 == 0 ? 1 : -1) * Rat::factorial(static_cast<unsigned>(m));
        CHECK(v.as_rat() == expect);
    }
    // a lone non-positive denominator argument kills the ratio
    GammaRatio dead{{HalfInt{5}}, {HalfInt::of_int(-2)}};
    CHECK(dead.value_with_limits().is_zero());
    GammaRatio pole{{HalfInt::of_int(-2)}, {HalfInt{5}}};
    CHECK_THROWS_AS(pole.value_with_limits(), GammaPoleError);
}

TEST_CASE("local zeta values") {
    // zeta_R(2) = 1/pi
    CHECK(zeta_real(HalfInt::of_int(2)) == PiMonomial::make(Rat(1), 0, -2));
    // zeta_C(2) = 1/(2 pi^2)
    CHECK(zeta_complex(2) == PiMonomial::make(Rat(1), -1, -4));
    CHECK(zeta_nonarch(HalfInt::of_int(2), 2) == Rat(4, 3));
    CHECK_THROWS_AS(zeta_real(HalfInt::of_int(0)), PoleError);
    CHECK_THROWS_AS(zeta_nonarch(HalfInt::of_int(0), 3), PoleError);
    CHECK_THROWS_AS(zeta_nonarch(HalfInt{3}, 3), PreconditionError);
    CHECK(zeta_nonarch(HalfInt{3}, 4) == Rat(8, 7)); // q a square: q^-3/2 = 1/8
}

TEST_CASE("zeta duplication: zeta_C(s) = zeta_R(s) zeta_R(s+1)") {
    for (int s = 1; s <= 8; ++s) {
        PiMonomial lhs = zeta_complex(s);
        PiMonomial rhs = zeta_real(HalfInt::of_int(s)) * zeta_real(HalfInt::of_int(s + 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("satake polynomials") {
    SatakePoly a = SatakePoly::var("a");
    SatakePoly ai = SatakePoly::var("a", -1);
    SatakePoly p = a + ai;
    CHECK(p == p.invert_var("a"));
    CHECK((a * ai) == SatakePoly(Rat(1)));
    SatakePoly q = Rat(2) * a - SatakePoly(Rat(3));
    CHECK(q.substitute({{"a", Rat(5, 2)}}) == SatakePoly(Rat(2)));
    CHECK((a - a).is_zero());
}

TEST_CASE("laurent factor expansion examples") {
    SatakePoly a = SatakePoly::var("a");
    SatakePoly ai = SatakePoly::var("a", -1);
    // (1 - aX)(1 - a^-1 X) at a -> 1 gives (1 - X)^2
    LaurentLFactor L({XPoly::one_plus(-a), XPoly::one_plus(-ai)}, 2);
    XPoly expanded = L.expand({{"a", Rat(1)}});
    XPoly expect =
        XPoly({SatakePoly(Rat(1)), SatakePoly(Rat(-2)), SatakePoly(Rat(1))});
    CHECK(expanded == expect);
    // (1 - a b X) with a -> 2, b -> 1/2 gives 1 - X
    LaurentLFactor L2({XPoly::one_plus(-(a * SatakePoly::var("b")))}, 2);
    CHECK(L2.expand({{"a", Rat(2)}, {"b", Rat(1, 2)}}) ==
          XPoly({SatakePoly(Rat(1)), SatakePoly(Rat(-1))}));
    CHECK_THROWS_AS(LaurentLFactor({XPoly::one_plus(a)}, 2).value_at(0.0, {{"a", -1.0}}),
                    PoleError);
}

TEST_CASE("one-special r-factor expands to (1 + q^-1/2 X)^4 at alpha=beta=1, sign -1") {
    // four factors (1 - chi a^± b^± u X) with chi = -1 collapse at a=b=1
    SatakePoly u = SatakePoly::var("u");
    std::vector<XPoly> fac;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            fac.push_back(XPoly::one_plus(Rat(1) * SatakePoly::var("a", e1) *
                                          SatakePoly::var("b", e2) * u));
    LaurentLFactor L(fac, 2);
    XPoly got = L.expand({{"a", Rat(1)}, {"b", Rat(1)}});
    // (1 + uX)^4 = sum C(4,d) u^d X^d
    std::vector<SatakePoly> coeffs;
    for (int d = 0; d <= 4; ++d)
        coeffs.push_back(Rat::binomial(4, d) * SatakePoly::var("u", d));
    CHECK(got == XPoly(coeffs));
}

TEST_CASE("laurent multiplication commutes and associates on random instances") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> exp(-2, 2);
    auto random_poly = [&]() {
        XPoly p = XPoly::constant(SatakePoly(Rat(1)));
        SatakePoly c;
        c.add_term({{"a", exp(rng)}}, Rat(coef(rng)));
        c.add_term({}, Rat(coef(rng)));
        return XPoly({SatakePoly(Rat(1)), c});
    };
    for (int trial = 0; trial < 25; ++trial) {
        XPoly f = random_poly(), g = random_poly(), h = random_poly();
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("rendering of inverse factor products") {
    SatakePoly u = SatakePoly::var("u");
    LaurentLFactor L({XPoly::one_plus(-u)}, 3);
    CHECK(L.str() == "(1 - u*X)^-1");
}
