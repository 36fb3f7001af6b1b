#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trizeta/errors.hpp"
#include "trizeta/periods.hpp"

using namespace trizeta;

TEST_CASE("deligne period exponent vectors: first branch") {
    // (sym2, kappa=2, kappa'=12, +): (2 pi i)^-3 i^-11 <f,f> Omega+
    PeriodMonomial m = deligne_period(DeligneKind::Sym2TensorF, 2, 12, PeriodSign::Plus);
    CHECK(m.two_pi_i == -3);
    CHECK(m.imag_unit == -11);
    CHECK(m.pet_f == 1);
    CHECK(m.pet_g == 0);
    CHECK(m.omega_plus == 1);
    CHECK(m.omega_minus == 0);
}

TEST_CASE("deligne period exponent vectors: second branch") {
    // (sym2, kappa=4, kappa'=4, +): 2 kappa > kappa' -> (2 pi i)^-6 <g,g>^2 Omega+
    PeriodMonomial m = deligne_period(DeligneKind::Sym2TensorF, 4, 4, PeriodSign::Plus);
    CHECK(m.two_pi_i == -6);
    CHECK(m.imag_unit == 0);
    CHECK(m.pet_f == 0);
    CHECK(m.pet_g == 2);
    CHECK(m.omega_plus == 1);
}

TEST_CASE("deligne period exponent vectors: sym3") {
    PeriodMonomial m = deligne_period(DeligneKind::Sym3, 2, 12, PeriodSign::Minus);
    CHECK(m.two_pi_i == -11);
    CHECK(m.imag_unit == -11);
    CHECK(m.pet_f == 1);
    CHECK(m.omega_minus == 2);
    CHECK(m.omega_plus == 0);
}

TEST_CASE("c+ and c- differ only in the Omega slot") {
    for (auto [kind, kappa, kp] :
         {std::tuple{DeligneKind::Sym2TensorF, 2, 12}, {DeligneKind::Sym2TensorF, 4, 4},
          {DeligneKind::Sym2TensorF, 2, 4}, {DeligneKind::Sym3, 4, 4},
          {DeligneKind::Sym3, 12, 12}}) {
        PeriodMonomial p = deligne_period(kind, kappa, kp, PeriodSign::Plus);
        PeriodMonomial m = deligne_period(kind, kappa, kp, PeriodSign::Minus);
        CHECK(p.two_pi_i == m.two_pi_i);
        CHECK(p.imag_unit == m.imag_unit);
        CHECK(p.pet_f == m.pet_f);
        CHECK(p.pet_g == m.pet_g);
        CHECK(p.omega_plus == m.omega_minus);
        CHECK(p.omega_minus == m.omega_plus);
    }
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(deligne_period(DeligneKind::Sym2TensorF, 3, 12, PeriodSign::Plus),
                    PreconditionError);
    CHECK_THROWS_AS(deligne_period(DeligneKind::Sym3, 2, 0, PeriodSign::Plus),
                    PreconditionError);
}

TEST_CASE("hodge data of the basic motives") {
    HodgeData mf = hodge_data(MotiveKind::Mf, 2, 12);
    CHECK(mf.weight == 11);
    CHECK(mf.hodge_types == std::vector<std::pair<int, int>>{{0, 11}, {11, 0}});
    CHECK(mf.d_plus == 1);
    CHECK(mf.d_minus == 1);

    HodgeData sg = hodge_data(MotiveKind::Sym2Mg, 2, 0);
    CHECK(sg.weight == 2);
    CHECK(sg.hodge_types == std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(sg.d_plus == 2);
    CHECK(sg.d_minus == 1);
}

TEST_CASE("hodge data of the tensor motive") {
    HodgeData n = hodge_data(MotiveKind::Tensor, 2, 12); // kappa' >= 2 kappa
    CHECK(n.weight == 13);
    CHECK(n.k0 == 3);
    CHECK(n.r_mid == 2);
    CHECK(n.d_plus == 3);
    // degenerate layout at kappa = kappa' = 4: k0 = 2, r2 = kappa-1 = 3
    HodgeData deg = hodge_data(MotiveKind::Tensor, 4, 4);
    CHECK(deg.k0 == 2);
    CHECK(deg.r_mid == 3);
    CHECK(deg.hodge_types.size() == 4);
}

TEST_CASE("hodge type multiset is symmetric under (p,q) -> (q,p)") {
    for (auto [kind, kappa, kp] :
         {std::tuple{MotiveKind::Mf, 2, 8}, {MotiveKind::Sym2Mg, 6, 0},
          {MotiveKind::Tensor, 2, 12}, {MotiveKind::Tensor, 4, 6}, {MotiveKind::Tensor, 6, 4},
          {MotiveKind::Tensor, 4, 4}}) {
        HodgeData h = hodge_data(kind, kappa, kp);
        for (auto [p, q] : h.hodge_types) {
            bool found = false;
            for (auto [p2, q2] : h.hodge_types) found = found || (p2 == q && q2 == p);
            CHECK(found);
            CHECK(p + q == h.weight);
        }
    }
}

TEST_CASE("period ratio template") {
    PeriodRatioTemplate t = period_ratio(DeligneKind::Sym2TensorF, 2, 12);
    CHECK(t.w == 13);
    CHECK(t.epsilon == -1); // (-1)^(12/2-1)
    CHECK(t.numerator_two_pi_i == 21);
    CHECK(t.denominator.omega_minus == 1);
    CHECK_FALSE(t.boundary_first_branch);

    // boundary kappa' = 2 kappa goes to the first branch
    PeriodRatioTemplate b = period_ratio(DeligneKind::Sym2TensorF, 2, 4);
    CHECK(b.boundary_first_branch);
    CHECK(b.denominator.pet_f == 1); // first-branch shape

    PeriodRatioTemplate s3 = period_ratio(DeligneKind::Sym3, 4, 4);
    CHECK(s3.w == 9);
    CHECK(s3.epsilon == -1); // (-1)^(4/2-1)
    CHECK(s3.rendered.find("pi^7") != std::string::npos);
    CHECK(s3.rendered.find("i^4") != std::string::npos);
    CHECK(s3.denominator.omega_minus == 2);
}

TEST_CASE("rendering order is fixed") {
    PeriodMonomial m = deligne_period(DeligneKind::Sym2TensorF, 2, 12, PeriodSign::Plus);
    CHECK(m.str() == "(2pi*i)^-3 * i^-11 * <f,f> * Omega+");
    PeriodMonomial g = deligne_period(DeligneKind::Sym2TensorF, 4, 4, PeriodSign::Minus);
    CHECK(g.str() == "(2pi*i)^-6 * <g,g>^2 * Omega-");
}
