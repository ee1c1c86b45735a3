#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/expr.hpp"

using namespace qsp;

namespace {

Scalar S(const char* s) { return Scalar::parse(s); }

RepParams rp(int r, int d, Variant v = Variant::jj, Specialization sp = Specialization::generic())
{
    RepParams p;
    p.r = r;
    p.d = d;
    p.variant = v;
    p.spec = sp;
    return p;
}

}  // namespace

TEST_CASE("scalar expressions")
{
    ExprContext ctx(rp(2, 1));
    CHECK(dump_element(ExprKind::scalar, "(q - q^-1)/(q - 1)", ctx) == S("(q^2 - 1)/(q^2 - q)").str());
    CHECK(dump_element(ExprKind::scalar, "q0*q1^-1 * q1", ctx) == "q0");
    ExprContext b1(rp(2, 1, Variant::jj, Specialization::b1()));
    CHECK(dump_element(ExprKind::scalar, "q0*q1", b1) == "q^2");
}

TEST_CASE("hecke expressions")
{
    ExprContext ctx(rp(2, 1));
    const Hecke& H = ctx.hecke();
    // Bernstein relation: T0 X1^-1 T0 = q0^-1 q1 X1 + (q0^-1 q1 - 1) T0, with X1 = q0 T_{s1 s0}
    HeckeElt expect = HeckeElt::basis(WeylElt::parse("s1.s0", H.weyl()), S("q1")) +
                      HeckeElt::basis(WeylElt::generator(0, H.weyl()), S("q0^-1*q1 - 1"));
    CHECK(dump_element(ExprKind::hecke, "T[s0]*X[1]^-1*T[s0]", ctx) == expect.str());
    CHECK(dump_element(ExprKind::hecke, "T[0]^-1 * T[0]", ctx) == H.one().str());
    CHECK(dump_element(ExprKind::hecke, "(T[1] - q1^-1)*(T[1] + q0^-1)", ctx) == "0");
    CHECK(dump_element(ExprKind::hecke, "2", ctx) == H.one().str().replace(0, 0, "2*"));
}

TEST_CASE("tensor expressions")
{
    ExprContext ctx(rp(3, 1));
    const Scalar q = Scalar::q(), q0 = Scalar::q0(), q1 = Scalar::q1();
    for (int j = -8; j <= 8; ++j) {
        std::string v = "v[" + std::to_string(j) + "]";
        CHECK(dump_element(ExprKind::tensor, "f_0 . " + v, ctx) ==
              closed_form_jj({CoidealGen::f, 0, 1}, j, 3, q0, q1, q).str());
        CHECK(dump_element(ExprKind::tensor, "e_1 . f_2 . " + v, ctx) ==
              ctx.coideal().act(ctx.coideal().act(TensorVec::basis({j}), {CoidealGen::f, 2, 1}), {CoidealGen::e, 1, 1}).str());
        CHECK(dump_element(ExprKind::tensor, v + " * T[0]", ctx) == ctx.action().act_T0(TensorVec::basis({j})).str());
        CHECK(dump_element(ExprKind::tensor, "h_1^-1 . h_1 . " + v, ctx) == TensorVec::basis({j}).str());
    }
    ExprContext two(rp(3, 2));
    CHECK(dump_element(ExprKind::tensor, "v[1,2] * X[2]", two) == "M[1,-6]");
    CHECK(dump_element(ExprKind::tensor, "v[1,2]*T[1] - q*v[1,2]*T[1]", two) ==
          (two.action().act_gen(TensorVec::basis({1, 2}), 1) * (Scalar(1) - q)).str());
}

TEST_CASE("schur expressions")
{
    ExprContext ctx(rp(2, 1));
    CHECK(dump_element(ExprKind::schur, "phi[e]((0,1,0,0),(0,1,0,0)) * phi[e]((0,1,0,0),(0,1,0,0))", ctx) ==
          "phi[e](0,1,0,0)(0,1,0,0)");
    CHECK(dump_element(ExprKind::schur, "1_(0,1,0,0) - phi[e]((0,1,0,0),(0,1,0,0))", ctx) == "0");
    std::string e0 = dump_element(ExprKind::schur, "Psi(e_0)", ctx);
    CHECK(e0 == "phi[e](1,0,0,0)(0,1,0,0)");
    CHECK(dump_element(ExprKind::tensor, "Psi(f_1) . v[1]", ctx) == ctx.coideal().act(TensorVec::basis({1}), {CoidealGen::f, 1, 1}).str());
}

TEST_CASE("errors")
{
    ExprContext ctx(rp(2, 1));
    try {
        dump_element(ExprKind::hecke, "T[s0] + + T[s1]", ctx);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.pos() == 8);
    }
    CHECK_THROWS_AS(dump_element(ExprKind::hecke, "T[s0] * v[1]", ctx), ParseError);
    CHECK_THROWS_AS(dump_element(ExprKind::hecke, "T[s7]", ctx), ParseError);
    CHECK_THROWS_AS(dump_element(ExprKind::hecke, "(T[0]", ctx), ParseError);
    CHECK_THROWS_AS(dump_element(ExprKind::tensor, "T[0]", ctx), EvalError);
    CHECK_THROWS_AS(dump_element(ExprKind::schur, "phi[s0]((1,0,0,0),(1,0,0,0))", ctx), ParseError);
    CHECK_THROWS_AS(dump_element(ExprKind::hecke, "(T[0] + T[1])^-1", ctx), ParseError);
    ExprContext ji(rp(2, 1, Variant::ji));
    CHECK_THROWS_AS(dump_element(ExprKind::tensor, "v[3]", ji), ParseError);
    CHECK_THROWS_AS(dump_element(ExprKind::tensor, "e_2 . v[1]", ji), ParseError);
    CHECK_THROWS_AS(kind_by_name("matrix"), std::invalid_argument);
}
