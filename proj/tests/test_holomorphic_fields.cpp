#include "doctest.h"

#include "crsym/holo_field.hpp"
#include "crsym/symmetry_solver.hpp"

using namespace crsym;

namespace {

Poly var(const VarSet& vs, int v) { return Poly::var(vs, v); }

HoloField field(const VarSet& vs, std::vector<Poly> comps) { return HoloField(vs, std::move(comps)); }

DefiningFunction blownup_quadric(const SignatureVector& sig) {
    VarSet vs(sig.n());
    return DefiningFunction(im_of(var(vs, vs.w())) - ww(vs) * hermitian_norm(vs, sig));
}

const GaussRational I = GaussRational::i();

}  // namespace

TEST_CASE("holomorphic fields reject barred coefficients") {
    VarSet vs(1);
    CHECK_THROWS(field(vs, {var(vs, vs.zb(1)), Poly(vs)}));
    CHECK_THROWS(field(vs, {Poly(vs)}));
    HoloField x(vs);
    CHECK(x.is_zero());
    CHECK(x.str() == "Re(0*d/dw)");
}

TEST_CASE("real action") {
    VarSet vs(1);
    auto q = quadric(SignatureVector({1}));
    CHECK(real_action(field(vs, {var(vs, vs.z(1)) * I, Poly(vs)}), q).is_zero());
    CHECK(real_action(field(vs, {Poly(vs), Poly::constant(vs, 1)}), q).is_zero());
    VarSet v2(2);
    auto rho = blownup_quadric(SignatureVector({1, -1}));
    HoloField e = field(v2, {var(v2, v2.z(1)), var(v2, v2.z(2)), var(v2, v2.w()) * GaussRational(-2)});
    CHECK(real_action(e, rho) == rho.rho() * GaussRational(-2));
    CHECK(is_real(real_action(e, rho)));
    CHECK_THROWS(real_action(e, q));
}

TEST_CASE("tangency verdicts") {
    VarSet vs(1);
    auto rho = blownup_quadric(SignatureVector({1}));
    HoloField e = field(vs, {var(vs, vs.z(1)), var(vs, vs.w()) * GaussRational(-2)});
    auto v = is_tangent(e, rho);
    REQUIRE(v.kind == TangencyVerdict::Kind::Multiplier);
    CHECK(*v.mu == Poly::constant(vs, -2));
    CHECK_FALSE(is_tangent(field(vs, {Poly::constant(vs, 1), Poly(vs)}), rho).tangent());
    auto z = is_tangent(HoloField(vs), rho);
    REQUIRE(z.kind == TangencyVerdict::Kind::Multiplier);
    CHECK(z.mu->is_zero());
}

TEST_CASE("brackets") {
    VarSet vs(1);
    Poly z1 = var(vs, vs.z(1)), w = var(vs, vs.w()), one = Poly::constant(vs, 1), zero(vs);
    HoloField dw = field(vs, {zero, one}), wdw = field(vs, {zero, w});
    CHECK(bracket(dw, wdw) == field(vs, {zero, one * GaussRational(mpq_class(1, 2))}));
    CHECK(bracket(field(vs, {z1, zero}), field(vs, {zero, z1})) == field(vs, {zero, z1 * GaussRational(mpq_class(1, 2))}));
    CHECK(bracket(wdw, dw) == -bracket(dw, wdw));
}

TEST_CASE("heisenberg relation among the six fields") {
    VarSet vs(2);
    Poly z1 = var(vs, vs.z(1)), z2 = var(vs, vs.z(2)), w = var(vs, vs.w()), zero(vs);
    Poly one = Poly::constant(vs, 1);
    HoloField X = field(vs, {I * z1 * z2 * w, one, GaussRational(0, 2) * z2 * w * w});
    HoloField Y = field(vs, {z1 * z2 * w, one * I, GaussRational(2) * z2 * w * w});
    HoloField Z = field(vs, {z1 * w, zero, GaussRational(2) * w * w});
    CHECK(bracket(X, Y) == Z);
}

TEST_CASE("vanishing orders") {
    VarSet vs(1);
    Poly z1 = var(vs, vs.z(1)), w = var(vs, vs.w()), zero(vs), one = Poly::constant(vs, 1);
    std::vector<GaussRational> o{0, 0};
    CHECK(vanishing_order(field(vs, {zero, one}), o) == 0);
    CHECK(vanishing_order(field(vs, {zero, z1 * z1}), o) == 2);
    CHECK_FALSE(vanishing_order(HoloField(vs), o));
    CHECK(vanishing_order(field(vs, {zero, w * w}), {0, 1}) == 0);
    CHECK(max_vanishing_order({field(vs, {zero, one}), field(vs, {zero, w})}, o) == 1);
    CHECK(max_vanishing_order({field(vs, {zero, one}), field(vs, {zero, one + w})}, o) == 1);
    CHECK_THROWS(max_vanishing_order({field(vs, {zero, w}), field(vs, {zero, w * GaussRational(3)})}, o));
}

TEST_CASE("real span") {
    VarSet vs(1);
    Poly z1 = var(vs, vs.z(1)), zero(vs);
    HoloField a = field(vs, {z1, zero}), b = field(vs, {z1 * I, zero});
    CHECK(real_rank({a, b}) == 2);
    CHECK(real_rank({a, b, a + b}) == 2);
    CHECK(real_span_basis({a, b, a + b}).size() == 2);
}

TEST_CASE("symmetry solver") {
    SUBCASE("quadric n=1, D=2") {
        auto q = quadric(SignatureVector({1}));
        auto basis = solve_polynomial_symmetries(q, 2);
        CHECK(basis.size() == 8);
        for (const auto& x : basis) CHECK(is_tangent(x, q).tangent());
    }
    SUBCASE("quadric, D=0") {
        for (auto sig : {SignatureVector({1}), SignatureVector({1, -1}), SignatureVector({1, 1, 1})}) {
            auto basis = solve_polynomial_symmetries(quadric(sig), 0);
            REQUIRE(basis.size() == 1);
            CHECK(basis[0][sig.n()] == Poly::constant(VarSet(sig.n()), 1));
        }
    }
    SUBCASE("blown-up quadric") {
        auto b1 = solve_polynomial_symmetries(blownup_quadric(SignatureVector({1})), 3);
        CHECK(b1.size() == 5);
        SolverStats st;
        auto b2 = solve_polynomial_symmetries(blownup_quadric(SignatureVector({1, 1})), 3, {}, &st);
        CHECK(b2.size() == 10);
        CHECK(st.blocks > 1);
        for (const auto& x : b2) CHECK(is_tangent(x, blownup_quadric(SignatureVector({1, 1}))).tangent());
        SolverOptions flat;
        flat.use_grading = false;
        CHECK(solve_polynomial_symmetries(blownup_quadric(SignatureVector({1})), 3, flat).size() == 5);
    }
}
