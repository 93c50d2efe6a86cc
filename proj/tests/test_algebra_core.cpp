#include "doctest.h"

#include "crsym/hypersurface.hpp"
#include "crsym/poly.hpp"

using namespace crsym;

namespace {

struct Vars {
    VarSet vs;
    explicit Vars(int n) : vs(n) {}
    Poly z(int j) const { return Poly::var(vs, vs.z(j)); }
    Poly zb(int j) const { return Poly::var(vs, vs.zb(j)); }
    Poly w() const { return Poly::var(vs, vs.w()); }
    Poly wb() const { return Poly::var(vs, vs.wb()); }
    Poly c(const GaussRational& g) const { return Poly::constant(vs, g); }
};

Poly blownup_quadric(const Vars& v, const SignatureVector& sig) {
    return im_of(v.w()) - ww(v.vs) * hermitian_norm(v.vs, sig);
}

}  // namespace

TEST_CASE("gauss rational arithmetic") {
    GaussRational a(mpq_class(1, 2), 3), b(-1, mpq_class(2, 3));
    CHECK((a * b) / b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK_THROWS_AS(a / GaussRational(0), std::domain_error);
    CHECK(GaussRational::parse("1/2+3*i") == a);
    CHECK(GaussRational::parse("-i") == -GaussRational::i());
    CHECK(GaussRational::parse(a.str()) == a);
    CHECK(GaussRational::parse(b.str()) == b);
}

TEST_CASE("conjugate") {
    Vars v(1);
    CHECK(conjugate(GaussRational::i() * v.z(1)) == -(GaussRational::i() * v.zb(1)));
    Poly imw = im_of(v.w());
    CHECK(conjugate(imw) == imw);
    CHECK(is_real(imw));
    Poly p = v.z(1) * v.w() * GaussRational(2, 5) + v.wb();
    CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("canonical form drops zeros") {
    Vars v(2);
    Poly p = v.z(1) + v.z(2) - v.z(1);
    CHECK(p == v.z(2));
    CHECK((p - p).is_zero());
    CHECK(p.size() == 1);
}

TEST_CASE("partial derivatives") {
    Vars v(1);
    CHECK(partial(v.z(1) * v.zb(1), v.vs.z(1)) == v.zb(1));
    CHECK(partial(v.w() * v.w(), v.vs.wb()).is_zero());
    SignatureVector sig({1});
    Poly rho = blownup_quadric(v, sig);
    // -1/(2i) - w*|z|^2
    Poly expect = v.c(GaussRational(0, mpq_class(1, 2))) - v.w() * v.z(1) * v.zb(1);
    CHECK(partial(rho, v.vs.wb()) == expect);
}

TEST_CASE("substitution") {
    Vars v(2);
    SignatureVector sig({1, 1});
    Poly q = im_of(v.w()) - hermitian_norm(v.vs, sig);
    auto pi_o = equivariant(v.vs, v.vs, {{v.vs.z(1), v.w() * v.z(1)}, {v.vs.z(2), v.w() * v.z(2)}});
    CHECK(substitute(q, pi_o) == blownup_quadric(v, sig));
    CHECK(substitute(q, Substitution{v.vs, v.vs, {}}) == q);
    for (int s : {1, -1}) {
        auto psi = equivariant(v.vs, v.vs, {{v.vs.w(), v.w().pow(3) * GaussRational(s)}});
        CHECK(substitute(q, psi) == im_of(v.w().pow(3) * GaussRational(s)) - hermitian_norm(v.vs, sig));
    }
    Vars small(1);
    Substitution bad{v.vs, small.vs, {{v.vs.z(1), v.z(1)}}};
    CHECK_THROWS(substitute(q, bad));
}

TEST_CASE("evaluation") {
    Vars v(2);
    SignatureVector s11({1, -1});
    Poly q = im_of(v.w()) - hermitian_norm(v.vs, SignatureVector({1, 1}));
    CHECK(evaluate(q, conj_point(v.vs, {0, 0, 0})).is_zero());
    CHECK(evaluate(hermitian_norm(v.vs, s11), conj_point(v.vs, {1, 1, 0})).is_zero());
    CHECK(evaluate(blownup_quadric(v, SignatureVector({1, 1})), conj_point(v.vs, {0, 0, 1})).is_zero());
    Assignment partial_pt(v.vs.size());
    CHECK_THROWS(evaluate(q, partial_pt));
}

TEST_CASE("exact multiplier") {
    Vars v(1);
    SignatureVector sig({1});
    Poly rho = blownup_quadric(v, sig);
    auto mu = try_exact_multiplier(rho * GaussRational(-2), rho);
    REQUIRE(mu);
    CHECK(*mu == v.c(-2));
    Poly q = im_of(v.w()) - hermitian_norm(v.vs, sig);
    CHECK_FALSE(try_exact_multiplier(v.z(1), q));
    Poly p = (v.z(1) * v.wb() + v.c(3)) * q;
    auto m2 = try_exact_multiplier(p, q);
    REQUIRE(m2);
    CHECK(*m2 * q == p);
}

TEST_CASE("pseudo division") {
    Vars v(1);
    Poly rho = blownup_quadric(v, SignatureVector({1}));
    auto d = pseudo_divide(rho * rho, rho, v.vs.wb());
    CHECK(d.r.is_zero());
    auto d1 = pseudo_divide(v.c(1), rho, v.vs.wb());
    CHECK(d1.q.is_zero());
    CHECK(d1.r == v.c(1));
    CHECK(d1.k == 0);
    CHECK_THROWS(pseudo_divide(rho, v.z(1), v.vs.wb()));
}

TEST_CASE("ww content and printing") {
    Vars v(1);
    Poly p = ww(v.vs).pow(2) * (v.z(1) + v.c(1));
    CHECK(ww_content(p) == 2);
    CHECK(ww_content(v.w()) == 0);
    CHECK(!p.str().empty());
}
