#include "doctest.h"

#include "crsym/blowup.hpp"
#include "crsym/pseudo_unitary.hpp"

using namespace crsym;

namespace {

Poly var(const VarSet& vs, int v) { return Poly::var(vs, v); }
Poly w_of(const VarSet& vs) { return var(vs, vs.w()); }
Poly re2(const Poly& p) { return p + conjugate(p); }  // 2 Re

DefiningFunction hyperbolic() {
    VarSet vs(2);
    return DefiningFunction(im_of(w_of(vs)) - re2(var(vs, vs.z(1)) * var(vs, vs.zb(2))));
}

}  // namespace

TEST_CASE("pi_o on quadrics gives the blown-up quadric") {
    for (auto sig : {SignatureVector({1}), SignatureVector({-1}), SignatureVector({1, 1}), SignatureVector({1, -1, 1})}) {
        VarSet vs(sig.n());
        auto got = pullback(quadric(sig), BlowupMap::pi_o(sig.n()));
        CHECK(got.rho() == im_of(w_of(vs)) - ww(vs) * hermitian_norm(vs, sig));
    }
}

TEST_CASE("hyperbolic quadric -> ep2 -> ep123 and ep13") {
    VarSet vs(2);
    Poly z1 = var(vs, vs.z(1)), zb2 = var(vs, vs.zb(2)), w = w_of(vs);
    auto p2 = pullback(hyperbolic(), BlowupMap::pi_L(2, {1}));
    CHECK(p2.rho() == im_of(w) - re2(z1 * w * zb2));
    auto p123 = pullback(p2, BlowupMap::pi_L(2, {1}));
    CHECK(p123.rho() == im_of(w) - re2(z1 * w * w * zb2));
    auto p13 = pullback(p2, BlowupMap::pi_L(2, {2}));
    CHECK(p13.rho() == im_of(w) - re2(z1 * zb2) * ww(vs));
    CHECK(BlowupMap::pi_L(2, {1}).name() == "pi_L(z1)");
    CHECK_THROWS(BlowupMap::pi_L(2, {3}));
}

TEST_CASE("iterated pi_o gives Q_m") {
    for (int n = 1; n <= 3; ++n) {
        VarSet vs(n);
        auto sig = SignatureVector::standard(n, n);
        DefiningFunction q = quadric(sig);
        std::vector<BlowupMap> chain;
        for (int m = 1; m <= 3; ++m) {
            chain.push_back(BlowupMap::pi_o(n));
            Poly expect = im_of(w_of(vs)) - ww(vs).pow(m) * hermitian_norm(vs, sig);
            auto c = compose(chain);
            CHECK(pullback(q, c).rho() == expect);
            CHECK(pullback(q, BlowupMap::pi_o(n, m)).rho() == expect);
            if (m > 1) CHECK(c.kind() == BlowupMap::Kind::Composite);
            DefiningFunction step = q;
            for (const auto& b : chain) step = pullback(step, b);
            CHECK(step.rho() == expect);
        }
    }
}

TEST_CASE("psi then weighted pi_o gives R_{r,m}") {
    for (int n = 1; n <= 2; ++n) {
        VarSet vs(n);
        auto sig = SignatureVector::standard(n, n);
        for (int r : {2, 3, 5})
            for (int sigma : {1, -1})
                for (int m = 1; m <= 3; ++m) {
                    auto c = compose({BlowupMap::psi(n, r, sigma), BlowupMap::pi_o(n, m)});
                    Poly expect = im_of(w_of(vs).pow(r)) - GaussRational(sigma) * ww(vs).pow(m) * hermitian_norm(vs, sig);
                    CHECK(pullback(quadric(sig), c).rho() == expect);
                }
    }
    CHECK_THROWS(BlowupMap::psi(1, 2, 0));
    CHECK_THROWS(BlowupMap::psi(1, 0, 1));
}

TEST_CASE("coordinate blow-up of the adapted quadric gives the M^s_I equation") {
    for (int n = 2; n <= 5; ++n)
        for (int s = 2; 2 * s <= n + 2; ++s)
            for (int p = s; 2 * p <= n + 2; ++p) {
                auto form = HermitianForm::adapted(p, n + 2 - p, s);
                auto base = chart_quadric(form);
                const VarSet& vs = base.vars();
                int k = s - 1;
                std::vector<int> L;
                for (int j = 1; j <= k; ++j) L.push_back(j);
                for (int j = 2 * k + 1; j <= n; ++j) L.push_back(j);
                Poly w = w_of(vs);
                Poly expect = im_of(w);
                for (int j = 1; j <= k; ++j) expect -= re2(var(vs, vs.z(j)) * w * var(vs, vs.zb(j + k)));
                std::vector<int> rest(n, 0);
                std::vector<int> idx;
                for (int j = 2 * k; j < n; ++j) idx.push_back(j);
                // signature of z' read off the base quadric
                std::vector<int> sg(n, 1);
                for (int j : idx) {
                    Exponent e{};
                    e[vs.z(j + 1)] = 1;
                    e[vs.zb(j + 1)] = 1;
                    sg[j] = base.rho().coeff(e) == GaussRational(-1) ? 1 : -1;
                }
                expect -= ww(vs) * hermitian_norm(vs, SignatureVector(sg), idx);
                CHECK(pullback(base, BlowupMap::pi_L(n, L)).rho() == expect);
            }
}

TEST_CASE("normalization") {
    VarSet vs(1);
    Poly z = var(vs, vs.z(1)), zb = var(vs, vs.zb(1)), w = w_of(vs);
    Poly rho = im_of(w) - ww(vs) * z * zb;
    CHECK(normalize_defining(rho) == rho);
    CHECK(normalize_defining(rho * ww(vs).pow(2) * GaussRational(-3)) == rho);
    CHECK(normalize_defining(normalize_defining(rho * GaussRational(mpq_class(2, 7)))) == rho);
    // Re-type leading holomorphic term
    Poly r2 = re2(w) - z * zb;
    CHECK(normalize_defining(r2 * GaussRational(4)) == r2 * GaussRational(mpq_class(1, 2)));
    CHECK_THROWS(normalize_defining(Poly(vs)));
}

TEST_CASE("pullback errors and identity") {
    VarSet vs(1);
    auto q = quadric(SignatureVector({1}));
    CHECK(pullback(q, BlowupMap::identity(1)) == q);
    CHECK(pullback(q, compose({BlowupMap::identity(1), BlowupMap::identity(1)})) == q);
    CHECK_THROWS(pullback(q, BlowupMap::pi_o(2)));
    CHECK_THROWS(compose({BlowupMap::pi_o(1), BlowupMap::pi_o(2)}));
    CHECK_THROWS(compose({}));
    DefiningFunction imw(im_of(w_of(vs)));
    CHECK_THROWS(pullback(imw, BlowupMap::general(vs, {{vs.w(), Poly(vs)}}, "kill")));
}

TEST_CASE("pullback stays real") {
    auto q = quadric(SignatureVector({1, -1}));
    for (const auto& m : {BlowupMap::pi_o(2), BlowupMap::pi_L(2, {2}), BlowupMap::psi(2, 3, -1)}) {
        auto r = pullback(q, m);
        CHECK(conjugate(r.rho()) == r.rho());
    }
}

TEST_CASE("singular loci") {
    SUBCASE("quadric is smooth") {
        for (auto sig : {SignatureVector({1}), SignatureVector({1, -1})}) CHECK(singular_locus(quadric(sig)).empty);
    }
    SUBCASE("blown-up quadric is smooth") {
        auto sl = singular_locus(pullback(quadric(SignatureVector({1, 1})), BlowupMap::pi_o(2)));
        CHECK_FALSE(sl.empty);
        CHECK_FALSE(certify_empty(sl, 0));
        CHECK(certify_empty(sl, 3));
    }
    SUBCASE("hyperbolic blow-up: z1 zb2 = -i/2, then w = 0") {
        auto p2 = pullback(hyperbolic(), BlowupMap::pi_L(2, {1}));
        auto sl = singular_locus(p2);
        CHECK_FALSE(sl.empty);
        const VarSet& vs = p2.vars();
        Poly m = var(vs, vs.z(1)) * var(vs, vs.zb(2)) + Poly::constant(vs, GaussRational(0, mpq_class(1, 2)));
        CHECK(sl.spans(re_part(m)));
        CHECK(sl.spans(im_part(m)));
        // with z1 zb2 != 0 the z-partials force w = 0
        CHECK(sl.spans(re_part(w_of(vs) * var(vs, vs.zb(2)))));
        CHECK(sl.spans(re_part(w_of(vs) * var(vs, vs.z(1)))));
    }
}

TEST_CASE("point blow-up atlas") {
    SUBCASE("n=1") {
        auto atlas = point_blowup_atlas(quadric(SignatureVector({1})));
        REQUIRE(atlas.charts.size() == 2);
        VarSet vs(1);
        Poly z = var(vs, vs.z(1)), zb = var(vs, vs.zb(1));
        CHECK(atlas.charts[1].rho() == im_of(z * w_of(vs)) - z * zb);
        CHECK(atlas.charts[0].rho() == im_of(w_of(vs)) - ww(vs) * z * zb);
        auto g = check_gluing(atlas, 1);
        CHECK(g.ok());
        CHECK(g.unit == Poly::constant(vs, GaussRational(1)));
    }
    for (auto sig : {SignatureVector({1, 1}), SignatureVector({1, -1}), SignatureVector({-1, 1, 1})}) {
        auto atlas = point_blowup_atlas(quadric(sig));
        const int n = sig.n();
        const VarSet& vs = atlas.charts[0].vars();
        REQUIRE(int(atlas.charts.size()) == n + 1);
        CHECK(certify_empty(atlas.singular[0], 3));
        CHECK_FALSE(certify_empty(atlas.singular[1], 2));
        for (int k = 1; k <= n; ++k) {
            Poly zk = var(vs, vs.z(k)), zbk = var(vs, vs.zb(k));
            Poly expect = im_of(zk * w_of(vs)) - GaussRational(sig[k - 1]) * zk * zbk;
            for (int j = 1; j <= n; ++j)
                if (j != k) expect -= GaussRational(sig[j - 1]) * var(vs, vs.z(j)) * var(vs, vs.zb(j)) * zk * zbk;
            CHECK(atlas.charts[k].rho() == expect);
            CHECK(check_gluing(atlas, k).ok());
            const auto& sl = atlas.singular[k];
            CHECK_FALSE(sl.empty);
            CHECK(sl.spans(re_part(zk)));
            CHECK(sl.spans(im_part(zk)));
            // on z_k = 0 the z_k-partial reduces to w
            Poly dk = partial(atlas.charts[k].rho(), vs.z(k));
            Substitution kill = equivariant(vs, vs, {{vs.z(k), Poly(vs)}});
            CHECK(substitute(dk, kill) == w_of(vs) * GaussRational(0, mpq_class(-1, 2)));
        }
    }
    SUBCASE("non-quadric rejected") {
        CHECK_THROWS(point_blowup_atlas(pullback(quadric(SignatureVector({1})), BlowupMap::pi_o(1))));
        VarSet vs(1);
        Poly z = var(vs, vs.z(1)), zb = var(vs, vs.zb(1));
        CHECK_THROWS(point_blowup_atlas(DefiningFunction(im_of(w_of(vs)) - GaussRational(2) * z * zb)));
    }
}

TEST_CASE("rational functions") {
    VarSet vs(1);
    Poly z = var(vs, vs.z(1)), w = w_of(vs);
    RationalFunction a(z, w), b(z * z, z * w);
    CHECK(a.equals(b));
    CHECK((a + a).equals(RationalFunction(z * GaussRational(2), w)));
    CHECK((a * RationalFunction(w)).equals(z));
    CHECK_THROWS(RationalFunction(z, Poly(vs)));
}
