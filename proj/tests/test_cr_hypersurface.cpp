#include "doctest.h"

#include "crsym/hypersurface.hpp"

using namespace crsym;

namespace {

Poly var(const VarSet& vs, int v) { return Poly::var(vs, v); }

DefiningFunction blownup_quadric(const SignatureVector& sig) {
    VarSet vs(sig.n());
    return DefiningFunction(im_of(var(vs, vs.w())) - ww(vs) * hermitian_norm(vs, sig));
}

}  // namespace

TEST_CASE("signature vector") {
    auto s = SignatureVector::standard(3, 2);
    CHECK(s.pbar() == 2);
    CHECK(s.qbar() == 1);
    CHECK(s[2] == -1);
    CHECK_THROWS(SignatureVector({1, 0}));
}

TEST_CASE("defining function must be real and nonzero") {
    VarSet vs(1);
    CHECK_THROWS(DefiningFunction(var(vs, vs.w())));
    CHECK_THROWS(DefiningFunction(Poly(vs)));
}

TEST_CASE("levi matrix of quadric") {
    for (auto sig : {SignatureVector({1}), SignatureVector({1, -1}), SignatureVector({-1, 1, 1})}) {
        auto rho = quadric(sig);
        auto L = levi_matrix(rho);
        const int n = sig.n();
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                if (j == k && j < n) CHECK(L[j][k] == Poly::constant(rho.vars(), -sig[j]));
                else CHECK(L[j][k].is_zero());
            }
    }
}

TEST_CASE("levi matrix of the blown-up quadric") {
    SignatureVector sig({1, -1});
    auto rho = blownup_quadric(sig);
    const VarSet& vs = rho.vars();
    auto L = levi_matrix(rho);
    for (int j = 0; j < 2; ++j) CHECK(L[j][j] == ww(vs) * GaussRational(-sig[j]));
    CHECK(L[0][2] == var(vs, vs.zb(1)) * var(vs, vs.w()) * GaussRational(-1));
    CHECK(L[2][0] == var(vs, vs.z(1)) * var(vs, vs.wb()) * GaussRational(-1));
    for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) CHECK(L[k][j] == conjugate(L[j][k]));
}

TEST_CASE("degeneracy certificate") {
    SUBCASE("quadrics") {
        CHECK(degeneracy_certificate(quadric(SignatureVector({1}))) == Poly::constant(VarSet(1), mpq_class(1, 4)));
        CHECK(degeneracy_certificate(quadric(SignatureVector({1, 1}))) == Poly::constant(VarSet(2), mpq_class(-1, 4)));
        CHECK(degeneracy_certificate(quadric(SignatureVector({1, -1}))) == Poly::constant(VarSet(2), mpq_class(1, 4)));
    }
    SUBCASE("blown-up quadric") {
        for (auto sig : {SignatureVector({1}), SignatureVector({1, 1}), SignatureVector({1, -1})}) {
            auto rho = blownup_quadric(sig);
            Poly c = degeneracy_certificate(rho);
            CHECK(is_real(c));
            Poly base = degeneracy_certificate(quadric(sig));
            CHECK(c == ww(rho.vars()).pow(sig.n()) * base);
            auto mu = try_exact_multiplier(c, ww(rho.vars()));
            CHECK(mu);
        }
    }
}

TEST_CASE("levi signature") {
    SUBCASE("quadric at origin and random points") {
        for (auto sig : {SignatureVector({1}), SignatureVector({1, -1}), SignatureVector({1, 1, -1})}) {
            auto rho = quadric(sig);
            auto v = levi_signature_at(rho, std::vector<GaussRational>(sig.n() + 1));
            CHECK(v.nondegenerate);
            CHECK(v.pbar == sig.pbar());
            CHECK(v.qbar == sig.qbar());
            for (int t = 1; t <= 10; ++t) {
                std::vector<GaussRational> pt;
                mpq_class norm = 0;
                for (int j = 0; j < sig.n(); ++j) {
                    GaussRational zj(mpq_class(t + j, 3), mpq_class(1 - t * j, 7));
                    norm += sig[j] * zj.norm2();
                    pt.push_back(zj);
                }
                pt.push_back(GaussRational(mpq_class(t, 5), norm));
                auto u = levi_signature_at(rho, pt);
                CHECK(u.nondegenerate);
                CHECK(u.pbar == sig.pbar());
                CHECK(u.qbar == sig.qbar());
            }
        }
    }
    SUBCASE("blown-up quadric") {
        auto rho = blownup_quadric(SignatureVector({1}));
        auto good = levi_signature_at(rho, {0, 1});
        CHECK(good.nondegenerate);
        CHECK(good.pbar == 1);
        auto bad = levi_signature_at(rho, {GaussRational(2, 3), 0});
        CHECK_FALSE(bad.nondegenerate);
        CHECK(bad.rank == 0);
        CHECK(evaluate(degeneracy_certificate(rho), conj_point(rho.vars(), {0, 1})) != GaussRational(0));
        CHECK(evaluate(degeneracy_certificate(rho), conj_point(rho.vars(), {5, 0})).is_zero());
    }
    SUBCASE("rejections") {
        auto rho = quadric(SignatureVector({1}));
        CHECK_THROWS(levi_signature_at(rho, {0, GaussRational::i()}));
        VarSet vs(1);
        DefiningFunction sq(im_of(var(vs, vs.w())) * im_of(var(vs, vs.w())) +
                            hermitian_norm(vs, SignatureVector({1})) * hermitian_norm(vs, SignatureVector({1})));
        CHECK_THROWS(levi_signature_at(sq, {0, 0}));
    }
}
