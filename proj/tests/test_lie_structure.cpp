#include "doctest.h"

#include "crsym/lie.hpp"
#include "crsym/pseudo_unitary.hpp"

using namespace crsym;

namespace {

StructureConstants heis3() {
    StructureConstants sc(3);
    sc.set_bracket(0, 1, {{2, 1}});
    return sc;
}

}  // namespace

TEST_CASE("structure constants from fields") {
    VarSet vs(1);
    Poly zero(vs), one = Poly::constant(vs, 1);
    HoloField a(vs, {one, zero}), b(vs, {one * GaussRational::i(), zero});
    auto sc = structure_constants(std::vector<HoloField>{a, b});
    CHECK(sc.dim() == 2);
    CHECK(sc.bracket(0, 1).empty());
    HoloField w(vs, {zero, Poly::var(vs, vs.w())}), d(vs, {zero, one});
    CHECK_THROWS_AS(structure_constants(std::vector<HoloField>{a, w, a + w}), DependentBasisError);
    HoloField ww(vs, {zero, Poly::var(vs, vs.w()) * Poly::var(vs, vs.w())});
    try {
        structure_constants(std::vector<HoloField>{d, ww});
        FAIL("expected closure failure");
    } catch (const NotClosedError& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
    }
}

TEST_CASE("antisymmetry and jacobi") {
    auto sc = structure_constants(su_basis(1, 2).basis);
    CHECK(sc.is_antisymmetric());
    CHECK(sc.satisfies_jacobi());
    StructureConstants bad(3);
    bad.set_bracket(0, 1, {{0, 1}});
    bad.set_bracket(1, 2, {{1, 1}});
    bad.set_bracket(0, 2, {{1, 1}});
    CHECK_FALSE(bad.satisfies_jacobi());
}

TEST_CASE("fingerprints") {
    StructureConstants ab(2);
    auto fa = fingerprint(ab);
    CHECK(fa.derived == std::vector<int>{2, 0});
    CHECK(fa.center == 2);
    CHECK(fa.killing_rank == 0);

    auto fs = fingerprint(structure_constants(su_basis(2, 2).basis));
    CHECK(fs.dim == 15);
    CHECK(fs.derived == std::vector<int>{15});
    CHECK(fs.killing_rank == 15);

    auto fh = fingerprint(heis3());
    CHECK(fh.derived == std::vector<int>{3, 1, 0});
    CHECK(fh.center == 1);
    CHECK_FALSE(fingerprints_match(fh, fingerprint(StructureConstants(3))).match);

    auto p13a = fingerprint(structure_constants(parabolic_subalgebra(1, 3, ParabolicSpec::maximal(2, 1)).basis));
    auto p13b = fingerprint(structure_constants(parabolic_subalgebra(2, 2, ParabolicSpec::maximal(2, 1)).basis));
    MESSAGE("p_{1,3} in su(1,3): " << p13a.str());
    MESSAGE("p_{1,3} in su(2,2): " << p13b.str());
    CHECK(p13a.dim == 10);
    CHECK(p13b.dim == 10);
    auto cmp = fingerprints_match(p13a, p13b);
    CHECK_FALSE(cmp.match);
    CHECK(cmp.differences == std::vector<std::string>{"killing signature"});
}

TEST_CASE("basis change and rescaling") {
    auto sc = structure_constants(parabolic_subalgebra(1, 2, ParabolicSpec::maximal(1, 1)).basis);
    QMatrix p = QMatrix::identity(sc.dim());
    p(0, 1) = 3;
    p(2, 0) = mpq_class(-1, 2);
    auto moved = sc.change_basis(p);
    CHECK(moved.satisfies_jacobi());
    CHECK(fingerprint(moved) == fingerprint(sc));
    CHECK(fingerprint(sc.rescaled(mpq_class(1, 2))) == fingerprint(sc));
    CHECK(fingerprint(sc.rescaled(-1)) == fingerprint(sc));
    CHECK(sc.change_basis(QMatrix::identity(sc.dim())) == sc);
}
