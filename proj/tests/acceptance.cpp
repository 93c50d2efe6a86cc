#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "crsym/blowup.hpp"
#include "crsym/catalog.hpp"
#include "crsym/expr.hpp"
#include "crsym/pseudo_unitary.hpp"
#include "crsym/symmetry_solver.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace crsym;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
};

std::string failed_checks(const VerificationReport& r) {
    std::string s;
    for (const auto& c : r.checks)
        if (!c.ok()) s += (s.empty() ? "" : ", ") + c.name + " (" + c.detail + ")";
    return s;
}

bool full_pass(const VerificationReport& r, Outcome& out) {
    if (!r.pass()) {
        out.fail(r.model + ": " + failed_checks(r));
        return false;
    }
    for (const char* need : {"tangency", "independence", "closure", "fingerprint"}) {
        bool found = false;
        for (const auto& c : r.checks) found = found || c.name == need;
        if (!found) {
            out.fail(r.model + ": no " + std::string(need) + " check");
            return false;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> admissible_pq(int n, int s) {
    std::vector<std::pair<int, int>> out;
    for (int p = s; 2 * p <= n + 2; ++p) out.emplace_back(p, n + 2 - p);
    return out;
}

Outcome c1() {
    Outcome o;
    const auto& ref = dimension_table_reference();
    int cells = 0, ok = 0;
    for (int n = 1; n <= 7; ++n)
        for (int s = 1; s <= n / 2 + 1; ++s) {
            ++cells;
            long got = parabolic_dimension(n, s);
            if (std::size_t(s - 1) < ref[n - 1].size() && ref[n - 1][s - 1] == got) ++ok;
            else o.fail("d_" + std::to_string(n) + "(" + std::to_string(s) + ") = " + std::to_string(got));
        }
    if (o.pass) o.detail = std::to_string(ok) + "/" + std::to_string(cells) + " printed cells match";
    return o;
}

Outcome c2() {
    Outcome o;
    int count = 0;
    for (int n = 1; n <= 6; ++n)
        for (int s = 1; s <= n / 2 + 1; ++s)
            for (auto [p, q] : admissible_pq(n, s)) {
                if (p + q < 3) continue;
                int got = parabolic_subalgebra(p, q, ParabolicSpec::maximal(n, s)).dim();
                ++count;
                if (got != parabolic_dimension(n, s))
                    o.fail("n=" + std::to_string(n) + " s=" + std::to_string(s) + " su(" + std::to_string(p) + "," +
                           std::to_string(q) + "): basis " + std::to_string(got));
            }
    if (o.pass) o.detail = std::to_string(count) + " (n,s,p,q) cases agree";
    return o;
}

Outcome c3() {
    Outcome o;
    for (int n = 1; n <= 40; ++n) {
        auto m = max_parabolic(n);
        std::vector<int> want = n == 2 ? std::vector<int>{2} : n == 4 ? std::vector<int>{1, 3} : std::vector<int>{1};
        long value = n == 2 ? 11 : n == 4 ? 26 : parabolic_dimension(n, 1);
        if (m.argmax != want || m.value != value) o.fail("n=" + std::to_string(n) + ": value " + std::to_string(m.value));
    }
    if (o.pass) o.detail = "unique s=1 for n in 1..40 except n=2 (11 at s=2) and n=4 (26 at s=1,3)";
    return o;
}

const std::vector<std::pair<int, int>> kQuadricPQ = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

Outcome c4() {
    Outcome o;
    for (auto [p, q] : kQuadricPQ) {
        int n = p + q - 2;
        auto alg = su_basis(p, q);
        auto fields = chart_action(alg);
        auto rho = chart_quadric(alg.form);
        std::string tag = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
        if (real_rank(fields) != n * n + 4 * n + 3) o.fail(tag + ": rank " + std::to_string(real_rank(fields)));
        for (const auto& x : fields)
            if (!is_tangent(x, rho).tangent()) {
                o.fail(tag + ": field not tangent");
                break;
            }
        try {
            auto sc = structure_constants(fields);
            if (!sc.satisfies_jacobi()) o.fail(tag + ": Jacobi");
        } catch (const LieError& e) {
            o.fail(tag + ": " + e.what());
        }
    }
    if (o.pass) o.detail = "n^2+4n+3 tangent independent fields, closed, for all five (p,q)";
    return o;
}

Outcome c5() {
    Outcome o;
    std::ostringstream d;
    for (auto [p, q] : kQuadricPQ) {
        int n = p + q - 2;
        std::vector<int> all;
        for (int k = 0; k <= n; ++k) all.push_back(k);
        int got = stabilizer_of_subspace(chart_action(su_basis(p, q)), all).dim();
        d << got << " ";
        if (got != n * n + 2 * n + 2) o.fail("origin in su(" + std::to_string(p) + "," + std::to_string(q) + "): " + std::to_string(got));
    }
    int l = stabilizer_of_subspace(chart_action(su_basis(2, 2)), {1, 2}).dim();
    if (l != 8) o.fail("L={z2=0,w=0} in su(2,2): " + std::to_string(l));
    if (o.pass) o.detail = "origin stabilizers " + d.str() + "; {z2=0,w=0} in su(2,2): " + std::to_string(l);
    return o;
}

Outcome c6() {
    Outcome o;
    int count = 0;
    auto same = [&](const DefiningFunction& got, const DefiningFunction& want, const std::string& what) {
        ++count;
        if (!(got == want)) o.fail(what + " gives " + got.rho().str());
    };
    for (auto sig : {SignatureVector({1}), SignatureVector({1, 1}), SignatureVector({1, -1}), SignatureVector({1, -1, -1})}) {
        VarSet vs(sig.n());
        Poly w = Poly::var(vs, vs.w());
        DefiningFunction q = quadric(sig);
        same(pullback(q, BlowupMap::pi_o(sig.n())), point_blowup_model(sig).rho.value_or(DefiningFunction()), "pi_o");
        std::vector<BlowupMap> chain;
        for (int m = 1; m <= 3; ++m) {
            chain.push_back(BlowupMap::pi_o(sig.n()));
            same(pullback(q, compose(chain)), DefiningFunction(im_of(w) - ww(vs).pow(m) * hermitian_norm(vs, sig)),
                 "pi_o iterated " + std::to_string(m));
        }
        for (int m = 1; m <= 3; ++m)
            for (int r = 2; r <= 5; ++r)
                for (int sigma : {1, -1}) {
                    auto rec = rrm_model(sig, m, r, sigma);
                    same(pullback(q, compose({BlowupMap::psi(sig.n(), r, sigma), BlowupMap::pi_o(sig.n(), m)})), *rec.rho,
                         "psi then pi_o for " + rec.name);
                }
    }
    // adapted-chart blow-ups along isotropic planes
    for (int n = 2; n <= 6; ++n)
        for (int s = 2; 2 * s <= n + 2; ++s)
            for (int p = s; 2 * p <= n + 2; ++p) {
                std::vector<ModelRecord> recs = {eqgroup_I(n, s, p)};
                if (eqgroup_II_admissible(n, s)) recs.push_back(eqgroup_II(n, s, p));
                for (const auto& r : recs) same(pullback(r.source->base, parse_map_spec(r.source->map, n)), *r.rho, r.name);
            }
    auto p2 = ep2_model(), p123 = ep123_model(), p13 = ep13_model();
    same(pullback(*p2.rho, BlowupMap::pi_L(2, {1})), *p123.rho, "ep2 -> ep123");
    same(pullback(p2.source->base, parse_map_spec(p2.source->map, 2)), *p2.rho, "hyperbolic quadric -> ep2");
    same(pullback(*p2.rho, BlowupMap::pi_L(2, {2})), *p13.rho, "ep2 -> ep13");
    if (o.pass) o.detail = std::to_string(count) + " pullbacks equal their targets after normalization";
    return o;
}

Outcome c7() {
    Outcome o;
    int count = 0;
    auto run = [&](const ModelRecord& r, int dim) {
        ++count;
        auto rep = verify_model(r);
        if (full_pass(rep, o) && rep.dim != dim) o.fail(r.name + ": dim " + std::to_string(rep.dim));
    };
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int eps : {1, -1}) {
                run(vfrepres_model(SignatureVector::standard(n, n), m, eps), n * n + 2 * n + 2);
                if (n >= 2) run(vfrepres_model(SignatureVector::standard(n, n / 2), m, eps), n * n + 2 * n + 2);
            }
    for (int n = 2; n <= 6; ++n)
        for (int s = 2; 2 * s <= n + 2; ++s)
            for (int p = s; 2 * p <= n + 2; ++p) {
                run(eqgroup_I(n, s, p), int(parabolic_dimension(n, s)));
                if (eqgroup_II_admissible(n, s)) run(eqgroup_II(n, s, p), int(parabolic_dimension(n, s)));
            }
    run(ep123_model(), 9);
    run(rrm_model(SignatureVector({1}), 2, 3, 1), 3);
    run(rrm_model(SignatureVector({1, -1}), 2, 3, 1), 6);
    run(rrm_model(SignatureVector({1, 1}), 3, 5, 1), 6);
    run(rrm_model(SignatureVector({1, 1}), 2, 3, -1), 6);
    if (o.pass) o.detail = std::to_string(count) + " records verified in full mode";
    return o;
}

Outcome c8() {
    Outcome o;
    std::ostringstream d;
    auto expect = [&](const std::string& what, const DefiningFunction& rho, int degree, int dim) {
        auto b = solve_polynomial_symmetries(rho, degree);
        d << what << ": " << b.size() << ", ";
        if (int(b.size()) != dim) o.fail(what + ": " + std::to_string(b.size()) + " at D=" + std::to_string(degree));
        return b;
    };
    expect("quadric n=1", quadric(SignatureVector({1})), 2, 8);
    expect("point blow-up n=1", *point_blowup_model(SignatureVector({1})).rho, 3, 5);
    expect("point blow-up n=2", *point_blowup_model(SignatureVector({1, 1})).rho, 3, 10);
    expect("ep123", *ep123_model().rho, 4, 9);
    expect("Q_2 n=2", *rrm_model(SignatureVector({1, 1}), 2, 1, 1).rho, 6, 6);
    auto m5 = expect("M5", parse_defining("Im(w) - abs2(z1) - abs2(z2)^2"), 3, 9);
    if (m5.size() == 9) {
        auto cmp = fingerprints_match(fingerprint(structure_constants(m5)), fingerprint(expected_structure("u(1,2)")));
        if (!cmp.match) o.fail("M5 fingerprint differs from u(1,2)");
    }
    if (o.pass) o.detail = d.str() + "(M5 fingerprint = u(1,2))";
    return o;
}

Outcome c9() {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int eps : {1, -1}) {
                auto r = vfrepres_model(SignatureVector::standard(n, n), m, eps);
                int v = max_vanishing_order(r.generators, std::vector<GaussRational>(n + 1));
                if (v != 2 * m + 1) o.fail(r.name + ": " + std::to_string(v));
            }
    if (o.pass) o.detail = "order 2m+1 for n <= 4, m <= 3, both signs";
    return o;
}

Outcome c10() {
    Outcome o;
    auto a = fingerprint(expected_structure("p_{1,3} in su(1,3)"));
    auto b = fingerprint(expected_structure("p_{1,3} in su(2,2)"));
    if (a == b) o.fail("p_{1,3} fingerprints coincide");
    int count = 0;
    VerifyOptions no_solver;
    no_solver.run_solver = false;
    for (int n = 3; n <= 6; ++n)
        for (int s = 2; eqgroup_II_admissible(n, s) && 2 * s <= n + 2; ++s)
            for (int p = s; 2 * p <= n + 2; ++p) {
                auto x = verify_model(eqgroup_I(n, s, p), no_solver);
                auto y = verify_model(eqgroup_II(n, s, p), no_solver);
                ++count;
                if (!x.fingerprint || !y.fingerprint || !(*x.fingerprint == *y.fingerprint))
                    o.fail("n=" + std::to_string(n) + " s=" + std::to_string(s) + " p=" + std::to_string(p));
            }
    if (o.pass) o.detail = "p_{1,3} separated by Killing signature (" + a.str() + " vs " + b.str() + "); " + std::to_string(count) + " I/II pairs agree";
    return o;
}

Outcome c11() {
    Outcome o;
    auto rep = verify_model(heis_extension_model());
    if (!rep.pass()) o.fail(failed_checks(rep));
    if (rep.dim != 6) o.fail("dim " + std::to_string(rep.dim));
    bool rel = false;
    for (const auto& c : rep.checks) rel = rel || (c.name == "relations" && c.status == CheckResult::Status::Pass);
    if (!rel) o.fail("relations check missing");
    if (o.pass) o.detail = "structure constants equal the stated table, dim 6";
    return o;
}

Outcome c12() {
    Outcome o;
    for (int n = 1; n <= 30; ++n) {
        auto a = audit_subalgebra_bound(n);
        if (!a.pass()) o.fail("n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "n = 1..30, every candidate below the threshold";
    return o;
}

Outcome c13() {
    Outcome o;
    int count = 0;
    std::vector<ModelRecord> recs;
    for (auto sig : {SignatureVector({1}), SignatureVector({1, 1}), SignatureVector({1, -1})}) {
        recs.push_back(quadric_model(sig));
        recs.push_back(point_blowup_model(sig));
    }
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int eps : {1, -1}) recs.push_back(vfrepres_model(SignatureVector::standard(n, n), m, eps));
    for (const auto& r : recs) {
        Poly c = degeneracy_certificate(*r.rho);
        int a = ww_content(c);
        bool ok = c.size() == 1 && c.total_degree() == 2 * a;
        if (r.degeneracy == ModelRecord::Degeneracy::Nowhere) ok = ok && a == 0;
        else ok = ok && a >= 1;
        for (const auto& w : r.witnesses) {
            bool zero = evaluate(c, conj_point(r.rho->vars(), w.point)).is_zero();
            if (zero != (r.degeneracy == ModelRecord::Degeneracy::ExactlyOnW0 && w.point[r.n].is_zero())) ok = false;
        }
        ++count;
        if (!ok) o.fail(r.name + ": certificate " + c.str());
    }
    if (o.pass) o.detail = std::to_string(count) + " certificates: constant for quadrics, c*(w*conj(w))^a otherwise";
    return o;
}

Outcome c14() {
    Outcome o;
    doctest::Context ctx;
    ctx.setOption("no-version", true);
    ctx.setOption("no-intro", true);
    std::ostringstream sink;
    ctx.setCout(&sink);
    int rc = ctx.run();
    if (rc != 0) o.fail("property suite failures:\n" + sink.str());
    else o.detail = "six suites, 1000 randomized cases each, zero failures";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"dimension table", c1},
        {"formula vs matrix bases", c2},
        {"max parabolic exceptions", c3},
        {"hyperquadric symmetry", c4},
        {"stabilizers", c5},
        {"blow-up pullbacks", c6},
        {"generator verification", c7},
        {"solver discovery", c8},
        {"vanishing order", c9},
        {"non-isomorphism witnesses", c10},
        {"solvable extension relations", c11},
        {"subalgebra audit", c12},
        {"degeneracy loci", c13},
        {"property suites", c14},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("criterion %2zu %s: %s (%.2f s): %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
