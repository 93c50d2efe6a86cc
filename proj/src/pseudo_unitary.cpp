#include "crsym/pseudo_unitary.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crsym {

namespace {

struct ZeroEntry {
    int r, c;
};

// real basis of {A : A* G + G A = 0} with optional trace and zero-entry conditions
std::vector<CMatrix> skew_basis(const CMatrix& g, bool trace_free, const std::vector<ZeroEntry>& zeros) {
    const int n = g.size();
    const int unknowns = 2 * n * n;
    const int rows = unknowns + 1 + 2 * int(zeros.size());
    QMatrix m(rows, unknowns);
    for (int u = 0; u < unknowns; ++u) {
        int entry = u / 2;
        CMatrix a = CMatrix::unit(n, entry / n, entry % n, u % 2 ? GaussRational::i() : GaussRational(1));
        for (const auto& [row, v] : real_coords(a.adjoint() * g + g * a)) m(row, u) = v;
        if (trace_free && entry / n == entry % n && u % 2) m(unknowns, u) = 1;
    }
    for (std::size_t z = 0; z < zeros.size(); ++z) {
        int entry = zeros[z].r * n + zeros[z].c;
        m(unknowns + 1 + 2 * int(z), 2 * entry) = 1;
        m(unknowns + 2 + 2 * int(z), 2 * entry + 1) = 1;
    }
    std::vector<CMatrix> out;
    for (const auto& v : nullspace(m)) out.push_back(from_real_coords(n, v));
    return out;
}

void check_pq(int p, int q) {
    if (p < 1) throw std::invalid_argument("sign-definite forms are excluded (p must be at least 1)");
    if (p > q) throw std::invalid_argument("expected p <= q");
    if (p + q < 3) throw std::invalid_argument("expected p + q >= 3");
}

}  // namespace

HermitianForm HermitianForm::adapted(int p, int q, int s) {
    check_pq(p, q);
    if (s < 1 || s > p) throw std::invalid_argument("isotropic dimension s must satisfy 1 <= s <= p");
    HermitianForm f;
    f.p = p;
    f.q = q;
    f.s = s;
    const int n = p + q;
    f.gram = CMatrix(n);
    for (int i = 0; i < s; ++i) {
        f.gram(i, n - 1 - i) = 1;
        f.gram(n - 1 - i, i) = 1;
    }
    for (int i = s; i < n - s; ++i) f.gram(i, i) = i - s < p - s ? 1 : -1;
    return f;
}

MatrixAlgebra su_basis(int p, int q, int s) {
    MatrixAlgebra a;
    a.form = HermitianForm::adapted(p, q, s);
    a.basis = skew_basis(a.form.gram, true, {});
    return a;
}

MatrixAlgebra u_basis(int p, int q, int s) {
    MatrixAlgebra a;
    a.form = HermitianForm::adapted(p, q, s);
    a.basis = skew_basis(a.form.gram, false, {});
    return a;
}

bool in_algebra(const CMatrix& a, const HermitianForm& form, bool trace_free) {
    if (a.size() != form.size()) return false;
    if (!(a.adjoint() * form.gram + form.gram * a).is_zero()) return false;
    return !trace_free || a.trace().is_zero();
}

ParabolicSpec ParabolicSpec::maximal(int n, int s) {
    if (s < 1 || 2 * s > n + 2) throw std::invalid_argument("s out of range for a maximal parabolic");
    ParabolicSpec spec;
    spec.n = n;
    spec.crosses = {s};
    if (n + 2 - s != s) spec.crosses.push_back(n + 2 - s);
    return spec;
}

std::vector<int> ParabolicSpec::plane_dims() const {
    std::vector<int> out;
    for (int i : crosses)
        if (2 * i <= n + 2) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::string ParabolicSpec::name() const {
    std::vector<int> c = crosses;
    std::sort(c.begin(), c.end());
    if (c.size() == 1) return "p_" + std::to_string(c[0]);
    std::string s = "p_{";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
    return s + "}";
}

void validate(const ParabolicSpec& spec, int p, int q) {
    check_pq(p, q);
    const int big = p + q;
    if (spec.n != big - 2) throw std::invalid_argument("cross set is for a different n");
    if (spec.crosses.empty()) throw std::invalid_argument("empty cross set");
    std::set<int> c(spec.crosses.begin(), spec.crosses.end());
    if (c.size() != spec.crosses.size()) throw std::invalid_argument("repeated cross");
    for (int i : c) {
        if (i < 1 || i > big - 1) throw std::invalid_argument("cross on a nonexistent node " + std::to_string(i));
        if (!c.count(big - i))
            throw std::invalid_argument("node " + std::to_string(i) + " crossed without its arrow partner " +
                                        std::to_string(big - i));
        if (i > p && i < big - p) throw std::invalid_argument("cross on black node " + std::to_string(i));
    }
}

MatrixAlgebra parabolic_subalgebra(int p, int q, const ParabolicSpec& spec) {
    validate(spec, p, q);
    auto dims = spec.plane_dims();
    MatrixAlgebra a;
    a.form = HermitianForm::adapted(p, q, dims.back());
    const int big = p + q;
    std::vector<ZeroEntry> zeros;
    std::set<std::pair<int, int>> seen;
    for (int s : dims)
        for (int r = s; r < big; ++r)
            for (int c = 0; c < s; ++c)
                if (seen.insert({r, c}).second) zeros.push_back({r, c});
    a.basis = skew_basis(a.form.gram, true, zeros);
    return a;
}

long parabolic_dimension(int n, int s) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (s < 1 || s > n / 2 + 1) throw std::invalid_argument("s must satisfy 1 <= s <= floor(n/2)+1");
    long N = n, S = s;
    return N * N - 2 * S * N + 3 * S * S + 4 * N - 4 * S + 3;
}

MaxParabolic max_parabolic(int n) {
    MaxParabolic m;
    for (int s = 1; s <= n / 2 + 1; ++s) {
        long d = parabolic_dimension(n, s);
        if (d > m.value) {
            m.value = d;
            m.argmax = {s};
        } else if (d == m.value) {
            m.argmax.push_back(s);
        }
    }
    return m;
}

GapThresholds gap_thresholds(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    long N = n;
    GapThresholds g;
    g.d_max = N * N + 4 * N + 3;
    g.d_smax = N * N + 2 * N + 2 + (n == 2 ? 1 : 0);
    g.d_0 = n == 1 ? 3 : N * N + 4;
    return g;
}

const std::vector<std::vector<long>>& dimension_table_reference() {
    static const std::vector<std::vector<long>> t = {
        {5}, {10, 11}, {17, 16}, {26, 23, 26}, {37, 32, 33}, {50, 43, 42, 47}, {65, 56, 53, 56},
    };
    return t;
}

CMatrix chart_transform(const HermitianForm& form) {
    const int big = form.size(), n = form.n(), k = form.s - 1;
    CMatrix t(big);
    t(n + 1, 0) = 1;
    t(n, big - 1) = GaussRational(0, -2);
    for (int i = 1; i <= k; ++i) {
        t(i + k - 1, i) = 1;
        t(i - 1, big - 1 - i) = 1;
    }
    for (int m = form.s; m <= big - 1 - form.s; ++m) t(2 * k + (m - form.s), m) = 1;
    return t;
}

DefiningFunction chart_quadric(const HermitianForm& form) {
    const int n = form.n(), k = form.s - 1;
    VarSet vs(n);
    auto v = [&](int x) { return Poly::var(vs, x); };
    Poly rho = im_of(v(vs.w()));
    for (int j = 1; j <= k; ++j) rho -= v(vs.z(j)) * v(vs.zb(j + k)) + v(vs.z(j + k)) * v(vs.zb(j));
    for (int m = form.s; m <= form.size() - 1 - form.s; ++m) {
        int j = 2 * k + (m - form.s) + 1;
        rho -= v(vs.z(j)) * v(vs.zb(j)) * form.gram(m, m);
    }
    return DefiningFunction(rho);
}

HoloField chart_action(const CMatrix& a, const HermitianForm& form) {
    if (!in_algebra(a, form, true)) throw std::invalid_argument("matrix is not in su(p,q) for this form");
    const int n = form.n();
    CMatrix t = chart_transform(form);
    CMatrix ap = t * a * *inverse(t);
    VarSet vs(n);
    std::vector<Poly> hat;
    for (int k = 0; k <= n; ++k) hat.push_back(Poly::var(vs, vs.holo(k)));
    hat.push_back(Poly::constant(vs, 1));
    std::vector<Poly> img(n + 2, Poly(vs));
    for (int r = 0; r < n + 2; ++r)
        for (int c = 0; c < n + 2; ++c)
            if (!ap(r, c).is_zero()) img[r] += hat[c] * ap(r, c);
    std::vector<Poly> comps;
    for (int r = 0; r <= n; ++r) comps.push_back(img[r] - hat[r] * img[n + 1]);
    return HoloField(vs, std::move(comps));
}

std::vector<HoloField> chart_action(const MatrixAlgebra& alg) {
    std::vector<HoloField> out;
    for (const auto& a : alg.basis) out.push_back(chart_action(a, alg.form));
    return out;
}

StabilizerResult stabilizer_of_subspace(const std::vector<HoloField>& fields, const std::vector<int>& zero_coords) {
    StabilizerResult res;
    if (fields.empty()) return res;
    const VarSet& vs = fields[0].vars();
    Substitution restrict{vs, vs, {}};
    for (int k : zero_coords) {
        if (k < 0 || k > vs.n()) throw std::invalid_argument("coordinate index out of range");
        restrict.images[vs.holo(k)] = Poly(vs);
        restrict.images[vs.antiholo(k)] = Poly(vs);
    }
    FieldCoords fc(vs);
    std::vector<SparseVec> cols;
    for (const auto& x : fields) {
        HoloField normal(vs);
        for (int k : zero_coords) normal.set(k, substitute(x[k], restrict));
        cols.push_back(fc.encode(normal));
    }
    QMatrix m(std::max(fc.size(), 1), int(fields.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) m(r, int(c)) = v;
    for (auto& coeffs : nullspace(m)) {
        res.basis.push_back(combine(fields, coeffs));
        res.coefficients.push_back(std::move(coeffs));
    }
    return res;
}

std::vector<CMatrix> u_plus_sol2_basis(const SignatureVector& sig) {
    const int n = sig.n(), big = n + 2;
    CMatrix g(n);
    for (int j = 0; j < n; ++j) g(j, j) = sig[j];
    std::vector<CMatrix> out;
    for (const auto& a : skew_basis(g, false, {})) {
        CMatrix b(big);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) b(r, c) = a(r, c);
        out.push_back(b);
    }
    out.push_back(CMatrix::unit(big, n, n));
    out.push_back(CMatrix::unit(big, n, n + 1));
    return out;
}

bool AuditReport::pass() const {
    return std::all_of(candidates.begin(), candidates.end(), [](const AuditCandidate& c) { return c.pass; });
}

AuditReport audit_subalgebra_bound(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    AuditReport r;
    r.n = n;
    r.threshold = max_parabolic(n).value;
    const long big = n + 2;
    auto add = [&](std::string name, mpq_class v) {
        bool ok = v < r.threshold;
        r.candidates.push_back({std::move(name), std::move(v), ok});
    };
    add("pseudotorus centralizer u(p,q-1)", mpq_class((n + 1) * (n + 1)));
    for (long s = 2; s * s <= big; ++s)
        if (big % s == 0) {
            long t = big / s;
            add("sl(" + std::to_string(s) + ")+sl(" + std::to_string(t) + ")", mpq_class(s * s + t * t - 2));
        }
    if (n >= 2) {
        mpq_class s1 = n + 1;
        add("nonsimple irreducible interval bound", s1 * s1 + mpq_class(big * big) / (s1 * s1) - 2);
    }
    add("type A sl(n+1)", mpq_class(long(n) * n + 2 * n));
    add("type B/D so(n+2)", mpq_class(big * (n + 1) / 2));
    long k = n / 2;
    add("type C sp(2k+2)", mpq_class((k + 1) * (2 * k + 3)));
    struct Ex {
        const char* name;
        long dim, rep;
    };
    for (const Ex& e : {Ex{"g2", 14, 7}, Ex{"f4", 52, 26}, Ex{"e6", 78, 27}, Ex{"e7", 133, 56}, Ex{"e8", 248, 248}})
        if (big >= e.rep) add(e.name, mpq_class(e.dim));
    return r;
}

}  // namespace crsym
