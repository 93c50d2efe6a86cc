#include "crsym/catalog.hpp"

#include "crsym/expr.hpp"
#include "crsym/pseudo_unitary.hpp"
#include "crsym/symmetry_solver.hpp"

#include <algorithm>
#include <mutex>
#include <regex>
#include <stdexcept>

namespace crsym {

namespace {

const GaussRational kI = GaussRational::i();

// field builder over a fixed VarSet; coordinates 0..n-1 are z, n is w
struct FB {
    VarSet vs;
    explicit FB(int n) : vs(n) {}

    Poly z(int j) const { return Poly::var(vs, vs.z(j + 1)); }
    Poly zb(int j) const { return Poly::var(vs, vs.zb(j + 1)); }
    Poly w() const { return Poly::var(vs, vs.w()); }
    Poly wb() const { return Poly::var(vs, vs.wb()); }
    Poly c(const GaussRational& g) const { return Poly::constant(vs, g); }
    Poly one() const { return c(GaussRational(1)); }

    HoloField zero() const { return HoloField(vs); }
    HoloField d(int k, const Poly& coef) const {
        HoloField x(vs);
        x.set(k, coef);
        return x;
    }
    HoloField d(std::initializer_list<std::pair<int, Poly>> parts) const {
        HoloField x(vs);
        for (const auto& [k, p] : parts) x.set(k, x[k] + p);
        return x;
    }
};

Poly re2(const Poly& p) { return p + conjugate(p); }

std::string sign_word(int eps) { return eps > 0 ? "plus" : "minus"; }

std::string sig_word(const SignatureVector& sig) {
    std::string s;
    for (int x : sig.entries()) s += x > 0 ? 'p' : 'm';
    return s;
}

std::pair<int, int> su_pq(const SignatureVector& sig) {
    int p = sig.pbar() + 1, q = sig.qbar() + 1;
    return {std::min(p, q), std::max(p, q)};
}

std::string su_str(int p, int q) { return "su(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string parabolic_str(int n, std::vector<int> crosses, int p, int q) {
    return ParabolicSpec{n, std::move(crosses)}.name() + " in " + su_str(p, q);
}

Witness on_m(std::vector<GaussRational> pt) { return Witness{std::move(pt), std::nullopt}; }

Witness nondeg(std::vector<GaussRational> pt, int pbar, int qbar) {
    LeviVerdict v;
    v.nondegenerate = true;
    v.pbar = pbar;
    v.qbar = qbar;
    v.rank = pbar + qbar;
    return Witness{std::move(pt), v};
}

Witness degen(std::vector<GaussRational> pt, int rank) {
    LeviVerdict v;
    v.rank = rank;
    return Witness{std::move(pt), v};
}

std::vector<GaussRational> origin(int n) { return std::vector<GaussRational>(n + 1); }

// z = e_j (sign of sigma_j matching the sign of w's imaginary part), |w| = 1
std::vector<GaussRational> unit_witness(const SignatureVector& sig) {
    int n = sig.n();
    std::vector<GaussRational> pt(n + 1);
    pt[0] = GaussRational(1);
    pt[n] = sig[0] > 0 ? kI : -kI;
    return pt;
}

// x^2 + y^2 = v for some small integers
std::optional<std::pair<long, long>> two_squares(long v) {
    for (long x = 0; x * x <= v; ++x) {
        mpz_class r = v - x * x;
        if (mpz_perfect_square_p(r.get_mpz_t())) return std::make_pair(x, mpz_class(sqrt(r)).get_si());
    }
    return std::nullopt;
}

// a point on Im(w^r) = sign |w|^{2m} sum sigma |z|^2 with w != 0
std::optional<std::vector<GaussRational>> power_witness(const SignatureVector& sig, int r, int m, int sign) {
    const int n = sig.n();
    for (long a = 1; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
            if (b == 0) continue;
            GaussRational w(a, b);
            GaussRational wr(1);
            for (int k = 0; k < r; ++k) wr *= w;
            mpq_class mod = 1;
            for (int k = 0; k < m; ++k) mod *= w.norm2();
            mpq_class t = wr.im() / (sign * mod);
            if (sgn(t) == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (sig[j] * sgn(t) <= 0) continue;
                mpq_class at = abs(t);
                if (at.get_den() > 100000 || at.get_num() > 100000) continue;
                long pq = at.get_num().get_si() * at.get_den().get_si();
                auto xy = two_squares(pq);
                if (!xy) continue;
                std::vector<GaussRational> pt(n + 1);
                mpq_class den(at.get_den());
                pt[j] = GaussRational(mpq_class(xy->first) / den, mpq_class(xy->second) / den);
                pt[n] = w;
                return pt;
            }
        }
    return std::nullopt;
}

// the fields of u(pbar,qbar) acting on z
std::vector<HoloField> unitary_fields(const FB& f, const SignatureVector& sig) {
    const int n = sig.n();
    std::vector<HoloField> out;
    for (int j = 0; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) {
            GaussRational ss(sig[j] * sig[l]);
            out.push_back(f.d({{l, f.z(j)}, {j, -(f.z(l) * ss)}}));
            out.push_back(f.d({{l, f.z(j) * kI}, {j, f.z(l) * (kI * ss)}}));
        }
        out.push_back(f.d(j, f.z(j) * kI));
    }
    return out;
}

std::vector<GaussRational> gauss_point(std::initializer_list<GaussRational> xs) { return std::vector<GaussRational>(xs); }

}  // namespace

std::string mode_name(VerifyMode m) {
    switch (m) {
        case VerifyMode::Full: return "full";
        case VerifyMode::BracketOnly: return "bracket-only";
        case VerifyMode::SolverOnly: return "solver-only";
    }
    return "?";
}

VerifyMode parse_mode(const std::string& s) {
    if (s == "full") return VerifyMode::Full;
    if (s == "bracket-only") return VerifyMode::BracketOnly;
    if (s == "solver-only") return VerifyMode::SolverOnly;
    throw std::invalid_argument("unknown verification mode '" + s + "'");
}

std::string status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass: return "pass";
        case CheckResult::Status::Fail: return "fail";
        case CheckResult::Status::Skipped: return "skipped";
    }
    return "?";
}

namespace {

StructureConstants heis_table() {
    // R, S, J, X, Y, Z
    StructureConstants sc(6);
    auto e = [](int k, mpq_class v = 1) { return SparseVec{{k, v}}; };
    sc.set_bracket(0, 3, e(3));
    sc.set_bracket(0, 4, e(4));
    sc.set_bracket(0, 5, e(5, 2));
    sc.set_bracket(2, 3, e(4));
    sc.set_bracket(2, 4, e(3, -1));
    sc.set_bracket(3, 4, e(5));
    return sc;
}

StructureConstants resolve_structure(const std::string& spec) {
    std::smatch m;
    static const std::regex su_re(R"(^\s*(s?u)\((\d+),(\d+)\)\s*$)");
    static const std::regex par_re(R"(^\s*p_(?:\{([0-9,]+)\}|(\d+))\s+in\s+su\((\d+),(\d+)\)\s*$)");
    static const std::regex usol_re(R"(^\s*u\((\d+),(\d+)\)\+sol\(2\)\s*$)");
    static const std::regex stab_re(R"(^\s*stab\(([^)]*)\)\s+in\s+su\((\d+),(\d+)\)\s*$)");
    if (std::regex_match(spec, m, su_re)) {
        int p = std::stoi(m[2]), q = std::stoi(m[3]);
        auto alg = m[1] == "su" ? su_basis(p, q) : u_basis(p, q);
        return structure_constants(alg.basis);
    }
    if (std::regex_match(spec, m, par_re)) {
        std::string list = m[1].matched ? m[1].str() : m[2].str();
        int p = std::stoi(m[3]), q = std::stoi(m[4]);
        ParabolicSpec ps{p + q - 2, {}};
        std::size_t start = 0;
        while (start <= list.size()) {
            std::size_t comma = list.find(',', start);
            if (comma == std::string::npos) comma = list.size();
            ps.crosses.push_back(std::stoi(list.substr(start, comma - start)));
            start = comma + 1;
        }
        return structure_constants(parabolic_subalgebra(p, q, ps).basis);
    }
    if (std::regex_match(spec, m, usol_re)) {
        int a = std::stoi(m[1]), b = std::stoi(m[2]);
        return structure_constants(u_plus_sol2_basis(SignatureVector::standard(a + b, a)));
    }
    if (std::regex_match(spec, m, stab_re)) {
        int p = std::stoi(m[2]), q = std::stoi(m[3]);
        auto fields = chart_action(su_basis(p, q));
        auto st = stabilizer_of_subspace(fields, parse_subspace(m[1], p + q - 2));
        return structure_constants(st.basis);
    }
    if (spec == "r3-heis3") return heis_table();
    throw std::invalid_argument("unknown algebra '" + spec + "'");
}

}  // namespace

StructureConstants expected_structure(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, StructureConstants> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(spec);
        if (it != cache.end()) return it->second;
    }
    StructureConstants sc = resolve_structure(spec);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(spec, sc);
    return sc;
}

ModelRecord quadric_model(const SignatureVector& sig) {
    const int n = sig.n();
    ModelRecord r;
    r.name = "quadric-n" + std::to_string(n) + "-" + sig_word(sig);
    r.n = n;
    r.sig = sig;
    r.rho = quadric(sig);
    auto [p, q] = su_pq(sig);
    // chart_action lands on the standard form with p-1 positive directions
    if (sig == SignatureVector::standard(n, p - 1)) {
        r.generators = chart_action(su_basis(p, q));
        r.mode = VerifyMode::Full;
    } else {
        r.mode = VerifyMode::SolverOnly;
    }
    r.expected_dim = (n + 2) * (n + 2) - 1;
    r.expected_algebra = su_str(p, q);
    r.witnesses = {nondeg(origin(n), sig.pbar(), sig.qbar())};
    r.note = "hyperquadric";
    r.solver_degree = 2;
    r.degeneracy = ModelRecord::Degeneracy::Nowhere;
    return r;
}

namespace {

// blow-ups of the adapted quadric along isotropic planes; k = s-1
std::vector<HoloField> eq_fields(const FB& f, int n, int k, const SignatureVector& sig, bool second) {
    std::vector<int> zp;
    for (int j = 2 * k; j < n; ++j) zp.push_back(j);
    auto sg = [&](int j) { return GaussRational(sig[j]); };
    HoloField zeta = f.zero(), xi = f.zero(), eta = f.zero();
    for (int j : zp) zeta.set(j, f.z(j));
    zeta.set(n, second ? f.w() : -f.w());
    if (!second) {
        xi = zeta;
        for (int a = 0; a < k; ++a) xi.set(a, f.z(a));
        for (int a = 0; a < k; ++a) eta.set(a + k, f.z(a + k));
        eta.set(n, f.w());
    } else {
        xi = zeta;
        for (int a = 0; a < k; ++a) xi.set(a + k, f.z(a + k));
        for (int a = 0; a < k; ++a) eta.set(a, f.z(a));
        eta.set(n, -f.w());
    }
    // I: eta carries the A-block, xi the A+k block; II swaps their roles
    const HoloField& P = second ? xi : eta;
    const HoloField& Q = second ? eta : xi;
    std::vector<HoloField> F;
    const GaussRational two(2), two_i(0, 2);
    for (int A = 0; A < k; ++A) {
        F.push_back(f.d(A, f.one()) + (f.z(A + k) * two_i) * P);
        F.push_back(f.d(A, f.c(kI)) + (f.z(A + k) * two) * P);
        F.push_back(f.d(A + k, f.one()) - (f.z(A) * two_i) * Q);
        F.push_back(f.d(A + k, f.c(kI)) - (f.z(A) * two) * Q);
        F.push_back(f.w() * (f.d(A + k, f.one()) + (f.z(A) * two_i) * P));
        F.push_back(f.w() * (f.d(A + k, f.c(kI)) + (f.z(A) * two) * P));
        F.push_back(f.d(A + k, f.z(A) * f.w() * kI));
        for (int B = 0; B < k; ++B) {
            F.push_back(f.d({{B, f.z(A)}, {A + k, -f.z(B + k)}}));
            F.push_back(f.d({{B, f.z(A) * kI}, {A + k, f.z(B + k) * kI}}));
        }
        for (int C = A + 1; C < k; ++C) {
            F.push_back(f.w() * f.d({{C + k, f.z(A)}, {A + k, -f.z(C)}}));
            F.push_back(f.w() * f.d({{C + k, f.z(A) * kI}, {A + k, f.z(C) * kI}}));
        }
        for (int j : zp) {
            if (!second) {
                F.push_back(f.d({{j, f.z(A)}, {A + k, -(f.z(j) * f.w() * sg(j))}}));
                F.push_back(f.d({{j, f.z(A) * kI}, {A + k, f.z(j) * f.w() * (kI * sg(j))}}));
            } else {
                F.push_back(f.d({{A + k, f.z(j)}, {j, -(f.z(A) * f.w() * sg(j))}}));
                F.push_back(f.d({{A + k, f.z(j) * kI}, {j, f.z(A) * f.w() * (kI * sg(j))}}));
            }
        }
    }
    F.push_back(f.w() * P);
    F.push_back(zeta + f.d(n, second ? f.w() : -f.w()));
    for (std::size_t a = 0; a < zp.size(); ++a) {
        int j = zp[a];
        for (std::size_t b = a + 1; b < zp.size(); ++b) {
            int l = zp[b];
            GaussRational ss(sig[j] * sig[l]);
            F.push_back(f.d({{l, f.z(j)}, {j, -(f.z(l) * ss)}}));
            F.push_back(f.d({{l, f.z(j) * kI}, {j, f.z(l) * (kI * ss)}}));
        }
        F.push_back(f.d(j, f.z(j) * kI));
        if (!second) {
            F.push_back(f.d(j, f.one()) + (f.z(j) * f.w() * (two_i * sg(j))) * P);
            F.push_back(f.d(j, f.c(kI)) + (f.z(j) * f.w() * (two * sg(j))) * P);
        } else {
            F.push_back(f.d(j, f.w()) + (f.z(j) * (two_i * sg(j))) * P);
            F.push_back(f.d(j, f.w() * kI) + (f.z(j) * (two * sg(j))) * P);
        }
    }
    return F;
}

// signature vector of length n whose z' block (indices >= 2k) has p-s pluses then minuses
SignatureVector eq_signature(int n, int k, int p) {
    std::vector<int> s(n, 1);
    int plus = p - (k + 1);
    for (int j = 2 * k; j < n; ++j) s[j] = (j - 2 * k) < plus ? 1 : -1;
    return SignatureVector(s);
}

Poly eq_rho(const FB& f, int n, int k, const SignatureVector& sig, bool second) {
    Poly rho = im_of(f.w());
    for (int j = 0; j < k; ++j) rho -= re2(f.z(j) * f.w() * f.zb(j + k));
    std::vector<int> zp;
    for (int j = 2 * k; j < n; ++j) zp.push_back(j);
    Poly norm = hermitian_norm(f.vs, sig, zp);
    rho -= second ? norm : ww(f.vs) * norm;
    return rho;
}

std::string eq_map(int n, int k, bool second) {
    std::string s;
    for (int j = 1; j <= k; ++j) s += (s.empty() ? "z" : ",z") + std::to_string(j);
    if (!second)
        for (int j = 2 * k + 1; j <= n; ++j) s += (s.empty() ? "z" : ",z") + std::to_string(j);
    return s.empty() ? "id" : "pi_L(" + s + ")";
}

ModelRecord eqgroup(int n, int s, int p, bool second) {
    const int k = s - 1;
    const int q = n + 2 - p;
    if (s < 1 || 2 * s > n + 2) throw std::invalid_argument("plane dimension s out of range");
    if (p < s || p > q) throw std::invalid_argument("need s <= p <= q");
    if (second && !eqgroup_II_admissible(n, s)) throw std::invalid_argument("second family needs 1 < s < n/2 + 1");
    FB f(n);
    SignatureVector sig = eq_signature(n, k, p);
    ModelRecord r;
    r.name = std::string(second ? "mII" : "mI") + "-n" + std::to_string(n) + "-s" + std::to_string(s) + "-p" + std::to_string(p);
    r.n = n;
    r.sig = sig;
    r.rho = DefiningFunction(eq_rho(f, n, k, sig, second));
    r.generators = eq_fields(f, n, k, sig, second);
    r.expected_dim = int(parabolic_dimension(n, s));
    r.expected_algebra = parabolic_str(n, ParabolicSpec::maximal(n, s).crosses, p, q);
    r.mode = VerifyMode::Full;
    r.solver_degree = 3;
    r.note = second ? "blow-up of the quadric along an isotropic plane, second family"
                    : "blow-up of the quadric along an isotropic plane";
    r.source = ModelSource{chart_quadric(HermitianForm::adapted(p, q, s)), eq_map(n, k, second)};
    auto pt = origin(n);
    if (k > 0) {
        pt[0] = GaussRational(1);
        pt[k] = GaussRational(0, mpq_class(1, 2));
        pt[n] = kI;
        r.witnesses.push_back(nondeg(pt, p - 1, q - 1));
        r.witnesses.push_back(degen(origin(n), second ? n - 2 * k : 0));
    }
    return r;
}

}  // namespace

bool eqgroup_II_admissible(int n, int s) { return s > 1 && 2 * (s - 1) < n; }

ModelRecord eqgroup_I(int n, int s, int p) { return eqgroup(n, s, p, false); }
ModelRecord eqgroup_II(int n, int s, int p) { return eqgroup(n, s, p, true); }

ModelRecord point_blowup_model(const SignatureVector& sig) {
    const int n = sig.n();
    FB f(n);
    ModelRecord r;
    r.name = "pointblowup-n" + std::to_string(n) + "-" + sig_word(sig);
    r.n = n;
    r.sig = sig;
    r.rho = DefiningFunction(im_of(f.w()) - ww(f.vs) * hermitian_norm(f.vs, sig));
    r.generators = eq_fields(f, n, 0, sig, false);
    r.expected_dim = int(parabolic_dimension(n, 1));
    auto [p, q] = su_pq(sig);
    r.expected_algebra = parabolic_str(n, {1, n + 1}, p, q);
    r.mode = VerifyMode::Full;
    r.solver_degree = 3;
    r.note = "blow-up of the hyperquadric at a point";
    r.source = ModelSource{quadric(sig), "pi_o"};
    r.witnesses = {nondeg(unit_witness(sig), sig.pbar(), sig.qbar()), degen(origin(n), 0)};
    auto on_w0 = origin(n);
    on_w0[0] = GaussRational(1);
    r.witnesses.push_back(degen(on_w0, 0));
    r.w0_vanishing_dim = 1;
    r.degeneracy = ModelRecord::Degeneracy::ExactlyOnW0;
    return r;
}

ModelRecord coordinate_blowup_model(const SignatureVector& sig, int k) {
    const int n = sig.n();
    if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    FB f(n);
    std::vector<int> zp, zpp;
    for (int j = 0; j < n; ++j) (j < k ? zp : zpp).push_back(j);
    ModelRecord r;
    r.name = "coordblowup-n" + std::to_string(n) + "-k" + std::to_string(k) + "-" + sig_word(sig);
    r.n = n;
    r.sig = sig;
    r.rho = DefiningFunction(im_of(f.w()) - ww(f.vs) * hermitian_norm(f.vs, sig, zp) - hermitian_norm(f.vs, sig, zpp));
    auto [p, q] = su_pq(sig);
    std::string L;
    for (int j : zp) L += "z" + std::to_string(j + 1) + ",";
    r.expected_algebra = "stab(" + L + "w) in " + su_str(p, q);
    r.expected_dim = expected_structure(r.expected_algebra).dim();
    r.mode = VerifyMode::SolverOnly;
    r.solver_degree = 3;
    r.note = "blow-up of the quadric along a coordinate subspace through the origin";
    std::string m = "pi_L(";
    for (std::size_t a = 0; a < zp.size(); ++a) m += (a ? ",z" : "z") + std::to_string(zp[a] + 1);
    r.source = ModelSource{quadric(sig), m + ")"};
    r.witnesses = {nondeg(unit_witness(sig), sig.pbar(), sig.qbar()), degen(origin(n), n - k)};
    return r;
}

ModelRecord vfrepres_model(const SignatureVector& sig, int m, int eps) {
    const int n = sig.n();
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (eps != 1 && eps != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    FB f(n);
    const GaussRational M(m), E(eps);
    Poly wm = f.w().pow(m);
    Poly w2m = f.w().pow(2 * m);
    ModelRecord r;
    r.name = "vfrepres-n" + std::to_string(n) + "-m" + std::to_string(m) + "-" + sign_word(eps);
    if (sig != SignatureVector::standard(n, n)) r.name += "-" + sig_word(sig);
    r.n = n;
    r.sig = sig;
    r.rho = DefiningFunction(im_of(w2m) - E * ww(f.vs).pow(m) * hermitian_norm(f.vs, sig));
    auto euler = [&](const Poly& coef) {  // coef * (m xi + w d/dw)
        HoloField x(f.vs);
        for (int j = 0; j < n; ++j) x.set(j, coef * f.z(j) * M);
        x.set(n, coef * f.w());
        return x;
    };
    std::vector<HoloField> g;
    g.push_back(f.d(n, f.w()));
    g.push_back(euler(w2m));
    for (auto& u : unitary_fields(f, sig)) g.push_back(u);
    for (int j = 0; j < n; ++j) {
        GaussRational ms = M * E * GaussRational(sig[j]);
        g.push_back(euler(f.z(j) * wm) + f.d(j, wm * (kI * ms)));
        g.push_back(euler(f.z(j) * wm * kI) + f.d(j, wm * ms));
    }
    r.generators = std::move(g);
    r.expected_dim = n * n + 2 * n + 2;
    auto [p, q] = su_pq(sig);
    r.expected_algebra = parabolic_str(n, {1, n + 1}, p, q);
    r.mode = VerifyMode::Full;
    r.solver_degree = 2 * m + 1;
    r.vanishing_order = 2 * m + 1;
    r.w0_vanishing_dim = 2 * n + 2;
    r.degeneracy = ModelRecord::Degeneracy::ExactlyOnW0;
    r.note = "exotic model with Levi-degenerate hyperplane, real-algebraic branch form";
    r.source = ModelSource{quadric(sig), "psi(" + std::to_string(2 * m) + "," + std::to_string(eps) + ");pi_o^" + std::to_string(m)};
    if (auto pt = power_witness(sig, 2 * m, m, eps)) r.witnesses.push_back(nondeg(*pt, sig.pbar(), sig.qbar()));
    // rho is critical along w = 0, so only the certificate is evaluated there
    auto on_w0 = origin(n);
    on_w0[0] = GaussRational(1);
    r.witnesses.push_back(on_m(on_w0));
    return r;
}

ModelRecord rrm_model(const SignatureVector& sig, int m, int r_exp, int sigma) {
    const int n = sig.n();
    if (m < 1 || r_exp < 1) throw std::invalid_argument("m and r must be positive");
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
    FB f(n);
    ModelRecord r;
    if (r_exp == 1) r.name = "qm-n" + std::to_string(n) + "-m" + std::to_string(m) + "-" + sig_word(sig);
    else
        r.name = "rrm-n" + std::to_string(n) + "-m" + std::to_string(m) + "-r" + std::to_string(r_exp) + "-" +
                 sign_word(sigma) + "-" + sig_word(sig);
    r.n = n;
    r.sig = sig;
    r.rho = DefiningFunction(im_of(f.w().pow(r_exp)) - GaussRational(sigma) * ww(f.vs).pow(m) * hermitian_norm(f.vs, sig));
    std::vector<HoloField> g = unitary_fields(f, sig);
    mpq_class a(2 * m - r_exp, 2);
    a.canonicalize();
    HoloField E(f.vs), F(f.vs);
    Poly wr = f.w().pow(r_exp);
    for (int j = 0; j < n; ++j) {
        E.set(j, f.z(j) * GaussRational(-a));
        F.set(j, wr * f.z(j) * GaussRational(r_exp - m));
    }
    E.set(n, f.w());
    F.set(n, wr * f.w());
    g.push_back(E);
    g.push_back(F);
    r.generators = std::move(g);
    r.expected_dim = n * n + 2;
    if (r_exp >= m && m > 1) r.symmetry_dim = n * n + 2 * n + 2;
    r.expected_algebra = "u(" + std::to_string(sig.pbar()) + "," + std::to_string(sig.qbar()) + ")+sol(2)";
    r.mode = VerifyMode::Full;
    r.solver_degree = r_exp == 1 ? 2 * m + 2 : std::max(r_exp + 1, m + 2);
    r.note = r_exp == 1 ? "iterated blow-up of the quadric at the origin" : "ramified cover followed by a weighted blow-up";
    r.source = ModelSource{quadric(sig), r_exp == 1 ? "pi_o^" + std::to_string(m)
                                                    : "psi(" + std::to_string(r_exp) + "," + std::to_string(sigma) +
                                                          ");pi_o^" + std::to_string(m)};
    if (auto pt = power_witness(sig, r_exp, m, sigma)) r.witnesses.push_back(nondeg(*pt, sig.pbar(), sig.qbar()));
    r.witnesses.push_back(on_m(origin(n)));
    return r;
}

ModelRecord ep2_model() {
    ModelRecord r = eqgroup_I(2, 2, 2);
    r.name = "ep2";
    r.note = "hyperbolic quadric blown up along a null line";
    FB f(2);
    r.source = ModelSource{DefiningFunction(im_of(f.w()) - re2(f.z(0) * f.zb(1))), "pi_L(z1)"};
    return r;
}

ModelRecord ep123_model() {
    FB f(2);
    Poly z1 = f.z(0), z2 = f.z(1), w = f.w();
    auto c = [&](long re, long im) { return GaussRational(re, im); };
    ModelRecord r;
    r.name = "ep123";
    r.n = 2;
    r.sig = SignatureVector({1, -1});
    r.rho = DefiningFunction(im_of(w) - re2(z1 * w * w * f.zb(1)));
    std::vector<std::vector<Poly>> G = {
        {z1 * c(3, 0), -z2, w * c(-2, 0)},
        {w * z1, -(w * z2), -(w * w)},
        {z1 * z1 * w * c(0, -4), f.one(), z1 * w * w * c(0, 2)},
        {z1 * z1 * w * c(-4, 0), f.c(kI), z1 * w * w * c(2, 0)},
        {z1 * z1 * w * w * c(0, -2), w + z1 * z2 * w * w * c(0, 2), z1 * w.pow(3) * c(0, 2)},
        {z1 * z1 * w * w * c(-2, 0), w * kI + z1 * z2 * w * w * c(2, 0), z1 * w.pow(3) * c(2, 0)},
        {z1, -z2, Poly(f.vs)},
        {z1 * kI, z2 * kI, Poly(f.vs)},
        {Poly(f.vs), z1 * w * w * kI, Poly(f.vs)},
    };
    for (auto& comps : G) r.generators.emplace_back(f.vs, comps);
    r.expected_dim = 9;
    r.expected_algebra = "p_{1,2,3} in su(2,2)";
    r.mode = VerifyMode::Full;
    r.solver_degree = 4;
    r.note = "second blow-up along the same null line: Borel subalgebra";
    r.source = ModelSource{DefiningFunction(im_of(w) - re2(z1 * w * f.zb(1))), "pi_L(z1)"};
    r.witnesses = {nondeg(gauss_point({GaussRational(1), GaussRational(mpq_class(-1, 2)), kI}), 1, 1), degen(origin(2), 0)};
    return r;
}

ModelRecord ep13_model() {
    FB f(2);
    Poly z1 = f.z(0), w = f.w();
    ModelRecord r;
    r.name = "ep13";
    r.n = 2;
    r.sig = SignatureVector({1, -1});
    r.rho = DefiningFunction(im_of(w) - re2(z1 * f.zb(1)) * ww(f.vs));
    r.expected_dim = 10;
    r.expected_algebra = "p_{1,3} in su(2,2)";
    r.mode = VerifyMode::SolverOnly;
    r.solver_degree = 3;
    r.note = "hyperbolic model blown up along the other null line";
    r.source = ModelSource{DefiningFunction(im_of(w) - re2(z1 * w * f.zb(1))), "pi_L(z2)"};
    r.witnesses = {nondeg(gauss_point({GaussRational(1), GaussRational(mpq_class(1, 2)), kI}), 1, 1), degen(origin(2), 0)};
    r.degeneracy = ModelRecord::Degeneracy::ExactlyOnW0;
    return r;
}

ModelRecord heis_extension_model() {
    FB f(2);
    Poly z1 = f.z(0), z2 = f.z(1), w = f.w();
    ModelRecord r;
    r.name = "r3-heis3";
    r.n = 2;
    r.sig = SignatureVector({1, 1});
    auto comps = [&](Poly a, Poly b, Poly c) { return HoloField(f.vs, {std::move(a), std::move(b), std::move(c)}); };
    Poly zero(f.vs);
    r.generators = {
        comps(zero, z2 * GaussRational(-2), w * GaussRational(4)),
        comps(z1 * kI, zero, zero),
        comps(zero, z2 * GaussRational(0, -2), zero),
        comps(z1 * z2 * w * kI, f.one(), z2 * w * w * GaussRational(0, 2)),
        comps(z1 * z2 * w, f.c(kI), z2 * w * w * GaussRational(2)),
        comps(z1 * w, zero, w * w * GaussRational(2)),
    };
    r.generator_names = {"R", "S", "J", "X", "Y", "Z"};
    r.expected_dim = 6;
    r.expected_algebra = "r3-heis3";
    r.mode = VerifyMode::BracketOnly;
    r.note = "hypersurface with a square-root defining equation; only the algebra is checked";
    r.relations = heis_table();
    return r;
}

ModelRecord m5_model() {
    FB f(2);
    ModelRecord r;
    r.name = "m5";
    r.n = 2;
    r.sig = SignatureVector({1, 1});
    Poly a2 = f.z(1) * f.zb(1);
    r.rho = DefiningFunction(im_of(f.w()) - f.z(0) * f.zb(0) - a2 * a2);
    r.expected_dim = 9;
    r.expected_algebra = "u(1,2)";
    r.mode = VerifyMode::SolverOnly;
    r.solver_degree = 3;
    r.note = "quartic model with a reductive maximal symmetry algebra";
    r.witnesses = {nondeg(gauss_point({GaussRational(0), GaussRational(1), kI}), 2, 0), degen(origin(2), 1)};
    return r;
}

std::vector<ModelRecord> builtin_models() {
    std::vector<ModelRecord> out;
    for (auto sig : {SignatureVector({1}), SignatureVector({1, 1}), SignatureVector({1, -1})}) out.push_back(quadric_model(sig));
    for (auto sig : {SignatureVector({1}), SignatureVector({1, 1}), SignatureVector({1, -1})})
        out.push_back(point_blowup_model(sig));
    out.push_back(coordinate_blowup_model(SignatureVector({1, 1}), 1));
    for (int n = 2; n <= 4; ++n)
        for (int s = 2; 2 * s <= n + 2; ++s)
            for (int p = s; 2 * p <= n + 2; ++p) out.push_back(eqgroup_I(n, s, p));
    for (int n = 3; n <= 4; ++n)
        for (int s = 2; eqgroup_II_admissible(n, s); ++s)
            for (int p = s; 2 * p <= n + 2; ++p) out.push_back(eqgroup_II(n, s, p));
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int eps : {1, -1}) out.push_back(vfrepres_model(SignatureVector::standard(n, n), m, eps));
    out.push_back(vfrepres_model(SignatureVector({1, -1}), 1, 1));
    out.push_back(rrm_model(SignatureVector({1}), 2, 3, 1));
    out.push_back(rrm_model(SignatureVector({1, -1}), 2, 3, 1));
    out.push_back(rrm_model(SignatureVector({1, 1}), 3, 5, -1));
    out.push_back(rrm_model(SignatureVector({1, 1}), 2, 1, 1));
    out.push_back(rrm_model(SignatureVector({1, 1}), 3, 1, 1));
    out.push_back(ep2_model());
    out.push_back(ep123_model());
    out.push_back(ep13_model());
    out.push_back(heis_extension_model());
    out.push_back(m5_model());
    return out;
}

std::optional<ModelRecord> find_model(const std::string& name) {
    for (auto& r : builtin_models())
        if (r.name == name) return r;
    return std::nullopt;
}

int dim_vanishing_on(const std::vector<HoloField>& fields, const std::vector<int>& zero_coords) {
    if (fields.empty()) return 0;
    const VarSet& vs = fields[0].vars();
    std::map<int, Poly> kill;
    for (int c : zero_coords) kill[vs.holo(c)] = Poly(vs);
    Substitution s = equivariant(vs, vs, kill);
    std::vector<HoloField> restricted;
    for (const auto& x : fields) {
        std::vector<Poly> comps;
        for (int k = 0; k <= vs.n(); ++k) comps.push_back(substitute(x[k], s));
        restricted.emplace_back(vs, std::move(comps));
    }
    return real_rank(fields) - real_rank(restricted);
}

long solver_size_estimate(int n, int degree) {
    auto binom = [](long a, long b) {
        if (b < 0 || b > a) return 0L;
        long r = 1;
        for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
        return r;
    };
    return 2L * (n + 1) * binom(n + 1 + degree, degree) + binom(2 * n + 2 + degree - 1, degree - 1);
}

std::string verdict_str(const LeviVerdict& v) {
    if (v.nondegenerate) return "nondegenerate (" + std::to_string(v.pbar) + "," + std::to_string(v.qbar) + ")";
    return "degenerate, rank " + std::to_string(v.rank);
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

namespace {

using S = CheckResult::Status;

CheckResult check(std::string name, bool ok, std::string detail) {
    return CheckResult{std::move(name), ok ? S::Pass : S::Fail, std::move(detail)};
}

bool verdict_matches(const LeviVerdict& got, const LeviVerdict& want) {
    if (got.nondegenerate != want.nondegenerate || got.rank != want.rank) return false;
    if (!want.nondegenerate) return true;
    // the pair is only defined up to the orientation of the contact line
    return (got.pbar == want.pbar && got.qbar == want.qbar) || (got.pbar == want.qbar && got.qbar == want.pbar);
}

}  // namespace

VerificationReport verify_model(const ModelRecord& rec, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.model = rec.name;
    rep.mode = mode_name(rec.mode);

    // record self-consistency
    {
        std::string bad;
        if (rec.mode != VerifyMode::SolverOnly && int(rec.generators.size()) != rec.expected_dim)
            bad = std::to_string(rec.generators.size()) + " generators, expected " + std::to_string(rec.expected_dim);
        if (rec.rho && rec.rho->n() != rec.n) bad = "defining function has n=" + std::to_string(rec.rho->n());
        if (rec.mode != VerifyMode::BracketOnly && !rec.rho) bad = "no defining function";
        for (const auto& wt : rec.witnesses) {
            if (!rec.rho) break;
            GaussRational v = evaluate(rec.rho->rho(), conj_point(rec.rho->vars(), wt.point));
            if (!v.is_zero()) bad = "witness (" + point_str(wt.point) + ") not on M: rho = " + v.str();
        }
        rep.checks.push_back(check("record", bad.empty(), bad.empty() ? "consistent" : bad));
    }
    if (rec.source && rec.rho) {
        try {
            auto got = pullback(rec.source->base, parse_map_spec(rec.source->map, rec.n));
            bool ok = got == *rec.rho;
            rep.checks.push_back(check("source", ok, ok ? "pullback by " + rec.source->map + " reproduces rho"
                                                        : "pullback gives " + got.rho().str()));
        } catch (const std::exception& e) {
            rep.checks.push_back(check("source", false, e.what()));
        }
    }

    std::vector<HoloField> basis;
    std::vector<HoloField> solved;
    bool solver_ran = false;
    if ((rec.mode == VerifyMode::Full || rec.mode == VerifyMode::SolverOnly) && rec.solver_degree >= 0 && rec.rho) {
        long est = solver_size_estimate(rec.n, rec.solver_degree);
        if (!opts.run_solver) {
            rep.checks.push_back(CheckResult{"solver", S::Skipped, "disabled"});
        } else if (est > opts.solver_unknown_cap) {
            rep.checks.push_back(CheckResult{"solver", S::Skipped,
                                             "size policy: about " + std::to_string(est) + " unknowns at degree " +
                                                 std::to_string(rec.solver_degree)});
        } else {
            SolverStats st;
            solved = solve_polynomial_symmetries(*rec.rho, rec.solver_degree, {}, &st);
            solver_ran = true;
            int d = int(solved.size());
            std::string detail = "degree " + std::to_string(rec.solver_degree) + ": dimension " + std::to_string(d) + " (" +
                                 std::to_string(st.unknowns) + " unknowns, " + std::to_string(st.blocks) + " blocks)";
            int want = rec.symmetry_dim.value_or(rec.expected_dim);
            bool ok = d == want;
            if (!ok) detail += ", expected " + std::to_string(want);
            if (rec.symmetry_dim) detail += ", generators span a subalgebra of dimension " + std::to_string(rec.expected_dim);
            if (ok && !rec.generators.empty()) {
                std::vector<HoloField> all = solved;
                all.insert(all.end(), rec.generators.begin(), rec.generators.end());
                bool inside = real_rank(all) == d;
                ok = inside;
                detail += inside ? ", contains the generators" : ", generators not in the solution space";
            }
            rep.checks.push_back(check("solver", ok, detail));
        }
    }
    if (rec.mode == VerifyMode::SolverOnly) {
        if (!solver_ran) {
            rep.checks.push_back(check("basis", false, "solver-only record but the solver did not run"));
            return rep;
        }
        basis = solved;
    } else {
        basis = rec.generators;
    }

    if (rec.mode == VerifyMode::Full) {
        std::string bad;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!is_tangent(basis[i], *rec.rho).tangent()) {
                bad = "generator " + std::to_string(i) + " not tangent: " + basis[i].str();
                break;
            }
        rep.checks.push_back(check("tangency", bad.empty(), bad.empty() ? "all " + std::to_string(basis.size()) + " tangent" : bad));
    }

    int rank = real_rank(basis);
    rep.dim = rank;
    rep.checks.push_back(check("independence", rank == int(basis.size()) && rank == rec.expected_dim,
                               "rank " + std::to_string(rank) + " of " + std::to_string(basis.size()) + ", expected " +
                                   std::to_string(rec.expected_dim)));
    if (rank != int(basis.size())) return rep;

    StructureConstants sc;
    try {
        sc = structure_constants(basis);
        auto jf = sc.jacobi_failure();
        rep.checks.push_back(check("closure", !jf, jf ? "Jacobi fails" : "closed, Jacobi holds"));
    } catch (const NotClosedError& e) {
        rep.checks.push_back(check("closure", false, "bracket of " + std::to_string(e.i) + " and " + std::to_string(e.j) + " leaves the span"));
        return rep;
    }
    if (rec.relations) {
        bool ok = sc == *rec.relations;
        rep.checks.push_back(check("relations", ok, ok ? "structure constants equal the stated table" : "table differs:\n" + sc.str(rec.generator_names)));
    }
    Fingerprint fp = fingerprint(sc);
    rep.fingerprint = fp;
    if (rec.expected_algebra != "none" && !rec.expected_algebra.empty()) {
        Fingerprint want = fingerprint(expected_structure(rec.expected_algebra));
        auto cmp = fingerprints_match(fp, want);
        std::string detail = fp.str();
        if (!cmp.match) {
            detail += "; differs from " + rec.expected_algebra + " in";
            for (const auto& d : cmp.differences) detail += " " + d;
        } else {
            detail += " = " + rec.expected_algebra;
        }
        rep.checks.push_back(check("fingerprint", cmp.match, detail));
    }

    const std::vector<GaussRational> o = origin(rec.n);
    if (rec.vanishing_order) {
        int v = max_vanishing_order(basis, o);
        rep.checks.push_back(check("vanishing-order", v == *rec.vanishing_order,
                                   "max order at the origin " + std::to_string(v) + ", expected " + std::to_string(*rec.vanishing_order)));
    }
    if (rec.rho) {
        for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
            const auto& wt = rec.witnesses[i];
            if (!wt.levi) continue;
            auto got = levi_signature_at(*rec.rho, wt.point);
            rep.checks.push_back(check("levi-witness-" + std::to_string(i), verdict_matches(got, *wt.levi),
                                       "at (" + point_str(wt.point) + "): " + verdict_str(got) + ", expected " + verdict_str(*wt.levi)));
        }
        if (rec.degeneracy != ModelRecord::Degeneracy::Unchecked) {
            Poly c = degeneracy_certificate(*rec.rho);
            int a = ww_content(c);
            bool monomial = c.size() == 1;
            bool ok = rec.degeneracy == ModelRecord::Degeneracy::Nowhere ? (monomial && c.is_constant())
                                                                          : (monomial && a >= 1 && c.total_degree() == 2 * a);
            std::string detail = "certificate " + c.str();
            // zero exactly at the witnesses with w = 0
            for (const auto& wt : rec.witnesses) {
                bool zero = evaluate(c, conj_point(rec.rho->vars(), wt.point)).is_zero();
                bool want = rec.degeneracy == ModelRecord::Degeneracy::ExactlyOnW0 && wt.point[rec.n].is_zero();
                if (zero != want) {
                    ok = false;
                    detail += "; wrong value at (" + point_str(wt.point) + ")";
                }
            }
            detail += rec.degeneracy == ModelRecord::Degeneracy::Nowhere ? ", nonzero constant expected"
                                                                          : ", c*(w*conj(w))^a expected";
            rep.checks.push_back(check("degeneracy-locus", ok, detail));
        }
    }
    if (rec.w0_vanishing_dim) {
        int d = dim_vanishing_on(basis, {rec.n});
        rep.checks.push_back(check("vanishing-on-w0", d == *rec.w0_vanishing_dim,
                                   std::to_string(d) + " fields vanish on {w=0}, expected " + std::to_string(*rec.w0_vanishing_dim)));
    }
    return rep;
}

}  // namespace crsym
