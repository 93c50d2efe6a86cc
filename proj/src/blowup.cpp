#include "crsym/blowup.hpp"

#include <functional>
#include <stdexcept>

namespace crsym {

namespace {

Poly scaled(const Poly& p, const mpq_class& t) { return p * GaussRational(t); }

std::map<int, Poly> identity_images(const VarSet& vs) {
    std::map<int, Poly> im;
    for (int k = 0; k <= vs.n(); ++k) im[vs.holo(k)] = Poly::var(vs, vs.holo(k));
    return im;
}

Poly strip_ww(const Poly& p, int a) {
    if (a == 0) return p;
    const VarSet& vs = p.vars();
    Poly r(vs);
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f[vs.w()] = static_cast<std::uint8_t>(f[vs.w()] - a);
        f[vs.wb()] = static_cast<std::uint8_t>(f[vs.wb()] - a);
        r.add_term(f, c);
    }
    return r;
}

bool is_holomorphic_monomial(const VarSet& vs, const Exponent& e) {
    bool any = false;
    for (int v = 0; v < vs.size(); ++v) {
        if (!e[v]) continue;
        if (vs.is_barred(v)) return false;
        any = true;
    }
    return any;
}

Exponent conj_exp(const VarSet& vs, const Exponent& e) {
    Exponent f{};
    for (int v = 0; v < vs.size(); ++v) f[vs.conj(v)] = e[v];
    return f;
}

// real polynomial -> real coordinates keyed by (monomial <= conj, re/im)
class RealCoords {
public:
    SparseVec encode(const Poly& p) {
        const VarSet& vs = p.vars();
        SparseVec v;
        GrlexLess less;
        for (const auto& [e, c] : p.terms()) {
            Exponent ce = conj_exp(vs, e);
            if (less(ce, e)) continue;
            if (sgn(c.re()) != 0) v[index(e, 0)] = c.re();
            if (ce != e && sgn(c.im()) != 0) v[index(e, 1)] = c.im();
        }
        return v;
    }

private:
    int index(const Exponent& e, int part) {
        auto [it, ins] = idx_.emplace(std::make_pair(e, part), int(idx_.size()));
        return it->second;
    }
    std::map<std::pair<Exponent, int>, int> idx_;
};

RationalFunction monomial_image(const Exponent& e, const GaussRational& c, const RationalMap& m,
                                const std::vector<RationalFunction>& all) {
    const VarSet& target = m.vars;
    RationalFunction r(Poly::constant(target, c));
    for (int v = 0; v < int(all.size()); ++v)
        for (int k = 0; k < e[v]; ++k) r = r * all[v];
    return r;
}

}  // namespace

BlowupMap BlowupMap::pi_L(int n, const std::vector<int>& z_indices) {
    VarSet vs(n);
    auto im = identity_images(vs);
    std::string nm = "pi_L(";
    for (std::size_t i = 0; i < z_indices.size(); ++i) {
        int j = z_indices[i];
        if (j < 1 || j > n) throw std::invalid_argument("pi_L: coordinate z" + std::to_string(j) + " out of range");
        im[vs.z(j)] = Poly::var(vs, vs.z(j)) * Poly::var(vs, vs.w());
        nm += (i ? ",z" : "z") + std::to_string(j);
    }
    BlowupMap b;
    b.kind_ = Kind::CoordinateSubspace;
    b.name_ = nm + ")";
    b.sub_ = equivariant(vs, vs, im);
    return b;
}

BlowupMap BlowupMap::pi_o(int n, int m) {
    if (m < 1) throw std::invalid_argument("pi_o: weight must be positive");
    VarSet vs(n);
    auto im = identity_images(vs);
    Poly wm = Poly::var(vs, vs.w()).pow(m);
    for (int j = 1; j <= n; ++j) im[vs.z(j)] = Poly::var(vs, vs.z(j)) * wm;
    BlowupMap b;
    b.kind_ = Kind::WeightedPoint;
    b.name_ = m == 1 ? "pi_o" : "pi_o^" + std::to_string(m);
    b.sub_ = equivariant(vs, vs, im);
    return b;
}

BlowupMap BlowupMap::psi(int n, int r, int sigma) {
    if (r < 1) throw std::invalid_argument("psi: exponent must be positive");
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("psi: sigma must be +1 or -1");
    VarSet vs(n);
    auto im = identity_images(vs);
    im[vs.w()] = Poly::var(vs, vs.w()).pow(r) * GaussRational(sigma);
    BlowupMap b;
    b.kind_ = Kind::RamifiedCover;
    b.name_ = "psi(" + std::to_string(r) + "," + std::to_string(sigma) + ")";
    b.sub_ = equivariant(vs, vs, im);
    return b;
}

BlowupMap BlowupMap::identity(int n) {
    VarSet vs(n);
    BlowupMap b;
    b.kind_ = Kind::General;
    b.name_ = "id";
    b.sub_ = equivariant(vs, vs, identity_images(vs));
    return b;
}

BlowupMap BlowupMap::general(const VarSet& vs, const std::map<int, Poly>& holo_images, std::string name) {
    auto im = identity_images(vs);
    for (const auto& [v, p] : holo_images) {
        if (p.vars() != vs) throw std::invalid_argument("substitution image over a different variable set");
        im[v] = p;
    }
    BlowupMap b;
    b.kind_ = Kind::General;
    b.name_ = std::move(name);
    b.sub_ = equivariant(vs, vs, im);
    return b;
}

BlowupMap compose(const std::vector<BlowupMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("compose: empty list");
    BlowupMap out = maps[0];
    for (std::size_t i = 1; i < maps.size(); ++i) {
        if (maps[i].n() != out.n())
            throw std::invalid_argument("compose: dimension mismatch (" + std::to_string(out.n()) + " vs " +
                                        std::to_string(maps[i].n()) + ")");
        out.sub_ = compose(out.sub_, maps[i].sub_);
        out.name_ += " ; " + maps[i].name_;
    }
    if (maps.size() > 1) out.kind_ = BlowupMap::Kind::Composite;
    return out;
}

Poly normalize_defining(const Poly& rho) {
    if (rho.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    const VarSet& vs = rho.vars();
    Poly p = strip_ww(rho, ww_content(rho));
    for (const auto& [e, c] : p.terms()) {
        if (!is_holomorphic_monomial(vs, e)) continue;
        // c m + conj(c m) = 2Re(c) Re(m) - 2Im(c) Im(m)
        if (sgn(c.im()) != 0) return scaled(p, mpq_class(-1) / (2 * c.im()));
        return scaled(p, mpq_class(1) / (2 * c.re()));
    }
    const GaussRational& lc = p.leading_term().second;
    mpq_class t = sgn(lc.re()) != 0 ? lc.re() : lc.im();
    return scaled(p, mpq_class(1) / abs(t));
}

DefiningFunction pullback(const DefiningFunction& rho, const BlowupMap& map) {
    if (rho.n() != map.n())
        throw std::invalid_argument("pullback: map acts on n=" + std::to_string(map.n()) + ", model has n=" +
                                    std::to_string(rho.n()));
    Poly p = substitute(rho.rho(), map.substitution());
    if (p.is_zero()) throw std::invalid_argument("pullback by " + map.name() + " annihilates the defining function");
    return DefiningFunction(normalize_defining(p));
}

bool SingularLocus::spans(const Poly& p) const {
    RealCoords rc;
    EchelonBasis eb;
    for (const auto& g : generators) eb.insert(rc.encode(g));
    return eb.contains(rc.encode(p));
}

std::string SingularLocus::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : " ") + generators[i].str() + " = 0";
    s += " }";
    if (empty) s += " (empty)";
    return s;
}

bool certify_empty(const SingularLocus& locus, int degree) {
    if (locus.empty) return true;
    if (locus.generators.empty()) return false;
    const VarSet& vs = locus.generators[0].vars();
    std::vector<Exponent> monos;
    Exponent e{};
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == vs.size()) {
            monos.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[v] = static_cast<std::uint8_t>(k);
            rec(v + 1, left - k);
        }
        e[v] = 0;
    };
    rec(0, degree);
    std::map<std::pair<Exponent, int>, int> idx;
    auto encode = [&](const Poly& p) {
        SparseVec v;
        for (const auto& [f, c] : p.terms()) {
            if (sgn(c.re()) != 0) v[idx.emplace(std::make_pair(f, 0), int(idx.size())).first->second] = c.re();
            if (sgn(c.im()) != 0) v[idx.emplace(std::make_pair(f, 1), int(idx.size())).first->second] = c.im();
        }
        return v;
    };
    EchelonBasis eb;
    const GaussRational I = GaussRational::i();
    for (const auto& g : locus.generators)
        for (const auto& m : monos) {
            Poly p = g.mul_monomial(m, GaussRational(1));
            eb.insert(encode(p));
            eb.insert(encode(p * I));
        }
    return eb.contains(encode(Poly::constant(vs, GaussRational(1))));
}

SingularLocus singular_locus(const DefiningFunction& rho) {
    const VarSet& vs = rho.vars();
    std::vector<Poly> cand{rho.rho()};
    for (int k = 0; k <= vs.n(); ++k) {
        Poly d = partial(rho.rho(), vs.holo(k));
        cand.push_back(re_part(d));
        cand.push_back(im_part(d));
    }
    SingularLocus out;
    RealCoords rc;
    EchelonBasis eb;
    for (auto& g : cand) {
        if (g.is_zero()) continue;
        if (eb.insert(rc.encode(g))) out.generators.push_back(std::move(g));
    }
    out.empty = eb.contains(rc.encode(Poly::constant(vs, GaussRational(1))));
    return out;
}

RationalFunction::RationalFunction(Poly n) : num(std::move(n)), den(Poly::constant(num.vars(), GaussRational(1))) {}

RationalFunction::RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

bool RationalFunction::equals(const RationalFunction& o) const { return num * o.den == o.num * den; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den == b.den) return RationalFunction(a.num + b.num, a.den);
    return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num * b.num, a.den * b.den);
}

RationalFunction substitute(const Poly& p, const RationalMap& m) {
    const VarSet& src = p.vars();
    if (int(m.images.size()) != src.n() + 1) throw std::invalid_argument("rational map size mismatch");
    std::vector<RationalFunction> all(src.size());
    for (int k = 0; k <= src.n(); ++k) {
        const RationalFunction& f = m.images[k];
        all[src.holo(k)] = f;
        all[src.antiholo(k)] = RationalFunction(conjugate(f.num), conjugate(f.den));
    }
    // group terms by denominator before adding
    std::map<std::string, RationalFunction> groups;
    for (const auto& [e, c] : p.terms()) {
        RationalFunction t = monomial_image(e, c, m, all);
        std::string key = t.den.str();
        auto it = groups.find(key);
        if (it == groups.end()) groups.emplace(key, t);
        else it->second.num += t.num;
    }
    RationalFunction out(Poly(m.vars));
    for (const auto& [k, g] : groups) out = out + g;
    return out;
}

RationalFunction substitute(const RationalFunction& f, const RationalMap& m) {
    RationalFunction a = substitute(f.num, m);
    RationalFunction b = substitute(f.den, m);
    return RationalFunction(a.num * b.den, a.den * b.num);
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
    RationalMap out{g.vars, {}, f.name + " o " + g.name};
    for (const auto& im : f.images) out.images.push_back(substitute(im, g));
    return out;
}

bool is_identity(const RationalMap& m) {
    for (int k = 0; k <= m.vars.n(); ++k)
        if (!m.images[k].equals(Poly::var(m.vars, m.vars.holo(k)))) return false;
    return true;
}

ChartAtlas point_blowup_atlas(const DefiningFunction& quadric_rho) {
    const VarSet& vs = quadric_rho.vars();
    const int n = vs.n();
    std::vector<int> s(n);
    for (int j = 1; j <= n; ++j) {
        Exponent e{};
        e[vs.z(j)] = 1;
        e[vs.zb(j)] = 1;
        GaussRational c = quadric_rho.rho().coeff(e);
        if (c == GaussRational(1)) s[j - 1] = -1;
        else if (c == GaussRational(-1)) s[j - 1] = 1;
        else throw std::invalid_argument("point_blowup_atlas: input is not a hyperquadric");
    }
    ChartAtlas atlas;
    atlas.sig = SignatureVector(s);
    if (!(quadric(atlas.sig) == quadric_rho)) throw std::invalid_argument("point_blowup_atlas: input is not a hyperquadric");

    atlas.charts.push_back(pullback(quadric_rho, BlowupMap::pi_o(n)));
    Poly w = Poly::var(vs, vs.w());
    Poly one = Poly::constant(vs, GaussRational(1));
    for (int k = 1; k <= n; ++k) {
        Poly zk = Poly::var(vs, vs.z(k));
        std::map<int, Poly> im;
        for (int j = 1; j <= n; ++j)
            if (j != k) im[vs.z(j)] = Poly::var(vs, vs.z(j)) * zk;
        im[vs.w()] = zk * w;
        atlas.charts.push_back(pullback(quadric_rho, BlowupMap::general(vs, im, "chart" + std::to_string(k))));

        RationalMap phi{vs, {}, "phi_" + std::to_string(k)};
        RationalMap inv{vs, {}, "phi_" + std::to_string(k) + "^-1"};
        for (int j = 1; j <= n; ++j) {
            Poly zj = Poly::var(vs, vs.z(j));
            if (j == k) {
                phi.images.emplace_back(one, w);
                inv.images.emplace_back(w * zk);
            } else {
                phi.images.emplace_back(zj, w);
                inv.images.emplace_back(zj, zk);
            }
        }
        phi.images.emplace_back(zk * w);
        inv.images.emplace_back(one, zk);
        atlas.gluing.push_back(std::move(phi));
        atlas.gluing_inverse.push_back(std::move(inv));
    }
    for (const auto& c : atlas.charts) atlas.singular.push_back(singular_locus(c));
    return atlas;
}

GluingCheck check_gluing(const ChartAtlas& atlas, int k) {
    if (k < 1 || k >= int(atlas.charts.size())) throw std::out_of_range("chart index");
    const RationalMap& phi = atlas.gluing[k - 1];
    const RationalMap& inv = atlas.gluing_inverse[k - 1];
    GluingCheck g;
    RationalFunction u0 = substitute(atlas.charts[0].rho(), phi);
    if (auto mu = try_exact_multiplier(u0.num, atlas.charts[k].rho() * u0.den)) {
        g.chart_matches = mu->size() == 1;
        g.unit = *mu;
    }
    g.left_identity = is_identity(compose(phi, inv));
    g.right_identity = is_identity(compose(inv, phi));
    return g;
}

}  // namespace crsym
