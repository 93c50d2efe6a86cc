#include "crsym/symmetry_solver.hpp"

#include "crsym/sparse_elim.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace crsym {

namespace {

std::vector<int> folded(const VarSet& vs, const Exponent& e) {
    std::vector<int> f(vs.n() + 1);
    for (int k = 0; k <= vs.n(); ++k) f[k] = e[vs.holo(k)] + e[vs.antiholo(k)];
    return f;
}

void monomials_upto(const std::vector<int>& vars, int degree, std::vector<Exponent>& out) {
    Exponent e{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == vars.size()) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[vars[i]] = static_cast<std::uint8_t>(k);
            rec(i + 1, left - k);
        }
        e[vars[i]] = 0;
    };
    if (degree >= 0) rec(0, degree);
}

Exponent conj_exp(const VarSet& vs, const Exponent& e) {
    Exponent f{};
    for (int v = 0; v < vs.size(); ++v) f[vs.conj(v)] = e[v];
    return f;
}

struct Unknown {
    bool is_mu = false;
    int comp = 0;
    Exponent mono{};
    int part = 0;
};

using Weight = std::vector<mpq_class>;

}  // namespace

std::vector<std::vector<mpq_class>> rotation_gradings(const DefiningFunction& rho) {
    const VarSet& vs = rho.vars();
    const auto& terms = rho.rho().terms();
    QMatrix m(int(terms.size()), vs.n() + 1);
    int r = 0;
    for (const auto& [e, c] : terms) {
        for (int k = 0; k <= vs.n(); ++k) m(r, k) = int(e[vs.holo(k)]) - int(e[vs.antiholo(k)]);
        ++r;
    }
    return nullspace(m);
}

std::vector<std::vector<mpq_class>> real_gradings(const DefiningFunction& rho) {
    const VarSet& vs = rho.vars();
    const auto& terms = rho.rho().terms();
    std::vector<std::vector<int>> f;
    for (const auto& [e, c] : terms) f.push_back(folded(vs, e));
    QMatrix m(int(f.size()) - 1 > 0 ? int(f.size()) - 1 : 0, vs.n() + 1);
    for (std::size_t r = 1; r < f.size(); ++r)
        for (int k = 0; k <= vs.n(); ++k) m(int(r) - 1, k) = f[r][k] - f[0][k];
    if (m.rows() == 0) {
        std::vector<std::vector<mpq_class>> id;
        for (int k = 0; k <= vs.n(); ++k) {
            std::vector<mpq_class> v(vs.n() + 1);
            v[k] = 1;
            id.push_back(v);
        }
        return id;
    }
    return nullspace(m);
}

std::vector<HoloField> solve_polynomial_symmetries(const DefiningFunction& rho, int degree, const SolverOptions& opts,
                                                   SolverStats* stats) {
    if (degree < 0) throw std::invalid_argument("degree bound must be non-negative");
    const VarSet& vs = rho.vars();
    const int n = vs.n();
    const Poly& r = rho.rho();

    std::vector<std::vector<mpq_class>> grading, rotation;
    if (opts.use_grading) {
        grading = real_gradings(rho);
        rotation = rotation_gradings(rho);
    }
    const std::size_t G = grading.size();
    // scaling weights, then rotation charges up to an overall sign
    auto canonical = [&](Weight w) {
        for (std::size_t g = G; g < w.size(); ++g) {
            if (sgn(w[g]) == 0) continue;
            if (sgn(w[g]) < 0)
                for (std::size_t h = G; h < w.size(); ++h) w[h] = -w[h];
            break;
        }
        return w;
    };
    auto weight_of = [&](const Exponent& e) {
        std::vector<int> f = folded(vs, e);
        Weight w(G + rotation.size());
        for (std::size_t g = 0; g < G; ++g)
            for (int k = 0; k <= n; ++k)
                if (f[k]) w[g] += grading[g][k] * f[k];
        for (std::size_t g = 0; g < rotation.size(); ++g)
            for (int k = 0; k <= n; ++k) {
                int c = int(e[vs.holo(k)]) - int(e[vs.antiholo(k)]);
                if (c) w[G + g] += rotation[g][k] * c;
            }
        return w;
    };
    auto unit_weight = [&](int comp) {
        Weight w(G + rotation.size());
        for (std::size_t g = 0; g < G; ++g) w[g] = grading[g][comp];
        for (std::size_t g = 0; g < rotation.size(); ++g) w[G + g] = rotation[g][comp];
        return w;
    };

    std::vector<int> holo_vars;
    for (int k = 0; k <= n; ++k) holo_vars.push_back(vs.holo(k));
    std::vector<int> all_vars;
    for (int v = 0; v < vs.size(); ++v) all_vars.push_back(v);

    std::vector<Exponent> holo_monos;
    monomials_upto(holo_vars, degree, holo_monos);
    std::vector<Exponent> mu_monos;
    monomials_upto(all_vars, degree - 1 + opts.margin, mu_monos);

    std::map<Weight, std::vector<Unknown>> blocks;
    for (int c = 0; c <= n; ++c) {
        Weight uc = unit_weight(c);
        for (const auto& h : holo_monos) {
            Weight w = weight_of(h);
            for (std::size_t g = 0; g < w.size(); ++g) w[g] -= uc[g];
            auto& b = blocks[canonical(w)];
            b.push_back(Unknown{false, c, h, 0});
            b.push_back(Unknown{false, c, h, 1});
        }
    }
    for (const auto& m : mu_monos) {
        Exponent cm = conj_exp(vs, m);
        if (cm < m) continue;
        auto& b = blocks[canonical(weight_of(m))];
        b.push_back(Unknown{true, 0, m, 0});
        if (cm != m) b.push_back(Unknown{true, 0, m, 1});
    }

    std::vector<Poly> d_hol(n + 1), d_bar(n + 1);
    for (int c = 0; c <= n; ++c) {
        d_hol[c] = partial(r, vs.holo(c));
        d_bar[c] = partial(r, vs.antiholo(c));
    }
    const GaussRational I = GaussRational::i();

    SolverStats st;
    std::vector<HoloField> found;
    for (const auto& [w, unknowns] : blocks) {
        ++st.blocks;
        st.unknowns += long(unknowns.size());
        st.largest_block = std::max<long>(st.largest_block, long(unknowns.size()));
        std::map<std::pair<Exponent, int>, std::vector<std::pair<int, mpq_class>>> rows;
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            const Unknown& u = unknowns[col];
            Poly contrib(vs);
            if (!u.is_mu) {
                Poly h = Poly::monomial(vs, u.mono);
                Poly hb = Poly::monomial(vs, conj_exp(vs, u.mono));
                if (u.part == 0) contrib = h * d_hol[u.comp] + hb * d_bar[u.comp];
                else contrib = (h * d_hol[u.comp] - hb * d_bar[u.comp]) * I;
            } else {
                Exponent cm = conj_exp(vs, u.mono);
                Poly m = Poly::monomial(vs, u.mono);
                if (cm == u.mono) contrib = -(m * r);
                else if (u.part == 0) contrib = -((m + Poly::monomial(vs, cm)) * r);
                else contrib = -((m - Poly::monomial(vs, cm)) * r) * I;
            }
            for (const auto& [e, c] : contrib.terms()) {
                Exponent ce = conj_exp(vs, e);
                if (ce < e) continue;
                if (sgn(c.re()) != 0) rows[{e, 0}].emplace_back(int(col), c.re());
                if (ce != e && sgn(c.im()) != 0) rows[{e, 1}].emplace_back(int(col), c.im());
            }
        }
        st.equations += long(rows.size());
        IntEchelon ech(int(unknowns.size()));
        for (const auto& [key, row] : rows) ech.add_row(to_int_row(row));
        for (const auto& x : ech.nullspace()) {
            std::vector<Poly> comps(n + 1, Poly(vs));
            for (std::size_t col = 0; col < unknowns.size(); ++col) {
                const Unknown& u = unknowns[col];
                if (u.is_mu || sgn(x[col]) == 0) continue;
                comps[u.comp].add_term(u.mono, u.part == 0 ? GaussRational(x[col]) : GaussRational(0, x[col]));
            }
            HoloField field(vs, std::move(comps));
            if (!field.is_zero()) found.push_back(std::move(field));
        }
    }
    if (stats) *stats = st;
    return real_span_basis(found);
}

}  // namespace crsym
