#include "crsym/hypersurface.hpp"

#include "crsym/linalg.hpp"

#include <stdexcept>

namespace crsym {

SignatureVector::SignatureVector(std::vector<int> entries) : s_(std::move(entries)) {
    for (int x : s_)
        if (x != 1 && x != -1) throw std::invalid_argument("signature entries must be +1 or -1");
}

SignatureVector SignatureVector::standard(int n, int pbar) {
    if (pbar < 0 || pbar > n) throw std::invalid_argument("pbar out of range");
    std::vector<int> s(n, -1);
    for (int j = 0; j < pbar; ++j) s[j] = 1;
    return SignatureVector(s);
}

int SignatureVector::pbar() const {
    int p = 0;
    for (int x : s_) p += x > 0;
    return p;
}

Poly hermitian_norm(const VarSet& vs, const SignatureVector& sig, const std::vector<int>& indices) {
    Poly r(vs);
    for (int j : indices) {
        Exponent e{};
        e[vs.z(j + 1)] = 1;
        e[vs.zb(j + 1)] = 1;
        r.add_term(e, GaussRational(long(sig[j])));
    }
    return r;
}

Poly hermitian_norm(const VarSet& vs, const SignatureVector& sig) {
    if (sig.n() != vs.n()) throw std::invalid_argument("signature length differs from n");
    std::vector<int> all(vs.n());
    for (int j = 0; j < vs.n(); ++j) all[j] = j;
    return hermitian_norm(vs, sig, all);
}

Poly im_of(const Poly& p) {
    return im_part(p);
}

Poly ww(const VarSet& vs) {
    Exponent e{};
    e[vs.w()] = 1;
    e[vs.wb()] = 1;
    return Poly::monomial(vs, e);
}

DefiningFunction::DefiningFunction(Poly rho) : rho_(std::move(rho)) {
    if (rho_.is_zero()) throw std::invalid_argument("defining function is zero");
    if (!is_real(rho_)) throw std::invalid_argument("defining function is not real: conj(rho) - rho = " + (conjugate(rho_) - rho_).str());
}

DefiningFunction quadric(const SignatureVector& sig) {
    VarSet vs(sig.n());
    return DefiningFunction(im_of(Poly::var(vs, vs.w())) - hermitian_norm(vs, sig));
}

PolyMatrix levi_matrix(const DefiningFunction& rho) {
    const VarSet& vs = rho.vars();
    int m = vs.n() + 1;
    PolyMatrix h(m, std::vector<Poly>(m));
    for (int j = 0; j < m; ++j) {
        Poly dj = partial(rho.rho(), vs.holo(j));
        for (int k = 0; k < m; ++k) h[j][k] = partial(dj, vs.antiholo(k));
    }
    return h;
}

Poly determinant(PolyMatrix m) {
    int n = int(m.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    const VarSet vs = m[0][0].vars();
    bool negate = false;
    Poly prev = Poly::constant(vs, 1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Poly(vs);
            std::swap(m[r], m[k]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = try_exact_multiplier(t, prev);
                if (!q) throw std::logic_error("Bareiss division failed");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Poly(vs);
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return negate ? -d : d;
}

Poly degeneracy_certificate(const DefiningFunction& rho) {
    const VarSet& vs = rho.vars();
    int m = vs.n() + 1;
    PolyMatrix b(m + 1, std::vector<Poly>(m + 1, Poly(vs)));
    PolyMatrix h = levi_matrix(rho);
    for (int k = 0; k < m; ++k) {
        b[0][k + 1] = partial(rho.rho(), vs.antiholo(k));
        b[k + 1][0] = partial(rho.rho(), vs.holo(k));
        for (int j = 0; j < m; ++j) b[j + 1][k + 1] = h[j][k];
    }
    return determinant(std::move(b));
}

LeviVerdict levi_signature_at(const DefiningFunction& rho, const std::vector<GaussRational>& pt) {
    const VarSet& vs = rho.vars();
    int m = vs.n() + 1;
    Assignment a = conj_point(vs, pt);
    if (!evaluate(rho.rho(), a).is_zero()) throw std::invalid_argument("point does not lie on the hypersurface");
    std::vector<GaussRational> g(m);
    int lead = -1;
    for (int k = 0; k < m; ++k) {
        g[k] = evaluate(partial(rho.rho(), vs.holo(k)), a);
        if (lead < 0 && !g[k].is_zero()) lead = k;
    }
    if (lead < 0) throw std::invalid_argument("holomorphic gradient vanishes at the point");
    std::vector<std::vector<GaussRational>> h(m, std::vector<GaussRational>(m));
    PolyMatrix lm = levi_matrix(rho);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) h[j][k] = evaluate(lm[j][k], a);
    // kernel of v -> sum g_k v_k
    std::vector<std::vector<GaussRational>> basis;
    for (int j = 0; j < m; ++j) {
        if (j == lead) continue;
        std::vector<GaussRational> v(m);
        v[j] = 1;
        v[lead] = -(g[j] / g[lead]);
        basis.push_back(v);
    }
    int d = int(basis.size());
    // Levi form = minus the restricted complex Hessian, as a real symmetric 2d x 2d matrix
    QMatrix s(2 * d, 2 * d);
    for (int a1 = 0; a1 < d; ++a1)
        for (int b1 = 0; b1 < d; ++b1) {
            GaussRational x;
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) x += basis[a1][j] * h[j][k] * basis[b1][k].conj();
            x = -x;
            // Hermitian A = B + iC  ->  [[B, -C], [C, B]]
            s(a1, b1) = x.re();
            s(d + a1, d + b1) = x.re();
            s(a1, d + b1) = -x.im();
            s(d + a1, b1) = x.im();
        }
    Inertia in = inertia(s);
    LeviVerdict out;
    out.pbar = in.pos / 2;
    out.qbar = in.neg / 2;
    out.rank = out.pbar + out.qbar;
    out.nondegenerate = out.rank == d;
    return out;
}

}  // namespace crsym
