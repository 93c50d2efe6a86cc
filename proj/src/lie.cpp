#include "crsym/lie.hpp"

#include <sstream>

namespace crsym {

NotClosedError::NotClosedError(int i_, int j_)
    : LieError("basis not closed under bracket: [e" + std::to_string(i_) + ", e" + std::to_string(j_) +
               "] lies outside the span"),
      i(i_),
      j(j_) {}

namespace {

std::string dependency_message(const std::vector<mpq_class>& c) {
    std::string s = "basis is linearly dependent:";
    for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) s += " " + rational_str(c[k]) + "*e" + std::to_string(k);
    return s + " = 0";
}

SparseVec to_sparse(const QVec& x) {
    SparseVec v;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (sgn(x[k]) != 0) v[int(k)] = x[k];
    return v;
}

}  // namespace

DependentBasisError::DependentBasisError(std::vector<mpq_class> c) : LieError(dependency_message(c)), coeffs(std::move(c)) {}

StructureConstants::StructureConstants(int dim) : dim_(dim), table_(std::size_t(dim) * dim) {}

mpq_class StructureConstants::get(int i, int j, int k) const {
    const auto& v = bracket(i, j);
    auto it = v.find(k);
    return it == v.end() ? mpq_class(0) : it->second;
}

void StructureConstants::set_bracket(int i, int j, const SparseVec& v) {
    if (i == j) {
        if (!v.empty()) throw LieError("[e_i, e_i] must vanish");
        return;
    }
    table_[std::size_t(i) * dim_ + j] = v;
    SparseVec m;
    for (const auto& [k, c] : v) m[k] = -c;
    table_[std::size_t(j) * dim_ + i] = std::move(m);
}

QVec StructureConstants::bracket(const QVec& x, const QVec& y) const {
    QVec r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            mpq_class f = x[i] * y[j];
            for (const auto& [k, c] : bracket(i, j)) r[k] += f * c;
        }
    }
    return r;
}

QMatrix StructureConstants::ad(const QVec& x) const {
    QMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        QVec e(dim_);
        e[j] = 1;
        QVec col = bracket(x, e);
        for (int k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
}

QMatrix StructureConstants::killing_form() const {
    // ad(e_a)(k, l) = c(a, l, k)
    std::vector<std::vector<std::pair<int, std::pair<int, mpq_class>>>> ads(dim_);
    for (int a = 0; a < dim_; ++a)
        for (int l = 0; l < dim_; ++l)
            for (const auto& [k, c] : bracket(a, l)) ads[a].push_back({k, {l, c}});
    QMatrix b(dim_, dim_);
    for (int a = 0; a < dim_; ++a) {
        // trace(ad_a ad_b) = sum_{k,l} ad_a(k,l) ad_b(l,k)
        for (int bb = a; bb < dim_; ++bb) {
            mpq_class t = 0;
            for (const auto& [k, lc] : ads[a]) {
                const auto& [l, c] = lc;
                auto it = bracket(bb, k).find(l);
                if (it != bracket(bb, k).end()) t += c * it->second;
            }
            b(a, bb) = t;
            b(bb, a) = t;
        }
    }
    return b;
}

bool StructureConstants::is_antisymmetric() const {
    for (int i = 0; i < dim_; ++i) {
        if (!bracket(i, i).empty()) return false;
        for (int j = i + 1; j < dim_; ++j) {
            SparseVec s = bracket(i, j);
            axpy(s, 1, bracket(j, i));
            if (!s.empty()) return false;
        }
    }
    return true;
}

std::optional<std::array<int, 3>> StructureConstants::jacobi_failure() const {
    auto br = [&](const SparseVec& x, int j) {
        SparseVec r;
        for (const auto& [i, c] : x) axpy(r, c, bracket(i, j));
        return r;
    };
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
                SparseVec s = br(bracket(i, j), k);
                axpy(s, 1, br(bracket(j, k), i));
                axpy(s, 1, br(bracket(k, i), j));
                if (!s.empty()) return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

StructureConstants StructureConstants::change_basis(const QMatrix& p) const {
    if (p.rows() != dim_ || p.cols() != dim_) throw std::invalid_argument("basis change size mismatch");
    auto pinv = inverse(p);
    if (!pinv) throw std::invalid_argument("basis change is singular");
    std::vector<QVec> cols(dim_, QVec(dim_));
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) cols[a][b] = p(b, a);
    StructureConstants out(dim_);
    for (int a = 0; a < dim_; ++a)
        for (int b = a + 1; b < dim_; ++b) {
            QVec old = bracket(cols[a], cols[b]);
            QVec nw(dim_);
            for (int r = 0; r < dim_; ++r)
                for (int c = 0; c < dim_; ++c)
                    if (sgn(old[c]) != 0 && sgn((*pinv)(r, c)) != 0) nw[r] += (*pinv)(r, c) * old[c];
            out.set_bracket(a, b, to_sparse(nw));
        }
    return out;
}

StructureConstants StructureConstants::rescaled(const mpq_class& t) const {
    StructureConstants out(dim_);
    if (sgn(t) == 0) return out;
    for (std::size_t k = 0; k < table_.size(); ++k)
        for (const auto& [i, c] : table_[k]) out.table_[k][i] = c * t;
    return out;
}

std::string StructureConstants::str(const std::vector<std::string>& names) const {
    auto nm = [&](int k) { return k < int(names.size()) ? names[k] : "e" + std::to_string(k); };
    std::ostringstream os;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) {
            const auto& v = bracket(i, j);
            if (v.empty()) continue;
            os << "[" << nm(i) << "," << nm(j) << "] =";
            bool first = true;
            for (const auto& [k, c] : v) {
                os << (first ? " " : " + ") << rational_str(c) << "*" << nm(k);
                first = false;
            }
            os << "\n";
        }
    return os.str();
}

StructureConstants structure_constants(const std::vector<SparseVec>& basis, const RealBracket& br) {
    const int dim = int(basis.size());
    EchelonBasis eb;
    for (const auto& v : basis)
        if (!eb.insert(v)) {
            auto c = eb.last_dependency();
            c.resize(dim);
            c[eb.size()] = -1;
            throw DependentBasisError(std::move(c));
        }
    StructureConstants sc(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            auto x = eb.express(br(i, j));
            if (!x) throw NotClosedError(i, j);
            SparseVec v;
            for (std::size_t k = 0; k < x->size(); ++k)
                if (sgn((*x)[k]) != 0) v[int(k)] = (*x)[k];
            sc.set_bracket(i, j, v);
        }
    return sc;
}

StructureConstants structure_constants(const std::vector<HoloField>& basis) {
    if (basis.empty()) return StructureConstants(0);
    FieldCoords fc(basis[0].vars());
    std::vector<SparseVec> vs;
    for (const auto& x : basis) vs.push_back(fc.encode(x));
    return structure_constants(vs, [&](int i, int j) { return fc.encode(bracket(basis[i], basis[j])); });
}

StructureConstants structure_constants(const std::vector<CMatrix>& basis) {
    std::vector<SparseVec> vs;
    for (const auto& m : basis) vs.push_back(real_coords(m));
    return structure_constants(vs, [&](int i, int j) { return real_coords(commutator(basis[i], basis[j])); });
}

std::vector<QVec> bracket_span(const StructureConstants& sc, const std::vector<QVec>& a, const std::vector<QVec>& b) {
    EchelonBasis eb;
    std::vector<QVec> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            QVec z = sc.bracket(x, y);
            if (eb.insert(to_sparse(z))) out.push_back(std::move(z));
        }
    return out;
}

std::vector<QVec> center(const StructureConstants& sc) {
    const int d = sc.dim();
    // x in center iff sum_i x_i c(i,j,k) = 0 for all j,k
    QMatrix m(d * d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [k, c] : sc.bracket(i, j)) m(j * d + k, i) = c;
    return nullspace(m);
}

Fingerprint fingerprint(const StructureConstants& sc) {
    const int d = sc.dim();
    Fingerprint f;
    f.dim = d;
    std::vector<QVec> g;
    for (int i = 0; i < d; ++i) {
        QVec e(d);
        e[i] = 1;
        g.push_back(e);
    }
    std::vector<QVec> cur = g;
    f.derived.push_back(d);
    while (!cur.empty()) {
        auto nxt = bracket_span(sc, cur, cur);
        if (nxt.size() == cur.size()) break;
        cur = std::move(nxt);
        f.derived.push_back(int(cur.size()));
    }
    cur = g;
    f.lower_central.push_back(d);
    while (!cur.empty()) {
        auto nxt = bracket_span(sc, g, cur);
        if (nxt.size() == cur.size()) break;
        cur = std::move(nxt);
        f.lower_central.push_back(int(cur.size()));
    }
    f.center = int(center(sc).size());
    Inertia in = inertia(sc.killing_form());
    f.killing_pos = in.pos;
    f.killing_neg = in.neg;
    f.killing_rank = in.pos + in.neg;
    return f;
}

std::string Fingerprint::str() const {
    auto list = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
        return s + ")";
    };
    return "dim " + std::to_string(dim) + ", derived " + list(derived) + ", lower central " + list(lower_central) +
           ", center " + std::to_string(center) + ", killing rank " + std::to_string(killing_rank) + " (" +
           std::to_string(killing_pos) + "+," + std::to_string(killing_neg) + "-)";
}

FingerprintComparison fingerprints_match(const Fingerprint& a, const Fingerprint& b) {
    FingerprintComparison r;
    if (a.dim != b.dim) r.differences.push_back("dim");
    if (a.derived != b.derived) r.differences.push_back("derived series");
    if (a.lower_central != b.lower_central) r.differences.push_back("lower central series");
    if (a.center != b.center) r.differences.push_back("center");
    if (a.killing_rank != b.killing_rank) r.differences.push_back("killing rank");
    if (a.killing_pos != b.killing_pos || a.killing_neg != b.killing_neg) r.differences.push_back("killing signature");
    r.match = r.differences.empty();
    r.note = r.match ? "fingerprints agree (necessary, not sufficient, for isomorphism)" : "not isomorphic";
    return r;
}

}  // namespace crsym
