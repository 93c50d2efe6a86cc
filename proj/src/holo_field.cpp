#include "crsym/holo_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace crsym {

HoloField::HoloField(const VarSet& vs) : vars_(vs), comps_(vs.n() + 1, Poly(vs)) {}

HoloField::HoloField(const VarSet& vs, std::vector<Poly> comps) : vars_(vs), comps_(std::move(comps)) {
    if (int(comps_.size()) != vs.n() + 1) throw std::invalid_argument("field needs n+1 components");
    for (const auto& c : comps_) {
        if (c.vars() != vs) throw std::invalid_argument("field component over a different variable set");
        if (c.uses_barred()) throw std::invalid_argument("field coefficient is not holomorphic: " + c.str());
    }
}

void HoloField::set(int k, Poly p) {
    if (p.vars() != vars_) throw std::invalid_argument("field component over a different variable set");
    if (p.uses_barred()) throw std::invalid_argument("field coefficient is not holomorphic: " + p.str());
    comps_.at(k) = std::move(p);
}

bool HoloField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int HoloField::degree() const {
    int d = -1;
    for (const auto& c : comps_) d = std::max(d, c.total_degree());
    return d;
}

HoloField HoloField::operator-() const {
    HoloField r(*this);
    for (auto& c : r.comps_) c = -c;
    return r;
}

HoloField& HoloField::operator+=(const HoloField& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("fields over different variable sets");
    for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
    return *this;
}

HoloField& HoloField::operator-=(const HoloField& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("fields over different variable sets");
    for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
    return *this;
}

HoloField operator*(const GaussRational& c, const HoloField& x) {
    HoloField r(x);
    for (auto& p : r.comps_) p *= c;
    return r;
}

HoloField operator*(const Poly& f, const HoloField& x) {
    if (f.uses_barred()) throw std::invalid_argument("multiplier is not holomorphic");
    HoloField r(x);
    for (auto& p : r.comps_) p = f * p;
    return r;
}

std::string HoloField::str() const {
    std::string out;
    for (int k = 0; k <= n(); ++k) {
        const Poly& c = comps_[k];
        if (c.is_zero()) continue;
        std::string d = k < n() ? "d/dz" + std::to_string(k + 1) : "d/dw";
        std::string cs = c.str();
        if (!out.empty()) out += " + ";
        if (c.size() > 1 || cs[0] == '-') cs = "(" + cs + ")";
        out += (cs == "1" ? "" : cs + "*") + d;
    }
    if (out.empty()) out = "0*d/dw";
    return "Re(" + out + ")";
}

Poly apply(const HoloField& x, const Poly& h) {
    const VarSet& vs = x.vars();
    Poly r(vs);
    for (int k = 0; k <= vs.n(); ++k)
        if (!x[k].is_zero()) r += x[k] * partial(h, vs.holo(k));
    return r;
}

Poly real_action(const HoloField& x, const DefiningFunction& rho) {
    const VarSet& vs = x.vars();
    if (vs != rho.vars()) throw std::invalid_argument("field and defining function have different variable counts");
    Poly r(vs);
    for (int k = 0; k <= vs.n(); ++k) {
        if (x[k].is_zero()) continue;
        r += x[k] * partial(rho.rho(), vs.holo(k));
        r += conjugate(x[k]) * partial(rho.rho(), vs.antiholo(k));
    }
    return r;
}

std::string TangencyVerdict::describe(const VarSet& vs) const {
    switch (kind) {
        case Kind::Multiplier: return "tangent, multiplier " + mu->str();
        case Kind::PseudoRemainder: return "tangent, zero pseudo-remainder in " + vs.name(variable);
        default: return "not tangent";
    }
}

TangencyVerdict is_tangent(const HoloField& x, const DefiningFunction& rho) {
    Poly a = real_action(x, rho);
    TangencyVerdict v;
    if (auto mu = try_exact_multiplier(a, rho.rho())) {
        v.kind = TangencyVerdict::Kind::Multiplier;
        v.mu = std::move(*mu);
        return v;
    }
    const VarSet& vs = rho.vars();
    for (int var = vs.size() - 1; var >= 0; --var) {
        if (rho.rho().degree_in(var) <= 0) continue;
        if (pseudo_divide(a, rho.rho(), var).r.is_zero()) {
            v.kind = TangencyVerdict::Kind::PseudoRemainder;
            v.variable = var;
            return v;
        }
    }
    return v;
}

HoloField bracket(const HoloField& x, const HoloField& y) {
    if (x.vars() != y.vars()) throw std::invalid_argument("fields over different variable sets");
    const VarSet& vs = x.vars();
    HoloField r(vs);
    GaussRational half(mpq_class(1, 2));
    for (int k = 0; k <= vs.n(); ++k) r.set(k, (apply(x, y[k]) - apply(y, x[k])) * half);
    return r;
}

std::optional<int> vanishing_order(const HoloField& x, const std::vector<GaussRational>& pt) {
    std::optional<int> best;
    for (int k = 0; k <= x.n(); ++k) {
        Poly s = shift(x[k], pt);
        if (s.is_zero()) continue;
        int d = s.min_degree();
        if (!best || d < *best) best = d;
    }
    return best;
}

int max_vanishing_order(const std::vector<HoloField>& basis, const std::vector<GaussRational>& pt) {
    using Key = std::tuple<int, int, Exponent, int>;  // degree, component, monomial, re/im
    std::vector<std::vector<std::pair<Key, mpq_class>>> jets;
    std::map<Key, int> index;
    for (const auto& x : basis) {
        std::vector<std::pair<Key, mpq_class>> jet;
        for (int k = 0; k <= x.n(); ++k) {
            Poly s = shift(x[k], pt);
            for (const auto& [e, c] : s.terms()) {
                int d = total_degree(e);
                if (sgn(c.re()) != 0) jet.push_back({Key{d, k, e, 0}, c.re()});
                if (sgn(c.im()) != 0) jet.push_back({Key{d, k, e, 1}, c.im()});
            }
        }
        for (const auto& [key, v] : jet) index.emplace(key, 0);
        jets.push_back(std::move(jet));
    }
    std::vector<int> degree_of;
    int next = 0;
    for (auto& [key, idx] : index) {
        idx = next++;
        degree_of.push_back(std::get<0>(key));
    }
    EchelonBasis eb;
    for (std::size_t i = 0; i < jets.size(); ++i) {
        SparseVec v;
        for (const auto& [key, c] : jets[i]) v[index[key]] = c;
        if (!eb.insert(v)) throw std::invalid_argument("basis is linearly dependent (element " + std::to_string(i) + ")");
    }
    int best = -1;
    for (int col : eb.leading_columns()) best = std::max(best, degree_of[col]);
    if (best < 0) throw std::invalid_argument("empty basis");
    return best;
}

SparseVec FieldCoords::encode(const HoloField& x) {
    if (x.vars() != vars_) throw std::invalid_argument("field over a different variable set");
    SparseVec v;
    auto idx = [&](const Key& key) {
        auto [it, inserted] = index_.emplace(key, int(keys_.size()));
        if (inserted) keys_.push_back(key);
        return it->second;
    };
    for (int k = 0; k <= x.n(); ++k)
        for (const auto& [e, c] : x[k].terms()) {
            if (sgn(c.re()) != 0) v[idx(Key{k, e, 0})] = c.re();
            if (sgn(c.im()) != 0) v[idx(Key{k, e, 1})] = c.im();
        }
    return v;
}

HoloField FieldCoords::decode(const SparseVec& v) const {
    std::vector<Poly> comps(vars_.n() + 1, Poly(vars_));
    for (const auto& [col, c] : v) {
        const auto& [k, e, part] = keys_.at(col);
        comps[k].add_term(e, part == 0 ? GaussRational(c) : GaussRational(0, c));
    }
    return HoloField(vars_, std::move(comps));
}

int real_rank(const std::vector<HoloField>& fields) {
    if (fields.empty()) return 0;
    FieldCoords fc(fields[0].vars());
    EchelonBasis eb;
    for (const auto& x : fields) eb.insert(fc.encode(x));
    return eb.size();
}

std::vector<HoloField> real_span_basis(const std::vector<HoloField>& fields) {
    if (fields.empty()) return {};
    FieldCoords fc(fields[0].vars());
    std::vector<SparseVec> rows;
    for (const auto& x : fields) rows.push_back(fc.encode(x));
    QMatrix m(int(rows.size()), fc.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) m(int(r), c) = v;
    Echelon e = rref(m);
    std::vector<HoloField> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        SparseVec v;
        for (int c = 0; c < m.cols(); ++c)
            if (sgn(e.reduced(int(r), c)) != 0) v[c] = e.reduced(int(r), c);
        out.push_back(fc.decode(v));
    }
    return out;
}

HoloField combine(const std::vector<HoloField>& fields, const std::vector<mpq_class>& coeffs) {
    if (fields.empty() || fields.size() != coeffs.size()) throw std::invalid_argument("combination size mismatch");
    HoloField r(fields[0].vars());
    for (std::size_t k = 0; k < fields.size(); ++k)
        if (sgn(coeffs[k]) != 0) r += GaussRational(coeffs[k]) * fields[k];
    return r;
}

}  // namespace crsym
