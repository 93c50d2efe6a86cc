#include "crsym/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace crsym {

VarSet::VarSet(int n) : n_(n) {
    if (n < 1 || 2 * n + 2 > kMaxVars) throw std::invalid_argument("CR dimension out of range: " + std::to_string(n));
}

int VarSet::conj(int v) const {
    if (v < n_) return v + n_;
    if (v < 2 * n_) return v - n_;
    if (v == w()) return wb();
    if (v == wb()) return w();
    throw std::out_of_range("variable index");
}

std::string VarSet::name(int v) const {
    if (v < n_) return "z" + std::to_string(v + 1);
    if (v < 2 * n_) return "zb" + std::to_string(v - n_ + 1);
    if (v == w()) return "w";
    if (v == wb()) return "wb";
    throw std::out_of_range("variable index");
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int v = kMaxVars - 1; v >= 0; --v)
        if (a[v] != b[v]) return a[v] < b[v];
    return false;
}

namespace {

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent r{};
    for (int v = 0; v < kMaxVars; ++v) {
        int s = a[v] + b[v];
        if (s > 255) throw std::overflow_error("exponent overflow");
        r[v] = static_cast<std::uint8_t>(s);
    }
    return r;
}

void check_same(const VarSet& a, const VarSet& b) {
    if (a != b) throw std::invalid_argument("variable sets differ");
}

}  // namespace

Poly Poly::constant(const VarSet& vs, const GaussRational& c) {
    Poly p(vs);
    p.add_term(Exponent{}, c);
    return p;
}

Poly Poly::var(const VarSet& vs, int v) {
    if (v < 0 || v >= vs.size()) throw std::out_of_range("variable index");
    Exponent e{};
    e[v] = 1;
    return monomial(vs, e);
}

Poly Poly::monomial(const VarSet& vs, const Exponent& e, const GaussRational& c) {
    Poly p(vs);
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && crsym::total_degree(terms_.begin()->first) == 0);
}

GaussRational Poly::constant_term() const {
    return coeff(Exponent{});
}

GaussRational Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRational() : it->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return crsym::total_degree(terms_.rbegin()->first);
}

int Poly::min_degree() const {
    if (terms_.empty()) return -1;
    return crsym::total_degree(terms_.begin()->first);
}

int Poly::degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[v]));
    return d;
}

bool Poly::uses_var(int v) const {
    for (const auto& [e, c] : terms_)
        if (e[v]) return true;
    return false;
}

bool Poly::uses_barred() const {
    for (int v = 0; v < vars_.size(); ++v)
        if (vars_.is_barred(v) && uses_var(v)) return true;
    return false;
}

std::pair<Exponent, GaussRational> Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void Poly::add_term(const Exponent& e, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same(vars_, o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same(vars_, o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same(a.vars_, b.vars_);
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    return r;
}

Poly Poly::mul_monomial(const Exponent& e, const GaussRational& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    auto hint = r.terms_.end();
    for (const auto& [x, k] : terms_) hint = r.terms_.emplace_hint(hint, add_exp(x, e), k * c);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly result = constant(vars_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

namespace {

std::string surface_name(const VarSet& vs, int v) {
    if (v < vs.n()) return "z" + std::to_string(v + 1);
    if (v < 2 * vs.n()) return "conj(z" + std::to_string(v - vs.n() + 1) + ")";
    return v == vs.w() ? "w" : "conj(w)";
}

std::string monomial_str(const VarSet& vs, const Exponent& e) {
    std::string s;
    for (int v = 0; v < vs.size(); ++v) {
        if (!e[v]) continue;
        if (!s.empty()) s += "*";
        s += surface_name(vs, v);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = monomial_str(vars_, e);
        bool negative = false;
        std::string coef;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            mpq_class a = abs(c.re());
            if (a != 1 || mono.empty()) coef = rational_str(a);
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            mpq_class a = abs(c.im());
            coef = (a == 1 ? std::string() : rational_str(a) + "*") + "i";
        } else {
            coef = "(" + c.str() + ")";
        }
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        out += coef;
        if (!coef.empty() && !mono.empty()) out += "*";
        out += mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

Poly conjugate(const Poly& p) {
    const VarSet& vs = p.vars();
    Poly r(vs);
    for (const auto& [e, c] : p.terms()) {
        Exponent f{};
        for (int v = 0; v < vs.size(); ++v) f[vs.conj(v)] = e[v];
        r.add_term(f, c.conj());
    }
    return r;
}

bool is_real(const Poly& p) {
    return conjugate(p) == p;
}

Poly re_part(const Poly& p) {
    return (p + conjugate(p)) * GaussRational(mpq_class(1, 2));
}

Poly im_part(const Poly& p) {
    // 1/(2i) = -i/2
    return (p - conjugate(p)) * GaussRational(0, mpq_class(-1, 2));
}

Poly partial(const Poly& p, int v) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (!e[v]) continue;
        Exponent f = e;
        --f[v];
        r.add_term(f, c * GaussRational(long(e[v])));
    }
    return r;
}

Poly substitute(const Poly& p, const Substitution& s) {
    const VarSet& src = p.vars();
    if (src != s.source) throw std::invalid_argument("substitution source mismatch");
    for (const auto& [v, img] : s.images) {
        if (v < 0 || v >= src.size()) throw std::invalid_argument("substitution key outside source variables");
        if (img.vars() != s.target) throw std::invalid_argument("substitution image uses a variable set other than the target");
    }
    for (int v = 0; v < src.size(); ++v)
        if (!s.images.count(v) && p.uses_var(v) && src != s.target)
            throw std::invalid_argument("unmapped variable " + src.name(v) + " absent from target");
    std::vector<std::vector<Poly>> powers(src.size());
    auto image = [&](int v) -> const Poly& {
        auto it = s.images.find(v);
        if (it != s.images.end()) return it->second;
        static thread_local Poly tmp;
        tmp = Poly::var(s.target, v);
        return tmp;
    };
    for (int v = 0; v < src.size(); ++v) {
        int d = p.degree_in(v);
        if (d <= 0) continue;
        powers[v].push_back(Poly::constant(s.target, 1));
        Poly base = image(v);
        for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * base);
    }
    Poly r(s.target);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(s.target, c);
        for (int v = 0; v < src.size(); ++v)
            if (e[v]) t = t * powers[v][e[v]];
        r += t;
    }
    return r;
}

Substitution compose(const Substitution& first, const Substitution& then) {
    if (first.target != then.source) throw std::invalid_argument("composition mismatch");
    Substitution out{first.source, then.target, {}};
    for (int v = 0; v < first.source.size(); ++v) {
        auto it = first.images.find(v);
        if (it != first.images.end()) out.images[v] = substitute(it->second, then);
        else if (first.source == first.target) out.images[v] = substitute(Poly::var(first.source, v), then);
    }
    return out;
}

Substitution equivariant(const VarSet& source, const VarSet& target, const std::map<int, Poly>& holo_images) {
    Substitution s{source, target, {}};
    for (const auto& [v, img] : holo_images) {
        if (source.is_barred(v)) throw std::invalid_argument("equivariant substitution keyed by a barred variable");
        s.images[v] = img;
        s.images[source.conj(v)] = conjugate(img);
    }
    return s;
}

GaussRational evaluate(const Poly& p, const Assignment& pt) {
    const VarSet& vs = p.vars();
    if (int(pt.size()) != vs.size()) throw std::invalid_argument("assignment size mismatch");
    for (int v = 0; v < vs.size(); ++v)
        if (!pt[v] && p.uses_var(v)) throw std::invalid_argument("missing assignment for " + vs.name(v));
    GaussRational total;
    for (const auto& [e, c] : p.terms()) {
        GaussRational t = c;
        for (int v = 0; v < vs.size(); ++v)
            for (int k = 0; k < e[v]; ++k) t *= *pt[v];
        total += t;
    }
    return total;
}

Assignment conj_point(const VarSet& vs, const std::vector<GaussRational>& holo) {
    if (int(holo.size()) != vs.n() + 1) throw std::invalid_argument("point needs n+1 coordinates");
    Assignment a(vs.size());
    for (int k = 0; k <= vs.n(); ++k) {
        a[vs.holo(k)] = holo[k];
        a[vs.antiholo(k)] = holo[k].conj();
    }
    return a;
}

std::optional<Poly> try_exact_multiplier(const Poly& p, const Poly& rho) {
    if (rho.is_zero()) throw std::invalid_argument("division by zero polynomial");
    check_same(p.vars(), rho.vars());
    auto [lm, lc] = rho.leading_term();
    Poly r = p;
    Poly q(p.vars());
    while (!r.is_zero()) {
        auto [e, c] = r.leading_term();
        Exponent d{};
        for (int v = 0; v < kMaxVars; ++v) {
            if (e[v] < lm[v]) return std::nullopt;
            d[v] = static_cast<std::uint8_t>(e[v] - lm[v]);
        }
        GaussRational f = c / lc;
        q.add_term(d, f);
        r -= rho.mul_monomial(d, f);
    }
    return q;
}

Poly coefficient_in(const Poly& p, int v, int d) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != d) continue;
        Exponent f = e;
        f[v] = 0;
        r.add_term(f, c);
    }
    return r;
}

PseudoDivision pseudo_divide(const Poly& p, const Poly& rho, int v) {
    check_same(p.vars(), rho.vars());
    int d = rho.degree_in(v);
    if (d <= 0) throw std::invalid_argument("divisor is constant in " + rho.vars().name(v));
    Poly lc = coefficient_in(rho, v, d);
    PseudoDivision out{Poly(p.vars()), p, 0};
    while (!out.r.is_zero()) {
        int e = out.r.degree_in(v);
        if (e < d) break;
        Exponent shift{};
        shift[v] = static_cast<std::uint8_t>(e - d);
        Poly t = coefficient_in(out.r, v, e).mul_monomial(shift, 1);
        out.r = lc * out.r - t * rho;
        out.q = lc * out.q + t;
        ++out.k;
    }
    return out;
}

Poly shift(const Poly& p, const std::vector<GaussRational>& holo_pt) {
    const VarSet& vs = p.vars();
    if (int(holo_pt.size()) != vs.n() + 1) throw std::invalid_argument("point needs n+1 coordinates");
    bool origin = true;
    for (const auto& c : holo_pt) origin = origin && c.is_zero();
    if (origin) return p;
    std::map<int, Poly> img;
    for (int k = 0; k <= vs.n(); ++k) {
        int v = vs.holo(k);
        img[v] = Poly::var(vs, v) + Poly::constant(vs, holo_pt[k]);
    }
    return substitute(p, equivariant(vs, vs, img));
}

int ww_content(const Poly& p) {
    if (p.is_zero()) return 0;
    const VarSet& vs = p.vars();
    int a = 255;
    for (const auto& [e, c] : p.terms()) a = std::min({a, int(e[vs.w()]), int(e[vs.wb()])});
    return a;
}

}  // namespace crsym
