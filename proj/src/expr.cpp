#include "crsym/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace crsym {

ParseError::ParseError(std::size_t off, const std::string& what)
    : std::invalid_argument("parse error at offset " + std::to_string(off) + ": " + what), offset(off) {}

namespace {

using K = ExprNode::Kind;

Expr node(K k, std::size_t off) {
    auto e = std::make_unique<ExprNode>();
    e->kind = k;
    e->offset = off;
    return e;
}

Expr binary(K k, Expr a, Expr b, std::size_t off) {
    auto e = node(k, off);
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Expr parse_all() {
        Expr e = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool word(const std::string& w) {
        skip();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        pos_ = end;
        return true;
    }

    Expr expr() {
        Expr a = term();
        for (;;) {
            skip();
            std::size_t off = pos_ + 1;
            if (eat('+')) a = binary(K::Add, std::move(a), term(), off);
            else if (eat('-')) a = binary(K::Sub, std::move(a), term(), off);
            else return a;
        }
    }

    Expr term() {
        Expr a = unary();
        for (;;) {
            skip();
            std::size_t off = pos_ + 1;
            if (eat('*')) a = binary(K::Mul, std::move(a), unary(), off);
            else if (eat('/')) a = binary(K::Div, std::move(a), unary(), off);
            else return a;
        }
    }

    Expr unary() {
        skip();
        std::size_t off = pos_ + 1;
        if (eat('-')) {
            auto e = node(K::Neg, off);
            e->args.push_back(unary());
            return e;
        }
        if (eat('+')) return unary();
        return power();
    }

    Expr power() {
        Expr a = atom();
        skip();
        std::size_t off = pos_ + 1;
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            auto e = node(K::Pow, off);
            e->index = std::stoi(s_.substr(start, pos_ - start));
            e->args.push_back(std::move(a));
            return e;
        }
        return a;
    }

    Expr call(K k, std::size_t off) {
        expect('(');
        auto e = node(k, off);
        e->args.push_back(expr());
        expect(')');
        return e;
    }

    Expr atom() {
        skip();
        std::size_t off = pos_ + 1;
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto e = node(K::Number, off);
            e->value = mpq_class(s_.substr(start, pos_ - start));
            return e;
        }
        if (eat('(')) {
            Expr e = expr();
            expect(')');
            return e;
        }
        if (s_.compare(pos_, 5, "d/dzb") == 0) fail("derivatives in barred variables are not allowed");
        if (s_.compare(pos_, 4, "d/dz") == 0) {
            pos_ += 4;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected coordinate index after d/dz");
            auto e = node(K::Deriv, off);
            e->index = std::stoi(s_.substr(start, pos_ - start));
            if (e->index < 1) fail("coordinate index must be positive");
            return e;
        }
        if (s_.compare(pos_, 4, "d/dw") == 0) {
            pos_ += 4;
            return node(K::Deriv, off);
        }
        if (word("conj")) return call(K::Conj, off);
        if (word("Re")) return call(K::Re, off);
        if (word("Im")) return call(K::Im, off);
        if (word("abs2")) return call(K::Abs2, off);
        if (word("i")) return node(K::I, off);
        if (word("w")) return node(K::WVar, off);
        if (c == 'z') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected coordinate index after z");
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                fail("unknown identifier");
            auto e = node(K::ZVar, off);
            e->index = std::stoi(s_.substr(start, pos_ - start));
            if (e->index < 1) fail("coordinate index must be positive");
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

// a polynomial or a field (comps non-empty)
struct Value {
    Poly scalar;
    std::vector<Poly> comps;
    bool is_field() const { return !comps.empty(); }
};

Value lower_value(const ExprNode& e, const VarSet& vs);

Poly need_scalar(const Value& v, const ExprNode& e) {
    if (v.is_field()) throw ParseError(e.offset, "derivative symbol not allowed here");
    return v.scalar;
}

Value scalar(Poly p) { return Value{std::move(p), {}}; }

Value add_values(Value a, const Value& b, bool minus, const ExprNode& e) {
    const VarSet& vs = a.scalar.vars();
    if (a.is_field() != b.is_field()) {
        const Value& s = a.is_field() ? b : a;
        if (!s.scalar.is_zero()) throw ParseError(e.offset, "cannot add a vector field and a function");
    }
    if (!a.is_field() && !b.is_field()) return scalar(minus ? a.scalar - b.scalar : a.scalar + b.scalar);
    if (!a.is_field()) a.comps.assign(vs.n() + 1, Poly(vs));
    for (std::size_t k = 0; k < b.comps.size(); ++k) a.comps[k] = minus ? a.comps[k] - b.comps[k] : a.comps[k] + b.comps[k];
    return a;
}

Value lower_value(const ExprNode& e, const VarSet& vs) {
    switch (e.kind) {
        case K::Number: return scalar(Poly::constant(vs, GaussRational(e.value)));
        case K::I: return scalar(Poly::constant(vs, GaussRational::i()));
        case K::ZVar:
            if (e.index > vs.n()) throw ParseError(e.offset, "z" + std::to_string(e.index) + " exceeds n=" + std::to_string(vs.n()));
            return scalar(Poly::var(vs, vs.z(e.index)));
        case K::WVar: return scalar(Poly::var(vs, vs.w()));
        case K::Deriv: {
            if (e.index > vs.n()) throw ParseError(e.offset, "d/dz" + std::to_string(e.index) + " exceeds n=" + std::to_string(vs.n()));
            Value v{Poly(vs), std::vector<Poly>(vs.n() + 1, Poly(vs))};
            v.comps[e.index == 0 ? vs.n() : e.index - 1] = Poly::constant(vs, GaussRational(1));
            return v;
        }
        case K::Conj: return scalar(conjugate(need_scalar(lower_value(*e.args[0], vs), e)));
        case K::Re: return scalar(re_part(need_scalar(lower_value(*e.args[0], vs), e)));
        case K::Im: return scalar(im_part(need_scalar(lower_value(*e.args[0], vs), e)));
        case K::Abs2: {
            Poly p = need_scalar(lower_value(*e.args[0], vs), e);
            return scalar(p * conjugate(p));
        }
        case K::Neg: {
            Value v = lower_value(*e.args[0], vs);
            v.scalar = -v.scalar;
            for (auto& c : v.comps) c = -c;
            return v;
        }
        case K::Add:
        case K::Sub:
            return add_values(lower_value(*e.args[0], vs), lower_value(*e.args[1], vs), e.kind == K::Sub, e);
        case K::Mul: {
            Value a = lower_value(*e.args[0], vs);
            Value b = lower_value(*e.args[1], vs);
            if (a.is_field() && b.is_field()) throw ParseError(e.offset, "product of two derivative symbols");
            if (!a.is_field() && !b.is_field()) return scalar(a.scalar * b.scalar);
            Value& f = a.is_field() ? a : b;
            const Poly& s = a.is_field() ? b.scalar : a.scalar;
            for (auto& c : f.comps) c = s * c;
            return f;
        }
        case K::Div: {
            Value a = lower_value(*e.args[0], vs);
            Poly d = need_scalar(lower_value(*e.args[1], vs), *e.args[1]);
            if (!d.is_constant() || d.is_zero()) throw ParseError(e.args[1]->offset, "division only by nonzero constants");
            GaussRational inv = GaussRational(1) / d.constant_term();
            a.scalar *= inv;
            for (auto& c : a.comps) c *= inv;
            return a;
        }
        case K::Pow: {
            Poly base = need_scalar(lower_value(*e.args[0], vs), e);
            return scalar(base.pow(e.index));
        }
    }
    throw ParseError(e.offset, "bad expression node");
}

VarSet resolve_vars(const ExprNode& e, int n) {
    int m = max_z_index(e);
    if (n < 0) n = std::max(1, m);
    if (m > n) throw ParseError(1, "z" + std::to_string(m) + " exceeds n=" + std::to_string(n));
    return VarSet(n);
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

int coord_index(const std::string& name, int n) {
    if (name == "w") return n;
    if (name.size() > 1 && name[0] == 'z' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int j = std::stoi(name.substr(1));
        if (j >= 1 && j <= n) return j - 1;
    }
    throw std::invalid_argument("unknown coordinate '" + name + "' for n=" + std::to_string(n));
}

int parse_int(const std::string& s) {
    std::string t = trim(s);
    if (t == "+") return 1;
    if (t == "-") return -1;
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument("expected an integer, got '" + t + "'");
    return v;
}

std::string inside(const std::string& item, const std::string& head) {
    if (item.size() < head.size() + 2 || item.compare(0, head.size() + 1, head + "(") != 0 || item.back() != ')')
        throw std::invalid_argument("malformed map item '" + item + "'");
    return item.substr(head.size() + 1, item.size() - head.size() - 2);
}

BlowupMap parse_map_item(const std::string& item, int n) {
    VarSet vs(n);
    if (item == "id") return BlowupMap::identity(n);
    if (item == "pi_o") return BlowupMap::pi_o(n);
    if (item.rfind("pi_o^", 0) == 0) return BlowupMap::pi_o(n, parse_int(item.substr(5)));
    if (item.rfind("pi_L", 0) == 0) {
        std::vector<int> idx;
        for (const auto& c : split_top(inside(item, "pi_L"), ',')) {
            int k = coord_index(c, n);
            if (k == n) throw std::invalid_argument("pi_L lists z coordinates only");
            idx.push_back(k + 1);
        }
        return BlowupMap::pi_L(n, idx);
    }
    if (item.rfind("psi", 0) == 0) {
        auto parts = split_top(inside(item, "psi"), ',');
        if (parts.size() != 2) throw std::invalid_argument("psi takes (r, sigma)");
        return BlowupMap::psi(n, parse_int(parts[0]), parse_int(parts[1]));
    }
    if (item.rfind("sub", 0) == 0) {
        std::map<int, Poly> im;
        for (const auto& a : split_top(inside(item, "sub"), ',')) {
            auto eq = a.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("sub entries look like z1=expr");
            int k = coord_index(trim(a.substr(0, eq)), n);
            Poly p = parse_poly(a.substr(eq + 1), n);
            if (p.uses_barred()) throw std::invalid_argument("substitution images must be holomorphic");
            im[vs.holo(k)] = p;
        }
        return BlowupMap::general(vs, im, item);
    }
    throw std::invalid_argument("unknown map '" + item + "'");
}

}  // namespace

Expr parse_expr(const std::string& src) { return Parser(src).parse_all(); }

int max_z_index(const ExprNode& e) {
    int m = (e.kind == K::ZVar || e.kind == K::Deriv) ? e.index : 0;
    for (const auto& a : e.args) m = std::max(m, max_z_index(*a));
    return m;
}

Poly lower(const ExprNode& e, const VarSet& vs) { return need_scalar(lower_value(e, vs), e); }

Poly parse_poly(const std::string& src, int n) {
    Expr e = parse_expr(src);
    return lower(*e, resolve_vars(*e, n));
}

DefiningFunction parse_defining(const std::string& src, int n) { return DefiningFunction(parse_poly(src, n)); }

HoloField parse_field(const std::string& src, int n) {
    Expr e = parse_expr(src);
    if (e->kind != K::Re) throw ParseError(1, "a vector field is written Re( ... d/dz1 + ... )");
    VarSet vs = resolve_vars(*e, n);
    Value v = lower_value(*e->args[0], vs);
    if (!v.is_field()) {
        if (!v.scalar.is_zero()) throw ParseError(1, "no derivative symbols inside Re(...)");
        v.comps.assign(vs.n() + 1, Poly(vs));
    }
    if (!v.scalar.is_zero()) throw ParseError(1, "term without a derivative symbol");
    for (int k = 0; k <= vs.n(); ++k)
        if (v.comps[k].uses_barred())
            throw std::invalid_argument("coefficient of " + std::string(k < vs.n() ? "d/dz" + std::to_string(k + 1) : "d/dw") +
                                        " is not holomorphic: " + v.comps[k].str());
    return HoloField(vs, std::move(v.comps));
}

BlowupMap parse_map_spec(const std::string& src, int n) {
    std::vector<BlowupMap> maps;
    for (const auto& item : split_top(src, ';')) {
        if (item.empty()) throw std::invalid_argument("empty map in '" + src + "'");
        maps.push_back(parse_map_item(item, n));
    }
    return compose(maps);
}

std::vector<GaussRational> parse_point(const std::string& src, int n) {
    std::vector<GaussRational> pt(n + 1);
    if (trim(src).empty()) return pt;
    for (const auto& a : split_top(src, ',')) {
        auto eq = a.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("point entries look like z1=1/2+i");
        int k = coord_index(trim(a.substr(0, eq)), n);
        Poly p = parse_poly(a.substr(eq + 1), n);
        if (!p.is_constant()) throw std::invalid_argument("point coordinate must be a constant: " + a);
        pt[k] = p.constant_term();
    }
    return pt;
}

std::vector<int> parse_subspace(const std::string& src, int n) {
    std::vector<int> out;
    for (const auto& a : split_top(src, ',')) {
        auto eq = a.find('=');
        std::string name = trim(eq == std::string::npos ? a : a.substr(0, eq));
        if (eq != std::string::npos && trim(a.substr(eq + 1)) != "0")
            throw std::invalid_argument("subspaces are coordinate planes: use z2=0");
        int k = coord_index(name, n);
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string point_str(const std::vector<GaussRational>& pt) {
    std::string s;
    int n = int(pt.size()) - 1;
    for (int k = 0; k <= n; ++k) {
        if (k) s += ", ";
        s += (k < n ? "z" + std::to_string(k + 1) : std::string("w")) + "=" + pt[k].str();
    }
    return s;
}

}  // namespace crsym
