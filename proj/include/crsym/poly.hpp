#pragma once

#include "crsym/gauss_rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crsym {

constexpr int kMaxVars = 16;
using Exponent = std::array<std::uint8_t, kMaxVars>;

// z1..zn, zb1..zbn, w, wb
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(int n);

    int n() const { return n_; }
    int size() const { return 2 * n_ + 2; }

    int z(int j) const { return j - 1; }  // 1-based j
    int zb(int j) const { return n_ + j - 1; }
    int w() const { return 2 * n_; }
    int wb() const { return 2 * n_ + 1; }

    // k-th holomorphic coordinate of (z1..zn, w), 0-based
    int holo(int k) const { return k < n_ ? k : w(); }
    int antiholo(int k) const { return conj(holo(k)); }

    int conj(int v) const;
    bool is_barred(int v) const { return (v >= n_ && v < 2 * n_) || v == wb(); }
    std::string name(int v) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.n_ == b.n_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return a.n_ != b.n_; }

private:
    int n_ = 0;
};

int total_degree(const Exponent& e);

// graded lex, z1 < ... < zn < zb1 < ... < zbn < w < wb
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class Poly {
public:
    using Terms = std::map<Exponent, GaussRational, GrlexLess>;

    Poly() = default;
    explicit Poly(const VarSet& vs) : vars_(vs) {}

    static Poly constant(const VarSet& vs, const GaussRational& c);
    static Poly var(const VarSet& vs, int v);
    static Poly monomial(const VarSet& vs, const Exponent& e, const GaussRational& c = GaussRational(1));

    const VarSet& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRational constant_term() const;
    GaussRational coeff(const Exponent& e) const;
    int total_degree() const;  // -1 for zero
    int min_degree() const;    // -1 for zero
    int degree_in(int v) const;
    bool uses_var(int v) const;
    bool uses_barred() const;

    // largest term in the monomial order
    std::pair<Exponent, GaussRational> leading_term() const;

    void add_term(const Exponent& e, const GaussRational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussRational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
    friend Poly operator*(const GaussRational& c, Poly a) { return a *= c; }

    Poly mul_monomial(const Exponent& e, const GaussRational& c) const;
    Poly pow(int k) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // surface syntax: z1, conj(z1), w, conj(w); parseable by parse_poly
    std::string str() const;

private:
    VarSet vars_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly conjugate(const Poly& p);
bool is_real(const Poly& p);
Poly re_part(const Poly& p);  // (p + conj p)/2
Poly im_part(const Poly& p);  // (p - conj p)/(2i)

Poly partial(const Poly& p, int v);

// simultaneous substitution; unmapped variables stay (requires equal VarSets)
struct Substitution {
    VarSet source;
    VarSet target;
    std::map<int, Poly> images;
};
Poly substitute(const Poly& p, const Substitution& s);
// substitute(substitute(p, first), then) == substitute(p, compose(first, then))
Substitution compose(const Substitution& first, const Substitution& then);
// holomorphic images extended by conjugation
Substitution equivariant(const VarSet& source, const VarSet& target, const std::map<int, Poly>& holo_images);

using Assignment = std::vector<std::optional<GaussRational>>;
GaussRational evaluate(const Poly& p, const Assignment& pt);
// point (z1..zn, w) extended to the barred variables by conjugation
Assignment conj_point(const VarSet& vs, const std::vector<GaussRational>& holo);

std::optional<Poly> try_exact_multiplier(const Poly& p, const Poly& rho);

struct PseudoDivision {
    Poly q;
    Poly r;
    int k = 0;
};
PseudoDivision pseudo_divide(const Poly& p, const Poly& rho, int v);

// coefficient of v^d viewing p as a polynomial in v
Poly coefficient_in(const Poly& p, int v, int d);

// shift holomorphic coordinates by pt (and barred ones by its conjugate)
Poly shift(const Poly& p, const std::vector<GaussRational>& holo_pt);

// largest a with (w*wb)^a dividing p
int ww_content(const Poly& p);

}  // namespace crsym
