#pragma once

#include "crsym/hypersurface.hpp"
#include "crsym/linalg.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace crsym {

// X = sum f_j d/dz_j + g d/dw, standing for the real field Re X
class HoloField {
public:
    HoloField() = default;
    explicit HoloField(const VarSet& vs);
    HoloField(const VarSet& vs, std::vector<Poly> comps);

    const VarSet& vars() const { return vars_; }
    int n() const { return vars_.n(); }
    // k = 0..n-1 for z_{k+1}, k = n for w
    const Poly& operator[](int k) const { return comps_[k]; }
    const std::vector<Poly>& components() const { return comps_; }
    void set(int k, Poly p);

    bool is_zero() const;
    int degree() const;  // max coefficient degree, -1 for zero

    HoloField operator-() const;
    HoloField& operator+=(const HoloField& o);
    HoloField& operator-=(const HoloField& o);
    friend HoloField operator+(HoloField a, const HoloField& b) { return a += b; }
    friend HoloField operator-(HoloField a, const HoloField& b) { return a -= b; }
    friend HoloField operator*(const GaussRational& c, const HoloField& x);
    friend HoloField operator*(const Poly& f, const HoloField& x);

    friend bool operator==(const HoloField& a, const HoloField& b) {
        return a.vars_ == b.vars_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const HoloField& a, const HoloField& b) { return !(a == b); }

    // "Re(f1*d/dz1 + ... + g*d/dw)"
    std::string str() const;

private:
    VarSet vars_;
    std::vector<Poly> comps_;
};

// holomorphic derivative X(h) = sum f_k dh/dzeta_k
Poly apply(const HoloField& x, const Poly& h);

Poly real_action(const HoloField& x, const DefiningFunction& rho);

struct TangencyVerdict {
    enum class Kind { Multiplier, PseudoRemainder, NotTangent };
    Kind kind = Kind::NotTangent;
    std::optional<Poly> mu;  // for Multiplier
    int variable = -1;       // for PseudoRemainder
    bool tangent() const { return kind != Kind::NotTangent; }
    std::string describe(const VarSet& vs) const;
};

TangencyVerdict is_tangent(const HoloField& x, const DefiningFunction& rho);

// (1/2)[X, Y], the holomorphic part of [Re X, Re Y]
HoloField bracket(const HoloField& x, const HoloField& y);

// nullopt for the zero field
std::optional<int> vanishing_order(const HoloField& x, const std::vector<GaussRational>& pt);
int max_vanishing_order(const std::vector<HoloField>& basis, const std::vector<GaussRational>& pt);

// Real coordinates of fields: every (component, monomial, re/im) gets a column.
class FieldCoords {
public:
    explicit FieldCoords(const VarSet& vs) : vars_(vs) {}
    SparseVec encode(const HoloField& x);
    HoloField decode(const SparseVec& v) const;
    int size() const { return int(keys_.size()); }

private:
    using Key = std::tuple<int, Exponent, int>;
    VarSet vars_;
    std::map<Key, int> index_;
    std::vector<Key> keys_;
};

// rank of the real span
int real_rank(const std::vector<HoloField>& fields);
// echelonized basis of the real span
std::vector<HoloField> real_span_basis(const std::vector<HoloField>& fields);
// real combination sum c_k x_k
HoloField combine(const std::vector<HoloField>& fields, const std::vector<mpq_class>& coeffs);

}  // namespace crsym
