#pragma once

#include "crsym/hypersurface.hpp"
#include "crsym/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace crsym {

// blow-down maps as holomorphic substitutions (extended to barred variables by conjugation)
class BlowupMap {
public:
    enum class Kind { CoordinateSubspace, WeightedPoint, RamifiedCover, General, Composite };

    // (z, w) -> (z with the listed z_j (1-based) multiplied by w, w)
    static BlowupMap pi_L(int n, const std::vector<int>& z_indices);
    // (z, w) -> (z w^m, w)
    static BlowupMap pi_o(int n, int m = 1);
    // (z, w) -> (z, sigma w^r)
    static BlowupMap psi(int n, int r, int sigma);
    static BlowupMap identity(int n);
    static BlowupMap general(const VarSet& vs, const std::map<int, Poly>& holo_images, std::string name = "sub");

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const Substitution& substitution() const { return sub_; }
    int n() const { return sub_.source.n(); }

private:
    Kind kind_ = Kind::General;
    std::string name_;
    Substitution sub_;

    friend BlowupMap compose(const std::vector<BlowupMap>& maps);
};

// pullback by the composite = pullback by maps[0], then by maps[1], ...
BlowupMap compose(const std::vector<BlowupMap>& maps);

// strip (w wb)^a, then scale by a real factor: the Im-part of the
// smallest holomorphic monomial has coefficient 1 (or its Re-part if the Im-part is absent)
Poly normalize_defining(const Poly& rho);
DefiningFunction pullback(const DefiningFunction& rho, const BlowupMap& map);

// critical set {rho = 0, Re/Im d rho/d zeta_j = 0} with linearly redundant generators removed
struct SingularLocus {
    std::vector<Poly> generators;  // real polynomials
    bool empty = false;            // a nonzero constant lies in the span
    // real-linear span membership
    bool spans(const Poly& p) const;
    std::string str() const;
};
// 1 lies in the complex span of {m * g : deg m <= degree}; then the locus is empty
bool certify_empty(const SingularLocus& locus, int degree);
SingularLocus singular_locus(const DefiningFunction& rho);

struct RationalFunction {
    Poly num;
    Poly den;
    RationalFunction() = default;
    RationalFunction(Poly n);
    RationalFunction(Poly n, Poly d);
    // cross-multiplication
    bool equals(const RationalFunction& o) const;
    bool equals(const Poly& p) const { return equals(RationalFunction(p)); }
};
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

// holomorphic images of (z1..zn, w); barred images by conjugation
struct RationalMap {
    VarSet vars;
    std::vector<RationalFunction> images;  // n+1 entries
    std::string name;
};
RationalFunction substitute(const Poly& p, const RationalMap& m);
RationalFunction substitute(const RationalFunction& f, const RationalMap& m);
// x -> first(then(x))... i.e. the map f o g, variables of g's output feed f
RationalMap compose(const RationalMap& f, const RationalMap& g);
bool is_identity(const RationalMap& m);

struct ChartAtlas {
    SignatureVector sig;
    std::vector<DefiningFunction> charts;  // U_0..U_n
    std::vector<RationalMap> gluing;       // phi_k : U_k -> U_0, index k-1
    std::vector<RationalMap> gluing_inverse;
    std::vector<SingularLocus> singular;  // per chart
};

struct GluingCheck {
    bool chart_matches = false;  // U_0 o phi_k == U_k
    bool left_identity = false;  // phi_k o phi_k^{-1}
    bool right_identity = false;
    Poly unit;  // monomial factor with U_0 o phi_k = unit * U_k
    bool ok() const { return chart_matches && left_identity && right_identity; }
};

// rejects anything that is not a hyperquadric Im(w) = sum sigma_j |z_j|^2
ChartAtlas point_blowup_atlas(const DefiningFunction& quadric_rho);
GluingCheck check_gluing(const ChartAtlas& atlas, int k);

}  // namespace crsym
