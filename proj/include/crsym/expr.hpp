#pragma once

#include "crsym/blowup.hpp"
#include "crsym/holo_field.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace crsym {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t offset, const std::string& what);
    std::size_t offset;  // 1-based character position
};

struct ExprNode {
    enum class Kind { Number, I, ZVar, WVar, Deriv, Conj, Re, Im, Abs2, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Number;
    mpq_class value;  // Number
    int index = 0;    // ZVar (1-based), Deriv (1..n, 0 for d/dw), Pow exponent
    std::size_t offset = 0;
    std::vector<std::unique_ptr<ExprNode>> args;
};
using Expr = std::unique_ptr<ExprNode>;

Expr parse_expr(const std::string& src);
// largest z index used (0 if none)
int max_z_index(const ExprNode& e);

// n < 0: infer from the largest z index (at least 1)
Poly lower(const ExprNode& e, const VarSet& vs);
Poly parse_poly(const std::string& src, int n = -1);
DefiningFunction parse_defining(const std::string& src, int n = -1);
HoloField parse_field(const std::string& src, int n = -1);

// ';'-separated chain, applied left to right:
//   id | pi_o | pi_o^m | pi_L(z1,z3) | psi(r,+1) | sub(z1=expr, w=expr)
BlowupMap parse_map_spec(const std::string& src, int n);
// "z1=1, w=i" (missing coordinates are 0)
std::vector<GaussRational> parse_point(const std::string& src, int n);
// "z2=0, w=0" or "z2,w" -> coordinate indices (0..n-1 for z, n for w)
std::vector<int> parse_subspace(const std::string& src, int n);
std::string point_str(const std::vector<GaussRational>& pt);

}  // namespace crsym
