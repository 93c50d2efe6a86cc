#pragma once

#include "crsym/holo_field.hpp"

#include <vector>

namespace crsym {

struct SolverOptions {
    int margin = 0;            // extra degree allowed for the multiplier
    bool use_grading = true;   // split the system along weights making rho homogeneous
};

struct SolverStats {
    long unknowns = 0;
    long equations = 0;
    int blocks = 0;
    long largest_block = 0;
};

// all holomorphic polynomial fields of coefficient degree <= D with
// real_action(X, rho) = mu * rho; returned as a real basis
std::vector<HoloField> solve_polynomial_symmetries(const DefiningFunction& rho, int degree,
                                                   const SolverOptions& opts = {}, SolverStats* stats = nullptr);

// rational weight vectors (one entry per holomorphic coordinate) making rho
// quasi-homogeneous, with conjugate variables sharing weights
std::vector<std::vector<mpq_class>> real_gradings(const DefiningFunction& rho);
// rotation weights leaving every term of rho invariant
std::vector<std::vector<mpq_class>> rotation_gradings(const DefiningFunction& rho);

}  // namespace crsym
