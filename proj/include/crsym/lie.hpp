#pragma once

#include "crsym/cmatrix.hpp"
#include "crsym/holo_field.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crsym {

class LieError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// basis fails to close: [e_i, e_j] outside the span
class NotClosedError : public LieError {
public:
    NotClosedError(int i, int j);
    int i, j;
};

// basis is dependent; coeffs give a vanishing combination
class DependentBasisError : public LieError {
public:
    explicit DependentBasisError(std::vector<mpq_class> coeffs);
    std::vector<mpq_class> coeffs;
};

using QVec = std::vector<mpq_class>;

// [e_i, e_j] = sum_k c(i,j,k) e_k over Q
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(int dim);

    int dim() const { return dim_; }
    const SparseVec& bracket(int i, int j) const { return table_[std::size_t(i) * dim_ + j]; }
    mpq_class get(int i, int j, int k) const;
    // sets [e_i,e_j] and [e_j,e_i] together
    void set_bracket(int i, int j, const SparseVec& v);

    QVec bracket(const QVec& x, const QVec& y) const;
    QMatrix ad(const QVec& x) const;
    QMatrix killing_form() const;

    bool is_antisymmetric() const;
    // first failing triple, if any
    std::optional<std::array<int, 3>> jacobi_failure() const;
    bool satisfies_jacobi() const { return !jacobi_failure(); }

    // new basis f_a = sum_b p(b,a) e_b
    StructureConstants change_basis(const QMatrix& p) const;
    // brackets multiplied by t
    StructureConstants rescaled(const mpq_class& t) const;

    std::string str(const std::vector<std::string>& names = {}) const;

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    int dim_ = 0;
    std::vector<SparseVec> table_;
};

using RealBracket = std::function<SparseVec(int, int)>;
// basis vectors in some real coordinate space; bracket(i, j) returns the coordinates of [v_i, v_j]
StructureConstants structure_constants(const std::vector<SparseVec>& basis, const RealBracket& bracket);
StructureConstants structure_constants(const std::vector<HoloField>& basis);
// commutator bracket
StructureConstants structure_constants(const std::vector<CMatrix>& basis);

// subspaces are given by spanning vectors; results are echelon bases
std::vector<QVec> bracket_span(const StructureConstants& sc, const std::vector<QVec>& a, const std::vector<QVec>& b);
std::vector<QVec> center(const StructureConstants& sc);

struct Fingerprint {
    int dim = 0;
    std::vector<int> derived;        // dims of g, [g,g], ... until stable
    std::vector<int> lower_central;  // dims of g, [g,g], [g,[g,g]], ... until stable
    int center = 0;
    int killing_rank = 0;
    int killing_pos = 0;
    int killing_neg = 0;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.dim == b.dim && a.derived == b.derived && a.lower_central == b.lower_central &&
               a.center == b.center && a.killing_rank == b.killing_rank && a.killing_pos == b.killing_pos &&
               a.killing_neg == b.killing_neg;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }

    std::string str() const;
};

Fingerprint fingerprint(const StructureConstants& sc);

struct FingerprintComparison {
    bool match = false;
    std::vector<std::string> differences;  // names of differing entries
    std::string note;                      // matching is necessary, not sufficient
};
FingerprintComparison fingerprints_match(const Fingerprint& a, const Fingerprint& b);

}  // namespace crsym
