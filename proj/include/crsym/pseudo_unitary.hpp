#pragma once

#include "crsym/cmatrix.hpp"
#include "crsym/holo_field.hpp"
#include "crsym/lie.hpp"

#include <string>
#include <vector>

namespace crsym {

// Gram matrix adapted to an isotropic s-flag: G(i, N-1-i) = 1 for i < s,
// then p-s entries +1 and q-s entries -1 on the middle diagonal
struct HermitianForm {
    int p = 0, q = 0, s = 1;
    CMatrix gram;

    static HermitianForm adapted(int p, int q, int s = 1);
    int size() const { return p + q; }
    int n() const { return p + q - 2; }
};

struct MatrixAlgebra {
    HermitianForm form;
    std::vector<CMatrix> basis;
    int dim() const { return int(basis.size()); }
};

// 1 <= p <= q, p+q >= 3; Gram adapted to s (default 1, where the chart is Im(w) = |z|^2)
MatrixAlgebra su_basis(int p, int q, int s = 1);
// no trace condition
MatrixAlgebra u_basis(int p, int q, int s = 1);

bool in_algebra(const CMatrix& a, const HermitianForm& form, bool trace_free = true);

// crossed nodes of the A_{n+1} diagram, 1..n+1
struct ParabolicSpec {
    int n = 0;
    std::vector<int> crosses;

    static ParabolicSpec maximal(int n, int s);
    // the s-values of the isotropic planes stabilized, ascending
    std::vector<int> plane_dims() const;
    std::string name() const;  // "p_{1,3}" etc
};

// throws std::invalid_argument for crosses on black nodes or breaking the arrow symmetry
void validate(const ParabolicSpec& spec, int p, int q);
MatrixAlgebra parabolic_subalgebra(int p, int q, const ParabolicSpec& spec);

// d_n(s) = n^2 - 2sn + 3s^2 + 4n - 4s + 3 for 1 <= s <= floor(n/2)+1
long parabolic_dimension(int n, int s);

struct MaxParabolic {
    long value = 0;
    std::vector<int> argmax;
};
MaxParabolic max_parabolic(int n);

struct GapThresholds {
    long d_max = 0;
    long d_smax = 0;
    long d_0 = 0;
};
GapThresholds gap_thresholds(int n);

// printed values of the d_n(s) table, rows n = 1..7
const std::vector<std::vector<long>>& dimension_table_reference();

// linear map from adapted coordinates x to chart coordinates (z1..zn, w, xi)
CMatrix chart_transform(const HermitianForm& form);
// the hypersurface cut out by the form in the chart xi = 1
DefiningFunction chart_quadric(const HermitianForm& form);
// induced field on the chart; throws if a is not in su(p,q) for the form
HoloField chart_action(const CMatrix& a, const HermitianForm& form);
std::vector<HoloField> chart_action(const MatrixAlgebra& alg);

// L = {coords listed are zero}, coords indexed 0..n-1 for z, n for w
struct StabilizerResult {
    std::vector<HoloField> basis;
    std::vector<std::vector<mpq_class>> coefficients;  // in terms of the input fields
    int dim() const { return int(basis.size()); }
};
StabilizerResult stabilizer_of_subspace(const std::vector<HoloField>& fields, const std::vector<int>& zero_coords);

// u(pbar,qbar) (+) sol(2) as block matrices of size n+2; sol(2) = span{diag(1,0), E12}
std::vector<CMatrix> u_plus_sol2_basis(const SignatureVector& sig);

struct AuditCandidate {
    std::string name;
    mpq_class value;
    bool pass = false;
};
struct AuditReport {
    int n = 0;
    long threshold = 0;
    std::vector<AuditCandidate> candidates;
    bool pass() const;
};
AuditReport audit_subalgebra_bound(int n);

}  // namespace crsym
