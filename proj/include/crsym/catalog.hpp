#pragma once

#include "crsym/blowup.hpp"
#include "crsym/holo_field.hpp"
#include "crsym/lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crsym {

enum class VerifyMode { Full, BracketOnly, SolverOnly };
std::string mode_name(VerifyMode m);
VerifyMode parse_mode(const std::string& s);

struct Witness {
    std::vector<GaussRational> point;  // (z1..zn, w)
    // expected Levi verdict, if declared
    std::optional<LeviVerdict> levi;
};

struct ModelSource {
    DefiningFunction base;
    std::string map;  // parse_map_spec syntax
};

struct ModelRecord {
    std::string name;
    int n = 0;
    SignatureVector sig;
    std::optional<DefiningFunction> rho;  // absent for bracket-only records
    std::vector<HoloField> generators;
    std::vector<std::string> generator_names;
    int expected_dim = 0;
    // "su(p,q)", "u(p,q)", "p_{a,b} in su(p,q)", "u(p,q)+sol(2)", "r3-heis3", "stab(z1,w) in su(p,q)", "none"
    std::string expected_algebra;
    VerifyMode mode = VerifyMode::Full;
    std::vector<Witness> witnesses;
    std::string note;
    std::optional<ModelSource> source;
    int solver_degree = -1;  // -1: no solver run
    // solver dimension when the generators span a proper subalgebra
    std::optional<int> symmetry_dim;
    std::optional<int> vanishing_order;   // expected max order at the origin
    std::optional<int> w0_vanishing_dim;  // fields vanishing identically on {w=0}
    enum class Degeneracy { Unchecked, Nowhere, ExactlyOnW0 };
    Degeneracy degeneracy = Degeneracy::Unchecked;
    // stated relations in the generator basis (bracket-only records)
    std::optional<StructureConstants> relations;
};

// expected algebra as structure constants
StructureConstants expected_structure(const std::string& spec);

// builders
ModelRecord quadric_model(const SignatureVector& sig);
ModelRecord point_blowup_model(const SignatureVector& sig);
// Im(w) = |w|^2 ||z'||^2 + ||z''||^2 with z' the first k coordinates
ModelRecord coordinate_blowup_model(const SignatureVector& sig, int k);
// the two blow-up families along isotropic planes, p = number of positive directions of su(p,q)
ModelRecord eqgroup_I(int n, int s, int p);
ModelRecord eqgroup_II(int n, int s, int p);
bool eqgroup_II_admissible(int n, int s);
ModelRecord vfrepres_model(const SignatureVector& sig, int m, int eps);
// Im(w^r) = sigma |w|^{2m} ||z||^2; r = 1 gives Q_m
ModelRecord rrm_model(const SignatureVector& sig, int m, int r, int sigma);
ModelRecord ep2_model();
ModelRecord ep123_model();
ModelRecord ep13_model();
ModelRecord heis_extension_model();
ModelRecord m5_model();

std::vector<ModelRecord> builtin_models();
std::optional<ModelRecord> find_model(const std::string& name);

struct CheckResult {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    Status status = Status::Pass;
    std::string detail;  // certificate or reason
    bool ok() const { return status != Status::Fail; }
};
std::string status_name(CheckResult::Status s);
std::string verdict_str(const LeviVerdict& v);

struct VerificationReport {
    std::string model;
    std::string mode;
    int dim = -1;
    std::optional<Fingerprint> fingerprint;
    std::vector<CheckResult> checks;
    bool pass() const;
};

struct VerifyOptions {
    bool run_solver = true;
    // skip the solver when the estimated unknown count is larger
    long solver_unknown_cap = 60000;
};

long solver_size_estimate(int n, int degree);
VerificationReport verify_model(const ModelRecord& rec, const VerifyOptions& opts = {});

// dimension of the subspace of span(fields) vanishing identically on {coords = 0}
int dim_vanishing_on(const std::vector<HoloField>& fields, const std::vector<int>& zero_coords);

}  // namespace crsym
