#pragma once

#include "crsym/poly.hpp"

#include <vector>

namespace crsym {

class SignatureVector {
public:
    SignatureVector() = default;
    explicit SignatureVector(std::vector<int> entries);
    // +1 on the first pbar entries, -1 on the rest
    static SignatureVector standard(int n, int pbar);

    int n() const { return int(s_.size()); }
    int operator[](int j) const { return s_[j]; }  // 0-based
    const std::vector<int>& entries() const { return s_; }
    int pbar() const;
    int qbar() const { return n() - pbar(); }

    friend bool operator==(const SignatureVector& a, const SignatureVector& b) { return a.s_ == b.s_; }

private:
    std::vector<int> s_;
};

// sum over the listed 0-based z indices of sigma_j * z_j * zb_j
Poly hermitian_norm(const VarSet& vs, const SignatureVector& sig, const std::vector<int>& indices);
Poly hermitian_norm(const VarSet& vs, const SignatureVector& sig);
Poly im_of(const Poly& p);  // Im(p) as a real polynomial
Poly ww(const VarSet& vs);  // w * wb

class DefiningFunction {
public:
    DefiningFunction() = default;
    explicit DefiningFunction(Poly rho);

    const Poly& rho() const { return rho_; }
    const VarSet& vars() const { return rho_.vars(); }
    int n() const { return rho_.vars().n(); }

    friend bool operator==(const DefiningFunction& a, const DefiningFunction& b) { return a.rho_ == b.rho_; }

private:
    Poly rho_;
};

DefiningFunction quadric(const SignatureVector& sig);

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix levi_matrix(const DefiningFunction& rho);
Poly determinant(PolyMatrix m);
Poly degeneracy_certificate(const DefiningFunction& rho);

struct LeviVerdict {
    bool nondegenerate = false;
    int pbar = 0;
    int qbar = 0;
    int rank = 0;
};

// pt = (z1..zn, w)
LeviVerdict levi_signature_at(const DefiningFunction& rho, const std::vector<GaussRational>& pt);

}  // namespace crsym
