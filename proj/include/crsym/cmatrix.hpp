#pragma once

#include "crsym/gauss_rational.hpp"
#include "crsym/linalg.hpp"

#include <string>
#include <vector>

namespace crsym {

// square matrix over Q(i)
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(std::size_t(n) * n) {}

    static CMatrix identity(int n);
    static CMatrix unit(int n, int r, int c, const GaussRational& v = GaussRational(1));

    int size() const { return n_; }
    GaussRational& operator()(int r, int c) { return a_[std::size_t(r) * n_ + c]; }
    const GaussRational& operator()(int r, int c) const { return a_[std::size_t(r) * n_ + c]; }

    bool is_zero() const;
    GaussRational trace() const;
    CMatrix adjoint() const;  // conjugate transpose
    CMatrix transpose() const;

    CMatrix operator-() const;
    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const GaussRational& c, CMatrix a);
    friend bool operator==(const CMatrix& a, const CMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    int n_ = 0;
    std::vector<GaussRational> a_;
};

CMatrix commutator(const CMatrix& a, const CMatrix& b);
std::optional<CMatrix> inverse(const CMatrix& m);

// real coordinates: entry (r,c) real part at 2*(r*n+c), imaginary part at 2*(r*n+c)+1
SparseVec real_coords(const CMatrix& m);
CMatrix from_real_coords(int n, const std::vector<mpq_class>& v);

// embedding of a complex n x n matrix as a real 2n x 2n matrix [[B,-C],[C,B]]
QMatrix realify(const CMatrix& m);

}  // namespace crsym
