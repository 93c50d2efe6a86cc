#include "crsym/cmatrix.hpp"

#include <stdexcept>

namespace crsym {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

CMatrix CMatrix::unit(int n, int r, int c, const GaussRational& v) {
    CMatrix m(n);
    m(r, c) = v;
    return m;
}

bool CMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

GaussRational CMatrix::trace() const {
    GaussRational t;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

CMatrix CMatrix::operator-() const {
    CMatrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    CMatrix m(a.n_);
    for (int r = 0; r < a.n_; ++r)
        for (int k = 0; k < a.n_; ++k) {
            const GaussRational& x = a(r, k);
            if (x.is_zero()) continue;
            for (int c = 0; c < a.n_; ++c)
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
        }
    return m;
}

CMatrix operator*(const GaussRational& c, CMatrix a) {
    for (auto& x : a.a_) x *= c;
    return a;
}

std::string CMatrix::str() const {
    std::string out = "[";
    for (int r = 0; r < n_; ++r) {
        out += r ? "; " : "";
        for (int c = 0; c < n_; ++c) out += (c ? ", " : "") + (*this)(r, c).str();
    }
    return out + "]";
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

std::optional<CMatrix> inverse(const CMatrix& m) {
    auto r = inverse(realify(m));
    if (!r) return std::nullopt;
    const int n = m.size();
    CMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = GaussRational((*r)(i, j), (*r)(n + i, j));
    return out;
}

SparseVec real_coords(const CMatrix& m) {
    SparseVec v;
    const int n = m.size();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto& x = m(r, c);
            if (sgn(x.re()) != 0) v[2 * (r * n + c)] = x.re();
            if (sgn(x.im()) != 0) v[2 * (r * n + c) + 1] = x.im();
        }
    return v;
}

CMatrix from_real_coords(int n, const std::vector<mpq_class>& v) {
    if (int(v.size()) != 2 * n * n) throw std::invalid_argument("coordinate vector size");
    CMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = GaussRational(v[2 * (r * n + c)], v[2 * (r * n + c) + 1]);
    return m;
}

QMatrix realify(const CMatrix& m) {
    const int n = m.size();
    QMatrix r(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r(i, j) = m(i, j).re();
            r(n + i, n + j) = m(i, j).re();
            r(i, n + j) = -m(i, j).im();
            r(n + i, j) = m(i, j).im();
        }
    return r;
}

}  // namespace crsym
