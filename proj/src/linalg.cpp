#include "crsym/linalg.hpp"

#include <stdexcept>

namespace crsym {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
    QMatrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const mpq_class& x = a(r, k);
            if (sgn(x) == 0) continue;
            for (int c = 0; c < b.cols_; ++c)
                if (sgn(b(k, c)) != 0) m(r, c) += x * b(k, c);
        }
    return m;
}

Echelon rref(QMatrix m) {
    Echelon out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (sgn(m(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        mpq_class inv = 1 / m(row, col);
        for (int c = col; c < m.cols(); ++c)
            if (sgn(m(row, c)) != 0) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            mpq_class f = m(r, col);
            for (int c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const QMatrix& m) {
    return int(rref(m).pivots.size());
}

std::vector<std::vector<mpq_class>> nullspace(const QMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> x(m.cols());
        x[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(int(r), f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    QMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = rref(aug);
    if (int(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    QMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Inertia inertia(QMatrix m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inertia of non-square matrix");
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < r; ++c)
            if (m(r, c) != m(c, r)) throw std::invalid_argument("inertia of non-symmetric matrix");
    Inertia out;
    std::vector<bool> done(n, false);
    int remaining = n;
    while (remaining > 0) {
        int piv = -1;
        for (int k = 0; k < n; ++k)
            if (!done[k] && sgn(m(k, k)) != 0) {
                piv = k;
                break;
            }
        if (piv < 0) {
            // all remaining diagonal entries vanish; create one by congruence
            int a = -1, b = -1;
            for (int r = 0; r < n && a < 0; ++r)
                if (!done[r])
                    for (int c = r + 1; c < n; ++c)
                        if (!done[c] && sgn(m(r, c)) != 0) {
                            a = r;
                            b = c;
                            break;
                        }
            if (a < 0) break;  // remaining block is zero
            // row/col a += row/col b gives m(a,a) = 2 m(a,b)
            for (int c = 0; c < n; ++c) m(a, c) += m(b, c);
            for (int r = 0; r < n; ++r) m(r, a) += m(r, b);
            piv = a;
        }
        const mpq_class d = m(piv, piv);
        if (sgn(d) > 0) ++out.pos;
        else ++out.neg;
        for (int r = 0; r < n; ++r) {
            if (done[r] || r == piv || sgn(m(r, piv)) == 0) continue;
            mpq_class f = m(r, piv) / d;
            for (int c = 0; c < n; ++c)
                if (!done[c] && sgn(m(piv, c)) != 0) m(r, c) -= f * m(piv, c);
        }
        for (int r = 0; r < n; ++r)
            if (!done[r] && r != piv) m(piv, r) = m(r, piv) = 0;
        done[piv] = true;
        --remaining;
    }
    out.zero = n - out.pos - out.neg;
    return out;
}

void axpy(SparseVec& y, const mpq_class& a, const SparseVec& x) {
    if (sgn(a) == 0) return;
    auto hint = y.begin();
    for (const auto& [k, v] : x) {
        hint = y.lower_bound(k);
        if (hint != y.end() && hint->first == k) {
            hint->second += a * v;
            if (sgn(hint->second) == 0) hint = y.erase(hint);
        } else {
            hint = y.emplace_hint(hint, k, a * v);
        }
    }
}

void EchelonBasis::reduce(SparseVec& v, std::vector<mpq_class>& combo) const {
    combo.assign(count_, 0);
    auto it = v.begin();
    while (it != v.end()) {
        int col = it->first;
        auto r = rows_.find(col);
        if (r == rows_.end()) {
            ++it;
            continue;
        }
        mpq_class f = it->second;
        axpy(v, -f, r->second.v);
        const auto& rc = r->second.combo;
        for (std::size_t k = 0; k < rc.size(); ++k)
            if (sgn(rc[k]) != 0) combo[k] += f * rc[k];
        it = v.upper_bound(col);
    }
}

bool EchelonBasis::insert(const SparseVec& v0) {
    SparseVec v = v0;
    std::vector<mpq_class> combo;
    reduce(v, combo);
    if (v.empty()) {
        last_dependency_ = combo;
        return false;
    }
    int lead = v.begin()->first;
    mpq_class inv = 1 / v.begin()->second;
    for (auto& [k, x] : v) x *= inv;
    Row row;
    row.v = std::move(v);
    row.combo.assign(count_ + 1, 0);
    for (int k = 0; k < count_; ++k) row.combo[k] = -combo[k] * inv;
    row.combo[count_] = inv;
    rows_.emplace(lead, std::move(row));
    ++count_;
    return true;
}

std::optional<std::vector<mpq_class>> EchelonBasis::express(const SparseVec& v0) const {
    SparseVec v = v0;
    std::vector<mpq_class> combo;
    reduce(v, combo);
    if (!v.empty()) return std::nullopt;
    return combo;
}

bool EchelonBasis::contains(const SparseVec& v0) const {
    SparseVec v = v0;
    std::vector<mpq_class> combo;
    reduce(v, combo);
    return v.empty();
}

std::vector<int> EchelonBasis::leading_columns() const {
    std::vector<int> out;
    for (const auto& [k, r] : rows_) out.push_back(k);
    return out;
}

}  // namespace crsym
