#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace crsym {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const mpq_class& operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    QMatrix transpose() const;
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> a_;
};

struct Echelon {
    QMatrix reduced;          // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row
};

Echelon rref(QMatrix m);
int rank(const QMatrix& m);
// basis of {x : m x = 0}, one vector per free column
std::vector<std::vector<mpq_class>> nullspace(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
    }
};
// symmetric matrices only; congruence by symmetric elimination
Inertia inertia(QMatrix m);

using SparseVec = std::map<int, mpq_class>;

void axpy(SparseVec& y, const mpq_class& a, const SparseVec& x);  // y += a x

// Incremental echelon basis of a subspace of Q^N, remembering how each
// stored row combines the vectors that were inserted.
class EchelonBasis {
public:
    // returns true if v was independent of what is stored (and stores it)
    bool insert(const SparseVec& v);
    // coefficients of v in terms of the inserted independent vectors
    std::optional<std::vector<mpq_class>> express(const SparseVec& v) const;
    // coefficients of a dependency found by the last failed insert
    const std::vector<mpq_class>& last_dependency() const { return last_dependency_; }

    int size() const { return count_; }
    bool contains(const SparseVec& v) const;
    // leading columns of the stored rows
    std::vector<int> leading_columns() const;

private:
    struct Row {
        SparseVec v;
        std::vector<mpq_class> combo;
    };
    void reduce(SparseVec& v, std::vector<mpq_class>& combo) const;

    std::map<int, Row> rows_;
    int count_ = 0;
    std::vector<mpq_class> last_dependency_;
};

}  // namespace crsym
