#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace crsym {

// sorted by column, no zero entries
using IntRow = std::vector<std::pair<int, mpz_class>>;

// Fraction-free sparse row echelon over the integers. Rows are kept
// primitive; elimination uses cross-multiplication by the pivot.
class IntEchelon {
public:
    explicit IntEchelon(int ncols) : pivot_(ncols) {}

    int cols() const { return int(pivot_.size()); }
    int rank() const { return rank_; }

    // returns true if the row increased the rank
    bool add_row(IntRow r);
    std::vector<std::vector<mpq_class>> nullspace() const;

private:
    std::vector<std::optional<IntRow>> pivot_;
    int rank_ = 0;
};

// scale a rational row to a primitive integer row
IntRow to_int_row(const std::vector<std::pair<int, mpq_class>>& row);

}  // namespace crsym
