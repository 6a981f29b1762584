#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace mfc {

/// Sparse integer row: (column, coefficient) pairs, columns strictly increasing, no zeros.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;
using BigSparseRow = std::vector<std::pair<int, mpz_class>>;

/// Incremental row echelon form over the integers (fraction-free: each
/// elimination step is a cross-multiplication followed by removal of the row
/// content). Rows are kept in 64-bit arithmetic until an intermediate value
/// overflows, at which point the whole echelon is promoted to GMP integers.
class RankAccumulator {
public:
    RankAccumulator();
    ~RankAccumulator();
    RankAccumulator(RankAccumulator&&) noexcept;
    RankAccumulator& operator=(RankAccumulator&&) noexcept;

    /// Adds a row; returns true iff it was independent of the rows so far.
    bool add_row(const SparseRow& row);
    bool add_row(const BigSparseRow& row);
    /// True iff `row` lies in the span of the rows added so far. Does not modify the echelon.
    bool in_span(const BigSparseRow& row) const;

    int rank() const noexcept;
    bool promoted() const noexcept;

private:
    struct Small;
    struct Big;
    std::unique_ptr<Small> small_;
    std::unique_ptr<Big> big_;
    void promote();
};

/// Rank of the matrix with the given rows.
int sparse_rank(const std::vector<SparseRow>& rows);

/// Builds a sparse row from an unordered column -> value map, dropping zeros.
SparseRow make_row(const std::map<int, std::int64_t>& entries);

}  // namespace mfc
