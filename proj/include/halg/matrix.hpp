#ifndef HALG_MATRIX_HPP
#define HALG_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "halg/field.hpp"

namespace halg {

/// One sparse matrix row: (column, value) pairs, columns strictly
/// increasing, no stored zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, FieldElement>>;

/// Sparse row-major matrix over F_p.
struct MatrixOverField {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<SparseRow> entries;  // one per row
    PrimeField field;

    MatrixOverField(std::uint64_t r, std::uint64_t c, PrimeField f)
        : rows(r), cols(c), entries(r), field(f) {}
    MatrixOverField(std::uint64_t c, std::vector<SparseRow> data, PrimeField f);

    /// Dense read access, mostly for tests.
    FieldElement at(std::uint64_t r, std::uint64_t c) const;
};

bool operator==(const MatrixOverField& a, const MatrixOverField& b);

/// r += c * s over F_p (merge of sorted sparse rows).
SparseRow row_axpy(const PrimeField& F, const SparseRow& r, FieldElement c,
                   const SparseRow& s);

/// Incremental reduced-row-echelon accumulator.
///
/// Rows are fed one at a time; the builder maintains a fully reduced
/// basis of their span (pivots 1, pivot columns clear elsewhere, rows
/// ordered by pivot column). Rows are kept sparse until overall fill-in
/// exceeds 25%, then elimination switches to dense storage.
class RrefBuilder {
  public:
    RrefBuilder(std::uint64_t cols, PrimeField field);

    /// Reduce `row` against the current basis; if a nonzero remainder
    /// survives, insert it. Returns true when the rank grew.
    bool add_row(SparseRow row);

    /// Reduce `row` without inserting; true iff it lies in the span.
    bool reduces_to_zero(SparseRow row) const;

    std::uint64_t rank() const { return pivots_.size(); }
    std::uint64_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    /// Pivot columns in increasing order.
    const std::vector<std::uint32_t>& pivot_columns() const { return pivots_; }

    /// Canonical rref matrix of everything added so far.
    MatrixOverField to_matrix() const;

  private:
    SparseRow reduce(SparseRow row) const;
    void densify();
    std::vector<std::uint32_t> reduce_dense(const SparseRow& row) const;

    std::uint64_t cols_;
    PrimeField field_;
    bool dense_ = false;
    std::vector<std::uint32_t> pivots_;        // sorted pivot columns
    std::vector<SparseRow> rows_;              // sparse mode, parallel to pivots_
    std::vector<std::vector<std::uint32_t>> drows_;  // dense mode
    std::vector<std::uint32_t> col_uses_;      // #rows touching each column
    std::uint64_t nnz_ = 0;
};

std::uint64_t rank(const MatrixOverField& m);
MatrixOverField rref(const MatrixOverField& m);

/// Canonical (rref) basis of {v : M v = 0}; row count = cols - rank(M).
MatrixOverField nullspace(const MatrixOverField& m);

}  // namespace halg

#endif
