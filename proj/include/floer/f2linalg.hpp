#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "floer/f2kernels.hpp"

// Sparse linear algebra over GF(2). The public types keep column-major sorted
// index sets (boundary matrices are very sparse); the eliminator packs columns
// into 64-bit words and reduces with the f2k kernels, since structured blocks
// fill in heavily once reduction starts.
//
// Determinism: pivot row is always the lowest set row of a column, columns are
// consumed left to right. Same input, same machine or not, same output.
namespace floer::f2 {

struct F2Vector {
    std::size_t dim = 0;
    std::vector<std::uint32_t> support; // sorted, unique

    static F2Vector zero(std::size_t dim) { return {dim, {}}; }
    // folds duplicates with XOR semantics
    static F2Vector from_indices(std::size_t dim, std::vector<std::uint32_t> idx);

    bool is_zero() const { return support.empty(); }
    bool contains(std::uint32_t k) const;
    void toggle(std::uint32_t k);
    F2Vector& operator^=(const F2Vector& o); // symmetric difference, dims must match
    bool operator==(const F2Vector&) const = default;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }

    // set semantics: toggling an existing entry removes it (characteristic 2)
    void toggle(std::uint32_t row, std::uint32_t col);
    bool at(std::uint32_t row, std::uint32_t col) const;
    std::span<const std::uint32_t> column(std::uint32_t col) const { return cols_[col]; }
    F2Vector column_vector(std::uint32_t col) const;

    F2Matrix transposed() const;
    std::size_t entry_count() const;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<std::uint32_t>> cols_;
};

// Incremental packed-column eliminator. Columns may carry `aug` extra bits
// (appended after the row bits) that ride along through every XOR; kernel
// extraction and membership reductions are built on this.
class GF2Eliminator {
public:
    explicit GF2Eliminator(std::size_t rows, std::size_t aug = 0);

    std::size_t rows() const { return rows_; }
    std::size_t rank() const { return pivots_.size(); }

    // Reduce against current pivots; register as a new pivot if the row part
    // stays nonzero. Returns true iff a pivot was added. Either way the fully
    // reduced column (row + aug words) is available via last().
    bool add(const F2Vector& v, std::span<const std::uint32_t> aug_bits = {});
    bool add_column(std::span<const std::uint32_t> sorted_rows,
                    std::span<const std::uint32_t> aug_bits = {});

    // Reduce a probe without registering. True iff it lies in the span of the
    // columns added so far.
    bool reduces_to_zero(const F2Vector& v) const;

    const std::vector<std::uint64_t>& last() const { return last_; }
    // read bits out of a packed column produced by this eliminator
    std::vector<std::uint32_t> unpack_row_part(const std::vector<std::uint64_t>& col) const;
    std::vector<std::uint32_t> unpack_aug_part(const std::vector<std::uint64_t>& col) const;

private:
    std::size_t rows_ = 0, aug_ = 0, row_words_ = 0, total_words_ = 0;
    std::vector<std::vector<std::uint64_t>> pivots_; // full packed columns
    std::vector<std::int32_t> pivot_of_row_;         // row -> pivot index or -1
    std::vector<std::uint64_t> last_;

    std::vector<std::uint64_t> pack(std::span<const std::uint32_t> rows_bits,
                                    std::span<const std::uint32_t> aug_bits) const;
    // returns lowest set row bit after reduction, or rows_ if the row part is zero
    std::size_t reduce_in_place(std::vector<std::uint64_t>& col) const;
};

std::size_t rank(const F2Matrix& m);

// Canonical (RREF-style) kernel basis: each vector has exactly one free-column
// coordinate set, its own; deterministic.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

// throws std::invalid_argument on dimension mismatch
bool in_span(const F2Vector& v, std::span<const F2Vector> basis);

} // namespace floer::f2
