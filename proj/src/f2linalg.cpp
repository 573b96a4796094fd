#include "floer/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace floer::f2 {

F2Vector F2Vector::from_indices(std::size_t dim, std::vector<std::uint32_t> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<std::uint32_t> out;
    out.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size();) {
        std::size_t j = k;
        while (j < idx.size() && idx[j] == idx[k]) ++j;
        if ((j - k) & 1) out.push_back(idx[k]);
        k = j;
    }
    return {dim, std::move(out)};
}

bool F2Vector::contains(std::uint32_t k) const {
    return std::binary_search(support.begin(), support.end(), k);
}

void F2Vector::toggle(std::uint32_t k) {
    auto it = std::lower_bound(support.begin(), support.end(), k);
    if (it != support.end() && *it == k)
        support.erase(it);
    else
        support.insert(it, k);
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    if (dim != o.dim) throw std::invalid_argument("F2Vector: dimension mismatch in xor");
    std::vector<std::uint32_t> out;
    out.reserve(support.size() + o.support.size());
    std::set_symmetric_difference(support.begin(), support.end(), o.support.begin(),
                                  o.support.end(), std::back_inserter(out));
    support = std::move(out);
    return *this;
}

void F2Matrix::toggle(std::uint32_t row, std::uint32_t col) {
    auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row);
    if (it != c.end() && *it == row)
        c.erase(it);
    else
        c.insert(it, row);
}

bool F2Matrix::at(std::uint32_t row, std::uint32_t col) const {
    const auto& c = cols_[col];
    return std::binary_search(c.begin(), c.end(), row);
}

F2Vector F2Matrix::column_vector(std::uint32_t col) const {
    return {rows_, cols_[col]};
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols(), rows_);
    for (std::uint32_t c = 0; c < cols(); ++c)
        for (std::uint32_t r : cols_[c]) t.cols_[r].push_back(c);
    // columns were filled in increasing c, already sorted
    return t;
}

std::size_t F2Matrix::entry_count() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

GF2Eliminator::GF2Eliminator(std::size_t rows, std::size_t aug)
    : rows_(rows), aug_(aug), row_words_((rows + 63) / 64),
      total_words_(row_words_ + (aug + 63) / 64),
      pivot_of_row_(rows, -1) {}

std::vector<std::uint64_t> GF2Eliminator::pack(std::span<const std::uint32_t> rows_bits,
                                               std::span<const std::uint32_t> aug_bits) const {
    std::vector<std::uint64_t> col(total_words_, 0);
    for (std::uint32_t r : rows_bits) col[r >> 6] ^= std::uint64_t{1} << (r & 63);
    // aug bit a sits after the row words
    for (std::uint32_t a : aug_bits) {
        std::size_t idx = 64 * row_words_ + a;
        col[idx >> 6] ^= std::uint64_t{1} << (idx & 63);
    }
    return col;
}

std::size_t GF2Eliminator::reduce_in_place(std::vector<std::uint64_t>& col) const {
    std::size_t w = f2k::first_nonzero_word(col.data(), 0, row_words_);
    while (w < row_words_) {
        std::size_t bit = 64 * w + static_cast<std::size_t>(std::countr_zero(col[w]));
        if (bit >= rows_) return rows_; // stray bits can't exist, but be safe
        std::int32_t p = pivot_of_row_[bit];
        if (p < 0) return bit;
        const auto& pcol = pivots_[static_cast<std::size_t>(p)];
        f2k::xor_words(col.data() + w, pcol.data() + w, total_words_ - w);
        w = f2k::first_nonzero_word(col.data(), w, row_words_);
    }
    return rows_;
}

bool GF2Eliminator::add(const F2Vector& v, std::span<const std::uint32_t> aug_bits) {
    if (v.dim != rows_) throw std::invalid_argument("GF2Eliminator: dimension mismatch");
    return add_column(v.support, aug_bits);
}

bool GF2Eliminator::add_column(std::span<const std::uint32_t> sorted_rows,
                               std::span<const std::uint32_t> aug_bits) {
    std::vector<std::uint64_t> col = pack(sorted_rows, aug_bits);
    std::size_t lowest = reduce_in_place(col);
    last_ = col;
    if (lowest >= rows_) return false;
    pivot_of_row_[lowest] = static_cast<std::int32_t>(pivots_.size());
    pivots_.push_back(std::move(col));
    return true;
}

bool GF2Eliminator::reduces_to_zero(const F2Vector& v) const {
    if (v.dim != rows_) throw std::invalid_argument("GF2Eliminator: dimension mismatch");
    std::vector<std::uint64_t> col = pack(v.support, {});
    return reduce_in_place(col) >= rows_;
}

std::vector<std::uint32_t>
GF2Eliminator::unpack_row_part(const std::vector<std::uint64_t>& col) const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < row_words_; ++w) {
        std::uint64_t x = col[w];
        while (x) {
            out.push_back(static_cast<std::uint32_t>(64 * w + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

std::vector<std::uint32_t>
GF2Eliminator::unpack_aug_part(const std::vector<std::uint64_t>& col) const {
    std::vector<std::uint32_t> out;
    const std::size_t base = 64 * row_words_;
    for (std::size_t w = row_words_; w < total_words_; ++w) {
        std::uint64_t x = col[w];
        while (x) {
            std::size_t bit = 64 * w + static_cast<std::size_t>(std::countr_zero(x)) - base;
            if (bit < aug_) out.push_back(static_cast<std::uint32_t>(bit));
            x &= x - 1;
        }
    }
    return out;
}

std::size_t rank(const F2Matrix& m) {
    GF2Eliminator e(m.rows());
    for (std::uint32_t c = 0; c < m.cols(); ++c) e.add_column(m.column(c));
    return e.rank();
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    GF2Eliminator e(m.rows(), m.cols());
    std::vector<F2Vector> out;
    for (std::uint32_t c = 0; c < m.cols(); ++c) {
        std::uint32_t tag[1] = {c};
        if (!e.add_column(m.column(c), tag))
            out.push_back(F2Vector{m.cols(), e.unpack_aug_part(e.last())});
    }
    return out;
}

bool in_span(const F2Vector& v, std::span<const F2Vector> basis) {
    GF2Eliminator e(v.dim);
    for (const auto& b : basis) {
        if (b.dim != v.dim) throw std::invalid_argument("in_span: dimension mismatch");
        e.add(b);
    }
    return e.reduces_to_zero(v);
}

} // namespace floer::f2
