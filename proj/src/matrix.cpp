#include "halg/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace halg {

namespace {

constexpr std::uint64_t kColLimit = 0xffffffffULL;

// First position holding a column >= c.
std::size_t lower_bound_col(const SparseRow& r, std::uint32_t c) {
    return std::lower_bound(r.begin(), r.end(), c,
                            [](const auto& e, std::uint32_t col) {
                                return e.first < col;
                            }) -
           r.begin();
}

}  // namespace

MatrixOverField::MatrixOverField(std::uint64_t c, std::vector<SparseRow> data,
                                 PrimeField f)
    : rows(data.size()), cols(c), entries(std::move(data)), field(f) {
    if (c > kColLimit) throw std::invalid_argument("matrix too wide");
    for (const auto& row : entries) {
        std::uint32_t prev = 0;
        bool first = true;
        for (const auto& [col, v] : row) {
            if (col >= cols) throw std::invalid_argument("column out of range");
            if (!first && col <= prev)
                throw std::invalid_argument("row columns not strictly increasing");
            if (v.value == 0) throw std::invalid_argument("stored zero entry");
            if (v.value >= field.modulus())
                throw std::invalid_argument("entry not reduced mod p");
            prev = col;
            first = false;
        }
    }
}

FieldElement MatrixOverField::at(std::uint64_t r, std::uint64_t c) const {
    const SparseRow& row = entries.at(r);
    std::size_t pos = lower_bound_col(row, static_cast<std::uint32_t>(c));
    if (pos < row.size() && row[pos].first == c) return row[pos].second;
    return {0};
}

bool operator==(const MatrixOverField& a, const MatrixOverField& b) {
    return a.rows == b.rows && a.cols == b.cols && a.field == b.field &&
           a.entries == b.entries;
}

SparseRow row_axpy(const PrimeField& F, const SparseRow& r, FieldElement c,
                   const SparseRow& s) {
    if (c.value == 0) return r;
    SparseRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || s[j].first < r[i].first) {
            out.emplace_back(s[j].first, F.mul(c, s[j].second));
            ++j;
        } else {
            FieldElement v = F.add(r[i].second, F.mul(c, s[j].second));
            if (v.value != 0) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

RrefBuilder::RrefBuilder(std::uint64_t cols, PrimeField field)
    : cols_(cols), field_(field) {
    if (cols > kColLimit) throw std::invalid_argument("matrix too wide");
    col_uses_.assign(static_cast<std::size_t>(cols), 0);
}

SparseRow RrefBuilder::reduce(SparseRow row) const {
    std::size_t idx = 0;
    while (idx < row.size()) {
        std::uint32_t col = row[idx].first;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
        if (it != pivots_.end() && *it == col) {
            std::size_t pr = it - pivots_.begin();
            row = row_axpy(field_, row, field_.neg(row[idx].second), rows_[pr]);
        } else {
            ++idx;
        }
    }
    return row;
}

std::vector<std::uint32_t> RrefBuilder::reduce_dense(const SparseRow& row) const {
    std::vector<std::uint32_t> buf(static_cast<std::size_t>(cols_), 0);
    for (const auto& [c, v] : row) buf[c] = v.value;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        std::uint32_t v = buf[pivots_[i]];
        if (v == 0) continue;
        const auto& dr = drows_[i];
        std::uint64_t m = field_.modulus() - v;  // subtract v*row == add (p-v)*row
        for (std::size_t c = pivots_[i]; c < dr.size(); ++c) {
            if (dr[c])
                buf[c] = static_cast<std::uint32_t>(
                    (buf[c] + m * dr[c]) % field_.modulus());
        }
    }
    return buf;
}

void RrefBuilder::densify() {
    dense_ = true;
    drows_.reserve(rows_.size());
    for (const auto& r : rows_) {
        std::vector<std::uint32_t> d(static_cast<std::size_t>(cols_), 0);
        for (const auto& [c, v] : r) d[c] = v.value;
        drows_.push_back(std::move(d));
    }
    rows_.clear();
    rows_.shrink_to_fit();
    col_uses_.clear();
    col_uses_.shrink_to_fit();
}

bool RrefBuilder::add_row(SparseRow row) {
    if (dense_) {
        std::vector<std::uint32_t> buf = reduce_dense(row);
        std::size_t c = 0;
        while (c < buf.size() && buf[c] == 0) ++c;
        if (c == buf.size()) return false;
        FieldElement inv = field_.inv({buf[c]});
        for (std::size_t k = c; k < buf.size(); ++k)
            if (buf[k]) buf[k] = field_.mul({buf[k]}, inv).value;
        std::uint32_t pivot = static_cast<std::uint32_t>(c);
        for (std::size_t i = 0; i < drows_.size(); ++i) {
            std::uint32_t v = drows_[i][pivot];
            if (v == 0) continue;
            std::uint64_t m = field_.modulus() - v;
            for (std::size_t k = pivot; k < buf.size(); ++k)
                if (buf[k])
                    drows_[i][k] = static_cast<std::uint32_t>(
                        (drows_[i][k] + m * buf[k]) % field_.modulus());
        }
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
        std::size_t pos = it - pivots_.begin();
        pivots_.insert(it, pivot);
        drows_.insert(drows_.begin() + pos, std::move(buf));
        return true;
    }

    row = reduce(std::move(row));
    if (row.empty()) return false;

    std::uint32_t pivot = row[0].first;
    FieldElement inv = field_.inv(row[0].second);
    for (auto& [c, v] : row) v = field_.mul(v, inv);

    // Clear the new pivot column from existing rows.
    if (col_uses_[pivot] > 0) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t pos = lower_bound_col(rows_[i], pivot);
            if (pos == rows_[i].size() || rows_[i][pos].first != pivot) continue;
            for (const auto& [c, v] : rows_[i]) --col_uses_[c];
            nnz_ -= rows_[i].size();
            rows_[i] = row_axpy(field_, rows_[i], field_.neg(rows_[i][pos].second),
                                row);
            for (const auto& [c, v] : rows_[i]) ++col_uses_[c];
            nnz_ += rows_[i].size();
        }
    }

    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t pos = it - pivots_.begin();
    pivots_.insert(it, pivot);
    for (const auto& [c, v] : row) ++col_uses_[c];
    nnz_ += row.size();
    rows_.insert(rows_.begin() + pos, std::move(row));

    if (cols_ >= 64 && nnz_ * 4 > rows_.size() * cols_) densify();
    return true;
}

bool RrefBuilder::reduces_to_zero(SparseRow row) const {
    if (dense_) {
        std::vector<std::uint32_t> buf = reduce_dense(row);
        return std::all_of(buf.begin(), buf.end(),
                           [](std::uint32_t v) { return v == 0; });
    }
    return reduce(std::move(row)).empty();
}

MatrixOverField RrefBuilder::to_matrix() const {
    std::vector<SparseRow> out;
    out.reserve(pivots_.size());
    if (dense_) {
        for (const auto& d : drows_) {
            SparseRow r;
            for (std::size_t c = 0; c < d.size(); ++c)
                if (d[c]) r.emplace_back(static_cast<std::uint32_t>(c),
                                         FieldElement{d[c]});
            out.push_back(std::move(r));
        }
    } else {
        out = rows_;
    }
    return MatrixOverField(cols_, std::move(out), field_);
}

std::uint64_t rank(const MatrixOverField& m) {
    RrefBuilder b(m.cols, m.field);
    for (const auto& r : m.entries) b.add_row(r);
    return b.rank();
}

MatrixOverField rref(const MatrixOverField& m) {
    RrefBuilder b(m.cols, m.field);
    for (const auto& r : m.entries) b.add_row(r);
    return b.to_matrix();
}

MatrixOverField nullspace(const MatrixOverField& m) {
    MatrixOverField r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    // pivot col of row i is its first entry
    std::vector<std::pair<std::uint32_t, std::size_t>> pivot_of;  // (col, row)
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        std::uint32_t p = r.entries[i][0].first;
        is_pivot[p] = true;
        pivot_of.emplace_back(p, i);
    }
    RrefBuilder b(m.cols, m.field);
    for (std::uint64_t f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        SparseRow v;
        // entries at pivot columns: -R[row][f]; entry 1 at f
        for (const auto& [p, row] : pivot_of) {
            FieldElement e = r.at(row, f);
            if (e.value != 0) v.emplace_back(p, m.field.neg(e));
        }
        v.emplace_back(static_cast<std::uint32_t>(f), m.field.one());
        std::sort(v.begin(), v.end());
        b.add_row(std::move(v));
    }
    return b.to_matrix();
}

}  // namespace halg
