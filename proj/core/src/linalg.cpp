#include "cosetbound/linalg.hpp"

#include <stdexcept>

namespace cosetbound {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
    if (columns.empty()) return {0, 0};
    const std::size_t rows = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("ragged column lengths");
    QMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return {0, 0};
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("ragged row lengths");
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<std::size_t> QMatrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = col; j < cols_; ++j) std::swap(at(row, j), at(pivot, j));
        const Rational inv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            const Rational factor = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= factor * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix m = *this;
    return m.reduce().size();
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix m = *this;
    const std::vector<std::size_t> pivots = m.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (const std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = Rational(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m.at(p, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMatrix::AffineSolution> QMatrix::solve(const std::vector<Rational>& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("rhs length does not match rows");
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    const std::vector<std::size_t> pivots = aug.reduce();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // 0 = 1 row

    AffineSolution sol;
    sol.particular.assign(cols_, Rational(0));
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        is_pivot[pivots[p]] = true;
        sol.particular[pivots[p]] = aug.at(p, cols_);
    }
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = Rational(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -aug.at(p, free);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

} // namespace cosetbound
