#pragma once

#include "cosetbound/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cosetbound {

// Dense exact matrix over Q with Gauss-Jordan elimination. Pivoting is
// first-nonzero, so every result is deterministic.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols);

    // Matrix whose j-th column is columns[j]; all columns equal length.
    static QMatrix from_columns(const std::vector<std::vector<Rational>>& columns);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::size_t rank() const;

    // Canonical nullspace basis: one vector per free column in ascending
    // column order, with entry 1 at its free column.
    std::vector<std::vector<Rational>> nullspace() const;

    struct AffineSolution {
        std::vector<Rational> particular; // free variables set to 0
        std::vector<std::vector<Rational>> nullspace;
    };

    // Full solution set of A x = rhs, or nullopt when inconsistent.
    std::optional<AffineSolution> solve(const std::vector<Rational>& rhs) const;

private:
    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> reduce();

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace cosetbound
