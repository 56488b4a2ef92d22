#pragma once

// Exact linear algebra over ℚ: sparse column matrices for degreewise
// differentials and a small dense kernel routine.

#include "afree/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace afree {

/// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVector> columns;  // size == cols

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    Rational at(std::size_t row, std::size_t col) const;
    bool is_zero() const;
};

/// Product a·b. Requires a.cols == b.rows.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Incremental row echelon form over ℤ (fraction-free). Vectors are scaled to
/// primitive integer vectors before elimination and after every step, so
/// coefficient growth stays bounded by the content of the inputs.
class Echelon {
public:
    /// Adds a vector to the span. Returns true if it increased the rank.
    bool insert(const SparseVector& v);
    std::size_t rank() const { return pivots_.size(); }

private:
    using IntVector = std::vector<std::pair<std::size_t, Integer>>;
    std::map<std::size_t, IntVector> pivots_;  // keyed by leading index
};

std::size_t rank(const SparseMatrix& m);

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Basis of {v : m·v = 0} for an rows×cols dense matrix, from reduced row
/// echelon form. Each basis vector has a 1 in its free column.
std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& m, std::size_t cols);

}  // namespace afree
