#pragma once

#include <cstddef>
#include <vector>

#include "fareyplumb/integer.hpp"

namespace fareyplumb {

/// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Gram matrix (v_a . v_b) of a family of vectors.
IntMatrix gram_matrix(const std::vector<IntVector>& vectors);

}  // namespace fareyplumb
