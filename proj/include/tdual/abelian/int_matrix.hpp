#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tdual/abelian/integer.hpp"

namespace tdual {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_column(std::span<const Int> v);
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols);
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Int> column(std::size_t c) const;
  std::vector<Int> row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const Int> v);

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(const Int& k) const;
  std::vector<Int> apply(std::span<const Int> v) const;

  bool is_zero() const;
  bool operator==(const IntMatrix& o) const;

  // Elementary operations used by the normal-form reductions.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);  // row dst += k*row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);  // col dst += k*col src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  Int determinant() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace tdual
