#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace prelog {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Every map, pairing and lattice basis in the library is carried by this
/// type. Shapes with a zero dimension are valid (an empty 0x5 matrix is the
/// map from the zero group into Z^5).
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& at(std::size_t r, std::size_t c);
  const Integer& at(std::size_t r, std::size_t c) const;

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  void set_row(std::size_t r, const IntVector& v);
  void set_column(std::size_t c, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  bool is_zero() const;
  bool row_is_zero(std::size_t r) const;

  IntVector apply(const IntVector& x) const;  // A * x

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  IntMatrix hstack(const IntMatrix& right) const;
  IntMatrix vstack(const IntMatrix& below) const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace prelog
