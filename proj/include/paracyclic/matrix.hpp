#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "paracyclic/ring.hpp"

namespace paracyclic {

// Dense row-major matrix over a coefficient ring. Entries are always kept
// normalized for the ring, so equality is plain entrywise comparison.
class Matrix {
 public:
  Matrix() : ring_(Ring::rationals()) {}
  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) {
    return Matrix(ring, rows, cols);
  }
  static Matrix identity(Ring ring, std::size_t n);
  static Matrix scalar(Ring ring, std::size_t n, const Scalar& value);
  static Matrix from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_entries(Ring ring, std::size_t rows, std::size_t cols,
                             const std::vector<Scalar>& entries);
  static Matrix column(Ring ring, const Vector& v);
  // Columns are the given vectors (all of length `height`).
  static Matrix from_columns(Ring ring, std::size_t height, const std::vector<Vector>& columns);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Stores ring().normalize(value).
  void set(std::size_t r, std::size_t c, const Scalar& value);
  // Adds value to the entry, normalizing the result.
  void add_to(std::size_t r, std::size_t c, const Scalar& value);
  const std::vector<Scalar>& entries() const { return data_; }

  Vector column_vector(std::size_t c) const;
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix pow(unsigned exponent) const;
  Matrix scaled(const Scalar& factor) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// [a | b] and [a ; b].
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Entry of (-1)^k as a ring scalar.
inline int sign_of(long k) { return (k % 2 == 0) ? 1 : -1; }

// Reference product that never takes the integer kernel path; used by tests
// to pin the fast paths.
Matrix multiply_reference(const Matrix& a, const Matrix& b);

}  // namespace paracyclic
