#include "paracyclic/matrix.hpp"

#include <limits>
#include <sstream>

#include "paracyclic/kernels.hpp"

namespace paracyclic {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (!(a.ring() == b.ring()))
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": ring mismatch");
}

// Converts to int64 when every entry is an integer of magnitude at most
// kMaxKernelEntry; reports the largest magnitude seen.
bool to_small_ints(const std::vector<Scalar>& src, std::vector<std::int64_t>& dst,
                   std::int64_t& max_abs) {
  dst.resize(src.size());
  max_abs = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Scalar& x = src[i];
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return false;
    long v = x.get_num().get_si();
    std::int64_t mag = v < 0 ? -static_cast<std::int64_t>(v) : v;
    if (mag > kernels::kMaxKernelEntry) return false;
    dst[i] = v;
    if (mag > max_abs) max_abs = mag;
  }
  return true;
}

bool product_fits(std::size_t inner, std::int64_t max_a, std::int64_t max_b) {
  if (max_a == 0 || max_b == 0) return true;
  // inner * max_a * max_b < 2^63, computed without overflow.
  const long double bound = static_cast<long double>(inner) * static_cast<long double>(max_a) *
                            static_cast<long double>(max_b);
  return bound < 9.0e18L;
}

Matrix multiply_generic(const Matrix& a, const Matrix& b) {
  Matrix c(a.ring(), a.rows(), b.cols());
  bool integral = true;
  for (const auto& x : a.entries()) integral = integral && x.get_den() == 1;
  for (const auto& x : b.entries()) integral = integral && x.get_den() == 1;
  std::vector<Scalar> out(a.rows() * b.cols());
  if (integral) {
    std::vector<mpz_class> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (auto& v : acc) v = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const mpz_class& aik = a(i, k).get_num();
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const mpz_class& bkj = b(k, j).get_num();
          mpz_addmul(acc[j].get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
        }
      }
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] = Scalar(acc[j]);
    }
  } else {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Scalar s = 0;
        for (std::size_t k = 0; k < a.cols(); ++k)
          if (a(i, k) != 0) s += a(i, k) * b(k, j);
        out[i * b.cols() + j] = s;
      }
  }
  return Matrix::from_entries(a.ring(), a.rows(), b.cols(), out);
}

}  // namespace

Matrix Matrix::identity(Ring ring, std::size_t n) { return scalar(ring, n, Scalar(1)); }

Matrix Matrix::scalar(Ring ring, std::size_t n, const Scalar& value) {
  Matrix m(ring, n, n);
  Scalar v = ring.normalize(value);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = v;
  return m;
}

Matrix Matrix::from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(ring, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar(v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_entries(Ring ring, std::size_t rows, std::size_t cols,
                            const std::vector<Scalar>& entries) {
  if (entries.size() != rows * cols)
    throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = ring.normalize(entries[i]);
  return m;
}

Matrix Matrix::column(Ring ring, const Vector& v) { return from_entries(ring, v.size(), 1, v); }

Matrix Matrix::from_columns(Ring ring, std::size_t height, const std::vector<Vector>& columns) {
  Matrix m(ring, height, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != height) throw Error(ErrorKind::ShapeMismatch, "column length");
    for (std::size_t r = 0; r < height; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  data_[r * cols_ + c] = ring_.normalize(value);
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  Scalar& x = data_[r * cols_ + c];
  x = ring_.normalize(x + value);
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column_vector(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw Error(ErrorKind::ShapeMismatch, "pow of non-square matrix");
  Matrix result = identity(ring_, rows_);
  Matrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  Matrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring_.normalize(data_[i] * factor);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_)
    throw Error(ErrorKind::ShapeMismatch, "block outside matrix");
  Matrix m(ring_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = (*this)(r0 + r, c0 + c);
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(ring_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m.data_[r * cols.size() + c] = (*this)(r, cols[c]);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = ring_.neg(data_[i]);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = ring_.add(data_[i], other.data_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = ring_.sub(data_[i], other.data_[i]);
  return *this;
}

Matrix multiply_reference(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || !(a.ring() == b.ring()))
    throw Error(ErrorKind::ShapeMismatch, "multiply: " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " by " +
                                              std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
  return multiply_generic(a, b);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || !(a.ring() == b.ring())) return multiply_reference(a, b);
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  if (rows == 0 || inner == 0 || cols == 0) return Matrix(a.ring(), rows, cols);

  std::vector<std::int64_t> ai, bi;
  std::int64_t max_a = 0, max_b = 0;
  const Ring& ring = a.ring();
  const bool small_mod = ring.kind() == Ring::Kind::IntegersMod &&
                         ring.modulus() <= static_cast<std::uint64_t>(kernels::kMaxKernelEntry);
  if (to_small_ints(a.entries(), ai, max_a) && to_small_ints(b.entries(), bi, max_b)) {
    std::vector<std::int64_t> ci(rows * cols);
    const auto isa = kernels::active_isa();
    if (small_mod) {
      kernels::matmul_mod(ai, bi, ci, rows, inner, cols, ring.modulus(), isa);
    } else if (product_fits(inner, max_a, max_b)) {
      kernels::matmul_i64(ai, bi, ci, rows, inner, cols, isa);
    } else {
      return multiply_generic(a, b);
    }
    Matrix c(ring, rows, cols);
    std::vector<Scalar> out(ci.size());
    for (std::size_t i = 0; i < ci.size(); ++i) out[i] = Scalar(static_cast<long>(ci[i]));
    return Matrix::from_entries(ring, rows, cols, out);
  }
  return multiply_generic(a, b);
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector length");
  return (a * Matrix::column(a.ring(), v)).column_vector(0);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring() == b.ring() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack row count");
  Matrix m(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) m.set(r, a.cols() + c, b(r, c));
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "vstack column count");
  Matrix m(a.ring(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) m.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r) m.set(a.rows() + r, c, b(r, c));
  }
  return m;
}

}  // namespace paracyclic
