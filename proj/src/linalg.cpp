#include "paracyclic/linalg.hpp"

#include <algorithm>
#include <utility>

namespace paracyclic {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix to_int_matrix(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) throw Error(ErrorKind::NotIntegral, "non-integer entry");
      out[r][c] = m(r, c).get_num();
    }
  return out;
}

Matrix from_int_matrix(Ring ring, const IntMatrix& a, std::size_t rows, std::size_t cols) {
  Matrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar(a[r][c]));
  return m;
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix id(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

Matrix as_rational(const Matrix& m) {
  return Matrix::from_entries(Ring::rationals(), m.rows(), m.cols(), m.entries());
}

void require_field(const Ring& ring, const char* what) {
  if (ring.kind() == Ring::Kind::IntegersMod && !ring.is_field())
    throw Error(ErrorKind::CompositeModulus,
                std::string(what) + " over " + ring.name() + " needs a prime modulus");
}

}  // namespace

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> out;
  std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i).get_num());
  return out;
}

SmithForm smith_normal_form(const Matrix& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  IntMatrix a = to_int_matrix(input);
  IntMatrix u = int_identity(rows);
  IntMatrix v = int_identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  // row_j -= q * row_i
  auto row_axpy = [&](std::size_t j, std::size_t i, const mpz_class& q) {
    for (std::size_t c = 0; c < cols; ++c) a[j][c] -= q * a[i][c];
    for (std::size_t c = 0; c < rows; ++c) u[j][c] -= q * u[i][c];
  };
  // col_j -= q * col_i
  auto col_axpy = [&](std::size_t j, std::size_t i, const mpz_class& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][j] -= q * a[r][i];
    for (std::size_t r = 0; r < cols; ++r) v[r][j] -= q * v[r][i];
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    auto find_pivot = [&](std::size_t& pr, std::size_t& pc) {
      bool found = false;
      mpz_class best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          if (a[r][c] == 0) continue;
          mpz_class mag = abs(a[r][c]);
          if (!found || mag < best) {
            best = mag;
            pr = r;
            pc = c;
            found = true;
          }
        }
      return found;
    };
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(pr, pc)) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_axpy(r, t, q);
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        col_axpy(c, t, q);
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left on the cross.
        std::size_t br = t, bc = t;
        mpz_class best = abs(a[t][t]);
        for (std::size_t r = t + 1; r < rows; ++r)
          if (a[r][t] != 0 && abs(a[r][t]) < best) best = abs(a[r][t]), br = r, bc = t;
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[t][c] != 0 && abs(a[t][c]) < best) best = abs(a[t][c]), br = t, bc = c;
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Cross is clear; enforce divisibility of the trailing block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            // Add row r into row t and reduce again.
            for (std::size_t k = 0; k < cols; ++k) a[t][k] += a[r][k];
            for (std::size_t k = 0; k < rows; ++k) u[t][k] += u[r][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
      for (std::size_t c = 0; c < rows; ++c) u[t][c] = -u[t][c];
    }
  }

  const Ring z = Ring::integers();
  return SmithForm{from_int_matrix(z, u, rows, rows), from_int_matrix(z, a, rows, cols),
                   from_int_matrix(z, v, cols, cols)};
}

Matrix row_echelon(const Matrix& m, std::vector<std::size_t>& pivots) {
  const Ring& ring = m.ring();
  require_field(ring, "row reduction");
  if (ring.kind() == Ring::Kind::Integers)
    throw Error(ErrorKind::UnsupportedRing, "row_echelon needs a field");
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  pivots.clear();
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[row]);
    Scalar inv = ring.inverse(a[row][c]);
    for (std::size_t k = c; k < m.cols(); ++k) a[row][k] = ring.mul(a[row][k], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Scalar f = a[r][c];
      for (std::size_t k = c; k < m.cols(); ++k)
        if (a[row][k] != 0) a[r][k] = ring.sub(a[r][k], ring.mul(f, a[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  Matrix out(ring, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, a[r][c]);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.ring().kind() == Ring::Kind::Integers) return rank(as_rational(m));
  std::vector<std::size_t> pivots;
  row_echelon(m, pivots);
  return pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Ring& ring = m.ring();
  std::vector<Vector> basis;
  if (ring.kind() == Ring::Kind::Integers) {
    SmithForm snf = smith_normal_form(m);
    std::size_t r = snf.invariant_factors().size();
    for (std::size_t j = r; j < m.cols(); ++j) basis.push_back(snf.right.column_vector(j));
    return basis;
  }
  require_field(ring, "kernel computation");
  std::vector<std::size_t> pivots;
  Matrix rref = row_echelon(m, pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = ring.neg(rref(i, free));
    basis.push_back(v);
  }
  return basis;
}

Matrix kernel_matrix(const Matrix& m) {
  return Matrix::from_columns(m.ring(), m.cols(), kernel_basis(m));
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  const Ring& ring = m.ring();
  if (ring.kind() == Ring::Kind::IntegersMod && !ring.is_field())
    return ring.normalize(determinant(as_rational(m)));
  const bool over_z = ring.kind() == Ring::Kind::Integers;
  const Ring work = over_z ? Ring::rationals() : ring;
  const std::size_t n = m.rows();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = work.neg(det);
    }
    det = work.mul(det, a[c][c]);
    Scalar inv = work.inverse(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Scalar f = work.mul(a[r][c], inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = work.sub(a[r][k], work.mul(f, a[c][k]));
    }
  }
  return ring.normalize(det);
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  const Ring& ring = m.ring();
  const std::size_t n = m.rows();
  if (ring.kind() == Ring::Kind::Rationals || ring.is_prime_field()) {
    std::vector<std::size_t> pivots;
    Matrix aug = row_echelon(hstack(m, Matrix::identity(ring, n)), pivots);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
      throw Error(ErrorKind::NotInvertible,
                  "rank " + std::to_string(std::min(pivots.size(), n)) + " < " + std::to_string(n));
    return aug.block(0, n, n, n);
  }
  // Over Z and Z/m (composite): adjugate from the rational inverse.
  Scalar det_q = determinant(as_rational(m));
  Scalar det = ring.normalize(det_q);
  if (!ring.is_unit(det))
    throw Error(ErrorKind::NotInvertible, "determinant " + Ring::format_scalar(det));
  Matrix inv_q = invert(as_rational(m));
  Matrix adj = inv_q.scaled(det_q);
  return Matrix::from_entries(ring, n, n, adj.entries()).scaled(ring.inverse(det));
}

bool is_invertible(const Matrix& m) {
  if (!m.is_square()) return false;
  return m.ring().is_unit(determinant(m));
}

Matrix left_inverse(const Matrix& basis) {
  const Ring& ring = basis.ring();
  const std::size_t rows = basis.rows(), k = basis.cols();
  if (k == 0) return Matrix(ring, 0, rows);
  if (ring.kind() == Ring::Kind::Integers) {
    // U B V = [I; 0] when the column lattice is saturated, so V [I 0] U
    // is an integral left inverse.
    SmithForm snf = smith_normal_form(basis);
    auto factors = snf.invariant_factors();
    if (factors.size() != k)
      throw Error(ErrorKind::NotInvertible, "basis columns are dependent");
    for (const auto& f : factors)
      if (f != 1) throw Error(ErrorKind::NotInvertible, "basis lattice is not saturated");
    Matrix select(ring, k, rows);
    for (std::size_t i = 0; i < k; ++i) select.set(i, i, Scalar(1));
    return snf.right * select * snf.left;
  }
  require_field(ring, "left inverse");
  // Rows where the basis has pivots give an invertible square block.
  std::vector<std::size_t> pivots;
  row_echelon(basis.transpose(), pivots);
  if (pivots.size() != k) throw Error(ErrorKind::NotInvertible, "basis columns are dependent");
  Matrix square(ring, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) square.set(i, j, basis(pivots[i], j));
  Matrix inv = invert(square);
  Matrix out(ring, k, rows);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.set(i, pivots[j], inv(i, j));
  return out;
}

}  // namespace paracyclic
