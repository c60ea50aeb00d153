#include "apolar/qmatrix.hpp"

#include <utility>

#include "apolar/errors.hpp"

namespace apolar {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

QMatrix::QMatrix(int rows, int cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    throw DomainError("entry count does not match matrix shape");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw DomainError("ragged row");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QVector QMatrix::row(int r) const {
  return QVector(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                 a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rref rref(QMatrix m) {
  Rref out;
  const int R = m.rows(), C = m.cols();
  int r = 0;
  Rat f;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && m(p, c) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (int k = c; k < C; ++k) std::swap(m(p, k), m(r, k));
    if (m(r, c) != 1) {
      Rat inv = 1 / m(r, c);
      for (int k = c; k < C; ++k)
        if (m(r, k) != 0) m(r, k) *= inv;
    }
    for (int i = 0; i < R; ++i) {
      if (i == r || m(i, c) == 0) continue;
      f = m(i, c);
      for (int k = c; k < C; ++k)
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

int rank(const QMatrix& m) {
  EchelonBasis e(m.cols());
  for (int r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(static_cast<std::size_t>(m.cols()));
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.matrix(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve_linear(const QMatrix& a, const QVector& v) {
  if (static_cast<int>(v.size()) != a.rows()) throw DomainError("right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = v[r];
  }
  Rref rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  QVector x(static_cast<std::size_t>(a.cols()));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.matrix(static_cast<int>(i), a.cols());
  return x;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not compose");
  QMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QVector multiply(const QMatrix& a, const QVector& v) {
  if (a.cols() != static_cast<int>(v.size())) throw DomainError("matrix and vector shapes differ");
  QVector r(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) r[i] += a(i, k) * v[k];
  return r;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref rr = rref(std::move(aug));
  if (static_cast<int>(rr.pivots.size()) < n || (n > 0 && rr.pivots[n - 1] != n - 1))
    throw DomainError("matrix is singular");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rr.matrix(i, n + j);
  return inv;
}

bool EchelonBasis::reduce(QVector& v) const {
  if (static_cast<int>(v.size()) != dim_) throw DomainError("vector length mismatch");
  bool zero = true;
  for (int c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    int o = owner_[c];
    if (o < 0) {
      zero = false;
      continue;
    }
    const QVector& row = rows_[o];
    Rat f = v[c];
    for (int k = c; k < dim_; ++k)
      if (row[k] != 0) v[k] -= f * row[k];
  }
  return zero;
}

bool EchelonBasis::insert(QVector v) {
  if (reduce(v)) return false;
  int p = 0;
  while (v[p] == 0) ++p;
  Rat inv = 1 / v[p];
  for (int k = p; k < dim_; ++k)
    if (v[k] != 0) v[k] *= inv;
  owner_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace apolar
