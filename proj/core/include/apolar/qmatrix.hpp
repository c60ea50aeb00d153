#pragma once

#include <optional>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

using QVector = std::vector<Rat>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  QMatrix(int rows, int cols, std::vector<Rat> entries);
  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<Rat>& entries() const { return a_; }

  QVector row(int r) const;
  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct Rref {
  QMatrix matrix;
  std::vector<int> pivots;
};

// Pivot: first nonzero entry scanning top to bottom.
Rref rref(QMatrix m);
int rank(const QMatrix& m);
// Basis of the right null space, one vector per free column (RREF parametrization).
std::vector<QVector> kernel_basis(const QMatrix& m);
// One solution with free variables set to zero, or nullopt if inconsistent.
std::optional<QVector> solve_linear(const QMatrix& a, const QVector& v);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QVector multiply(const QMatrix& a, const QVector& v);
QMatrix transpose(const QMatrix& m);
// Throws DomainError when singular.
QMatrix inverse(const QMatrix& m);

// Incremental row echelon basis of a subspace of Q^dim. Each stored row is
// monic at its pivot, its first nonzero column.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim), owner_(static_cast<std::size_t>(dim), -1) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Reduces v in place against the basis; true if v ends up zero.
  bool reduce(QVector& v) const;
  // Inserts v if independent; returns whether the span grew.
  bool insert(QVector v);
  bool contains(QVector v) const { return reduce(v); }
  const std::vector<QVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int dim_;
  std::vector<QVector> rows_;
  std::vector<int> pivots_;
  std::vector<int> owner_;
};

}  // namespace apolar
