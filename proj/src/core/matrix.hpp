#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/field.hpp"

namespace mk {

// Dense matrix over a fixed field.  All arithmetic is exact; there is no
// tolerance anywhere in this library.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, Field f = {})
      : rows_(rows), cols_(cols), f_(f), a_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

  static Matrix identity(int n, Field f = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  std::vector<Scalar> row(int r) const;
  void set_row(int r, const std::vector<Scalar>& v);
  Matrix mul_vec_as_col(const std::vector<Scalar>& v) const;  // this * v

  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, int cols, Field f = {});

 private:
  int rows_, cols_;
  Field f_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix mat;
  int rank = 0;
  std::vector<int> pivot_cols;
};

RrefResult rref(const Matrix& m);

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

// Canonical subspace of k^n: basis rows in reduced row echelon form.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  // Rows of gens span the subspace; they get echelonized.
  Subspace(int ambient, const Matrix& gens);
  static Subspace zero(int ambient, Field f = {});
  static Subspace full(int ambient, Field f = {});

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  // Reduces v modulo the subspace (exact normal form).
  std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  int ambient_;
  Matrix basis_;  // RREF, full row rank
  std::vector<int> pivots_;
};

Subspace kernel(const Matrix& m);

// Solves m * x = rhs columnwise; absent if inconsistent.  Free variables
// are set to zero, so the result is deterministic.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

// Sparse incremental echelonizer for the large structured linear systems
// (intertwiner equations, tensor relation spans).  Rows are kept reduced
// against each other, pivot coefficient 1.
class SparseEchelon {
 public:
  using SparseVec = std::vector<std::pair<int, Scalar>>;  // sorted by index

  explicit SparseEchelon(int n, Field f = {}) : n_(n), f_(f), pivot_row_(n, -1) {}

  int ncols() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the current rows; returns the residue.
  SparseVec reduce(SparseVec v) const;
  // Inserts v; returns true if the rank grew.
  bool insert(SparseVec v);

  // Kernel of the matrix whose rows were inserted (columns = variables).
  std::vector<std::vector<Scalar>> kernel_basis() const;
  const std::vector<int>& pivot_cols() const { return pivots_; }
  // Canonical RREF rows (fully back-reduced), sorted by pivot column.
  std::vector<SparseVec> rref_rows() const;

  Subspace to_subspace() const;

 private:
  void back_reduce();

  int n_;
  Field f_;
  std::vector<SparseVec> rows_;   // rows_[i] has pivot pivots_[i]
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;    // column -> row index or -1
  mutable bool canonical_ = true;
};

SparseEchelon::SparseVec to_sparse(const std::vector<Scalar>& v);
std::vector<Scalar> to_dense(const SparseEchelon::SparseVec& v, int n);

}  // namespace mk
