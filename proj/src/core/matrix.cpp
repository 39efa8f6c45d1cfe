#include "core/matrix.hpp"

#include <algorithm>

namespace mk {

Matrix Matrix::identity(int n, Field f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, f_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::Invalid, "matrix product dimension mismatch");
  Matrix p(rows_, o.cols_, f_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < o.cols_; ++c) {
        const Scalar& y = o.at(k, c);
        if (y == 0) continue;
        p.at(r, c) = f_.add(p.at(r, c), f_.mul(x, y));
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::Invalid, "matrix sum dimension mismatch");
  Matrix s(rows_, cols_, f_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = f_.add(a_[i], o.a_[i]);
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::Invalid, "matrix difference dimension mismatch");
  Matrix s(rows_, cols_, f_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = f_.sub(a_[i], o.a_[i]);
  return s;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix s(rows_, cols_, f_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = f_.mul(a_[i], c);
  return s;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x == 0; });
}

std::vector<Scalar> Matrix::row(int r) const {
  return std::vector<Scalar>(a_.begin() + static_cast<size_t>(r) * cols_,
                             a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

void Matrix::set_row(int r, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != cols_)
    throw Error(ErrorKind::Invalid, "row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<size_t>(r) * cols_);
}

Matrix Matrix::mul_vec_as_col(const std::vector<Scalar>& v) const {
  Matrix col(cols_, 1, f_);
  for (int i = 0; i < cols_; ++i) col.at(i, 0) = v[i];
  return *this * col;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorKind::Invalid, "vstack width mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_, a.f_);
  std::copy(a.a_.begin(), a.a_.end(), m.a_.begin());
  std::copy(b.a_.begin(), b.a_.end(), m.a_.begin() + a.a_.size());
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorKind::Invalid, "hstack height mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_, a.f_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, int cols, Field f) {
  Matrix m(static_cast<int>(rows.size()), cols, f);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
  return m;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw Error(ErrorKind::Invalid, "mat_vec dimension mismatch");
  std::vector<Scalar> out(m.rows(), Scalar(0));
  const Field& f = m.field();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const Scalar& x = m.at(r, c);
      if (x == 0 || v[c] == 0) continue;
      out[r] = f.add(out[r], f.mul(x, v[c]));
    }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.mat = m;
  Matrix& a = res.mat;
  const Field& f = m.field();
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    // Pivot choice: smallest operand among nonzero candidates keeps the
    // rational coefficients from blowing up on the structured inputs here.
    int piv = -1;
    size_t best = 0;
    for (int r = lead; r < a.rows(); ++r) {
      if (a.at(r, c) == 0) continue;
      size_t sz = mpz_size(a.at(r, c).get_num().get_mpz_t()) +
                  mpz_size(a.at(r, c).get_den().get_mpz_t());
      bool unit = a.at(r, c) == 1 || a.at(r, c) == -1;
      size_t score = unit ? 0 : sz;
      if (piv < 0 || score < best) {
        piv = r;
        best = score;
        if (score == 0) break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead)
      for (int cc = 0; cc < a.cols(); ++cc) std::swap(a.at(piv, cc), a.at(lead, cc));
    Scalar inv = f.inv(a.at(lead, c));
    for (int cc = c; cc < a.cols(); ++cc) a.at(lead, cc) = f.mul(a.at(lead, cc), inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, c) == 0) continue;
      Scalar factor = a.at(r, c);
      for (int cc = c; cc < a.cols(); ++cc)
        a.at(r, cc) = f.sub(a.at(r, cc), f.mul(factor, a.at(lead, cc)));
    }
    res.pivot_cols.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

Subspace::Subspace(int ambient, const Matrix& gens) : ambient_(ambient) {
  if (gens.cols() != ambient) throw Error(ErrorKind::Invalid, "subspace ambient mismatch");
  RrefResult r = rref(gens);
  basis_ = Matrix(r.rank, ambient, gens.field());
  for (int i = 0; i < r.rank; ++i) basis_.set_row(i, r.mat.row(i));
  pivots_ = r.pivot_cols;
}

Subspace Subspace::zero(int ambient, Field f) { return Subspace(ambient, Matrix(0, ambient, f)); }

Subspace Subspace::full(int ambient, Field f) {
  return Subspace(ambient, Matrix::identity(ambient, f));
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> const& v) const {
  std::vector<Scalar> w = v;
  const Field& f = basis_.field();
  for (int i = 0; i < basis_.rows(); ++i) {
    const Scalar& coef = w[pivots_[i]];
    if (coef == 0) continue;
    Scalar c = coef;
    for (int j = 0; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
  }
  return w;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::Invalid, "ambient mismatch");
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  // Canonical representative makes this a pure matrix comparison.
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::Invalid, "ambient mismatch");
  return Subspace(ambient_, Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::Invalid, "ambient mismatch");
  // Left null vectors (alpha, beta) of [A; -B] give alpha*A in the intersection.
  Matrix stacked = Matrix::vstack(basis_, other.basis_.scaled(Scalar(-1)));
  Subspace ker = kernel(stacked.transpose());
  Matrix gens(ker.dim(), ambient_, basis_.field());
  const Field& f = basis_.field();
  for (int i = 0; i < ker.dim(); ++i) {
    auto ab = ker.basis().row(i);
    for (int j = 0; j < basis_.rows(); ++j)
      for (int c = 0; c < ambient_; ++c)
        if (basis_.at(j, c) != 0 && ab[j] != 0)
          gens.at(i, c) = f.add(gens.at(i, c), f.mul(ab[j], basis_.at(j, c)));
  }
  return Subspace(ambient_, gens);
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  Matrix gens(m.cols() - r.rank, m.cols(), f);
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    gens.at(k, c) = 1;
    for (int i = 0; i < r.rank; ++i) gens.at(k, r.pivot_cols[i]) = f.neg(r.mat.at(i, c));
    ++k;
  }
  return Subspace(m.cols(), gens);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw Error(ErrorKind::Invalid, "solve dimension mismatch");
  RrefResult r = rref(Matrix::hstack(m, rhs));
  const Field& f = m.field();
  // Any pivot in the rhs block means inconsistency.
  for (int c : r.pivot_cols)
    if (c >= m.cols()) return std::nullopt;
  Matrix x(m.cols(), rhs.cols(), f);
  for (size_t i = 0; i < r.pivot_cols.size(); ++i)
    for (int c = 0; c < rhs.cols(); ++c) x.at(r.pivot_cols[i], c) = r.mat.at(static_cast<int>(i), m.cols() + c);
  return x;
}

SparseEchelon::SparseVec to_sparse(const std::vector<Scalar>& v) {
  SparseEchelon::SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

std::vector<Scalar> to_dense(const SparseEchelon::SparseVec& v, int n) {
  std::vector<Scalar> d(n, Scalar(0));
  for (auto& [i, x] : v) d[i] = x;
  return d;
}

namespace {
// dst -= c * src (sparse axpy, both sorted)
SparseEchelon::SparseVec axpy(const SparseEchelon::SparseVec& dst, const Scalar& c,
                              const SparseEchelon::SparseVec& src, const Field& f) {
  SparseEchelon::SparseVec out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, f.neg(f.mul(c, src[j].second)));
      ++j;
    } else {
      Scalar v = f.sub(dst[i].second, f.mul(c, src[j].second));
      if (v != 0) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

SparseEchelon::SparseVec SparseEchelon::reduce(SparseVec v) const {
  // Eliminating column c only introduces columns > c, so a single
  // left-to-right sweep fully reduces the vector.
  SparseVec done;
  while (!v.empty()) {
    size_t idx = 0;
    while (idx < v.size() && pivot_row_[v[idx].first] < 0) ++idx;
    done.insert(done.end(), v.begin(), v.begin() + idx);
    if (idx == v.size()) break;
    SparseVec rest(v.begin() + idx, v.end());
    v = axpy(rest, rest.front().second, rows_[pivot_row_[rest.front().first]], f_);
  }
  return done;
}

bool SparseEchelon::insert(SparseVec v) {
  // eliminate leading terms against existing pivots
  while (!v.empty()) {
    int lead = v.front().first;
    int row = pivot_row_[lead];
    if (row < 0) break;
    v = axpy(v, v.front().second, rows_[row], f_);
  }
  if (v.empty()) return false;
  Scalar inv = f_.inv(v.front().second);
  for (auto& [i, x] : v) x = f_.mul(x, inv);
  pivot_row_[v.front().first] = static_cast<int>(rows_.size());
  pivots_.push_back(v.front().first);
  rows_.push_back(std::move(v));
  canonical_ = false;
  return true;
}

void SparseEchelon::back_reduce() {
  // Full back-substitution: clear every pivot column from every other row.
  for (size_t i = 0; i < rows_.size(); ++i) {
    SparseVec& r = rows_[i];
    bool again = true;
    while (again) {
      again = false;
      for (size_t k = 1; k < r.size(); ++k) {
        int col = r[k].first;
        int prow = pivot_row_[col];
        if (prow >= 0 && static_cast<size_t>(prow) != i) {
          r = axpy(r, r[k].second, rows_[prow], f_);
          again = true;
          break;
        }
      }
    }
  }
  canonical_ = true;
}

std::vector<std::vector<Scalar>> SparseEchelon::kernel_basis() const {
  const_cast<SparseEchelon*>(this)->back_reduce();
  std::vector<std::vector<Scalar>> out;
  std::vector<bool> is_pivot(n_, false);
  for (int c : pivots_) is_pivot[c] = true;
  for (int c = 0; c < n_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(n_, Scalar(0));
    v[c] = 1;
    for (size_t i = 0; i < rows_.size(); ++i)
      for (auto& [j, x] : rows_[i])
        if (j == c) v[pivots_[i]] = f_.neg(x);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SparseEchelon::SparseVec> SparseEchelon::rref_rows() const {
  const_cast<SparseEchelon*>(this)->back_reduce();
  std::vector<size_t> order(rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (size_t i : order) out.push_back(rows_[i]);
  return out;
}

Subspace SparseEchelon::to_subspace() const {
  auto rr = rref_rows();
  Matrix m(static_cast<int>(rr.size()), n_, f_);
  for (size_t i = 0; i < rr.size(); ++i)
    for (auto& [j, x] : rr[i]) m.at(static_cast<int>(i), j) = x;
  return Subspace(n_, m);
}

}  // namespace mk
