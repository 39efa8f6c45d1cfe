#include "core/homological.hpp"

#include <algorithm>

namespace mk {

namespace {

// Everything below needs the simples to be one-dimensional and attached to
// pairwise distinct distinguished idempotents, i.e. e_i (A/J) e_j of
// dimension delta_ij.  Quiver algebras, their corners and opposites all
// qualify.
void check_split_basic(const AlgebraPtr& a) {
  Subspace rad = algebra_radical(a);
  const int n = static_cast<int>(a->idempotents.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseEchelon ech(a->dim, a->field);
      for (int k = 0; k < a->dim; ++k) {
        auto v = a->mul(a->idempotents[i], a->mul(a->basis_vec(k), a->idempotents[j]));
        ech.insert(to_sparse(rad.reduce(v)));
      }
      int want = (i == j) ? 1 : 0;
      if (ech.rank() != want)
        throw Error(ErrorKind::Unsupported,
                    "NotSplit: algebra is not split basic over its distinguished idempotents");
    }
}

struct Weights {
  std::vector<int> mult;  // per distinguished idempotent
  Matrix rows;            // weight-space bases stacked in idempotent order
};

// Splits a semisimple invariant subspace of M into its idempotent weight
// spaces; the stacked rows form a basis of the subspace.
Weights weight_split(const Module& m, const Subspace& s) {
  const int n = static_cast<int>(m.algebra->idempotents.size());
  Weights w;
  std::vector<std::vector<Scalar>> all;
  for (int i = 0; i < n; ++i) {
    Matrix p = m.act(m.algebra->idempotents[i]);
    SparseEchelon ech(m.dim, m.algebra->field);
    for (int v = 0; v < s.dim(); ++v) ech.insert(to_sparse(mat_vec(p, s.basis().row(v))));
    Subspace ws = ech.to_subspace();
    w.mult.push_back(ws.dim());
    for (int r = 0; r < ws.dim(); ++r) all.push_back(ws.basis().row(r));
  }
  if (static_cast<int>(all.size()) != s.dim())
    throw Error(ErrorKind::Internal, "weight spaces do not add up to the subspace");
  w.rows = Matrix::from_rows(all, m.dim, m.algebra->field);
  return w;
}

Matrix inverse(const Matrix& x) {
  auto inv = solve(x, Matrix::identity(x.rows(), x.field()));
  if (!inv) throw Error(ErrorKind::Internal, "singular change-of-basis matrix");
  return *inv;
}

int matrix_rank(const Matrix& h) { return rref(h).rank; }

// Solves sum_k c_k (basis_k * v_j) = w_j over the hom-space coordinates and
// returns the combined matrix, or nothing if inconsistent.
std::optional<Matrix> hom_with_values(const HomSpace& hs, const Matrix& vecs_src,
                                      const Matrix& vecs_dst, const Field& f) {
  const int s = vecs_src.rows();
  Matrix sys(s * hs.dst_dim, hs.dim(), f), rhs(s * hs.dst_dim, 1, f);
  for (int j = 0; j < s; ++j) {
    auto v = vecs_src.row(j);
    for (int k = 0; k < hs.dim(); ++k) {
      auto img = mat_vec(hs.basis[k], v);
      for (int r = 0; r < hs.dst_dim; ++r) sys.at(j * hs.dst_dim + r, k) = img[r];
    }
    for (int r = 0; r < hs.dst_dim; ++r) rhs.at(j * hs.dst_dim + r, 0) = vecs_dst.at(j, r);
  }
  auto sol = solve(sys, rhs);
  if (!sol) return {};
  Matrix h(hs.dst_dim, hs.src_dim, f);
  for (int k = 0; k < hs.dim(); ++k)
    if (sol->at(k, 0) != 0) h = h + hs.basis[k].scaled(sol->at(k, 0));
  return h;
}

Module side_projective(const AlgebraPtr& a, int vertex, Side side) {
  return side == Side::Left ? projective_indecomposable(a, vertex) : right_projective(a, vertex);
}

Module side_injective(const AlgebraPtr& a, int vertex, Side side) {
  return side == Side::Left ? injective_indecomposable(a, vertex)
                            : dual_module(projective_indecomposable(a, vertex));
}

}  // namespace

Subspace radical_submodule(const Module& m) {
  Subspace j = algebra_radical(m.algebra);
  SparseEchelon ech(m.dim, m.algebra->field);
  for (int bi = 0; bi < j.dim(); ++bi) {
    Matrix act = m.act(j.basis().row(bi));
    for (int c = 0; c < m.dim; ++c) {
      SparseEchelon::SparseVec col;
      for (int r = 0; r < m.dim; ++r)
        if (act.at(r, c) != 0) col.emplace_back(r, act.at(r, c));
      ech.insert(std::move(col));
    }
  }
  return ech.to_subspace();
}

Subspace socle_submodule(const Module& m) {
  Subspace j = algebra_radical(m.algebra);
  if (j.dim() == 0) return Subspace::full(m.dim, m.algebra->field);
  Matrix stacked(0, m.dim, m.algebra->field);
  for (int bi = 0; bi < j.dim(); ++bi)
    stacked = (bi == 0) ? m.act(j.basis().row(0)) : Matrix::vstack(stacked, m.act(j.basis().row(bi)));
  return kernel(stacked);
}

std::vector<int> top_multiplicities(const Module& m) {
  check_split_basic(m.algebra);
  auto q = quotient_module(m, radical_submodule(m));
  return weight_split(q.module, Subspace::full(q.module.dim, m.algebra->field)).mult;
}

std::vector<int> socle_multiplicities(const Module& m) {
  check_split_basic(m.algebra);
  return weight_split(m, socle_submodule(m)).mult;
}

CoverResult projective_cover(const Module& m) {
  const Field& f = m.algebra->field;
  if (m.dim == 0) return CoverResult{zero_module(m.algebra, m.side), Matrix(0, 0, f)};
  check_split_basic(m.algebra);
  auto qm = quotient_module(m, radical_submodule(m));
  Weights wm = weight_split(qm.module, Subspace::full(qm.module.dim, f));

  std::vector<Module> parts;
  for (size_t i = 0; i < wm.mult.size(); ++i)
    for (int t = 0; t < wm.mult[i]; ++t)
      parts.push_back(side_projective(m.algebra, static_cast<int>(i), m.side));
  DirectSum c = direct_sum(parts);

  auto qc = quotient_module(c.sum, radical_submodule(c.sum));
  Weights wc = weight_split(qc.module, Subspace::full(qc.module.dim, f));
  if (wc.mult != wm.mult) throw Error(ErrorKind::Internal, "cover top does not match module top");

  // weight-preserving iso tau : top C -> top M, j-th weight vector to j-th
  Matrix tau = wm.rows.transpose() * inverse(wc.rows.transpose());
  // a hom C -> M inducing tau on tops; prescribe images of preimages of the
  // top basis: for each stacked top-C basis vector pick a C-lift and demand
  // its image maps onto a chosen M-lift modulo rad M.  Equivalent linear
  // form: qm.projection * h = tau * qc.projection.
  HomSpace hs = hom_space(c.sum, m);
  Matrix want = tau * qc.projection;  // topM.dim x dim C
  const int rows = want.rows() * c.sum.dim;
  Matrix sys(rows, hs.dim(), f), rhs(rows, 1, f);
  for (int k = 0; k < hs.dim(); ++k) {
    Matrix lhs = qm.projection * hs.basis[k];
    for (int r = 0; r < lhs.rows(); ++r)
      for (int cc = 0; cc < lhs.cols(); ++cc) sys.at(r * c.sum.dim + cc, k) = lhs.at(r, cc);
  }
  for (int r = 0; r < want.rows(); ++r)
    for (int cc = 0; cc < want.cols(); ++cc) rhs.at(r * c.sum.dim + cc, 0) = want.at(r, cc);
  auto sol = solve(sys, rhs);
  if (!sol) throw Error(ErrorKind::Internal, "projective cover lifting failed");
  Matrix h(m.dim, c.sum.dim, f);
  for (int k = 0; k < hs.dim(); ++k)
    if (sol->at(k, 0) != 0) h = h + hs.basis[k].scaled(sol->at(k, 0));
  if (matrix_rank(h) != m.dim) throw Error(ErrorKind::Internal, "projective cover map not surjective");
  return CoverResult{c.sum, h};
}

EnvelopeResult injective_envelope(const Module& m) {
  const Field& f = m.algebra->field;
  if (m.dim == 0) return EnvelopeResult{zero_module(m.algebra, m.side), Matrix(0, 0, f)};
  check_split_basic(m.algebra);
  Weights wm = weight_split(m, socle_submodule(m));

  std::vector<Module> parts;
  for (size_t i = 0; i < wm.mult.size(); ++i)
    for (int t = 0; t < wm.mult[i]; ++t)
      parts.push_back(side_injective(m.algebra, static_cast<int>(i), m.side));
  DirectSum e = direct_sum(parts);

  Weights we = weight_split(e.sum, socle_submodule(e.sum));
  if (we.mult != wm.mult)
    throw Error(ErrorKind::Internal, "envelope socle does not match module socle");

  // an intertwiner sending the j-th socle basis vector of M to the j-th
  // socle basis vector of E; exists because E is injective
  HomSpace hs = hom_space(m, e.sum);
  auto h = hom_with_values(hs, wm.rows, we.rows, f);
  if (!h) throw Error(ErrorKind::Internal, "ExtensionFailed: socle embedding does not extend");
  if (matrix_rank(*h) != m.dim)
    throw Error(ErrorKind::Internal, "injective envelope map not injective");
  return EnvelopeResult{e.sum, *h};
}

bool is_projective(const Module& m) {
  if (m.dim == 0) return true;
  return projective_cover(m).cover.dim == m.dim;
}

bool is_injective(const Module& m) {
  if (m.dim == 0) return true;
  Module d = dual_module(m);  // flips the side, same algebra
  if (d.side == Side::Left) return is_projective(d);
  AlgebraPtr op = opposite_algebra(m.algebra);
  return is_projective(right_as_left_over_op(d, op));
}

Resolution minimal_injective_resolution(const Module& m, int cap) {
  if (cap < 0) throw Error(ErrorKind::Invalid, "resolution cap must be nonnegative");
  Resolution res;
  res.base = m;
  Module current = m;
  Matrix carry = Matrix::identity(m.dim, m.algebra->field);  // current <- previous term
  for (int t = 0; t < cap; ++t) {
    if (current.dim == 0) break;
    EnvelopeResult env = injective_envelope(current);
    res.terms.push_back(env.envelope);
    res.maps.push_back(env.map * carry);
    Subspace image(env.envelope.dim, env.map.transpose());
    auto q = quotient_module(env.envelope, image);
    current = q.module;
    carry = q.projection;
  }
  res.complete = (current.dim == 0);
  return res;
}

DomdimResult dominant_dimension(const AlgebraPtr& a, int cap) {
  DomdimResult out;
  out.cap = cap;
  if (a->dim == 0) {
    out.at_least = true;
    out.value = cap;
    return out;
  }
  // build the resolution incrementally and stop at the first non-projective
  // term: later terms can be much larger and are never needed
  Module reg = regular_module(a, Side::Left);
  out.witness.base = reg;
  Module current = reg;
  Matrix carry = Matrix::identity(reg.dim, a->field);
  for (int t = 0; t < cap; ++t) {
    if (current.dim == 0) break;
    EnvelopeResult env = injective_envelope(current);
    out.witness.terms.push_back(env.envelope);
    out.witness.maps.push_back(env.map * carry);
    if (!is_projective(env.envelope)) {
      out.first_nonprojective = t;
      out.value = t;
      return out;
    }
    Subspace image(env.envelope.dim, env.map.transpose());
    auto q = quotient_module(env.envelope, image);
    current = q.module;
    carry = q.projection;
  }
  out.witness.complete = (current.dim == 0);
  // every computed term is projective (incl. a finite all-projective
  // resolution, i.e. self-injective algebras)
  out.at_least = true;
  out.value = cap;
  return out;
}

std::optional<Qf3Result> qf3_minimal_faithful(const AlgebraPtr& a) {
  check_split_basic(a);
  std::vector<int> verts;
  std::vector<Module> parts;
  for (size_t i = 0; i < a->idempotents.size(); ++i) {
    Module p = projective_indecomposable(a, static_cast<int>(i));
    if (is_injective(p)) {
      verts.push_back(static_cast<int>(i));
      parts.push_back(std::move(p));
    }
  }
  if (parts.empty()) return {};
  Module sum = direct_sum(parts).sum;
  if (!is_faithful(sum)) return {};
  return Qf3Result{std::move(sum), std::move(verts)};
}

}  // namespace mk
