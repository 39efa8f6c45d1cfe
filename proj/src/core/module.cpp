#include "core/module.hpp"

#include <algorithm>

namespace mk {

Matrix Module::act(const std::vector<Scalar>& a) const {
  Matrix out(dim, dim, algebra->field);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out = out + action[i].scaled(a[i]);
  }
  return out;
}

std::vector<std::string> validate_module(const Module& m) {
  std::vector<std::string> out;
  const Algebra& a = *m.algebra;
  if (static_cast<int>(m.action.size()) != a.dim) {
    out.push_back("action matrix count does not match algebra dimension");
    return out;
  }
  for (const Matrix& mat : m.action)
    if (mat.rows() != m.dim || mat.cols() != m.dim) {
      out.push_back("action matrix has wrong shape");
      return out;
    }
  if (!(m.act(a.unit) == Matrix::identity(m.dim, a.field)))
    out.push_back("unit does not act as identity");
  for (int i = 0; i < a.dim && out.size() < 10; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Matrix prod = m.side == Side::Left ? m.action[i] * m.action[j] : m.action[j] * m.action[i];
      Matrix expect(m.dim, m.dim, a.field);
      for (auto& [k, c] : a.structure[i][j]) expect = expect + m.action[k].scaled(c);
      if (!(prod == expect)) {
        out.push_back("action does not respect structure constants at (" + std::to_string(i) +
                      "," + std::to_string(j) + ")");
        break;
      }
    }
  return out;
}

bool is_intertwiner(const Module& src, const Module& dst, const Matrix& h) {
  for (int g : src.algebra->generators())
    if (!(h * src.action[g] == dst.action[g] * h)) return false;
  return true;
}

std::vector<std::string> validate_bimodule(const Bimodule& m) {
  auto out = validate_module(m.as_left());
  auto r = validate_module(m.as_right());
  out.insert(out.end(), r.begin(), r.end());
  for (int i = 0; i < m.left_alg->dim && out.size() < 12; ++i)
    for (int j = 0; j < m.right_alg->dim; ++j)
      if (!(m.left_action[i] * m.right_action[j] == m.right_action[j] * m.left_action[i])) {
        out.push_back("left and right actions do not commute");
        i = m.left_alg->dim;
        break;
      }
  return out;
}

Module regular_module(const AlgebraPtr& a, Side side) {
  Module m;
  m.algebra = a;
  m.side = side;
  m.dim = a->dim;
  for (int i = 0; i < a->dim; ++i)
    m.action.push_back(side == Side::Left ? a->left_mult(a->basis_vec(i))
                                          : a->right_mult(a->basis_vec(i)));
  return m;
}

Module zero_module(const AlgebraPtr& a, Side side) {
  Module m;
  m.algebra = a;
  m.side = side;
  m.dim = 0;
  m.action.assign(a->dim, Matrix(0, 0, a->field));
  return m;
}

SubmoduleResult submodule(const Module& m, const Subspace& s) {
  const Field& f = m.algebra->field;
  const int d = s.dim();
  Module sub;
  sub.algebra = m.algebra;
  sub.side = m.side;
  sub.dim = d;
  for (const Matrix& act : m.action) {
    Matrix a(d, d, f);
    for (int j = 0; j < d; ++j) {
      auto img = mat_vec(act, s.basis().row(j));
      if (!s.contains(img))
        throw Error(ErrorKind::Internal, "subspace is not closed under the action");
      // RREF basis: coordinates are the pivot entries
      for (int i = 0; i < d; ++i) a.at(i, j) = img[s.pivots()[i]];
    }
    sub.action.push_back(std::move(a));
  }
  return SubmoduleResult{std::move(sub), s.basis()};
}

QuotientResult quotient_module(const Module& m, const Subspace& s) {
  const Field& f = m.algebra->field;
  std::vector<int> free_cols;
  {
    std::vector<bool> piv(m.dim, false);
    for (int c : s.pivots()) piv[c] = true;
    for (int c = 0; c < m.dim; ++c)
      if (!piv[c]) free_cols.push_back(c);
  }
  const int q = static_cast<int>(free_cols.size());
  Matrix proj(q, m.dim, f);
  for (int c = 0; c < m.dim; ++c) {
    std::vector<Scalar> v(m.dim, Scalar(0));
    v[c] = 1;
    auto red = s.reduce(v);
    for (int i = 0; i < q; ++i) proj.at(i, c) = red[free_cols[i]];
  }
  Module quot;
  quot.algebra = m.algebra;
  quot.side = m.side;
  quot.dim = q;
  for (const Matrix& act : m.action) {
    Matrix a(q, q, f);
    for (int j = 0; j < q; ++j) {
      std::vector<Scalar> v(m.dim, Scalar(0));
      v[free_cols[j]] = 1;
      auto red = s.reduce(mat_vec(act, v));
      for (int i = 0; i < q; ++i) a.at(i, j) = red[free_cols[i]];
    }
    quot.action.push_back(std::move(a));
  }
  return QuotientResult{std::move(quot), std::move(proj)};
}

Module projective_indecomposable(const AlgebraPtr& a, int vertex) {
  // A e_i: the column space of right multiplication by e_i inside the left
  // regular module.
  Module reg = regular_module(a, Side::Left);
  Matrix re = a->right_mult(a->idempotents[vertex]);
  Matrix gens(a->dim, a->dim, a->field);
  for (int i = 0; i < a->dim; ++i) gens.set_row(i, mat_vec(re, a->basis_vec(i)));
  return submodule(reg, Subspace(a->dim, gens)).module;
}

Module right_projective(const AlgebraPtr& a, int vertex) {
  Module reg = regular_module(a, Side::Right);
  Matrix le = a->left_mult(a->idempotents[vertex]);
  Matrix gens(a->dim, a->dim, a->field);
  for (int i = 0; i < a->dim; ++i) gens.set_row(i, mat_vec(le, a->basis_vec(i)));
  return submodule(reg, Subspace(a->dim, gens)).module;
}

Module dual_module(const Module& m) {
  Module d;
  d.algebra = m.algebra;
  d.side = m.side == Side::Left ? Side::Right : Side::Left;
  d.dim = m.dim;
  for (const Matrix& act : m.action) d.action.push_back(act.transpose());
  return d;
}

Module injective_indecomposable(const AlgebraPtr& a, int vertex) {
  return dual_module(right_projective(a, vertex));
}

Module right_as_left_over_op(const Module& m, const AlgebraPtr& op) {
  if (m.side != Side::Right) throw Error(ErrorKind::Invalid, "expected a right module");
  Module l;
  l.algebra = op;
  l.side = Side::Left;
  l.dim = m.dim;
  l.action = m.action;
  return l;
}

Module left_over_op_as_right(const Module& m, const AlgebraPtr& orig) {
  if (m.side != Side::Left) throw Error(ErrorKind::Invalid, "expected a left module");
  Module r;
  r.algebra = orig;
  r.side = Side::Right;
  r.dim = m.dim;
  r.action = m.action;
  return r;
}

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty())
    throw Error(ErrorKind::Invalid, "direct_sum of an empty list needs an algebra; use zero_module");
  const AlgebraPtr& a = parts.front().algebra;
  for (const Module& p : parts)
    if (p.algebra != a || p.side != parts.front().side)
      throw Error(ErrorKind::Invalid, "direct_sum over mixed algebras or sides");
  DirectSum out;
  out.sum.algebra = a;
  out.sum.side = parts.front().side;
  int total = 0;
  for (const Module& p : parts) total += p.dim;
  out.sum.dim = total;
  for (int b = 0; b < a->dim; ++b) {
    Matrix act(total, total, a->field);
    int off = 0;
    for (const Module& p : parts) {
      for (int i = 0; i < p.dim; ++i)
        for (int j = 0; j < p.dim; ++j) act.at(off + i, off + j) = p.action[b].at(i, j);
      off += p.dim;
    }
    out.sum.action.push_back(std::move(act));
  }
  int off = 0;
  for (const Module& p : parts) {
    Matrix inj(total, p.dim, a->field), proj(p.dim, total, a->field);
    for (int i = 0; i < p.dim; ++i) {
      inj.at(off + i, i) = 1;
      proj.at(i, off + i) = 1;
    }
    out.injections.push_back(ModuleHom{p, out.sum, std::move(inj)});
    out.projections.push_back(ModuleHom{out.sum, p, std::move(proj)});
    off += p.dim;
  }
  return out;
}

std::vector<Scalar> HomSpace::coords_of(const Matrix& h) const {
  std::vector<Scalar> c;
  c.reserve(coord_pos.size());
  for (int pos : coord_pos) c.push_back(h.at(pos / src_dim, pos % src_dim));
  return c;
}

HomSpace hom_space(const Module& m, const Module& n) {
  if (m.algebra != n.algebra || m.side != n.side)
    throw Error(ErrorKind::Invalid, "hom_space needs modules over the same algebra and side");
  const Field& f = m.algebra->field;
  const int dm = m.dim, dn = n.dim;
  HomSpace hs;
  hs.src_dim = dm;
  hs.dst_dim = dn;
  if (dm == 0 || dn == 0) return hs;
  SparseEchelon sys(dn * dm, f);
  auto unknown = [dm](int r, int c) { return r * dm + c; };
  for (int g : m.algebra->generators()) {
    const Matrix& am = m.action[g];
    const Matrix& an = n.action[g];
    // (H * am - an * H)[r][c] = 0
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) {
        SVec row;
        for (int cp = 0; cp < dm; ++cp)
          if (am.at(cp, c) != 0) row.emplace_back(unknown(r, cp), am.at(cp, c));
        for (int rp = 0; rp < dn; ++rp)
          if (an.at(r, rp) != 0) row.emplace_back(unknown(rp, c), f.neg(an.at(r, rp)));
        std::sort(row.begin(), row.end());
        SVec merged;
        for (auto& [i, x] : row) {
          if (!merged.empty() && merged.back().first == i)
            merged.back().second = f.add(merged.back().second, x);
          else
            merged.emplace_back(i, x);
        }
        std::erase_if(merged, [](auto& pr) { return pr.second == 0; });
        sys.insert(std::move(merged));
      }
  }
  for (auto& vec : sys.kernel_basis()) {
    Matrix h(dn, dm, f);
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) h.at(r, c) = vec[unknown(r, c)];
    hs.basis.push_back(std::move(h));
  }
  // kernel_basis vectors are unit at "their" free column
  {
    std::vector<bool> piv(dn * dm, false);
    for (int c : sys.pivot_cols()) piv[c] = true;
    for (int c = 0; c < dn * dm; ++c)
      if (!piv[c]) hs.coord_pos.push_back(c);
  }
  return hs;
}

EndAlgebra end_algebra(const Module& m) {
  HomSpace hs = hom_space(m, m);
  const Field& f = m.algebra->field;
  const int d = hs.dim();
  std::vector<std::vector<SVec>> structure(d, std::vector<SVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // product b_i * b_j in End^op = composite "b_i then b_j" = f_j o f_i
      Matrix comp = hs.basis[j] * hs.basis[i];
      structure[i][j] = to_sparse(hs.coords_of(comp));
    }
  std::vector<Scalar> unit = hs.coords_of(Matrix::identity(m.dim, f));
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back("f" + std::to_string(i));
  AlgebraPtr b = make_algebra(f, std::move(labels), std::move(structure), std::move(unit),
                              {hs.coords_of(Matrix::identity(m.dim, f))}, false);
  return EndAlgebra{b, std::move(hs)};
}

Module tensor_over(const Bimodule& m, const Module& n) {
  if (n.side != Side::Left || m.right_alg != n.algebra)
    throw Error(ErrorKind::Invalid, "tensor_over needs a left module over the bimodule's right algebra");
  const Field& f = m.left_alg->field;
  const int dm = m.dim, dn = n.dim;
  const int amb = dm * dn;
  auto coord = [dn](int i, int j) { return i * dn + j; };  // phi_i (x) x_j
  SparseEchelon rel(amb, f);
  for (int g : m.right_alg->generators()) {
    const Matrix& rg = m.right_action[g];  // phi -> phi*a
    const Matrix& ag = n.action[g];        // x -> a*x
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j) {
        // (phi_i * a) (x) x_j  -  phi_i (x) (a * x_j)
        SVec row;
        for (int k = 0; k < dm; ++k)
          if (rg.at(k, i) != 0) row.emplace_back(coord(k, j), rg.at(k, i));
        for (int l = 0; l < dn; ++l)
          if (ag.at(l, j) != 0) row.emplace_back(coord(i, l), f.neg(ag.at(l, j)));
        std::sort(row.begin(), row.end());
        SVec merged;
        for (auto& [c, x] : row) {
          if (!merged.empty() && merged.back().first == c)
            merged.back().second = f.add(merged.back().second, x);
          else
            merged.emplace_back(c, x);
        }
        std::erase_if(merged, [](auto& pr) { return pr.second == 0; });
        rel.insert(std::move(merged));
      }
  }
  Subspace relspan = rel.to_subspace();
  // Quotient carries the residual left action b.(phi (x) x) = (b.phi) (x) x.
  Module ambient;
  ambient.algebra = m.left_alg;
  ambient.side = Side::Left;
  ambient.dim = amb;
  for (int b = 0; b < m.left_alg->dim; ++b) {
    Matrix act(amb, amb, f);
    const Matrix& lb = m.left_action[b];
    for (int i = 0; i < dm; ++i)
      for (int k = 0; k < dm; ++k) {
        if (lb.at(k, i) == 0) continue;
        for (int j = 0; j < dn; ++j) act.at(coord(k, j), coord(i, j)) = lb.at(k, i);
      }
    ambient.action.push_back(std::move(act));
  }
  return quotient_module(ambient, relspan).module;
}

Subspace annihilator(const Module& m) {
  const Field& f = m.algebra->field;
  const int da = m.algebra->dim;
  Matrix sys(m.dim * m.dim, da, f);
  for (int b = 0; b < da; ++b)
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c) sys.at(r * m.dim + c, b) = m.action[b].at(r, c);
  return kernel(sys);
}

bool is_faithful(const Module& m) { return annihilator(m).dim() == 0; }

Bimodule dual_bimodule_of_algebra(const AlgebraPtr& a) {
  Bimodule d;
  d.left_alg = a;
  d.right_alg = a;
  d.dim = a->dim;
  for (int i = 0; i < a->dim; ++i) {
    auto b = a->basis_vec(i);
    d.left_action.push_back(a->right_mult(b).transpose());  // (b.phi)(x) = phi(x b)
    d.right_action.push_back(a->left_mult(b).transpose());  // (phi.b)(x) = phi(b x)
  }
  return d;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  Bimodule r;
  r.left_alg = a;
  r.right_alg = a;
  r.dim = a->dim;
  for (int i = 0; i < a->dim; ++i) {
    auto b = a->basis_vec(i);
    r.left_action.push_back(a->left_mult(b));
    r.right_action.push_back(a->right_mult(b));
  }
  return r;
}

}  // namespace mk
