#include "core/algebra.hpp"

#include <algorithm>
#include <deque>

namespace mk {

std::vector<Scalar> Algebra::mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  std::vector<Scalar> out(dim, Scalar(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Scalar c = field.mul(x[i], y[j]);
      for (auto& [k, s] : structure[i][j]) out[k] = field.add(out[k], field.mul(c, s));
    }
  }
  return out;
}

Matrix Algebra::left_mult(const std::vector<Scalar>& x) const {
  Matrix m(dim, dim, field);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j)
      for (auto& [k, s] : structure[i][j]) m.at(k, j) = field.add(m.at(k, j), field.mul(x[i], s));
  }
  return m;
}

Matrix Algebra::right_mult(const std::vector<Scalar>& x) const {
  Matrix m(dim, dim, field);
  for (int j = 0; j < dim; ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < dim; ++i)
      for (auto& [k, s] : structure[i][j]) m.at(k, i) = field.add(m.at(k, i), field.mul(x[j], s));
  }
  return m;
}

std::vector<Scalar> Algebra::basis_vec(int i) const {
  std::vector<Scalar> v(dim, Scalar(0));
  v[i] = 1;
  return v;
}

std::vector<Scalar> Algebra::idempotent_sum(const std::vector<int>& subset) const {
  std::vector<Scalar> e(dim, Scalar(0));
  for (int i : subset) {
    if (i < 0 || i >= static_cast<int>(idempotents.size()))
      throw Error(ErrorKind::Invalid, "idempotent index out of range");
    for (int k = 0; k < dim; ++k) e[k] = field.add(e[k], idempotents[i][k]);
  }
  return e;
}

const std::vector<int>& Algebra::generators() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (generators_) return *generators_;
  // Greedy: walk the basis, keep elements outside the subalgebra generated
  // so far.  For quiver algebras this picks the vertices and arrows.
  SparseEchelon span(dim, field);
  span.insert(to_sparse(unit));
  std::vector<int> gens;
  std::deque<std::vector<Scalar>> closure;  // elements whose products still need processing
  closure.push_back(unit);
  for (int i = 0; i < dim; ++i) {
    std::vector<Scalar> b = basis_vec(i);
    if (span.reduce(to_sparse(b)).empty()) continue;
    gens.push_back(i);
    // close the span under multiplication with the new generator
    std::deque<std::vector<Scalar>> work;
    work.push_back(b);
    span.insert(to_sparse(b));
    closure.push_back(b);
    while (!work.empty()) {
      std::vector<Scalar> x = work.front();
      work.pop_front();
      size_t n = closure.size();
      for (size_t t = 0; t < n; ++t) {
        for (const std::vector<Scalar>& prod : {mul(x, closure[t]), mul(closure[t], x)}) {
          if (span.insert(to_sparse(prod))) {
            closure.push_back(prod);
            work.push_back(prod);
          }
        }
      }
    }
  }
  generators_ = std::move(gens);
  return *generators_;
}

std::optional<Subspace> Algebra::known_radical() const {
  std::lock_guard<std::mutex> lock(mu_);
  return radical_;
}

void Algebra::set_radical(Subspace s) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!radical_) radical_ = std::move(s);
}

std::optional<std::vector<int>> Algebra::known_vertex_classes() const {
  std::lock_guard<std::mutex> lock(mu_);
  return vertex_classes_;
}

void Algebra::set_vertex_classes(std::vector<int> c) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!vertex_classes_) vertex_classes_ = std::move(c);
}

AlgebraPtr make_algebra(Field f, std::vector<std::string> labels,
                        std::vector<std::vector<SVec>> structure, std::vector<Scalar> unit,
                        std::vector<std::vector<Scalar>> idempotents, bool primitive) {
  auto a = std::make_shared<Algebra>();
  a->field = f;
  a->dim = static_cast<int>(labels.size());
  a->basis_labels = std::move(labels);
  a->structure = std::move(structure);
  a->unit = std::move(unit);
  a->idempotents = std::move(idempotents);
  a->idempotents_primitive = primitive;
  return a;
}

// ---------------------------------------------------------------------------
// build_algebra

namespace {

struct Path {
  int source = 0, target = 0;
  std::vector<int> arrows;  // application order
  std::string label;
};

std::string path_label(const QuiverPresentation& p, const Path& path) {
  if (path.arrows.empty()) return "e" + p.vertices[path.source];
  std::string s;
  // printed right-to-left, like composition
  for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += p.arrows[*it].name;
  }
  return s;
}

std::vector<int> path_key(const Path& p) {
  std::vector<int> k;
  k.push_back(p.arrows.empty() ? p.source : -1);
  k.insert(k.end(), p.arrows.begin(), p.arrows.end());
  return k;
}

}  // namespace

AlgebraPtr build_algebra(const QuiverPresentation& p) {
  p.validate();
  const Field f = p.field;
  const int N = p.nilpotency_cap;
  const int nv = static_cast<int>(p.vertices.size());

  // Enumerate paths of length <= N, ordered by (length, label); trivial
  // paths first in vertex order.
  std::vector<Path> paths;
  for (int v = 0; v < nv; ++v) {
    Path t;
    t.source = t.target = v;
    t.label = path_label(p, t);
    paths.push_back(t);
  }
  std::vector<Path> prev(paths);
  for (int len = 1; len <= N; ++len) {
    std::vector<Path> next;
    for (const Path& q : prev)
      for (size_t ai = 0; ai < p.arrows.size(); ++ai) {
        if (p.arrows[ai].source != q.target) continue;
        Path np;
        np.source = q.source;
        np.target = p.arrows[ai].target;
        np.arrows = q.arrows;
        np.arrows.push_back(static_cast<int>(ai));
        np.label = path_label(p, np);
        next.push_back(std::move(np));
      }
    std::sort(next.begin(), next.end(),
              [](const Path& a, const Path& b) { return a.label < b.label; });
    paths.insert(paths.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  const int np = static_cast<int>(paths.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < np; ++i) index_of[path_key(paths[i])] = i;

  // Elimination coordinates reverse the path order so pivots land on the
  // longest paths and normal forms are spanned by short ones.
  auto ecoord = [np](int pi) { return np - 1 - pi; };
  auto pindex = [np](int e) { return np - 1 - e; };

  // Multiply a vector (over elimination coords) by an arrow, on the left
  // or on the right; paths beyond length N drop out.
  auto arrow_mult = [&](const SVec& v, int arrow, bool left) {
    SVec out;
    for (auto& [e, c] : v) {
      const Path& q = paths[pindex(e)];
      if (static_cast<int>(q.arrows.size()) >= N) continue;
      Path r;
      if (left) {
        if (p.arrows[arrow].source != q.target) continue;
        r.source = q.source;
        r.target = p.arrows[arrow].target;
        r.arrows = q.arrows;
        r.arrows.push_back(arrow);
      } else {
        if (p.arrows[arrow].target != q.source) continue;
        r.source = p.arrows[arrow].source;
        r.target = q.target;
        r.arrows.assign(1, arrow);
        r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
      }
      out.emplace_back(ecoord(index_of.at(path_key(r))), c);
    }
    std::sort(out.begin(), out.end());
    // merge duplicates (cannot occur for path concatenation, kept for safety)
    return out;
  };

  SparseEchelon ideal(np, f);
  std::deque<SVec> work;
  for (const Relation& rel : p.relations) {
    SVec v;
    for (const RelationTerm& t : rel) {
      if (static_cast<int>(t.arrows.size()) > N) continue;  // zero in the truncation
      Path q;
      q.source = p.arrows[t.arrows.front()].source;
      q.target = p.arrows[t.arrows.back()].target;
      q.arrows = t.arrows;
      v.emplace_back(ecoord(index_of.at(path_key(q))), t.coeff);
    }
    std::sort(v.begin(), v.end());
    SVec merged;
    for (auto& [e, c] : v) {
      if (!merged.empty() && merged.back().first == e)
        merged.back().second = f.add(merged.back().second, c);
      else
        merged.emplace_back(e, c);
    }
    std::erase_if(merged, [](auto& pr) { return pr.second == 0; });
    if (ideal.insert(merged)) work.push_back(merged);
  }
  // close under left/right multiplication by arrows
  while (!work.empty()) {
    SVec v = work.front();
    work.pop_front();
    for (size_t ai = 0; ai < p.arrows.size(); ++ai)
      for (bool left : {true, false}) {
        SVec m = arrow_mult(v, static_cast<int>(ai), left);
        if (!m.empty() && ideal.insert(m)) work.push_back(m);
      }
  }

  // Certificate that the cap is high enough: every path of full length N
  // must vanish modulo the ideal.
  for (int pi = 0; pi < np; ++pi) {
    if (static_cast<int>(paths[pi].arrows.size()) != N) continue;
    SVec unitv(1, {ecoord(pi), Scalar(1)});
    if (!ideal.reduce(unitv).empty())
      throw Error(ErrorKind::Invalid,
                  "CapNotNilpotent: path " + paths[pi].label +
                      " of length equal to nilpotency_cap does not vanish; raise the cap or "
                      "the algebra is infinite-dimensional");
  }

  // Standard basis: non-pivot paths of length < N, in path order.
  std::vector<bool> pivot(np, false);
  for (int c : ideal.pivot_cols()) pivot[c] = true;
  std::vector<int> std_paths;  // path indices
  std::vector<int> coord_of_path(np, -1);
  for (int pi = 0; pi < np; ++pi) {
    if (static_cast<int>(paths[pi].arrows.size()) >= N) continue;
    if (pivot[ecoord(pi)]) continue;
    coord_of_path[pi] = static_cast<int>(std_paths.size());
    std_paths.push_back(pi);
  }
  const int d = static_cast<int>(std_paths.size());

  auto normal_form = [&](const Path& q) -> SVec {
    auto it = index_of.find(path_key(q));
    if (it == index_of.end()) return {};  // longer than N: zero
    SVec v(1, {ecoord(it->second), Scalar(1)});
    SVec red = ideal.reduce(v);
    SVec out;
    for (auto& [e, c] : red) {
      int ci = coord_of_path[pindex(e)];
      if (ci < 0)
        throw Error(ErrorKind::Internal, "normal form touches a non-standard path");
      out.emplace_back(ci, c);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<std::vector<SVec>> structure(d, std::vector<SVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Path& pi_ = paths[std_paths[i]];
      const Path& pj = paths[std_paths[j]];
      // b_i * b_j = composite p_i after p_j
      if (pj.target != pi_.source) continue;
      Path comp;
      comp.source = pj.source;
      comp.target = pi_.target;
      comp.arrows = pj.arrows;
      comp.arrows.insert(comp.arrows.end(), pi_.arrows.begin(), pi_.arrows.end());
      structure[i][j] = normal_form(comp);
    }

  std::vector<std::string> labels;
  for (int pi : std_paths) labels.push_back(paths[pi].label);
  std::vector<Scalar> unit(d, Scalar(0));
  std::vector<std::vector<Scalar>> idems;
  for (int v = 0; v < nv; ++v) {
    std::vector<Scalar> e(d, Scalar(0));
    int ci = coord_of_path[v];  // trivial paths are the first nv path indices
    if (ci < 0) throw Error(ErrorKind::Internal, "trivial path eliminated by the ideal");
    e[ci] = 1;
    unit[ci] = 1;
    idems.push_back(std::move(e));
  }

  AlgebraPtr a = make_algebra(f, std::move(labels), std::move(structure), std::move(unit),
                              std::move(idems), /*primitive=*/true);
  // Radical of a bound quiver algebra: the arrow ideal, i.e. every
  // non-trivial standard path.
  Matrix radgen(d - nv, d, f);
  int r = 0;
  for (int i = 0; i < d; ++i)
    if (!paths[std_paths[i]].arrows.empty()) radgen.at(r++, i) = 1;
  a->set_radical(Subspace(d, radgen));
  return a;
}

CornerResult corner_algebra(const AlgebraPtr& a, const std::vector<int>& idem_subset) {
  std::vector<int> subset = idem_subset;
  std::sort(subset.begin(), subset.end());
  if (std::unique(subset.begin(), subset.end()) != subset.end())
    throw Error(ErrorKind::Invalid, "NotIdempotentSubset: duplicate idempotent index");
  std::vector<Scalar> e = a->idempotent_sum(subset);
  const Field& f = a->field;

  // Image of x -> e x e on the basis.
  Matrix le = a->left_mult(e), re = a->right_mult(e);
  Matrix both = le * re;  // e * x * e as operator
  SparseEchelon ech(a->dim, f);
  for (int i = 0; i < a->dim; ++i) {
    auto v = mat_vec(both, a->basis_vec(i));
    ech.insert(to_sparse(v));
  }
  Subspace sub = ech.to_subspace();
  const int d = sub.dim();
  Matrix inclusion = sub.basis();

  auto coords = [&](const std::vector<Scalar>& x) {
    // subspace basis is RREF, so coordinates are the pivot entries
    SVec out;
    for (int i = 0; i < d; ++i)
      if (x[sub.pivots()[i]] != 0) out.emplace_back(i, x[sub.pivots()[i]]);
    return out;
  };

  std::vector<std::vector<SVec>> structure(d, std::vector<SVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto prod = a->mul(inclusion.row(i), inclusion.row(j));
      if (!sub.contains(prod))
        throw Error(ErrorKind::Internal, "corner subspace not closed under multiplication");
      structure[i][j] = coords(prod);
    }

  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    // Reuse the big algebra's label when the basis row is a unit vector.
    auto row = inclusion.row(i);
    int nz = -1;
    bool unitvec = true;
    for (int c = 0; c < a->dim; ++c) {
      if (row[c] == 0) continue;
      if (nz >= 0 || row[c] != 1) {
        unitvec = false;
        break;
      }
      nz = c;
    }
    labels.push_back(unitvec && nz >= 0 ? a->basis_labels[nz] : "c" + std::to_string(i));
  }

  std::vector<Scalar> unit(d, Scalar(0));
  {
    auto cu = coords(e);
    for (auto& [i, c] : cu) unit[i] = c;
  }
  std::vector<std::vector<Scalar>> idems;
  for (int s : subset) {
    std::vector<Scalar> ei(d, Scalar(0));
    for (auto& [i, c] : coords(a->idempotents[s])) ei[i] = c;
    idems.push_back(std::move(ei));
  }

  AlgebraPtr corner = make_algebra(f, std::move(labels), std::move(structure), std::move(unit),
                                   std::move(idems), a->idempotents_primitive);
  if (auto rad = a->known_radical()) {
    Matrix rg(rad->dim(), d, f);
    for (int i = 0; i < rad->dim(); ++i) {
      auto v = mat_vec(both, rad->basis().row(i));
      for (auto& [j, c] : coords(v)) rg.at(i, j) = c;
    }
    corner->set_radical(Subspace(d, rg));
  }
  return CornerResult{corner, inclusion, subset};
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  std::vector<std::vector<SVec>> structure(a->dim, std::vector<SVec>(a->dim));
  for (int i = 0; i < a->dim; ++i)
    for (int j = 0; j < a->dim; ++j) structure[i][j] = a->structure[j][i];
  AlgebraPtr op = make_algebra(a->field, a->basis_labels, std::move(structure), a->unit,
                               a->idempotents, a->idempotents_primitive);
  if (auto rad = a->known_radical()) op->set_radical(*rad);
  return op;
}

std::vector<std::string> validate_algebra(const Algebra& a) {
  std::vector<std::string> out;
  const Field& f = a.field;
  auto sv_of = [&](int i) { return a.basis_vec(i); };
  // associativity on all basis triples
  for (int i = 0; i < a.dim && out.size() < 20; ++i)
    for (int j = 0; j < a.dim && out.size() < 20; ++j) {
      auto ij = a.mul(sv_of(i), sv_of(j));
      for (int k = 0; k < a.dim; ++k) {
        auto l = a.mul(ij, sv_of(k));
        auto r = a.mul(sv_of(i), a.mul(sv_of(j), sv_of(k)));
        if (l != r) {
          out.push_back("associativity fails at basis triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
          break;
        }
      }
    }
  for (int i = 0; i < a.dim; ++i) {
    if (a.mul(a.unit, sv_of(i)) != sv_of(i) || a.mul(sv_of(i), a.unit) != sv_of(i)) {
      out.push_back("unit is not a two-sided identity at basis " + std::to_string(i));
      break;
    }
  }
  std::vector<Scalar> sum(a.dim, Scalar(0));
  for (size_t i = 0; i < a.idempotents.size(); ++i) {
    for (int k = 0; k < a.dim; ++k) sum[k] = f.add(sum[k], a.idempotents[i][k]);
    for (size_t j = 0; j < a.idempotents.size(); ++j) {
      auto prod = a.mul(a.idempotents[i], a.idempotents[j]);
      auto expect = i == j ? a.idempotents[i] : std::vector<Scalar>(a.dim, Scalar(0));
      if (prod != expect)
        out.push_back("idempotent axiom fails at pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    }
  }
  if (sum != a.unit) out.push_back("idempotents do not sum to the unit");
  return out;
}

}  // namespace mk
