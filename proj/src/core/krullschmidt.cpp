#include "core/krullschmidt.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace mk {

namespace {

void check_characteristic(const AlgebraPtr& a) {
  if (!a->field.is_rational() && a->field.p <= static_cast<unsigned long>(a->dim))
    throw Error(ErrorKind::Unsupported,
                "UnsupportedCharacteristic: radical computation needs characteristic 0 or p > dim");
}

// span{x*y : x in s1, y in s2} inside the algebra
Subspace subspace_product(const AlgebraPtr& a, const Subspace& s1, const Subspace& s2) {
  SparseEchelon ech(a->dim, a->field);
  for (int i = 0; i < s1.dim(); ++i)
    for (int j = 0; j < s2.dim(); ++j)
      ech.insert(to_sparse(a->mul(s1.basis().row(i), s2.basis().row(j))));
  return ech.to_subspace();
}

}  // namespace

Subspace algebra_radical(const AlgebraPtr& a) {
  if (auto r = a->known_radical()) return *r;
  check_characteristic(a);
  const Field& f = a->field;
  // Gram matrix of the trace form: G[i][j] = Tr(L_{b_i} L_{b_j}).
  std::vector<Matrix> lm;
  for (int i = 0; i < a->dim; ++i) lm.push_back(a->left_mult(a->basis_vec(i)));
  Matrix g(a->dim, a->dim, f);
  for (int i = 0; i < a->dim; ++i)
    for (int j = i; j < a->dim; ++j) {
      Scalar tr(0);
      for (int r = 0; r < a->dim; ++r)
        for (int c = 0; c < a->dim; ++c)
          if (lm[i].at(r, c) != 0 && lm[j].at(c, r) != 0)
            tr = f.add(tr, f.mul(lm[i].at(r, c), lm[j].at(c, r)));
      g.at(i, j) = tr;
      g.at(j, i) = tr;
    }
  Subspace rad = kernel(g);
  // The radical is nilpotent; verify.
  Subspace power = rad;
  for (int k = 0; k < a->dim + 1 && power.dim() > 0; ++k) power = subspace_product(a, power, rad);
  if (power.dim() > 0)
    throw Error(ErrorKind::Internal, "trace-form radical is not nilpotent");
  a->set_radical(rad);
  return rad;
}

// ---------------------------------------------------------------------------
// polynomial helpers

namespace {

using Poly = std::vector<Scalar>;  // low degree first, monic for min polys

Scalar poly_eval(const Poly& p, const Scalar& x, const Field& f) {
  Scalar v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = f.add(f.mul(v, x), *it);
  return v;
}

Poly poly_derivative(const Poly& p, const Field& f) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(f.mul(p[i], Scalar(static_cast<long>(i))));
  if (d.empty()) d.push_back(Scalar(0));
  return d;
}

Poly poly_normalize(Poly p, const Field& f) {
  if (p.empty()) p.push_back(Scalar(0));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.back() != 0) {
    Scalar inv = f.inv(p.back());
    for (auto& c : p) c = f.mul(c, inv);
  }
  return p;
}

Poly poly_mod(Poly a, const Poly& b, const Field& f) {
  // b monic
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    Scalar lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
    }
    a.pop_back();
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.size() < b.size()) break;
  }
  if (a.empty()) a.push_back(Scalar(0));
  return a;
}

Poly poly_gcd(Poly a, Poly b, const Field& f) {
  a = poly_normalize(std::move(a), f);
  b = poly_normalize(std::move(b), f);
  while (!(b.size() == 1 && b[0] == 0)) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = poly_normalize(std::move(r), f);
    if (b.back() == 0) break;
  }
  return poly_normalize(std::move(a), f);
}

Poly poly_div_exact(const Poly& a, const Poly& b, const Field& f) {
  // b monic, b | a
  Poly rem = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Scalar(0));
  for (int i = static_cast<int>(a.size()) - static_cast<int>(b.size()); i >= 0; --i) {
    Scalar c = rem[i + b.size() - 1];
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) rem[i + j] = f.sub(rem[i + j], f.mul(c, b[j]));
  }
  return q;
}

// Divisor enumeration for the rational root search.  Trial division only;
// a huge semiprime constant term would make the search incomplete, which
// cannot happen for the small structured inputs this library handles.
std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> fact;
  mpz_class d(2);
  while (d * d <= n && d < 1000000) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) fact.emplace_back(d, e);
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) fact.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fact) {
    size_t sz = divs.size();
    mpz_class pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > 100000)
          throw Error(ErrorKind::Unsupported, "rational root search: too many divisor candidates");
      }
    }
  }
  return divs;
}

Poly matrix_min_poly(const Matrix& z, const Field& f);

}  // namespace

std::vector<std::pair<Scalar, int>> rational_roots(const std::vector<Scalar>& monic_poly,
                                                   const Field& f) {
  Poly p = monic_poly;
  std::vector<std::pair<Scalar, int>> roots;
  auto deflate_all = [&](const Scalar& r) {
    int mult = 0;
    while (p.size() > 1 && poly_eval(p, r, f) == 0) {
      // synthetic division by (x - r)
      Poly q(p.size() - 1, Scalar(0));
      Scalar carry = p.back();
      for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        q[i] = carry;
        carry = f.add(p[i], f.mul(r, carry));
      }
      p = std::move(q);
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  };

  deflate_all(Scalar(0));
  if (p.size() <= 1) return roots;

  if (!f.is_rational()) {
    if (f.p > 65536)
      throw Error(ErrorKind::Unsupported, "root scan over large prime fields is not supported");
    for (unsigned long r = 0; r < f.p && p.size() > 1; ++r) deflate_all(Scalar(static_cast<long>(r)));
    return roots;
  }

  // integer-scale the polynomial
  mpz_class lcm(1);
  for (const Scalar& c : p) {
    mpz_class den = c.get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  std::vector<mpz_class> ip;
  for (const Scalar& c : p) {
    Scalar t = c * Scalar(lcm);
    ip.push_back(t.get_num());
  }
  auto num_divs = positive_divisors(ip.front());
  auto den_divs = positive_divisors(ip.back());
  std::vector<Scalar> candidates;
  for (const mpz_class& nu : num_divs)
    for (const mpz_class& de : den_divs) {
      Scalar q(nu, de);
      q.canonicalize();
      candidates.push_back(q);
      candidates.push_back(-q);
    }
  std::sort(candidates.begin(), candidates.end(),
            [](const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Scalar& r : candidates) {
    if (p.size() <= 1) break;
    deflate_all(r);
  }
  return roots;
}

std::vector<Scalar> min_poly(const AlgebraPtr& a, const std::vector<Scalar>& x) {
  const Field& f = a->field;
  std::vector<std::vector<Scalar>> powers{a->unit};
  std::vector<Scalar> cur = a->unit;
  for (int k = 1; k <= a->dim + 1; ++k) {
    cur = a->mul(cur, x);
    Matrix pm(a->dim, static_cast<int>(powers.size()), f);
    for (int r = 0; r < a->dim; ++r)
      for (size_t c = 0; c < powers.size(); ++c) pm.at(r, static_cast<int>(c)) = powers[c][r];
    Matrix rhs(a->dim, 1, f);
    for (int r = 0; r < a->dim; ++r) rhs.at(r, 0) = cur[r];
    if (auto sol = solve(pm, rhs)) {
      Poly p;
      for (size_t i = 0; i < powers.size(); ++i) p.push_back(f.neg(sol->at(static_cast<int>(i), 0)));
      p.push_back(Scalar(1));
      return p;
    }
    powers.push_back(cur);
  }
  throw Error(ErrorKind::Internal, "minimal polynomial not found within dimension bound");
}

namespace {

Poly matrix_min_poly(const Matrix& z, const Field& f) {
  const int n = z.rows();
  std::vector<Matrix> powers{Matrix::identity(n, f)};
  Matrix cur = Matrix::identity(n, f);
  for (int k = 1; k <= n + 1; ++k) {
    cur = cur * z;
    Matrix pm(n * n, static_cast<int>(powers.size()), f);
    for (size_t c = 0; c < powers.size(); ++c)
      for (int r = 0; r < n; ++r)
        for (int cc = 0; cc < n; ++cc) pm.at(r * n + cc, static_cast<int>(c)) = powers[c].at(r, cc);
    Matrix rhs(n * n, 1, f);
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) rhs.at(r * n + cc, 0) = cur.at(r, cc);
    if (auto sol = solve(pm, rhs)) {
      Poly p;
      for (size_t i = 0; i < powers.size(); ++i) p.push_back(f.neg(sol->at(static_cast<int>(i), 0)));
      p.push_back(Scalar(1));
      return p;
    }
    powers.push_back(cur);
  }
  throw Error(ErrorKind::Internal, "matrix minimal polynomial not found");
}

// uSu with coordinate bookkeeping.
struct Block {
  std::vector<std::vector<Scalar>> basis;  // vectors in S
  Subspace span;

  int dim() const { return static_cast<int>(basis.size()); }
};

Block make_block(const AlgebraPtr& s, const std::vector<Scalar>& u) {
  Block b;
  SparseEchelon ech(s->dim, s->field);
  for (int i = 0; i < s->dim; ++i) ech.insert(to_sparse(s->mul(u, s->mul(s->basis_vec(i), u))));
  b.span = ech.to_subspace();
  for (int i = 0; i < b.span.dim(); ++i) b.basis.push_back(b.span.basis().row(i));
  return b;
}

std::vector<Scalar> block_coords(const Block& b, const std::vector<Scalar>& x) {
  std::vector<Scalar> c(b.dim());
  for (int i = 0; i < b.dim(); ++i) c[i] = x[b.span.pivots()[i]];
  return c;
}

// left multiplication by z restricted to the block, in block coordinates
Matrix block_left_mult(const AlgebraPtr& s, const Block& b, const std::vector<Scalar>& z) {
  Matrix m(b.dim(), b.dim(), s->field);
  for (int j = 0; j < b.dim(); ++j) {
    auto img = s->mul(z, b.basis[j]);
    auto c = block_coords(b, img);
    for (int i = 0; i < b.dim(); ++i) m.at(i, j) = c[i];
  }
  return m;
}

// center of the block as vectors in S
std::vector<std::vector<Scalar>> block_center(const AlgebraPtr& s, const Block& b) {
  const Field& f = s->field;
  const int d = b.dim();
  Matrix sys(d * d * d, d, f);
  int row = 0;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      auto comm = s->mul(b.basis[i], b.basis[j]);
      auto comm2 = s->mul(b.basis[j], b.basis[i]);
      auto cc = block_coords(b, comm);
      auto cc2 = block_coords(b, comm2);
      for (int k = 0; k < d; ++k) sys.at(row + k, i) = f.sub(cc[k], cc2[k]);
    }
    row += d;
  }
  Subspace ker = kernel(sys);
  std::vector<std::vector<Scalar>> out;
  for (int i = 0; i < ker.dim(); ++i) {
    std::vector<Scalar> z(s->dim, Scalar(0));
    for (int j = 0; j < d; ++j) {
      const Scalar& c = ker.basis().at(i, j);
      if (c == 0) continue;
      for (int t = 0; t < s->dim; ++t) z[t] = f.add(z[t], f.mul(c, b.basis[j][t]));
    }
    out.push_back(std::move(z));
  }
  return out;
}

// Polynomial evaluated at z inside S, with u playing the unit.
std::vector<Scalar> poly_at(const AlgebraPtr& s, const Poly& p, const std::vector<Scalar>& z,
                            const std::vector<Scalar>& u) {
  const Field& f = s->field;
  std::vector<Scalar> acc(s->dim, Scalar(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = s->mul(acc, z);
    for (int t = 0; t < s->dim; ++t) acc[t] = f.add(acc[t], f.mul(*it, u[t]));
  }
  return acc;
}

bool is_multiple_of(const std::vector<Scalar>& x, const std::vector<Scalar>& u, const Field& f) {
  // x = c*u for some scalar?
  Scalar c(0);
  bool have = false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (u[i] == 0) {
      if (x[i] != 0) return false;
      continue;
    }
    Scalar q = f.div(x[i], u[i]);
    if (!have) {
      c = q;
      have = true;
    } else if (q != c) {
      return false;
    }
  }
  return true;
}

// Finds a nonzero non-invertible element of the block, or nothing.
std::optional<std::vector<Scalar>> find_zero_divisor(const AlgebraPtr& s, const Block& b,
                                                     const std::vector<Scalar>& u) {
  const Field& f = s->field;
  auto try_elem = [&](const std::vector<Scalar>& z) -> std::optional<std::vector<Scalar>> {
    if (std::all_of(z.begin(), z.end(), [](const Scalar& c) { return c == 0; })) return {};
    if (is_multiple_of(z, u, f)) return {};
    Matrix lm = block_left_mult(s, b, z);
    Poly mu = matrix_min_poly(lm, f);
    if (mu.size() <= 2) {
      // degree 1: z is a multiple of u (should have been caught above)
      return {};
    }
    Poly g = poly_gcd(mu, poly_derivative(mu, f), f);
    if (g.size() > 1) {
      Poly sq = poly_normalize(poly_div_exact(mu, g, f), f);
      auto w = poly_at(s, sq, z, u);  // nilpotent, nonzero
      if (!std::all_of(w.begin(), w.end(), [](const Scalar& c) { return c == 0; })) return w;
    }
    for (auto& [lam, mult] : rational_roots(mu, f)) {
      (void)mult;
      std::vector<Scalar> w(z);
      for (int t = 0; t < s->dim; ++t) w[t] = f.sub(w[t], f.mul(lam, u[t]));
      return w;  // singular and nonzero since deg mu >= 2
    }
    return {};
  };
  for (const auto& z : b.basis)
    if (auto w = try_elem(z)) return w;
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      std::vector<Scalar> zm(s->dim), zp(s->dim);
      for (int t = 0; t < s->dim; ++t) {
        zm[t] = f.sub(b.basis[i][t], b.basis[j][t]);
        zp[t] = f.add(b.basis[i][t], b.basis[j][t]);
      }
      if (auto w = try_elem(zm)) return w;
      if (auto w = try_elem(zp)) return w;
    }
  uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 7) - 3;
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Scalar> z(s->dim, Scalar(0));
    for (const auto& v : b.basis) {
      int c = next();
      if (c == 0) continue;
      for (int t = 0; t < s->dim; ++t) z[t] = f.add(z[t], f.mul(Scalar(c), v[t]));
    }
    if (auto w = try_elem(z)) return w;
  }
  return {};
}

}  // namespace

std::vector<std::vector<Scalar>> semisimple_primitive_idempotents(const AlgebraPtr& s) {
  const Field& f = s->field;
  std::vector<std::vector<Scalar>> done;
  std::deque<std::vector<Scalar>> work{s->unit};
  while (!work.empty()) {
    std::vector<Scalar> u = work.front();
    work.pop_front();
    if (std::all_of(u.begin(), u.end(), [](const Scalar& c) { return c == 0; })) continue;
    Block b = make_block(s, u);
    if (b.dim() == 1) {
      done.push_back(u);
      continue;
    }
    auto center = block_center(s, b);
    bool split = false;
    if (center.size() >= 2) {
      // split central idempotents via eigenprojections of a central element
      for (const auto& z : center) {
        Matrix lm = block_left_mult(s, b, z);
        Poly mu = matrix_min_poly(lm, f);
        if (mu.size() <= 2) continue;
        auto roots = rational_roots(mu, f);
        size_t mults = 0;
        for (auto& [r, m] : roots) mults += static_cast<size_t>(m);
        if (mults + 1 != mu.size())
          throw Error(ErrorKind::Unsupported,
                      "NotSplit: central element has irrational eigenvalues");
        for (auto& [r, m] : roots)
          if (m != 1)
            throw Error(ErrorKind::Internal, "central element of a semisimple block not semisimple");
        for (auto& [lam, m] : roots) {
          (void)m;
          // Lagrange projector onto the lam-eigencomponent
          std::vector<Scalar> e = u;
          for (auto& [mu2, m2] : roots) {
            (void)m2;
            if (mu2 == lam) continue;
            std::vector<Scalar> factor(z);
            for (int t = 0; t < s->dim; ++t) factor[t] = f.sub(factor[t], f.mul(mu2, u[t]));
            Scalar scale = f.inv(f.sub(lam, mu2));
            for (int t = 0; t < s->dim; ++t) factor[t] = f.mul(factor[t], scale);
            e = s->mul(e, factor);
          }
          work.push_back(e);
        }
        split = true;
        break;
      }
      if (!split)
        throw Error(ErrorKind::Internal, "block center of dimension >= 2 with only scalar elements");
      continue;
    }
    // single matrix block: peel off an idempotent via a zero divisor
    auto w = find_zero_divisor(s, b, u);
    if (!w)
      throw Error(ErrorKind::Unsupported,
                  "NotSplit: could not find a zero divisor in a non-trivial simple block");
    // L = block * w; solve x e = x for all x in a basis of L
    SparseEchelon lech(s->dim, f);
    std::vector<std::vector<Scalar>> lbasis;
    for (const auto& x : b.basis) {
      auto v = s->mul(x, *w);
      if (lech.insert(to_sparse(v))) lbasis.push_back(v);
    }
    Subspace lspan = lech.to_subspace();
    const int r = lspan.dim();
    Matrix sys(r * s->dim, r, f), rhs(r * s->dim, 1, f);
    for (int i = 0; i < r; ++i) {
      auto xi = lspan.basis().row(i);
      for (int j = 0; j < r; ++j) {
        auto prod = s->mul(xi, lspan.basis().row(j));
        for (int t = 0; t < s->dim; ++t) sys.at(i * s->dim + t, j) = prod[t];
      }
      for (int t = 0; t < s->dim; ++t) rhs.at(i * s->dim + t, 0) = xi[t];
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw Error(ErrorKind::Internal, "no right identity in a left ideal of a semisimple block");
    std::vector<Scalar> e(s->dim, Scalar(0));
    for (int j = 0; j < r; ++j)
      for (int t = 0; t < s->dim; ++t)
        e[t] = f.add(e[t], f.mul(sol->at(j, 0), lspan.basis().at(j, t)));
    if (s->mul(e, e) != e) throw Error(ErrorKind::Internal, "ideal identity is not idempotent");
    std::vector<Scalar> rest(u);
    for (int t = 0; t < s->dim; ++t) rest[t] = f.sub(rest[t], e[t]);
    work.push_back(e);
    work.push_back(rest);
  }
  return done;
}

AlgebraPtr lift_primitive_idempotents(const AlgebraPtr& b) {
  if (b->idempotents_primitive) return b;
  const Field& f = b->field;
  Subspace rad = algebra_radical(b);
  std::vector<std::vector<Scalar>> prims_in_b;
  if (rad.dim() == 0) {
    prims_in_b = semisimple_primitive_idempotents(b);
  } else {
    // semisimple quotient S = B/rad on the complement coordinates
    std::vector<int> free_cols;
    {
      std::vector<bool> piv(b->dim, false);
      for (int c : rad.pivots()) piv[c] = true;
      for (int c = 0; c < b->dim; ++c)
        if (!piv[c]) free_cols.push_back(c);
    }
    const int q = static_cast<int>(free_cols.size());
    auto project = [&](const std::vector<Scalar>& x) {
      auto red = rad.reduce(x);
      std::vector<Scalar> out(q);
      for (int i = 0; i < q; ++i) out[i] = red[free_cols[i]];
      return out;
    };
    auto lift = [&](const std::vector<Scalar>& x) {
      std::vector<Scalar> out(b->dim, Scalar(0));
      for (int i = 0; i < q; ++i) out[free_cols[i]] = x[i];
      return out;
    };
    std::vector<std::vector<SVec>> structure(q, std::vector<SVec>(q));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        std::vector<Scalar> bi(b->dim, Scalar(0)), bj(b->dim, Scalar(0));
        bi[free_cols[i]] = 1;
        bj[free_cols[j]] = 1;
        structure[i][j] = to_sparse(project(b->mul(bi, bj)));
      }
    std::vector<std::string> labels;
    for (int i = 0; i < q; ++i) labels.push_back("s" + std::to_string(i));
    std::vector<Scalar> unit_s = project(b->unit);
    AlgebraPtr s = make_algebra(f, std::move(labels), std::move(structure), unit_s, {unit_s}, false);
    s->set_radical(Subspace::zero(q, f));

    auto prims_s = semisimple_primitive_idempotents(s);
    // lift each: e <- 3e^2 - 2e^3 converges since rad is nilpotent
    for (const auto& ps : prims_s) {
      std::vector<Scalar> e = lift(ps);
      bool ok = false;
      for (int it = 0; it <= b->dim + 3; ++it) {
        auto e2 = b->mul(e, e);
        if (e2 == e) {
          ok = true;
          break;
        }
        auto e3 = b->mul(e2, e);
        for (int t = 0; t < b->dim; ++t)
          e[t] = f.sub(f.mul(Scalar(3), e2[t]), f.mul(Scalar(2), e3[t]));
      }
      if (!ok) throw Error(ErrorKind::Internal, "idempotent lifting did not converge");
      prims_in_b.push_back(e);
    }
    // orthogonalize sequentially; the last one is forced to 1 - sum
    std::vector<std::vector<Scalar>> ortho;
    std::vector<Scalar> u(b->dim, Scalar(0));
    for (size_t i = 0; i + 1 < prims_in_b.size(); ++i) {
      std::vector<Scalar> cu(b->unit);
      for (int t = 0; t < b->dim; ++t) cu[t] = f.sub(cu[t], u[t]);  // 1 - u
      auto e = b->mul(cu, b->mul(prims_in_b[i], cu));
      bool ok = false;
      for (int it = 0; it <= b->dim + 3; ++it) {
        auto e2 = b->mul(e, e);
        if (e2 == e) {
          ok = true;
          break;
        }
        auto e3 = b->mul(e2, e);
        for (int t = 0; t < b->dim; ++t)
          e[t] = f.sub(f.mul(Scalar(3), e2[t]), f.mul(Scalar(2), e3[t]));
      }
      if (!ok) throw Error(ErrorKind::Internal, "idempotent orthogonalization did not converge");
      ortho.push_back(e);
      for (int t = 0; t < b->dim; ++t) u[t] = f.add(u[t], e[t]);
    }
    std::vector<Scalar> last(b->unit);
    for (int t = 0; t < b->dim; ++t) last[t] = f.sub(last[t], u[t]);
    if (b->mul(last, last) != last)
      throw Error(ErrorKind::Internal, "complement of lifted idempotents is not idempotent");
    ortho.push_back(last);
    prims_in_b = std::move(ortho);
  }
  AlgebraPtr out = make_algebra(f, b->basis_labels, b->structure, b->unit, prims_in_b, true);
  out->set_radical(rad);
  return out;
}

// ---------------------------------------------------------------------------
// module decomposition

std::vector<int> radical_filtration_dims(const Module& m) {
  Subspace j = algebra_radical(m.algebra);
  std::vector<int> dims{m.dim};
  Subspace layer = Subspace::full(m.dim, m.algebra->field);
  while (layer.dim() > 0) {
    SparseEchelon ech(m.dim, m.algebra->field);
    for (int bi = 0; bi < j.dim(); ++bi) {
      Matrix act = m.act(j.basis().row(bi));
      for (int v = 0; v < layer.dim(); ++v) ech.insert(to_sparse(mat_vec(act, layer.basis().row(v))));
    }
    Subspace next = ech.to_subspace();
    if (next.dim() == layer.dim())
      throw Error(ErrorKind::Internal, "radical filtration did not shrink");
    layer = next;
    dims.push_back(layer.dim());
  }
  return dims;
}

bool has_local_endomorphism_algebra(const Module& x) {
  if (x.dim == 0) return false;
  EndAlgebra e = end_algebra(x);
  Subspace rad = algebra_radical(e.algebra);
  return e.algebra->dim - rad.dim() == 1;
}

bool is_isomorphic_indec(const Module& x, const Module& y) {
  if (x.dim != y.dim) return false;
  if (x.dim == 0) return true;
  HomSpace xy = hom_space(x, y);
  if (xy.dim() == 0) return false;
  HomSpace yx = hom_space(y, x);
  if (yx.dim() == 0) return false;
  EndAlgebra ex = end_algebra(x);
  Subspace rad = algebra_radical(ex.algebra);
  for (const Matrix& f : xy.basis)
    for (const Matrix& g : yx.basis) {
      Matrix comp = g * f;  // x -> x
      if (!rad.contains(ex.homs.coords_of(comp))) return true;
    }
  return false;
}

Decomposition decompose(const Module& m) {
  Decomposition out;
  out.module = m;
  if (m.dim == 0) return out;
  EndAlgebra e = end_algebra(m);
  AlgebraPtr lifted = lift_primitive_idempotents(e.algebra);
  const Field& f = m.algebra->field;
  struct RawPart {
    Module module;
    Matrix incl, proj;
    std::vector<int> filt;
    int discovery;
  };
  std::vector<RawPart> parts;
  for (size_t t = 0; t < lifted->idempotents.size(); ++t) {
    // endomorphism idempotent as a matrix on M
    Matrix eps(m.dim, m.dim, f);
    for (int k = 0; k < lifted->dim; ++k) {
      const Scalar& c = lifted->idempotents[t][k];
      if (c != 0) eps = eps + e.homs.basis[k].scaled(c);
    }
    // image of eps is an indecomposable direct summand
    Matrix gens = eps.transpose();  // rows = columns of eps
    Subspace img(m.dim, gens);
    if (img.dim() == 0) throw Error(ErrorKind::Internal, "primitive idempotent with zero image");
    auto sub = submodule(m, img);
    Matrix incl = sub.inclusion.transpose();  // dim(M) x dim(sub)
    Matrix proj(img.dim(), m.dim, f);
    for (int i = 0; i < img.dim(); ++i)
      for (int c = 0; c < m.dim; ++c) proj.at(i, c) = eps.at(img.pivots()[i], c);
    parts.push_back(RawPart{sub.module, std::move(incl), std::move(proj),
                            radical_filtration_dims(sub.module), static_cast<int>(t)});
  }
  std::stable_sort(parts.begin(), parts.end(), [](const RawPart& a, const RawPart& b) {
    if (a.module.dim != b.module.dim) return a.module.dim < b.module.dim;
    if (a.filt != b.filt) return a.filt < b.filt;
    return a.discovery < b.discovery;
  });
  for (auto& p : parts) {
    int cls = -1;
    for (size_t c = 0; c < out.classes.size(); ++c)
      if (out.classes[c].first.dim == p.module.dim &&
          is_isomorphic_indec(out.classes[c].first, p.module)) {
        cls = static_cast<int>(c);
        break;
      }
    if (cls < 0) {
      cls = static_cast<int>(out.classes.size());
      out.classes.emplace_back(p.module, 0);
    }
    out.classes[cls].second += 1;
    out.parts.push_back(Summand{std::move(p.module), std::move(p.incl), std::move(p.proj), cls});
  }
  return out;
}

bool is_isomorphic(const Module& x, const Module& y) {
  if (x.dim != y.dim) return false;
  if (x.dim == 0) return true;
  Decomposition dx = decompose(x), dy = decompose(y);
  if (dx.classes.size() != dy.classes.size()) return false;
  std::vector<bool> used(dy.classes.size(), false);
  for (auto& [xc, xm] : dx.classes) {
    bool found = false;
    for (size_t j = 0; j < dy.classes.size(); ++j) {
      if (used[j] || dy.classes[j].second != xm) continue;
      if (is_isomorphic_indec(xc, dy.classes[j].first)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool add_membership(const Module& x, const Module& m) {
  if (x.dim == 0) return true;
  Decomposition dx = decompose(x), dm = decompose(m);
  for (auto& [xc, xmult] : dx.classes) {
    (void)xmult;
    bool found = false;
    for (auto& [mc, mmult] : dm.classes) {
      (void)mmult;
      if (xc.dim == mc.dim && is_isomorphic_indec(xc, mc)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool add_equal(const Module& m, const Module& n) { return add_membership(m, n) && add_membership(n, m); }

std::vector<int> vertex_classes(const AlgebraPtr& a) {
  if (auto c = a->known_vertex_classes()) return *c;
  if (!a->idempotents_primitive)
    throw Error(ErrorKind::Invalid, "vertex classes need primitive idempotents");
  const int n = static_cast<int>(a->idempotents.size());
  Subspace rad = algebra_radical(a);
  auto linked = [&](int i, int j) {
    // A e_i isomorphic to A e_j iff e_i (A/J) e_j != 0
    for (int k = 0; k < a->dim; ++k) {
      auto v = a->mul(a->idempotents[i], a->mul(a->basis_vec(k), a->idempotents[j]));
      auto red = rad.reduce(v);
      if (!std::all_of(red.begin(), red.end(), [](const Scalar& c) { return c == 0; })) return true;
    }
    return false;
  };
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) {
    cls[i] = i;
    for (int j = 0; j < i; ++j)
      if (cls[j] == j && linked(j, i)) {
        cls[i] = j;
        break;
      }
  }
  a->set_vertex_classes(cls);
  return cls;
}

}  // namespace mk
