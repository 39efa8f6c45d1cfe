#include "core/fuzz.hpp"

#include <json.hpp>

#include "core/fixtures.hpp"
#include "core/morita.hpp"

namespace mk {

namespace {

using nlohmann::json;

uint64_t rdraw(std::mt19937_64& rng, uint64_t n) { return n ? rng() % n : 0; }

using Path = std::vector<int>;  // arrow indices, application order

std::vector<Path> paths_of_length(const QuiverPresentation& p, int len) {
  std::vector<Path> cur;
  for (size_t i = 0; i < p.arrows.size(); ++i) cur.push_back({static_cast<int>(i)});
  for (int l = 2; l <= len; ++l) {
    std::vector<Path> next;
    for (const Path& path : cur)
      for (size_t i = 0; i < p.arrows.size(); ++i)
        if (p.arrows[i].source == p.arrows[path.back()].target) {
          Path q = path;
          q.push_back(static_cast<int>(i));
          next.push_back(std::move(q));
        }
    cur = std::move(next);
  }
  return cur;
}

bool contains_subpath(const Path& p, const Path& sub) {
  if (sub.size() > p.size()) return false;
  for (size_t s = 0; s + sub.size() <= p.size(); ++s) {
    bool hit = true;
    for (size_t i = 0; i < sub.size(); ++i)
      if (p[s + i] != sub[i]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

// dimension of the monomial algebra: vertices plus surviving paths
int monomial_dim(const QuiverPresentation& p) {
  int d = static_cast<int>(p.vertices.size());
  std::vector<Path> rels;
  for (const auto& r : p.relations) rels.push_back(r[0].arrows);
  for (int l = 1; l < p.nilpotency_cap; ++l)
    for (const Path& path : paths_of_length(p, l)) {
      bool dead = false;
      for (const Path& r : rels)
        if (contains_subpath(path, r)) {
          dead = true;
          break;
        }
      if (!dead) ++d;
    }
  return d;
}

}  // namespace

QuiverPresentation generate_case(std::mt19937_64& rng, const FuzzConfig& cfg) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    QuiverPresentation p;
    p.field = cfg.field;
    int nv = 1 + static_cast<int>(rdraw(rng, static_cast<uint64_t>(cfg.max_vertices)));
    for (int v = 0; v < nv; ++v) p.vertices.push_back(std::to_string(v + 1));
    int na = static_cast<int>(rdraw(rng, static_cast<uint64_t>(cfg.max_arrows) + 1));
    for (int a = 0; a < na; ++a)
      p.arrows.push_back(Arrow{"a" + std::to_string(a + 1),
                               static_cast<int>(rdraw(rng, static_cast<uint64_t>(nv))),
                               static_cast<int>(rdraw(rng, static_cast<uint64_t>(nv)))});
    const int L = cfg.max_relation_length;
    p.nilpotency_cap = L + 2;
    for (int l = 2; l <= L; ++l)
      for (const Path& path : paths_of_length(p, l))
        if (rdraw(rng, 3) == 0) p.relations.push_back({RelationTerm{Scalar(1), path}});
    // all length-(L+1) paths vanish: guarantees admissibility and J^{L+1} = 0
    for (const Path& path : paths_of_length(p, L + 1))
      p.relations.push_back({RelationTerm{Scalar(1), path}});
    if (monomial_dim(p) <= 45) return p;
  }
  // dense fallback, always tiny
  QuiverPresentation p;
  p.field = cfg.field;
  p.vertices = {"1"};
  p.nilpotency_cap = 2;
  return p;
}

namespace {

AlgebraPtr build_case(const QuiverPresentation& p, const FuzzConfig& cfg) {
  AlgebraPtr a = build_algebra(p);
  if (!cfg.corrupt) return a;
  auto structure = a->structure;
  SVec& cell = structure[0][0];
  // bump one structure constant; breaks unitality/associativity
  int col = a->dim - 1;
  bool bumped = false;
  for (auto& [c, s] : cell)
    if (c == col) {
      s = a->field.add(s, Scalar(1));
      bumped = true;
    }
  if (!bumped) cell.emplace_back(col, Scalar(1));
  return make_algebra(a->field, a->basis_labels, std::move(structure), a->unit, a->idempotents,
                      a->idempotents_primitive);
}

struct CheckFail {
  std::string check, detail;
};

std::optional<CheckFail> run_checks(const QuiverPresentation& p, const FuzzConfig& cfg,
                                    uint64_t case_salt) {
  std::mt19937_64 crng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (case_salt + 1)));
  const int cap = 6;
  try {
    AlgebraPtr a = build_case(p, cfg);
    const int nv = static_cast<int>(a->idempotents.size());

    auto va = validate_algebra(*a);
    if (!va.empty()) return CheckFail{"validate", va.front()};
    auto vm = validate_module(regular_module(a, Side::Left));
    auto vmr = validate_module(regular_module(a, Side::Right));
    auto vb = validate_bimodule(dual_bimodule_of_algebra(a));
    if (!vm.empty()) return CheckFail{"validate", vm.front()};
    if (!vmr.empty()) return CheckFail{"validate", vmr.front()};
    if (!vb.empty()) return CheckFail{"validate", vb.front()};

    // (g) Krull-Schmidt certificates on the regular module
    {
      Module reg = regular_module(a, Side::Left);
      Decomposition d = decompose(reg);
      Matrix total(reg.dim, reg.dim, a->field);
      for (const Summand& s : d.parts) {
        if (!(s.projection * s.inclusion == Matrix::identity(s.module.dim, a->field)))
          return CheckFail{"g", "projection*inclusion is not the identity on a summand"};
        total = total + s.inclusion * s.projection;
        if (!has_local_endomorphism_algebra(s.module))
          return CheckFail{"g", "summand endomorphism algebra is not local"};
      }
      if (!(total == Matrix::identity(reg.dim, a->field)))
        return CheckFail{"g", "splitting homs do not sum to the identity"};
    }

    // (d) Nakayama closed form
    for (int i = 0; i < nv; ++i) {
      Module nu = nakayama(projective_indecomposable(a, i));
      Module di = injective_indecomposable(a, i);
      if (!is_isomorphic(nu, di))
        return CheckFail{"d", "nakayama(Ae_" + std::to_string(i + 1) + ") != D(e_" +
                                  std::to_string(i + 1) + "A)"};
    }

    // (c) left/right dominant dimension
    {
      DomdimResult l = dominant_dimension(a, cap);
      DomdimResult r = dominant_dimension(opposite_algebra(a), cap);
      if (l.at_least != r.at_least || (!l.at_least && l.value != r.value))
        return CheckFail{"c", "left and right dominant dimensions differ"};
    }

    // (a) Lemma-4 triple agreement on random projective subsets
    for (int t = 0; t < 3; ++t) {
      std::vector<Module> parts;
      uint64_t mask = 1 + rdraw(crng, (1ULL << nv) - 1);
      for (int i = 0; i < nv; ++i)
        if (mask & (1ULL << i)) parts.push_back(projective_indecomposable(a, i));
      try {
        cover_check(a, direct_sum(parts).sum);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Internal) return CheckFail{"a", e.what()};
        throw;
      }
    }

    // (b) Theorem-1 table agreement
    try {
      is_morita_algebra(a, cap);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Internal) return CheckFail{"b", e.what()};
      throw;
    }

    // (e) Proposition-7 reduction
    {
      std::vector<Module> parts;
      for (int i = 0; i < nv; ++i)
        for (uint64_t c = rdraw(crng, 3); c > 0; --c)
          parts.push_back(projective_indecomposable(a, i));
      if (parts.empty()) parts.push_back(projective_indecomposable(a, 0));
      Module p_mod = direct_sum(parts).sum;
      auto subset = reduce_cover_to_idempotent(a, p_mod);
      std::vector<Module> ae_parts;
      for (int i : subset) ae_parts.push_back(projective_indecomposable(a, i));
      bool c1 = cover_check(a, p_mod).holds;
      bool c2 = cover_check(a, direct_sum(ae_parts).sum).holds;
      if (c1 != c2) return CheckFail{"e", "cover verdict changed under idempotent reduction"};
    }

    // (f) Proposition 9
    {
      auto qf3 = qf3_minimal_faithful(a);
      DomdimResult dd = dominant_dimension(a, cap);
      bool ge2 = dd.at_least || dd.value >= 2;
      if (qf3 && ge2) {
        if (!cover_check(a, inverse_nakayama(qf3->module)).holds)
          return CheckFail{"f", "inverse Nakayama image of the minimal faithful is not a cover"};
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal) return CheckFail{"internal", e.what()};
    if (e.kind() == ErrorKind::Unsupported) return {};  // skip (e.g. small characteristic)
    return CheckFail{"error", e.what()};
  }
  return {};
}

QuiverPresentation drop_arrow(const QuiverPresentation& p, int k) {
  QuiverPresentation q;
  q.field = p.field;
  q.vertices = p.vertices;
  q.nilpotency_cap = p.nilpotency_cap;
  for (size_t i = 0; i < p.arrows.size(); ++i)
    if (static_cast<int>(i) != k) q.arrows.push_back(p.arrows[i]);
  for (const Relation& r : p.relations) {
    bool uses = false;
    for (int ai : r[0].arrows)
      if (ai == k) uses = true;
    if (uses) continue;
    Relation nr = r;
    for (int& ai : nr[0].arrows)
      if (ai > k) --ai;
    q.relations.push_back(std::move(nr));
  }
  return q;
}

QuiverPresentation drop_relation(const QuiverPresentation& p, int k) {
  QuiverPresentation q = p;
  q.relations.erase(q.relations.begin() + k);
  return q;
}

QuiverPresentation shrink_case(QuiverPresentation p, const FuzzConfig& cfg, uint64_t salt,
                               const std::string& check) {
  auto still_fails = [&](const QuiverPresentation& q) {
    try {
      auto f = run_checks(q, cfg, salt);
      return f && f->check == check;
    } catch (...) {
      return false;
    }
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t k = 0; k < p.arrows.size(); ++k) {
      QuiverPresentation q = drop_arrow(p, static_cast<int>(k));
      if (still_fails(q)) {
        p = std::move(q);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (size_t k = 0; k < p.relations.size(); ++k) {
      QuiverPresentation q = drop_relation(p, static_cast<int>(k));
      if (still_fails(q)) {
        p = std::move(q);
        progress = true;
        break;
      }
    }
  }
  return p;
}

}  // namespace

FuzzReport run_suite(const FuzzConfig& cfg) {
  FuzzReport report;
  report.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.case_count; ++i) {
    QuiverPresentation p = generate_case(rng, cfg);
    ++report.cases_run;
    auto fail = run_checks(p, cfg, static_cast<uint64_t>(i));
    if (!fail) continue;
    FuzzViolation v;
    v.case_index = i;
    v.check = fail->check;
    v.detail = fail->detail;
    v.presentation_json = presentation_to_json(p);
    if (cfg.shrink) {
      QuiverPresentation s = shrink_case(p, cfg, static_cast<uint64_t>(i), fail->check);
      v.shrunk_json = presentation_to_json(s);
    }
    report.violations.push_back(std::move(v));
  }
  return report;
}

std::string fuzz_report_json(const FuzzReport& r) {
  json out;
  out["config"] = {{"seed", r.config.seed},
                   {"case_count", r.config.case_count},
                   {"max_vertices", r.config.max_vertices},
                   {"max_arrows", r.config.max_arrows},
                   {"max_relation_length", r.config.max_relation_length},
                   {"field", {{"kind", r.config.field.is_rational() ? "rationals" : "prime_field"},
                              {"characteristic", r.config.field.p}}},
                   {"shrink", r.config.shrink}};
  out["cases_run"] = r.cases_run;
  out["violations"] = json::array();
  for (const FuzzViolation& v : r.violations) {
    json jv;
    jv["case"] = v.case_index;
    jv["check"] = v.check;
    jv["detail"] = v.detail;
    jv["presentation"] = json::parse(v.presentation_json);
    if (!v.shrunk_json.empty()) jv["shrunk"] = json::parse(v.shrunk_json);
    out["violations"].push_back(std::move(jv));
  }
  return out.dump(2) + "\n";
}

}  // namespace mk
