#include "core/fixtures.hpp"

#include <algorithm>

#include "core/homological.hpp"

namespace mk {

namespace {

QuiverPresentation ex14() {
  QuiverPresentation p;
  p.field = Field{0};
  p.vertices = {"1", "2", "3"};
  p.arrows = {{"a1", 0, 1}, {"a2", 1, 2}};
  p.relations = {{{Scalar(1), {0, 1}}}};  // a2 a1 = 0
  p.nilpotency_cap = 3;
  return p;
}

QuiverPresentation ex15() {
  QuiverPresentation p;
  p.field = Field{0};
  p.vertices = {"1", "2", "3"};
  p.arrows = {{"alpha", 0, 1}, {"beta", 1, 0}, {"gamma", 1, 2}, {"theta", 2, 1}};
  // gamma.alpha = beta.theta = alpha.beta = gamma.theta = 0
  p.relations = {{{Scalar(1), {0, 2}}},
                 {{Scalar(1), {3, 1}}},
                 {{Scalar(1), {1, 0}}},
                 {{Scalar(1), {3, 2}}}};
  p.nilpotency_cap = 4;
  return p;
}

QuiverPresentation selfinj_x2() {  // k[x]/(x^2)
  QuiverPresentation p;
  p.field = Field{0};
  p.vertices = {"1"};
  p.arrows = {{"x", 0, 0}};
  p.relations = {{{Scalar(1), {0, 0}}}};
  p.nilpotency_cap = 2;
  return p;
}

QuiverPresentation kxk() {  // k x k
  QuiverPresentation p;
  p.field = Field{0};
  p.vertices = {"1", "2"};
  p.nilpotency_cap = 2;
  return p;
}

QuiverPresentation kx_cubed() {  // k[x]/(x^3)
  QuiverPresentation p;
  p.field = Field{0};
  p.vertices = {"1"};
  p.arrows = {{"x", 0, 0}};
  p.relations = {{{Scalar(1), {0, 0, 0}}}};
  p.nilpotency_cap = 3;
  return p;
}

QuiverPresentation kxk_x2() {  // k x k[x]/(x^2)
  QuiverPresentation p;
  p.field = Field{0};
  p.vertices = {"1", "2"};
  p.arrows = {{"x", 1, 1}};
  p.relations = {{{Scalar(1), {0, 0}}}};
  p.nilpotency_cap = 2;
  return p;
}

AlgebraPtr auslander_x2() {
  // End over k[x]/(x^2) of (regular + simple), idempotents lifted; dim 5.
  AlgebraPtr base = build_algebra(selfinj_x2());
  Module reg = regular_module(base, Side::Left);
  Module simple = quotient_module(reg, radical_submodule(reg)).module;
  Module gen = direct_sum({reg, simple}).sum;
  return lift_primitive_idempotents(end_algebra(gen).algebra);
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"ex14", "ex15", "selfinj-x2", "auslander-x2", "kxk", "kx-cubed", "kxk-x2"};
}

bool is_fixture(const std::string& name) {
  auto names = fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

QuiverPresentation fixture_presentation(const std::string& name) {
  if (name == "ex14") return ex14();
  if (name == "ex15") return ex15();
  if (name == "selfinj-x2") return selfinj_x2();
  if (name == "kxk") return kxk();
  if (name == "kx-cubed") return kx_cubed();
  if (name == "kxk-x2") return kxk_x2();
  if (name == "auslander-x2")
    throw Error(ErrorKind::Invalid, "auslander-x2 has no quiver presentation");
  throw Error(ErrorKind::Invalid, "unknown fixture: " + name);
}

AlgebraPtr fixture_algebra(const std::string& name) {
  if (name == "auslander-x2") return auslander_x2();
  return build_algebra(fixture_presentation(name));
}

namespace {

int vertex_index(const AlgebraPtr& a, const std::vector<std::string>& names,
                 const std::string& label) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == label) return static_cast<int>(i);
  // fall back to a 1-based index
  try {
    size_t pos = 0;
    int idx = std::stoi(label, &pos);
    if (pos == label.size() && idx >= 1 && idx <= static_cast<int>(a->idempotents.size()))
      return idx - 1;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Invalid, "module spec: unknown vertex '" + label + "'");
}

}  // namespace

Module parse_module_spec(const AlgebraPtr& a, const std::vector<std::string>& vertex_names,
                         const std::string& spec) {
  std::vector<Module> parts;
  std::string term;
  std::vector<std::string> terms;
  for (char c : spec) {
    if (c == '+') {
      terms.push_back(term);
      term.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      term.push_back(c);
    }
  }
  terms.push_back(term);
  for (const std::string& t : terms) {
    if (t.empty()) throw Error(ErrorKind::Invalid, "module spec: empty term");
    if (t == "regular") {
      parts.push_back(regular_module(a, Side::Left));
      continue;
    }
    if (t == "D(regular)") {
      parts.push_back(dual_module(regular_module(a, Side::Right)));
      continue;
    }
    char kind = t[0];
    if (kind != 'P' && kind != 'I' && kind != 'S')
      throw Error(ErrorKind::Invalid, "module spec: bad term '" + t + "'");
    int v = vertex_index(a, vertex_names, t.substr(1));
    if (kind == 'P') {
      parts.push_back(projective_indecomposable(a, v));
    } else if (kind == 'I') {
      parts.push_back(injective_indecomposable(a, v));
    } else {
      Module p = projective_indecomposable(a, v);
      parts.push_back(quotient_module(p, radical_submodule(p)).module);
    }
  }
  if (parts.size() == 1) return parts[0];
  return direct_sum(parts).sum;
}

}  // namespace mk
