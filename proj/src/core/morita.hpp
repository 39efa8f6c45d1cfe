#pragma once

#include <map>

#include "core/homological.hpp"

namespace mk {

// Schur functor Hom_A(P,-): left A-modules to left modules over
// B = End_A(P)^op.
Module schur_apply(const Module& p, const Module& m);

// Nakayama functor DA (x)_A - and its right adjoint Hom_A(DA, -).
Module nakayama(const Module& m);
Module inverse_nakayama(const Module& m);

struct CoverVerdict {
  bool holds = false;
  // the three equivalent tests, evaluated independently
  bool canonical_map = false;  // A -> End_B(Hom_A(P,A))^op bijective
  bool unit_iso = false;       // unit M -> Hom_B(Hom_A(P,A), Hom_A(P,M)) iso on each Ae_i
  bool full_faithful = false;  // Hom_A(Ae_i,Ae_j) -> Hom_B(FAe_i,FAe_j) bijective
  int dim_a = 0, dim_b = 0, dim_fa = 0;
  // when full_faithful fails: the witnessing projective pair and what broke
  std::optional<std::pair<int, int>> witness_pair;
  bool witness_full = true, witness_faithful = true;
};

// fast = evaluate only the canonical-map criterion.
CoverVerdict cover_check(const AlgebraPtr& a, const Module& p, bool fast = false);

// Collapses a projective module to an idempotent subset e with
// add(Ae) = add(p).
std::vector<int> reduce_cover_to_idempotent(const AlgebraPtr& a, const Module& p);

// Both canonical maps left_alg -> End(m as right module) and
// right_alg -> End(m as left module)^op bijective.
bool double_centralizer_check(const Bimodule& m);

// eA as an (eAe, A)-bimodule and Ae as an (A, eAe)-bimodule, for the
// idempotent e given by a subset of the distinguished idempotents.
Bimodule corner_bimodule_eA(const AlgebraPtr& a, const std::vector<int>& subset);
Bimodule corner_bimodule_Ae(const AlgebraPtr& a, const std::vector<int>& subset);

// add-equality of B and DB (quasi-Frobenius; Morita-invariant).
bool is_self_injective(const AlgebraPtr& b);
// module isomorphism B ~ DB (the stronger Frobenius property).
bool is_frobenius_left(const AlgebraPtr& b);

struct MoritaVerdict {
  bool qf3 = false;
  std::optional<Module> chosen_p;
  std::vector<int> chosen_vertices;
  // keys: "i", "iii", "iv", "v", "a'", "b'"; empty when !qf3
  std::map<std::string, bool> conditions;
  bool verdict = false;
  DomdimResult domdim;
};

MoritaVerdict is_morita_algebra(const AlgebraPtr& a, int cap = 10);

struct CommutativeCoverEntry {
  std::vector<int> subset;  // idempotent indices
  bool cover = false;
  bool dims_equal = false;
};
// For each nonempty idempotent subset e of a commutative algebra: is
// (A, Ae) a cover of eAe, and does dim eAe = dim A.  Cover forces equal
// dimensions; a violation is an internal error.
std::vector<CommutativeCoverEntry> commutative_cover_check(const AlgebraPtr& a);

}  // namespace mk
