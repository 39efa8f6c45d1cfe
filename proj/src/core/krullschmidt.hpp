#pragma once

#include <vector>

#include "core/module.hpp"

namespace mk {

// Jacobson radical via the trace form of the regular representation.
// Valid in characteristic 0 or p > dim; otherwise UnsupportedCharacteristic.
Subspace algebra_radical(const AlgebraPtr& a);

// Returns the algebra with a complete set of orthogonal primitive
// idempotents (lifted from the semisimple quotient).  Identity on algebras
// that already carry primitive idempotents.
AlgebraPtr lift_primitive_idempotents(const AlgebraPtr& b);

// Complete set of orthogonal primitive idempotents of a split semisimple
// algebra, as coefficient vectors.
std::vector<std::vector<Scalar>> semisimple_primitive_idempotents(const AlgebraPtr& s);

struct Summand {
  Module module;
  Matrix inclusion;   // dim(M) x dim(summand)
  Matrix projection;  // dim(summand) x dim(M)
  int group = 0;      // index into Decomposition::classes
};

struct Decomposition {
  Module module;
  std::vector<Summand> parts;                      // in canonical order
  std::vector<std::pair<Module, int>> classes;     // indecomposable rep, multiplicity
};

Decomposition decompose(const Module& m);

bool is_isomorphic(const Module& x, const Module& y);
// Faster variant when both are known indecomposable.
bool is_isomorphic_indec(const Module& x, const Module& y);

bool add_membership(const Module& x, const Module& m);
bool add_equal(const Module& m, const Module& n);

// True iff End(x) is local (split case: radical of codimension one);
// certifies indecomposability.
bool has_local_endomorphism_algebra(const Module& x);

// dims of M > JM > J^2 M > ... until stable/zero.
std::vector<int> radical_filtration_dims(const Module& m);

// Iso-class partition of the distinguished primitive idempotents:
// classes[i] = smallest vertex index with A e_i isomorphic to A e_classes[i].
std::vector<int> vertex_classes(const AlgebraPtr& a);

// --- exact polynomial helpers (exposed for the test oracles) -------------

// Minimal polynomial (monic, low degree first) of x inside the algebra.
std::vector<Scalar> min_poly(const AlgebraPtr& a, const std::vector<Scalar>& x);
// All rational roots with multiplicities.
std::vector<std::pair<Scalar, int>> rational_roots(const std::vector<Scalar>& monic_poly,
                                                   const Field& f);

}  // namespace mk
