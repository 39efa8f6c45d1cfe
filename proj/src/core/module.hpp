#pragma once

#include <vector>

#include "core/algebra.hpp"

namespace mk {

enum class Side { Left, Right };

// One-sided module given by one action matrix per algebra basis element.
// Left:  act(b_i)*act(b_j) = act(b_i b_j).
// Right: m*b = act(b)*m with act(b_i b_j) = act(b_j)*act(b_i).
struct Module {
  AlgebraPtr algebra;
  Side side = Side::Left;
  int dim = 0;
  std::vector<Matrix> action;

  Matrix act(const std::vector<Scalar>& a) const;
  const Matrix& act_basis(int i) const { return action[i]; }
};

std::vector<std::string> validate_module(const Module& m);

struct ModuleHom {
  Module source, target;  // same algebra, same side
  Matrix matrix;          // dim(target) x dim(source)
};

bool is_intertwiner(const Module& src, const Module& dst, const Matrix& h);

struct Bimodule {
  AlgebraPtr left_alg, right_alg;
  int dim = 0;
  std::vector<Matrix> left_action;   // left module structure over left_alg
  std::vector<Matrix> right_action;  // right module structure over right_alg

  Module as_left() const { return Module{left_alg, Side::Left, dim, left_action}; }
  Module as_right() const { return Module{right_alg, Side::Right, dim, right_action}; }
};

std::vector<std::string> validate_bimodule(const Bimodule& m);

// --- constructions -------------------------------------------------------

Module regular_module(const AlgebraPtr& a, Side side);
Module projective_indecomposable(const AlgebraPtr& a, int vertex);   // A e_i
Module right_projective(const AlgebraPtr& a, int vertex);            // e_i A
Module dual_module(const Module& m);
Module injective_indecomposable(const AlgebraPtr& a, int vertex);    // D(e_i A)
Module zero_module(const AlgebraPtr& a, Side side);

// Reinterpret a right A-module as a left module over the given opposite
// algebra (and back); op must be opposite_algebra(m.algebra).
Module right_as_left_over_op(const Module& m, const AlgebraPtr& op);
Module left_over_op_as_right(const Module& m, const AlgebraPtr& orig);

struct DirectSum {
  Module sum;
  std::vector<ModuleHom> injections;
  std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);

struct SubmoduleResult {
  Module module;
  Matrix inclusion;  // ambient_dim x sub_dim? rows of subspace basis: sub_dim x ambient
};
SubmoduleResult submodule(const Module& m, const Subspace& s);

struct QuotientResult {
  Module module;
  Matrix projection;  // quot_dim x ambient_dim
};
QuotientResult quotient_module(const Module& m, const Subspace& s);

// --- hom machinery -------------------------------------------------------

// Basis of intertwiners together with the coordinate trick: each basis
// element is 1 at "its" free coordinate and 0 at the others, so expressing
// an arbitrary intertwiner is a lookup.
struct HomSpace {
  int src_dim = 0, dst_dim = 0;
  std::vector<Matrix> basis;
  std::vector<int> coord_pos;  // flattened (row*src_dim+col) positions

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Scalar> coords_of(const Matrix& h) const;
};

HomSpace hom_space(const Module& m, const Module& n);

struct EndAlgebra {
  AlgebraPtr algebra;  // End(m)^op: product f*g is the composite g then f
  HomSpace homs;       // basis i of the algebra is the endomorphism homs.basis[i]
};
EndAlgebra end_algebra(const Module& m);

Module tensor_over(const Bimodule& m, const Module& n);

Subspace annihilator(const Module& m);
bool is_faithful(const Module& m);

Bimodule dual_bimodule_of_algebra(const AlgebraPtr& a);  // DA
Bimodule regular_bimodule(const AlgebraPtr& a);          // A as (A,A)-bimodule

}  // namespace mk
