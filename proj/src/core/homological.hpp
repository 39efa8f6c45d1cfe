#pragma once

#include "core/krullschmidt.hpp"

namespace mk {

Subspace radical_submodule(const Module& m);  // J*M
Subspace socle_submodule(const Module& m);    // annihilator of J in M
// Multiplicity of each simple in M / rad M, indexed by vertex.
std::vector<int> top_multiplicities(const Module& m);
std::vector<int> socle_multiplicities(const Module& m);

struct CoverResult {
  Module cover;
  Matrix map;  // dim(M) x dim(cover), surjective
};
CoverResult projective_cover(const Module& m);

struct EnvelopeResult {
  Module envelope;
  Matrix map;  // dim(E) x dim(M), injective, socle onto socle
};
EnvelopeResult injective_envelope(const Module& m);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

struct Resolution {
  Module base;
  std::vector<Module> terms;      // I_0, I_1, ...
  std::vector<Matrix> maps;       // maps[0]: M -> I_0, maps[t]: I_{t-1} -> I_t
  bool complete = false;          // cokernel reached zero within the cap
};
Resolution minimal_injective_resolution(const Module& m, int cap);

struct DomdimResult {
  int value = 0;           // exact value when !at_least
  bool at_least = false;   // true: every computed term up to the cap is projective
  int cap = 0;
  std::optional<int> first_nonprojective;
  Resolution witness;
};
DomdimResult dominant_dimension(const AlgebraPtr& a, int cap);

struct Qf3Result {
  Module module;
  std::vector<int> vertices;  // defining idempotent subset (class representatives)
};
// The sum of the pairwise non-isomorphic projective-injective
// indecomposables, present iff it is faithful.
std::optional<Qf3Result> qf3_minimal_faithful(const AlgebraPtr& a);

}  // namespace mk
