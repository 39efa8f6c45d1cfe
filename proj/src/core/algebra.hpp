#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/presentation.hpp"

namespace mk {

using SVec = SparseEchelon::SparseVec;  // sparse coefficient vector

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional unital algebra by structure constants, with a
// distinguished complete set of orthogonal idempotents.  Immutable after
// construction; the lazy caches are mutex-guarded.
class Algebra {
 public:
  Field field;
  int dim = 0;
  std::vector<std::string> basis_labels;
  // structure[i][j] = b_i * b_j in basis coordinates (b_i composed after b_j)
  std::vector<std::vector<SVec>> structure;
  std::vector<Scalar> unit;
  std::vector<std::vector<Scalar>> idempotents;
  bool idempotents_primitive = false;

  std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  Matrix left_mult(const std::vector<Scalar>& x) const;   // y -> x*y
  Matrix right_mult(const std::vector<Scalar>& x) const;  // y -> y*x
  std::vector<Scalar> basis_vec(int i) const;
  std::vector<Scalar> idempotent_sum(const std::vector<int>& subset) const;

  // Small generating set (basis indices); every intertwining constraint
  // only needs to hold on these.
  const std::vector<int>& generators() const;

  // Jacobson radical; computed from the presentation when known, else via
  // the trace form (module krullschmidt fills this in).
  std::optional<Subspace> known_radical() const;
  void set_radical(Subspace s) const;

  // Iso-class partition of the distinguished idempotents: class id per
  // vertex, filled in lazily by the decomposition machinery.
  std::optional<std::vector<int>> known_vertex_classes() const;
  void set_vertex_classes(std::vector<int> c) const;

 private:
  mutable std::mutex mu_;
  mutable std::optional<Subspace> radical_;
  mutable std::optional<std::vector<int>> generators_;
  mutable std::optional<std::vector<int>> vertex_classes_;
};

struct CornerResult {
  AlgebraPtr algebra;
  Matrix inclusion;          // corner basis rows as vectors in the big algebra
  std::vector<int> subset;   // selected distinguished idempotents
};

AlgebraPtr build_algebra(const QuiverPresentation& p);
CornerResult corner_algebra(const AlgebraPtr& a, const std::vector<int>& idem_subset);
AlgebraPtr opposite_algebra(const AlgebraPtr& a);
std::vector<std::string> validate_algebra(const Algebra& a);

// Structure-constant algebra assembled from explicit data (used for
// endomorphism algebras and quotients).
AlgebraPtr make_algebra(Field f, std::vector<std::string> labels,
                        std::vector<std::vector<SVec>> structure, std::vector<Scalar> unit,
                        std::vector<std::vector<Scalar>> idempotents, bool primitive);

}  // namespace mk
