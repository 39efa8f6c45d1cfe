#pragma once

#include <string>
#include <vector>

#include "core/field.hpp"

namespace mk {

struct Arrow {
  std::string name;
  int source = 0;  // vertex index
  int target = 0;
};

// One summand of a relation: coeff * path.  Arrows are stored in order of
// application (first-applied first); the JSON wire format lists them
// right-to-left like morphism composition, so the parser reverses.
struct RelationTerm {
  Scalar coeff;
  std::vector<int> arrows;  // arrow indices, application order
};

using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  Field field;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int nilpotency_cap = 2;

  void validate() const;  // throws Error(Schema) on broken invariants
};

// JSON wire format (see README): parse/serialize round-trips losslessly.
QuiverPresentation parse_presentation(const std::string& json_text);
std::string presentation_to_json(const QuiverPresentation& p);

}  // namespace mk
