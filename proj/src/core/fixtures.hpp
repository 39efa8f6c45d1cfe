#pragma once

#include <string>

#include "core/module.hpp"

namespace mk {

// Built-in inputs: ex14, ex15, selfinj-x2, auslander-x2, plus the small
// commutative algebras kxk, kx-cubed, kxk-x2 used by the property suites.
std::vector<std::string> fixture_names();
bool is_fixture(const std::string& name);

// Presentation-backed fixtures; throws Invalid for auslander-x2 (which only
// exists as structure constants).
QuiverPresentation fixture_presentation(const std::string& name);
AlgebraPtr fixture_algebra(const std::string& name);

// Module spec grammar for the CLI: "regular", "D(regular)", or '+'-joined
// terms P<v>, I<v>, S<v> with v a vertex label (falls back to the 1-based
// idempotent index).  Always produces a left module.
Module parse_module_spec(const AlgebraPtr& a, const std::vector<std::string>& vertex_names,
                         const std::string& spec);

}  // namespace mk
