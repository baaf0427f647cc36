#pragma once

#include <vector>

#include "gdep/atoms.hpp"
#include "gdep/logic.hpp"

namespace gdep {

// dep(x ; y) is team-equivalent to the conjunction of gdep(yi ; x) over
// the members yi of y. An empty y yields the empty set (always true).
AtomSet fdep_to_gdeps(const FAtom& atom);

// gdep(x ; y) is team-equivalent to the conjunction of
// dep((x - xi) y ; xi) over the members xi of x. An empty x yields the
// empty set (always true).
std::vector<FAtom> gdep_to_fdeps(const GAtom& atom);

enum class RewriteDirection { kToGdep, kToFdep };

// Replaces every atom of the source kind by the conjunction of its
// translation, preserving team semantics. An atom whose translation is
// empty is dropped from its parent conjunction when possible and
// otherwise becomes the identity literal v = v on one of its own
// variables; the variable-free atoms gdep( ; ) and dep( ; ) fall back to
// the always-true empty atom of the target kind.
Formula rewrite_formula(const Formula& formula, RewriteDirection direction);

}  // namespace gdep
