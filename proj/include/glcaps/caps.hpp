#pragma once

// Cap diagrams c_lambda and cap codiagrams co_mu on a linearised arrow
// diagram, their overlays on a second weight, and the dagger involution.

#include <vector>

#include "glcaps/diagrams.hpp"

namespace glcaps {

enum class CapKind { Cap, Cocap };

// 0-based positions in the linearised string, left < right.
struct Cap {
  int left = 0;
  int right = 0;
  Side side = Side::Left;

  auto operator<=>(const Cap&) const = default;
};

enum class CapOrientation { Anticlockwise, Clockwise, Unoriented };

struct CapDiagram {
  DiagramString base;
  std::vector<Cap> caps;  // sorted by left endpoint
  CapKind kind = CapKind::Cap;
};

// Stack matching per side: kind Cap joins ∨ (left) to ∧ (right), kind Cocap
// joins ∧ to ∨. Crosses and empty nodes are transparent.
CapDiagram form_caps(const DiagramString& base, CapKind kind);

// Both throw InvalidParams unless the weight lies in Lambda(s1, s2).
CapDiagram cap_diagram(const DominantWeight& lambda, int s1, int s2, int p);
CapDiagram co_diagram(const DominantWeight& mu, int s1, int s2, int p);

// Same caps on top of another diagram. Throws IncompatibleDiagrams unless the
// single / cross / empty pattern and the walls agree.
CapDiagram overlay(const CapDiagram& caps, const DiagramString& other);

// c_{lambda mu} and co_{mu lambda}. Throw IncompatibleDiagrams unless mu ≼ lambda.
CapDiagram cap_overlay(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p);
CapDiagram cocap_overlay(const DominantWeight& mu, const DominantWeight& lambda, int s1, int s2, int p);

CapOrientation orientation(const CapDiagram& d, const Cap& cap);
bool is_oriented(const CapDiagram& d);

// Flip every single arrow of the (s, s)-diagram. Throws InvalidParams unless
// lambda lies in Lambda(s, s).
DominantWeight dagger(const DominantWeight& lambda, int s, int p);

}  // namespace glcaps
