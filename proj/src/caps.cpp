#include "glcaps/caps.hpp"

#include <algorithm>

#include "glcaps/error.hpp"

namespace glcaps {

namespace {

bool is_arrow(Symbol s) { return s == Symbol::Down || s == Symbol::Up; }

void require_in_lambda(const DominantWeight& lambda, int s1, int s2, int p) {
  if (!in_Lambda_s1s2(lambda, s1, s2, p)) throw InvalidParams("weight is not in Lambda(s1, s2)");
}

}  // namespace

CapDiagram form_caps(const DiagramString& base, CapKind kind) {
  const Symbol opener = kind == CapKind::Cap ? Symbol::Down : Symbol::Up;
  const Symbol closer = kind == CapKind::Cap ? Symbol::Up : Symbol::Down;
  CapDiagram out{base, {}, kind};
  std::vector<int> stack;
  for (int pos = 0; pos < base.p; ++pos) {
    if (pos == base.wall) stack.clear();
    const Symbol s = base.symbols[pos];
    if (s == opener) {
      stack.push_back(pos);
    } else if (s == closer && !stack.empty()) {
      out.caps.push_back({stack.back(), pos, base.side_of(pos)});
      stack.pop_back();
    }
  }
  std::sort(out.caps.begin(), out.caps.end());
  return out;
}

CapDiagram cap_diagram(const DominantWeight& lambda, int s1, int s2, int p) {
  require_in_lambda(lambda, s1, s2, p);
  return form_caps(diagram_string(lambda, s1, s2, p), CapKind::Cap);
}

CapDiagram co_diagram(const DominantWeight& mu, int s1, int s2, int p) {
  require_in_lambda(mu, s1, s2, p);
  return form_caps(diagram_string(mu, s1, s2, p), CapKind::Cocap);
}

CapDiagram overlay(const CapDiagram& caps, const DiagramString& other) {
  const DiagramString& base = caps.base;
  if (base.p != other.p || base.shift != other.shift || base.wall != other.wall)
    throw IncompatibleDiagrams("diagrams have different walls");
  for (int pos = 0; pos < base.p; ++pos) {
    const Symbol a = base.symbols[pos];
    const Symbol b = other.symbols[pos];
    if (is_arrow(a) != is_arrow(b) || (!is_arrow(a) && a != b))
      throw IncompatibleDiagrams("single/cross/empty patterns differ at position " + std::to_string(pos + 1));
  }
  CapDiagram out = caps;
  out.base = other;
  return out;
}

CapDiagram cap_overlay(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p) {
  if (!preceq(mu, lambda, s1, s2, p)) throw IncompatibleDiagrams("mu is not ≼ lambda");
  return overlay(cap_diagram(lambda, s1, s2, p), diagram_string(mu, s1, s2, p));
}

CapDiagram cocap_overlay(const DominantWeight& mu, const DominantWeight& lambda, int s1, int s2, int p) {
  if (!preceq(mu, lambda, s1, s2, p)) throw IncompatibleDiagrams("mu is not ≼ lambda");
  return overlay(co_diagram(mu, s1, s2, p), diagram_string(lambda, s1, s2, p));
}

CapOrientation orientation(const CapDiagram& d, const Cap& cap) {
  const Symbol a = d.base.symbols[cap.left];
  const Symbol b = d.base.symbols[cap.right];
  if (a == Symbol::Down && b == Symbol::Up) return CapOrientation::Anticlockwise;
  if (a == Symbol::Up && b == Symbol::Down) return CapOrientation::Clockwise;
  return CapOrientation::Unoriented;
}

bool is_oriented(const CapDiagram& d) {
  return std::all_of(d.caps.begin(), d.caps.end(),
                     [&](const Cap& c) { return orientation(d, c) != CapOrientation::Unoriented; });
}

DominantWeight dagger(const DominantWeight& lambda, int s, int p) {
  require_in_lambda(lambda, s, s, p);
  ArrowDiagram d = arrow_diagram(lambda, s, s, p);
  std::vector<int> below(p, 0), above(p, 0);
  for (int x = 0; x < p; ++x) {
    const bool cross = d.below()[x] && d.above()[x];
    below[x] = cross ? 1 : d.above()[x];
    above[x] = cross ? 1 : d.below()[x];
  }
  return diagram_to_weight(ArrowDiagram(p, lambda.rank(), s, s, std::move(below), std::move(above)));
}

}  // namespace glcaps
