#pragma once

// Arrow diagrams on p cyclically ordered nodes labelled 0..p-1.
//
// Below the line sits a wall between the labels rho_{s1}-1 and rho_{s1}
// (mod p) and a ∧ for each of the values (rho+lambda)_1..(rho+lambda)_{s1};
// above the line a wall between s2 and s2+1 (mod p) and a ∨ for each of
// (rho+lambda)_{n}..(rho+lambda)_{n+1-s2}. A node carrying one of each is a
// cross (×).
//
// Linearisation: the diagram is rotated so that the below-the-line wall sits
// between the last and the first node; the above-the-line wall is then "the
// wall" that splits the nodes into a left and a right side.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "glcaps/weights.hpp"

namespace glcaps {

enum class Symbol : char { Empty = 'O', Down = 'V', Up = 'A', Cross = 'X' };

enum class Side { Left, Right };

class ArrowDiagram {
 public:
  // below[x] / above[x]: number of ∧ / ∨ at label x. Throws InvalidParams if
  // the counts do not sum to s1 / s2.
  ArrowDiagram(int p, int n, int s1, int s2, std::vector<int> below, std::vector<int> above);

  int p() const noexcept { return p_; }
  int rank() const noexcept { return n_; }
  int s1() const noexcept { return s1_; }
  int s2() const noexcept { return s2_; }
  const std::vector<int>& below() const noexcept { return below_; }
  const std::vector<int>& above() const noexcept { return above_; }

  // Label immediately to the right of each wall.
  int below_wall_gap() const noexcept;
  int above_wall_gap() const noexcept;

  // Every node carries at most one ∧ and at most one ∨.
  bool is_single() const noexcept;
  int total_at(int label) const { return below_[label] + above_[label]; }
  // Requires the single form at that label.
  Symbol symbol_at(int label) const;

  auto operator<=>(const ArrowDiagram&) const = default;

 private:
  int p_;
  int n_;
  int s1_;
  int s2_;
  std::vector<int> below_;
  std::vector<int> above_;
};

struct DiagramString {
  int p = 0;
  int shift = 0;  // label of symbols[0]
  std::vector<Symbol> symbols;
  // The wall sits between symbols[wall - 1] and symbols[wall]; 0 when both
  // walls share the boundary gap and there is a single side.
  int wall = 0;

  int label_at(int position) const { return (shift + position) % p; }
  int position_of(int label) const { return ((label - shift) % p + p) % p; }
  Side side_of(int position) const { return wall != 0 && position >= wall ? Side::Right : Side::Left; }

  std::string ascii() const;
  std::string unicode() const;

  auto operator<=>(const DiagramString&) const = default;
};

// Non-negative residue.
inline int mod_p(int value, int p) { return ((value % p) + p) % p; }

// Multiset form whenever l(lambda^h) <= s_h; single-arrow form for
// lambda in Lambda(s1, s2). Throws InvalidParams otherwise.
ArrowDiagram arrow_diagram(const DominantWeight& lambda, int s1, int s2, int p);

// Inverse of arrow_diagram on Lambda(s1, s2). Throws InvalidParams for the
// multiset form.
DominantWeight diagram_to_weight(const ArrowDiagram& d);

// Throws InvalidParams for the multiset form.
DiagramString normalise_shift(const ArrowDiagram& d);
DiagramString diagram_string(const DominantWeight& lambda, int s1, int s2, int p);

// Rebuild the arrow diagram of a linearised string (same walls).
ArrowDiagram from_string(const DiagramString& str, int n, int s1, int s2);

bool is_dot_conjugate(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p);

// Diagrams obtained by reversing one arrow pair ∨ ... ∧ (single arrows, ∨
// first, both on the same side of the wall).
std::vector<DiagramString> reversal_neighbours(const DiagramString& d);
// Everything reachable by repeated reversals, including d itself.
std::set<DiagramString> reversal_closure(const DiagramString& d);

// mu ≼ lambda via arrow-pair reversals. Throws InvalidParams unless lambda
// lies in Lambda(s1, s2).
bool preceq(const DominantWeight& mu, const DominantWeight& lambda, int s1, int s2, int p);

// A reversal chain lambda = w_1, ..., w_t = mu, if mu ≼ lambda.
std::optional<std::vector<DominantWeight>> preceq_witness(const DominantWeight& mu, const DominantWeight& lambda,
                                                          int s1, int s2, int p);

// ≼ from its definition: dominant sorts of admissible affine reflections
// s_{alpha,l} with alpha = eps_i - eps_j, i <= l(lambda1), j > n - l(lambda2).
std::set<DominantWeight> reflection_closure(const DominantWeight& lambda, int p);
bool preceq_oracle(const DominantWeight& mu, const DominantWeight& lambda, int p);

enum class Wall { Below, Above };
enum class Direction { Left, Right };

// Move a wall one node, changing s1 or s2 by one and keeping the weight.
// Empty when the move is not allowed.
std::optional<ArrowDiagram> wall_move(const ArrowDiagram& d, Wall which, Direction direction);

}  // namespace glcaps
