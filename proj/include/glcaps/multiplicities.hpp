#pragma once

// Tilting multiplicities (T(lambda):Delta(mu)) and decomposition numbers
// [Delta(lambda):L(mu)] for lambda in Lambda(s1, s2), read off cap diagrams.

#include <vector>

#include "glcaps/caps.hpp"

namespace glcaps {

// All throw InvalidParams unless lambda lies in Lambda(s1, s2). Any mu is
// accepted; mu outside Lambda(s1, s2) gives 0.
int tilting_mult(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p);
int decomp_number(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p);

struct MultiplicityTrace {
  int value = 0;
  // lambda = w_1, ..., w_t = mu when mu ≼ lambda, else empty.
  std::vector<DominantWeight> witness;
  // The overlay that was tested, when mu ≼ lambda.
  std::optional<CapDiagram> overlay;
};

MultiplicityTrace explain_tilting(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p);
MultiplicityTrace explain_decomp(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p);

// Every mu ≼ lambda, sorted so that mu precedes nu whenever mu ≼ nu; ties
// broken lexicographically on to_tuple.
std::vector<DominantWeight> block_below(const DominantWeight& lambda, int s1, int s2, int p);

struct DecompositionMatrix {
  std::vector<DominantWeight> weights;
  // entries[row][col] = [Delta(weights[row]) : L(weights[col])]
  std::vector<std::vector<int>> entries;

  bool is_unitriangular() const;
};

// Rows and columns indexed by block_below(lambda). Entries are filled in
// parallel (see glcaps/parallel.hpp).
DecompositionMatrix decomposition_matrix(const DominantWeight& lambda, int s1, int s2, int p);

// decomp_number(lambda, mu) == tilting_mult(mu†, lambda†) on Lambda(s, s).
bool dagger_duality_check(const DominantWeight& lambda, const DominantWeight& mu, int s, int p);

}  // namespace glcaps
