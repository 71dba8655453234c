#pragma once

// Right-hand side of the Jantzen sum formula for GL_n, in full and restricted
// to the roots eps_i - eps_j with i <= l(lambda1) and j > n - l(lambda2).

#include <vector>

#include "glcaps/characters.hpp"
#include "glcaps/weights.hpp"

namespace glcaps {

struct JsfTerm {
  AffineReflection reflection;
  int a = 0;          // <lambda+rho, alpha^vee> - l p, always >= 1
  int valuation = 0;  // nu_p(l p) = 1 + nu_p(l)
  int sign = 1;
  DominantWeight target;

  BigInt coefficient() const { return BigInt(valuation * sign); }
};

struct JsfResult {
  CharacterCombination sum;
  // Surviving terms only (chi of the reflected weight nonzero), ordered by
  // (i, j, l).
  std::vector<JsfTerm> terms;
};

// p-adic valuation of a nonzero integer.
int p_adic_valuation(long long value, int p);

JsfResult full_jsf(const DominantWeight& lambda, int p);
JsfResult reduced_jsf(const DominantWeight& lambda, int p);

}  // namespace glcaps
