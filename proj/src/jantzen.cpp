#include "glcaps/jantzen.hpp"

#include <cstdlib>

#include "glcaps/error.hpp"

namespace glcaps {

int p_adic_valuation(long long value, int p) {
  if (value == 0) throw InvalidParams("valuation of zero");
  int v = 0;
  value = std::llabs(value);
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

namespace {

JsfResult jsf_over(const DominantWeight& lambda, int p, int i_max, int j_min) {
  if (p < 2) throw InvalidParams("p must be >= 2");
  const int n = lambda.rank();
  const Tuple shifted = plus_rho(lambda);
  JsfResult out{CharacterCombination(n), {}};
  for (int i = 1; i <= i_max; ++i) {
    for (int j = std::max(i + 1, j_min); j <= n; ++j) {
      const int pairing = shifted[i - 1] - shifted[j - 1];
      // l ranges over 1 <= l <= (pairing - 1) / p so that a >= 1.
      for (int l = 1; l * p <= pairing - 1; ++l) {
        const AffineReflection s{i, j, l};
        const auto sorted = dot_sort(apply_reflection(s, shifted, p));
        if (!sorted) continue;
        JsfTerm term{s, pairing - l * p, 1 + p_adic_valuation(l, p), sorted->sign, sorted->weight};
        out.sum.add(term.target, term.coefficient());
        out.terms.push_back(std::move(term));
      }
    }
  }
  return out;
}

}  // namespace

JsfResult full_jsf(const DominantWeight& lambda, int p) { return jsf_over(lambda, p, lambda.rank(), 1); }

JsfResult reduced_jsf(const DominantWeight& lambda, int p) {
  return jsf_over(lambda, p, lambda.lambda1().length(), lambda.rank() - lambda.lambda2().length() + 1);
}

}  // namespace glcaps
