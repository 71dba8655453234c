#include <doctest.h>

#include <map>

#include "glcaps/jantzen.hpp"
#include "helpers.hpp"

using namespace glcaps;
using testing::W;

namespace {

CharacterCombination chi(const char* text, int n, int coeff = 1) {
  return CharacterCombination::single(W(text, n), coeff);
}

}  // namespace

TEST_CASE("valuation") {
  CHECK(p_adic_valuation(12, 2) == 2);
  CHECK(p_adic_valuation(-9, 3) == 2);
  CHECK(p_adic_valuation(7, 5) == 0);
}

TEST_CASE("small example at p=3, n=4") {
  CHECK(full_jsf(W("1,1,1", 4), 3).sum.is_zero());
  CHECK(full_jsf(W("2,1", 4), 3).sum == chi("1,1,1", 4));
  CHECK(full_jsf(W("3", 4), 3).sum == chi("1,1,1", 4, -1) + chi("2,1", 4));
  CHECK(full_jsf(W("3,1/1", 4), 3).sum == chi("2,1", 4) + chi("3", 4));

  const JsfResult r = reduced_jsf(W("3,1/1", 4), 3);
  CHECK(r.sum == chi("2,1", 4) + chi("3", 4));
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].reflection == AffineReflection{1, 4, 2});
  CHECK(r.terms[0].a == 1);
  CHECK(r.terms[0].target == W("2,1", 4));
  CHECK(r.terms[1].reflection == AffineReflection{2, 4, 1});
  CHECK(r.terms[1].a == 1);
  CHECK(r.terms[1].target == W("3", 4));
  CHECK(reduced_jsf(W("3,1", 4), 3).sum.is_zero());
}

// Rewrite JSF(lambda) in the basis of simple characters, using the
// decomposition numbers that the JSF itself determines for this tiny block:
// chi(21) = L(21) + L(1^3) and chi(3) = L(3) + L(21).
TEST_CASE("L-basis rewrite of JSF([31,1])") {
  const int n = 4;
  std::map<DominantWeight, CharacterCombination> chi_in_L;  // values are in the L-basis
  chi_in_L[W("1,1,1", n)] = chi("1,1,1", n);
  chi_in_L[W("2,1", n)] = chi("2,1", n) + chi("1,1,1", n);
  chi_in_L[W("3", n)] = chi("3", n) + chi("2,1", n);
  // Consistency with the JSF of the smaller weights: JSF(21) = chi(1^3) is a
  // single simple, JSF(3) = -chi(1^3) + chi(21) = L(21).
  CharacterCombination jsf3(n);
  for (const auto& [w, c] : full_jsf(W("3", n), 3).sum.terms()) jsf3 += chi_in_L.at(w) * c;
  CHECK(jsf3 == chi("2,1", n));

  CharacterCombination in_L(n);
  for (const auto& [w, c] : full_jsf(W("3,1/1", n), 3).sum.terms()) in_L += chi_in_L.at(w) * c;
  CHECK(in_L == chi("1,1,1", n) + chi("2,1", n, 2) + chi("3", n));
}

TEST_CASE("full equals reduced for p-cores") {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 6; ++n)
      for (const auto& w : weights_up_to(n, 8)) {
        if (!is_p_core(w.lambda1(), p) || !is_p_core(w.lambda2(), p)) continue;
        INFO("p=" << p << " " << format_weight(w));
        CHECK(full_jsf(w, p).sum == reduced_jsf(w, p).sum);
      }
}

TEST_CASE("reduced terms: injectivity, containment, a < p, two l-values") {
  for (int p : {2, 3, 5, 7})
    for (int n = 2; n <= 6; ++n)
      for (const auto& w : weights_up_to(n, 8)) {
        if (!is_p_core(w.lambda1(), p) || !is_p_core(w.lambda2(), p)) continue;
        INFO("p=" << p << " " << format_weight(w));
        const auto r = reduced_jsf(w, p);
        std::set<DominantWeight> targets;
        std::set<int> levels;
        for (const auto& t : r.terms) {
          CHECK(t.a >= 1);
          CHECK(t.valuation == 1 + p_adic_valuation(t.reflection.level, p));
          targets.insert(t.target);
          levels.insert(t.reflection.level);
          for (int h : {1, 2}) {
            const Partition& big = w.component(h);
            const Partition& small = t.target.component(h);
            bool inside = small.length() <= big.length();
            for (int i = 0; i < big.length(); ++i) inside = inside && small.part(i) <= big.part(i);
            CHECK(inside);
            CHECK(small != big);
          }
          if (w.lambda1().first() + w.lambda1().length() <= p || w.lambda2().first() + w.lambda2().length() <= p)
            CHECK(t.a < p);
        }
        CHECK(targets.size() == r.terms.size());
        bool in_some_lambda = false;
        for (int s1 = 1; s1 <= std::min(n, p) && !in_some_lambda; ++s1)
          for (int s2 = 1; s1 + s2 <= n && s2 <= p && !in_some_lambda; ++s2)
            in_some_lambda = in_Lambda_s1s2(w, s1, s2, p);
        if (in_some_lambda) CHECK(levels.size() <= 2);
      }
}
