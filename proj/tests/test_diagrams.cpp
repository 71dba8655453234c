#include <doctest.h>

#include <algorithm>

#include "glcaps/diagrams.hpp"
#include "glcaps/error.hpp"
#include "helpers.hpp"

using namespace glcaps;
using testing::W;

namespace {

// Dot-orbit membership from scratch: W_p acts on lambda+rho by permutations
// and translations by p times the root lattice, so two weights are conjugate
// iff their rho-shifts have equal sums and equal multisets of residues.
bool orbit_oracle(const DominantWeight& a, const DominantWeight& b, int p) {
  if (a.rank() != b.rank() || a.degree() != b.degree()) return false;
  auto residues = [p](const DominantWeight& w) {
    std::vector<int> out;
    for (int x : plus_rho(w)) out.push_back(mod_p(x, p));
    std::sort(out.begin(), out.end());
    return out;
  };
  return residues(a) == residues(b);
}

std::set<DominantWeight> strictly_below(const DominantWeight& lambda, int s1, int s2, int p) {
  std::set<DominantWeight> out;
  for (const auto& mu : weights_in_Lambda(lambda.rank(), s1, s2, p))
    if (mu != lambda && preceq(mu, lambda, s1, s2, p)) out.insert(mu);
  return out;
}

}  // namespace

TEST_CASE("arrow diagram examples") {
  const auto d44 = diagram_string(W("4/4", 5), 1, 1, 5);
  CHECK(d44.ascii() == "OOVOA");
  CHECK(d44.unicode() == "oo∨o∧");
  CHECK(d44.shift == 0);
  CHECK(diagram_string(W("2/4", 5), 1, 1, 5).ascii() == "OOXOO");

  const auto big = arrow_diagram(W("3,2/2,1,1", 7), 2, 3, 5);
  CHECK(big.below() == std::vector<int>{1, 0, 0, 1, 0});
  CHECK(big.above() == std::vector<int>{0, 1, 1, 0, 1});
  const auto str = normalise_shift(big);
  CHECK(str.shift == 1);
  CHECK(str.ascii() == "VVAVA");
  CHECK(str.wall == 3);
  CHECK(str.label_at(4) == 0);
  CHECK(str.side_of(2) == Side::Left);
  CHECK(str.side_of(3) == Side::Right);

  const auto fig = diagram_string(W("9,6,5,4,4,2/8,8,4,3,3,2", 20), 8, 7, 17);
  CHECK(fig.shift == 13);
  CHECK(fig.ascii() == "AAOVAVVAXOAVAOVVA");
  CHECK(fig.wall == 12);
  for (int label : {5, 9, 15}) CHECK(fig.symbols[fig.position_of(label)] == Symbol::Empty);
}

TEST_CASE("arrow diagram errors and walls") {
  CHECK_THROWS_AS(arrow_diagram(W("1,1/-", 5), 1, 1, 5), InvalidParams);
  CHECK_THROWS_AS(arrow_diagram(W("-/-", 4), 3, 2, 5), InvalidParams);
  // Multiset form outside Lambda(s1, s2).
  const auto multi = arrow_diagram(W("4,3/-", 4), 2, 1, 2);
  CHECK_FALSE(multi.is_single());
  CHECK(multi.total_at(0) == 2);
  CHECK_THROWS_AS(diagram_to_weight(multi), InvalidParams);
  CHECK_THROWS_AS(normalise_shift(multi), InvalidParams);
  // Walls in the same gap: s2 + 1 = rho_{s1} mod p.
  const auto same = diagram_string(W("-/-", 4), 2, 2, 3);
  CHECK(same.wall == 0);
  CHECK(same.side_of(2) == Side::Left);
}

TEST_CASE("diagram_to_weight") {
  CHECK(diagram_to_weight(arrow_diagram(W("4/4", 5), 1, 1, 5)) == W("4/4", 5));
  CHECK(diagram_to_weight(arrow_diagram(W("2/4", 5), 1, 1, 5)) == W("2/4", 5));
  // All arrows packed against their walls give the zero weight.
  std::vector<int> below(5, 0), above(5, 0);
  below[mod_p(7 + 1 - 2, 5)] = 1;
  below[mod_p(7 + 1 - 2 + 1, 5)] = 1;
  for (int k = 0; k < 3; ++k) above[mod_p(3 - k, 5)] = 1;
  CHECK(diagram_to_weight(ArrowDiagram(5, 7, 2, 3, below, above)) == W("-/-", 7));

  for (int p : {2, 3, 5, 7})
    for (int n = 2; n <= 8; ++n)
      for (int s1 = 1; s1 <= std::min(n, p); ++s1)
        for (int s2 = 1; s2 <= std::min(n, p) && s1 + s2 <= n; ++s2)
          for (const auto& w : weights_in_Lambda(n, s1, s2, p)) {
            const auto d = arrow_diagram(w, s1, s2, p);
            REQUIRE(d.is_single());
            CHECK(diagram_to_weight(d) == w);
            CHECK(from_string(normalise_shift(d), n, s1, s2) == d);
          }
}

TEST_CASE("dot conjugacy") {
  CHECK(is_dot_conjugate(W("4/4", 5), W("4/4", 5), 1, 1, 5));
  CHECK(is_dot_conjugate(W("4/4", 5), W("2/2", 5), 1, 1, 5));
  CHECK_FALSE(is_dot_conjugate(W("4/4", 5), W("4/3", 5), 1, 1, 5));
  for (int p : {2, 3, 5})
    for (int n = 2; n <= 5; ++n) {
      const auto weights = weights_up_to(n, 6);
      for (int s1 = 1; s1 <= std::min(n, p); ++s1)
        for (int s2 = 1; s2 <= std::min(n, p) && s1 + s2 <= n; ++s2)
          for (const auto& a : weights) {
            if (a.lambda1().length() > s1 || a.lambda2().length() > s2) continue;
            for (const auto& b : weights) {
              if (b.lambda1().length() > s1 || b.lambda2().length() > s2) continue;
              CHECK(is_dot_conjugate(a, b, s1, s2, p) == orbit_oracle(a, b, p));
            }
          }
    }
}

TEST_CASE("preceq on the p=5, n=7 example") {
  const auto lambda = W("3,2/2,1,1", 7);
  CHECK(preceq(lambda, lambda, 2, 3, 5));
  CHECK(strictly_below(lambda, 2, 3, 5) ==
        std::set{W("2,2/1,1,1", 7), W("3,1/2,1", 7), W("2,1/1,1", 7), W("3/2", 7), W("2/1", 7)});
  CHECK_FALSE(preceq(W("3,2/2,1", 7), lambda, 2, 3, 5));
  CHECK_THROWS_AS(preceq(lambda, W("5/-", 7), 2, 3, 5), InvalidParams);
  for (const auto& mu : strictly_below(lambda, 2, 3, 5)) CHECK(preceq_oracle(mu, lambda, 5));
  CHECK(reflection_closure(lambda, 5).size() == 6);
  CHECK_FALSE(preceq_oracle(W("3,2/2,1", 7), lambda, 5));

  const auto chain = preceq_witness(W("2/1", 7), lambda, 2, 3, 5);
  REQUIRE(chain);
  CHECK(chain->front() == lambda);
  CHECK(chain->back() == W("2/1", 7));
  for (std::size_t k = 1; k < chain->size(); ++k) {
    const auto next = reversal_neighbours(diagram_string((*chain)[k - 1], 2, 3, 5));
    CHECK(std::find(next.begin(), next.end(), diagram_string((*chain)[k], 2, 3, 5)) != next.end());
  }
}

TEST_CASE("preceq agrees with the reflection definition") {
  for (int p : {2, 3, 5})
    for (int n = 2; n <= 7; ++n)
      for (int s1 = 1; s1 <= std::min(n, p); ++s1)
        for (int s2 = 1; s2 <= std::min(n, p) && s1 + s2 <= n; ++s2) {
          const auto weights = weights_in_Lambda(n, s1, s2, p);
          for (const auto& lambda : weights) {
            if (lambda.lambda1().size() + lambda.lambda2().size() > 6) continue;
            for (const auto& mu : weights) {
              const bool below = preceq(mu, lambda, s1, s2, p);
              INFO(format_weight(mu) << " vs " << format_weight(lambda) << " p=" << p << " n=" << n);
              CHECK(below == preceq_oracle(mu, lambda, p));
              if (!below) continue;
              CHECK(is_dot_conjugate(lambda, mu, s1, s2, p));
              CHECK(mu.degree() == lambda.degree());
              for (int h : {1, 2})
                for (int i = 0; i < mu.component(h).length(); ++i)
                  CHECK(mu.component(h).part(i) <= lambda.component(h).part(i));
            }
          }
        }
}

TEST_CASE("wall moves") {
  // p=5, n=7, s1=2, s2=3, lambda=[32,21^2]: l(lambda1) = s1, so no arrow sits
  // right of the below wall.
  const auto d = arrow_diagram(W("3,2/2,1,1", 7), 2, 3, 5);
  CHECK_FALSE(wall_move(d, Wall::Below, Direction::Right));
  CHECK_FALSE(wall_move(d, Wall::Above, Direction::Left));
  // lambda1_1 = p - s1 blocks the leftward move (and s1 + s2 = n - 2 allows it otherwise).
  CHECK_FALSE(wall_move(d, Wall::Below, Direction::Left));

  const auto e = arrow_diagram(W("1/1", 7), 2, 2, 5);
  const auto right = wall_move(e, Wall::Below, Direction::Right);
  REQUIRE(right);
  CHECK(right->s1() == 1);
  CHECK(diagram_to_weight(*right) == W("1/1", 7));
  const auto back = wall_move(*right, Wall::Below, Direction::Left);
  REQUIRE(back);
  CHECK(*back == e);
  const auto up = wall_move(e, Wall::Above, Direction::Left);
  REQUIRE(up);
  CHECK(up->s2() == 1);
  CHECK(*wall_move(*up, Wall::Above, Direction::Right) == e);

  for (int p : {3, 5, 7})
    for (int n = 2; n <= 7; ++n)
      for (int s1 = 1; s1 <= std::min(n, p); ++s1)
        for (int s2 = 1; s2 <= std::min(n, p) && s1 + s2 <= n; ++s2)
          for (const auto& w : weights_in_Lambda(n, s1, s2, p)) {
            const auto base = arrow_diagram(w, s1, s2, p);
            for (Wall wall : {Wall::Below, Wall::Above})
              for (Direction dir : {Direction::Left, Direction::Right}) {
                const auto moved = wall_move(base, wall, dir);
                if (!moved) continue;
                CHECK(diagram_to_weight(*moved) == w);
                CHECK(in_Lambda_s1s2(w, moved->s1(), moved->s2(), p));
                const Direction opposite = dir == Direction::Left ? Direction::Right : Direction::Left;
                const auto undone = wall_move(*moved, wall, opposite);
                REQUIRE(undone);
                CHECK(*undone == base);
              }
          }
}
