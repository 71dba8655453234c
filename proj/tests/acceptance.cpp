// One PASS/FAIL line per acceptance criterion, each with its time limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "glcaps/caps.hpp"
#include "glcaps/jantzen.hpp"
#include "glcaps/multiplicities.hpp"
#include "glcaps/text_format.hpp"
#include "glcaps/verify.hpp"

using namespace glcaps;

namespace {

DominantWeight W(const char* text, int n) { return parse_bipartition(text, n); }

CharacterCombination chi(const char* text, int n, int coefficient = 1) {
  return CharacterCombination::single(W(text, n), coefficient);
}

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome suite(const char* name) {
  const SuiteReport r = run_suite(name, default_options(name));
  std::ostringstream detail;
  detail << r.checked << " checks, " << r.failed << " failed";
  for (const auto& f : r.failures) detail << "\n    " << f;
  return {r.passed(), detail.str()};
}

Outcome jsf_examples() {
  const int n = 4, p = 3;
  bool ok = full_jsf(W("1,1,1/-", n), p).sum.is_zero();
  ok = ok && full_jsf(W("2,1/-", n), p).sum == chi("1,1,1/-", n);
  ok = ok && full_jsf(W("3/-", n), p).sum == chi("1,1,1/-", n, -1) + chi("2,1/-", n);
  ok = ok && full_jsf(W("3,1/1", n), p).sum == chi("2,1/-", n) + chi("3/-", n);
  return {ok, "JSF([1^3]), JSF([21]), JSF([3]), JSF([31,1]) at p=3, n=4"};
}

Outcome diagram_examples() {
  bool ok = diagram_string(W("4/4", 5), 1, 1, 5).ascii() == "OOVOA";
  ok = ok && diagram_string(W("2/4", 5), 1, 1, 5).ascii() == "OOXOO";
  const auto c = cap_diagram(W("9,6,5,4,4,2/8,8,4,3,3,2", 20), 8, 7, 17);
  std::vector<std::pair<int, int>> ends;
  for (const auto& cap : c.caps) ends.emplace_back(cap.left + 1, cap.right + 1);
  ok = ok && ends == std::vector<std::pair<int, int>>{{4, 5}, {6, 11}, {7, 8}, {16, 17}};
  for (int label : {5, 9, 15}) ok = ok && c.base.symbols[c.base.position_of(label)] == Symbol::Empty;
  return {ok, "[4,4] and [2,4] at p=5; 4 caps of the p=17, n=20 cap diagram"};
}

Outcome block_examples() {
  const int n = 7, s1 = 2, s2 = 3, p = 5;
  const auto lambda = W("3,2/2,1,1", n);
  const auto block = block_below(lambda, s1, s2, p);
  const std::set<DominantWeight> got(block.begin(), block.end());
  bool ok = block.size() == 6 && got == std::set{lambda, W("2,2/1,1,1", n), W("3,1/2,1", n), W("2,1/1,1", n),
                                                  W("3/2", n), W("2/1", n)};
  for (const auto& mu : block) {
    const bool expected = mu == lambda || mu == W("2,2/1,1,1", n) || mu == W("3,1/2,1", n) || mu == W("2,1/1,1", n);
    ok = ok && (tilting_mult(lambda, mu, s1, s2, p) == 1) == expected;
  }
  ok = ok && decomp_number(W("3,1/2,1", n), W("2/1", n), s1, s2, p) == 1;
  ok = ok && decomp_number(lambda, W("2/1", n), s1, s2, p) == 0;
  return {ok, "block, tilting multiplicities and decomposition numbers below [32,21^2] at p=5, n=7"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Jantzen sum examples", 1, jsf_examples},
      {2, "arrow and cap diagram examples", 1, diagram_examples},
      {3, "block and multiplicity examples", 1, block_examples},
      {4, "full = reduced JSF on p-cores", 30, [] { return suite("jsf-reduced"); }},
      {5, "arrow-pair prediction of the reduced JSF", 60, [] { return suite("arrow-pairs"); }},
      {6, "order agrees with the reflection oracle", 60, [] { return suite("preceq"); }},
      {7, "structural suites", 60, [] { return suite("structural"); }},
      {8, "character identities", 30, [] { return suite("characters"); }},
      {9, "walled Brauer suites", 60, [] { return suite("brauer"); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << seconds
              << " s, limit " << c.limit << " s" << (in_time ? "" : ", too slow") << ") " << outcome.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
