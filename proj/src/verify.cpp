#include "glcaps/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "glcaps/caps.hpp"
#include "glcaps/error.hpp"
#include "glcaps/jantzen.hpp"
#include "glcaps/multiplicities.hpp"
#include "glcaps/text_format.hpp"
#include "glcaps/walled_brauer.hpp"

namespace glcaps {

namespace {

constexpr std::size_t kMaxFailures = 10;

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { report_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& message) {
    ++report_.checked;
    if (ok) return;
    ++report_.failed;
    if (report_.failures.size() < kMaxFailures) report_.failures.push_back(message());
  }

  SuiteReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::string params(int p, int n, int s1, int s2) {
  return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " s1=" + std::to_string(s1) +
         " s2=" + std::to_string(s2);
}

bool wall_params_ok(int n, int s1, int s2, int p) {
  return n >= 2 && s1 >= 1 && s2 >= 1 && s1 <= std::min(n, p) && s2 <= std::min(n, p) && s1 + s2 <= n;
}

// Calls body(s1, s2) for every admissible pair with s1, s2 <= s_max.
template <class Body>
void for_each_walls(int n, int p, int s_max, Body&& body) {
  for (int s1 = 1; s1 <= s_max; ++s1)
    for (int s2 = 1; s2 <= s_max; ++s2)
      if (wall_params_ok(n, s1, s2, p)) body(s1, s2);
}

}  // namespace

SuiteReport verify_jsf_reduced(const VerifyOptions& opt) {
  Recorder rec("jsf-reduced");
  for (int p : opt.primes)
    for (int n : opt.ranks)
      for (const auto& w : weights_up_to(n, opt.max_size)) {
        if (!is_p_core(w.lambda1(), p) || !is_p_core(w.lambda2(), p)) continue;
        rec.check(full_jsf(w, p).sum == reduced_jsf(w, p).sum,
                  [&] { return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " " + format_weight(w); });
      }
  return rec.finish();
}

SuiteReport verify_arrow_pairs(const VerifyOptions& opt) {
  Recorder rec("arrow-pairs");
  for (int p : opt.primes)
    for (int n : opt.ranks)
      for_each_walls(n, p, opt.s_max, [&](int s1, int s2) {
        for (const auto& w : weights_in_Lambda(n, s1, s2, p)) {
          std::set<DominantWeight> predicted;
          for (const auto& d : reversal_neighbours(diagram_string(w, s1, s2, p)))
            predicted.insert(diagram_to_weight(from_string(d, n, s1, s2)));
          rec.check(reduced_jsf(w, p).sum.support() == predicted,
                    [&] { return params(p, n, s1, s2) + " " + format_weight(w); });
        }
      });
  return rec.finish();
}

SuiteReport verify_preceq(const VerifyOptions& opt) {
  Recorder rec("preceq");
  for (int p : opt.primes)
    for (int n : opt.ranks)
      for_each_walls(n, p, opt.s_max, [&](int s1, int s2) {
        const auto weights = weights_in_Lambda(n, s1, s2, p);
        for (const auto& lambda : weights) {
          const auto oracle = reflection_closure(lambda, p);
          for (const auto& mu : weights) {
            const bool fast = preceq(mu, lambda, s1, s2, p);
            rec.check(fast == oracle.contains(mu), [&] {
              return params(p, n, s1, s2) + " mu=" + format_weight(mu) + " lambda=" + format_weight(lambda) +
                     " preceq=" + std::to_string(fast);
            });
          }
        }
      });
  return rec.finish();
}

SuiteReport verify_structural(const VerifyOptions& opt) {
  Recorder rec("structural");
  for (int p : opt.primes)
    for (int n : opt.ranks) {
      for_each_walls(n, p, opt.s_max, [&](int s1, int s2) {
        for (const auto& lambda : weights_in_Lambda(n, s1, s2, p)) {
          const auto where = [&] { return params(p, n, s1, s2) + " " + format_weight(lambda); };
          const auto m = decomposition_matrix(lambda, s1, s2, p);
          rec.check(m.is_unitriangular(), [&] { return "not unitriangular: " + where(); });
          rec.check(m.weights.back() == lambda, [&] { return "lambda is not last in block_below: " + where(); });
          const auto& row = m.entries.back();
          const bool identity_row = std::count(row.begin(), row.end(), 0) + 1 == static_cast<long>(row.size());
          const bool capless = cap_diagram(lambda, s1, s2, p).caps.empty();
          const bool jsf_empty = reduced_jsf(lambda, p).sum.is_zero();
          rec.check(identity_row == capless && capless == jsf_empty, [&] {
            return "irreducibility mismatch: " + where() + " identity_row=" + std::to_string(identity_row) +
                   " capless=" + std::to_string(capless) + " jsf_empty=" + std::to_string(jsf_empty);
          });
        }
      });
      for (int s = 1; s <= opt.s_max; ++s) {
        if (!wall_params_ok(n, s, s, p)) continue;
        const auto weights = weights_in_Lambda(n, s, s, p);
        for (const auto& lambda : weights)
          for (const auto& mu : weights)
            rec.check(dagger_duality_check(lambda, mu, s, p), [&] {
              return "dagger duality: " + params(p, n, s, s) + " lambda=" + format_weight(lambda) +
                     " mu=" + format_weight(mu);
            });
      }
    }
  return rec.finish();
}

SuiteReport verify_characters(const VerifyOptions& opt) {
  Recorder rec("characters");
  for (int total = 0; total <= opt.max_rs; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      const int n = std::max(total, 1);
      CharacterCombination rhs(n);
      for (int t = 0; t <= std::min(r, s); ++t)
        rhs += psi(r - t, s - t, n) * (binomial(r, t) * binomial(s, t) * factorial(t));
      rec.check(mixed_tensor_character(r, s, n) == rhs,
                [&] { return "identity (*) r=" + std::to_string(r) + " s=" + std::to_string(s); });
      if (total < opt.max_rs) {
        const int m = total + 1;
        CharacterCombination expected = psi(r, s + 1, m);
        if (r > 0) expected += psi(r - 1, s, m) * BigInt(r);
        rec.check(tensor_step(psi(r, s, m), TensorFactor::Dual) == expected,
                  [&] { return "psi recursion r=" + std::to_string(r) + " s=" + std::to_string(s); });
      }
    }
  return rec.finish();
}

SuiteReport verify_brauer(const VerifyOptions& opt) {
  Recorder rec("brauer");
  for (int total = 0; total <= opt.max_rs; ++total)
    for (int r = 0; r <= total; ++r) {
      const int s = total - r;
      const auto tag = [&] { return " r=" + std::to_string(r) + " s=" + std::to_string(s); };
      const auto diagrams = enumerate_diagrams(r, s);
      rec.check(BigInt(diagrams.size()) == factorial(total) &&
                    std::adjacent_find(diagrams.begin(), diagrams.end()) == diagrams.end(),
                [&] { return "diagram count" + tag(); });
      BigInt cells = 0;
      for (const auto& [a, b] : cell_labels(r, s)) {
        const BigInt d = specht_dim_walled(a, b, r, s);
        cells += d * d;
      }
      rec.check(cells == factorial(total), [&] { return "cellular identity" + tag(); });
    }
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s <= 8; ++s)
      rec.check(dimension_identity_check(r, s),
                [&] { return "dimension identity r=" + std::to_string(r) + " s=" + std::to_string(s); });

  std::mt19937_64 rng(opt.seed);
  const int assoc_max = std::min(opt.max_rs, 5);
  std::vector<std::pair<int, int>> shapes;
  std::vector<std::vector<WalledDiagram>> bases;
  for (int total = 1; total <= assoc_max; ++total)
    for (int r = 0; r <= total; ++r) {
      shapes.emplace_back(r, total - r);
      bases.push_back(enumerate_diagrams(r, total - r));
    }
  for (int k = 0; k < opt.triples && !bases.empty(); ++k) {
    const auto& basis = bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    const WalledElement a(basis[pick(rng)]), b(basis[pick(rng)]), c(basis[pick(rng)]);
    rec.check(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)),
              [&] { return "associativity " + format_walled(a.terms().begin()->first); });
  }

  // Independence of n: compare the smallest admissible n with the next one.
  for (int p : {2, 3, 5})
    for (int total = 1; total <= std::min(opt.max_rs, 5); ++total)
      for (int r = 0; r <= total; ++r) {
        const int s = total - r;
        const auto labels = cell_labels(r, s);
        for (int delta = 0; delta < p; ++delta)
          for (const auto& [l1, l2] : labels)
            for (const auto& [m1, m2] : labels) {
              WalledDecomposition first;
              try {
                first = walled_decomp_number(m1, m2, l1, l2, r, s, delta, p);
              } catch (const NotApplicable&) {
                continue;
              }
              const auto second = walled_decomp_number_at(m1, m2, l1, l2, r, s, first.n + p, p);
              rec.check(first.value == second.value, [&] {
                return "n-independence p=" + std::to_string(p) + " delta=" + std::to_string(delta) + " r=" +
                       std::to_string(r) + " s=" + std::to_string(s) + " lambda=" + format_partition(l1) + "/" +
                       format_partition(l2) + " mu=" + format_partition(m1) + "/" + format_partition(m2);
              });
            }
      }
  return rec.finish();
}

std::vector<std::string> suite_names() {
  return {"jsf-reduced", "arrow-pairs", "preceq", "structural", "characters", "brauer"};
}

VerifyOptions default_options(const std::string& suite) {
  VerifyOptions opt;
  auto range = [](int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  };
  if (suite == "jsf-reduced") {
    opt.primes = {2, 3, 5};
    opt.ranks = range(1, 6);
    opt.max_size = 8;
  } else if (suite == "arrow-pairs") {
    opt.primes = {2, 3, 5, 7};
    opt.ranks = range(2, 8);
    opt.s_max = 3;
  } else if (suite == "preceq") {
    opt.primes = {2, 3, 5};
    opt.ranks = range(2, 7);
    opt.s_max = 7;
  } else if (suite == "structural") {
    opt.primes = {2, 3, 5};
    opt.ranks = range(2, 8);
    opt.s_max = 2;
  } else if (suite == "characters") {
    opt.max_rs = 6;
  } else if (suite == "brauer") {
    opt.max_rs = 7;
  }
  return opt;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  using Fn = SuiteReport (*)(const VerifyOptions&);
  const std::vector<std::pair<std::string, Fn>> table = {
      {"jsf-reduced", verify_jsf_reduced}, {"arrow-pairs", verify_arrow_pairs}, {"preceq", verify_preceq},
      {"structural", verify_structural},   {"characters", verify_characters},   {"brauer", verify_brauer}};
  for (const auto& [suite, fn] : table)
    if (name == suite) return fn(opt);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace glcaps
