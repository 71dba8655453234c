#include "glcaps/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "glcaps/error.hpp"

namespace glcaps {

ArrowDiagram::ArrowDiagram(int p, int n, int s1, int s2, std::vector<int> below, std::vector<int> above)
    : p_(p), n_(n), s1_(s1), s2_(s2), below_(std::move(below)), above_(std::move(above)) {
  if (p < 2 || static_cast<int>(below_.size()) != p || static_cast<int>(above_.size()) != p)
    throw InvalidParams("arrow diagram needs p >= 2 and p counts per row");
  if (std::reduce(below_.begin(), below_.end()) != s1 || std::reduce(above_.begin(), above_.end()) != s2)
    throw InvalidParams("arrow counts do not match s1, s2");
  for (int i = 0; i < p; ++i)
    if (below_[i] < 0 || above_[i] < 0) throw InvalidParams("negative arrow count");
}

int ArrowDiagram::below_wall_gap() const noexcept { return mod_p(n_ + 1 - s1_, p_); }
int ArrowDiagram::above_wall_gap() const noexcept { return mod_p(s2_ + 1, p_); }

bool ArrowDiagram::is_single() const noexcept {
  for (int i = 0; i < p_; ++i)
    if (below_[i] > 1 || above_[i] > 1) return false;
  return true;
}

Symbol ArrowDiagram::symbol_at(int label) const {
  const int b = below_[label];
  const int a = above_[label];
  if (b > 1 || a > 1) throw InvalidParams("repeated arrows at label " + std::to_string(label));
  if (a && b) return Symbol::Cross;
  if (a) return Symbol::Down;
  if (b) return Symbol::Up;
  return Symbol::Empty;
}

std::string DiagramString::ascii() const {
  std::string out;
  for (Symbol s : symbols) out += static_cast<char>(s);
  return out;
}

std::string DiagramString::unicode() const {
  std::string out;
  for (Symbol s : symbols) {
    switch (s) {
      case Symbol::Empty: out += "o"; break;
      case Symbol::Down: out += "∨"; break;
      case Symbol::Up: out += "∧"; break;
      case Symbol::Cross: out += "×"; break;
    }
  }
  return out;
}

ArrowDiagram arrow_diagram(const DominantWeight& lambda, int s1, int s2, int p) {
  const int n = lambda.rank();
  check_wall_params(n, s1, s2, p);
  if (lambda.lambda1().length() > s1 || lambda.lambda2().length() > s2)
    throw InvalidParams("need l(lambda1) <= s1 and l(lambda2) <= s2");
  const Tuple x = plus_rho(lambda);
  std::vector<int> below(p, 0), above(p, 0);
  for (int i = 1; i <= s1; ++i) ++below[mod_p(x[i - 1], p)];
  for (int i = 1; i <= s2; ++i) ++above[mod_p(x[n - i], p)];
  return ArrowDiagram(p, n, s1, s2, std::move(below), std::move(above));
}

DominantWeight diagram_to_weight(const ArrowDiagram& d) {
  if (!d.is_single()) throw InvalidParams("diagram_to_weight needs the single-arrow form");
  const int p = d.p();
  const int n = d.rank();
  const int rho_s1 = n + 1 - d.s1();
  const int gap = d.below_wall_gap();
  std::vector<int> below_values, above_values;
  for (int x = 0; x < p; ++x) {
    if (d.below()[x]) below_values.push_back(rho_s1 + mod_p(x - gap, p));
    if (d.above()[x]) above_values.push_back(d.s2() - mod_p(d.s2() - x, p));
  }
  std::sort(below_values.rbegin(), below_values.rend());
  std::sort(above_values.begin(), above_values.end());
  std::vector<int> l1, l2;
  for (int i = 1; i <= d.s1(); ++i) l1.push_back(below_values[i - 1] - (n + 1 - i));
  for (int i = 1; i <= d.s2(); ++i) l2.push_back(i - above_values[i - 1]);
  return DominantWeight(n, Partition(std::move(l1)), Partition(std::move(l2)));
}

DiagramString normalise_shift(const ArrowDiagram& d) {
  DiagramString out;
  out.p = d.p();
  out.shift = d.below_wall_gap();
  out.wall = mod_p(d.above_wall_gap() - out.shift, out.p);
  out.symbols.reserve(out.p);
  for (int pos = 0; pos < out.p; ++pos) out.symbols.push_back(d.symbol_at(out.label_at(pos)));
  return out;
}

DiagramString diagram_string(const DominantWeight& lambda, int s1, int s2, int p) {
  return normalise_shift(arrow_diagram(lambda, s1, s2, p));
}

ArrowDiagram from_string(const DiagramString& str, int n, int s1, int s2) {
  std::vector<int> below(str.p, 0), above(str.p, 0);
  for (int pos = 0; pos < str.p; ++pos) {
    const Symbol s = str.symbols[pos];
    const int label = str.label_at(pos);
    if (s == Symbol::Up || s == Symbol::Cross) below[label] = 1;
    if (s == Symbol::Down || s == Symbol::Cross) above[label] = 1;
  }
  return ArrowDiagram(str.p, n, s1, s2, std::move(below), std::move(above));
}

bool is_dot_conjugate(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p) {
  if (lambda.rank() != mu.rank()) return false;
  const ArrowDiagram a = arrow_diagram(lambda, s1, s2, p);
  const ArrowDiagram b = arrow_diagram(mu, s1, s2, p);
  if (lambda.degree() != mu.degree()) return false;
  for (int x = 0; x < p; ++x)
    if (a.total_at(x) != b.total_at(x)) return false;
  return true;
}

std::vector<DiagramString> reversal_neighbours(const DiagramString& d) {
  std::vector<DiagramString> out;
  const int p = d.p;
  for (int a = 0; a < p; ++a) {
    if (d.symbols[a] != Symbol::Down) continue;
    for (int b = a + 1; b < p; ++b) {
      if (d.side_of(b) != d.side_of(a)) break;
      if (d.symbols[b] != Symbol::Up) continue;
      DiagramString next = d;
      next.symbols[a] = Symbol::Up;
      next.symbols[b] = Symbol::Down;
      out.push_back(std::move(next));
    }
  }
  return out;
}

namespace {

// BFS from `start`; parents are recorded so a path can be rebuilt.
std::map<DiagramString, DiagramString> reversal_search(const DiagramString& start, const DiagramString* target) {
  std::map<DiagramString, DiagramString> parent{{start, start}};
  std::deque<DiagramString> queue{start};
  while (!queue.empty()) {
    DiagramString cur = std::move(queue.front());
    queue.pop_front();
    if (target && cur == *target) break;
    for (auto& next : reversal_neighbours(cur)) {
      if (parent.contains(next)) continue;
      parent.emplace(next, cur);
      queue.push_back(std::move(next));
    }
  }
  return parent;
}

void require_in_lambda(const DominantWeight& lambda, int s1, int s2, int p) {
  if (!in_Lambda_s1s2(lambda, s1, s2, p)) throw InvalidParams("weight is not in Lambda(s1, s2)");
}

}  // namespace

std::set<DiagramString> reversal_closure(const DiagramString& d) {
  std::set<DiagramString> out;
  for (auto& [k, v] : reversal_search(d, nullptr)) out.insert(k);
  return out;
}

std::optional<std::vector<DominantWeight>> preceq_witness(const DominantWeight& mu, const DominantWeight& lambda,
                                                          int s1, int s2, int p) {
  require_in_lambda(lambda, s1, s2, p);
  if (mu.rank() != lambda.rank() || mu.degree() != lambda.degree()) return std::nullopt;
  if (!in_Lambda_s1s2(mu, s1, s2, p)) return std::nullopt;
  const DiagramString start = diagram_string(lambda, s1, s2, p);
  const DiagramString goal = diagram_string(mu, s1, s2, p);
  const auto parent = reversal_search(start, &goal);
  if (!parent.contains(goal)) return std::nullopt;
  std::vector<DominantWeight> chain;
  for (DiagramString cur = goal;; cur = parent.at(cur)) {
    chain.push_back(diagram_to_weight(from_string(cur, lambda.rank(), s1, s2)));
    if (cur == start) break;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool preceq(const DominantWeight& mu, const DominantWeight& lambda, int s1, int s2, int p) {
  return preceq_witness(mu, lambda, s1, s2, p).has_value();
}

std::set<DominantWeight> reflection_closure(const DominantWeight& lambda, int p) {
  const int n = lambda.rank();
  std::set<DominantWeight> seen{lambda};
  std::deque<DominantWeight> queue{lambda};
  while (!queue.empty()) {
    const DominantWeight cur = queue.front();
    queue.pop_front();
    const Tuple x = plus_rho(cur);
    const int i_max = cur.lambda1().length();
    const int j_min = n - cur.lambda2().length() + 1;
    for (int i = 1; i <= i_max; ++i) {
      for (int j = std::max(i + 1, j_min); j <= n; ++j) {
        const int pairing = x[i - 1] - x[j - 1];
        for (int l = 1; pairing - l * p >= 1; ++l) {
          const auto sorted = dot_sort(apply_reflection({i, j, l}, x, p));
          if (!sorted) continue;
          if (seen.insert(sorted->weight).second) queue.push_back(sorted->weight);
        }
      }
    }
  }
  return seen;
}

bool preceq_oracle(const DominantWeight& mu, const DominantWeight& lambda, int p) {
  if (mu.rank() != lambda.rank()) return false;
  return reflection_closure(lambda, p).contains(mu);
}

std::optional<ArrowDiagram> wall_move(const ArrowDiagram& d, Wall which, Direction direction) {
  const int p = d.p();
  const int n = d.rank();
  auto below = d.below();
  auto above = d.above();
  int s1 = d.s1();
  int s2 = d.s2();
  if (which == Wall::Below) {
    const int right = d.below_wall_gap();
    const int left = mod_p(right - 1, p);
    if (direction == Direction::Right) {
      if (s1 < 2 || below[right] == 0) return std::nullopt;
      --below[right];
      --s1;
    } else {
      if (s1 + 1 + s2 > n || s1 + 1 > std::min(n, p) || below[left] != 0) return std::nullopt;
      ++below[left];
      ++s1;
    }
  } else {
    const int right = d.above_wall_gap();
    const int left = mod_p(right - 1, p);
    if (direction == Direction::Left) {
      if (s2 < 2 || above[left] == 0) return std::nullopt;
      --above[left];
      --s2;
    } else {
      if (s1 + s2 + 1 > n || s2 + 1 > std::min(n, p) || above[right] != 0) return std::nullopt;
      ++above[right];
      ++s2;
    }
  }
  return ArrowDiagram(p, n, s1, s2, std::move(below), std::move(above));
}

}  // namespace glcaps
