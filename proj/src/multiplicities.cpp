#include "glcaps/multiplicities.hpp"

#include <map>
#include <queue>

#include "glcaps/error.hpp"
#include "glcaps/parallel.hpp"

namespace glcaps {

namespace {

void require_in_lambda(const DominantWeight& lambda, int s1, int s2, int p) {
  if (!in_Lambda_s1s2(lambda, s1, s2, p)) throw InvalidParams("lambda is not in Lambda(s1, s2)");
}

}  // namespace

MultiplicityTrace explain_tilting(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p) {
  require_in_lambda(lambda, s1, s2, p);
  MultiplicityTrace out;
  auto witness = preceq_witness(mu, lambda, s1, s2, p);
  if (!witness) return out;
  out.witness = std::move(*witness);
  out.overlay = overlay(cap_diagram(lambda, s1, s2, p), diagram_string(mu, s1, s2, p));
  out.value = is_oriented(*out.overlay) ? 1 : 0;
  return out;
}

MultiplicityTrace explain_decomp(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p) {
  require_in_lambda(lambda, s1, s2, p);
  MultiplicityTrace out;
  auto witness = preceq_witness(mu, lambda, s1, s2, p);
  if (!witness) return out;
  out.witness = std::move(*witness);
  out.overlay = overlay(co_diagram(mu, s1, s2, p), diagram_string(lambda, s1, s2, p));
  out.value = is_oriented(*out.overlay) ? 1 : 0;
  return out;
}

int tilting_mult(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p) {
  return explain_tilting(lambda, mu, s1, s2, p).value;
}

int decomp_number(const DominantWeight& lambda, const DominantWeight& mu, int s1, int s2, int p) {
  return explain_decomp(lambda, mu, s1, s2, p).value;
}

std::vector<DominantWeight> block_below(const DominantWeight& lambda, int s1, int s2, int p) {
  require_in_lambda(lambda, s1, s2, p);
  const int n = lambda.rank();
  const auto closure = reversal_closure(diagram_string(lambda, s1, s2, p));
  // Each reversal moves strictly down in ≼, so the reversal graph restricted
  // to the closure is a DAG whose transitive closure is ≼.
  std::map<DiagramString, int> indegree;
  for (const auto& d : closure) indegree.try_emplace(d, 0);
  for (const auto& d : closure)
    for (const auto& next : reversal_neighbours(d)) ++indegree[next];
  std::map<DiagramString, Tuple> key;
  for (const auto& d : closure) key.emplace(d, to_tuple(diagram_to_weight(from_string(d, n, s1, s2))));

  // Kahn's algorithm from the top; the result is reversed to list ≼-minimal
  // weights first.
  auto cmp = [&](const DiagramString& a, const DiagramString& b) { return key.at(a) < key.at(b); };
  std::priority_queue<DiagramString, std::vector<DiagramString>, decltype(cmp)> ready(cmp);
  for (const auto& [d, deg] : indegree)
    if (deg == 0) ready.push(d);
  std::vector<DominantWeight> order;
  while (!ready.empty()) {
    DiagramString d = ready.top();
    ready.pop();
    order.push_back(from_tuple(key.at(d)));
    for (const auto& next : reversal_neighbours(d))
      if (--indegree[next] == 0) ready.push(next);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

bool DecompositionMatrix::is_unitriangular() const {
  for (std::size_t r = 0; r < weights.size(); ++r) {
    if (entries[r][r] != 1) return false;
    for (std::size_t c = r + 1; c < weights.size(); ++c)
      if (entries[r][c] != 0) return false;
    for (std::size_t c = 0; c < weights.size(); ++c)
      if (entries[r][c] != 0 && entries[r][c] != 1) return false;
  }
  return true;
}

DecompositionMatrix decomposition_matrix(const DominantWeight& lambda, int s1, int s2, int p) {
  DecompositionMatrix out;
  out.weights = block_below(lambda, s1, s2, p);
  const std::size_t m = out.weights.size();
  out.entries.assign(m, std::vector<int>(m, 0));
  parallel_for(m * m, [&](std::size_t k) {
    const std::size_t r = k / m;
    const std::size_t c = k % m;
    if (c <= r) out.entries[r][c] = decomp_number(out.weights[r], out.weights[c], s1, s2, p);
  });
  return out;
}

bool dagger_duality_check(const DominantWeight& lambda, const DominantWeight& mu, int s, int p) {
  return decomp_number(lambda, mu, s, s, p) == tilting_mult(dagger(mu, s, p), dagger(lambda, s, p), s, s, p);
}

}  // namespace glcaps
