#include "glcaps/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "glcaps/error.hpp"

namespace glcaps {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidParams("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidParams("partition parts must be weakly decreasing");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t(first(), 0);
  for (int part : parts_)
    for (int c = 0; c < part; ++c) ++t[c];
  return Partition(std::move(t));
}

DominantWeight::DominantWeight(int n, Partition lambda1, Partition lambda2)
    : n_(n), lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)) {
  if (n_ < 1) throw InvalidParams("rank n must be >= 1");
  if (lambda1_.length() + lambda2_.length() > n_)
    throw InvalidParams("l(lambda1) + l(lambda2) exceeds n = " + std::to_string(n_));
}

Tuple to_tuple(const DominantWeight& w) {
  const int n = w.rank();
  Tuple t(n, 0);
  for (int i = 0; i < w.lambda1().length(); ++i) t[i] = w.lambda1().part(i);
  for (int i = 0; i < w.lambda2().length(); ++i)
    t[n - 1 - i] = -w.lambda2().part(i);
  return t;
}

DominantWeight from_tuple(std::span<const int> t) {
  if (t.empty()) throw NotDominant("empty tuple");
  if (!std::is_sorted(t.begin(), t.end(), std::greater<>()))
    throw NotDominant("tuple is not weakly decreasing");
  std::vector<int> pos;
  std::vector<int> neg;
  for (int v : t)
    if (v > 0) pos.push_back(v);
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    if (*it < 0) neg.push_back(-*it);
  return DominantWeight(static_cast<int>(t.size()), Partition(std::move(pos)), Partition(std::move(neg)));
}

Tuple rho(int n) {
  Tuple r(n);
  for (int i = 0; i < n; ++i) r[i] = n - i;
  return r;
}

Tuple plus_rho(const DominantWeight& w) {
  Tuple t = to_tuple(w);
  const int n = w.rank();
  for (int i = 0; i < n; ++i) t[i] += n - i;
  return t;
}

int reflection_shift(const AffineReflection& s, std::span<const int> x, int p) {
  return x[s.i - 1] - x[s.j - 1] - s.level * p;
}

Tuple apply_reflection(const AffineReflection& s, std::span<const int> x, int p) {
  if (s.i < 1 || s.j <= s.i || s.j > static_cast<int>(x.size()))
    throw InvalidParams("reflection needs 1 <= i < j <= n");
  const int a = reflection_shift(s, x, p);
  Tuple y(x.begin(), x.end());
  y[s.i - 1] -= a;
  y[s.j - 1] += a;
  return y;
}

std::optional<DotSorted> dot_sort(std::span<const int> x) {
  const int n = static_cast<int>(x.size());
  Tuple sorted(x.begin(), x.end());
  // Bubble-count inversions for the sign; n is small.
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (x[i] == x[j]) return std::nullopt;
      if (x[i] < x[j]) ++inversions;
    }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (int i = 0; i < n; ++i) sorted[i] -= n - i;
  return DotSorted{from_tuple(sorted), inversions % 2 == 0 ? 1 : -1};
}

bool is_p_core(const Partition& xi, int p) {
  if (p < 2) throw InvalidParams("p must be >= 2");
  // Beta numbers xi + theta with theta = (m-1, ..., 0), m = l(xi)+1; the
  // smallest entry of theta is 0.
  const int m = xi.length() + 1;
  std::set<int> beta;
  for (int i = 0; i < m; ++i) beta.insert(xi.part(i) + (m - 1 - i));
  for (int b : beta)
    for (int v = b - p; v >= 0; v -= p)
      if (!beta.contains(v)) return false;
  return true;
}

int greatest_hook(const Partition& xi) { return xi.empty() ? 0 : xi.first() + xi.length() - 1; }

bool in_Lambda_p(const DominantWeight& lambda, int p) {
  for (int h = 1; h <= 2; ++h) {
    const Partition& part = lambda.component(h);
    if (part.first() + part.length() > p) return false;
  }
  return true;
}

void check_wall_params(int n, int s1, int s2, int p) {
  if (p < 2) throw InvalidParams("p must be >= 2");
  if (n < 2) throw InvalidParams("n must be >= 2 to place both walls");
  const int cap = std::min(n, p);
  if (s1 < 1 || s1 > cap || s2 < 1 || s2 > cap)
    throw InvalidParams("s1, s2 must lie in {1, ..., min(n,p)} = {1, ..., " + std::to_string(cap) + "}");
  if (s1 + s2 > n) throw InvalidParams("s1 + s2 must be <= n");
}

bool in_Lambda_s1s2(const DominantWeight& lambda, int s1, int s2, int p) {
  check_wall_params(lambda.rank(), s1, s2, p);
  const int s[] = {s1, s2};
  for (int h = 1; h <= 2; ++h) {
    const Partition& part = lambda.component(h);
    const int sh = s[h - 1];
    if (part.length() > sh || sh > p - part.first()) return false;
  }
  return true;
}

std::optional<int> in_Lambda_rs(const DominantWeight& lambda, int r, int s) {
  const int t = r - lambda.lambda1().size();
  if (t < 0 || s - lambda.lambda2().size() != t) return std::nullopt;
  return t;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> current;
  partitions_rec(k, k, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<DominantWeight> weights_up_to(int n, int max_size) {
  std::vector<DominantWeight> out;
  const auto parts = partitions_up_to(max_size);
  for (const auto& a : parts)
    for (const auto& b : parts)
      if (a.size() + b.size() <= max_size && a.length() + b.length() <= n) out.emplace_back(n, a, b);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int max_part) -> void {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) == rows) return;
    for (int part = 1; part <= max_part; ++part) {
      current.push_back(part);
      self(self, part);
      current.pop_back();
    }
  };
  rec(rec, cols);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DominantWeight> weights_in_Lambda(int n, int s1, int s2, int p) {
  check_wall_params(n, s1, s2, p);
  std::vector<DominantWeight> out;
  for (const auto& a : partitions_in_box(s1, p - s1))
    for (const auto& b : partitions_in_box(s2, p - s2)) out.emplace_back(n, a, b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace glcaps
