#pragma once

// Partitions, dominant weights of GL_n written as bipartitions, rho, affine
// reflections under the dot action and the weight-set predicates used by the
// rest of the library.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace glcaps {

// Integer n-tuple: a weight of GL_n, or a weight shifted by rho.
using Tuple = std::vector<int>;

class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros and strips them. Throws InvalidParams for
  // negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  // 0-based; zero past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int first() const noexcept { return part(0); }

  // Conjugate partition.
  Partition transpose() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// A dominant weight [lambda1, lambda2] of GL_n with l(lambda1)+l(lambda2) <= n.
class DominantWeight {
 public:
  DominantWeight() = default;
  // Throws InvalidParams if n < 1 or the lengths do not fit.
  DominantWeight(int n, Partition lambda1, Partition lambda2);

  int rank() const noexcept { return n_; }
  const Partition& lambda1() const noexcept { return lambda1_; }
  const Partition& lambda2() const noexcept { return lambda2_; }
  const Partition& component(int h) const noexcept { return h == 1 ? lambda1_ : lambda2_; }

  // Coordinate sum |lambda1| - |lambda2|.
  int degree() const noexcept { return lambda1_.size() - lambda2_.size(); }

  auto operator<=>(const DominantWeight&) const = default;

 private:
  int n_ = 1;
  Partition lambda1_;
  Partition lambda2_;
};

// s_{alpha,l} for alpha = eps_i - eps_j, 1 <= i < j <= n.
struct AffineReflection {
  int i = 1;
  int j = 2;
  int level = 0;

  auto operator<=>(const AffineReflection&) const = default;
};

Tuple to_tuple(const DominantWeight& w);
// Throws NotDominant if t is not weakly decreasing (or empty).
DominantWeight from_tuple(std::span<const int> t);

Tuple rho(int n);
Tuple plus_rho(const DominantWeight& w);

// a = x_i - x_j - l p
int reflection_shift(const AffineReflection& s, std::span<const int> x, int p);
Tuple apply_reflection(const AffineReflection& s, std::span<const int> x, int p);

struct DotSorted {
  DominantWeight weight;
  int sign = 1;
};

// x is mu + rho. Empty iff chi(mu) = 0, i.e. x has a repeated entry.
std::optional<DotSorted> dot_sort(std::span<const int> x);

bool is_p_core(const Partition& xi, int p);
int greatest_hook(const Partition& xi);

bool in_Lambda_p(const DominantWeight& lambda, int p);

// Throws InvalidParams unless 1 <= s1,s2 <= min(n,p) and s1+s2 <= n.
void check_wall_params(int n, int s1, int s2, int p);
bool in_Lambda_s1s2(const DominantWeight& lambda, int s1, int s2, int p);

// The t >= 0 with |lambda1| = r-t and |lambda2| = s-t, if any.
std::optional<int> in_Lambda_rs(const DominantWeight& lambda, int r, int s);

// Enumeration helpers.
std::vector<Partition> partitions_of(int k);
std::vector<Partition> partitions_up_to(int max_size);
// Partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);
// All dominant weights of GL_n with |lambda1|+|lambda2| <= max_size.
std::vector<DominantWeight> weights_up_to(int n, int max_size);
std::vector<DominantWeight> weights_in_Lambda(int n, int s1, int s2, int p);

}  // namespace glcaps
