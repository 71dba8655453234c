#pragma once

// Exact arithmetic in the Z-span of Weyl characters chi(mu) of GL_n.
// Characters only ever live in the chi-basis: tensoring with V or V* is
// Brauer's formula on supports, so no weight multiplicities are needed.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>

#include "glcaps/weights.hpp"

namespace glcaps {

using BigInt = boost::multiprecision::cpp_int;

class CharacterCombination {
 public:
  using Map = std::map<DominantWeight, BigInt>;

  CharacterCombination() = default;
  explicit CharacterCombination(int n) : n_(n) {}

  static CharacterCombination single(const DominantWeight& w, BigInt coefficient = 1);

  // Rank of the weights; 0 while empty and rank-agnostic.
  int rank() const noexcept { return n_; }
  const Map& terms() const& noexcept { return coeffs_; }
  Map terms() && { return std::move(coeffs_); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  BigInt coefficient(const DominantWeight& w) const;
  std::set<DominantWeight> support() const;

  // Throws InvalidParams on a rank mismatch. Zero results are erased.
  void add(const DominantWeight& w, const BigInt& coefficient);

  CharacterCombination& operator+=(const CharacterCombination& other);
  CharacterCombination& operator-=(const CharacterCombination& other);
  CharacterCombination& operator*=(const BigInt& factor);

  friend CharacterCombination operator+(CharacterCombination a, const CharacterCombination& b) { return a += b; }
  friend CharacterCombination operator-(CharacterCombination a, const CharacterCombination& b) { return a -= b; }
  friend CharacterCombination operator*(CharacterCombination a, const BigInt& k) { return a *= k; }
  friend CharacterCombination operator*(const BigInt& k, CharacterCombination a) { return a *= k; }

  // Equal as elements of the character ring (ranks of zero elements ignored).
  friend bool operator==(const CharacterCombination& a, const CharacterCombination& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  int n_ = 0;
  Map coeffs_;
};

// Dominant weights reached by adding a box to lambda1 or removing one from
// lambda2 (Supp1), resp. removing from lambda1 or adding to lambda2 (Supp2).
// Candidates with l(mu1)+l(mu2) > n are dropped: their chi vanishes.
std::set<DominantWeight> supp1(const DominantWeight& lambda);
std::set<DominantWeight> supp2(const DominantWeight& lambda);

enum class TensorFactor { V, Dual };

CharacterCombination tensor_step(const CharacterCombination& c, TensorFactor factor);

// ch V^{(x)r} (x) (V*)^{(x)s} in the chi-basis, by r steps of V then s of V*.
CharacterCombination mixed_tensor_character(int r, int s, int n);

// Number of standard Young tableaux of shape mu (hook length formula).
BigInt specht_dim(const Partition& mu);

// psi_{r,s} = sum over lambda1 |- r, lambda2 |- s of d_{lambda1} d_{lambda2} chi([lambda1, lambda2]).
// Throws RankTooSmall if r + s > n.
CharacterCombination psi(int r, int s, int n);

BigInt binomial(int n, int k);
BigInt factorial(int n);

}  // namespace glcaps
