#include "glcaps/characters.hpp"

#include "glcaps/error.hpp"

namespace glcaps {

CharacterCombination CharacterCombination::single(const DominantWeight& w, BigInt coefficient) {
  CharacterCombination c(w.rank());
  c.add(w, coefficient);
  return c;
}

BigInt CharacterCombination::coefficient(const DominantWeight& w) const {
  const auto it = coeffs_.find(w);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

std::set<DominantWeight> CharacterCombination::support() const {
  std::set<DominantWeight> out;
  for (const auto& [w, c] : coeffs_) out.insert(w);
  return out;
}

void CharacterCombination::add(const DominantWeight& w, const BigInt& coefficient) {
  if (coefficient == 0) return;
  if (n_ == 0) n_ = w.rank();
  if (w.rank() != n_)
    throw InvalidParams("character combination mixes ranks " + std::to_string(n_) + " and " +
                        std::to_string(w.rank()));
  auto [it, inserted] = coeffs_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CharacterCombination& CharacterCombination::operator+=(const CharacterCombination& other) {
  for (const auto& [w, c] : other.coeffs_) add(w, c);
  return *this;
}

CharacterCombination& CharacterCombination::operator-=(const CharacterCombination& other) {
  for (const auto& [w, c] : other.coeffs_) add(w, -c);
  return *this;
}

CharacterCombination& CharacterCombination::operator*=(const BigInt& factor) {
  if (factor == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, c] : coeffs_) c *= factor;
  return *this;
}

namespace {

std::vector<Partition> add_box(const Partition& xi) {
  std::vector<Partition> out;
  const int len = xi.length();
  for (int row = 0; row <= len; ++row) {
    if (row > 0 && xi.part(row) == xi.part(row - 1)) continue;
    std::vector<int> parts(xi.parts().begin(), xi.parts().end());
    if (row == len)
      parts.push_back(1);
    else
      ++parts[row];
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> remove_box(const Partition& xi) {
  std::vector<Partition> out;
  const int len = xi.length();
  for (int row = 0; row < len; ++row) {
    if (xi.part(row) == xi.part(row + 1)) continue;
    std::vector<int> parts(xi.parts().begin(), xi.parts().end());
    --parts[row];
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::set<DominantWeight> support_moves(const DominantWeight& lambda, bool grow_first) {
  const int n = lambda.rank();
  std::set<DominantWeight> out;
  const auto& l1 = lambda.lambda1();
  const auto& l2 = lambda.lambda2();
  for (const auto& mu1 : grow_first ? add_box(l1) : remove_box(l1))
    if (mu1.length() + l2.length() <= n) out.emplace(n, mu1, l2);
  for (const auto& mu2 : grow_first ? remove_box(l2) : add_box(l2))
    if (l1.length() + mu2.length() <= n) out.emplace(n, l1, mu2);
  return out;
}

}  // namespace

std::set<DominantWeight> supp1(const DominantWeight& lambda) { return support_moves(lambda, true); }
std::set<DominantWeight> supp2(const DominantWeight& lambda) { return support_moves(lambda, false); }

CharacterCombination tensor_step(const CharacterCombination& c, TensorFactor factor) {
  CharacterCombination out(c.rank());
  for (const auto& [w, coeff] : c.terms())
    for (const auto& mu : factor == TensorFactor::V ? supp1(w) : supp2(w)) out.add(mu, coeff);
  return out;
}

CharacterCombination mixed_tensor_character(int r, int s, int n) {
  auto c = CharacterCombination::single(DominantWeight(n, {}, {}));
  for (int i = 0; i < r; ++i) c = tensor_step(c, TensorFactor::V);
  for (int i = 0; i < s; ++i) c = tensor_step(c, TensorFactor::Dual);
  return c;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt specht_dim(const Partition& mu) {
  const Partition conj = mu.transpose();
  BigInt hooks = 1;
  for (int row = 0; row < mu.length(); ++row)
    for (int col = 0; col < mu.part(row); ++col)
      hooks *= (mu.part(row) - col - 1) + (conj.part(col) - row - 1) + 1;
  return factorial(mu.size()) / hooks;
}

CharacterCombination psi(int r, int s, int n) {
  if (r < 0 || s < 0) throw InvalidParams("psi needs r, s >= 0");
  if (r + s > n) throw RankTooSmall("psi_{r,s} needs r + s <= n");
  CharacterCombination out(n);
  for (const auto& a : partitions_of(r)) {
    const BigInt da = specht_dim(a);
    for (const auto& b : partitions_of(s)) out.add(DominantWeight(n, a, b), da * specht_dim(b));
  }
  return out;
}

}  // namespace glcaps
