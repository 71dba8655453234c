#pragma once

// The walled Brauer algebra B_{r,s}(delta): diagram basis, multiplication with
// delta kept symbolic, dimensions of its cell modules and its decomposition
// numbers via GL_n tilting multiplicities.

#include <map>
#include <string>
#include <vector>

#include "glcaps/characters.hpp"
#include "glcaps/weights.hpp"

namespace glcaps {

// A perfect matching on the top vertices T1..T(r+s) and bottom vertices
// B1..B(r+s), with a wall after position r in each row. Vertical edges stay
// on one side of the wall, horizontal edges cross it.
class WalledDiagram {
 public:
  // mate[v] for v in [0, 2(r+s)): top vertex k is k, bottom vertex k is
  // r+s+k (0-based). Throws InvalidParams for an invalid matching.
  WalledDiagram(int r, int s, std::vector<int> mate);

  static WalledDiagram identity(int r, int s);

  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  int width() const noexcept { return r_ + s_; }
  int mate(int v) const { return mate_[v]; }
  const std::vector<int>& mates() const noexcept { return mate_; }

  // Number of horizontal edges in the bottom row (equal to the top row).
  int horizontal_edges() const;

  auto operator<=>(const WalledDiagram&) const = default;

 private:
  int r_;
  int s_;
  std::vector<int> mate_;
};

// "r s | T1-B1,T2-T3,..."; vertices are 1-based within a row.
std::string format_walled(const WalledDiagram& d);
// Throws ParseError on malformed text, InvalidParams on an invalid matching.
WalledDiagram parse_walled(const std::string& text);

// Coefficients of 1, delta, delta^2, ... with no trailing zeros.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  static DeltaPoly monomial(int degree, BigInt coefficient = 1);

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  BigInt evaluate(const BigInt& delta) const;

  DeltaPoly& operator+=(const DeltaPoly& other);
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  friend bool operator==(const DeltaPoly&, const DeltaPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

std::string format_poly(const DeltaPoly& poly);

class WalledElement {
 public:
  WalledElement() = default;
  explicit WalledElement(const WalledDiagram& d, DeltaPoly coefficient = DeltaPoly::monomial(0));

  const std::map<WalledDiagram, DeltaPoly>& terms() const& noexcept { return terms_; }
  std::map<WalledDiagram, DeltaPoly> terms() && { return std::move(terms_); }
  void add(const WalledDiagram& d, const DeltaPoly& coefficient);

  friend bool operator==(const WalledElement&, const WalledElement&) = default;

 private:
  std::map<WalledDiagram, DeltaPoly> terms_;
};

// All (r+s)! basis diagrams, in increasing order.
std::vector<WalledDiagram> enumerate_diagrams(int r, int s);

// a stacked on top of b: the top row of a and the bottom row of b remain;
// each closed loop contributes a factor delta. Throws ShapeMismatch.
WalledElement multiply(const WalledDiagram& a, const WalledDiagram& b);
WalledElement multiply(const WalledElement& a, const WalledElement& b);

// Dimension of Z_{t,i} = I_{t,i} / I_{t,i+1}: diagrams whose bottom row has
// exactly t+i horizontal edges, t of them joining the j-th nodes from the
// right on either side of the wall (1 <= j <= t). Zero if t+i > min(r, s).
BigInt ideal_dim(int r, int s, int t, int i);
// ideal_dim divided by |Sym_{r-t} x Sym_{s-t}|; for i = 0 this is the free
// rank C(r,t) C(s,t) t! of Z_t.
BigInt ideal_rank(int r, int s, int t, int i);

// C(r,t) C(s,t) t! d_{lambda1} d_{lambda2}. Throws NotInLambdaRS.
BigInt specht_dim_walled(const Partition& lambda1, const Partition& lambda2, int r, int s);

// sum_i n_i^2 (r-i)! (s-i)! == (r+s)! with n_i = C(r,i) C(s,i) i!.
bool dimension_identity_check(int r, int s);

// Labels (lambda1, lambda2) with |lambda1| = r-t, |lambda2| = s-t, t >= 0.
std::vector<std::pair<Partition, Partition>> cell_labels(int r, int s);

struct WalledDecomposition {
  int value = 0;
  int n = 0;  // rank of the GL_n used
  int s1 = 0;
  int s2 = 0;
};

// [S(mu1, mu2) : D(lambda1, lambda2)] over a field of characteristic p with
// delta reduced mod p. Uses the smallest admissible n >= r+s with n = delta
// mod p. Throws NotApplicable when a precondition fails.
WalledDecomposition walled_decomp_number(const Partition& mu1, const Partition& mu2, const Partition& lambda1,
                                         const Partition& lambda2, int r, int s, long long delta, int p);
// Same at a given n (n >= r+s, n = delta mod p).
WalledDecomposition walled_decomp_number_at(const Partition& mu1, const Partition& mu2, const Partition& lambda1,
                                            const Partition& lambda2, int r, int s, int n, int p);

}  // namespace glcaps
