#include "glcaps/walled_brauer.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "glcaps/error.hpp"
#include "glcaps/multiplicities.hpp"

namespace glcaps {

namespace {

// Vertex layout helpers: 0-based position k in a row.
bool is_top(int v, int width) { return v < width; }
int position(int v, int width) { return v % width; }

}  // namespace

WalledDiagram::WalledDiagram(int r, int s, std::vector<int> mate) : r_(r), s_(s), mate_(std::move(mate)) {
  if (r < 0 || s < 0) throw InvalidParams("walled diagram needs r, s >= 0");
  const int w = r + s;
  if (static_cast<int>(mate_.size()) != 2 * w) throw InvalidParams("matching has the wrong number of vertices");
  for (int v = 0; v < 2 * w; ++v) {
    const int u = mate_[v];
    if (u < 0 || u >= 2 * w || u == v || mate_[u] != v) throw InvalidParams("not a perfect matching");
    const bool left_v = position(v, w) < r;
    const bool left_u = position(u, w) < r;
    const bool vertical = is_top(v, w) != is_top(u, w);
    if (vertical && left_v != left_u) throw InvalidParams("vertical edge crosses the wall");
    if (!vertical && left_v == left_u) throw InvalidParams("horizontal edge does not cross the wall");
  }
}

WalledDiagram WalledDiagram::identity(int r, int s) {
  const int w = r + s;
  std::vector<int> mate(2 * w);
  for (int k = 0; k < w; ++k) {
    mate[k] = w + k;
    mate[w + k] = k;
  }
  return WalledDiagram(r, s, std::move(mate));
}

int WalledDiagram::horizontal_edges() const {
  const int w = width();
  int count = 0;
  for (int k = 0; k < w; ++k)
    if (!is_top(mate_[w + k], w)) ++count;
  return count / 2;
}

std::string format_walled(const WalledDiagram& d) {
  const int w = d.width();
  auto name = [w](int v) { return std::string(is_top(v, w) ? "T" : "B") + std::to_string(position(v, w) + 1); };
  std::string out = std::to_string(d.r()) + " " + std::to_string(d.s()) + " |";
  bool first = true;
  for (int v = 0; v < 2 * w; ++v) {
    if (d.mate(v) < v) continue;
    out += first ? " " : ",";
    out += name(v) + "-" + name(d.mate(v));
    first = false;
  }
  return out;
}

WalledDiagram parse_walled(const std::string& text) {
  static const std::regex header(R"(^\s*(\d+)\s+(\d+)\s*\|\s*(.*?)\s*$)");
  static const std::regex edge(R"(^\s*([TB])(\d+)\s*-\s*([TB])(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, header)) throw ParseError("walled diagram must look like 'r s | T1-B1,...'");
  const int r = std::stoi(m[1]);
  const int s = std::stoi(m[2]);
  const int w = r + s;
  std::vector<int> mate(2 * w, -1);
  const std::string body = m[3];
  std::size_t start = 0;
  while (!body.empty() && start <= body.size()) {
    const std::size_t comma = std::min(body.find(',', start), body.size());
    const std::string item = body.substr(start, comma - start);
    std::smatch e;
    if (!std::regex_match(item, e, edge)) throw ParseError("bad edge '" + item + "'");
    auto vertex = [&](const std::string& row, const std::string& index) {
      const int k = std::stoi(index);
      if (k < 1 || k > w) throw ParseError("vertex index out of range in '" + item + "'");
      return (row == "T" ? 0 : w) + k - 1;
    };
    const int a = vertex(e[1], e[2]);
    const int b = vertex(e[3], e[4]);
    if (mate[a] != -1 || mate[b] != -1) throw ParseError("vertex used twice in '" + item + "'");
    mate[a] = b;
    mate[b] = a;
    start = comma + 1;
  }
  if (std::find(mate.begin(), mate.end(), -1) != mate.end()) throw InvalidParams("not every vertex is matched");
  return WalledDiagram(r, s, std::move(mate));
}

DeltaPoly DeltaPoly::monomial(int degree, BigInt coefficient) {
  DeltaPoly out;
  out.c_.assign(degree + 1, 0);
  out.c_[degree] = std::move(coefficient);
  out.trim();
  return out;
}

void DeltaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt DeltaPoly::evaluate(const BigInt& delta) const {
  BigInt out = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * delta + *it;
  return out;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
  trim();
  return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  DeltaPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  out.trim();
  return out;
}

std::string format_poly(const DeltaPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  const auto& c = poly.coefficients();
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    BigInt mag = c[k] < 0 ? BigInt(-c[k]) : c[k];
    if (out.empty())
      out += c[k] < 0 ? "-" : "";
    else
      out += c[k] < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += "d";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

WalledElement::WalledElement(const WalledDiagram& d, DeltaPoly coefficient) { add(d, coefficient); }

void WalledElement::add(const WalledDiagram& d, const DeltaPoly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<WalledDiagram> enumerate_diagrams(int r, int s) {
  if (r < 0 || s < 0) throw InvalidParams("enumerate_diagrams needs r, s >= 0");
  const int w = r + s;
  // Walled diagrams are in bijection with permutations of r+s points: flip
  // the right-hand side of the permutation diagram upside down.
  auto flip = [&](int v) { return position(v, w) < r ? v : (is_top(v, w) ? v + w : v - w); };
  std::vector<int> sigma(w);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<WalledDiagram> out;
  do {
    std::vector<int> mate(2 * w);
    for (int k = 0; k < w; ++k) {
      const int a = flip(k);
      const int b = flip(w + sigma[k]);
      mate[a] = b;
      mate[b] = a;
    }
    out.emplace_back(r, s, std::move(mate));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(out.begin(), out.end());
  return out;
}

WalledElement multiply(const WalledDiagram& a, const WalledDiagram& b) {
  if (a.r() != b.r() || a.s() != b.s()) throw ShapeMismatch("diagrams have different (r, s)");
  const int w = a.width();
  // Composite graph: a's top row [0, w), the glued middle row [w, 2w) and
  // b's bottom row [2w, 3w). Middle vertices have one edge from each factor.
  auto via_a = [&](int v) { return a.mate(v); };                 // v in [0, 2w)
  auto via_b = [&](int v) { return b.mate(v - w) + w; };         // v in [w, 3w)
  std::vector<int> mate(2 * w, -1);
  std::vector<bool> seen_middle(w, false);
  auto to_result = [w](int v) { return v < w ? v : v - w; };  // outer vertex -> result index
  std::vector<int> outer;
  for (int v = 0; v < w; ++v) outer.push_back(v);
  for (int v = 2 * w; v < 3 * w; ++v) outer.push_back(v);
  for (int v : outer) {
    if (mate[to_result(v)] != -1) continue;
    int cur = v;
    bool use_a = v < w;
    while (true) {
      cur = use_a ? via_a(cur) : via_b(cur);
      if (cur < w || cur >= 2 * w) break;
      seen_middle[cur - w] = true;
      use_a = !use_a;
    }
    mate[to_result(v)] = to_result(cur);
    mate[to_result(cur)] = to_result(v);
  }
  int loops = 0;
  for (int k = 0; k < w; ++k) {
    if (seen_middle[k]) continue;
    ++loops;
    int cur = w + k;
    bool use_a = true;
    do {
      seen_middle[cur - w] = true;
      cur = use_a ? via_a(cur) : via_b(cur);
      use_a = !use_a;
    } while (cur != w + k);
  }
  return WalledElement(WalledDiagram(a.r(), a.s(), std::move(mate)), DeltaPoly::monomial(loops));
}

WalledElement multiply(const WalledElement& a, const WalledElement& b) {
  WalledElement out;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      const WalledElement product = multiply(da, db);
      for (const auto& [d, c] : product.terms()) out.add(d, ca * cb * c);
    }
  return out;
}

BigInt ideal_dim(int r, int s, int t, int i) {
  if (r < 0 || s < 0 || t < 0 || i < 0) throw InvalidParams("ideal_dim needs nonnegative arguments");
  if (t + i > std::min(r, s)) return 0;
  const int r1 = r - t;
  const int s1 = s - t;
  // Bottom row: the i extra horizontal edges; top row: t+i horizontal edges;
  // the remaining vertical edges are bijections on each side.
  return binomial(r1, i) * binomial(s1, i) * factorial(i) * binomial(r, t + i) * binomial(s, t + i) *
         factorial(t + i) * factorial(r1 - i) * factorial(s1 - i);
}

BigInt ideal_rank(int r, int s, int t, int i) {
  if (t > std::min(r, s)) return 0;
  return ideal_dim(r, s, t, i) / (factorial(r - t) * factorial(s - t));
}

BigInt specht_dim_walled(const Partition& lambda1, const Partition& lambda2, int r, int s) {
  const int t = r - lambda1.size();
  if (t < 0 || s - lambda2.size() != t)
    throw NotInLambdaRS("need r - |lambda1| = s - |lambda2| >= 0");
  return binomial(r, t) * binomial(s, t) * factorial(t) * specht_dim(lambda1) * specht_dim(lambda2);
}

bool dimension_identity_check(int r, int s) {
  BigInt total = 0;
  for (int i = 0; i <= std::min(r, s); ++i) {
    const BigInt n_i = binomial(r, i) * binomial(s, i) * factorial(i);
    total += n_i * n_i * factorial(r - i) * factorial(s - i);
  }
  return total == factorial(r + s);
}

std::vector<std::pair<Partition, Partition>> cell_labels(int r, int s) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int t = 0; t <= std::min(r, s); ++t)
    for (const auto& a : partitions_of(r - t))
      for (const auto& b : partitions_of(s - t)) out.emplace_back(a, b);
  return out;
}

namespace {

void check_walled_preconditions(const Partition& mu1, const Partition& mu2, const Partition& lambda1,
                                const Partition& lambda2, int r, int s, long long delta, int p) {
  if (p < 2) throw NotApplicable("p must be >= 2");
  if (r < 0 || s < 0) throw NotApplicable("r and s must be >= 0");
  const int t = r - lambda1.size();
  if (t < 0 || s - lambda2.size() != t) throw NotApplicable("need r - |lambda1| = s - |lambda2| >= 0");
  const int u = r - mu1.size();
  if (u < 0 || s - mu2.size() != u) throw NotApplicable("need r - |mu1| = s - |mu2| >= 0");
  if (lambda1.first() + lambda1.length() > p || lambda2.first() + lambda2.length() > p)
    throw NotApplicable("need lambda^h_1 + l(lambda^h) <= p for h = 1, 2");
  if (r == s && r >= 1 && ((delta % p) + p) % p == 0 && lambda1.empty() && lambda2.empty())
    throw NotApplicable("(lambda1, lambda2) = (0, 0) is excluded when r = s >= 1 and delta = 0 mod p");
}

std::optional<WalledDecomposition> try_at(const Partition& mu1, const Partition& mu2, const Partition& lambda1,
                                          const Partition& lambda2, int n, int p) {
  const int s1 = std::max(lambda1.length(), 1);
  const int s2 = std::max(lambda2.length(), 1);
  if (n < 2 || s1 + s2 > n || std::max(s1, s2) > std::min(n, p)) return std::nullopt;
  const DominantWeight lambda(n, lambda1, lambda2);
  const DominantWeight mu(n, mu1, mu2);
  return WalledDecomposition{tilting_mult(lambda, mu, s1, s2, p), n, s1, s2};
}

}  // namespace

WalledDecomposition walled_decomp_number(const Partition& mu1, const Partition& mu2, const Partition& lambda1,
                                         const Partition& lambda2, int r, int s, long long delta, int p) {
  check_walled_preconditions(mu1, mu2, lambda1, lambda2, r, s, delta, p);
  int n = r + s + static_cast<int>((((delta - (r + s)) % p) + p) % p);
  for (; n <= r + s + 3 * p; n += p)
    if (auto res = try_at(mu1, mu2, lambda1, lambda2, n, p)) return *res;
  throw NotApplicable("no admissible n <= r + s + 3p with lambda in Lambda(s1, s2)");
}

WalledDecomposition walled_decomp_number_at(const Partition& mu1, const Partition& mu2, const Partition& lambda1,
                                            const Partition& lambda2, int r, int s, int n, int p) {
  check_walled_preconditions(mu1, mu2, lambda1, lambda2, r, s, n, p);
  if (n < r + s) throw NotApplicable("need n >= r + s");
  if (auto res = try_at(mu1, mu2, lambda1, lambda2, n, p)) return *res;
  throw NotApplicable("lambda does not fit Lambda(s1, s2) at this n");
}

}  // namespace glcaps
