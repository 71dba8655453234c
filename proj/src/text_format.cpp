#include "glcaps/text_format.hpp"

#include <charconv>
#include <vector>

#include "glcaps/error.hpp"

namespace glcaps {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("bad partition part '" + std::string(token) + "'");
    if (value < 0) throw ParseError("partition parts must be non-negative");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw ParseError("partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

DominantWeight parse_bipartition(std::string_view text, int n) {
  const auto slash = text.find('/');
  Partition a = parse_partition(text.substr(0, slash));
  Partition b = slash == std::string_view::npos ? Partition{} : parse_partition(text.substr(slash + 1));
  if (slash != std::string_view::npos && text.find('/', slash + 1) != std::string_view::npos)
    throw ParseError("bipartition has more than one '/'");
  return DominantWeight(n, std::move(a), std::move(b));
}

std::string format_partition(const Partition& xi) {
  if (xi.empty()) return "-";
  std::string out;
  for (int part : xi.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
  }
  return out;
}

std::string format_weight(const DominantWeight& w) {
  return format_partition(w.lambda1()) + "/" + format_partition(w.lambda2());
}

std::string format_tuple(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

}  // namespace glcaps
