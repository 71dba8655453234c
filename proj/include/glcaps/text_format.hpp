#pragma once

// Text encodings shared by the CLI and the JSON output:
//   partition    "3,2"      (empty partition "-")
//   bipartition  "3,2/2,1,1" (either side may be "-" or empty)

#include <string>
#include <string_view>

#include "glcaps/weights.hpp"

namespace glcaps {

Partition parse_partition(std::string_view text);
DominantWeight parse_bipartition(std::string_view text, int n);

std::string format_partition(const Partition& xi);
std::string format_weight(const DominantWeight& w);
std::string format_tuple(const Tuple& t);

}  // namespace glcaps
