#pragma once

#include "glcaps/text_format.hpp"
#include "glcaps/weights.hpp"

namespace testing {

inline glcaps::DominantWeight W(const char* text, int n) { return glcaps::parse_bipartition(text, n); }

}  // namespace testing
