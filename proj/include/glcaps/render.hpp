#pragma once

// Text and SVG renderings of arrow and cap diagrams.

#include <string>

#include "glcaps/caps.hpp"

namespace glcaps {

enum class Glyphs { Ascii, Unicode };

// "shift=<label> below-wall=<gap> above-wall=<gap> wall=<position>"
std::string render_header(const ArrowDiagram& d, const DiagramString& str);

// One line of symbols.
std::string render_compact(const DiagramString& str, Glyphs glyphs);

// Labels row, arrows above the line (∨), arrows below the line (∧), with the
// above-the-line wall drawn as '!' and the below-the-line wall as '|'.
std::string render_rows(const DiagramString& str, Glyphs glyphs);

// Symbol row followed by one row per nesting depth, each cap drawn as a
// bracket pair "( ... )" tagged with its 1-based index; then a line per cap
// with endpoints (1-based) and orientation.
std::string render_caps(const CapDiagram& d, Glyphs glyphs);

std::string render_svg(const CapDiagram& d);

std::string orientation_name(CapOrientation o);

}  // namespace glcaps
