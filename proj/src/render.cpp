#include "glcaps/render.hpp"

#include <algorithm>
#include <sstream>

namespace glcaps {

namespace {

std::string glyph(Symbol s, Glyphs g) {
  if (g == Glyphs::Ascii) return std::string(1, static_cast<char>(s));
  switch (s) {
    case Symbol::Empty: return "o";
    case Symbol::Down: return "∨";
    case Symbol::Up: return "∧";
    case Symbol::Cross: return "×";
  }
  return "?";
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string orientation_name(CapOrientation o) {
  switch (o) {
    case CapOrientation::Anticlockwise: return "anticlockwise";
    case CapOrientation::Clockwise: return "clockwise";
    case CapOrientation::Unoriented: return "unoriented";
  }
  return "?";
}

std::string render_header(const ArrowDiagram& d, const DiagramString& str) {
  std::ostringstream out;
  out << "p=" << d.p() << " n=" << d.rank() << " s1=" << d.s1() << " s2=" << d.s2() << " shift=" << str.shift
      << " below-wall=" << mod_p(d.below_wall_gap() - 1, d.p()) << "|" << d.below_wall_gap()
      << " above-wall=" << mod_p(d.above_wall_gap() - 1, d.p()) << "!" << d.above_wall_gap()
      << " wall=" << str.wall;
  return out.str();
}

std::string render_compact(const DiagramString& str, Glyphs glyphs) {
  std::string out;
  for (Symbol s : str.symbols) out += glyph(s, glyphs);
  return out;
}

std::string render_rows(const DiagramString& str, Glyphs glyphs) {
  std::string labels, above, below;
  const std::string down = glyph(Symbol::Down, glyphs);
  const std::string up = glyph(Symbol::Up, glyphs);
  for (int pos = 0; pos < str.p; ++pos) {
    if (pos == str.wall && str.wall != 0) {
      labels += " ";
      above += "!";
      below += " ";
    }
    const Symbol s = str.symbols[pos];
    labels += pad_left(std::to_string(str.label_at(pos)), 3);
    above += "  " + ((s == Symbol::Down || s == Symbol::Cross) ? down : std::string("."));
    below += "  " + ((s == Symbol::Up || s == Symbol::Cross) ? up : std::string("."));
  }
  labels += " ";
  above += str.wall == 0 ? "!" : " ";
  below += "|";
  return labels + "\n" + above + "\n" + below + "\n";
}

std::string render_caps(const CapDiagram& d, Glyphs glyphs) {
  const int p = d.base.p;
  const auto& caps = d.caps;
  // Nesting depth of each cap: the number of caps enclosing it.
  std::vector<int> depth(caps.size(), 0);
  int max_depth = -1;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    for (const auto& other : caps)
      if (other.left < caps[i].left && caps[i].right < other.right) ++depth[i];
    max_depth = std::max(max_depth, depth[i]);
  }
  std::string out;
  for (int level = 0; level <= max_depth; ++level) {
    std::string row(2 * p, ' ');
    for (std::size_t i = 0; i < caps.size(); ++i) {
      if (depth[i] != level) continue;
      for (int c = 2 * caps[i].left + 1; c < 2 * caps[i].right; ++c) row[c] = '-';
      row[2 * caps[i].left] = '(';
      row[2 * caps[i].right] = ')';
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  std::string symbols;
  for (int pos = 0; pos < p; ++pos) {
    symbols += glyph(d.base.symbols[pos], glyphs);
    if (pos + 1 < p) symbols += (pos + 1 == d.base.wall) ? "!" : " ";
  }
  out += symbols + "\n";
  for (std::size_t i = 0; i < caps.size(); ++i) {
    out += "cap " + std::to_string(i + 1) + ": " + std::to_string(caps[i].left + 1) + "-" +
           std::to_string(caps[i].right + 1) + " labels " + std::to_string(d.base.label_at(caps[i].left)) + "-" +
           std::to_string(d.base.label_at(caps[i].right)) + " " + orientation_name(orientation(d, caps[i])) + "\n";
  }
  return out;
}

std::string render_svg(const CapDiagram& d) {
  const int p = d.base.p;
  const int step = 40;
  const int margin = 30;
  const int base_y = 40 + step * (p / 2 + 1) / 2;
  const int width = 2 * margin + step * (p - 1);
  const int height = base_y + 60;
  auto x_of = [&](int pos) { return margin + step * pos; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"18\">\n";
  out << "  <line x1=\"" << margin - step / 2 << "\" y1=\"" << base_y << "\" x2=\"" << width - margin + step / 2
      << "\" y2=\"" << base_y << "\" stroke=\"#888\"/>\n";
  auto wall = [&](double x) {
    out << "  <line x1=\"" << x << "\" y1=\"" << base_y - 20 << "\" x2=\"" << x << "\" y2=\"" << base_y + 20
        << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  };
  wall(x_of(p - 1) + step / 2.0);
  if (d.base.wall != 0) wall(x_of(d.base.wall) - step / 2.0);
  for (const auto& cap : d.caps) {
    const int x1 = x_of(cap.left);
    const int x2 = x_of(cap.right);
    const double radius = (x2 - x1) / 2.0;
    const char* colour = orientation(d, cap) == CapOrientation::Unoriented ? "#c00" : "#06c";
    out << "  <path d=\"M " << x1 << " " << base_y << " A " << radius << " " << radius << " 0 0 1 " << x2 << " "
        << base_y << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
  }
  for (int pos = 0; pos < p; ++pos) {
    out << "  <text x=\"" << x_of(pos) << "\" y=\"" << base_y + 6 << "\" text-anchor=\"middle\">"
        << glyph(d.base.symbols[pos], Glyphs::Unicode) << "</text>\n";
    out << "  <text x=\"" << x_of(pos) << "\" y=\"" << base_y + 40 << "\" text-anchor=\"middle\" font-size=\"12\">"
        << d.base.label_at(pos) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace glcaps
