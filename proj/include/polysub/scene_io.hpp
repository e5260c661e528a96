#ifndef POLYSUB_SCENE_IO_HPP
#define POLYSUB_SCENE_IO_HPP

// Scene file format (UTF-8, line based, '#' comments):
//   dim <d>
//   colors <m>
//   delta <c>          (optional; color reserved for the bounding simplex)
//   h <color> <a_1> ... <a_d> <b>
// Rationals use the canonical "p" / "p/q" syntax.  The writer is
// deterministic: single spaces, canonical rationals, halfspace order kept.

#include <sstream>
#include <string>
#include <vector>

#include "polysub/scene.hpp"

namespace polysub {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

inline Scene read_scene(const std::string& text) {
  Scene s;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_dim = false, have_colors = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "dim") {
      if (have_dim) throw ParseError(line_no, "duplicate dim");
      if (!(ls >> s.dim) || s.dim < 1) throw ParseError(line_no, "bad dimension");
      have_dim = true;
    } else if (kw == "colors") {
      if (!have_dim) throw ParseError(line_no, "colors before dim");
      if (have_colors) throw ParseError(line_no, "duplicate colors");
      if (!(ls >> s.num_colors) || s.num_colors < 1) throw ParseError(line_no, "bad color count");
      have_colors = true;
    } else if (kw == "delta") {
      if (!have_colors) throw ParseError(line_no, "delta before colors");
      int c;
      if (!(ls >> c) || c < 0 || c >= s.num_colors)
        throw ParseError(line_no, "delta color out of range");
      s.delta_color = c;
    } else if (kw == "h") {
      if (!have_colors) throw ParseError(line_no, "halfspace before header");
      Halfspace h;
      if (!(ls >> h.color)) throw ParseError(line_no, "missing color");
      if (h.color < 0 || h.color >= s.num_colors)
        throw ParseError(line_no, "color " + std::to_string(h.color) + " out of range");
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (static_cast<int>(toks.size()) != s.dim + 1)
        throw ParseError(line_no, "expected " + std::to_string(s.dim + 1) + " rational fields");
      try {
        for (int i = 0; i < s.dim; ++i) h.normal.push_back(parse_rational(toks[i]));
        h.offset = parse_rational(toks.back());
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      if (is_zero_vec(h.normal)) throw ParseError(line_no, "zero normal");
      s.halfspaces.push_back(std::move(h));
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!have_dim || !have_colors) throw ParseError(line_no, "missing dim/colors header");
  if (s.delta_color) {
    int k = 0;
    for (const auto& h : s.halfspaces)
      if (h.color == *s.delta_color) ++k;
    if (k != s.dim + 1) throw ParseError(line_no, "delta color must have exactly d+1 halfspaces");
  }
  s.validate();
  return s;
}

inline std::string write_scene(const Scene& s) {
  std::string out;
  out += "dim " + std::to_string(s.dim) + "\n";
  out += "colors " + std::to_string(s.num_colors) + "\n";
  if (s.delta_color) out += "delta " + std::to_string(*s.delta_color) + "\n";
  for (const auto& h : s.halfspaces) {
    out += "h " + std::to_string(h.color);
    for (const auto& a : h.normal) out += " " + format_rational(a);
    out += " " + format_rational(h.offset) + "\n";
  }
  return out;
}

/// Conventional matrix H-format for one color: a header, then one row
/// "b -a_1 ... -a_d" per halfspace, meaning b - a.x >= 0.
inline std::string export_hrep(const Scene& s, int color) {
  if (color < 0 || color >= s.num_colors) throw std::invalid_argument("color out of range");
  std::vector<const Halfspace*> rows;
  for (const auto& h : s.halfspaces)
    if (h.color == color) rows.push_back(&h);
  std::string out = "H-representation\nbegin\n";
  out += std::to_string(rows.size()) + " " + std::to_string(s.dim + 1) + " rational\n";
  for (const Halfspace* h : rows) {
    out += format_rational(h->offset);
    for (const auto& a : h->normal) out += " " + format_rational(Rational(-a));
    out += "\n";
  }
  out += "end\n";
  return out;
}

}  // namespace polysub

#endif  // POLYSUB_SCENE_IO_HPP
