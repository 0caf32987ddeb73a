#include "orbitspace/format.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

namespace orbitspace {

namespace {

std::string pair_text(const SeifertPair& sp) {
  std::string out = "(" + std::to_string(sp.alpha);
  if (sp.beta) out += ":" + std::to_string(*sp.beta);
  out += ")";
  return out;
}

std::string sphere_line(const BoundarySphere& s) {
  return "sphere e=" + std::to_string(s.euler_number);
}

std::string point_line(const IsolatedFixedPoint& p) {
  return std::string("point index=") + (p.index >= 0 ? "+1" : "-1");
}

std::string arc_line(const WeightedArc& a) {
  std::string out = "arc b1=" + std::to_string(a.b_start) +
                    " b2=" + std::to_string(a.b_end) + " pairs=";
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    if (i > 0) out += ",";
    out += pair_text(a.pairs[i]);
  }
  return out;
}

std::string circle_line(const WeightedCircle& c) {
  std::string out = "circle segments=";
  for (std::size_t i = 0; i < c.segments.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c.segments[i].alpha);
  }
  out += " unknotted=";
  out += c.unknotted ? "true" : "false";
  return out;
}

std::vector<std::string> component_lines(const OrbitSpaceData& o) {
  const OrbitSpaceData c = canonicalize(o);
  std::vector<std::string> lines;
  for (const auto& s : c.boundary_spheres) lines.push_back(sphere_line(s));
  for (const auto& p : c.points) lines.push_back(point_line(p));
  for (const auto& a : c.arcs) lines.push_back(arc_line(a));
  for (const auto& w : c.circles) lines.push_back(circle_line(w));
  return lines;
}

struct Cursor {
  std::string_view line;
  int line_no = 0;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_no, static_cast<int>(pos) + 1, what);
  }

  void skip_spaces() {
    while (pos < line.size() && line[pos] == ' ') ++pos;
  }

  bool done() {
    skip_spaces();
    return pos >= line.size();
  }

  // Consumes `key=` and returns the raw value token (up to a space).
  std::string_view value_after(std::string_view key) {
    skip_spaces();
    if (line.substr(pos, key.size()) != key || pos + key.size() >= line.size() ||
        line[pos + key.size()] != '=') {
      fail("expected '" + std::string(key) + "='");
    }
    pos += key.size() + 1;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ') ++pos;
    return line.substr(start, pos - start);
  }

  int parse_int(std::string_view token, const char* what) const {
    int value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++begin;  // from_chars rejects '+'
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end) {
      fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
  }
};

std::vector<SeifertPair> parse_pairs(Cursor& cur, std::string_view token) {
  std::vector<SeifertPair> pairs;
  std::size_t i = 0;
  while (i < token.size()) {
    if (token[i] != '(') cur.fail("expected '(' in pairs list");
    const std::size_t close = token.find(')', i);
    if (close == std::string_view::npos) cur.fail("unterminated pair");
    std::string_view body = token.substr(i + 1, close - i - 1);
    SeifertPair sp;
    const std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) {
      sp.alpha = cur.parse_int(body, "multiplicity");
    } else {
      sp.alpha = cur.parse_int(body.substr(0, colon), "multiplicity");
      sp.beta = cur.parse_int(body.substr(colon + 1), "Seifert beta");
    }
    pairs.push_back(sp);
    i = close + 1;
    if (i < token.size()) {
      if (token[i] != ',') cur.fail("expected ',' between pairs");
      ++i;
    }
  }
  if (pairs.empty()) cur.fail("empty pairs list");
  return pairs;
}

std::vector<SeifertPair> parse_segments(Cursor& cur, std::string_view token) {
  std::vector<SeifertPair> segments;
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t comma = token.find(',', start);
    if (comma == std::string_view::npos) comma = token.size();
    segments.push_back(
        {cur.parse_int(token.substr(start, comma - start), "multiplicity"),
         std::nullopt});
    if (comma == token.size()) break;
    start = comma + 1;
  }
  return segments;
}

}  // namespace

OrbitSpaceData parse_orbit_file(std::string_view text) {
  OrbitSpaceData o;
  bool saw_header = false;
  int line_no = 0;
  std::size_t offset = 0;

  while (offset <= text.size()) {
    std::size_t eol = text.size();
    if (offset < text.size()) {
      if (const std::size_t nl = text.find('\n', offset);
          nl != std::string_view::npos) {
        eol = nl;
      }
    }
    std::string_view raw = text.substr(offset, eol - offset);
    ++line_no;
    const std::size_t next_offset = eol + 1;

    std::string_view line = raw;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    std::size_t first = 0;
    while (first < line.size() && (line[first] == ' ' || line[first] == '\t')) {
      ++first;
    }
    line = line.substr(first);

    if (!line.empty()) {
      Cursor cur{line, line_no, 0};
      if (!saw_header) {
        if (line != "orbitspace v1") {
          cur.fail("expected header 'orbitspace v1'");
        }
        saw_header = true;
      } else {
        std::size_t sp = 0;
        while (sp < line.size() && line[sp] != ' ') ++sp;
        const std::string_view directive = line.substr(0, sp);
        cur.pos = sp;
        if (directive == "sphere") {
          o.boundary_spheres.push_back(
              {cur.parse_int(cur.value_after("e"), "integer")});
        } else if (directive == "point") {
          const std::string_view token = cur.value_after("index");
          if (token != "+1" && token != "-1") {
            cur.fail("point index must be literally +1 or -1");
          }
          o.points.push_back({token == "+1" ? +1 : -1});
        } else if (directive == "arc") {
          WeightedArc arc;
          arc.b_start = cur.parse_int(cur.value_after("b1"), "integer");
          arc.b_end = cur.parse_int(cur.value_after("b2"), "integer");
          arc.pairs = parse_pairs(cur, cur.value_after("pairs"));
          o.arcs.push_back(arc);
        } else if (directive == "circle") {
          WeightedCircle circle;
          circle.segments = parse_segments(cur, cur.value_after("segments"));
          const std::string_view token = cur.value_after("unknotted");
          if (token != "true" && token != "false") {
            cur.fail("unknotted must be true or false");
          }
          circle.unknotted = token == "true";
          o.circles.push_back(circle);
        } else {
          cur.pos = 0;
          cur.fail("unknown directive '" + std::string(directive) + "'");
        }
        if (!cur.done()) {
          cur.fail("trailing input after directive");
        }
      }
    }

    if (eol == text.size()) break;
    offset = next_offset;
  }

  if (!saw_header) {
    throw ParseError(line_no, 1, "missing header 'orbitspace v1'");
  }
  return o;
}

std::string serialize_orbit_file(const OrbitSpaceData& o) {
  std::string out = "orbitspace v1\n";
  for (const auto& line : component_lines(o)) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string serialize_components_inline(const OrbitSpaceData& o) {
  const auto lines = component_lines(o);
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += "; ";
    out += lines[i];
  }
  return out;
}

std::string digest_text(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string digest_orbit(const OrbitSpaceData& o) {
  return digest_text("orbit\n" + serialize_orbit_file(o));
}

}  // namespace orbitspace
