#include "overlap/polygon_io.hpp"

#include <fstream>
#include <sstream>

namespace overlap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw OverlapError(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

PolygonFile parse_polygon_text(std::string_view text) {
  std::vector<std::pair<size_t, std::vector<std::string_view>>> rows;
  size_t lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    std::string_view line = text.substr(pos, nl - pos);
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (!line.empty()) rows.push_back({lineno, split_ws(line)});
    pos = nl + 1;
  }
  if (rows.empty()) throw OverlapError(ErrorCode::EmptyInput, "no polygon header");
  auto& head = rows[0];
  if (head.second.size() != 2 || (head.second[0] != "ortho" && head.second[0] != "general"))
    fail(head.first, "expected 'ortho <n>' or 'general <n>'");
  PolygonFile out;
  out.general = head.second[0] == "general";
  size_t n = 0;
  try {
    n = size_t(std::stoul(std::string(head.second[1])));
  } catch (...) {
    fail(head.first, "bad vertex count");
  }
  if (rows.size() - 1 != n)
    fail(head.first, "header declares " + std::to_string(n) + " vertices, found " +
                         std::to_string(rows.size() - 1));

  std::vector<RPoint> rp;
  std::vector<Point> ip;
  for (size_t k = 1; k < rows.size(); ++k) {
    auto& [ln, tok] = rows[k];
    if (tok.size() != 2) fail(ln, "expected two coordinates");
    try {
      if (out.general) {
        rp.push_back({parse_rational(tok[0]), parse_rational(tok[1])});
      } else {
        i128 x = parse_i128(tok[0]), y = parse_i128(tok[1]);
        if (abs128(x) > kMaxCoord || abs128(y) > kMaxCoord)
          throw OverlapError(ErrorCode::CoordinateOutOfRange,
                             "line " + std::to_string(ln) + ": coordinate magnitude exceeds 2^20");
        ip.push_back({i64(x), i64(y)});
      }
    } catch (const OverlapError&) {
      throw;
    } catch (const std::exception& e) {
      fail(ln, e.what());
    }
  }
  if (!out.general) {
    for (size_t i = 0; i < ip.size(); ++i) {
      const Point& a = ip[i];
      const Point& b = ip[(i + 1) % ip.size()];
      if (a.x != b.x && a.y != b.y)
        throw OverlapError(ErrorCode::NotClosedOrthogonal,
                           "line " + std::to_string(rows[i + 1].first) + ": edge to line " +
                               std::to_string(rows[(i + 1) % ip.size() + 1].first) +
                               " is neither horizontal nor vertical");
    }
    out.ortho = validate_polygon(std::move(ip));
    out.poly = to_general(out.ortho);
  } else {
    out.poly = make_general_polygon(std::move(rp));
  }
  return out;
}

std::string format_polygon(const OrthoPolygon& p) {
  std::string s = "ortho " + std::to_string(p.size()) + "\n";
  for (const Point& q : p.vertices) s += std::to_string(q.x) + " " + std::to_string(q.y) + "\n";
  return s;
}

std::string format_polygon(const GeneralPolygon& p) {
  std::string s = "general " + std::to_string(p.size()) + "\n";
  for (const RPoint& q : p.vertices) s += to_string(q.x) + " " + to_string(q.y) + "\n";
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

PolygonFile read_polygon_file(const std::string& path) { return parse_polygon_text(read_text_file(path)); }

}  // namespace overlap
