#pragma once

#include "overlap/general_polygon.hpp"

#include <string>
#include <string_view>

namespace overlap {

struct PolygonFile {
  bool general = false;
  OrthoPolygon ortho;    // set when !general
  GeneralPolygon poly;   // always set
};

// Format: "ortho <n>" or "general <n>", then n lines "x y"; '#' starts a comment.
PolygonFile parse_polygon_text(std::string_view text);
std::string format_polygon(const OrthoPolygon& p);
std::string format_polygon(const GeneralPolygon& p);

PolygonFile read_polygon_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace overlap
