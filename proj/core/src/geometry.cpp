#include "domino3d/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace domino3d {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFloor: return "EmptyFloor";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DoesNotFit: return "DoesNotFit";
    case ErrorCode::InvalidSite: return "InvalidSite";
    case ErrorCode::InconsistentGhosts: return "InconsistentGhosts";
    case ErrorCode::NoRoute: return "NoRoute";
    case ErrorCode::PointOnCurve: return "PointOnCurve";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NotUntangled: return "NotUntangled";
    case ErrorCode::InvalidSock: return "InvalidSock";
    case ErrorCode::Unbalanced: return "Unbalanced";
  }
  return "Error";
}

const char* color_name(Color c) { return c == Color::White ? "white" : "black"; }

FloorPlan::FloorPlan(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), RowMajorLess{});
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

FloorPlan FloorPlan::rectangle(int width, int height, int x0, int y0) {
  std::vector<Cell> cells;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) cells.push_back({x0 + x, y0 + y});
  return FloorPlan(std::move(cells));
}

bool FloorPlan::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c, RowMajorLess{});
}

BoundingBox FloorPlan::bounds() const {
  BoundingBox b;
  if (cells_.empty()) return b;
  b.min_x = b.max_x = cells_[0].x;
  b.min_y = b.max_y = cells_[0].y;
  for (Cell c : cells_) {
    b.min_x = std::min(b.min_x, c.x);
    b.max_x = std::max(b.max_x, c.x);
    b.min_y = std::min(b.min_y, c.y);
    b.max_y = std::max(b.max_y, c.y);
  }
  return b;
}

namespace {

const Cell kDirs4[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Number of 4-connected components of the cells of `box` accepted by `inside`.
template <class Pred>
int count_components(const BoundingBox& box, Pred inside) {
  int w = box.width(), h = box.height();
  std::vector<char> seen(std::size_t(w) * h, 0);
  auto idx = [&](Cell c) { return std::size_t(c.y - box.min_y) * w + (c.x - box.min_x); };
  int comps = 0;
  std::vector<Cell> stack;
  for (int y = box.min_y; y <= box.max_y; ++y)
    for (int x = box.min_x; x <= box.max_x; ++x) {
      Cell s{x, y};
      if (!inside(s) || seen[idx(s)]) continue;
      ++comps;
      seen[idx(s)] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell d : kDirs4) {
          Cell n = c + d;
          if (!box.contains(n) || !inside(n) || seen[idx(n)]) continue;
          seen[idx(n)] = 1;
          stack.push_back(n);
        }
      }
    }
  return comps;
}

}  // namespace

bool FloorPlan::is_connected() const {
  if (cells_.empty()) return false;
  return count_components(bounds(), [&](Cell c) { return contains(c); }) == 1;
}

bool FloorPlan::is_simply_connected() const {
  if (cells_.empty()) return false;
  BoundingBox b = bounds();
  b.min_x -= 1;
  b.min_y -= 1;
  b.max_x += 1;
  b.max_y += 1;
  return count_components(b, [&](Cell c) { return !contains(c); }) == 1;
}

int FloorPlan::white_count() const {
  return int(std::count_if(cells_.begin(), cells_.end(), [](Cell c) { return cell_color(c) == Color::White; }));
}

int FloorPlan::black_count() const { return int(cells_.size()) - white_count(); }

FloorPlan FloorPlan::translated(int dx, int dy) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (Cell c : cells_) out.push_back({c.x + dx, c.y + dy});
  return FloorPlan(std::move(out));
}

bool TwoStoryRegion::contains(CubeCoord c) const {
  if (c.z == 0) return top_.contains(c.cell());
  if (c.z == 1) return bottom_.contains(c.cell());
  return false;
}

std::vector<CubeCoord> TwoStoryRegion::cubes() const {
  std::vector<CubeCoord> out;
  out.reserve(cube_count());
  for (Cell c : top_.cells()) out.push_back({c.x, c.y, 0});
  for (Cell c : bottom_.cells()) out.push_back({c.x, c.y, 1});
  return out;
}

int TwoStoryRegion::white_cube_count() const {
  int n = 0;
  for (const auto& c : cubes()) n += cube_color(c) == Color::White;
  return n;
}

int TwoStoryRegion::black_cube_count() const { return int(cube_count()) - white_cube_count(); }

BoundingBox TwoStoryRegion::bounds() const {
  BoundingBox a = top_.bounds(), b = bottom_.bounds();
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.min_x, b.min_x), std::min(a.min_y, b.min_y), std::max(a.max_x, b.max_x),
          std::max(a.max_y, b.max_y)};
}

TwoStoryRegion TwoStoryRegion::translated(int dx, int dy) const {
  return make_region(top_.translated(dx, dy), bottom_.translated(dx, dy));
}

TwoStoryRegion TwoStoryRegion::normalized() const {
  BoundingBox b = bounds();
  int dx = -b.min_x, dy = -b.min_y;
  if (((dx + dy) & 1) != 0) return *this;
  return translated(dx, dy);
}

TwoStoryRegion make_region(FloorPlan top, FloorPlan bottom) {
  for (const FloorPlan* f : {&top, &bottom}) {
    const char* which = f == &top ? "top" : "bottom";
    if (f->empty()) throw Error(ErrorCode::EmptyFloor, std::string(which) + " floor has no cells");
    if (!f->is_connected())
      throw Error(ErrorCode::NotSimplyConnected, std::string(which) + " floor is not connected");
    if (!f->is_simply_connected())
      throw Error(ErrorCode::NotSimplyConnected, std::string(which) + " floor has a hole");
  }
  TwoStoryRegion r;
  r.top_ = std::move(top);
  r.bottom_ = std::move(bottom);
  std::vector<Cell> common;
  std::set_intersection(r.top_.cells().begin(), r.top_.cells().end(), r.bottom_.cells().begin(),
                        r.bottom_.cells().end(), std::back_inserter(common), RowMajorLess{});
  r.common_ = FloorPlan(std::move(common));
  for (int z = 0; z < 2; ++z)
    for (Cell c : r.floor(z).cells())
      if (!r.common_.contains(c)) r.holes_.push_back({c, z});
  std::sort(r.holes_.begin(), r.holes_.end(),
            [](const Hole& a, const Hole& b) { return RowMajorLess{}(a.cell, b.cell) || (a.cell == b.cell && a.z < b.z); });
  for (const Hole& h : r.holes_) (h.color() == Color::White ? r.sources_ : r.sinks_).push_back(h);
  return r;
}

TwoStoryRegion make_duplex(FloorPlan floor) { return make_region(floor, floor); }

TwoStoryRegion make_box(int width, int height) { return make_duplex(FloorPlan::rectangle(width, height)); }

namespace {

FloorPlan parse_block(const std::vector<std::string>& lines, int first_line) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const std::string& line = lines[r];
    for (std::size_t c = 0; c < line.size(); ++c) {
      char ch = line[c];
      if (ch == '#') {
        cells.push_back({int(c), int(r)});
      } else if (ch != '.') {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(first_line + r + 1) + ": unexpected character '" + ch + "'");
      }
    }
  }
  return FloorPlan(std::move(cells));
}

}  // namespace

TwoStoryRegion parse_region(const std::string& text) {
  std::vector<std::vector<std::string>> blocks;
  std::vector<int> starts;
  std::istringstream in(text);
  std::string line;
  bool gap = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == ';') continue;
    auto last = line.find_last_not_of(" \t");
    line = last == std::string::npos ? std::string() : line.substr(0, last + 1);
    if (line.empty()) {
      gap = true;
      continue;
    }
    if (gap) {
      blocks.emplace_back();
      starts.push_back(lineno - 1);
      gap = false;
    }
    blocks.back().push_back(line);
  }
  if (blocks.empty()) throw Error(ErrorCode::EmptyFloor, "region text has no rows");
  if (blocks.size() > 2) throw Error(ErrorCode::ParseError, "more than two floor blocks");
  FloorPlan top = parse_block(blocks[0], starts[0]);
  if (blocks.size() == 1) return make_duplex(top);
  return make_region(top, parse_block(blocks[1], starts[1]));
}

TwoStoryRegion load_region(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_region(ss.str());
}

std::string format_floor(const FloorPlan& f, const BoundingBox& box) {
  std::string out;
  for (int y = 0; y <= box.max_y; ++y) {
    for (int x = 0; x <= box.max_x; ++x) out += f.contains({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string format_region(const TwoStoryRegion& r) {
  BoundingBox b = r.bounds();
  if (b.min_x < 0 || b.min_y < 0) throw Error(ErrorCode::ParseError, "cannot format negative coordinates");
  std::string out = format_floor(r.top(), b);
  if (!r.is_duplex()) out += "\n" + format_floor(r.bottom(), b);
  return out;
}

}  // namespace domino3d
