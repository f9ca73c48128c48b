#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domino3d/error.hpp"

namespace domino3d {

enum class Color : std::uint8_t { White, Black };

inline Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }
const char* color_name(Color c);

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
  Cell operator+(Cell o) const { return {x + o.x, y + o.y}; }
  Cell operator-(Cell o) const { return {x - o.x, y - o.y}; }
};

// Ordered by (y, x): row-major, matching the enumeration order.
struct RowMajorLess {
  bool operator()(Cell a, Cell b) const { return a.y != b.y ? a.y < b.y : a.x < b.x; }
};

struct CubeCoord {
  int x = 0;
  int y = 0;
  int z = 0;
  friend auto operator<=>(const CubeCoord&, const CubeCoord&) = default;
  Cell cell() const { return {x, y}; }
};

// (z, y, x) lexicographic order used by the enumerator.
struct ZyxLess {
  bool operator()(const CubeCoord& a, const CubeCoord& b) const {
    if (a.z != b.z) return a.z < b.z;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  }
};

inline Color cube_color(CubeCoord c) { return ((c.x + c.y + c.z) & 1) == 0 ? Color::White : Color::Black; }
inline Color cell_color(Cell c) { return ((c.x + c.y) & 1) == 0 ? Color::White : Color::Black; }

struct BoundingBox {
  int min_x = 0, min_y = 0, max_x = -1, max_y = -1;  // inclusive cell bounds
  bool empty() const { return max_x < min_x; }
  int width() const { return empty() ? 0 : max_x - min_x + 1; }
  int height() const { return empty() ? 0 : max_y - min_y + 1; }
  bool contains(Cell c) const { return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y; }
};

class FloorPlan {
 public:
  FloorPlan() = default;
  explicit FloorPlan(std::vector<Cell> cells);

  static FloorPlan rectangle(int width, int height, int x0 = 0, int y0 = 0);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const;
  BoundingBox bounds() const;

  bool is_connected() const;
  bool is_simply_connected() const;

  int white_count() const;
  int black_count() const;

  FloorPlan translated(int dx, int dy) const;

  friend bool operator==(const FloorPlan&, const FloorPlan&) = default;

 private:
  std::vector<Cell> cells_;  // sorted row-major, unique
};

struct Hole {
  Cell cell;
  int z = 0;  // floor holding the cube: 0 top, 1 bottom
  Color color() const { return cube_color({cell.x, cell.y, z}); }
  friend auto operator<=>(const Hole&, const Hole&) = default;
};

class TwoStoryRegion {
 public:
  TwoStoryRegion() = default;

  const FloorPlan& top() const { return top_; }
  const FloorPlan& bottom() const { return bottom_; }
  const FloorPlan& floor(int z) const { return z == 0 ? top_ : bottom_; }
  const FloorPlan& common() const { return common_; }
  const std::vector<Hole>& holes() const { return holes_; }
  // Holes whose cube is white / black, sorted by (y, x).
  const std::vector<Hole>& sources() const { return sources_; }
  const std::vector<Hole>& sinks() const { return sinks_; }

  bool is_duplex() const { return top_ == bottom_; }
  bool contains(CubeCoord c) const;
  bool is_common(Cell c) const { return common_.contains(c); }
  std::vector<CubeCoord> cubes() const;  // sorted (z, y, x)
  std::size_t cube_count() const { return top_.size() + bottom_.size(); }
  int white_cube_count() const;
  int black_cube_count() const;
  BoundingBox bounds() const;

  TwoStoryRegion translated(int dx, int dy) const;
  // Translate so the bounding box starts at the origin when that keeps colors.
  TwoStoryRegion normalized() const;

  friend bool operator==(const TwoStoryRegion& a, const TwoStoryRegion& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }

 private:
  friend TwoStoryRegion make_region(FloorPlan top, FloorPlan bottom);
  FloorPlan top_, bottom_, common_;
  std::vector<Hole> holes_, sources_, sinks_;
};

TwoStoryRegion make_region(FloorPlan top, FloorPlan bottom);
TwoStoryRegion make_duplex(FloorPlan floor);
TwoStoryRegion make_box(int width, int height);

// Region text format: '#' present, '.' absent, ';' comment lines, a blank
// line separates the top block from the bottom block.
TwoStoryRegion parse_region(const std::string& text);
TwoStoryRegion load_region(const std::string& path);
std::string format_region(const TwoStoryRegion& r);
std::string format_floor(const FloorPlan& f, const BoundingBox& box);

}  // namespace domino3d

template <>
struct std::hash<domino3d::Cell> {
  std::size_t operator()(const domino3d::Cell& c) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t(std::uint32_t(c.x)) << 32) | std::uint32_t(c.y));
  }
};
