#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "domino3d/geometry.hpp"
#include "domino3d/polynomial.hpp"
#include "domino3d/tiling.hpp"

namespace domino3d {

// Integer point in the drawing plane. Callers pick the scale; cell centers
// and sock vertices both live on integer coordinates.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
  Point from, to;
};

// Winding number with y pointing down: a loop that looks counterclockwise
// on screen counts +1. Ray to +x, perturbed by +epsilon in y.
int winding_number(std::span<const Segment> chain, Point p);
int winding_number(std::span<const Point> closed_polyline, Point p);
int winding_number(const std::vector<Cell>& closed_polyline, Cell p);

// A ghost route runs from the hole where a drawing path ends (black cube) to
// the hole where the next path starts (white cube).
struct GhostRoute {
  Hole from;
  Hole to;
  std::vector<Cell> path;  // from.cell ... to.cell, 8-connected
};

struct GhostConnection {
  std::vector<GhostRoute> routes;
};

struct DrawingEdge {
  Cell from, to;
  int floor = 0;
};

struct Jewel {
  Cell cell;
  Color color;
  friend auto operator<=>(const Jewel&, const Jewel&) = default;
};

struct Drawing {
  std::vector<std::vector<Cell>> cycles;  // closed polylines through cell centers
  std::vector<Jewel> jewels;
  std::vector<GhostRoute> ghosts;
  std::vector<DrawingEdge> edges;

  std::size_t trivial_cycle_count() const;
};

// Direction of the drawing edge for a planar dimer: top floor white->black,
// bottom floor black->white.
DrawingEdge oriented_edge(const Dimer& d);

GhostConnection canonical_ghosts(const TwoStoryRegion& r);
GhostConnection random_ghosts(const TwoStoryRegion& r, std::mt19937_64& rng);
// Throws InconsistentGhosts when g is not a valid connection for r.
void check_ghosts(const TwoStoryRegion& r, const GhostConnection& g);

Drawing drawing_of(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g);

LaurentPoly invariant(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g);
std::int64_t twist(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g);
LaurentPoly invariant_of_drawing(const Drawing& d);

// Evaluates the invariant directly on partner arrays of a CubeIndex.
class InvariantCalculator {
 public:
  InvariantCalculator(const CubeIndex& idx, const GhostConnection& g);
  LaurentPoly operator()(std::span<const int> partner) const;

 private:
  const CubeIndex& idx_;
  std::vector<Segment> ghost_segments_;
};

}  // namespace domino3d
