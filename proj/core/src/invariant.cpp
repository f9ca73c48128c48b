#include "domino3d/invariant.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace domino3d {

namespace {

bool on_segment(const Segment& s, Point p) {
  std::int64_t cross = (s.to.x - s.from.x) * (p.y - s.from.y) - (s.to.y - s.from.y) * (p.x - s.from.x);
  if (cross != 0) return false;
  return std::min(s.from.x, s.to.x) <= p.x && p.x <= std::max(s.from.x, s.to.x) &&
         std::min(s.from.y, s.to.y) <= p.y && p.y <= std::max(s.from.y, s.to.y);
}

Point center(Cell c) { return {c.x, c.y}; }

}  // namespace

int winding_number(std::span<const Segment> chain, Point p) {
  int w = 0;
  for (const Segment& s : chain) {
    if (on_segment(s, p)) throw Error(ErrorCode::PointOnCurve, "point lies on the curve");
    bool a = s.from.y <= p.y, b = s.to.y <= p.y;
    if (a == b) continue;
    std::int64_t dy = s.to.y - s.from.y;
    // sign of (x_intersection - p.x) * dy
    std::int64_t num = (s.from.x - p.x) * dy + (s.to.x - s.from.x) * (p.y - s.from.y);
    if (num == 0) num = s.to.x - s.from.x;
    bool right = dy > 0 ? num > 0 : num < 0;
    if (!right) continue;
    w += dy > 0 ? -1 : 1;
  }
  return w;
}

int winding_number(std::span<const Point> poly, Point p) {
  std::vector<Segment> segs;
  segs.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) segs.push_back({poly[i], poly[(i + 1) % poly.size()]});
  return winding_number(segs, p);
}

int winding_number(const std::vector<Cell>& poly, Cell p) {
  std::vector<Point> pts;
  pts.reserve(poly.size());
  for (Cell c : poly) pts.push_back(center(c));
  return winding_number(pts, center(p));
}

std::size_t Drawing::trivial_cycle_count() const {
  return std::size_t(std::count_if(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() == 2; }));
}

DrawingEdge oriented_edge(const Dimer& d) {
  Cell a = d.a.cell(), b = d.b.cell();
  int z = d.a.z;
  bool a_white = cell_color(a) == Color::White;
  bool forward = z == 0 ? a_white : !a_white;
  return forward ? DrawingEdge{a, b, z} : DrawingEdge{b, a, z};
}

namespace {

struct RouteGrid {
  const TwoStoryRegion& r;
  BoundingBox box;
  explicit RouteGrid(const TwoStoryRegion& region) : r(region), box(region.bounds()) {
    box.min_x -= 2;
    box.min_y -= 2;
    box.max_x += 2;
    box.max_y += 2;
  }
  bool allowed(Cell c) const { return box.contains(c) && !r.is_common(c); }
  bool step_ok(Cell a, Cell b) const {
    int dx = b.x - a.x, dy = b.y - a.y;
    if (std::abs(dx) > 1 || std::abs(dy) > 1 || (dx == 0 && dy == 0)) return false;
    if (!allowed(a) || !allowed(b)) return false;
    if (dx != 0 && dy != 0) return allowed({a.x + dx, a.y}) && allowed({a.x, a.y + dy});
    return true;
  }
};

const Cell kDirs8[8] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

std::vector<Cell> bfs_route(const RouteGrid& g, Cell from, Cell to, std::mt19937_64* rng) {
  std::map<Cell, Cell> parent;
  std::queue<Cell> q;
  parent[from] = from;
  q.push(from);
  std::vector<Cell> dirs(std::begin(kDirs8), std::end(kDirs8));
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    if (c == to) break;
    if (rng) std::shuffle(dirs.begin(), dirs.end(), *rng);
    for (Cell d : dirs) {
      Cell n = c + d;
      if (!g.step_ok(c, n) || parent.count(n)) continue;
      parent[n] = c;
      q.push(n);
    }
  }
  if (!parent.count(to)) return {};
  std::vector<Cell> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

void require_balanced(const TwoStoryRegion& r) {
  if (r.sources().size() != r.sinks().size())
    throw Error(ErrorCode::Unbalanced, std::to_string(r.sources().size()) + " sources vs " +
                                           std::to_string(r.sinks().size()) + " sinks");
}

}  // namespace

GhostConnection canonical_ghosts(const TwoStoryRegion& r) {
  require_balanced(r);
  RouteGrid grid(r);
  GhostConnection g;
  for (std::size_t i = 0; i < r.sinks().size(); ++i) {
    const Hole& from = r.sinks()[i];
    const Hole& to = r.sources()[i];
    auto path = bfs_route(grid, from.cell, to.cell, nullptr);
    if (path.empty()) throw Error(ErrorCode::NoRoute, "no ghost route between holes " + std::to_string(i));
    g.routes.push_back({from, to, std::move(path)});
  }
  return g;
}

GhostConnection random_ghosts(const TwoStoryRegion& r, std::mt19937_64& rng) {
  require_balanced(r);
  RouteGrid grid(r);
  std::vector<Cell> free_cells;
  for (int y = grid.box.min_y; y <= grid.box.max_y; ++y)
    for (int x = grid.box.min_x; x <= grid.box.max_x; ++x)
      if (grid.allowed({x, y})) free_cells.push_back({x, y});
  std::vector<std::size_t> perm(r.sources().size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  GhostConnection g;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const Hole& from = r.sinks()[i];
    const Hole& to = r.sources()[perm[i]];
    std::vector<Cell> path;
    for (int attempt = 0; attempt < 16 && path.empty(); ++attempt) {
      Cell via = free_cells[std::uniform_int_distribution<std::size_t>(0, free_cells.size() - 1)(rng)];
      auto a = bfs_route(grid, from.cell, via, &rng);
      auto b = bfs_route(grid, via, to.cell, &rng);
      if (a.empty() || b.empty()) continue;
      for (Cell c : a) path.push_back(c);
      for (std::size_t j = 1; j < b.size(); ++j) {
        auto seen = std::find(path.begin(), path.end(), b[j]);
        if (seen != path.end()) path.erase(seen, path.end());
        path.push_back(b[j]);
      }
    }
    if (path.empty()) path = bfs_route(grid, from.cell, to.cell, &rng);
    if (path.empty()) throw Error(ErrorCode::NoRoute, "no ghost route");
    g.routes.push_back({from, to, std::move(path)});
  }
  return g;
}

void check_ghosts(const TwoStoryRegion& r, const GhostConnection& g) {
  RouteGrid grid(r);
  std::set<Hole> from_used, to_used;
  for (const auto& route : g.routes) {
    if (route.from.color() != Color::Black || route.to.color() != Color::White)
      throw Error(ErrorCode::InconsistentGhosts, "ghosts must run from a black-cube hole to a white-cube hole");
    if (!std::binary_search(r.holes().begin(), r.holes().end(), route.from,
                            [](const Hole& a, const Hole& b) {
                              return RowMajorLess{}(a.cell, b.cell) || (a.cell == b.cell && a.z < b.z);
                            }) ||
        !std::binary_search(r.holes().begin(), r.holes().end(), route.to, [](const Hole& a, const Hole& b) {
          return RowMajorLess{}(a.cell, b.cell) || (a.cell == b.cell && a.z < b.z);
        }))
      throw Error(ErrorCode::InconsistentGhosts, "ghost endpoint is not a hole");
    if (!from_used.insert(route.from).second || !to_used.insert(route.to).second)
      throw Error(ErrorCode::InconsistentGhosts, "hole used by two ghosts");
    if (route.path.empty() || route.path.front() != route.from.cell || route.path.back() != route.to.cell)
      throw Error(ErrorCode::InconsistentGhosts, "ghost path endpoints do not match its holes");
    for (std::size_t i = 0; i < route.path.size(); ++i) {
      if (r.is_common(route.path[i]))
        throw Error(ErrorCode::InconsistentGhosts, "ghost touches a common cell");
      if (i + 1 < route.path.size()) {
        Cell a = route.path[i], b = route.path[i + 1];
        int dx = b.x - a.x, dy = b.y - a.y;
        bool adjacent = std::abs(dx) <= 1 && std::abs(dy) <= 1 && (dx != 0 || dy != 0);
        bool clear = !r.is_common(a) && !r.is_common(b) &&
                     (dx == 0 || dy == 0 || (!r.is_common({a.x + dx, a.y}) && !r.is_common({a.x, a.y + dy})));
        if (!adjacent || !clear) throw Error(ErrorCode::InconsistentGhosts, "ghost step touches a common cell");
      }
    }
  }
  if (from_used.size() != r.sinks().size() || to_used.size() != r.sources().size())
    throw Error(ErrorCode::InconsistentGhosts, "every hole must be joined by exactly one ghost");
}

Drawing drawing_of(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g) {
  if (r.is_duplex() && !g.routes.empty()) throw Error(ErrorCode::InconsistentGhosts, "duplex regions take no ghosts");
  check_ghosts(r, g);
  Drawing d;
  d.ghosts = g.routes;
  std::map<Cell, std::size_t> out_edge;
  for (const Dimer& dm : t.dimers()) {
    if (dm.axis() == Axis::Z) {
      d.jewels.push_back({dm.a.cell(), cell_color(dm.a.cell())});
      continue;
    }
    DrawingEdge e = oriented_edge(dm);
    d.edges.push_back(e);
  }
  std::sort(d.jewels.begin(), d.jewels.end(), [](const Jewel& a, const Jewel& b) { return RowMajorLess{}(a.cell, b.cell); });
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (!out_edge.emplace(d.edges[i].from, i).second)
      throw Error(ErrorCode::InconsistentGhosts, "two drawing edges leave the same cell");
  }
  std::map<Cell, const GhostRoute*> ghost_at;
  for (const auto& route : g.routes) ghost_at[route.from.cell] = &route;
  std::vector<char> used(d.edges.size(), 0);
  for (std::size_t s = 0; s < d.edges.size(); ++s) {
    if (used[s]) continue;
    std::vector<Cell> poly;
    std::size_t e = s;
    for (std::size_t guard = 0; guard <= d.edges.size() + 1; ++guard) {
      used[e] = 1;
      poly.push_back(d.edges[e].from);
      Cell at = d.edges[e].to;
      auto it = out_edge.find(at);
      if (it == out_edge.end()) {
        auto gh = ghost_at.find(at);
        if (gh == ghost_at.end()) throw Error(ErrorCode::InconsistentGhosts, "drawing path ends without a ghost");
        const auto& path = gh->second->path;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) poly.push_back(path[k]);
        it = out_edge.find(path.back());
        if (it == out_edge.end()) throw Error(ErrorCode::InconsistentGhosts, "ghost ends where no path starts");
      }
      e = it->second;
      if (e == s) break;
      if (used[e]) throw Error(ErrorCode::InconsistentGhosts, "drawing does not decompose into cycles");
    }
    d.cycles.push_back(std::move(poly));
  }
  return d;
}

LaurentPoly invariant_of_drawing(const Drawing& d) {
  std::vector<Segment> chain;
  for (const auto& cyc : d.cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) chain.push_back({center(cyc[i]), center(cyc[(i + 1) % cyc.size()])});
  LaurentPoly p;
  for (const Jewel& j : d.jewels) {
    int k = winding_number(chain, center(j.cell));
    p.add_term(k, j.color == Color::Black ? 1 : -1);
  }
  return p;
}

LaurentPoly invariant(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g) {
  return invariant_of_drawing(drawing_of(t, r, g));
}

std::int64_t twist(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g) {
  return invariant(t, r, g).derivative_at_one();
}

InvariantCalculator::InvariantCalculator(const CubeIndex& idx, const GhostConnection& g) : idx_(idx) {
  check_ghosts(idx.region(), g);
  for (const auto& route : g.routes)
    for (std::size_t k = 0; k + 1 < route.path.size(); ++k)
      ghost_segments_.push_back({center(route.path[k]), center(route.path[k + 1])});
}

LaurentPoly InvariantCalculator::operator()(std::span<const int> partner) const {
  std::vector<Segment> chain = ghost_segments_;
  std::vector<Cell> jewels;
  for (int i = 0; i < idx_.size(); ++i) {
    int j = partner[std::size_t(i)];
    if (j < i) continue;
    const CubeCoord& a = idx_.cube(i);
    const CubeCoord& b = idx_.cube(j);
    if (a.z != b.z) {
      jewels.push_back(a.cell());
      continue;
    }
    DrawingEdge e = oriented_edge(Dimer::make(a, b));
    chain.push_back({center(e.from), center(e.to)});
  }
  LaurentPoly p;
  for (Cell c : jewels) p.add_term(winding_number(chain, center(c)), cell_color(c) == Color::Black ? 1 : -1);
  return p;
}

}  // namespace domino3d
