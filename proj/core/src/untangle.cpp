#include <algorithm>
#include <cstdio>
#include <array>
#include <climits>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "domino3d/error.hpp"
#include "domino3d/socks.hpp"

namespace domino3d {

namespace {

using CellSet = std::unordered_set<Cell>;

constexpr std::array<Cell, 4> kSideNeighbor = {Cell{0, -1}, Cell{1, 0}, Cell{0, 1}, Cell{-1, 0}};

[[noreturn]] void stuck(const std::string& what) { throw Error(ErrorCode::InvalidSock, "untangling stalled: " + what); }

// Cells enclosed by a simple closed lattice curve.
CellSet cells_inside(const std::vector<Vertex>& cycle) {
  std::map<int, std::vector<int>> bands;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    if (a.x == b.x) bands[std::min(a.y, b.y)].push_back(a.x);
  }
  CellSet out;
  for (auto& [y, xs] : bands) {
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2)
      for (int x = xs[i]; x < xs[i + 1]; ++x) out.insert({x, y});
  }
  return out;
}

CellSet rect_cells(int x0, int y0, int x1, int y1) {
  CellSet out;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) out.insert({x, y});
  return out;
}

// Cells of the square of half side h around vertex c.
CellSet square_cells(Vertex c, int h) { return rect_cells(c.x - h, c.y - h, c.x + h - 1, c.y + h - 1); }

class Recorder {
 public:
  Recorder(Sock& s, std::vector<SockMove>& trace) : s_(s), trace_(trace) {}
  bool attempt(const SockMove& m) {
    if (!try_apply(s_, m)) return false;
    trace_.push_back(m);
    return true;
  }
  void must(const SockMove& m, const char* what) {
    if (!attempt(m)) stuck(std::string(what) + " " + to_string(m));
  }
  void undo() {
    SockMove m = trace_.back();
    trace_.pop_back();
    apply_in_place(s_, m);
  }
  Sock& sock() { return s_; }
  std::vector<SockMove>& trace() { return trace_; }

 private:
  Sock& s_;
  std::vector<SockMove>& trace_;
};

// Corners of a cell in the order anchor, +x, +x+y, +y; side i joins corner
// i and corner i+1.
std::array<Vertex, 4> cell_corners(Cell c) { return {c, c + Cell{1, 0}, c + Cell{1, 1}, c + Cell{0, 1}}; }

// Reshapes the region enclosed by one cycle into `target` with single-cell
// toggles (flip_b, or flip_c on a last unit square). The search runs on
// regions alone: a toggle is legal when it shares one or three sides with
// the region's boundary and any vertex it pulls onto the cycle is a jewel.
class Morph {
 public:
  Morph(const Sock& s, const std::vector<Vertex>& cycle, const CellSet& target)
      : s_(s), own_(cycle.begin(), cycle.end()), start_(cells_inside(cycle)), target_(target) {}

  std::optional<std::vector<Cell>> search(std::size_t budget) {
    if (auto quick = greedy()) return quick;
    struct Node {
      std::vector<Cell> flipped;  // sorted symmetric difference with start_
      int parent;
      Cell via;
      int g;
      int dist;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::uint64_t, std::vector<int>> seen;
    using Entry = std::tuple<int, int, int>;  // f, -g, node
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    auto push = [&](std::vector<Cell> f, int parent, Cell via, int g, int est) {
      std::uint64_t h = hash(f);
      auto& bucket = seen[h];
      for (int i : bucket)
        if (nodes[std::size_t(i)].flipped == f) return;
      bucket.push_back(int(nodes.size()));
      nodes.push_back({std::move(f), parent, via, g, est});
      open.push({g + 3 * est, -g, int(nodes.size()) - 1});
    };
    {
      std::vector<Cell> none;
      flipped_ = &none;
      push({}, -1, {}, 0, distance());
    }
    while (!open.empty() && nodes.size() < budget) {
      auto [f, ng, idx] = open.top();
      open.pop();
      (void)f;
      (void)ng;
      flipped_ = &nodes[std::size_t(idx)].flipped;
      if (nodes[std::size_t(idx)].dist == 0) {
        std::vector<Cell> path;
        for (int i = idx; nodes[std::size_t(i)].parent >= 0; i = nodes[std::size_t(i)].parent) path.push_back(nodes[std::size_t(i)].via);
        std::reverse(path.begin(), path.end());
        return path;
      }
      std::vector<Cell> moves;
      for (Cell x : frontier())
        if (legal(x)) moves.push_back(x);
      int g = nodes[std::size_t(idx)].g;
      int dist = nodes[std::size_t(idx)].dist;
      for (Cell x : moves) {
        int d2 = dist + (in(x) == (target_.count(x) != 0) ? 1 : -1);
        std::vector<Cell> f2 = nodes[std::size_t(idx)].flipped;
        auto it = std::lower_bound(f2.begin(), f2.end(), x);
        if (it != f2.end() && *it == x) f2.erase(it); else f2.insert(it, x);
        push(std::move(f2), idx, x, g + 1, d2);
        flipped_ = &nodes[std::size_t(idx)].flipped;
      }
    }
    if (std::getenv("DOMINO3D_DEBUG_MORPH")) fprintf(stderr, "morph gave up after %zu states, open %zu\n", nodes.size(), open.size());
    return std::nullopt;
  }

  // The move that toggles x in the current region of the live sock.
  static std::optional<SockMove> toggle(const Sock& s, const CellSet& region, Cell x) {
    bool inside = region.count(x) != 0;
    std::vector<int> sides;
    for (int i = 0; i < 4; ++i)
      if ((region.count(x + kSideNeighbor[std::size_t(i)]) != 0) != inside || (!inside && false)) sides.push_back(i);
    if (!inside) {
      sides.clear();
      for (int i = 0; i < 4; ++i)
        if (region.count(x + kSideNeighbor[std::size_t(i)])) sides.push_back(i);
    }
    if (inside && sides.size() == 4) return SockMove{MoveKind::FlipC, x, s.has_edge(x, x + Cell{0, 1}) ? 1 : -1, 0};
    if (sides.size() == 1) return SockMove{MoveKind::FlipB, x, sides[0], 0};
    if (sides.size() == 3)
      for (int i = 0; i < 4; ++i)
        if (std::find(sides.begin(), sides.end(), i) == sides.end()) return SockMove{MoveKind::FlipB, x, i, 0};
    return std::nullopt;
  }

 private:
  // Toggles only cells that differ from the target, preferring three-sided
  // ones; no backtracking.
  std::optional<std::vector<Cell>> greedy() {
    std::vector<Cell> flipped;
    flipped_ = &flipped;
    std::set<Cell, RowMajorLess> diff;
    for (Cell c : start_)
      if (!target_.count(c)) diff.insert(c);
    for (Cell c : target_)
      if (!start_.count(c)) diff.insert(c);
    std::vector<Cell> path;
    while (!diff.empty()) {
      std::optional<Cell> best;
      int best_rank = 9;
      for (Cell x : diff) {
        int r = rank(x);
        if (r < best_rank) {
          best_rank = r;
          best = x;
          if (r == 0) break;
        }
      }
      if (!best) return std::nullopt;
      Cell x = *best;
      flipped.insert(std::lower_bound(flipped.begin(), flipped.end(), x), x);
      diff.erase(x);
      path.push_back(x);
    }
    return path;
  }

  // 0 for a legal three-sided toggle, 1 for a legal one-sided one, 9 if illegal.
  int rank(Cell x) const {
    if (!legal(x)) return 9;
    int n = 0;
    for (Cell d : kSideNeighbor) n += in(x + d);
    return (in(x) ? 4 - n : n) == 3 ? 0 : 1;
  }

  static std::uint64_t hash(const std::vector<Cell>& f) {
    std::uint64_t h = 1469598103934665603ull;
    for (Cell c : f) h = (h ^ std::hash<Cell>{}(c)) * 1099511628211ull;
    return h;
  }

  bool in(Cell c) const {
    bool f = std::binary_search(flipped_->begin(), flipped_->end(), c);
    return (start_.count(c) != 0) != f;
  }

  int distance() const {
    int d = 0;
    for (Cell c : *flipped_) d += in(c) != (target_.count(c) != 0);
    for (Cell c : start_)
      if (!std::binary_search(flipped_->begin(), flipped_->end(), c) && !target_.count(c)) ++d;
    for (Cell c : target_)
      if (!start_.count(c) && !std::binary_search(flipped_->begin(), flipped_->end(), c)) ++d;
    return d;
  }

  bool on_boundary(Vertex v) const {
    int n = in(v - Cell{1, 1}) + in(v - Cell{0, 1}) + in(v - Cell{1, 0}) + in(v);
    return n != 0 && n != 4;
  }

  bool usable(Vertex v) const { return s_.in_domain(v) && !on_boundary(v) && !(s_.on_cycle(v) && !own_.count(v)); }

  std::vector<Cell> frontier() const {
    std::set<Cell> out;
    auto consider = [&](Cell c) {
      for (Cell d : kSideNeighbor) {
        out.insert(c + d);
      }
      out.insert(c);
    };
    for (Cell c : start_)
      if (!std::binary_search(flipped_->begin(), flipped_->end(), c)) {
        bool edge = false;
        for (Cell d : kSideNeighbor) edge = edge || !in(c + d);
        if (edge) consider(c);
      }
    for (Cell c : *flipped_)
      if (in(c)) consider(c);
    std::vector<Cell> v;
    for (Cell c : out) {
      bool inside = in(c);
      for (Cell d : kSideNeighbor)
        if (in(c + d) != inside) {
          v.push_back(c);
          break;
        }
    }
    return v;
  }

  bool legal(Cell x) const {
    auto k = cell_corners(x);
    for (Vertex v : k)
      if (!s_.in_domain(v)) return false;
    bool inside = in(x);
    std::vector<int> touch;  // shared sides when adding, boundary sides when removing
    for (int i = 0; i < 4; ++i)
      if (in(x + kSideNeighbor[std::size_t(i)]) != inside) touch.push_back(i);
    if (!inside) {
      touch.clear();
      for (int i = 0; i < 4; ++i)
        if (in(x + kSideNeighbor[std::size_t(i)])) touch.push_back(i);
    }
    if (touch.size() == 3) return true;
    if (touch.size() != 1) return false;
    int side = touch[0];
    return usable(k[std::size_t((side + 2) % 4)]) && usable(k[std::size_t((side + 3) % 4)]);
  }

  const Sock& s_;
  CellSet own_;
  CellSet start_;
  const CellSet& target_;
  const std::vector<Cell>* flipped_ = nullptr;
};

void morph(Recorder& rec, Vertex on_cycle, const CellSet& target, const char* what, std::size_t budget = 400000) {
  auto cycle = rec.sock().cycle_through(on_cycle);
  if (cycle.empty()) stuck(std::string(what) + ": no cycle at the given vertex");
  Morph m(rec.sock(), cycle, target);
  auto path = m.search(budget);
  if (!path) stuck(what);
  CellSet region = cells_inside(cycle);
  for (Cell x : *path) {
    auto mv = Morph::toggle(rec.sock(), region, x);
    if (!mv) stuck(std::string(what) + ": planned toggle has no move");
    rec.must(*mv, what);
    if (region.count(x)) region.erase(x); else region.insert(x);
  }
}

// The four area-reducing moves at a non-jewel w, whose cycle turns away
// from the corner cell anchored at w.
void corner_move(Recorder& rec, Vertex w, const char* what) {
  const Sock& s = rec.sock();
  Vertex a = w + Cell{1, 0}, b = w + Cell{0, 1};
  bool wa = s.adjacent(w, a), wb = s.adjacent(w, b);
  if (wa && wb) {
    rec.must({MoveKind::FlipC, w, s.has_edge(w, b) ? 1 : -1, 0}, what);
  } else if (wb) {
    rec.must({MoveKind::FlipB, w, 0, 0}, what);
  } else if (wa) {
    rec.must({MoveKind::FlipB, w, 3, 0}, what);
  } else if (!rec.attempt({MoveKind::FlipA, w - Cell{1, 0}, 0, 0})) {
    rec.must({MoveKind::FlipB, w - Cell{1, 0}, 1, 0}, what);
  }
}

bool is_square_around(const Sock& s, Vertex v, Vertex center, int h) {
  auto c = s.cycle_through(v);
  if (c.size() != std::size_t(8 * h)) return false;
  return std::all_of(c.begin(), c.end(), [&](Vertex u) {
    int dx = std::abs(u.x - center.x), dy = std::abs(u.y - center.y);
    return std::max(dx, dy) == h;
  });
}

struct Boxed {
  Vertex center;
  int degree = 0;  // number of squares
};

// Moves a boxed jewel by (2*dx, 2*dy), one unit axis direction at a time.
void move_boxed(Recorder& rec, Boxed& j, Cell dir) {
  Cell d2{2 * dir.x, 2 * dir.y};
  for (int h = j.degree; h >= 1; --h) {
    CellSet t = square_cells(j.center, h);
    for (Cell c : square_cells(j.center + d2, h)) t.insert(c);
    morph(rec, j.center + Cell{-h, -h}, t, "stretching a boxed jewel");
  }
  for (int h = 1; h <= j.degree; ++h) {
    Vertex on = j.center + d2 + Cell{h, h};
    morph(rec, on, square_cells(j.center + d2, h), "shrinking a boxed jewel");
  }
  j.center = j.center + d2;
}

// Moves a boxed jewel by (1, 1). Square h is first stretched by 2h to the
// right and down so each inner square has room to shift.
void shift_diagonal(Recorder& rec, Boxed& j) {
  Vertex c = j.center;
  for (int h = j.degree; h >= 1; --h)
    morph(rec, c + Cell{-h, -h}, rect_cells(c.x - h, c.y - h, c.x + 3 * h - 1, c.y + 3 * h - 1), "stretching for a diagonal shift");
  for (int h = 1; h <= j.degree; ++h)
    morph(rec, c + Cell{-h, -h}, square_cells(c + Cell{1, 1}, h), "diagonal shift");
  j.center = c + Cell{1, 1};
}

// Pulls the jewel w out of the N nested corners at v = w + (N, N) and
// returns the new boxed jewel centered below v.
Boxed extract(Recorder& rec, Vertex v, int n) {
  Sock& s = rec.sock();
  const int l = v.x, m = v.y;
  Vertex w = v - Cell{n, n};
  bool boxed = true;
  for (int k = 0; k < n && boxed; ++k) boxed = is_square_around(s, v - Cell{k, k}, w, n - k);
  if (boxed) return {w, n};

  const int yc = m + n + 2;
  std::vector<CellSet> regions;
  for (int k = 0; k < n; ++k) {
    Vertex pk = v - Cell{k, k};
    int sx = pk.x;
    while (s.adjacent({sx - 1, pk.y}, {sx, pk.y})) --sx;
    if (sx > l - 2 * n + k) stuck("bottom segment too short for extraction");
    regions.push_back(cells_inside(s.cycle_through(pk)));
  }
  for (int k = 0; k < n; ++k) {
    CellSet t = regions[std::size_t(k)];
    for (Cell c : rect_cells(l - 2 * n + k, m - k, l - k - 1, yc + n - k - 1)) t.insert(c);
    morph(rec, v - Cell{k, k}, t, "growing an extraction finger");
  }
  for (int k = n - 1; k >= 0; --k) {
    CellSet t = regions[std::size_t(k)];
    t.erase({l - k - 1, m - k - 1});
    for (Cell c : rect_cells(l - 2 * n + k, m - k, l - 2 * n + k, yc - n + k - 1)) t.insert(c);
    for (Cell c : square_cells({l - n, yc}, n - k)) t.insert(c);
    morph(rec, v - Cell{k, k}, t, "narrowing an extraction finger");
    Cell neck{l - 2 * n + k, m - k};
    rec.must({MoveKind::FlipA, neck, 1, 0}, "pinching an extraction finger");
    morph(rec, Vertex{l - n + (n - k), yc + (n - k)}, square_cells({l - n, yc}, n - k), "trimming an extracted square");
  }
  return {{l - n, yc}, n};
}

std::pair<Vertex, bool> bottom_right(const Sock& s) {
  std::optional<Vertex> best;
  for (const auto& c : s.cycles())
    for (Vertex u : c)
      if (!best || u.y > best->y || (u.y == best->y && u.x > best->x)) best = u;
  return {*best, s.has_edge(*best - Cell{1, 0}, *best)};
}

bool matches_corner(const Sock& s, Vertex p, bool from_left) {
  Vertex left = p - Cell{1, 0}, up = p - Cell{0, 1};
  return from_left ? (s.has_edge(left, p) && s.has_edge(p, up)) : (s.has_edge(up, p) && s.has_edge(p, left));
}

int max_row(const Sock& s) { return s.empty() ? INT32_MIN : s.bounds().max_y; }

void untangle_into(Sock& s, std::vector<SockMove>& trace) {
  Recorder rec(s, trace);
  while (!s.empty()) {
    auto [v, from_left] = bottom_right(s);
    int n = 1;
    while (matches_corner(s, v - Cell{n, n}, from_left)) ++n;
    Vertex w = v - Cell{n, n};
    if (s.on_cycle(w)) {
      corner_move(rec, w, "area-reducing corner move");
      continue;
    }
    Boxed j = extract(rec, v, n);
    Sock rest = s;
    for (int h = 1; h <= j.degree; ++h)
      for (Vertex u : s.cycle_through(j.center + Cell{h, h})) rest.unlink(u);
    int reach = max_row(rest);
    std::vector<SockMove> sub;
    Sock rest_final = rest;
    untangle_into(rest_final, sub);
    for (const SockMove& mv : sub) reach = std::max(reach, mv.anchor.y + 1);
    if (!rest.empty())
      while (j.center.y - j.degree <= reach + 1) move_boxed(rec, j, {0, 1});
    for (const SockMove& mv : sub) rec.must(mv, "replaying a sub-trace");
    if (j.center.y % 2 != 0) shift_diagonal(rec, j);
    if (!rest_final.empty()) {
      int need = rest_final.bounds().max_x + j.degree + 2;
      if ((need - j.center.x) % 2 != 0) ++need;
      while (j.center.x < need) move_boxed(rec, j, {1, 0});
      while (j.center.x > need) move_boxed(rec, j, {-1, 0});
    }
    while (j.center.y > 0) move_boxed(rec, j, {0, -1});
    while (j.center.y < 0) move_boxed(rec, j, {0, 1});
    return;
  }
}

int innermost_cycle_count_inside(const std::vector<Vertex>& outer, const std::vector<std::vector<Vertex>>& all) {
  CellSet in = cells_inside(outer);
  int n = 0;
  for (const auto& c : all) {
    if (&c == &outer) continue;
    // A cycle inside another has all its cells inside it; test one cell.
    CellSet ci = cells_inside(c);
    if (!ci.empty() && in.count(*ci.begin())) ++n;
  }
  return n;
}

}  // namespace

UntangleResult untangle(const Sock& s) {
  UntangleResult r;
  r.sock = s;
  r.sock.set_domain(std::nullopt);
  if (!is_untangled(r.sock)) untangle_into(r.sock, r.trace);
  return r;
}

std::vector<SockMove> reduce_to_empty(const Sock& s0) {
  Sock s = s0;
  std::vector<SockMove> trace;
  Recorder rec(s, trace);
  while (!s.empty()) {
    auto cycles = s.cycles();
    std::optional<Vertex> pick;
    for (const auto& c : cycles) {
      if (innermost_cycle_count_inside(c, cycles) != 0) continue;
      Vertex v = *std::max_element(c.begin(), c.end(), RowMajorLess{});
      if (!pick || RowMajorLess{}(*pick, v)) pick = v;
    }
    Vertex v = *pick;
    Vertex w = v - Cell{1, 1};
    if (s.cycle_through(v).size() == 4) {
      rec.must({MoveKind::FlipC, w, s.has_edge(w, w + Cell{0, 1}) ? 1 : -1, 0}, "removing a unit cycle");
    } else if (!s.on_cycle(w)) {
      SockMove m{MoveKind::Trit, w, 2, 0};
      m.sign = sock_trit_sign(s, m);
      rec.must(m, "trit at an innermost corner");
    } else {
      Vertex u = v - Cell{1, 0}, a = v - Cell{0, 1};
      if (s.adjacent(w, u)) rec.must({MoveKind::FlipB, w, 0, 0}, "contracting an innermost corner");
      else if (s.adjacent(w, a)) rec.must({MoveKind::FlipB, w, 3, 0}, "contracting an innermost corner");
      else if (!rec.attempt({MoveKind::FlipA, w - Cell{1, 0}, 0, 0}))
        rec.must({MoveKind::FlipB, w - Cell{1, 0}, 1, 0}, "contracting an innermost corner");
    }
  }
  return trace;
}

}  // namespace domino3d
