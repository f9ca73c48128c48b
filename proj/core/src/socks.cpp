#include "domino3d/socks.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_set>

#include "domino3d/error.hpp"
#include "domino3d/invariant.hpp"

namespace domino3d {

namespace {

std::array<Vertex, 4> corners(Cell a) { return {a, a + Cell{1, 0}, a + Cell{1, 1}, a + Cell{0, 1}}; }

bool unit_step(Vertex a, Vertex b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

std::string vstr(Vertex v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

// Twice the screen-counterclockwise signed area.
std::int64_t twice_ccw_area(const std::vector<Vertex>& poly) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vertex& a = poly[i];
    const Vertex& b = poly[(i + 1) % poly.size()];
    s += std::int64_t(a.x) * b.y - std::int64_t(b.x) * a.y;
  }
  return -s;
}

struct Plan {
  std::vector<std::pair<Vertex, Vertex>> cut, join;
  int sign = 0;
};

struct PlanResult {
  std::optional<Plan> plan;
  ErrorCode error = ErrorCode::PatternMismatch;
  std::string why;
};

PlanResult fail(ErrorCode c, std::string why) { return {std::nullopt, c, std::move(why)}; }

PlanResult plan_move(const Sock& s, const SockMove& m) {
  auto c = corners(m.anchor);
  for (const Vertex& v : c)
    if (!s.in_domain(v)) return fail(ErrorCode::OutsideDomain, "vertex " + vstr(v) + " is outside the domain");
  auto free = [&](Vertex v) { return !s.on_cycle(v); };
  Plan p;
  switch (m.kind) {
    case MoveKind::FlipA: {
      if (m.orientation != 0 && m.orientation != 1) return fail(ErrorCode::PatternMismatch, "flip_a orientation must be 0 or 1");
      int s1 = m.orientation, s2 = s1 + 2;
      auto edge_on = [&](int side) -> std::optional<std::pair<Vertex, Vertex>> {
        Vertex a = c[std::size_t(side)], b = c[std::size_t((side + 1) % 4)];
        if (s.has_edge(a, b)) return std::pair{a, b};
        if (s.has_edge(b, a)) return std::pair{b, a};
        return std::nullopt;
      };
      auto e1 = edge_on(s1), e2 = edge_on(s2);
      if (!e1 || !e2) return fail(ErrorCode::PatternMismatch, "flip_a needs edges on both opposite sides");
      auto [a, b] = *e1;
      auto [cc, d] = *e2;
      Cell da = b - a, dc = d - cc;
      if (da.x != -dc.x || da.y != -dc.y) return fail(ErrorCode::PatternMismatch, "flip_a edges are not antiparallel");
      if (s.next(d) == a || s.next(b) == cc) return fail(ErrorCode::PatternMismatch, "flip_a would create a 2-cycle");
      p.cut = {{a, b}, {cc, d}};
      p.join = {{a, d}, {cc, b}};
      break;
    }
    case MoveKind::FlipB: {
      if (m.orientation < 0 || m.orientation > 3) return fail(ErrorCode::PatternMismatch, "flip_b side must be 0..3");
      int sd = m.orientation;
      Vertex pp = c[std::size_t(sd)], q = c[std::size_t((sd + 1) % 4)];
      Vertex y = c[std::size_t((sd + 2) % 4)], x = c[std::size_t((sd + 3) % 4)];
      if (s.has_edge(pp, q) || s.has_edge(q, pp)) {
        if (!free(x) || !free(y)) return fail(ErrorCode::PatternMismatch, "flip_b needs two jewels opposite the edge");
        if (s.has_edge(pp, q)) {
          p.cut = {{pp, q}};
          p.join = {{pp, x}, {x, y}, {y, q}};
        } else {
          p.cut = {{q, pp}};
          p.join = {{q, y}, {y, x}, {x, pp}};
        }
      } else if (s.has_edge(pp, x) && s.has_edge(x, y) && s.has_edge(y, q)) {
        p.cut = {{pp, x}, {x, y}, {y, q}};
        p.join = {{pp, q}};
      } else if (s.has_edge(q, y) && s.has_edge(y, x) && s.has_edge(x, pp)) {
        p.cut = {{q, y}, {y, x}, {x, pp}};
        p.join = {{q, pp}};
      } else {
        return fail(ErrorCode::PatternMismatch, "flip_b needs one edge or a three-edge detour");
      }
      break;
    }
    case MoveKind::FlipC: {
      if (m.orientation != 1 && m.orientation != -1) return fail(ErrorCode::PatternMismatch, "flip_c orientation must be +1 or -1");
      std::array<Vertex, 4> ring = m.orientation > 0 ? std::array<Vertex, 4>{c[0], c[3], c[2], c[1]}
                                                     : std::array<Vertex, 4>{c[0], c[1], c[2], c[3]};
      bool all_free = std::all_of(c.begin(), c.end(), free);
      bool present = true;
      for (int i = 0; i < 4; ++i) present = present && s.has_edge(ring[std::size_t(i)], ring[std::size_t((i + 1) % 4)]);
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (int i = 0; i < 4; ++i) edges.emplace_back(ring[std::size_t(i)], ring[std::size_t((i + 1) % 4)]);
      if (all_free) {
        p.join = edges;
      } else if (present) {
        p.cut = edges;
      } else {
        return fail(ErrorCode::PatternMismatch, "flip_c needs four jewels or a unit cycle of that orientation");
      }
      break;
    }
    case MoveKind::Trit: {
      if (m.orientation < 0 || m.orientation > 3) return fail(ErrorCode::PatternMismatch, "trit corner must be 0..3");
      int i = m.orientation;
      Vertex v = c[std::size_t(i)], x = c[std::size_t((i + 2) % 4)];
      Vertex n1 = c[std::size_t((i + 1) % 4)], n2 = c[std::size_t((i + 3) % 4)];
      if (!s.on_cycle(v) || !free(x)) return fail(ErrorCode::PatternMismatch, "trit needs a cycle corner and a diagonal jewel");
      Vertex a = *s.prev(v), b = *s.next(v);
      if (!((a == n1 && b == n2) || (a == n2 && b == n1)))
        return fail(ErrorCode::PatternMismatch, "trit needs the cycle to turn at the corner");
      p.cut = {{a, v}, {v, b}};
      p.join = {{a, x}, {x, b}};
      int dk = twice_ccw_area({a, x, b, v}) > 0 ? 1 : -1;
      p.sign = cell_color(x) == Color::Black ? dk : -dk;
      if (m.sign != 0 && m.sign != p.sign) return fail(ErrorCode::PatternMismatch, "trit sign does not match");
      break;
    }
  }
  return {std::move(p), ErrorCode::PatternMismatch, {}};
}

void execute(Sock& s, const Plan& p) {
  for (auto [u, v] : p.cut) {
    (void)v;
    s.unlink(u);
  }
  for (auto [u, v] : p.join) s.link(u, v);
}

}  // namespace

Sock::Sock(const std::vector<std::vector<Vertex>>& cycles, std::optional<FloorPlan> domain) : domain_(std::move(domain)) {
  for (const auto& cyc : cycles) {
    if (cyc.size() < 4) throw Error(ErrorCode::InvalidSock, "cycle shorter than 4");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Vertex a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (!unit_step(a, b)) throw Error(ErrorCode::InvalidSock, "non-unit step " + vstr(a) + " -> " + vstr(b));
      if (on_cycle(a)) throw Error(ErrorCode::InvalidSock, "vertex " + vstr(a) + " used twice");
      if (!in_domain(a)) throw Error(ErrorCode::OutsideDomain, "vertex " + vstr(a) + " is outside the domain");
      next_[a] = b;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) prev_[cyc[(i + 1) % cyc.size()]] = cyc[i];
  }
}

std::optional<Vertex> Sock::next(Vertex v) const {
  auto it = next_.find(v);
  if (it == next_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> Sock::prev(Vertex v) const {
  auto it = prev_.find(v);
  if (it == prev_.end()) return std::nullopt;
  return it->second;
}

bool Sock::has_edge(Vertex u, Vertex v) const {
  auto it = next_.find(u);
  return it != next_.end() && it->second == v;
}

void Sock::link(Vertex u, Vertex v) {
  next_[u] = v;
  prev_[v] = u;
}

void Sock::unlink(Vertex u) {
  auto it = next_.find(u);
  if (it == next_.end()) return;
  prev_.erase(it->second);
  next_.erase(it);
}

std::vector<Vertex> Sock::cycle_through(Vertex v) const {
  std::vector<Vertex> out;
  if (!on_cycle(v)) return out;
  Vertex u = v;
  do {
    out.push_back(u);
    u = next_.at(u);
  } while (u != v);
  return out;
}

std::vector<std::vector<Vertex>> Sock::cycles() const {
  std::vector<Vertex> keys;
  keys.reserve(next_.size());
  for (const auto& [k, v] : next_) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), RowMajorLess{});
  std::unordered_set<Vertex> seen;
  std::vector<std::vector<Vertex>> out;
  for (Vertex k : keys) {
    if (seen.count(k)) continue;
    auto c = cycle_through(k);
    seen.insert(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

BoundingBox Sock::bounds() const {
  BoundingBox b;
  bool first = true;
  for (const auto& [v, w] : next_) {
    (void)w;
    if (first) {
      b = {v.x, v.y, v.x, v.y};
      first = false;
    } else {
      b.min_x = std::min(b.min_x, v.x);
      b.min_y = std::min(b.min_y, v.y);
      b.max_x = std::max(b.max_x, v.x);
      b.max_y = std::max(b.max_y, v.y);
    }
  }
  return b;
}

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::FlipA: return "flip_a";
    case MoveKind::FlipB: return "flip_b";
    case MoveKind::FlipC: return "flip_c";
    case MoveKind::Trit: return "trit";
  }
  return "?";
}

std::optional<MoveKind> parse_move_kind(const std::string& s) {
  for (MoveKind k : {MoveKind::FlipA, MoveKind::FlipB, MoveKind::FlipC, MoveKind::Trit})
    if (s == move_kind_name(k)) return k;
  return std::nullopt;
}

std::string to_string(const SockMove& m) {
  std::string s = std::string(move_kind_name(m.kind)) + " at " + vstr(m.anchor) + " o=" + std::to_string(m.orientation);
  if (m.kind == MoveKind::Trit) s += " sign=" + std::to_string(m.sign);
  return s;
}

bool can_apply(const Sock& s, const SockMove& m) { return plan_move(s, m).plan.has_value(); }

int sock_trit_sign(const Sock& s, const SockMove& m) {
  auto r = plan_move(s, m);
  if (!r.plan) throw Error(r.error, to_string(m) + ": " + r.why);
  return r.plan->sign;
}

void apply_in_place(Sock& s, const SockMove& m) {
  auto r = plan_move(s, m);
  if (!r.plan) throw Error(r.error, to_string(m) + ": " + r.why);
  execute(s, *r.plan);
}

Sock apply_move(const Sock& s, const SockMove& m) {
  Sock out = s;
  apply_in_place(out, m);
  return out;
}

bool try_apply(Sock& s, const SockMove& m) {
  auto r = plan_move(s, m);
  if (!r.plan) return false;
  execute(s, *r.plan);
  return true;
}

std::vector<SockMove> enumerate_moves(const Sock& s, bool include_trits) {
  std::vector<Cell> anchors;
  if (s.domain()) {
    for (Cell c : s.domain()->cells()) {
      auto k = corners(c);
      if (std::all_of(k.begin(), k.end(), [&](Vertex v) { return s.domain()->contains(v); })) anchors.push_back(c);
    }
  } else if (!s.empty()) {
    BoundingBox b = s.bounds();
    for (int y = b.min_y - 1; y <= b.max_y; ++y)
      for (int x = b.min_x - 1; x <= b.max_x; ++x) anchors.push_back({x, y});
  }
  std::vector<SockMove> out;
  for (Cell a : anchors) {
    auto consider = [&](MoveKind k, int o) {
      SockMove m{k, a, o, 0};
      auto r = plan_move(s, m);
      if (!r.plan) return;
      m.sign = r.plan->sign;
      out.push_back(m);
    };
    for (int o = 0; o < 2; ++o) consider(MoveKind::FlipA, o);
    for (int o = 0; o < 4; ++o) consider(MoveKind::FlipB, o);
    consider(MoveKind::FlipC, 1);
    consider(MoveKind::FlipC, -1);
    if (include_trits)
      for (int o = 0; o < 4; ++o) consider(MoveKind::Trit, o);
  }
  return out;
}

std::int64_t cycle_area(const std::vector<Vertex>& cycle) { return twice_ccw_area(cycle) / 2; }

std::int64_t area(const Sock& s) {
  std::int64_t total = 0;
  for (const auto& c : s.cycles()) total += std::abs(cycle_area(c));
  return total;
}

namespace {

// Vertical edges grouped by the unit row band [y, y+1] they span, with +1
// for edges pointing up (the right side of a screen-counterclockwise loop).
std::map<int, std::vector<std::pair<int, int>>> vertical_edges(const Sock& s) {
  std::map<int, std::vector<std::pair<int, int>>> bands;
  for (const auto& c : s.cycles())
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex a = c[i], b = c[(i + 1) % c.size()];
      if (a.x != b.x) continue;
      bands[std::min(a.y, b.y)].emplace_back(a.x, b.y < a.y ? 1 : -1);
    }
  for (auto& [y, v] : bands) std::sort(v.begin(), v.end());
  return bands;
}

}  // namespace

int sock_winding(const Sock& s, Vertex p) {
  if (s.on_cycle(p)) throw Error(ErrorCode::PointOnCurve, "vertex " + vstr(p) + " lies on a cycle");
  int k = 0;
  for (const auto& c : s.cycles())
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex a = c[i], b = c[(i + 1) % c.size()];
      if (a.x == b.x && a.x > p.x && std::min(a.y, b.y) == p.y) k += b.y < a.y ? 1 : -1;
    }
  return k;
}

LaurentPoly sock_invariant(const Sock& s) {
  LaurentPoly p;
  for (const auto& [y, edges] : vertical_edges(s)) {
    std::vector<int> suffix(edges.size() + 1, 0);
    for (std::size_t i = edges.size(); i-- > 0;) suffix[i] = suffix[i + 1] + edges[i].second;
    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
      int k = suffix[j + 1];
      if (k == 0) continue;
      for (int x = edges[j].first; x < edges[j + 1].first; ++x) {
        Vertex v{x, y};
        if (s.on_cycle(v) || !s.in_domain(v)) continue;
        p.add_term(k, cell_color(v) == Color::Black ? 1 : -1);
      }
    }
  }
  return p;
}

Sock sock_of_tiling(const Tiling& t, const TwoStoryRegion& r) {
  if (!r.is_duplex()) throw Error(ErrorCode::InvalidSock, "socks need a duplex region");
  std::map<std::pair<Cell, Cell>, int> planar;
  for (const Dimer& d : t.dimers()) {
    if (d.axis() == Axis::Z) continue;
    planar[{d.a.cell(), d.b.cell()}]++;
  }
  Sock s;
  s.set_domain(r.top());
  for (const Dimer& d : t.dimers()) {
    if (d.axis() == Axis::Z) continue;
    if (planar[{d.a.cell(), d.b.cell()}] == 2) continue;
    DrawingEdge e = oriented_edge(d);
    s.link(e.from, e.to);
  }
  return s;
}

Tiling tiling_of_sock(const Sock& s, const TwoStoryRegion& r) {
  if (!r.is_duplex()) throw Error(ErrorCode::InvalidSock, "socks need a duplex region");
  std::vector<Dimer> dimers;
  for (const auto& c : s.cycles())
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex u = c[i], v = c[(i + 1) % c.size()];
      if (!r.top().contains(u) || !r.top().contains(v)) throw Error(ErrorCode::OutsideDomain, "cycle leaves the region");
      int z = cell_color(u) == Color::White ? 0 : 1;
      dimers.push_back(Dimer::make({u.x, u.y, z}, {v.x, v.y, z}));
    }
  for (Cell c : r.top().cells())
    if (!s.on_cycle(c)) dimers.push_back(Dimer::make({c.x, c.y, 0}, {c.x, c.y, 1}));
  return Tiling(std::move(dimers));
}

std::optional<std::vector<BoxedJewel>> boxed_jewels(const Sock& s) {
  std::map<Vertex, std::vector<int>> squares;  // center -> signed half sides
  for (const auto& c : s.cycles()) {
    int min_x = c[0].x, max_x = c[0].x, min_y = c[0].y, max_y = c[0].y;
    for (Vertex v : c) {
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
    int side = max_x - min_x;
    if (side != max_y - min_y || side % 2 != 0 || c.size() != std::size_t(4 * side)) return std::nullopt;
    int dir = cycle_area(c) > 0 ? 1 : -1;
    squares[{min_x + side / 2, min_y + side / 2}].push_back(dir * side / 2);
  }
  std::vector<BoxedJewel> out;
  for (auto& [center, halves] : squares) {
    if (s.on_cycle(center)) return std::nullopt;
    std::sort(halves.begin(), halves.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    int dir = halves[0] > 0 ? 1 : -1;
    for (std::size_t i = 0; i < halves.size(); ++i)
      if (halves[i] != dir * int(i + 1)) return std::nullopt;
    out.push_back({center, dir * int(halves.size()), cell_color(center) == Color::Black ? 1 : -1});
  }
  return out;
}

bool is_untangled(const Sock& s) {
  auto b = boxed_jewels(s);
  return b && std::all_of(b->begin(), b->end(), [](const BoxedJewel& j) { return j.center.y == 0; });
}

Sock sock_of_boxed(const std::vector<BoxedJewel>& jewels) {
  std::vector<std::vector<Vertex>> cycles;
  for (const auto& j : jewels)
    for (int h = 1; h <= std::abs(j.degree); ++h) {
      std::vector<Vertex> c;
      int x0 = j.center.x - h, y0 = j.center.y - h, x1 = j.center.x + h, y1 = j.center.y + h;
      // Screen counterclockwise: down the left side, along the bottom, up the right, back along the top.
      for (int y = y0; y < y1; ++y) c.push_back({x0, y});
      for (int x = x0; x < x1; ++x) c.push_back({x, y1});
      for (int y = y1; y > y0; --y) c.push_back({x1, y});
      for (int x = x1; x > x0; --x) c.push_back({x, y0});
      if (j.degree < 0) std::reverse(c.begin(), c.end());
      cycles.push_back(std::move(c));
    }
  return Sock(cycles);
}

std::vector<std::pair<int, int>> canonical_untangled(const Sock& s) {
  auto b = boxed_jewels(s);
  if (!b || !is_untangled(s)) throw Error(ErrorCode::NotUntangled, "sock is not untangled");
  std::map<int, int> coeff;
  for (const auto& j : *b) coeff[j.degree] += j.sign;
  std::vector<std::pair<int, int>> out;
  for (auto [d, a] : coeff)
    for (int i = 0; i < std::abs(a); ++i) out.emplace_back(a > 0 ? 1 : -1, d);
  std::sort(out.begin(), out.end());
  return out;
}

Sock replay(const Sock& s, const std::vector<SockMove>& trace) {
  Sock cur = s;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    auto r = plan_move(cur, trace[i]);
    if (!r.plan) throw Error(r.error, "step " + std::to_string(i) + " " + to_string(trace[i]) + ": " + r.why);
    execute(cur, *r.plan);
  }
  return cur;
}

Sock random_untangled_sock(std::mt19937_64& rng, const RandomSockOptions& opt) {
  std::vector<BoxedJewel> jewels;
  int x = 0;
  std::uniform_int_distribution<int> deg(1, std::max(1, opt.max_degree));
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < opt.jewels; ++i) {
    int d = deg(rng);
    x += d + coin(rng);
    jewels.push_back({{x, 0}, coin(rng) ? d : -d, 0});
    x += d + 1;
  }
  return sock_of_boxed(jewels);
}

Sock random_sock(std::mt19937_64& rng, const RandomSockOptions& opt) {
  Sock s = random_untangled_sock(rng, opt);
  for (int i = 0; i < opt.moves; ++i) {
    auto moves = enumerate_moves(s, false);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    apply_in_place(s, moves[pick(rng)]);
  }
  return s;
}

}  // namespace domino3d
