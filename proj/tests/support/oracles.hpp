#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <tuple>
#include <vector>

#include "domino3d/geometry.hpp"
#include "domino3d/polynomial.hpp"
#include "domino3d/tiling.hpp"

namespace oracle {

using Cube = std::tuple<int, int, int>;
using Pair = std::pair<Cube, Cube>;

inline std::set<Cube> cubes_of(const domino3d::TwoStoryRegion& r) {
  std::set<Cube> out;
  for (int z = 0; z < 2; ++z)
    for (auto c : r.floor(z).cells()) out.insert({c.x, c.y, z});
  return out;
}

// Plain recursive matcher: cover the smallest free cube with each neighbour.
inline void tilings_rec(std::set<Cube>& free, std::vector<Pair>& cur, std::vector<std::vector<Pair>>* out, long& count) {
  if (free.empty()) {
    ++count;
    if (out) out->push_back(cur);
    return;
  }
  Cube a = *free.begin();
  auto [x, y, z] = a;
  for (Cube b : {Cube{x + 1, y, z}, Cube{x, y + 1, z}, Cube{x, y, z + 1}}) {
    if (!free.count(b)) continue;
    free.erase(a);
    free.erase(b);
    cur.push_back({a, b});
    tilings_rec(free, cur, out, count);
    cur.pop_back();
    free.insert(a);
    free.insert(b);
  }
}

inline long count_tilings(const domino3d::TwoStoryRegion& r) {
  auto free = cubes_of(r);
  std::vector<Pair> cur;
  long n = 0;
  tilings_rec(free, cur, nullptr, n);
  return n;
}

inline std::set<std::set<Pair>> tiling_sets(const domino3d::TwoStoryRegion& r) {
  auto free = cubes_of(r);
  std::vector<Pair> cur;
  std::vector<std::vector<Pair>> all;
  long n = 0;
  tilings_rec(free, cur, &all, n);
  std::set<std::set<Pair>> out;
  for (auto& t : all) out.insert(std::set<Pair>(t.begin(), t.end()));
  return out;
}

inline std::set<Pair> pairs_of(const domino3d::Tiling& t) {
  std::set<Pair> out;
  for (const auto& d : t.dimers()) {
    Cube a{d.a.x, d.a.y, d.a.z}, b{d.b.x, d.b.y, d.b.z};
    out.insert(a < b ? Pair{a, b} : Pair{b, a});
  }
  return out;
}

// Winding number by summing turning angles, with y flipped so that a loop
// counterclockwise on screen counts +1.
inline int winding_by_angles(const std::vector<std::pair<double, double>>& loop, double px, double py) {
  double total = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    auto [ax, ay] = loop[i];
    auto [bx, by] = loop[(i + 1) % loop.size()];
    double a1 = std::atan2(-(ay - py), ax - px), a2 = std::atan2(-(by - py), bx - px);
    double d = a2 - a1;
    while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
    total += d;
  }
  return int(std::lround(total / (2 * std::numbers::pi)));
}

// P_t of a duplex tiling built straight from the dimers: a white cell leaves
// through its top-floor partner, a black cell through its bottom-floor one.
inline domino3d::LaurentPoly duplex_invariant(const domino3d::Tiling& t) {
  using domino3d::Cell;
  std::map<Cell, Cell> top, bottom;
  std::vector<Cell> jewels;
  for (const auto& d : t.dimers()) {
    if (d.a.z != d.b.z) {
      jewels.push_back(d.a.cell());
      continue;
    }
    auto& m = d.a.z == 0 ? top : bottom;
    m[d.a.cell()] = d.b.cell();
    m[d.b.cell()] = d.a.cell();
  }
  auto next = [&](Cell c) { return ((c.x + c.y) & 1) == 0 ? top.at(c) : bottom.at(c); };
  std::set<Cell> seen;
  std::vector<std::vector<std::pair<double, double>>> loops;
  for (auto& [c, _] : top) {
    if (seen.count(c)) continue;
    std::vector<std::pair<double, double>> loop;
    for (Cell v = c; !seen.count(v); v = next(v)) {
      seen.insert(v);
      loop.push_back({double(v.x), double(v.y)});
    }
    loops.push_back(loop);
  }
  domino3d::LaurentPoly p;
  for (Cell j : jewels) {
    int k = 0;
    for (const auto& l : loops) k += winding_by_angles(l, j.x, j.y);
    p.add_term(k, ((j.x + j.y) & 1) ? 1 : -1);
  }
  return p;
}

}  // namespace oracle
