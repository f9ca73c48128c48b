#include "domino3d/realize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "domino3d/error.hpp"

namespace domino3d {

namespace {

bool in_block(const CubeCoord& c, Cell a) { return c.x >= a.x && c.x <= a.x + 1 && c.y >= a.y && c.y <= a.y + 1; }

template <class Site>
bool touches_block(const Site& s, Cell a) {
  for (const Dimer& d : s.before)
    if (in_block(d.a, a) || in_block(d.b, a)) return true;
  return false;
}

}  // namespace

std::optional<std::vector<TilingStep>> realize_sock_move(const Tiling& from, const TwoStoryRegion& r, Cell anchor,
                                                         const Sock& target, bool allow_trit, bool exact,
                                                         const RealizeLimits& lim) {
  std::optional<Tiling> goal;
  if (exact) goal = tiling_of_sock(target, r);
  struct State {
    Tiling t;
    int flips, trits, parent;
    TilingStep step;
  };
  std::vector<State> states{{from, 0, 0, -1, {}}};
  std::set<std::pair<Tiling, int>> seen{{from, 0}};
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (goal ? states[i].t == *goal : sock_of_tiling(states[i].t, r) == target) {
      std::vector<TilingStep> out;
      for (int j = int(i); states[std::size_t(j)].parent >= 0; j = states[std::size_t(j)].parent) out.push_back(states[std::size_t(j)].step);
      std::reverse(out.begin(), out.end());
      return out;
    }
    State cur = states[i];
    if (cur.flips < lim.max_flips)
      for (const FlipSite& f : flips(cur.t, r)) {
        if (!touches_block(f, anchor)) continue;
        Tiling n = apply_flip(cur.t, f);
        if (!seen.insert({n, cur.trits}).second) continue;
        states.push_back({n, cur.flips + 1, cur.trits, int(i), {false, 0, n}});
      }
    if (allow_trit && cur.trits < lim.max_trits)
      for (const TritSite& s : trits(cur.t, r)) {
        if (!touches_block(s, anchor)) continue;
        Tiling n = apply_trit(cur.t, s);
        if (!seen.insert({n, cur.trits + 1}).second) continue;
        states.push_back({n, cur.flips, cur.trits + 1, int(i), {true, s.sign, n}});
      }
  }
  return std::nullopt;
}

std::vector<TilingStep> clear_trivial_cycles(const Tiling& t, const TwoStoryRegion& r) {
  (void)r;
  std::map<std::pair<Cell, Cell>, int> seen;
  for (const Dimer& d : t.dimers())
    if (d.axis() != Axis::Z) seen[{d.a.cell(), d.b.cell()}]++;
  std::vector<TilingStep> out;
  Tiling cur = t;
  for (auto [cells, n] : seen) {
    if (n != 2) continue;
    auto [a, b] = cells;
    FlipSite f;
    f.cubes = {CubeCoord{a.x, a.y, 0}, CubeCoord{b.x, b.y, 0}, CubeCoord{a.x, a.y, 1}, CubeCoord{b.x, b.y, 1}};
    f.before = {Dimer::make(f.cubes[0], f.cubes[1]), Dimer::make(f.cubes[2], f.cubes[3])};
    f.after = {Dimer::make(f.cubes[0], f.cubes[2]), Dimer::make(f.cubes[1], f.cubes[3])};
    cur = apply_flip(cur, f);
    out.push_back({false, 0, cur});
  }
  return out;
}

ReductionReplay replay_reduction(const Tiling& t, const TwoStoryRegion& r) {
  ReductionReplay out;
  Sock s = sock_of_tiling(t, r);
  out.sock_trace = reduce_to_empty(s);
  out.steps = clear_trivial_cycles(t, r);
  Tiling cur = out.steps.empty() ? t : out.steps.back().after;
  out.flips = out.steps.size();
  for (std::size_t i = 0; i < out.sock_trace.size(); ++i) {
    const SockMove& m = out.sock_trace[i];
    Sock next = apply_move(s, m);
    auto steps = realize_sock_move(cur, r, m.anchor, next, m.kind == MoveKind::Trit, true);
    if (!steps) throw Error(ErrorCode::InvalidSite, "sock move " + std::to_string(i) + " (" + to_string(m) + ") has no realization");
    for (const auto& st : *steps) {
      (st.trit ? out.trits : out.flips)++;
      if (st.trit && st.sign != m.sign)
        throw Error(ErrorCode::InvalidSite, "trit sign disagrees with sock move " + std::to_string(i));
      out.steps.push_back(st);
    }
    if (!steps->empty()) cur = steps->back().after;
    s = std::move(next);
  }
  out.final_tiling = cur;
  return out;
}

}  // namespace domino3d
