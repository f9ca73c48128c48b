#include <doctest.h>

#include <algorithm>
#include <random>

#include "domino3d/error.hpp"
#include "domino3d/socks.hpp"

using namespace domino3d;

namespace {

// Rectangle of grid vertices from (x0,y0) to (x1,y1), screen-counterclockwise when ccw.
std::vector<Vertex> rect(int x0, int y0, int x1, int y1, bool ccw = true) {
  std::vector<Vertex> c;
  for (int y = y0; y < y1; ++y) c.push_back({x0, y});
  for (int x = x0; x < x1; ++x) c.push_back({x, y1});
  for (int y = y1; y > y0; --y) c.push_back({x1, y});
  for (int x = x1; x > x0; --x) c.push_back({x, y0});
  if (!ccw) std::reverse(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_CASE("areas of boxed jewels and untangled socks") {
  CHECK(area(Sock()) == 0);
  CHECK(area(sock_of_boxed({{{0, 0}, 1, 1}})) == 4);
  CHECK(area(sock_of_boxed({{{0, 0}, 4, -1}})) == 4 + 16 + 36 + 64);
  Sock s = sock_of_boxed({{{0, 0}, 2, 1}, {{10, 0}, 1, -1}, {{20, 0}, -2, 1}, {{30, 0}, 3, 1}});
  CHECK(area(s) == 20 + 4 + 20 + 56);
  CHECK(is_untangled(s));
  CHECK(boxed_jewels(s)->size() == 4);
  CHECK(cycle_area(rect(0, 0, 2, 3)) == 6);
  CHECK(cycle_area(rect(0, 0, 2, 3, false)) == -6);
}

TEST_CASE("boxed jewel invariants") {
  // A black jewel inside one counterclockwise square contributes q.
  Sock s = sock_of_boxed({{{1, 0}, 1, 1}});
  CHECK(sock_invariant(s).to_string() == "q");
  CHECK(sock_winding(s, {1, 0}) == 1);
  Sock t = sock_of_boxed({{{0, 0}, -2, -1}});
  CHECK(sock_invariant(t).to_string() == "-q^{-2}");
  CHECK(canonical_untangled(sock_of_boxed({{{0, 0}, 1, -1}, {{11, 0}, 1, 1}})).empty());
}

TEST_CASE("sock construction rejects bad cycles") {
  CHECK_THROWS_AS(Sock({{{0, 0}, {2, 0}, {2, 1}, {0, 1}}}), Error);
  CHECK_THROWS_AS(Sock({rect(0, 0, 2, 2), rect(1, 1, 3, 3)}), Error);
  Sock ok({rect(0, 0, 3, 3), rect(1, 1, 2, 2, false)});
  CHECK(ok.cycles().size() == 2);
  CHECK(ok.is_jewel({5, 5}));
  CHECK(ok.has_edge({0, 0}, {0, 1}));
}

TEST_CASE("every enumerated move applies and is undone by some move") {
  Sock s({rect(0, 0, 3, 2), rect(4, 0, 5, 1, false)});
  auto moves = enumerate_moves(s);
  CHECK_FALSE(moves.empty());
  for (const auto& m : moves) {
    CAPTURE(to_string(m));
    REQUIRE(can_apply(s, m));
    Sock u = apply_move(s, m);
    bool undone = m.kind == MoveKind::FlipC && apply_move(u, m) == s;
    for (const auto& back : enumerate_moves(u))
      if (apply_move(u, back) == s) undone = true;
    CHECK(undone);
    if (m.kind != MoveKind::Trit) CHECK(sock_invariant(u) == sock_invariant(s));
  }
}

TEST_CASE("sock trits change the invariant by q^k(q-1) up to a constant") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    Sock s = random_sock(rng);
    for (const auto& m : enumerate_moves(s)) {
      if (m.kind != MoveKind::Trit) continue;
      LaurentPoly d = sock_invariant(apply_move(s, m)) - sock_invariant(s);
      if (m.sign < 0) d = -d;
      CHECK(as_positive_trit_delta(d - LaurentPoly::constant(d.eval_at_one())));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("flip_c creates unit cycles of both orientations") {
  Sock s;
  Sock a = apply_move(s, {MoveKind::FlipC, {0, 0}, 1, 0});
  CHECK(cycle_area(a.cycles()[0]) == 1);
  Sock b = apply_move(s, {MoveKind::FlipC, {0, 0}, -1, 0});
  CHECK(cycle_area(b.cycles()[0]) == -1);
  CHECK(apply_move(a, {MoveKind::FlipC, {0, 0}, 1, 0}).empty());
  CHECK_THROWS_AS(apply_move(a, {MoveKind::FlipC, {0, 0}, -1, 0}), Error);
}

TEST_CASE("domains restrict moves") {
  Sock s({}, FloorPlan::rectangle(2, 2));
  for (const auto& m : enumerate_moves(s)) CHECK(m.anchor == Cell{0, 0});
  CHECK_THROWS_AS(apply_move(s, {MoveKind::FlipC, {1, 1}, 1, 0}), Error);
}

TEST_CASE("socks of tilings") {
  auto r = make_box(3, 3);
  for (const auto& t : all_tilings(r)) {
    Sock s = sock_of_tiling(t, r);
    Tiling c = tiling_of_sock(s, r);
    CHECK_FALSE(validate(c, r));
    CHECK(sock_of_tiling(c, r) == s);
  }
  CHECK(sock_of_tiling(all_jewels_tiling(r), r).empty());
}
