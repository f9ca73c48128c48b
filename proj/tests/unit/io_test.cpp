#include <doctest.h>

#include "domino3d/error.hpp"
#include "domino3d/io.hpp"
#include "domino3d/render.hpp"

using namespace domino3d;

TEST_CASE("tiling json round trip") {
  auto r = make_box(3, 2);
  for (const auto& t : all_tilings(r)) CHECK(tiling_from_json(tiling_to_json(t)) == t);
  CHECK_THROWS_AS(tiling_from_json("{\"dimers\": 3}"), Error);
  CHECK_THROWS_AS(tiling_from_json("not json"), Error);
}

TEST_CASE("polynomial, sock and trace json") {
  auto p = LaurentPoly::parse("-2q + 1 - 2q^{-1}");
  CHECK(poly_to_json(p) == "[[1,-2],[0,1],[-1,-2]]");
  CHECK(poly_from_json(poly_to_json(p)) == p);
  Sock s = sock_of_boxed({{{0, 0}, 2, 1}, {{6, 0}, -1, -1}});
  CHECK(sock_from_json(sock_to_json(s)) == s);
  std::vector<SockMove> trace = {{MoveKind::FlipA, {1, 2}, 1, 0}, {MoveKind::Trit, {0, 0}, 2, -1}};
  CHECK(trace_from_json(trace_to_json(trace)) == trace);
  CHECK_THROWS_AS(trace_from_json("[{\"kind\": \"flip_z\", \"anchor\": [0,0], \"orientation\": 0, \"sign\": 0}]"), Error);
}

TEST_CASE("ghost json round trip") {
  auto r = parse_region("####\n####\n####\n\n.##.\n####\n####\n");
  auto g = canonical_ghosts(r);
  auto h = ghosts_from_json(ghosts_to_json(g), r);
  REQUIRE(h.routes.size() == g.routes.size());
  for (std::size_t i = 0; i < g.routes.size(); ++i) {
    CHECK(h.routes[i].path == g.routes[i].path);
    CHECK(h.routes[i].from == g.routes[i].from);
  }
  CHECK_THROWS_AS(ghosts_from_json("{\"routes\": [[[1,1]]]}", r), Error);
}

TEST_CASE("component tables") {
  auto table = flip_components(make_box(3, 3));
  auto csv = components_to_csv(table);
  CHECK(csv.rfind("component,size,P_t(q),Tw(t)\n0,227,\"-1\",0\n", 0) == 0);
  auto json = components_to_json(table, false);
  CHECK(json.find("\"total\": 229") != std::string::npos);
  CHECK(components_to_json(table) == components_to_json(flip_components(make_box(3, 3))));
}

TEST_CASE("svg output") {
  auto r = make_box(2, 2);
  auto jewels = render_tiling_svg(all_jewels_tiling(r), r);
  CHECK(jewels == render_tiling_svg(all_jewels_tiling(r), r));
  CHECK(jewels.find("<g id=\"floor0\">") < jewels.find("<g id=\"floor1\">"));
  std::size_t circles = 0;
  for (auto p = jewels.find("<circle"); p != std::string::npos; p = jewels.find("<circle", p + 1)) ++circles;
  CHECK(circles == 4 + 4 + 4);
  CHECK(jewels.find("#d62728") != std::string::npos);
  auto empty = render_sock_svg(Sock());
  CHECK(empty.find("<line") != std::string::npos);
  CHECK(empty.find("marker-end") == std::string::npos);
  CHECK(empty.find("<circle") == std::string::npos);
  auto boxed = render_sock_svg(sock_of_boxed({{{0, 0}, 1, 1}}));
  CHECK(boxed.find("marker-end") != std::string::npos);
  CHECK(boxed.find("<circle") != std::string::npos);
}
