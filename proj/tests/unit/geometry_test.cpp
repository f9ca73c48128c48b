#include <doctest.h>

#include "domino3d/error.hpp"
#include "domino3d/geometry.hpp"

using namespace domino3d;

TEST_CASE("cube and cell colors") {
  CHECK(cube_color({0, 0, 0}) == Color::White);
  CHECK(cube_color({1, 0, 0}) == Color::Black);
  CHECK(cube_color({0, 0, 1}) == Color::Black);
  CHECK(cell_color({1, 1}) == Color::White);
  CHECK(cell_color({-1, 0}) == Color::Black);
}

TEST_CASE("box regions") {
  auto r = make_box(3, 3);
  CHECK(r.is_duplex());
  CHECK(r.cube_count() == 18);
  CHECK(r.white_cube_count() == 9);
  CHECK(r.black_cube_count() == 9);
  CHECK(r.holes().empty());
  CHECK(r.bounds().width() == 3);
}

TEST_CASE("region text round trip") {
  const std::string text = "###\n###\n.##\n\n###\n###\n##.\n";
  auto r = parse_region(text);
  CHECK_FALSE(r.is_duplex());
  CHECK(r.top().size() == 8);
  CHECK(r.bottom().size() == 8);
  CHECK(r.holes().size() == 2);
  CHECK(r.sources().size() == 1);
  CHECK(r.sinks().size() == 1);
  CHECK(r.sources()[0].color() == Color::White);
  CHECK(r.sinks()[0].color() == Color::Black);
  CHECK(parse_region(format_region(r)).top() == r.top());
  CHECK(parse_region(format_region(r)).bottom() == r.bottom());
  auto d = parse_region("; comment\n##\n##\n");
  CHECK(d.is_duplex());
  CHECK(parse_region(format_region(d)).top() == d.top());
}

TEST_CASE("region errors") {
  CHECK_THROWS_AS(parse_region("#x#\n"), Error);
  CHECK_THROWS_AS(parse_region(""), Error);
  try {
    parse_region("###\n#.#\n###\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimplyConnected);
  }
  try {
    parse_region("#.#\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() != ErrorCode::ParseError);
  }
}

TEST_CASE("floor plan topology") {
  FloorPlan ring({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
  CHECK(ring.is_connected());
  CHECK_FALSE(ring.is_simply_connected());
  auto rect = FloorPlan::rectangle(4, 2);
  CHECK(rect.is_simply_connected());
  CHECK(rect.white_count() == 4);
  CHECK(rect.translated(1, 0).contains({4, 1}));
}
