#include <doctest.h>

#include <algorithm>

#include "domino3d/moves.hpp"

using namespace domino3d;

TEST_CASE("flip sites are reversible") {
  auto r = make_box(3, 3);
  for (const auto& t : all_tilings(r, 40))
    for (const auto& f : flips(t, r)) {
      Tiling u = apply_flip(t, f);
      CHECK_FALSE(validate(u, r));
      CHECK(apply_flip(u, f.reversed()) == t);
    }
}

TEST_CASE("trit sites carry opposite signs in both directions") {
  auto r = make_box(3, 3);
  int seen = 0;
  for (const auto& t : all_tilings(r))
    for (const auto& tr : trits(t, r)) {
      ++seen;
      Tiling u = apply_trit(t, tr);
      CHECK_FALSE(validate(u, r));
      CHECK((tr.sign == 1 || tr.sign == -1));
      CHECK(trit_sign(tr.after, tr.before) == -tr.sign);
      CHECK(apply_trit(u, tr.reversed()) == t);
    }
  CHECK(seen == 16);
}

TEST_CASE("the 3x3x2 box has two flip-free tilings") {
  auto table = flip_components(make_box(3, 3));
  CHECK(table.total == 229);
  REQUIRE(table.components.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& c : table.components) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 227});
  for (const auto& c : table.components)
    if (c.size == 1) CHECK(flips(c.representative, make_box(3, 3)).empty());
  CHECK(table.inconsistent_trit_edges == 0);
  auto graph = component_trit_graph(table);
  CHECK(graph.vertices == 3);
  CHECK(graph.connected);
}

TEST_CASE("small boxes are flip connected") {
  for (int w = 2; w <= 6; ++w) CHECK(flip_components(make_box(w, 2)).components.size() == 1);
}

TEST_CASE("component ids and tiling map agree") {
  auto r = make_box(4, 3);
  auto set = enumerate_tiling_set(r);
  auto table = flip_components(set, canonical_ghosts(r));
  REQUIRE(table.component_of.size() == set.size());
  std::size_t total = 0;
  for (const auto& c : table.components) {
    total += c.size;
    CHECK(table.component_of[c.representative_index] == c.id);
    CHECK(set.tiling(c.representative_index) == c.representative);
  }
  CHECK(total == set.size());
  auto dot = trit_graph_dot(table);
  CHECK(dot.find("digraph") == 0);
}
