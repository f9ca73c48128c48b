#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domino3d/invariant.hpp"
#include "domino3d/polynomial.hpp"
#include "domino3d/tiling.hpp"

namespace domino3d {

struct FlipSite {
  std::array<CubeCoord, 4> cubes;  // the 2x2x1 slab
  std::array<Dimer, 2> before;
  std::array<Dimer, 2> after;
  FlipSite reversed() const { return {cubes, after, before}; }
};

struct TritSite {
  CubeCoord corner;  // minimal cube of the 2x2x2 block
  std::array<Dimer, 3> before;
  std::array<Dimer, 3> after;
  int sign = 0;
  TritSite reversed() const { return {corner, after, before, -sign}; }
};

std::vector<FlipSite> flips(const Tiling& t, const TwoStoryRegion& r);
Tiling apply_flip(const Tiling& t, const FlipSite& site);
std::vector<TritSite> trits(const Tiling& t, const TwoStoryRegion& r);
Tiling apply_trit(const Tiling& t, const TritSite& site);

// Index-level moves on partner arrays. A flip replaces pairs (a,b),(c,d) by
// (a,c),(b,d); a trit replaces three pairs by three others.
struct IndexFlip {
  int a, b, c, d;
};
struct IndexTrit {
  std::array<std::array<int, 2>, 3> before;
  std::array<std::array<int, 2>, 3> after;
  int sign;
};

class MoveScanner {
 public:
  explicit MoveScanner(const CubeIndex& idx);
  void flips(std::span<const int> partner, std::vector<IndexFlip>& out) const;
  void trits(std::span<const int> partner, std::vector<IndexTrit>& out) const;
  static void apply(std::span<int> partner, const IndexFlip& f);
  static void apply(std::span<int> partner, const IndexTrit& t);
  const CubeIndex& index() const { return idx_; }

 private:
  const CubeIndex& idx_;
  std::vector<std::array<int, 4>> squares_;  // p, p+e1, p+e2, p+e1+e2
  std::vector<std::array<int, 8>> blocks_;   // local bit = dx + 2dy + 4dz
};

// Sign of a trit from the local drawing: +1 when it raises the twist.
int trit_sign(const std::array<Dimer, 3>& before, const std::array<Dimer, 3>& after);

struct ComponentInfo {
  int id = 0;
  std::size_t size = 0;
  std::size_t representative_index = 0;
  Tiling representative;
  LaurentPoly invariant;
  std::int64_t twist = 0;
};

struct TritEdge {
  int a = 0;
  int b = 0;
  int sign = 0;  // twist(b) - twist(a) along the trit a -> b
  std::size_t multiplicity = 0;
  friend auto operator<=>(const TritEdge&, const TritEdge&) = default;
};

struct ComponentTable {
  std::uint64_t total = 0;
  std::vector<ComponentInfo> components;
  std::vector<TritEdge> trit_edges;  // a < b
  std::vector<int> component_of;     // per tiling index in the TilingSet
  std::size_t inconsistent_trit_edges = 0;
};

struct ComponentOptions {
  int threads = 0;
  bool trit_edges = true;
};

ComponentTable flip_components(const TilingSet& set, const GhostConnection& g, const ComponentOptions& opt = {});
ComponentTable flip_components(const TwoStoryRegion& r, const ComponentOptions& opt = {});

struct TritGraph {
  int vertices = 0;
  std::vector<TritEdge> edges;
  bool connected = false;
};

TritGraph component_trit_graph(const ComponentTable& table);
std::string trit_graph_dot(const ComponentTable& table);

}  // namespace domino3d
