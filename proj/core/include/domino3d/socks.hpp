#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "domino3d/geometry.hpp"
#include "domino3d/polynomial.hpp"
#include "domino3d/tiling.hpp"

namespace domino3d {

using Vertex = Cell;

// Disjoint oriented simple cycles on the square grid. Vertices off every
// cycle are jewels. A domain (the cells of a duplex floor, read as grid
// vertices) restricts where moves may reach.
class Sock {
 public:
  Sock() = default;
  explicit Sock(const std::vector<std::vector<Vertex>>& cycles, std::optional<FloorPlan> domain = std::nullopt);

  // Each cycle starts at its row-major smallest vertex; cycles sorted.
  std::vector<std::vector<Vertex>> cycles() const;
  std::vector<Vertex> cycle_through(Vertex v) const;
  bool empty() const { return next_.empty(); }
  std::size_t vertex_count() const { return next_.size(); }
  bool on_cycle(Vertex v) const { return next_.count(v) != 0; }
  bool is_jewel(Vertex v) const { return !on_cycle(v) && in_domain(v); }
  std::optional<Vertex> next(Vertex v) const;
  std::optional<Vertex> prev(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;  // directed u -> v
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  const std::optional<FloorPlan>& domain() const { return domain_; }
  bool in_domain(Vertex v) const { return !domain_ || domain_->contains(v); }
  void set_domain(std::optional<FloorPlan> d) { domain_ = std::move(d); }
  BoundingBox bounds() const;

  friend bool operator==(const Sock& a, const Sock& b) { return a.next_ == b.next_; }

  // Raw edits used by move application; callers keep the invariants.
  void link(Vertex u, Vertex v);
  void unlink(Vertex u);

 private:
  std::unordered_map<Vertex, Vertex> next_, prev_;
  std::optional<FloorPlan> domain_;
};

enum class MoveKind : std::uint8_t { FlipA, FlipB, FlipC, Trit };
const char* move_kind_name(MoveKind k);
std::optional<MoveKind> parse_move_kind(const std::string& s);

// All moves live on the unit cell whose top-left corner is `anchor`.
// Corners: 0 anchor, 1 anchor+(1,0), 2 anchor+(1,1), 3 anchor+(0,1).
// Sides: 0 top, 1 right, 2 bottom, 3 left.
// flip_a: orientation 0 swaps the horizontal sides for the vertical ones, 1
//         the reverse.
// flip_b: orientation is the side carrying the single edge.
// flip_c: orientation +1 / -1 is the (screen) counterclockwise / clockwise
//         unit cycle being created or removed.
// trit:   orientation is the corner on the cycle that becomes a jewel.
struct SockMove {
  MoveKind kind = MoveKind::FlipA;
  Cell anchor;
  int orientation = 0;
  int sign = 0;  // trit only: +1 when the invariant gains q^k(q-1)
  friend bool operator==(const SockMove&, const SockMove&) = default;
};

std::string to_string(const SockMove& m);

bool can_apply(const Sock& s, const SockMove& m);
// Sign a trit move would carry on s; throws PatternMismatch when it does not apply.
int sock_trit_sign(const Sock& s, const SockMove& m);
// Throws PatternMismatch or OutsideDomain.
Sock apply_move(const Sock& s, const SockMove& m);
void apply_in_place(Sock& s, const SockMove& m);
// Applies the move if it is valid; reports whether it did.
bool try_apply(Sock& s, const SockMove& m);

// Deterministic: anchors row-major, kinds a, b, c, trit, then orientation.
// Without a domain, flip_c creation is limited to the sock's bounding box
// grown by one.
std::vector<SockMove> enumerate_moves(const Sock& s, bool include_trits = true);

std::int64_t area(const Sock& s);
std::int64_t cycle_area(const std::vector<Vertex>& cycle);  // signed, screen ccw positive
LaurentPoly sock_invariant(const Sock& s);
// Total winding of all cycles about v (v must not lie on a cycle).
int sock_winding(const Sock& s, Vertex v);

Sock sock_of_tiling(const Tiling& t, const TwoStoryRegion& r);
// Tiling whose sock is s and which has no trivial cycles.
Tiling tiling_of_sock(const Sock& s, const TwoStoryRegion& r);

struct BoxedJewel {
  Vertex center;
  int degree = 0;  // negative when the squares are clockwise
  int sign = 0;    // +1 black jewel, -1 white jewel
  friend auto operator<=>(const BoxedJewel&, const BoxedJewel&) = default;
};

// Splits a sock made only of boxed jewels; nullopt otherwise.
std::optional<std::vector<BoxedJewel>> boxed_jewels(const Sock& s);
bool is_untangled(const Sock& s);
Sock sock_of_boxed(const std::vector<BoxedJewel>& jewels);

// (sign, degree) pairs after cancelling opposite contributions per degree.
std::vector<std::pair<int, int>> canonical_untangled(const Sock& s);

struct UntangleResult {
  Sock sock;
  std::vector<SockMove> trace;
};

UntangleResult untangle(const Sock& s);
std::vector<SockMove> reduce_to_empty(const Sock& s);

// Applies every move in order, checking each one.
Sock replay(const Sock& s, const std::vector<SockMove>& trace);

struct RandomSockOptions {
  int jewels = 3;
  int max_degree = 2;
  int moves = 40;
};
Sock random_untangled_sock(std::mt19937_64& rng, const RandomSockOptions& opt = {});
Sock random_sock(std::mt19937_64& rng, const RandomSockOptions& opt = {});

}  // namespace domino3d
