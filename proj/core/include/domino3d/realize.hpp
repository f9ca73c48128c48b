#pragma once

#include <optional>
#include <vector>

#include "domino3d/moves.hpp"
#include "domino3d/socks.hpp"

namespace domino3d {

// One real move on a tiling of a duplex region.
struct TilingStep {
  bool trit = false;
  int sign = 0;  // trits only
  Tiling after;
};

struct RealizeLimits {
  int max_flips = 4;
  int max_trits = 1;
};

// Shortest sequence of flips and trits, all touching the 2x2 block of
// columns at `anchor`, that turns `from` into a tiling whose sock is
// `target` (into tiling_of_sock(target) itself when `exact`). Trits are
// used only when allow_trit is set.
std::optional<std::vector<TilingStep>> realize_sock_move(const Tiling& from, const TwoStoryRegion& r, Cell anchor,
                                                         const Sock& target, bool allow_trit, bool exact = false,
                                                         const RealizeLimits& lim = {});

// Flips every trivial cycle of t into a pair of jewels.
std::vector<TilingStep> clear_trivial_cycles(const Tiling& t, const TwoStoryRegion& r);

struct ReductionReplay {
  std::vector<SockMove> sock_trace;
  std::vector<TilingStep> steps;
  std::size_t flips = 0;
  std::size_t trits = 0;
  Tiling final_tiling;
};

// Runs reduce_to_empty on the sock of t and replays each sock move as real
// flips and trits; throws InvalidSite if some move cannot be realized.
ReductionReplay replay_reduction(const Tiling& t, const TwoStoryRegion& r);

}  // namespace domino3d
