#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "domino3d/invariant.hpp"
#include "domino3d/socks.hpp"
#include "domino3d/tiling.hpp"

namespace domino3d {

struct SuiteReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> samples;  // first few violations
  bool ok() const { return violations == 0; }
  void fail(std::string what);
  void merge(const SuiteReport& o);
};

// Every flip edge of the tiling graph preserves P_t.
SuiteReport check_flip_invariance(const TilingSet& set, const GhostConnection& g);
// Every trit, read in its positive direction, changes P_t by q^k (q - 1)
// and the twist by exactly +1.
SuiteReport check_trit_deltas(const TilingSet& set, const GhostConnection& g);
// Every sock move on the sock of every tiling of a duplex region is
// realized by at most four flips or a single trit of the same sign.
SuiteReport check_move_soundness(const TwoStoryRegion& r);
// reduce_to_empty replays on every tiling and ends at the all-jewels tiling.
SuiteReport check_reduction(const TwoStoryRegion& r);

struct RandomSuiteOptions {
  int socks = 200;
  std::uint64_t seed = 1;
  RandomSockOptions sock;
};

// Untangle preserves P_s and replays; socks with equal invariants have the
// same canonical untangled form.
SuiteReport check_untangle_random(const RandomSuiteOptions& opt);

}  // namespace domino3d
