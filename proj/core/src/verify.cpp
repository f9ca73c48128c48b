#include "domino3d/verify.hpp"

#include <map>
#include <sstream>

#include "domino3d/error.hpp"
#include "domino3d/moves.hpp"
#include "domino3d/realize.hpp"

namespace domino3d {

void SuiteReport::fail(std::string what) {
  ++violations;
  if (samples.size() < 5) samples.push_back(std::move(what));
}

void SuiteReport::merge(const SuiteReport& o) {
  checked += o.checked;
  violations += o.violations;
  for (const auto& s : o.samples)
    if (samples.size() < 5) samples.push_back(s);
}

namespace {

std::vector<LaurentPoly> all_invariants(const TilingSet& set, const GhostConnection& g) {
  InvariantCalculator calc(set.index(), g);
  std::vector<int> partner(set.index().size());
  std::vector<LaurentPoly> out(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    set.partners(i, partner);
    out[i] = calc(partner);
  }
  return out;
}

std::size_t lookup(const TilingSet& set, std::span<const int> partner) {
  std::vector<std::uint64_t> code(static_cast<std::size_t>(set.words()));
  set.index().encode(partner, code);
  auto j = set.find(code);
  if (!j) throw Error(ErrorCode::InvalidSite, "move leaves the tiling set");
  return *j;
}

}  // namespace

SuiteReport check_flip_invariance(const TilingSet& set, const GhostConnection& g) {
  SuiteReport rep;
  rep.name = "flip invariance";
  auto inv = all_invariants(set, g);
  MoveScanner scan(set.index());
  std::vector<int> partner(set.index().size());
  std::vector<IndexFlip> moves;
  for (std::size_t i = 0; i < set.size(); ++i) {
    set.partners(i, partner);
    moves.clear();
    scan.flips(partner, moves);
    for (const auto& f : moves) {
      std::vector<int> next = partner;
      MoveScanner::apply(next, f);
      std::size_t j = lookup(set, next);
      ++rep.checked;
      if (inv[i] != inv[j])
        rep.fail("tiling " + std::to_string(i) + " -> " + std::to_string(j) + ": " + inv[i].to_string() + " vs " +
                 inv[j].to_string());
    }
  }
  return rep;
}

SuiteReport check_trit_deltas(const TilingSet& set, const GhostConnection& g) {
  SuiteReport rep;
  rep.name = "trit deltas";
  auto inv = all_invariants(set, g);
  MoveScanner scan(set.index());
  std::vector<int> partner(set.index().size());
  std::vector<IndexTrit> moves;
  for (std::size_t i = 0; i < set.size(); ++i) {
    set.partners(i, partner);
    moves.clear();
    scan.trits(partner, moves);
    for (const auto& t : moves) {
      if (t.sign <= 0) continue;
      std::vector<int> next = partner;
      MoveScanner::apply(next, t);
      std::size_t j = lookup(set, next);
      ++rep.checked;
      LaurentPoly d = inv[j] - inv[i];
      if (!as_positive_trit_delta(d) || d.derivative_at_one() != 1)
        rep.fail("tiling " + std::to_string(i) + " -> " + std::to_string(j) + ": delta " + d.to_string());
    }
  }
  return rep;
}

SuiteReport check_move_soundness(const TwoStoryRegion& r) {
  SuiteReport rep;
  rep.name = "move soundness";
  for (const Tiling& t : all_tilings(r)) {
    Sock s = sock_of_tiling(t, r);
    Tiling base = tiling_of_sock(s, r);
    for (const SockMove& m : enumerate_moves(s)) {
      ++rep.checked;
      bool trit = m.kind == MoveKind::Trit;
      auto steps = realize_sock_move(base, r, m.anchor, apply_move(s, m), trit);
      if (!steps) {
        rep.fail("unrealized " + to_string(m));
        continue;
      }
      std::size_t trits = 0;
      for (const auto& st : *steps) trits += st.trit;
      if (trit ? trits != 1 || steps->back().sign != m.sign : trits != 0)
        rep.fail("wrong realization of " + to_string(m));
    }
  }
  return rep;
}

SuiteReport check_reduction(const TwoStoryRegion& r) {
  SuiteReport rep;
  rep.name = "reduction";
  Tiling target = all_jewels_tiling(r);
  std::size_t i = 0;
  for (const Tiling& t : all_tilings(r)) {
    ++rep.checked;
    try {
      auto rr = replay_reduction(t, r);
      if (!(rr.final_tiling == target)) rep.fail("tiling " + std::to_string(i) + " did not reach the all-jewels tiling");
    } catch (const Error& e) {
      rep.fail("tiling " + std::to_string(i) + ": " + e.what());
    }
    ++i;
  }
  return rep;
}

SuiteReport check_untangle_random(const RandomSuiteOptions& opt) {
  SuiteReport rep;
  rep.name = "untangle";
  std::mt19937_64 rng(opt.seed);
  std::map<std::string, std::vector<std::pair<int, int>>> forms;
  for (int i = 0; i < opt.socks; ++i) {
    Sock s = random_sock(rng, opt.sock);
    ++rep.checked;
    try {
      auto res = untangle(s);
      LaurentPoly p = sock_invariant(s);
      if (!is_untangled(res.sock)) rep.fail("sock " + std::to_string(i) + ": result not untangled");
      else if (sock_invariant(res.sock) != p) rep.fail("sock " + std::to_string(i) + ": invariant changed");
      else if (!(replay(s, res.trace) == res.sock)) rep.fail("sock " + std::to_string(i) + ": trace does not replay");
      else {
        auto form = canonical_untangled(res.sock);
        auto [it, fresh] = forms.emplace(p.to_string(), form);
        if (!fresh && it->second != form) rep.fail("sock " + std::to_string(i) + ": canonical form differs for " + p.to_string());
      }
    } catch (const Error& e) {
      rep.fail("sock " + std::to_string(i) + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace domino3d
