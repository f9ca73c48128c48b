#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domino3d/geometry.hpp"

namespace domino3d {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };
const char* axis_name(Axis a);

struct Dimer {
  CubeCoord a, b;  // a < b in (x, y, z) order

  static Dimer make(CubeCoord p, CubeCoord q);
  Axis axis() const;
  bool is_valid() const;
  friend auto operator<=>(const Dimer&, const Dimer&) = default;
};

class Tiling {
 public:
  Tiling() = default;
  explicit Tiling(std::vector<Dimer> dimers);

  const std::vector<Dimer>& dimers() const { return dimers_; }
  std::size_t size() const { return dimers_.size(); }
  Tiling translated(int dx, int dy) const;
  friend bool operator==(const Tiling&, const Tiling&) = default;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  std::vector<Dimer> dimers_;  // sorted
};

// Dense indexing of a region's cubes in (z, y, x) order.
class CubeIndex {
 public:
  // Direction slots: 0 +x, 1 -x, 2 +y, 3 -y, 4 +z, 5 -z.
  static constexpr int kDirs = 6;

  explicit CubeIndex(const TwoStoryRegion& r);

  int size() const { return int(cubes_.size()); }
  const CubeCoord& cube(int i) const { return cubes_[std::size_t(i)]; }
  int index_of(CubeCoord c) const;
  int neighbor(int i, int dir) const { return nbr_[std::size_t(i) * kDirs + std::size_t(dir)]; }
  const TwoStoryRegion& region() const { return region_; }

  // partner[i] = index of the cube sharing a dimer with cube i.
  std::vector<int> partners_of(const Tiling& t) const;
  Tiling tiling_of(std::span<const int> partner) const;

  int words_per_code() const { return (2 * size() + 63) / 64; }
  // Two bits per cube, most significant first: 0 = covered by an earlier
  // cube, 1/2/3 = paired with the +x/+y/+z neighbour.
  void encode(std::span<const int> partner, std::span<std::uint64_t> code) const;
  void decode(std::span<const std::uint64_t> code, std::span<int> partner) const;

 private:
  TwoStoryRegion region_;
  BoundingBox box_;
  std::vector<CubeCoord> cubes_;
  std::vector<int> lookup_;
  std::vector<int> nbr_;
};

// All tilings of a region as packed codes in enumeration order (which is
// also lexicographic order of the codes).
class TilingSet {
 public:
  TilingSet(const TwoStoryRegion& r, std::vector<std::uint64_t> data);

  const CubeIndex& index() const { return index_; }
  std::size_t size() const { return words_ == 0 ? 0 : data_.size() / std::size_t(words_); }
  int words() const { return words_; }
  std::span<const std::uint64_t> code(std::size_t i) const {
    return {data_.data() + i * std::size_t(words_), std::size_t(words_)};
  }
  std::optional<std::size_t> find(std::span<const std::uint64_t> code) const;
  std::optional<std::size_t> find(const Tiling& t) const;
  Tiling tiling(std::size_t i) const;
  void partners(std::size_t i, std::span<int> out) const { index_.decode(code(i), out); }

 private:
  CubeIndex index_;
  int words_;
  std::vector<std::uint64_t> data_;
};

struct EnumerationOptions {
  int threads = 0;          // 0 = hardware concurrency capped by DOMINO3D_THREADS
  int split_depth = 12;     // prefix length used to partition work
};

int default_thread_count();

std::uint64_t count_tilings(const TwoStoryRegion& r, const EnumerationOptions& opt = {});
// Streams tilings in canonical order; return false from the callback to stop.
void enumerate_tilings(const TwoStoryRegion& r, const std::function<bool(const Tiling&)>& emit);
std::vector<Tiling> all_tilings(const TwoStoryRegion& r, std::size_t limit = SIZE_MAX);
TilingSet enumerate_tiling_set(const TwoStoryRegion& r, const EnumerationOptions& opt = {});

enum class ViolationKind { NotADimer, OutsideRegion, OverlapAt, UncoveredCube };
const char* violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  CubeCoord cube;
  std::string message() const;
};

std::optional<Violation> validate(const Tiling& t, const TwoStoryRegion& r);

// Places t, translated by (dx, dy), into a width x height x 2 box and fills
// the rest with z-dimers.
Tiling embed_in_box(const Tiling& t, const TwoStoryRegion& r, int width, int height, int dx, int dy);

// The tiling made only of z-dimers on a duplex region.
Tiling all_jewels_tiling(const TwoStoryRegion& r);

}  // namespace domino3d
