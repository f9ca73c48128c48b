#include "domino3d/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace domino3d {

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Dimer Dimer::make(CubeCoord p, CubeCoord q) {
  if (q < p) std::swap(p, q);
  return {p, q};
}

Axis Dimer::axis() const {
  if (a.x != b.x) return Axis::X;
  if (a.y != b.y) return Axis::Y;
  return Axis::Z;
}

bool Dimer::is_valid() const {
  int d = std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
  return d == 1 && a < b;
}

Tiling::Tiling(std::vector<Dimer> dimers) : dimers_(std::move(dimers)) {
  for (auto& d : dimers_) d = Dimer::make(d.a, d.b);
  std::sort(dimers_.begin(), dimers_.end());
}

Tiling Tiling::translated(int dx, int dy) const {
  std::vector<Dimer> out;
  out.reserve(dimers_.size());
  for (const auto& d : dimers_) out.push_back({{d.a.x + dx, d.a.y + dy, d.a.z}, {d.b.x + dx, d.b.y + dy, d.b.z}});
  return Tiling(std::move(out));
}

CubeIndex::CubeIndex(const TwoStoryRegion& r) : region_(r), box_(r.bounds()) {
  cubes_ = r.cubes();
  std::sort(cubes_.begin(), cubes_.end(), ZyxLess{});
  lookup_.assign(std::size_t(box_.width()) * box_.height() * 2, -1);
  for (int i = 0; i < size(); ++i) {
    const auto& c = cubes_[std::size_t(i)];
    lookup_[(std::size_t(c.z) * box_.height() + (c.y - box_.min_y)) * box_.width() + (c.x - box_.min_x)] = i;
  }
  static const int d[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  nbr_.resize(cubes_.size() * kDirs);
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < kDirs; ++k) {
      const auto& c = cubes_[std::size_t(i)];
      nbr_[std::size_t(i) * kDirs + std::size_t(k)] = index_of({c.x + d[k][0], c.y + d[k][1], c.z + d[k][2]});
    }
}

int CubeIndex::index_of(CubeCoord c) const {
  if (c.z < 0 || c.z > 1 || !box_.contains(c.cell())) return -1;
  return lookup_[(std::size_t(c.z) * box_.height() + (c.y - box_.min_y)) * box_.width() + (c.x - box_.min_x)];
}

std::vector<int> CubeIndex::partners_of(const Tiling& t) const {
  std::vector<int> p(cubes_.size(), -1);
  for (const auto& d : t.dimers()) {
    int a = index_of(d.a), b = index_of(d.b);
    if (a < 0 || b < 0) throw Error(ErrorCode::InvalidSite, "dimer outside region");
    p[std::size_t(a)] = b;
    p[std::size_t(b)] = a;
  }
  return p;
}

Tiling CubeIndex::tiling_of(std::span<const int> partner) const {
  std::vector<Dimer> ds;
  ds.reserve(cubes_.size() / 2);
  for (int i = 0; i < size(); ++i) {
    int j = partner[std::size_t(i)];
    if (j > i) ds.push_back(Dimer::make(cubes_[std::size_t(i)], cubes_[std::size_t(j)]));
  }
  return Tiling(std::move(ds));
}

void CubeIndex::encode(std::span<const int> partner, std::span<std::uint64_t> code) const {
  std::fill(code.begin(), code.end(), 0);
  for (int i = 0; i < size(); ++i) {
    int j = partner[std::size_t(i)];
    if (j < i) continue;
    std::uint64_t v = j == neighbor(i, 0) ? 1 : j == neighbor(i, 2) ? 2 : 3;
    int bit = 2 * i;
    code[std::size_t(bit / 64)] |= v << (62 - bit % 64);
  }
}

void CubeIndex::decode(std::span<const std::uint64_t> code, std::span<int> partner) const {
  for (int i = 0; i < size(); ++i) {
    int bit = 2 * i;
    unsigned v = unsigned(code[std::size_t(bit / 64)] >> (62 - bit % 64)) & 3u;
    if (v == 0) continue;
    int j = neighbor(i, v == 1 ? 0 : v == 2 ? 2 : 4);
    partner[std::size_t(i)] = j;
    partner[std::size_t(j)] = i;
  }
}

TilingSet::TilingSet(const TwoStoryRegion& r, std::vector<std::uint64_t> data)
    : index_(r), words_(index_.words_per_code()), data_(std::move(data)) {}

std::optional<std::size_t> TilingSet::find(std::span<const std::uint64_t> key) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto c = code(mid);
    auto cmp = std::lexicographical_compare_three_way(c.begin(), c.end(), key.begin(), key.end());
    if (cmp == 0) return mid;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

std::optional<std::size_t> TilingSet::find(const Tiling& t) const {
  auto p = index_.partners_of(t);
  if (std::find(p.begin(), p.end(), -1) != p.end()) return std::nullopt;
  std::vector<std::uint64_t> key(static_cast<std::size_t>(words_));
  index_.encode(p, key);
  return find(key);
}

Tiling TilingSet::tiling(std::size_t i) const {
  std::vector<int> p(std::size_t(index_.size()), -1);
  partners(i, p);
  return index_.tiling_of(p);
}

int default_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw == 0 ? 1 : int(hw);
  if (const char* env = std::getenv("DOMINO3D_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

namespace {

class Search {
 public:
  explicit Search(const CubeIndex& idx)
      : idx_(idx), covered_(std::size_t(idx.size()), 0), code_(std::size_t(idx.words_per_code()), 0) {}

  // Follows a recorded list of branch choices; false if it is inconsistent.
  void replay(const std::vector<std::uint8_t>& choices, int& start) {
    start = 0;
    for (std::uint8_t dir : choices) {
      start = next_uncovered(start);
      place(start, idx_.neighbor(start, dir), dir);
    }
  }

  template <class Leaf>
  void run(int start, Leaf&& leaf) {
    int i = next_uncovered(start);
    if (i == idx_.size()) {
      leaf(code_);
      return;
    }
    for (int dir : {0, 2, 4}) {
      int j = idx_.neighbor(i, dir);
      if (j < 0 || covered_[std::size_t(j)]) continue;
      place(i, j, dir);
      run(i + 1, leaf);
      unplace(i, j);
    }
  }

  void prefixes(int start, int depth, std::vector<std::uint8_t>& cur, std::vector<std::vector<std::uint8_t>>& out) {
    int i = next_uncovered(start);
    if (depth == 0 || i == idx_.size()) {
      out.push_back(cur);
      return;
    }
    for (int dir : {0, 2, 4}) {
      int j = idx_.neighbor(i, dir);
      if (j < 0 || covered_[std::size_t(j)]) continue;
      place(i, j, dir);
      cur.push_back(std::uint8_t(dir));
      prefixes(i + 1, depth - 1, cur, out);
      cur.pop_back();
      unplace(i, j);
    }
  }

 private:
  int next_uncovered(int i) const {
    while (i < idx_.size() && covered_[std::size_t(i)]) ++i;
    return i;
  }
  void place(int i, int j, int dir) {
    covered_[std::size_t(i)] = covered_[std::size_t(j)] = 1;
    int bit = 2 * i;
    code_[std::size_t(bit / 64)] |= std::uint64_t(dir / 2 + 1) << (62 - bit % 64);
  }
  void unplace(int i, int j) {
    covered_[std::size_t(i)] = covered_[std::size_t(j)] = 0;
    int bit = 2 * i;
    code_[std::size_t(bit / 64)] &= ~(std::uint64_t(3) << (62 - bit % 64));
  }

  const CubeIndex& idx_;
  std::vector<char> covered_;
  std::vector<std::uint64_t> code_;
};

std::vector<std::vector<std::uint8_t>> split_work(const CubeIndex& idx, int threads, int max_depth) {
  std::vector<std::vector<std::uint8_t>> out;
  for (int depth = 1;; ++depth) {
    out.clear();
    Search s(idx);
    std::vector<std::uint8_t> cur;
    s.prefixes(0, depth, cur, out);
    if (out.size() >= std::size_t(64 * threads) || depth >= max_depth) return out;
  }
}

template <class PerPrefix>
void parallel_prefixes(const std::vector<std::vector<std::uint8_t>>& work, int threads, PerPrefix&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < work.size();) fn(k);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace

std::uint64_t count_tilings(const TwoStoryRegion& r, const EnumerationOptions& opt) {
  CubeIndex idx(r);
  if (idx.size() % 2 != 0) return 0;
  int threads = opt.threads > 0 ? opt.threads : default_thread_count();
  auto work = split_work(idx, threads, opt.split_depth);
  std::vector<std::uint64_t> counts(work.size(), 0);
  parallel_prefixes(work, threads, [&](std::size_t k) {
    Search s(idx);
    int start = 0;
    s.replay(work[k], start);
    std::uint64_t n = 0;
    s.run(start, [&](const std::vector<std::uint64_t>&) { ++n; });
    counts[k] = n;
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

void enumerate_tilings(const TwoStoryRegion& r, const std::function<bool(const Tiling&)>& emit) {
  CubeIndex idx(r);
  if (idx.size() % 2 != 0) return;
  Search s(idx);
  std::vector<int> partner(std::size_t(idx.size()), -1);
  bool stop = false;
  struct Stop {};
  try {
    s.run(0, [&](const std::vector<std::uint64_t>& code) {
      if (stop) return;
      idx.decode(code, partner);
      if (!emit(idx.tiling_of(partner))) throw Stop{};
    });
  } catch (const Stop&) {
  }
}

std::vector<Tiling> all_tilings(const TwoStoryRegion& r, std::size_t limit) {
  std::vector<Tiling> out;
  if (limit == 0) return out;
  enumerate_tilings(r, [&](const Tiling& t) {
    out.push_back(t);
    return out.size() < limit;
  });
  return out;
}

TilingSet enumerate_tiling_set(const TwoStoryRegion& r, const EnumerationOptions& opt) {
  CubeIndex idx(r);
  if (idx.size() % 2 != 0) return TilingSet(r, {});
  int threads = opt.threads > 0 ? opt.threads : default_thread_count();
  auto work = split_work(idx, threads, opt.split_depth);
  std::vector<std::vector<std::uint64_t>> chunks(work.size());
  parallel_prefixes(work, threads, [&](std::size_t k) {
    Search s(idx);
    int start = 0;
    s.replay(work[k], start);
    auto& out = chunks[k];
    s.run(start, [&](const std::vector<std::uint64_t>& code) { out.insert(out.end(), code.begin(), code.end()); });
  });
  std::size_t total = 0;
  for (auto& c : chunks) total += c.size();
  std::vector<std::uint64_t> data;
  data.reserve(total);
  for (auto& c : chunks) {
    data.insert(data.end(), c.begin(), c.end());
    std::vector<std::uint64_t>().swap(c);
  }
  return TilingSet(r, std::move(data));
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotADimer: return "NotADimer";
    case ViolationKind::OutsideRegion: return "OutsideRegion";
    case ViolationKind::OverlapAt: return "OverlapAt";
    case ViolationKind::UncoveredCube: return "UncoveredCube";
  }
  return "?";
}

std::string Violation::message() const {
  return std::string(violation_name(kind)) + " (" + std::to_string(cube.x) + "," + std::to_string(cube.y) + "," +
         std::to_string(cube.z) + ")";
}

std::optional<Violation> validate(const Tiling& t, const TwoStoryRegion& r) {
  CubeIndex idx(r);
  std::vector<char> used(std::size_t(idx.size()), 0);
  for (const auto& d : t.dimers()) {
    if (!d.is_valid()) return Violation{ViolationKind::NotADimer, d.a};
    for (const auto& c : {d.a, d.b}) {
      int i = idx.index_of(c);
      if (i < 0) return Violation{ViolationKind::OutsideRegion, c};
      if (used[std::size_t(i)]) return Violation{ViolationKind::OverlapAt, c};
      used[std::size_t(i)] = 1;
    }
  }
  for (int i = 0; i < idx.size(); ++i)
    if (!used[std::size_t(i)]) return Violation{ViolationKind::UncoveredCube, idx.cube(i)};
  return std::nullopt;
}

Tiling embed_in_box(const Tiling& t, const TwoStoryRegion& r, int width, int height, int dx, int dy) {
  if (((dx + dy) & 1) != 0) throw Error(ErrorCode::DoesNotFit, "offset must have even coordinate sum");
  if (!r.is_duplex()) throw Error(ErrorCode::DoesNotFit, "only duplex regions embed with z-dimer filling");
  BoundingBox b = r.bounds();
  if (b.min_x + dx < 0 || b.min_y + dy < 0 || b.max_x + dx >= width || b.max_y + dy >= height)
    throw Error(ErrorCode::DoesNotFit, "region does not fit in the box at this offset");
  std::vector<Dimer> ds = t.translated(dx, dy).dimers();
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (!r.top().contains({x - dx, y - dy})) ds.push_back(Dimer::make({x, y, 0}, {x, y, 1}));
  return Tiling(std::move(ds));
}

Tiling all_jewels_tiling(const TwoStoryRegion& r) {
  if (!r.is_duplex()) throw Error(ErrorCode::DoesNotFit, "all-jewels tiling needs a duplex region");
  std::vector<Dimer> ds;
  for (Cell c : r.top().cells()) ds.push_back(Dimer::make({c.x, c.y, 0}, {c.x, c.y, 1}));
  return Tiling(std::move(ds));
}

}  // namespace domino3d
