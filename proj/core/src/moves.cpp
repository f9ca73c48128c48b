#include "domino3d/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

namespace domino3d {

namespace {

// Edges of the 2x2x2 block graph, cubes numbered dx + 2dy + 4dz.
struct BlockTable {
  std::array<std::array<int, 2>, 12> edges{};
  std::array<int, 4096> other{};  // edge mask -> other trit configuration, 0 if none
  std::array<int, 64> edge_id{};  // 8*a + b -> edge index

  BlockTable() {
    int n = 0;
    edge_id.fill(-1);
    for (int a = 0; a < 8; ++a)
      for (int bit : {1, 2, 4})
        if (!(a & bit)) {
          edges[std::size_t(n)] = {a, a | bit};
          edge_id[std::size_t(8 * a + (a | bit))] = edge_id[std::size_t(8 * (a | bit) + a)] = n;
          ++n;
        }
    other.fill(0);
    for (int h1 = 0; h1 < 8; ++h1)
      for (int h2 = h1 + 1; h2 < 8; ++h2) {
        std::vector<int> found;
        for (int mask = 0; mask < 4096; ++mask) {
          if (__builtin_popcount(unsigned(mask)) != 3) continue;
          int covered = 0, axes = 0;
          bool ok = true;
          for (int e = 0; e < 12 && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            int a = edges[std::size_t(e)][0], b = edges[std::size_t(e)][1];
            int m = (1 << a) | (1 << b);
            if (covered & m) ok = false;
            covered |= m;
            axes |= a ^ b;
          }
          int holes = (1 << h1) | (1 << h2);
          if (ok && covered == (255 ^ holes) && axes == 7) found.push_back(mask);
        }
        if (found.size() == 2) {
          other[std::size_t(found[0])] = found[1];
          other[std::size_t(found[1])] = found[0];
        }
      }
  }
};

const BlockTable& block_table() {
  static const BlockTable t;
  return t;
}

}  // namespace

MoveScanner::MoveScanner(const CubeIndex& idx) : idx_(idx) {
  static const int planes[3][2] = {{0, 2}, {0, 4}, {2, 4}};
  for (int p = 0; p < idx.size(); ++p) {
    for (const auto& pl : planes) {
      int q = idx.neighbor(p, pl[0]);
      int r = idx.neighbor(p, pl[1]);
      if (q < 0 || r < 0) continue;
      int s = idx.neighbor(q, pl[1]);
      if (s < 0) continue;
      squares_.push_back({p, q, r, s});
    }
    if (idx.cube(p).z != 0) continue;
    std::array<int, 8> b{};
    bool ok = true;
    for (int k = 0; k < 8 && ok; ++k) {
      int c = p;
      if (k & 1) c = c < 0 ? -1 : idx.neighbor(c, 0);
      if (k & 2) c = c < 0 ? -1 : idx.neighbor(c, 2);
      if (k & 4) c = c < 0 ? -1 : idx.neighbor(c, 4);
      ok = c >= 0;
      b[std::size_t(k)] = c;
    }
    if (ok) blocks_.push_back(b);
  }
}

void MoveScanner::flips(std::span<const int> partner, std::vector<IndexFlip>& out) const {
  out.clear();
  for (const auto& s : squares_) {
    if (partner[std::size_t(s[0])] == s[1] && partner[std::size_t(s[2])] == s[3])
      out.push_back({s[0], s[1], s[2], s[3]});
    else if (partner[std::size_t(s[0])] == s[2] && partner[std::size_t(s[1])] == s[3])
      out.push_back({s[0], s[2], s[1], s[3]});
  }
}

void MoveScanner::trits(std::span<const int> partner, std::vector<IndexTrit>& out) const {
  out.clear();
  const BlockTable& tab = block_table();
  for (const auto& b : blocks_) {
    int mask = 0, inside = 0;
    for (int k = 0; k < 8; ++k) {
      int pk = partner[std::size_t(b[std::size_t(k)])];
      for (int bit : {1, 2, 4}) {
        int l = k ^ bit;
        if (l > k && b[std::size_t(l)] == pk) {
          mask |= 1 << tab.edge_id[std::size_t(8 * k + l)];
          inside += 2;
        }
      }
    }
    if (inside != 6) continue;
    int other = tab.other[std::size_t(mask)];
    if (other == 0) continue;
    IndexTrit t{};
    std::array<Dimer, 3> before, after;
    int nb = 0, na = 0;
    for (int e = 0; e < 12; ++e) {
      const auto& ed = tab.edges[std::size_t(e)];
      int u = b[std::size_t(ed[0])], v = b[std::size_t(ed[1])];
      if (mask >> e & 1) {
        t.before[std::size_t(nb)] = {u, v};
        before[std::size_t(nb++)] = Dimer::make(idx_.cube(u), idx_.cube(v));
      }
      if (other >> e & 1) {
        t.after[std::size_t(na)] = {u, v};
        after[std::size_t(na++)] = Dimer::make(idx_.cube(u), idx_.cube(v));
      }
    }
    t.sign = trit_sign(before, after);
    out.push_back(t);
  }
}

void MoveScanner::apply(std::span<int> partner, const IndexFlip& f) {
  partner[std::size_t(f.a)] = f.c;
  partner[std::size_t(f.c)] = f.a;
  partner[std::size_t(f.b)] = f.d;
  partner[std::size_t(f.d)] = f.b;
}

void MoveScanner::apply(std::span<int> partner, const IndexTrit& t) {
  for (const auto& p : t.after) {
    partner[std::size_t(p[0])] = p[1];
    partner[std::size_t(p[1])] = p[0];
  }
}

int trit_sign(const std::array<Dimer, 3>& before, const std::array<Dimer, 3>& after) {
  std::vector<Segment> loop;
  Cell jewel{};
  int min_x = INT32_MAX, min_y = INT32_MAX;
  auto add = [&](const std::array<Dimer, 3>& ds, bool forward) {
    for (const auto& d : ds) {
      min_x = std::min(min_x, d.a.x);
      min_y = std::min(min_y, d.a.y);
      if (d.axis() == Axis::Z) {
        if (!forward) jewel = d.a.cell();
        continue;
      }
      DrawingEdge e = oriented_edge(d);
      Point p{2 * e.from.x, 2 * e.from.y}, q{2 * e.to.x, 2 * e.to.y};
      loop.push_back(forward ? Segment{p, q} : Segment{q, p});
    }
  };
  add(after, true);
  add(before, false);
  int dk = winding_number(loop, Point{2 * min_x + 1, 2 * min_y + 1});
  return cell_color(jewel) == Color::Black ? dk : -dk;
}

std::vector<FlipSite> flips(const Tiling& t, const TwoStoryRegion& r) {
  CubeIndex idx(r);
  MoveScanner scan(idx);
  auto partner = idx.partners_of(t);
  std::vector<IndexFlip> fs;
  scan.flips(partner, fs);
  std::vector<FlipSite> out;
  for (const auto& f : fs) {
    FlipSite s;
    s.cubes = {idx.cube(f.a), idx.cube(f.b), idx.cube(f.c), idx.cube(f.d)};
    s.before = {Dimer::make(s.cubes[0], s.cubes[1]), Dimer::make(s.cubes[2], s.cubes[3])};
    s.after = {Dimer::make(s.cubes[0], s.cubes[2]), Dimer::make(s.cubes[1], s.cubes[3])};
    out.push_back(s);
  }
  return out;
}

namespace {

template <std::size_t N>
Tiling replace_dimers(const Tiling& t, const std::array<Dimer, N>& before, const std::array<Dimer, N>& after) {
  std::vector<Dimer> ds = t.dimers();
  for (const auto& d : before) {
    auto it = std::lower_bound(ds.begin(), ds.end(), d);
    if (it == ds.end() || *it != d) throw Error(ErrorCode::InvalidSite, "site does not match the tiling");
    ds.erase(it);
  }
  ds.insert(ds.end(), after.begin(), after.end());
  return Tiling(std::move(ds));
}

}  // namespace

Tiling apply_flip(const Tiling& t, const FlipSite& site) { return replace_dimers(t, site.before, site.after); }

std::vector<TritSite> trits(const Tiling& t, const TwoStoryRegion& r) {
  CubeIndex idx(r);
  MoveScanner scan(idx);
  auto partner = idx.partners_of(t);
  std::vector<IndexTrit> ts;
  scan.trits(partner, ts);
  std::vector<TritSite> out;
  for (const auto& tr : ts) {
    TritSite s;
    for (int k = 0; k < 3; ++k) {
      s.before[std::size_t(k)] = Dimer::make(idx.cube(tr.before[std::size_t(k)][0]), idx.cube(tr.before[std::size_t(k)][1]));
      s.after[std::size_t(k)] = Dimer::make(idx.cube(tr.after[std::size_t(k)][0]), idx.cube(tr.after[std::size_t(k)][1]));
    }
    CubeCoord m = s.before[0].a;
    for (const auto& d : s.before) m = {std::min(m.x, d.a.x), std::min(m.y, d.a.y), 0};
    for (const auto& d : s.after) m = {std::min(m.x, d.a.x), std::min(m.y, d.a.y), 0};
    s.corner = m;
    s.sign = tr.sign;
    out.push_back(s);
  }
  return out;
}

Tiling apply_trit(const Tiling& t, const TritSite& site) { return replace_dimers(t, site.before, site.after); }

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smallest index stays the root
  }
};

template <class Fn>
void parallel_ranges(std::size_t n, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  std::size_t chunk = (n + std::size_t(threads) - 1) / std::size_t(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = std::size_t(t) * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

ComponentTable flip_components(const TilingSet& set, const GhostConnection& g, const ComponentOptions& opt) {
  const CubeIndex& idx = set.index();
  int threads = opt.threads > 0 ? opt.threads : default_thread_count();
  std::size_t n = set.size();
  MoveScanner scan(idx);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edges(static_cast<std::size_t>(threads));
  parallel_ranges(n, threads, [&](int t, std::size_t lo, std::size_t hi) {
    std::vector<int> partner(std::size_t(idx.size()));
    std::vector<std::uint64_t> code(std::size_t(set.words()));
    std::vector<IndexFlip> fs;
    for (std::size_t i = lo; i < hi; ++i) {
      set.partners(i, partner);
      scan.flips(partner, fs);
      for (const auto& f : fs) {
        auto p2 = partner;
        MoveScanner::apply(p2, f);
        idx.encode(p2, code);
        auto j = set.find(code);
        if (!j) throw Error(ErrorCode::InvalidSite, "flip leads outside the tiling set");
        if (*j > i) edges[std::size_t(t)].push_back({std::uint32_t(i), std::uint32_t(*j)});
      }
    }
  });
  DisjointSets dsu(n);
  for (auto& list : edges) {
    for (auto [a, b] : list) dsu.unite(a, b);
    std::vector<std::pair<std::uint32_t, std::uint32_t>>().swap(list);
  }
  ComponentTable table;
  table.total = n;
  std::map<std::uint32_t, std::size_t> root_size;
  for (std::size_t i = 0; i < n; ++i) ++root_size[dsu.find(std::uint32_t(i))];
  std::vector<std::pair<std::size_t, std::uint32_t>> order;
  for (auto [root, size] : root_size) order.push_back({size, root});
  std::sort(order.begin(), order.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  std::map<std::uint32_t, int> id_of_root;
  InvariantCalculator inv(idx, g);
  std::vector<int> partner(std::size_t(idx.size()));
  for (std::size_t k = 0; k < order.size(); ++k) {
    ComponentInfo c;
    c.id = int(k);
    c.size = order[k].first;
    c.representative_index = order[k].second;
    set.partners(c.representative_index, partner);
    c.representative = idx.tiling_of(partner);
    c.invariant = inv(partner);
    c.twist = c.invariant.derivative_at_one();
    id_of_root[order[k].second] = int(k);
    table.components.push_back(std::move(c));
  }
  table.component_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) table.component_of[i] = id_of_root[dsu.find(std::uint32_t(i))];
  if (!opt.trit_edges) return table;

  std::vector<std::map<std::tuple<int, int, int>, std::size_t>> found(static_cast<std::size_t>(threads));
  std::vector<std::size_t> bad(std::size_t(threads), 0);
  parallel_ranges(n, threads, [&](int t, std::size_t lo, std::size_t hi) {
    std::vector<int> partner(std::size_t(idx.size()));
    std::vector<std::uint64_t> code(std::size_t(set.words()));
    std::vector<IndexTrit> ts;
    for (std::size_t i = lo; i < hi; ++i) {
      set.partners(i, partner);
      scan.trits(partner, ts);
      for (const auto& tr : ts) {
        auto p2 = partner;
        MoveScanner::apply(p2, tr);
        idx.encode(p2, code);
        auto j = set.find(code);
        if (!j) throw Error(ErrorCode::InvalidSite, "trit leads outside the tiling set");
        int a = table.component_of[i], b = table.component_of[*j];
        if (a == b) {
          ++bad[std::size_t(t)];
          continue;
        }
        int s = tr.sign;
        if (a > b) {
          std::swap(a, b);
          s = -s;
        }
        ++found[std::size_t(t)][{a, b, s}];
      }
    }
  });
  std::map<std::tuple<int, int, int>, std::size_t> all;
  for (auto& m : found)
    for (auto& [k, v] : m) all[k] += v;
  for (auto& [k, v] : all) {
    auto [a, b, s] = k;
    table.trit_edges.push_back({a, b, s, v / 2});
  }
  for (auto b : bad) table.inconsistent_trit_edges += b;
  std::map<std::pair<int, int>, int> signs;
  for (const auto& e : table.trit_edges)
    if (!signs.emplace(std::pair{e.a, e.b}, e.sign).second) ++table.inconsistent_trit_edges;
  return table;
}

ComponentTable flip_components(const TwoStoryRegion& r, const ComponentOptions& opt) {
  EnumerationOptions eo;
  eo.threads = opt.threads;
  TilingSet set = enumerate_tiling_set(r, eo);
  return flip_components(set, canonical_ghosts(r), opt);
}

TritGraph component_trit_graph(const ComponentTable& table) {
  TritGraph g;
  g.vertices = int(table.components.size());
  g.edges = table.trit_edges;
  for (auto& e : g.edges) e.multiplicity = 0;
  std::vector<std::vector<int>> adj(std::size_t(g.vertices));
  for (const auto& e : g.edges) {
    adj[std::size_t(e.a)].push_back(e.b);
    adj[std::size_t(e.b)].push_back(e.a);
  }
  if (g.vertices == 0) return g;
  std::vector<char> seen(std::size_t(g.vertices), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[std::size_t(v)])
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        ++count;
        q.push(w);
      }
  }
  g.connected = count == g.vertices;
  return g;
}

std::string trit_graph_dot(const ComponentTable& table) {
  std::ostringstream out;
  out << "digraph trits {\n  rankdir=LR;\n  node [shape=circle];\n";
  std::map<std::int64_t, std::vector<int>> by_twist;
  for (const auto& c : table.components) by_twist[c.twist].push_back(c.id);
  for (const auto& [tw, ids] : by_twist) {
    out << "  { rank=same;";
    for (int id : ids) out << " c" << id << ";";
    out << " }\n";
  }
  for (const auto& c : table.components)
    out << "  c" << c.id << " [label=\"" << c.id << "\\n" << c.size << "\\n" << c.invariant.to_string()
        << "\\nTw=" << c.twist << "\"];\n";
  for (const auto& e : table.trit_edges) {
    int from = e.sign > 0 ? e.a : e.b, to = e.sign > 0 ? e.b : e.a;
    out << "  c" << from << " -> c" << to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace domino3d
