#include "domino3d/io.hpp"

#include <fstream>
#include <sstream>

#include "domino3d/error.hpp"
#include "json.hpp"

namespace domino3d {

using nlohmann::json;

namespace {

json tiling_json(const Tiling& t) {
  json dimers = json::array();
  for (const Dimer& d : t.dimers()) dimers.push_back({{d.a.x, d.a.y, d.a.z}, {d.b.x, d.b.y, d.b.z}});
  return {{"dimers", dimers}};
}

json poly_json(const LaurentPoly& p) {
  json out = json::array();
  for (auto [e, c] : p.terms_descending()) out.push_back({e, c});
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::string tiling_to_json(const Tiling& t) { return tiling_json(t).dump(); }

Tiling tiling_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    std::vector<Dimer> dimers;
    for (const auto& d : j.at("dimers")) {
      auto a = d.at(0), b = d.at(1);
      dimers.push_back(Dimer::make({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()},
                                   {b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()}));
    }
    return Tiling(std::move(dimers));
  });
}

std::string poly_to_json(const LaurentPoly& p) { return poly_json(p).dump(); }

LaurentPoly poly_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    LaurentPoly p;
    for (const auto& t : j) p.add_term(t.at(0).get<int>(), t.at(1).get<LaurentPoly::Coeff>());
    return p;
  });
}

std::string sock_to_json(const Sock& s) {
  json cycles = json::array();
  for (const auto& c : s.cycles()) {
    json cyc = json::array();
    for (Vertex v : c) cyc.push_back({v.x, v.y});
    cycles.push_back(cyc);
  }
  return json{{"cycles", cycles}}.dump();
}

Sock sock_from_json(const std::string& text, std::optional<FloorPlan> domain) {
  json j = parse(text);
  auto cycles = guarded([&] {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : j.at("cycles")) {
      std::vector<Vertex> cyc;
      for (const auto& v : c) cyc.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
      out.push_back(std::move(cyc));
    }
    return out;
  });
  return Sock(cycles, std::move(domain));
}

std::string trace_to_json(const std::vector<SockMove>& trace) {
  json out = json::array();
  for (const SockMove& m : trace)
    out.push_back({{"kind", move_kind_name(m.kind)}, {"anchor", {m.anchor.x, m.anchor.y}}, {"orientation", m.orientation}, {"sign", m.sign}});
  return out.dump();
}

std::vector<SockMove> trace_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    std::vector<SockMove> out;
    for (const auto& m : j) {
      auto kind = parse_move_kind(m.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::ParseError, "unknown move kind " + m.at("kind").get<std::string>());
      out.push_back({*kind, {m.at("anchor").at(0).get<int>(), m.at("anchor").at(1).get<int>()}, m.at("orientation").get<int>(),
                     m.value("sign", 0)});
    }
    return out;
  });
}

std::string components_to_json(const ComponentTable& table, bool with_representatives) {
  json comps = json::array();
  for (const auto& c : table.components) {
    json e = {{"id", c.id}, {"size", c.size}, {"invariant", poly_json(c.invariant)}, {"invariant_text", c.invariant.to_string()}, {"twist", c.twist}};
    if (with_representatives) e["representative"] = tiling_json(c.representative);
    comps.push_back(e);
  }
  json edges = json::array();
  for (const auto& e : table.trit_edges) edges.push_back({e.a, e.b, e.sign});
  return json{{"total", table.total}, {"components", comps}, {"trit_edges", edges}, {"inconsistent_trit_edges", table.inconsistent_trit_edges}}.dump(2);
}

std::string components_to_csv(const ComponentTable& table) {
  std::string out = "component,size,P_t(q),Tw(t)\n";
  for (const auto& c : table.components)
    out += std::to_string(c.id) + "," + std::to_string(c.size) + ",\"" + c.invariant.to_string() + "\"," + std::to_string(c.twist) + "\n";
  return out;
}

}  // namespace domino3d

namespace domino3d {

std::string ghosts_to_json(const GhostConnection& g) {
  json routes = json::array();
  for (const auto& route : g.routes) {
    json path = json::array();
    for (Cell c : route.path) path.push_back({c.x, c.y});
    routes.push_back(path);
  }
  return json{{"routes", routes}}.dump();
}

GhostConnection ghosts_from_json(const std::string& text, const TwoStoryRegion& r) {
  json j = parse(text);
  auto hole_at = [&](Cell c) {
    for (const Hole& h : r.holes())
      if (h.cell == c) return h;
    throw Error(ErrorCode::InconsistentGhosts,
                "ghost endpoint (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is not a hole");
  };
  GhostConnection g = guarded([&] {
    GhostConnection out;
    for (const auto& path : j.at("routes")) {
      GhostRoute route;
      for (const auto& c : path) route.path.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
      if (route.path.empty()) throw Error(ErrorCode::InconsistentGhosts, "empty ghost route");
      route.from = hole_at(route.path.front());
      route.to = hole_at(route.path.back());
      out.routes.push_back(std::move(route));
    }
    return out;
  });
  check_ghosts(r, g);
  return g;
}

}  // namespace domino3d
