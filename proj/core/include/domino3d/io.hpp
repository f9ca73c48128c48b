#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domino3d/moves.hpp"
#include "domino3d/polynomial.hpp"
#include "domino3d/socks.hpp"
#include "domino3d/tiling.hpp"

namespace domino3d {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// {"dimers": [[[x,y,z],[x,y,z]], ...]}
std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);

// [[exp, coeff], ...], exponents descending.
std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& text);

// {"cycles": [[[x,y], ...], ...]}
std::string sock_to_json(const Sock& s);
Sock sock_from_json(const std::string& text, std::optional<FloorPlan> domain = std::nullopt);

// [{"kind", "anchor": [x,y], "orientation", "sign"}, ...]
std::string trace_to_json(const std::vector<SockMove>& trace);
std::vector<SockMove> trace_from_json(const std::string& text);

// {"routes": [[[x,y], ...], ...]}, each path from a sink to a source.
std::string ghosts_to_json(const GhostConnection& g);
// Endpoints are resolved against the region's holes; the result is checked.
GhostConnection ghosts_from_json(const std::string& text, const TwoStoryRegion& r);

// {"total", "components": [{"id","size","invariant","twist","representative"}], "trit_edges": [[a,b,sign],...]}
std::string components_to_json(const ComponentTable& table, bool with_representatives = true);
// component,size,P_t(q),Tw(t)
std::string components_to_csv(const ComponentTable& table);

}  // namespace domino3d
