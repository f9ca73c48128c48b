#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "domino3d/error.hpp"
#include "domino3d/io.hpp"
#include "domino3d/moves.hpp"
#include "domino3d/realize.hpp"
#include "domino3d/render.hpp"
#include "domino3d/verify.hpp"
#include "json.hpp"

using namespace domino3d;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string region_path;
  std::string output;
  std::string format = "text";
  std::string tiling_path;
  std::string sock_path;
  std::string ghosts_path;
  bool random_ghosts = false;
  std::uint64_t seed = 1;
  int threads = 0;
  std::size_t limit = 0;
  std::size_t max_tilings = 0;
  bool all = false;
  bool no_representatives = false;
  bool no_trace = false;
  bool random_sock = false;
  RandomSockOptions sock;
  std::vector<std::string> regions;
  std::string corpus;
  std::vector<std::string> suites;
  int socks = 200;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) std::cout << text;
  else write_text_file(cfg.output, text);
}

void emit(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

TwoStoryRegion region_of(const RunConfig& cfg) {
  if (cfg.region_path.empty()) throw Error(ErrorCode::ParseError, "a region file is required");
  return load_region(cfg.region_path);
}

GhostConnection ghosts_of(const RunConfig& cfg, const TwoStoryRegion& r) {
  if (!cfg.ghosts_path.empty()) return ghosts_from_json(read_text_file(cfg.ghosts_path), r);
  if (cfg.random_ghosts) {
    std::mt19937_64 rng(cfg.seed);
    return random_ghosts(r, rng);
  }
  return canonical_ghosts(r);
}

Tiling tiling_of(const RunConfig& cfg, const TwoStoryRegion& r) {
  if (cfg.tiling_path.empty()) {
    auto first = all_tilings(r, 1);
    if (first.empty()) throw Error(ErrorCode::DoesNotFit, "region has no tilings");
    return first.front();
  }
  Tiling t = tiling_from_json(read_text_file(cfg.tiling_path));
  if (auto v = validate(t, r)) throw Error(ErrorCode::InvalidSite, v->message());
  return t;
}

void guard_size(const RunConfig& cfg, const TwoStoryRegion& r) {
  if (cfg.max_tilings == 0) return;
  EnumerationOptions eo;
  eo.threads = cfg.threads;
  auto n = count_tilings(r, eo);
  if (n > cfg.max_tilings)
    throw Error(ErrorCode::DoesNotFit, std::to_string(n) + " tilings exceed --max-tilings " + std::to_string(cfg.max_tilings));
}

json header(const RunConfig& cfg, const char* command) {
  json j{{"command", command}, {"seed", cfg.seed}};
  if (!cfg.region_path.empty()) j["region"] = cfg.region_path;
  return j;
}

int run_count(const RunConfig& cfg) {
  auto r = region_of(cfg);
  EnumerationOptions eo;
  eo.threads = cfg.threads;
  auto n = count_tilings(r, eo);
  if (cfg.format == "json") {
    json j = header(cfg, "count");
    j["count"] = n;
    emit(cfg, j);
  } else {
    emit(cfg, std::to_string(n) + "\n");
  }
  return 0;
}

int run_enumerate(const RunConfig& cfg) {
  auto r = region_of(cfg);
  json j = header(cfg, "enumerate");
  json tilings = json::array();
  enumerate_tilings(r, [&](const Tiling& t) {
    tilings.push_back(json::parse(tiling_to_json(t)));
    return cfg.limit == 0 || tilings.size() < cfg.limit;
  });
  j["count"] = tilings.size();
  j["tilings"] = std::move(tilings);
  emit(cfg, j);
  return 0;
}

int run_components(const RunConfig& cfg) {
  auto r = region_of(cfg);
  guard_size(cfg, r);
  EnumerationOptions eo;
  eo.threads = cfg.threads;
  ComponentOptions co;
  co.threads = cfg.threads;
  auto table = flip_components(enumerate_tiling_set(r, eo), ghosts_of(cfg, r), co);
  std::string seed = std::to_string(cfg.seed);
  if (cfg.format == "csv") {
    emit(cfg, "# seed " + seed + "\n" + components_to_csv(table));
  } else if (cfg.format == "dot") {
    emit(cfg, "// seed " + seed + "\n" + trit_graph_dot(table));
  } else {
    json j = header(cfg, "components");
    j.update(json::parse(components_to_json(table, !cfg.no_representatives)));
    emit(cfg, j);
  }
  return 0;
}

int run_invariant(const RunConfig& cfg) {
  auto r = region_of(cfg);
  auto g = ghosts_of(cfg, r);
  if (!cfg.all) {
    Tiling t = tiling_of(cfg, r);
    LaurentPoly p = invariant(t, r, g);
    if (cfg.format == "json") {
      json j = header(cfg, "invariant");
      j["invariant"] = json::parse(poly_to_json(p));
      j["invariant_text"] = p.to_string();
      j["twist"] = p.derivative_at_one();
      emit(cfg, j);
    } else {
      emit(cfg, p.to_string() + "\n");
    }
    return 0;
  }
  guard_size(cfg, r);
  std::map<std::string, std::pair<std::size_t, std::int64_t>> seen;
  enumerate_tilings(r, [&](const Tiling& t) {
    LaurentPoly p = invariant(t, r, g);
    auto& e = seen[p.to_string()];
    ++e.first;
    e.second = p.derivative_at_one();
    return true;
  });
  if (cfg.format == "json") {
    json j = header(cfg, "invariant");
    json rows = json::array();
    for (const auto& [p, e] : seen) rows.push_back({{"invariant_text", p}, {"tilings", e.first}, {"twist", e.second}});
    j["invariants"] = rows;
    emit(cfg, j);
  } else {
    std::string out;
    for (const auto& [p, e] : seen) out += std::to_string(e.first) + "\t" + p + "\t" + std::to_string(e.second) + "\n";
    emit(cfg, out);
  }
  return 0;
}

int run_render(const RunConfig& cfg) {
  std::string comment = "<!-- seed " + std::to_string(cfg.seed) + " -->\n";
  if (!cfg.sock_path.empty()) {
    emit(cfg, comment + render_sock_svg(sock_from_json(read_text_file(cfg.sock_path))));
    return 0;
  }
  auto r = region_of(cfg);
  emit(cfg, comment + render_tiling_svg(tiling_of(cfg, r), r, ghosts_of(cfg, r)));
  return 0;
}

int run_untangle(const RunConfig& cfg) {
  Sock s;
  if (cfg.random_sock || cfg.sock_path.empty()) {
    std::mt19937_64 rng(cfg.seed);
    s = random_sock(rng, cfg.sock);
  } else {
    s = sock_from_json(read_text_file(cfg.sock_path));
  }
  auto res = untangle(s);
  json j = header(cfg, "untangle");
  LaurentPoly p = sock_invariant(s);
  j["input"] = json::parse(sock_to_json(s));
  j["area"] = area(s);
  j["invariant_text"] = p.to_string();
  j["untangled"] = json::parse(sock_to_json(res.sock));
  json boxed = json::array();
  if (auto bj = boxed_jewels(res.sock))
    for (const auto& b : *bj) boxed.push_back({{"center", {b.center.x, b.center.y}}, {"degree", b.degree}, {"sign", b.sign}});
  j["boxed_jewels"] = boxed;
  json canon = json::array();
  for (auto [sign, degree] : canonical_untangled(res.sock)) canon.push_back({sign, degree});
  j["canonical"] = canon;
  j["trace_length"] = res.trace.size();
  if (!cfg.no_trace) j["trace"] = json::parse(trace_to_json(res.trace));
  emit(cfg, j);
  return 0;
}

int run_reduce(const RunConfig& cfg) {
  auto r = region_of(cfg);
  Tiling t = tiling_of(cfg, r);
  auto rr = replay_reduction(t, r);
  json j = header(cfg, "reduce");
  j["flips"] = rr.flips;
  j["trits"] = rr.trits;
  j["steps"] = rr.steps.size();
  j["reaches_all_jewels"] = rr.final_tiling == all_jewels_tiling(r);
  j["sock_trace_length"] = rr.sock_trace.size();
  if (!cfg.no_trace) j["sock_trace"] = json::parse(trace_to_json(rr.sock_trace));
  emit(cfg, j);
  return 0;
}

bool wants(const RunConfig& cfg, const std::string& suite) {
  return cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), suite) != cfg.suites.end();
}

int run_verify(const RunConfig& cfg) {
  std::vector<std::string> paths = cfg.regions;
  if (!cfg.corpus.empty()) {
    std::vector<std::string> found;
    for (const auto& e : fs::directory_iterator(cfg.corpus))
      if (e.path().extension() == ".region") found.push_back(e.path().string());
    std::sort(found.begin(), found.end());
    paths.insert(paths.end(), found.begin(), found.end());
  }
  json j = header(cfg, "verify");
  json rows = json::array();
  bool ok = true;
  auto record = [&](const std::string& where, const SuiteReport& rep) {
    ok = ok && rep.ok();
    rows.push_back({{"region", where}, {"suite", rep.name}, {"checked", rep.checked}, {"violations", rep.violations},
                    {"samples", rep.samples}});
    if (cfg.format != "json")
      std::cout << (rep.ok() ? "ok   " : "FAIL ") << rep.name << " " << where << " checked=" << rep.checked
                << " violations=" << rep.violations << "\n";
  };
  for (const auto& path : paths) {
    auto r = load_region(path);
    EnumerationOptions eo;
    eo.threads = cfg.threads;
    if (cfg.max_tilings && count_tilings(r, eo) > cfg.max_tilings) continue;
    if (wants(cfg, "flip") || wants(cfg, "trit")) {
      auto set = enumerate_tiling_set(r, eo);
      auto g = ghosts_of(cfg, r);
      if (wants(cfg, "flip")) record(path, check_flip_invariance(set, g));
      if (wants(cfg, "trit")) record(path, check_trit_deltas(set, g));
    }
    if (r.is_duplex() && wants(cfg, "soundness")) record(path, check_move_soundness(r));
    if (r.is_duplex() && wants(cfg, "reduction")) record(path, check_reduction(r));
  }
  if (wants(cfg, "untangle")) {
    RandomSuiteOptions ro;
    ro.socks = cfg.socks;
    ro.seed = cfg.seed;
    ro.sock = cfg.sock;
    record("random", check_untangle_random(ro));
  }
  if (cfg.format == "json") {
    j["results"] = rows;
    j["ok"] = ok;
    emit(cfg, j);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino brick tilings of two-story regions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed, recorded in outputs");
  app.add_option("--threads", cfg.threads, "Worker threads (DOMINO3D_THREADS caps the default)")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", cfg.output, "Write to this file instead of stdout");

  auto add_region = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("region", cfg.region_path, "Region file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_ghosts = [&](CLI::App* sub) {
    sub->add_option("--ghosts", cfg.ghosts_path, "Ghost connection JSON")->check(CLI::ExistingFile);
    sub->add_flag("--random-ghosts", cfg.random_ghosts, "Use a random ghost connection drawn from --seed");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_sock_options = [&](CLI::App* sub) {
    sub->add_option("--jewels", cfg.sock.jewels, "Random sock: boxed jewels")->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", cfg.sock.max_degree, "Random sock: maximal degree")->check(CLI::PositiveNumber);
    sub->add_option("--moves", cfg.sock.moves, "Random sock: scrambling moves")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Count tilings");
  add_region(count);
  add_format(count, {"text", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "List tilings as JSON");
  add_region(enumerate);
  enumerate->add_option("--limit", cfg.limit, "Maximal number of tilings")->check(CLI::PositiveNumber);

  auto* components = app.add_subcommand("components", "Flip connected components with invariants");
  add_region(components);
  add_ghosts(components);
  components->add_option("--format", cfg.format, "json, csv or dot")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  components->add_flag("--json", [&](std::int64_t) { cfg.format = "json"; }, "Same as --format json");
  components->add_flag("--dot", [&](std::int64_t) { cfg.format = "dot"; }, "Same as --format dot");
  components->add_flag("--no-representatives", cfg.no_representatives, "Omit representative tilings");
  components->add_option("--max-tilings", cfg.max_tilings, "Refuse regions with more tilings")->check(CLI::PositiveNumber);

  auto* inv = app.add_subcommand("invariant", "Invariant P_t of a tiling");
  add_region(inv);
  add_ghosts(inv);
  add_format(inv, {"text", "json"});
  inv->add_option("--tiling", cfg.tiling_path, "Tiling JSON (default: first tiling)")->check(CLI::ExistingFile);
  inv->add_flag("--all", cfg.all, "Tabulate invariants over all tilings");
  inv->add_option("--max-tilings", cfg.max_tilings, "Refuse regions with more tilings")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "SVG of a tiling or a sock");
  add_region(render, false);
  add_ghosts(render);
  render->add_option("--tiling", cfg.tiling_path, "Tiling JSON (default: first tiling)")->check(CLI::ExistingFile);
  render->add_option("--sock", cfg.sock_path, "Sock JSON")->check(CLI::ExistingFile);
  render->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"svg"}));

  auto* untangle_cmd = app.add_subcommand("untangle", "Untangle a sock into boxed jewels");
  untangle_cmd->add_option("sock", cfg.sock_path, "Sock JSON")->check(CLI::ExistingFile);
  untangle_cmd->add_flag("--random", cfg.random_sock, "Untangle a random sock drawn from --seed");
  untangle_cmd->add_flag("--no-trace", cfg.no_trace, "Omit the move trace");
  add_sock_options(untangle_cmd);

  auto* reduce = app.add_subcommand("reduce", "Reduce a duplex tiling to all jewels by flips and trits");
  add_region(reduce);
  reduce->add_option("--tiling", cfg.tiling_path, "Tiling JSON (default: first tiling)")->check(CLI::ExistingFile);
  reduce->add_flag("--no-trace", cfg.no_trace, "Omit the sock trace");

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("regions", cfg.regions, "Region files")->check(CLI::ExistingFile);
  verify->add_option("--corpus", cfg.corpus, "Directory of .region files")->check(CLI::ExistingDirectory);
  verify->add_option("--suite", cfg.suites, "flip, trit, soundness, reduction, untangle")
      ->check(CLI::IsMember({"flip", "trit", "soundness", "reduction", "untangle"}));
  verify->add_option("--max-tilings", cfg.max_tilings, "Skip regions with more tilings")->check(CLI::PositiveNumber);
  verify->add_option("--socks", cfg.socks, "Random socks for the untangle suite")->check(CLI::PositiveNumber);
  add_ghosts(verify);
  add_sock_options(verify);
  add_format(verify, {"text", "json"});

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return run_count(cfg);
    if (*enumerate) return run_enumerate(cfg);
    if (*components) return run_components(cfg);
    if (*inv) return run_invariant(cfg);
    if (*render) return run_render(cfg);
    if (*untangle_cmd) return run_untangle(cfg);
    if (*reduce) return run_reduce(cfg);
    if (*verify) return run_verify(cfg);
  } catch (const Error& e) {
    std::cerr << json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
