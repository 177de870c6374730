// Command-line front end: load instance documents, run the fixed-point
// engine and the oracles, generate instances. Reports are JSON on standard
// output; diagnostics go to standard error. Exit codes: 0 success, 1
// precondition violation / failed verdict / diverging computation, 2 I/O,
// parse or validation failure.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetfix/generators.hpp"
#include "posetfix/instance_io.hpp"
#include "posetfix/oracle.hpp"

using namespace posetfix;
using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::precondition_violated:
    case Errc::cycle_detected:
    case Errc::no_supremum:
    case Errc::sweep_budget_exceeded:
    case Errc::closure_budget_exceeded:
      return 1;
    default:
      return 2;
  }
}

struct Loaded {
  InstanceDoc doc;
  Poset poset;
  Family family;
  std::string digest;
};

Loaded load(const std::string& path, const std::vector<std::string>& family) {
  Loaded out;
  out.doc = load_instance_file(path);
  out.poset = out.doc.to_poset();
  out.family = out.doc.to_family(out.poset, family);
  out.digest = instance_digest(out.doc);
  return out;
}

void emit(ordered_json report, bool with_timing, Clock::time_point t0) {
  if (with_timing) {
    ordered_json timing;
    timing["seconds"] =
        std::chrono::duration<double>(Clock::now() - t0).count();
    report["timing"] = std::move(timing);
  }
  std::cout << report.dump(2) << "\n";
}

int run_check(const std::string& path) {
  Loaded in = load(path, {});
  ordered_json report;
  report["command"] = "check";
  report["digest"] = in.digest;
  report["elements"] = in.poset.size();
  report["bottom"] = in.poset.bottom()
                         ? ordered_json(in.poset.label(*in.poset.bottom()))
                         : ordered_json();
  report["top"] = in.poset.top()
                      ? ordered_json(in.poset.label(*in.poset.top()))
                      : ordered_json();
  report["chain_complete"] = is_chain_complete(in.poset);
  report["complete_lattice"] = is_complete_lattice(in.poset);

  ordered_json maps = ordered_json::array();
  for (const MapTable& f : in.family.maps) {
    ordered_json one;
    one["name"] = f.name;
    auto v = isotone_violation(in.poset, f);
    one["isotone"] = !v.has_value();
    if (v)
      one["witness"] = ordered_json::array(
          {in.poset.label(v->first), in.poset.label(v->second)});
    one["chain_continuous"] = is_chain_continuous(in.poset, f);
    maps.push_back(std::move(one));
  }
  report["maps"] = std::move(maps);

  auto w = find_noncommuting(in.family);
  report["commutative"] = !w.has_value();
  if (w)
    report["commutativity_witness"] =
        ordered_json::array({in.family[w->f].name, in.family[w->g].name,
                             in.poset.label(w->x)});
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_solve(const std::string& path, const std::vector<std::string>& family,
              const std::string& strategy, bool unsafe, bool no_timing) {
  const auto t0 = Clock::now();
  Loaded in = load(path, family);
  SolveOptions opts;
  opts.skip_precondition_checks = unsafe;

  FixReport result;
  if (strategy == "closure") {
    result = joint_fixed_points(in.poset, in.family, opts);
  } else {
    // Chaotic iteration per extensive seed; same contract as closure mode.
    // Preconditions are checked once here, the per-seed runs skip them.
    if (!unsafe) check_joint_preconditions(in.poset, in.family);
    SolveOptions inner = opts;
    inner.skip_precondition_checks = true;
    result.method = Method::round_robin;
    Subset ext = extensivity_domain(in.poset, in.family);
    Subset fix;
    for (Elem x : ext) {
      Elem s = round_robin_solve(in.poset, in.family, x, inner);
      result.per_seed.push_back(OrbitResult{x, {}, s, 0});
      fix.push_back(s);
    }
    result.fix_set = make_subset(in.poset, std::move(fix));
    result.stats.seeds = ext.size();
    if (auto b = in.poset.bottom())
      if (std::binary_search(ext.begin(), ext.end(), *b))
        result.least = round_robin_solve(in.poset, in.family, *b, inner);
  }

  ordered_json report;
  report["command"] = "solve";
  report["digest"] = in.digest;
  report["family"] = [&] {
    ordered_json names = ordered_json::array();
    for (const MapTable& f : in.family.maps) names.push_back(f.name);
    return names;
  }();
  ordered_json body =
      fix_report_json(in.poset, result,
                      /*include_orbits=*/result.method != Method::round_robin);
  for (auto& [key, value] : body.items()) report[key] = value;
  emit(std::move(report), !no_timing, t0);
  return 0;
}

int run_kleene(const std::string& path, const std::string& map_name,
               const std::string& start, bool unsafe, bool no_timing) {
  const auto t0 = Clock::now();
  Loaded in = load(path, {map_name});
  std::optional<Elem> x0;
  if (!start.empty()) x0 = in.poset.index_of(start);
  SolveOptions opts;
  opts.skip_precondition_checks = unsafe;
  FixReport result = kleene_iterate(in.poset, in.family[0], x0, opts);

  ordered_json report;
  report["command"] = "kleene";
  report["digest"] = in.digest;
  report["map"] = map_name;
  ordered_json body = fix_report_json(in.poset, result);
  for (auto& [key, value] : body.items()) report[key] = value;
  emit(std::move(report), !no_timing, t0);
  return 0;
}

int run_seeds(const std::string& path, const std::string& map_name,
              bool unsafe, bool no_timing) {
  const auto t0 = Clock::now();
  Loaded in = load(path, {map_name});
  SolveOptions opts;
  opts.skip_precondition_checks = unsafe;
  FixReport result = fixed_points_single(in.poset, in.family[0], opts);

  ordered_json report;
  report["command"] = "seeds";
  report["digest"] = in.digest;
  report["map"] = map_name;
  ordered_json body = fix_report_json(in.poset, result);
  for (auto& [key, value] : body.items()) report[key] = value;
  emit(std::move(report), !no_timing, t0);
  return 0;
}

int run_oracle(const std::string& path, const std::vector<std::string>& family,
               bool no_timing) {
  const auto t0 = Clock::now();
  Loaded in = load(path, family);

  Subset brute = brute_force_fixed_points(in.poset, in.family);
  std::vector<Verdict> verdicts = verify_structure(in.poset, in.family);
  std::vector<Verdict> approx = verify_approximation(in.poset, in.family);
  verdicts.insert(verdicts.end(), approx.begin(), approx.end());

  bool all_hold = true;
  ordered_json list = ordered_json::array();
  for (const Verdict& v : verdicts) {
    all_hold = all_hold && v.holds;
    list.push_back(verdict_json(v));
  }

  ordered_json report;
  report["command"] = "oracle";
  report["digest"] = in.digest;
  report["brute_force"] = labels_json(in.poset, brute);
  report["verdicts"] = std::move(list);
  report["all_hold"] = all_hold;
  emit(std::move(report), !no_timing, t0);
  return all_hold ? 0 : 1;
}

int run_gen(const std::string& kind, int n, int m, std::uint64_t seed,
            const std::string& strategy, int count, const std::string& out) {
  GenSpec spec;
  spec.kind = poset_kind_from_name(kind);
  spec.n = n;
  spec.m = m;
  spec.rng_seed = seed;
  Poset p = make_standard_poset(spec);
  Family fam =
      random_commuting_family(p, family_strategy_from_name(strategy), count,
                              seed ^ 0x5eed5eed5eed5eedULL);

  nlohmann::json meta;
  meta["generator"] = {{"kind", kind},
                       {"n", n},
                       {"m", m},
                       {"strategy", strategy},
                       {"count", count}};
  meta["rng"] = {{"algorithm", SplitMix64::algorithm}, {"seed", seed}};
  InstanceDoc doc = make_instance_doc(p, fam, std::move(meta));
  write_instance_file(out, doc);

  ordered_json report;
  report["command"] = "gen";
  report["path"] = out;
  report["digest"] = instance_digest(doc);
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-poset joint fixed point toolkit"};
  app.require_subcommand(1);

  std::string path, map_name, start, out_path;
  std::vector<std::string> family;
  std::string strategy = "closure";
  std::string kind = "chain";
  std::string gen_strategy = "powers";
  int n = 4, m = 0, count = 2;
  std::uint64_t seed = 0;
  bool unsafe = false, no_timing = false;

  CLI::App* check = app.add_subcommand("check", "Report instance properties");
  check->add_option("file", path, "instance file")->required();

  CLI::App* solve =
      app.add_subcommand("solve", "Joint fixed points of the family");
  solve->add_option("file", path, "instance file")->required();
  solve->add_option("--family", family, "map names (default: all)")
      ->delimiter(',');
  solve->add_option("--strategy", strategy, "closure|round-robin")
      ->check(CLI::IsMember({"closure", "round-robin"}));
  solve->add_flag("--unsafe-skip-preconditions", unsafe,
                  "run without hypothesis checks");
  solve->add_flag("--no-timing", no_timing, "omit the timing field");

  CLI::App* kleene = app.add_subcommand("kleene", "Iterate one map to a fixed point");
  kleene->add_option("file", path, "instance file")->required();
  kleene->add_option("--map", map_name, "map name")->required();
  kleene->add_option("--start", start, "start label (default: bottom)");
  kleene->add_flag("--unsafe-skip-preconditions", unsafe,
                   "run without hypothesis checks");
  kleene->add_flag("--no-timing", no_timing, "omit the timing field");

  CLI::App* seeds =
      app.add_subcommand("seeds", "All fixed points of one map via seeds");
  seeds->add_option("file", path, "instance file")->required();
  seeds->add_option("--map", map_name, "map name")->required();
  seeds->add_flag("--unsafe-skip-preconditions", unsafe,
                  "run without hypothesis checks");
  seeds->add_flag("--no-timing", no_timing, "omit the timing field");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Brute-force check of every claim");
  oracle->add_option("file", path, "instance file")->required();
  oracle->add_option("--family", family, "map names (default: all)")
      ->delimiter(',');
  oracle->add_flag("--no-timing", no_timing, "omit the timing field");

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", kind,
                  "chain|antichain-plus-bottom|powerset|divisor|product|"
                  "diamond-M3|pentagon-N5|random");
  gen->add_option("--n", n, "primary size parameter");
  gen->add_option("--m", m, "second chain length (product only)");
  gen->add_option("--rng-seed", seed, "64-bit seed");
  gen->add_option("--strategy", gen_strategy, "powers|join-translations")
      ->check(CLI::IsMember({"powers", "join-translations"}));
  gen->add_option("--count", count, "number of maps to draw");
  gen->add_option("-o,--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(path);
    if (solve->parsed())
      return run_solve(path, family, strategy, unsafe, no_timing);
    if (kleene->parsed())
      return run_kleene(path, map_name, start, unsafe, no_timing);
    if (seeds->parsed()) return run_seeds(path, map_name, unsafe, no_timing);
    if (oracle->parsed()) return run_oracle(path, family, no_timing);
    if (gen->parsed())
      return run_gen(kind, n, m, seed, gen_strategy, count, out_path);
  } catch (const PosetError& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
