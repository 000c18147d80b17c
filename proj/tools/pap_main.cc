// Copyright 2026 The pap Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line driver for the PAP pipeline.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pap/frlp.hpp"
#include "pap/generator.hpp"
#include "pap/graph.hpp"
#include "pap/oracle.hpp"
#include "pap/pipeline.hpp"
#include "pap/relax.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kBudget = 3;
constexpr int kNotStructured = 4;

json LinksJson(const pap::PapInstance& g, const pap::LinkSet& s) {
  json out = json::array();
  for (int id : s) out.push_back({g.link(id).u, g.link(id).v});
  return out;
}

void PrintLinks(const pap::PapInstance& g, const pap::LinkSet& s) {
  for (int id : s) std::cout << "link " << g.link(id).u << " " << g.link(id).v << "\n";
}

struct SolveFlags {
  bool json = false;
  bool no_reduce = false;
  bool exact = false;
  bool trace = false;
  bool relaxed = false;
  double epsilon = 1.0 / 12.0;
  int swap_depth = 2;
  double exact_seconds = 60.0;
};

pap::PipelineOptions MakeOptions(const SolveFlags& f) {
  pap::PipelineOptions o;
  o.reduce = !f.no_reduce;
  o.strict = f.no_reduce;
  o.config.epsilon = f.epsilon;
  o.config.relaxed = f.relaxed;
  o.start.swap_depth = f.swap_depth;
  return o;
}

// One report per instance; `opt` is filled when requested and within budget.
json SolveReport(const std::string& name, const pap::PapInstance& g, const SolveFlags& f) {
  json r;
  r["instance"] = name;
  r["vertices"] = g.num_vertices();
  r["paths"] = g.num_paths();
  r["links_available"] = g.num_links();
  auto result = pap::Solve(g, MakeOptions(f));
  r["seconds"] = result.seconds;
  r["size"] = result.links.size();
  r["feasible"] = pap::VerifySolution(g, result.links);
  r["solution"] = LinksJson(g, result.links);
  r["fallbacks"] = result.fallbacks;
  json runs = json::array();
  bool invariants = true;
  for (const auto& run : result.runs) {
    json j;
    j["vertices"] = run.num_vertices;
    j["paths"] = run.num_paths;
    j["start"] = run.start_candidate;
    j["start_cost_quarters"] = run.start_cost_quarters;
    j["cover_steps"] = run.cover_steps.size();
    j["glue_steps"] = run.glue_steps.size();
    j["pruned"] = run.pruned;
    if (!run.fallback.empty()) j["fallback"] = run.fallback;
    json muts = json::array();
    for (const auto& m : run.mutations) {
      invariants = invariants && m.invariants_ok;
      muts.push_back({{"stage", m.stage},
                      {"cost_quarters", m.cost_quarters},
                      {"links", m.num_links},
                      {"invariants_ok", m.invariants_ok}});
    }
    j["mutations"] = std::move(muts);
    runs.push_back(std::move(j));
  }
  r["runs"] = std::move(runs);
  r["invariants_ok"] = invariants;
  if (f.trace && result.trace) r["trace"] = pap::FormatTrace(*result.trace);
  if (f.exact) {
    pap::SearchBudget budget;
    budget.time_limit_seconds = f.exact_seconds;
    try {
      auto opt = pap::ExactPap(g, budget, false);
      r["opt"] = opt.size();
      r["ratio"] = opt.empty() ? 1.0
                               : static_cast<double>(result.links.size()) /
                                     static_cast<double>(opt.size());
    } catch (const pap::BudgetExceeded& e) {
      r["opt_lower_bound"] = e.lower_bound;
    }
  }
  return r;
}

void PrintReport(const json& r) {
  std::cout << "instance " << r["instance"].get<std::string>() << " n=" << r["vertices"]
            << " paths=" << r["paths"] << " links=" << r["links_available"] << "\n";
  for (const auto& run : r["runs"]) {
    std::cout << "run n=" << run["vertices"] << " start=" << run["start"].get<std::string>()
              << " cover_steps=" << run["cover_steps"] << " glue_steps=" << run["glue_steps"]
              << " pruned=" << run["pruned"];
    if (run.contains("fallback")) std::cout << " fallback=\"" << run["fallback"].get<std::string>() << "\"";
    std::cout << "\n";
  }
  if (r.contains("trace")) std::cout << r["trace"].get<std::string>();
  std::cout << "size " << r["size"] << " feasible " << (r["feasible"].get<bool>() ? "yes" : "no")
            << " invariants " << (r["invariants_ok"].get<bool>() ? "ok" : "violated")
            << " seconds " << r["seconds"] << "\n";
  if (r.contains("opt")) std::cout << "opt " << r["opt"] << " ratio " << r["ratio"] << "\n";
  if (r.contains("opt_lower_bound")) std::cout << "opt >= " << r["opt_lower_bound"] << " (budget)\n";
  for (const auto& l : r["solution"]) std::cout << "link " << l[0] << " " << l[1] << "\n";
}

int CmdSolve(const std::string& path, const SolveFlags& f) {
  auto g = pap::ReadInstanceFile(path);
  json r = SolveReport(path, g, f);
  if (f.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    PrintReport(r);
  }
  return kOk;
}

int CmdGen(const pap::GeneratorOptions& o, const std::string& out) {
  auto g = pap::GenerateInstance(o);
  if (out.empty() || out == "-") {
    std::cout << pap::FormatInstance(g);
  } else {
    pap::WriteInstanceFile(g, out);
  }
  return kOk;
}

int CmdBench(const std::string& dir, const SolveFlags& f, int parallel) {
  std::vector<std::string> files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".pap") files.push_back(e.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<json> reports(files.size());
  std::vector<std::string> errors(files.size());
  auto work = [&](size_t i) {
    try {
      reports[i] = SolveReport(files[i], pap::ReadInstanceFile(files[i]), f);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  parallel = std::max(1, parallel);
  for (size_t base = 0; base < files.size(); base += parallel) {
    std::vector<std::future<void>> jobs;
    for (size_t i = base; i < std::min(files.size(), base + parallel); ++i) {
      jobs.push_back(std::async(std::launch::async, work, i));
    }
    for (auto& j : jobs) j.get();
  }
  double worst = 0, sum = 0;
  int rated = 0, feasible = 0, invariants = 0;
  json table = json::array();
  for (size_t i = 0; i < files.size(); ++i) {
    if (!errors[i].empty()) {
      table.push_back({{"instance", files[i]}, {"error", errors[i]}});
      continue;
    }
    const json& r = reports[i];
    feasible += r["feasible"].get<bool>() ? 1 : 0;
    invariants += r["invariants_ok"].get<bool>() ? 1 : 0;
    json row = {{"instance", files[i]}, {"size", r["size"]}, {"fallbacks", r["fallbacks"]}};
    if (r.contains("ratio")) {
      const double ratio = r["ratio"].get<double>();
      worst = std::max(worst, ratio);
      sum += ratio;
      ++rated;
      row["opt"] = r["opt"];
      row["ratio"] = ratio;
    }
    table.push_back(std::move(row));
  }
  json summary = {{"instances", files.size()}, {"feasible", feasible},
                  {"invariants_ok", invariants}, {"rated", rated},
                  {"worst_ratio", worst}, {"mean_ratio", rated ? sum / rated : 0.0}};
  if (f.json) {
    std::cout << json{{"rows", table}, {"summary", summary}}.dump(2) << "\n";
  } else {
    for (const auto& row : table) {
      std::cout << row["instance"].get<std::string>();
      if (row.contains("error")) {
        std::cout << " error " << row["error"].get<std::string>() << "\n";
        continue;
      }
      std::cout << " size " << row["size"];
      if (row.contains("ratio")) std::cout << " opt " << row["opt"] << " ratio " << row["ratio"];
      std::cout << "\n";
    }
    std::cout << "instances " << files.size() << " feasible " << feasible << " invariants_ok "
              << invariants << " rated " << rated << " worst_ratio " << worst
              << " mean_ratio " << (rated ? sum / rated : 0.0) << "\n";
  }
  return kOk;
}

pap::LinkSet ReadSolution(const pap::PapInstance& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pap::InvalidInstance("cannot open " + path);
  pap::LinkSet s;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream f(line);
    std::string kw;
    int u = 0, v = 0;
    if (!(f >> kw) || kw[0] == '#') continue;
    if (kw != "link" || !(f >> u >> v)) throw pap::InvalidInstance("bad solution line: " + line);
    auto id = g.find_link(u, v);
    if (!id) throw pap::InvalidInstance("not a link: " + line);
    s.push_back(*id);
  }
  return pap::Normalize(std::move(s));
}

int CmdVerify(const std::string& inst, const std::string& sol, bool as_json) {
  auto g = pap::ReadInstanceFile(inst);
  auto s = ReadSolution(g, sol);
  const bool ok = pap::VerifySolution(g, s);
  if (as_json) {
    std::cout << json{{"feasible", ok}, {"size", s.size()}}.dump() << "\n";
  } else {
    std::cout << (ok ? "FEASIBLE" : "INFEASIBLE") << " size " << s.size() << "\n";
  }
  return ok ? kOk : kBadInput;
}

int CmdExact(const std::string& path, double seconds, bool as_json) {
  auto g = pap::ReadInstanceFile(path);
  pap::SearchBudget budget;
  budget.time_limit_seconds = seconds;
  auto s = pap::ExactPap(g, budget);
  if (as_json) {
    std::cout << json{{"opt", s.size()}, {"solution", LinksJson(g, s)}}.dump() << "\n";
  } else {
    std::cout << "opt " << s.size() << "\n";
    PrintLinks(g, s);
  }
  return kOk;
}

int CmdReduce(const std::string& path, const SolveFlags& f) {
  auto g = pap::ReadInstanceFile(path);
  auto o = MakeOptions(f);
  o.reduce = true;
  o.strict = false;
  auto result = pap::Solve(g, o);
  if (f.json) {
    std::cout << json{{"size", result.links.size()},
                      {"trace", pap::FormatTrace(*result.trace)},
                      {"solution", LinksJson(g, result.links)}}
                     .dump(2)
              << "\n";
  } else {
    if (f.trace) std::cout << pap::FormatTrace(*result.trace);
    std::cout << "size " << result.links.size() << "\n";
    PrintLinks(g, result.links);
  }
  return kOk;
}

int CmdRelax(const std::string& path, bool as_json) {
  auto g = pap::ReadInstanceFile(path);
  auto ecpc = pap::ShadowComplete(pap::BuildEcpc(g));
  auto cover = pap::Minimalize(ecpc, pap::Exact2Ecpc(ecpc));
  auto extraction = pap::CoverToTracks(ecpc, cover);
  auto back = pap::TracksToCover(ecpc, extraction.tracks);
  const int paths = g.num_paths();
  const int x = static_cast<int>(extraction.tracks.size());
  const bool identity = static_cast<int>(back.size()) == 2 * paths - x;
  const bool bound = x >= 2 * paths - static_cast<int>(cover.size());
  if (as_json) {
    std::cout << json{{"opt_c", cover.size()},
                      {"tracks", x},
                      {"cover_from_tracks", back.size()},
                      {"identity", identity},
                      {"track_bound", bound},
                      {"violations", extraction.violations}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "opt_C " << cover.size() << "\n";
    for (const auto& t : extraction.tracks) std::cout << pap::FormatTrack(ecpc, t) << "\n";
    std::cout << "tracks " << x << " cover_from_tracks " << back.size() << " identity "
              << (identity ? "ok" : "FAIL") << " track_bound " << (bound ? "ok" : "FAIL") << "\n";
    for (const auto& v : extraction.violations) std::cout << "violation " << v << "\n";
  }
  return identity && bound ? kOk : 1;
}

int CmdLpCheck(const std::string& rho, const std::string& eps, const std::string& epsp,
               const std::string& precision, const std::string& export_path, bool as_json) {
  auto lp = pap::BuildPolyhedron(pap::ParseRational(rho), pap::ParseRational(eps),
                                 pap::ParseRational(epsp));
  auto verdict = pap::CheckFeasibility(lp);
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    out << pap::ExportLp(lp);
  }
  json r{{"rho", rho}, {"verdict", verdict.empty ? "EMPTY" : "NONEMPTY"},
         {"rows", lp.rows.size()}, {"variables", lp.variables.size()}, {"pivots", verdict.pivots}};
  if (!verdict.empty) {
    json point;
    for (size_t v = 0; v < lp.variables.size(); ++v) {
      if (verdict.point[v] != 0) point[lp.variables[v]] = verdict.point[v].get_str();
    }
    r["point"] = point;
  }
  if (!precision.empty()) {
    auto range = pap::MaxRho(pap::ParseRational(eps), pap::ParseRational(epsp),
                             pap::ParseRational(precision));
    r["max_rho_nonempty"] = pap::FormatRational(range.nonempty, 8);
    r["max_rho_empty"] = pap::FormatRational(range.empty, 8);
  }
  if (as_json) {
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << r["verdict"].get<std::string>() << "\n";
    if (r.contains("point")) {
      for (const auto& [k, v] : r["point"].items()) std::cout << "  " << k << " = " << v.get<std::string>() << "\n";
    }
    if (r.contains("max_rho_nonempty")) {
      std::cout << "max_rho in [" << r["max_rho_nonempty"].get<std::string>() << ", "
                << r["max_rho_empty"].get<std::string>() << "]\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path augmentation solver"};
  app.require_subcommand(1);
  SolveFlags flags;
  auto add_solve_flags = [&](CLI::App* c) {
    c->add_flag("--json", flags.json, "Machine-readable report");
    c->add_flag("--no-reduce", flags.no_reduce,
                "Run the structured solver directly; exit 4 if it gets stuck");
    c->add_flag("--trace", flags.trace, "Print the reduction tree");
    c->add_option("--epsilon", flags.epsilon, "Reduction epsilon, at most 1/12");
    c->add_flag("--relaxed", flags.relaxed, "Accept epsilon above 1/12");
    c->add_option("--swap-depth", flags.swap_depth, "Local search depth of the track packing");
  };

  std::string instance_path;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  add_solve_flags(solve);
  solve->add_flag("--exact", flags.exact, "Also compute opt and the ratio");
  solve->add_option("--exact-seconds", flags.exact_seconds, "Time budget of --exact");

  pap::GeneratorOptions gen_opts;
  gen_opts.seed = pap::DefaultSeed(1);
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random feasible instance");
  gen->add_option("--seed", gen_opts.seed, "Seed (default PAP_SEED or 1)");
  gen->add_option("--paths", gen_opts.num_paths, "Number of paths");
  gen->add_option("--min-len", gen_opts.min_path_length, "Fewest vertices per path");
  gen->add_option("--max-len", gen_opts.max_path_length, "Most vertices per path");
  gen->add_option("--density", gen_opts.link_density, "Chance of each admissible link")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--structured-bias", gen_opts.structured_bias,
                "Give every endpoint a link to another path");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string bench_dir;
  int parallel = 1;
  auto* bench = app.add_subcommand("bench", "Solve every .pap file of a directory");
  bench->add_option("dir", bench_dir)->required();
  bench->add_flag("--json", flags.json, "Machine-readable summary");
  bench->add_flag("--exact", flags.exact, "Compute opt and ratios");
  bench->add_option("--exact-seconds", flags.exact_seconds, "Time budget per exact call");
  bench->add_option("--parallel", parallel, "Instances solved at once");

  std::string solution_path;
  bool json_out = false;
  auto* verify = app.add_subcommand("verify", "Check a solution file");
  verify->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  verify->add_option("solution", solution_path)->required()->check(CLI::ExistingFile);
  verify->add_flag("--json", json_out);

  double exact_seconds = 60;
  auto* exact = app.add_subcommand("exact", "Optimum by branch and bound");
  exact->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  exact->add_option("--seconds", exact_seconds, "Time budget");
  exact->add_flag("--json", json_out);

  auto* reduce = app.add_subcommand("reduce", "Run the reduction and show its steps");
  reduce->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  add_solve_flags(reduce);

  bool roundtrip = false;
  auto* relax = app.add_subcommand("relax", "Relaxation cover and its tracks");
  relax->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  relax->add_flag("--roundtrip", roundtrip, "Convert cover to tracks and back");
  relax->add_flag("--json", json_out);

  std::string rho = "1.9412", eps = "0.001", epsp = "0.0001", precision, export_path;
  auto* lp = app.add_subcommand("lp-check", "Feasibility of the factor-revealing LP");
  lp->add_option("--rho", rho);
  lp->add_option("--eps", eps);
  lp->add_option("--epsp", epsp);
  lp->add_option("--max-rho", precision, "Also bisect for the largest nonempty rho");
  lp->add_option("--export", export_path, "Write the LP in plain text");
  lp->add_flag("--json", json_out);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve) return CmdSolve(instance_path, flags);
    if (*gen) return CmdGen(gen_opts, gen_out);
    if (*bench) return CmdBench(bench_dir, flags, parallel);
    if (*verify) return CmdVerify(instance_path, solution_path, json_out);
    if (*exact) return CmdExact(instance_path, exact_seconds, json_out);
    if (*reduce) return CmdReduce(instance_path, flags);
    if (*relax) return CmdRelax(instance_path, json_out);
    if (*lp) return CmdLpCheck(rho, eps, epsp, precision, export_path, json_out);
  } catch (const pap::InvalidInstance& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const pap::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const pap::BudgetExceeded& e) {
    std::cerr << "budget exceeded; lower bound " << e.lower_bound << "\n";
    return kBudget;
  } catch (const pap::NoProgress& e) {
    std::cerr << "not structured: " << e.what() << "\n";
    return kNotStructured;
  } catch (const pap::NotStructured& e) {
    std::cerr << "not structured: " << e.what() << "\n";
    return kNotStructured;
  }
  return kOk;
}
