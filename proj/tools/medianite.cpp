// medianite: poc sets and their dual cubings from the command line.
//
//   medianite validate FILE
//   medianite dual FILE [--format dot|json] [-o OUT]
//   medianite dist FILE --metric l1|linf --from SIGNS --to SIGNS [--witness]
//   medianite matrix FILE --metric l1|linf [--format csv|json] [-o OUT]
//   medianite check FILE --which dagger|hyperconvex|helly|deform|subdivide|approx
//
// Exit codes: 0 pass, 1 counterexample or axiom violation, 2 malformed
// input, failed precondition or exhausted budget. MEDIANITE_BUDGET caps
// enumeration work.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "medianite/json_io.hpp"
#include "medianite/kernels.hpp"
#include "medianite/metrics.hpp"
#include "medianite/refine.hpp"
#include "medianite/verify.hpp"

using namespace medianite;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitPrecondition = 2;

std::uint64_t read_budget() {
  if (const char* env = std::getenv("MEDIANITE_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed MEDIANITE_BUDGET\n";
  }
  return 50'000'000ull;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

Ultrafilter parse_signs(const PocSet& p, const std::string& signs) {
  if (int(signs.size()) != p.walls())
    throw Error("sign vector '" + signs + "' must have " + std::to_string(p.walls()) +
                " characters");
  Ultrafilter u(p.walls());
  for (int w = 0; w < p.walls(); ++w) {
    if (signs[w] == '-')
      u.neg.set(w);
    else if (signs[w] != '+')
      throw Error("sign vectors use only '+' and '-'");
  }
  if (!is_coherent(p, u)) throw Error("'" + signs + "' is not a vertex (incoherent)");
  return u;
}

json names_of(const PocSet& p, const std::vector<Element>& elems) {
  json a = json::array();
  for (Element e : elems) a.push_back(p.element_name(e));
  return a;
}

int cmd_validate(const std::string& path) {
  try {
    PocSet p = io::load_pocset(path);
    std::cout << "valid poc set: " << p.walls() << " walls\n";
    return kExitPass;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const AxiomViolation& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const MissingWeight& e) {
    std::cerr << "missing weight: " << e.what() << "\n";
    return kExitCounterexample;
  }
}

int cmd_dual(const std::string& path, const std::string& format, const std::string& out) {
  PocSet p = io::load_pocset(path);
  CubingGraph g = build_cubing(p);
  if (format == "dot")
    emit(io::to_dot(g), out);
  else
    emit(io::graph_to_json(g).dump(2) + "\n", out);
  return kExitPass;
}

int cmd_dist(const std::string& path, const std::string& metric, const std::string& from,
             const std::string& to, bool witness) {
  PocSet p = io::load_pocset(path);
  Ultrafilter u = parse_signs(p, from);
  Ultrafilter v = parse_signs(p, to);
  if (metric == "l1") {
    std::cout << io::format_double(l1_distance_vertices(p, u, v)) << "\n";
    if (witness) {
      json j;
      j["separator"] = names_of(p, separator_vertices(p, u, v).elements);
      std::cout << j.dump() << "\n";
    }
  } else {
    auto base = enumerate_ultrafilters(p, EnumMode::flip_bfs).front();
    auto chain = linf_weighted_witness(p, coordinates(p, base, u), coordinates(p, base, v));
    std::cout << io::format_double(chain.weight) << "\n";
    if (witness) {
      json j;
      j["chain"] = names_of(p, chain.chain);
      std::cout << j.dump() << "\n";
    }
  }
  return kExitPass;
}

int cmd_matrix(const std::string& path, const std::string& metric,
               const std::string& format, const std::string& out) {
  PocSet p = io::load_pocset(path);
  CubingGraph g = build_cubing(p);
  auto d = metric == "l1" ? kernels::l1_matrix_parallel(g) : kernels::linf_matrix_parallel(g);
  if (format == "csv") {
    emit(io::matrix_csv(g, d), out);
  } else {
    json j;
    json verts = json::array();
    for (int i = 0; i < g.size(); ++i) verts.push_back(g.vertex(i).signs());
    j["vertices"] = verts;
    j["metric"] = metric;
    j["matrix"] = d;
    emit(j.dump(2) + "\n", out);
  }
  return kExitPass;
}

struct CheckOptions {
  std::string metric = "linf";
  int subdiv_n = 0;
  double radii_grid = 1.0;
  int max_family = 4;
  double perturb = 0.1;
  int trials = 100;
  unsigned seed = 12345;
  std::string weights2;
};

int report_exit(const json& j) {
  std::cout << j.dump(2) << "\n";
  return j.at("pass").get<bool>() ? kExitPass : kExitCounterexample;
}

int check_dagger_cmd(const CubingGraph& g) {
  auto rep = check_dagger(g);
  json j;
  j["check"] = "dagger";
  j["pass"] = rep.pass;
  j["bound"] = nullptr;
  j["balls_checked"] = rep.balls_checked;
  if (rep.pass) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = {{"center", g.vertex(rep.center).signs()},
                    {"radius", rep.radius},
                    {"triple",
                     {g.vertex(rep.witness[0]).signs(), g.vertex(rep.witness[1]).signs(),
                      g.vertex(rep.witness[2]).signs()}}};
  }
  return report_exit(j);
}

int check_hyperconvex_cmd(const CubingGraph& g, const CheckOptions& opt) {
  FiniteMetric m = opt.metric == "l1" ? vertex_metric_l1(g) : vertex_metric_linf(g);
  auto rep = hyperconvexity_check(m, opt.radii_grid, opt.max_family, read_budget());
  json j;
  j["check"] = "hyperconvex";
  j["metric"] = opt.metric;
  j["pass"] = rep.pass;
  j["bound"] = nullptr;
  j["candidates"] = rep.candidates_checked;
  if (rep.pass) {
    j["witness"] = nullptr;
  } else {
    json centers = json::array();
    for (int c : rep.witness.centers) centers.push_back(m.labels[c]);
    j["witness"] = {{"centers", centers}, {"radii", rep.witness.radii}};
  }
  return report_exit(j);
}

int check_helly_cmd(const CubingGraph& g, const CheckOptions& opt) {
  auto rep = helly_halfspace_sweep(g, opt.max_family, read_budget());
  json j;
  j["check"] = "helly";
  j["pass"] = rep.pass;
  j["bound"] = nullptr;
  j["families_checked"] = rep.families_checked;
  if (rep.pass) {
    j["witness"] = nullptr;
  } else {
    json fam = json::array();
    for (const auto& def : rep.witness) fam.push_back(names_of(g.pocset(), def));
    j["witness"] = fam;
  }
  return report_exit(j);
}

int check_deform_cmd(const PocSet& p, const CheckOptions& opt) {
  json trials = json::array();
  bool all_pass = true;
  double worst_dev = 0.0, worst_bound = 0.0;
  json worst_witness = nullptr;
  auto g = build_cubing(p);

  auto run_one = [&](const std::vector<double>& w2) {
    auto rep = deformation_bound_check(p, p.weights(), w2);
    all_pass = all_pass && rep.pass;
    if (rep.max_deviation >= worst_dev) {
      worst_dev = rep.max_deviation;
      worst_bound = rep.bound;
      if (rep.witness[0] >= 0)
        worst_witness = {g.vertex(rep.witness[0]).signs(), g.vertex(rep.witness[1]).signs()};
    }
  };

  if (!opt.weights2.empty()) {
    std::ifstream in(opt.weights2);
    if (!in) throw Error("cannot open " + opt.weights2);
    json jw = json::parse(in);
    std::vector<double> w2 = p.weights();
    for (auto it = jw.begin(); it != jw.end(); ++it) {
      bool found = false;
      for (int w = 0; w < p.walls(); ++w)
        if (p.label(w) == it.key()) {
          w2[w] = it.value().get<double>();
          found = true;
        }
      if (!found) throw Error("weights2 names unknown wall: " + it.key());
    }
    run_one(w2);
  } else {
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> delta(-opt.perturb, opt.perturb);
    for (int t = 0; t < opt.trials; ++t) {
      std::vector<double> w2 = p.weights();
      for (double& w : w2) w = std::max(0.0, w + delta(rng));
      run_one(w2);
    }
  }
  json j;
  j["check"] = "deform";
  j["pass"] = all_pass;
  j["max_deviation"] = worst_dev;
  j["bound"] = worst_bound;
  j["witness"] = worst_witness;
  return report_exit(j);
}

int check_subdivide_cmd(const PocSet& p, const CheckOptions& opt) {
  int n = opt.subdiv_n > 0 ? opt.subdiv_n : 2;
  std::vector<std::vector<double>> splits(p.walls());
  for (int w = 0; w < p.walls(); ++w) splits[w].assign(n, p.weight(w) / n);
  RefinementMap r = refine(p, splits);
  auto rep = subdivision_isometry_check(r);
  auto g = build_cubing(p);
  json j;
  j["check"] = "subdivide";
  j["n"] = n;
  j["pass"] = rep.pass;
  j["max_deviation"] = std::max(rep.max_deviation_l1, rep.max_deviation_linf);
  j["max_deviation_l1"] = rep.max_deviation_l1;
  j["max_deviation_linf"] = rep.max_deviation_linf;
  j["bound"] = rep.tolerance;
  j["witness"] = rep.witness[0] < 0
                     ? json(nullptr)
                     : json{g.vertex(rep.witness[0]).signs(), g.vertex(rep.witness[1]).signs()};
  return report_exit(j);
}

int check_approx_cmd(const PocSet& p, const CheckOptions& opt) {
  CubingGraph g = build_cubing(p);
  auto linf = kernels::linf_matrix_parallel(g);
  std::vector<int> levels;
  if (opt.subdiv_n > 0)
    levels = {opt.subdiv_n};
  else
    levels = {1, 2, 4, 8, 16};
  json runs = json::array();
  bool all_pass = true;
  for (int n : levels) {
    json run;
    run["n"] = n;
    run["bound"] = 2.0 * (2 * p.walls()) / double(n);
    try {
      auto oracle = oracle_linf_matrix(g, n);
      double dev = 0.0;
      int wi = -1, wj = -1;
      for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
          double d = std::abs(oracle[i * g.size() + j] - linf[i * g.size() + j]);
          if (d > dev) {
            dev = d;
            wi = i;
            wj = j;
          }
        }
      run["max_deviation"] = dev;
      run["pass"] = dev <= run["bound"].get<double>();
      run["witness"] =
          wi < 0 ? json(nullptr) : json{g.vertex(wi).signs(), g.vertex(wj).signs()};
      all_pass = all_pass && run["pass"].get<bool>();
    } catch (const DegenerateWall& e) {
      run["skipped"] = e.what();
      run["pass"] = true;
    }
    runs.push_back(run);
  }
  json j;
  j["check"] = "approx";
  j["pass"] = all_pass;
  j["bound"] = nullptr;
  j["witness"] = nullptr;
  j["runs"] = runs;
  return report_exit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite poc sets and their dual cubings"};
  app.require_subcommand(1);

  std::string path, format = "dot", out, metric = "l1", from, to, which;
  bool witness = false;
  int max_walls = 20;
  CheckOptions opt;

  auto* validate = app.add_subcommand("validate", "parse and validate a poc-set document");
  validate->add_option("file", path)->required();

  auto* dual = app.add_subcommand("dual", "export the dual cubing graph");
  dual->add_option("file", path)->required();
  dual->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  dual->add_option("-o,--output", out);

  auto* dist = app.add_subcommand("dist", "distance between two vertices");
  dist->add_option("file", path)->required();
  dist->add_option("--metric", metric)->check(CLI::IsMember({"l1", "linf"}));
  dist->add_option("--from", from)->required();
  dist->add_option("--to", to)->required();
  dist->add_flag("--witness", witness);

  auto* matrix = app.add_subcommand("matrix", "full distance matrix");
  matrix->add_option("file", path)->required();
  matrix->add_option("--metric", metric)->check(CLI::IsMember({"l1", "linf"}));
  matrix->add_option("--format", format)->default_val("csv")->check(CLI::IsMember({"csv", "json"}));
  matrix->add_option("-o,--output", out);

  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("file", path)->required();
  check->add_option("--which", which)
      ->required()
      ->check(CLI::IsMember({"dagger", "hyperconvex", "helly", "deform", "subdivide", "approx"}));
  check->add_option("--metric", opt.metric)->check(CLI::IsMember({"l1", "linf"}));
  check->add_option("--subdiv-n", opt.subdiv_n);
  check->add_option("--radii-grid", opt.radii_grid);
  check->add_option("--max-family", opt.max_family);
  check->add_option("--perturb", opt.perturb);
  check->add_option("--trials", opt.trials);
  check->add_option("--seed", opt.seed);
  check->add_option("--weights2", opt.weights2);

  app.add_option("--max-walls", max_walls, "enumeration cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);

    PocSet p = io::load_pocset(path);
    if (p.walls() > max_walls)
      throw TooManyWalls("instance has " + std::to_string(p.walls()) +
                         " walls, above the cap of " + std::to_string(max_walls));

    if (dual->parsed()) return cmd_dual(path, format, out);
    if (dist->parsed()) return cmd_dist(path, metric, from, to, witness);
    if (matrix->parsed()) return cmd_matrix(path, metric, format, out);
    if (check->parsed()) {
      if (which == "dagger") return check_dagger_cmd(build_cubing(p));
      if (which == "hyperconvex") return check_hyperconvex_cmd(build_cubing(p), opt);
      if (which == "helly") return check_helly_cmd(build_cubing(p), opt);
      if (which == "deform") return check_deform_cmd(p, opt);
      if (which == "subdivide") return check_subdivide_cmd(p, opt);
      if (which == "approx") return check_approx_cmd(p, opt);
    }
    return kExitPrecondition;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const GridTooFine& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
