// Command-line front end: sparsity checks, exact ranks, realizations, lift
// renderings and the acceptance self-test. Reports go to stdout as stable
// "key: value" lines; diagnostics and timings go to stderr.
//
// Exit codes: 0 = in class / success, 1 = not in class / violation, 2 = input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crysrig/crysrig.hpp"

namespace {

using namespace crysrig;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (int e : ids) out += (out.empty() ? "" : " ") + std::to_string(e + 1);
  return out.empty() ? "(none)" : out;
}

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string point(const Vec2<Real>& p) { return "(" + fixed(p.x.value()) + ", " + fixed(p.y.value()) + ")"; }

SparsityClass parse_class(const std::string& flag, bool cone) {
  static const std::map<std::string, SparsityClass> gamma{
      {"g11", SparsityClass::gamma11},          {"g22", SparsityClass::gamma22},
      {"laman", SparsityClass::gamma_laman},    {"cone11", SparsityClass::cone11},
      {"cone22", SparsityClass::cone22},        {"conelaman", SparsityClass::cone_laman},
      {"gc11", SparsityClass::gen_cone11},      {"gc22", SparsityClass::gen_cone22}};
  const auto it = gamma.find(flag);
  if (it == gamma.end()) throw std::invalid_argument("unknown class '" + flag + "'");
  // The crystallographic names also select the matching cone class on cone graphs.
  if (cone) {
    switch (it->second) {
      case SparsityClass::gamma11: return SparsityClass::cone11;
      case SparsityClass::gamma22: return SparsityClass::cone22;
      case SparsityClass::gamma_laman: return SparsityClass::cone_laman;
      default: break;
    }
  }
  return it->second;
}

// Restricts to 1-indexed edge ids given as "1,3,4" or "1 3 4".
ColoredGraph restrict_edges(const ColoredGraph& g, const std::string& list) {
  std::vector<int> ids;
  std::string tok;
  std::istringstream in(list);
  while (std::getline(in, tok, ',')) {
    std::istringstream words(tok);
    int id;
    while (words >> id) {
      if (id < 1 || id > g.edge_count()) throw std::invalid_argument("edge id " + std::to_string(id) + " out of range");
      ids.push_back(id - 1);
    }
  }
  return g.edge_subgraph(ids);
}

void header(const std::string& command, const ColoredGraph& g) {
  std::cout << "command: " << command << "\n";
  std::cout << "group: " << g.context().name() << "\n";
  std::cout << "vertices: " << g.vertex_count() << "\n";
  std::cout << "edges: " << g.edge_count() << "\n";
}

int cmd_check(const ColoredGraph& g, const std::string& command, const std::string& cls_flag) {
  const SparsityClass cls = parse_class(cls_flag, g.context().is_cone());
  const SparsityReport rep = check_class(g, cls);
  header(command, g);
  std::cout << "class: " << class_name(rep.cls) << "\n";
  std::cout << "required edges: " << rep.required_edges << "\n";
  std::cout << "sparse: " << (rep.sparse ? "yes" : "no") << "\n";
  if (!rep.sparse) std::cout << "witness: " << join_ids(rep.witness) << "\n";
  if (rep.decomposition) {
    std::cout << "decomposition 1: " << join_ids((*rep.decomposition)[0]) << "\n";
    std::cout << "decomposition 2: " << join_ids((*rep.decomposition)[1]) << "\n";
  }
  std::cout << class_name(rep.cls) << ": " << (rep.in_class ? "yes" : "no") << "\n";
  return rep.in_class ? kOk : kNo;
}

int cmd_rank(const ColoredGraph& g, const std::string& command, std::uint64_t seed, int trials) {
  const GenericRankReport rep = generic_rank<ExactField>(g, seed, trials);
  header(command, g);
  std::cout << "field: F_p(sqrt 3), p = 2^61 - 1\n";
  std::cout << "seed: " << seed << "\n";
  std::cout << "trials: " << rep.trials << "\n";
  std::cout << "rows: " << rep.rows << "\n";
  std::cout << "columns: " << rep.columns << "\n";
  std::cout << "rank: " << rep.rank << "\n";
  std::cout << "nullity: " << rep.nullity << "\n";
  char bound[32];
  std::snprintf(bound, sizeof bound, "%.1f", rep.log2_failure_bound);
  std::cout << "failure bound per trial: 2^" << bound << "\n";
  const RigidityVerdict v = g.context().is_cone() ? cone_rigidity(g, seed, trials) : is_generically_rigid(g, seed, trials);
  std::cout << "rigidity (combinatorial): " << rigidity_name(v.combinatorial) << "\n";
  std::cout << "rigidity (numeric): " << rigidity_name(v.numeric) << ", rank " << v.rank << " of " << v.columns
            << " columns\n";
  std::cout << "rigidity consistent: " << (v.consistent ? "yes" : "no") << "\n";
  std::cout << "summary: rank " << rep.rank << " / " << rep.rows << " rows, nullity " << rep.nullity << "\n";
  return v.consistent ? kOk : kNo;
}

void print_framework(const Framework& fw) {
  const ColoredGraph& g = fw.graph;
  for (int i = 0; i < g.vertex_count(); ++i) std::cout << "p" << i + 1 << ": " << point(fw.realization.points[i]) << "\n";
  if (!g.context().is_cone()) {
    std::cout << "v1: " << point(fw.realization.v1) << "\n";
    std::cout << "v2: " << point(fw.realization.v2) << "\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) std::cout << "length " << e + 1 << ": " << fixed(fw.lengths[e]) << "\n";
}

int cmd_realize(const ColoredGraph& g, const std::string& command, std::uint64_t seed) {
  const Framework fw = realize_generic_framework(g, seed);
  header(command, g);
  std::cout << "seed: " << seed << "\n";
  print_framework(fw);
  return kOk;
}

int cmd_render(const ColoredGraph& g, const std::string& command, std::uint64_t seed, const std::vector<int>& box,
               const std::string& out) {
  if (box.size() != 4) throw std::invalid_argument("--box needs x0 x1 y0 y1");
  const LiftBox b{box[0], box[1], box[2], box[3]};
  const Framework fw = realize_generic_framework(g, seed);
  const LiftFragment lift = lift_fragment(g, fw.realization, b);
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write " + out);
  file << render_svg(lift);
  header(command, g);
  std::cout << "seed: " << seed << "\n";
  std::cout << "lift vertices: " << lift.vertices.size() << "\n";
  std::cout << "lift edges: " << lift.edges.size() << "\n";
  std::cout << "svg: " << out << "\n";
  return kOk;
}

int cmd_circuit(const ColoredGraph& g, const std::string& command) {
  const auto circuit = find_laman_circuit(g);
  header(command, g);
  const SparsityClass cls = g.context().is_cone() ? SparsityClass::cone_laman : SparsityClass::gamma_laman;
  std::cout << "class: " << class_name(cls) << "\n";
  if (!circuit) {
    std::cout << "circuit: (none)\n";
    return kOk;
  }
  const SparsityValues v = sparsity_values(g, *circuit);
  std::cout << "circuit: " << join_ids(*circuit) << "\n";
  std::cout << "circuit edges: " << circuit->size() << "\n";
  std::cout << "circuit h: " << v.h << "\n";
  return kNo;
}

int cmd_selftest(const AcceptanceConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  std::cout << "seed: " << cfg.seed << "\n";
  std::cout << "max n: " << cfg.max_n << "\n";
  std::cout << "max m: " << cfg.max_m << "\n";
  if (cfg.flip_r4) std::cout << "fault: reversed Gamma_4 action\n";
  bool ok = true;
  run_acceptance(cfg, [&](const CriterionResult& r) {
    ok = ok && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): " << r.instances
              << " instances, " << r.violations << " violations; " << r.detail << "\n";
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    std::cerr << "criterion " << r.id << ": " << r.seconds << " s\n";
    std::cout.flush();
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "runtime: " << secs << " s (budget 600 s)\n";
  std::cout << "selftest: " << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparsity, direction networks and rigidity for symmetric frameworks"};
  app.require_subcommand(1);

  std::string path, cls = "laman", edges, out = "lift.svg";
  std::uint64_t seed = 1;
  int trials = 3;
  std::vector<int> box;

  auto add_path = [&](CLI::App* sub) { sub->add_option("graph", path, "colored graph file")->required(); };
  auto* check = app.add_subcommand("check", "decide a sparsity class");
  add_path(check);
  check->add_option("--class", cls, "g11, g22, laman, cone11, cone22, conelaman, gc11, gc22");
  check->add_option("--edges", edges, "restrict to these 1-indexed edge ids");

  auto* rank_cmd = app.add_subcommand("rank", "exact generic rank of the direction network");
  add_path(rank_cmd);
  rank_cmd->add_option("--seed", seed);
  rank_cmd->add_option("--trials", trials)->check(CLI::Range(1, 1000));
  rank_cmd->add_option("--edges", edges, "restrict to these 1-indexed edge ids");

  auto* realize = app.add_subcommand("realize", "realize a Laman graph from generic directions");
  add_path(realize);
  realize->add_option("--seed", seed);

  auto* render = app.add_subcommand("render", "write an SVG of the lift over a translation box");
  add_path(render);
  render->add_option("--seed", seed);
  render->add_option("--box", box, "x0 x1 y0 y1")->expected(4);
  render->add_option("--out", out);

  auto* circuit = app.add_subcommand("circuit", "find a Laman circuit");
  add_path(circuit);
  circuit->add_option("--edges", edges, "restrict to these 1-indexed edge ids");

  AcceptanceConfig cfg;
  double scale = 1.0;
  bool fault = false;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", cfg.seed);
  selftest->add_option("--max-n", cfg.max_n)->check(CLI::Range(1, 8));
  selftest->add_option("--max-m", cfg.max_m)->check(CLI::Range(1, 14));
  selftest->add_option("--scale", scale, "multiplier on instance counts")->check(CLI::PositiveNumber);
  selftest->add_option("--trials", cfg.trials)->check(CLI::Range(1, 100));
  selftest->add_flag("--inject-fault", fault, "reverse the Gamma_4 action to check the suite catches it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

  try {
    if (*selftest) {
      cfg.scale = scale;
      cfg.flip_r4 = fault;
      cfg.small_n = std::min(cfg.small_n, cfg.max_n);
      return cmd_selftest(cfg);
    }
    ColoredGraph g = read_colored_graph(path);
    if (!edges.empty()) g = restrict_edges(g, edges);
    if (*check) return cmd_check(g, echo.str(), cls);
    if (*rank_cmd) return cmd_rank(g, echo.str(), seed, trials);
    if (*realize) return cmd_realize(g, echo.str(), seed);
    if (*render) {
      if (box.empty()) box = {-2, 2, -2, 2};
      return cmd_render(g, echo.str(), seed, box, out);
    }
    if (*circuit) return cmd_circuit(g, echo.str());
  } catch (const ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
