#include "widthforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "widthforge/cobipartite.hpp"
#include "widthforge/cubic.hpp"
#include "widthforge/io.hpp"
#include "widthforge/solvers.hpp"
#include "widthforge/special.hpp"

namespace widthforge::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

void print_summary(int width, bool valid) {
  std::cout << "width=" << width << " valid=" << (valid ? "true" : "false") << '\n';
}

std::optional<int> env_budget() {
  const char* s = std::getenv("WIDTHFORGE_BUDGET");
  if (!s || !*s) return std::nullopt;
  return std::atoi(s);
}

int effective_budget(int flag_value, int fallback) {
  if (flag_value > 0) return flag_value;
  if (auto env = env_budget()) return *env;
  return fallback;
}

struct Options {
  std::string kind;
  std::string graph_file;
  std::string cert_file;
  std::string ordering_file;
  std::string output = "out";
  std::string dot_file;
  int budget = -1;
  int degree = 5;
  int wall_cols = -1;
  int rows = 0, cols = 0;
};

LinearOrdering load_or_default_ordering(const Options& opt, const Graph& g) {
  if (!opt.ordering_file.empty()) return io::parse_ordering(io::read_file(opt.ordering_file));
  LinearOrdering f;
  for (int v : g.vertices()) f.order.push_back(v);
  return f;
}

int cmd_solve(const Options& opt) {
  Graph g = io::parse_graph(io::read_file(opt.graph_file));
  if (opt.kind == "tw") {
    auto res = exact_treewidth(g, effective_budget(opt.budget, kDefaultTreewidthBudget));
    io::write_file(opt.output + ".td", io::serialize_tree_decomposition(res.decomposition, g));
    bool valid = check_tree_decomposition(g, res.decomposition).ok();
    print_summary(res.width, valid);
    return valid ? kOk : kInvalid;
  }
  if (opt.kind == "pw") {
    auto res = exact_pathwidth(g, effective_budget(opt.budget, kDefaultPathwidthBudget));
    io::write_file(opt.output + ".td", io::serialize_path_decomposition(res.decomposition, g));
    bool valid = check_path_decomposition(g, res.decomposition).ok();
    print_summary(res.width, valid);
    return valid ? kOk : kInvalid;
  }
  auto res = exact_cutwidth(g, effective_budget(opt.budget, kDefaultCutwidthBudget));
  io::write_file(opt.output + ".ord", io::serialize_ordering(res.ordering));
  bool valid = cutwidth_of_ordering(g, res.ordering) == res.width;
  print_summary(res.width, valid);
  return valid ? kOk : kInvalid;
}

int cmd_verify(const Options& opt) {
  Graph g = io::parse_graph(io::read_file(opt.graph_file));
  if (opt.kind == "ordering") {
    LinearOrdering f = io::parse_ordering(io::read_file(opt.cert_file));
    if (!is_permutation_of(g, f)) {
      std::cerr << "ordering is not a permutation of the vertex set\n";
      print_summary(-1, false);
      return kInvalid;
    }
    print_summary(cutwidth_of_ordering(g, f), true);
    return kOk;
  }
  TreeDecomposition td = io::parse_tree_decomposition(io::read_file(opt.cert_file));
  CheckResult res;
  if (opt.kind == "pd") {
    PathDecomposition pd = path_from_tree(td);
    res = check_path_decomposition(g, pd);
  } else {
    res = check_tree_decomposition(g, td);
  }
  if (!res.ok()) {
    std::cerr << res.violation->describe() << '\n';
    print_summary(res.width, false);
    return kInvalid;
  }
  print_summary(res.width, true);
  return kOk;
}

int cmd_reduce(const Options& opt) {
  Graph g = io::parse_graph(io::read_file(opt.graph_file));
  if (opt.kind == "cobipartite") {
    auto inst = cobipartite::build_instance(g);
    auto pw = exact_pathwidth(g, effective_budget(opt.budget, kDefaultPathwidthBudget));
    auto lifted = cobipartite::lift_path_decomposition(inst, g, pw.decomposition);
    io::write_file(opt.output + ".gr", io::serialize_graph(inst.graph));
    io::write_file(opt.output + ".td",
                   io::serialize_path_decomposition(lifted, inst.graph));
    if (!opt.dot_file.empty()) io::write_file(opt.dot_file, io::to_dot(inst.graph));
    bool valid = check_path_decomposition(inst.graph, lifted).ok();
    print_summary(g.vertex_count() + pw.width, valid);
    return valid ? kOk : kInvalid;
  }
  if (opt.kind == "cubic") {
    LinearOrdering f = load_or_default_ordering(opt, g);
    auto res = cubic::reduce_cutwidth_to_treewidth(g, f, opt.wall_cols);
    io::write_file(opt.output + ".gr", io::serialize_graph(res.graph));
    io::write_file(opt.output + ".td",
                   io::serialize_tree_decomposition(res.certificate, res.graph));
    if (!opt.dot_file.empty()) io::write_file(opt.dot_file, io::to_dot(res.graph));
    bool cert_ok = check_tree_decomposition(res.graph, res.certificate).ok();
    print_summary(res.target_width, res.exact_width_guaranteed);
    return cert_ok ? kOk : kInvalid;
  }
  if (opt.kind == "dregular") {
    LinearOrdering f = load_or_default_ordering(opt, g);
    Graph out;
    int target;
    bool flag;
    if (opt.degree % 2 == 1) {
      auto res = cubic::reduce_cutwidth_to_treewidth(g, f, opt.wall_cols);
      out = special::build_d_regular_instance(res.graph, opt.degree);
      target = res.target_width;
      flag = res.exact_width_guaranteed;
    } else {
      auto res = special::build_four_regular_instance(g, f, opt.wall_cols);
      out = opt.degree == 4 ? res.graph : special::build_d_regular_instance(res.graph, opt.degree);
      target = res.target_width;
      flag = res.exact_width_guaranteed;
    }
    io::write_file(opt.output + ".gr", io::serialize_graph(out));
    if (!opt.dot_file.empty()) io::write_file(opt.dot_file, io::to_dot(out));
    bool regular = is_regular(out, opt.degree);
    print_summary(target, flag);
    return regular ? kOk : kInvalid;
  }
  // grid3d
  auto emb = special::embed_3d_grid(g);
  io::write_file(opt.output + ".gr", io::serialize_graph(emb.graph));
  io::write_file(opt.output + ".xyz", io::serialize_embedding(emb));
  if (!opt.dot_file.empty()) io::write_file(opt.dot_file, io::to_dot(emb.graph));
  print_summary(-1, true);
  return kOk;
}

int cmd_roundtrip(const Options& opt) {
  Graph g = io::parse_graph(io::read_file(opt.graph_file));
  LinearOrdering f = load_or_default_ordering(opt, g);
  int before = cutwidth_of_ordering(g, f);
  auto inst = cubic::build_rep_cliques(g);
  auto pd = cubic::ordering_pathdec(inst, f);
  int width = verify_path_decomposition(inst.graph, pd);
  LinearOrdering back = cubic::extract_ordering(inst, pd.to_tree());
  int after = cutwidth_of_ordering(g, back);
  bool valid = after <= before;
  print_summary(width, valid);
  return valid ? kOk : kInvalid;
}

int cmd_wall(const Options& opt) {
  auto wall = cubic::build_brick_wall(opt.rows, opt.cols);
  auto pd = cubic::brick_wall_pathdec(wall);
  io::write_file(opt.output + ".gr", io::serialize_graph(wall.graph));
  io::write_file(opt.output + ".td",
                 io::serialize_path_decomposition(pd, wall.graph));
  if (!opt.dot_file.empty()) io::write_file(opt.dot_file, io::to_dot(wall.graph));
  auto res = check_path_decomposition(wall.graph, pd);
  print_summary(res.width, res.ok());
  return res.ok() ? kOk : kInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"graph width reduction toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* solve = app.add_subcommand("solve", "exact width of a graph, with certificate");
  solve->add_option("kind", opt.kind, "tw|pw|cw")->required()->check(CLI::IsMember({"tw", "pw", "cw"}));
  solve->add_option("graph", opt.graph_file)->required();
  solve->add_option("-o,--output", opt.output, "output file prefix");
  solve->add_option("--budget", opt.budget, "max component size for the subset DP");

  auto* verify = app.add_subcommand("verify", "check a certificate and report its width");
  verify->add_option("kind", opt.kind, "td|pd|ordering")
      ->required()
      ->check(CLI::IsMember({"td", "pd", "ordering"}));
  verify->add_option("graph", opt.graph_file)->required();
  verify->add_option("certificate", opt.cert_file)->required();

  auto* reduce = app.add_subcommand("reduce", "build a hardness instance with certificate");
  reduce->add_option("kind", opt.kind, "cobipartite|cubic|dregular|grid3d")
      ->required()
      ->check(CLI::IsMember({"cobipartite", "cubic", "dregular", "grid3d"}));
  reduce->add_option("graph", opt.graph_file)->required();
  reduce->add_option("--ordering", opt.ordering_file, "linear ordering file");
  reduce->add_option("--degree", opt.degree, "target degree for dregular");
  reduce->add_option("--wall-cols", opt.wall_cols, "override wall/grid column count");
  reduce->add_option("--budget", opt.budget, "solver budget for cobipartite");
  reduce->add_option("-o,--output", opt.output, "output file prefix");
  reduce->add_option("--dot", opt.dot_file, "also write the instance as DOT");

  auto* roundtrip = app.add_subcommand("roundtrip", "lift an ordering and extract it back");
  roundtrip->add_option("graph", opt.graph_file)->required();
  roundtrip->add_option("--ordering", opt.ordering_file);

  auto* wall = app.add_subcommand("wall", "brick wall with its column-sweep decomposition");
  wall->add_option("rows", opt.rows)->required();
  wall->add_option("cols", opt.cols)->required();
  wall->add_option("-o,--output", opt.output, "output file prefix");
  wall->add_option("--dot", opt.dot_file, "also write the wall as DOT");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (reduce->parsed()) return cmd_reduce(opt);
    if (roundtrip->parsed()) return cmd_roundtrip(opt);
    if (wall->parsed()) return cmd_wall(opt);
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const io::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const DecompositionError& e) {
    std::cerr << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}

}  // namespace widthforge::cli
