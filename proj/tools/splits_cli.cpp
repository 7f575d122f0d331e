#include <cstdio>
#include <iostream>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "splits/chwsr.hpp"
#include "splits/io.hpp"
#include "splits/leaves_fpt.hpp"
#include "splits/path_dp.hpp"

namespace {

using namespace splits;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParsedObject load(const std::string& path, ParsedObject::Kind want, const char* what) {
  ParsedObject obj = parse_instance(slurp(path));
  if (obj.kind != want) throw std::runtime_error(path + ": expected a " + what + " file");
  return obj;
}

WeightedTree path_as_tree(const PathSolution& sol) {
  WeightedTree t;
  t.n = static_cast<int>(sol.ordering.size());
  t.weight = sol.ordering;
  for (int i = 0; i + 1 < t.n; ++i) t.edges.push_back(make_edge(i, i + 1));
  return t;
}

int cmd_solve(const std::string& algo, const std::string& shape, int max_degree,
              const std::string& file) {
  ParsedObject obj = load(file, ParsedObject::Wsr, "wsr instance");
  Instance& inst = obj.instance;
  if (shape == "path") inst.shape = Shape::path;
  if (shape == "caterpillar") inst.shape = Shape::caterpillar;
  if (max_degree > 0) inst.max_degree = max_degree;

  if (algo == "path-dp") {
    inst.shape = Shape::path;
    auto sol = solve_path_dp(inst);
    if (!sol) return kInfeasible;
    WeightedTree t = path_as_tree(*sol);
    std::cout << emit_tree(t, compute_splits(t));
    return kOk;
  }
  if (algo == "leaves-fpt") {
    for (Value w : inst.weights)
      if (w != 1) throw std::invalid_argument("leaves-fpt requires unit weights");
    auto sol = solve_leaves_fpt(inst.splits, static_cast<int>(inst.weights.size()));
    if (!sol) return kInfeasible;
    Verdict v = validate(inst, sol->first);
    if (!v.ok) return kInfeasible;  // shape/degree restriction not met by the witness
    std::cout << emit_tree(sol->first, sol->second);
    return kOk;
  }
  // exact
  auto sol = solve_exact(inst);
  if (!sol) return kInfeasible;
  std::cout << emit_tree(sol->first, sol->second);
  return kOk;
}

int cmd_splits(const std::string& file) {
  ParsedObject obj = load(file, ParsedObject::Tree, "tree");
  std::cout << emit_splits(split_multiset(obj.tree));
  return kOk;
}

int cmd_wiener(const std::string& file) {
  ParsedObject obj = parse_instance(slurp(file));
  Value total, result;
  if (obj.kind == ParsedObject::Tree) {
    total = total_weight(obj.tree);
    result = wiener_from_splits(split_multiset(obj.tree), total);
  } else if (obj.kind == ParsedObject::Wsr) {
    total = 0;
    for (Value w : obj.instance.weights) total = checked_add(total, w);
    result = wiener_from_splits(obj.instance.splits, total);
  } else {
    throw std::runtime_error("wiener takes a tree or wsr file");
  }
  std::cout << result << "\n";
  return kOk;
}

int cmd_verify(const std::string& instance_file, const std::string& tree_file) {
  ParsedObject inst = load(instance_file, ParsedObject::Wsr, "wsr instance");
  ParsedObject tree = load(tree_file, ParsedObject::Tree, "tree");
  Verdict v = validate(inst.instance, tree.tree);
  if (v.ok) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& why : v.violations) std::cout << why << "\n";
  return kInfeasible;
}

int cmd_verify_schedule(const std::string& scd_file, const std::string& sched_file) {
  ParsedObject scd = load(scd_file, ParsedObject::Scd, "scd instance");
  ParsedObject sched = load(sched_file, ParsedObject::Sched, "schedule");
  Verdict v = verify_schedule(scd.scd, sched.schedule);
  if (v.ok) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& why : v.violations) std::cout << why << "\n";
  return kInfeasible;
}

int cmd_realize(const std::string& mode, const std::string& file) {
  ParsedObject obj = load(file, ParsedObject::Splits, "splits");
  if (mode == "chwsr") {
    auto [tree, assignment] = realize_chwsr(obj.splits);
    std::cout << emit_tree(tree, assignment);
    return kOk;
  }
  auto result = realize_sr_unit(obj.splits);
  if (!result) {
    std::cout << "condition not met\n";
    return kInfeasible;
  }
  std::cout << emit_tree(result->first, result->second);
  return kOk;
}

int cmd_reduce(const std::string& from, const std::string& to, const std::string& file) {
  ParsedObject obj = parse_instance(slurp(file));
  if (from == "scd" && to == "wsr2") {
    if (obj.kind != ParsedObject::Scd) throw std::runtime_error("expected an scd file");
    auto [inst, trace] = scd_to_wsr2(obj.scd);
    if (trace.early_no)
      for (const auto& why : trace.verdict.violations)
        std::cerr << "note: trivially infeasible: " << why << "\n";
    std::cout << emit_instance(inst);
    return kOk;
  }
  if (from == "dnmts" && to == "scd") {
    if (obj.kind != ParsedObject::Dnmts) throw std::runtime_error("expected a dnmts file");
    auto [scd, trace] = dnmts_to_scd(obj.nmts);
    std::cout << emit_scd(scd);
    return kOk;
  }
  if (from == "nmts" && to == "sr3") {
    if (obj.kind != ParsedObject::Nmts && obj.kind != ParsedObject::Dnmts)
      throw std::runtime_error("expected an nmts file");
    auto [inst, trace] = nmts_to_sr3(obj.nmts);
    std::cout << emit_instance(inst);
    return kOk;
  }
  if (from == "wsr2" && to == "caterpillar") {
    if (obj.kind != ParsedObject::Wsr) throw std::runtime_error("expected a wsr file");
    auto [inst, trace] = wsr2_to_caterpillar(obj.instance);
    std::cout << emit_instance(inst);
    return kOk;
  }
  throw std::runtime_error("unsupported reduction " + from + " -> " + to);
}

int cmd_gen(const std::string& family, int m, Value max_value, std::uint64_t seed,
            bool solvable) {
  NmtsInstance inst = gen_nmts(family == "dnmts", m, max_value, seed, solvable);
  std::cout << emit_nmts(inst);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-weighted tree reconstruction from split multisets"};
  app.require_subcommand(1);

  std::string algo = "exact", shape = "any", mode = "chwsr", from, to, family = "nmts";
  std::string file, file2;
  int max_degree = 0, m = 1;
  Value max_value = 10;
  std::uint64_t seed = 1;
  bool solvable = false;

  auto* solve = app.add_subcommand("solve", "reconstruct a tree for a wsr instance");
  solve->add_option("--algo", algo)->check(CLI::IsMember({"path-dp", "leaves-fpt", "exact"}));
  solve->add_option("--shape", shape)->check(CLI::IsMember({"any", "path", "caterpillar"}));
  solve->add_option("--max-degree", max_degree);
  solve->add_option("file", file)->required();

  auto* splits_cmd = app.add_subcommand("splits", "print the split multiset of a tree");
  splits_cmd->add_option("file", file)->required();

  auto* wiener = app.add_subcommand("wiener", "Wiener index from splits");
  wiener->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "check a tree against an instance");
  verify->add_option("instance", file)->required();
  verify->add_option("tree", file2)->required();

  auto* vsched = app.add_subcommand("verify-schedule", "check a schedule against an scd instance");
  vsched->add_option("instance", file)->required();
  vsched->add_option("schedule", file2)->required();

  auto* realize = app.add_subcommand("realize", "build a tree realizing a split multiset");
  realize->add_option("--mode", mode)->check(CLI::IsMember({"chwsr", "sr-unit"}));
  realize->add_option("file", file)->required();

  auto* reduce = app.add_subcommand("reduce", "apply a hardness reduction");
  reduce->add_option("--from", from)->required()->check(
      CLI::IsMember({"scd", "dnmts", "nmts", "wsr2"}));
  reduce->add_option("--to", to)->required()->check(
      CLI::IsMember({"wsr2", "scd", "sr3", "caterpillar"}));
  reduce->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "generate a matching instance");
  gen->add_option("--family", family)->check(CLI::IsMember({"dnmts", "nmts"}));
  gen->add_option("--m", m)->required();
  gen->add_option("--max-value", max_value)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_flag("--solvable", solvable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(algo, shape, max_degree, file);
    if (splits_cmd->parsed()) return cmd_splits(file);
    if (wiener->parsed()) return cmd_wiener(file);
    if (verify->parsed()) return cmd_verify(file, file2);
    if (vsched->parsed()) return cmd_verify_schedule(file, file2);
    if (realize->parsed()) return cmd_realize(mode, file);
    if (reduce->parsed()) return cmd_reduce(from, to, file);
    if (gen->parsed()) return cmd_gen(family, m, max_value, seed, solvable);
  } catch (const splits::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
