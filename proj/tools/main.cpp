#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tokenswap/analysis.hpp"
#include "tokenswap/graph.hpp"
#include "tokenswap/io.hpp"
#include "tokenswap/par_reduction.hpp"
#include "tokenswap/seq_reduction.hpp"
#include "tokenswap/solvers.hpp"
#include "tokenswap/star_sts.hpp"

namespace {

using nlohmann::json;
using namespace tokenswap;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    write_file(out_path, text);
  }
}

std::uint64_t fnv1a(const std::vector<long long>& values) {
  std::uint64_t h = 1469598103934665603ull;
  for (long long v : values) {
    auto u = static_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (u >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

StarSTSInstance random_star_sts(int m, int n, std::uint64_t seed) {
  if (n < m) {
    throw std::invalid_argument("need n >= m so every slot can appear");
  }
  std::mt19937_64 rng(seed);
  StarSTSInstance sts;
  sts.m = m;
  for (;;) {
    sts.sequence.clear();
    for (int j = 0; j < n; ++j) {
      std::uniform_int_distribution<int> pick(1, m);
      int s = pick(rng);
      while (!sts.sequence.empty() && s == sts.sequence.back()) s = pick(rng);
      sts.sequence.push_back(s);
    }
    std::vector<char> seen(m + 1, 0);
    for (int s : sts.sequence) seen[s] = 1;
    bool all = true;
    for (int i = 1; i <= m; ++i) all = all && seen[i];
    if (all) break;
  }
  sts.target.resize(m + 1);
  for (int i = 0; i <= m; ++i) sts.target[i] = i;
  for (int i = m; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(sts.target[i], sts.target[pick(rng)]);
  }
  sts.validate();
  return sts;
}

// Stats record shared by all solvers; the vaughan-only fields are null
// elsewhere.
json stats_record(long long cost) {
  return json{{"cost", cost},
              {"happy_swaps", nullptr},
              {"shoves", nullptr},
              {"D_initial", nullptr},
              {"D_trace_checksum", nullptr}};
}

json vaughan_stats(const SequentialInstance& instance, const VaughanResult& result) {
  std::vector<long long> trace = potential_trace(instance, result);
  json stats = stats_record(static_cast<long long>(result.sequence.swaps.size()));
  stats["happy_swaps"] = result.happy_swaps;
  stats["shoves"] = result.shoves;
  stats["D_initial"] = result.initial_potential;
  stats["D_trace_checksum"] = fnv1a(trace);
  return stats;
}

int run_generate(const std::string& kind, int k, int b, int m, int n,
                 std::uint64_t seed, const std::string& perm,
                 const std::string& out_path) {
  if (kind == "tkb") {
    emit(out_path, to_json(generate_tkb(k, b).instance));
  } else if (kind == "star-sts") {
    emit(out_path, to_json(random_star_sts(m, n, seed)));
  } else if (kind == "path") {
    Configuration target;
    std::stringstream ss(perm);
    for (std::string part; std::getline(ss, part, ',');) target.push_back(std::stoi(part));
    if (static_cast<int>(target.size()) != n) {
      throw std::invalid_argument("permutation length does not match --n");
    }
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(make_edge(v - 1, v));
    Configuration start(n);
    for (int v = 0; v < n; ++v) start[v] = v;
    SequentialInstance instance{Tree(n, std::move(edges)), std::move(start),
                                std::move(target), std::nullopt, std::nullopt};
    instance.validate();
    emit(out_path, to_json(instance));
  }
  return kExitYes;
}

int run_reduce(const std::string& kind, const std::string& in_path, int k,
               int k_prime, const std::string& out_path,
               const std::string& witness_path, int sts_cap) {
  std::string text = read_file(in_path);
  if (kind == "wppsg2") {
    emit(out_path, to_json(reduce_wppsg2_to_star_sts(parse_wppsg2_json(text))));
    return kExitYes;
  }
  StarSTSInstance sts = parse_star_sts_json(text);
  if (kind == "weighted") {
    GadgetInstance g = build_weighted_instance(sts);
    emit(out_path, to_json(g));
    if (!witness_path.empty()) {
      auto sol = solve_star_sts(sts, sts_cap);
      if (sol) {
        write_file(witness_path, to_json(intended_weighted_solution(sts, *sol, g)));
      } else {
        std::cerr << "no star sts solution; witness not written\n";
      }
    }
  } else if (kind == "unweighted") {
    GadgetInstance g = build_unweighted_instance(sts, k, k_prime);
    emit(out_path, to_json(g));
    if (!witness_path.empty()) {
      auto sol = solve_star_sts(sts, sts_cap);
      if (sol) {
        write_file(witness_path, to_json(intended_unweighted(g, sts, *sol)));
      } else {
        std::cerr << "no star sts solution; witness not written\n";
      }
    }
  } else if (kind == "parallel") {
    ParallelGadgetInstance pg = build_parallel_instance(sts);
    emit(out_path, to_json(pg));
    if (!witness_path.empty()) {
      auto sol = solve_star_sts(sts, sts_cap);
      if (sol) {
        write_file(witness_path, to_json(forward_parallel_solution(pg, *sol)));
      } else {
        std::cerr << "no star sts solution; witness not written\n";
      }
    }
  }
  return kExitYes;
}

int run_solve(const std::string& algo, const std::string& in_path,
              const std::string& out_path, const std::string& stats_path,
              int bfs_cap) {
  SequentialInstance instance = parse_sequential_json(read_file(in_path));
  SwapSequence witness;
  json stats;
  if (algo == "bfs") {
    ExactResult result = exact_opt(instance, bfs_cap);
    witness = std::move(result.witness);
    stats = stats_record(result.cost);
  } else if (algo == "path") {
    long long cost = exact_path(instance);
    stats = stats_record(cost);
    // Bubble sort along the path meets the inversion count exactly.
    const int n = instance.tree.vertex_count();
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n && order.empty(); ++v) {
      if (instance.tree.degree(v) <= 1) order.push_back(v);
    }
    while (static_cast<int>(order.size()) < n) {
      Vertex cur = order.back();
      Vertex prev = order.size() > 1 ? order[order.size() - 2] : -1;
      for (Vertex nb : instance.tree.neighbors(cur)) {
        if (nb != prev) {
          order.push_back(nb);
          break;
        }
      }
    }
    std::vector<int> final_index(n), relative(n);
    for (int i = 0; i < n; ++i) final_index[instance.target[order[i]]] = i;
    for (int i = 0; i < n; ++i) relative[i] = final_index[instance.start[order[i]]];
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (relative[i] > relative[i + 1]) {
          witness.swaps.push_back(make_edge(order[i], order[i + 1]));
          std::swap(relative[i], relative[i + 1]);
          swapped = true;
        }
      }
    }
  } else if (algo == "star") {
    ExactResult result = exact_star(instance);
    witness = std::move(result.witness);
    stats = stats_record(result.cost);
  } else if (algo == "vaughan") {
    VaughanResult result = vaughan_solve(instance);
    stats = vaughan_stats(instance, result);
    witness = std::move(result.sequence);
  } else if (algo == "happy-swap") {
    witness = happy_swap_solve(instance);
    stats = stats_record(static_cast<long long>(witness.swaps.size()));
  }
  emit(out_path, to_json(witness));
  if (!stats_path.empty()) write_file(stats_path, stats.dump(2));
  std::cerr << "cost " << stats["cost"] << "\n";
  return kExitYes;
}

int run_verify(const std::string& instance_path, const std::string& witness_path) {
  AnyInstance instance = parse_instance_json(read_file(instance_path));
  AnyWitness witness = parse_witness_json(read_file(witness_path));
  SolutionCheck check;
  if (std::holds_alternative<SequentialInstance>(instance)) {
    check = is_solution(std::get<SequentialInstance>(instance),
                        std::get<SwapSequence>(witness));
  } else {
    check = is_solution(std::get<ParallelInstance>(instance),
                        std::get<RoundSchedule>(witness));
  }
  if (check.yes()) {
    std::cout << "yes (cost " << check.cost << ")\n";
    return kExitYes;
  }
  std::cout << "no(" << check.reason << ")\n";
  return kExitNo;
}

int run_analyze(const std::string& kind, const std::string& instance_path,
                const std::string& witness_path, const std::string& out_path) {
  if (kind == "straying") {
    SequentialInstance instance = parse_sequential_json(read_file(instance_path));
    auto witness = std::get<SwapSequence>(parse_witness_json(read_file(witness_path)));
    StrayingReport report = straying_radius(instance, witness);
    emit(out_path, json{{"per_token_radius", report.per_token_radius},
                        {"overall", report.overall}}
                       .dump(2));
  } else if (kind == "contrary") {
    GadgetInstance g = parse_gadget_json(read_file(instance_path));
    auto witness = std::get<SwapSequence>(parse_witness_json(read_file(witness_path)));
    ContraryMoveReport report = contrary_moves(g, witness);
    emit(out_path, json{{"per_token", report.per_token},
                        {"total", report.total},
                        {"total_moves", report.total_moves}}
                       .dump(2));
  } else if (kind == "exchange") {
    GadgetInstance g = parse_gadget_json(read_file(instance_path));
    auto witness = std::get<SwapSequence>(parse_witness_json(read_file(witness_path)));
    emit(out_path, json{{"chi", exchange_sequence(g, witness).chi}}.dump(2));
  } else if (kind == "potential") {
    SequentialInstance instance = parse_sequential_json(read_file(instance_path));
    VaughanResult result = vaughan_solve(instance);
    emit(out_path, json{{"D", potential_trace(instance, result)}}.dump(2));
  }
  return kExitYes;
}

int run_bench(int k_from, int k_to, int k_step, int b, int bfs_cap,
              const std::string& out_path) {
  std::ostringstream csv;
  csv << "k,b,UB,vaughan_cost,happy_swaps,ratio_lower,opt_when_feasible\n";
  std::vector<std::pair<int, std::string>> rows;
  for (int k = k_from; k <= k_to; k += k_step) {
    TkbInstance tkb = generate_tkb(k, b);
    SwapSequence ub = tkb_upper_bound_solution(k, b);
    if (!is_solution(tkb.instance, ub).yes()) {
      throw std::logic_error("upper-bound solution failed verification");
    }
    VaughanResult vaughan = vaughan_solve(tkb.instance);
    if (!is_solution(tkb.instance, vaughan.sequence).yes()) {
      throw std::logic_error("vaughan solution failed verification");
    }
    std::ostringstream row;
    double ratio = static_cast<double>(vaughan.sequence.swaps.size()) /
                   static_cast<double>(ub.swaps.size());
    row << k << "," << b << "," << ub.swaps.size() << ","
        << vaughan.sequence.swaps.size() << "," << vaughan.happy_swaps << ","
        << ratio << ",";
    if (tkb.instance.tree.vertex_count() <= bfs_cap) {
      row << exact_opt(tkb.instance, bfs_cap).cost;
    }
    rows.emplace_back(k, row.str());
  }
  std::sort(rows.begin(), rows.end());
  for (auto& [k, row] : rows) csv << row << "\n";
  emit(out_path, csv.str());
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"token swapping workbench"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "emit instances");
  generate->require_subcommand(1);
  int k = 4, b = 3, m = 2, n = 4;
  std::uint64_t seed = 1;
  std::string perm, out_path, in_path, witness_path, stats_path;
  auto* gen_tkb = generate->add_subcommand("tkb", "branch-rotation family");
  gen_tkb->add_option("--k", k, "branch length")->required();
  gen_tkb->add_option("--b", b, "branch count (odd)")->required();
  gen_tkb->add_option("-o,--out", out_path, "output file (default stdout)");
  auto* gen_sts = generate->add_subcommand("star-sts", "random star sts instance");
  gen_sts->add_option("--m", m, "slot count")->required();
  gen_sts->add_option("--n", n, "sequence length")->required();
  gen_sts->add_option("--seed", seed, "prng seed")->required();
  gen_sts->add_option("-o,--out", out_path, "output file (default stdout)");
  auto* gen_path = generate->add_subcommand("path", "path instance from a permutation");
  gen_path->add_option("--n", n, "vertex count")->required();
  gen_path->add_option("--perm", perm, "comma-separated target configuration")->required();
  gen_path->add_option("-o,--out", out_path, "output file (default stdout)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "compile reductions");
  reduce->require_subcommand(1);
  int red_k = 2, red_k_prime = 1, sts_cap = 24;
  auto add_reduce = [&](const char* name, const char* help) {
    auto* cmd = reduce->add_subcommand(name, help);
    cmd->add_option("--in", in_path, "input file")->required();
    cmd->add_option("-o,--out", out_path, "output file (default stdout)");
    return cmd;
  };
  auto* red_weighted = add_reduce("weighted", "star sts -> weighted tree instance");
  red_weighted->add_option("--with-witness", witness_path, "also write the intended witness");
  red_weighted->add_option("--sts-cap", sts_cap, "star sts enumeration cap");
  auto* red_unweighted = add_reduce("unweighted", "star sts -> segmented tree instance");
  red_unweighted->add_option("--k", red_k, "big segment length")->required();
  red_unweighted->add_option("--k-prime", red_k_prime, "padding segment length")->required();
  red_unweighted->add_option("--with-witness", witness_path, "also write the intended witness");
  red_unweighted->add_option("--sts-cap", sts_cap, "star sts enumeration cap");
  auto* red_parallel = add_reduce("parallel", "star sts -> subdivided star rounds instance");
  red_parallel->add_option("--with-witness", witness_path, "also write the forward witness");
  red_parallel->add_option("--sts-cap", sts_cap, "star sts enumeration cap");
  add_reduce("wppsg2", "wppsg2 -> star sts");

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver");
  solve->require_subcommand(1);
  int bfs_cap = 10;
  for (const char* algo : {"bfs", "path", "star", "vaughan", "happy-swap"}) {
    auto* cmd = solve->add_subcommand(algo);
    cmd->add_option("--in", in_path, "instance file")->required();
    cmd->add_option("-o,--out", out_path, "witness output (default stdout)");
    cmd->add_option("--stats", stats_path, "stats json output");
    cmd->add_option("--bfs-cap", bfs_cap, "state-space vertex cap");
  }

  // verify
  auto* verify = app.add_subcommand("verify", "check a witness against an instance");
  std::string verify_instance, verify_witness;
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("witness", verify_witness, "witness file")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "trace analytics");
  analyze->require_subcommand(1);
  for (const char* kind : {"straying", "contrary", "exchange", "potential"}) {
    auto* cmd = analyze->add_subcommand(kind);
    cmd->add_option("--instance", verify_instance, "instance/gadget file")->required();
    if (std::string(kind) != "potential") {
      cmd->add_option("--witness", verify_witness, "witness file")->required();
    }
    cmd->add_option("-o,--out", out_path, "report output (default stdout)");
  }

  // bench
  auto* bench = app.add_subcommand("bench", "benchmark tables");
  auto* bench_tkb = bench->add_subcommand("tkb", "vaughan vs upper bound over k");
  std::string k_range = "5:9:2";
  bench_tkb->add_option("--k-range", k_range, "from:to:step")->required();
  bench_tkb->add_option("--b", b, "branch count (odd)")->required();
  bench_tkb->add_option("--bfs-cap", bfs_cap, "exact oracle vertex cap");
  bench_tkb->add_option("-o,--out", out_path, "csv output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message; 0 for --help
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (generate->parsed()) {
      const std::string kind = generate->get_subcommands().front()->get_name();
      return run_generate(kind, k, b, m, n, seed, perm, out_path);
    }
    if (reduce->parsed()) {
      const std::string kind = reduce->get_subcommands().front()->get_name();
      return run_reduce(kind, in_path, red_k, red_k_prime, out_path, witness_path,
                        sts_cap);
    }
    if (solve->parsed()) {
      const std::string algo = solve->get_subcommands().front()->get_name();
      return run_solve(algo, in_path, out_path, stats_path, bfs_cap);
    }
    if (verify->parsed()) return run_verify(verify_instance, verify_witness);
    if (analyze->parsed()) {
      const std::string kind = analyze->get_subcommands().front()->get_name();
      return run_analyze(kind, verify_instance, verify_witness, out_path);
    }
    if (bench->parsed()) {
      int from = 0, to = 0, step = 1;
      char c1 = 0, c2 = 0;
      std::stringstream ss(k_range);
      if (!(ss >> from >> c1 >> to >> c2 >> step) || c1 != ':' || c2 != ':') {
        throw std::invalid_argument("--k-range must be from:to:step");
      }
      return run_bench(from, to, step, b, bfs_cap, out_path);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNo;
  }
  return kExitUsage;
}
