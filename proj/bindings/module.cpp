#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tokenswap/analysis.hpp"
#include "tokenswap/graph.hpp"
#include "tokenswap/io.hpp"
#include "tokenswap/par_reduction.hpp"
#include "tokenswap/seq_reduction.hpp"
#include "tokenswap/solvers.hpp"
#include "tokenswap/star_sts.hpp"

namespace py = pybind11;
using namespace tokenswap;

namespace {

SequentialInstance make_sequential(const Tree& tree, const Configuration& start,
                                   const Configuration& target,
                                   std::optional<std::vector<int>> weights,
                                   std::optional<long long> budget) {
  SequentialInstance instance{tree, start, target, std::move(weights), budget};
  instance.validate();
  return instance;
}

py::dict check_to_dict(const SolutionCheck& check) {
  py::dict d;
  d["yes"] = check.yes();
  d["cost"] = check.cost;
  d["reason"] = check.reason;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "token swapping workbench: solvers, reductions and trace analytics";

  py::register_exception<CapacityError>(mod, "CapacityError");

  py::class_<Tree>(mod, "Tree")
      .def(py::init<int, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Tree::vertex_count)
      .def_property_readonly("edges", &Tree::edges)
      .def("distance", &Tree::distance)
      .def("path", &Tree::path);

  py::class_<SequentialInstance>(mod, "SequentialInstance")
      .def(py::init(&make_sequential), py::arg("tree"), py::arg("start"),
           py::arg("target"), py::arg("weights") = std::nullopt,
           py::arg("budget") = std::nullopt)
      .def_readonly("start", &SequentialInstance::start)
      .def_readonly("target", &SequentialInstance::target)
      .def_readonly("weights", &SequentialInstance::weights)
      .def_readonly("budget", &SequentialInstance::budget)
      .def_property_readonly("tree",
                             [](const SequentialInstance& i) { return i.tree; })
      .def("to_json", [](const SequentialInstance& i) { return to_json(i); })
      .def_static("from_json", &parse_sequential_json);

  py::class_<ParallelInstance>(mod, "ParallelInstance")
      .def_readonly("start", &ParallelInstance::start)
      .def_readonly("target", &ParallelInstance::target)
      .def_readonly("budget", &ParallelInstance::budget)
      .def_property_readonly("tree", [](const ParallelInstance& i) { return i.tree; })
      .def("to_json", [](const ParallelInstance& i) { return to_json(i); })
      .def_static("from_json", &parse_parallel_json);

  mod.def("apply_swap_sequence",
          [](const SequentialInstance& instance, const std::vector<Edge>& swaps) {
            auto [config, cost] = apply_swap_sequence(instance, SwapSequence{swaps});
            return py::make_tuple(config, cost);
          });
  mod.def("apply_round_schedule",
          [](const Tree& tree, const Configuration& start,
             const std::vector<std::vector<Edge>>& rounds) {
            return apply_round_schedule(tree, start, RoundSchedule{rounds});
          });
  mod.def("is_swap_solution",
          [](const SequentialInstance& instance, const std::vector<Edge>& swaps) {
            return check_to_dict(is_solution(instance, SwapSequence{swaps}));
          });
  mod.def("is_round_solution",
          [](const ParallelInstance& instance, const std::vector<std::vector<Edge>>& rounds) {
            return check_to_dict(is_solution(instance, RoundSchedule{rounds}));
          });
  mod.def("normalize_sequence",
          [](const SequentialInstance& instance, const std::vector<Edge>& swaps) {
            return normalize_sequence(instance, SwapSequence{swaps}).swaps;
          });
  mod.def("tree_distance", &tree_distance);

  py::class_<StarSTSInstance>(mod, "StarSTSInstance")
      .def(py::init([](int m, std::vector<int> sequence, std::vector<int> target) {
             StarSTSInstance sts{m, std::move(sequence), std::move(target)};
             sts.validate();
             return sts;
           }),
           py::arg("m"), py::arg("sequence"), py::arg("target"))
      .def_readonly("m", &StarSTSInstance::m)
      .def_readonly("sequence", &StarSTSInstance::sequence)
      .def_readonly("target", &StarSTSInstance::target)
      .def("is_normalized", &StarSTSInstance::is_normalized)
      .def("to_json", [](const StarSTSInstance& s) { return to_json(s); })
      .def_static("from_json", &parse_star_sts_json);

  mod.def("apply_subsequence",
          [](const StarSTSInstance& sts, const std::vector<bool>& chosen) {
            return apply_subsequence(sts, StarSTSSolution{chosen});
          });
  mod.def("solution_realizes_target",
          [](const StarSTSInstance& sts, const std::vector<bool>& chosen) {
            return solution_realizes_target(sts, StarSTSSolution{chosen});
          });
  mod.def(
      "solve_star_sts",
      [](const StarSTSInstance& sts, int cap) -> std::optional<std::vector<bool>> {
        auto sol = solve_star_sts(sts, cap);
        if (!sol) return std::nullopt;
        return sol->chosen;
      },
      py::arg("sts"), py::arg("cap") = 24);
  mod.def("normalize_star_sts", &normalize_star_sts);
  mod.def("reduce_wppsg2_to_star_sts",
          [](int m, const std::vector<std::pair<int, int>>& swaps,
             const std::vector<int>& target) {
            Wppsg2Instance inst{m, swaps, target};
            return reduce_wppsg2_to_star_sts(inst);
          });
  mod.def(
      "solve_wppsg2_brute_force",
      [](int m, const std::vector<std::pair<int, int>>& swaps,
         const std::vector<int>& target, int cap) {
        Wppsg2Instance inst{m, swaps, target};
        return solve_wppsg2_brute_force(inst, cap);
      },
      py::arg("m"), py::arg("swaps"), py::arg("target"), py::arg("cap") = 24);

  py::class_<GadgetInstance>(mod, "GadgetInstance")
      .def_property_readonly("instance",
                             [](const GadgetInstance& g) { return g.instance; })
      .def_property_readonly("H", [](const GadgetInstance& g) { return g.params.H; })
      .def_property_readonly("K", [](const GadgetInstance& g) { return g.params.K; })
      .def_property_readonly("weighted",
                             [](const GadgetInstance& g) { return g.params.weighted; })
      .def("to_json", [](const GadgetInstance& g) { return to_json(g); });
  mod.def("build_weighted_instance", &build_weighted_instance);
  mod.def("build_unweighted_instance", &build_unweighted_instance, py::arg("sts"),
          py::arg("k"), py::arg("k_prime"));
  mod.def("scaffold_solution",
          [](const GadgetInstance& g) { return scaffold_solution(g).swaps; });
  mod.def("intended_solution",
          [](const GadgetInstance& g, const std::vector<bool>& chosen) {
            return intended_solution(g, StarSTSSolution{chosen}).swaps;
          });

  py::class_<ParallelGadgetInstance>(mod, "ParallelGadgetInstance")
      .def_property_readonly("instance",
                             [](const ParallelGadgetInstance& g) { return g.instance; })
      .def_readonly("K", &ParallelGadgetInstance::K)
      .def("to_json", [](const ParallelGadgetInstance& g) { return to_json(g); });
  mod.def("active_branch", &active_branch);
  mod.def("build_parallel_instance", &build_parallel_instance);
  mod.def("parallel_scaffold",
          [](const ParallelGadgetInstance& pg) { return parallel_scaffold(pg).rounds; });
  mod.def("forward_parallel_solution",
          [](const ParallelGadgetInstance& pg, const std::vector<bool>& chosen) {
            return forward_parallel_solution(pg, StarSTSSolution{chosen}).rounds;
          });
  mod.def("extract_star_sts_solution",
          [](const ParallelGadgetInstance& pg, const std::vector<std::vector<Edge>>& rounds) {
            return extract_star_sts_solution(pg, RoundSchedule{rounds}).chosen;
          });

  mod.def(
      "exact_opt",
      [](const SequentialInstance& instance, int cap) {
        ExactResult result = exact_opt(instance, cap);
        return py::make_tuple(result.cost, result.witness.swaps);
      },
      py::arg("instance"), py::arg("cap") = 10);
  mod.def("exact_path", &exact_path);
  mod.def("exact_star", [](const SequentialInstance& instance) {
    ExactResult result = exact_star(instance);
    return py::make_tuple(result.cost, result.witness.swaps);
  });
  mod.def("vaughan_solve", [](const SequentialInstance& instance) {
    VaughanResult result = vaughan_solve(instance);
    py::dict d;
    d["swaps"] = result.sequence.swaps;
    d["happy_swaps"] = result.happy_swaps;
    d["happy_dest_swaps"] = result.happy_dest_swaps;
    d["shoves"] = result.shoves;
    d["D_initial"] = result.initial_potential;
    d["D_trace"] = potential_trace(instance, result);
    return d;
  });
  mod.def("happy_swap_solve", [](const SequentialInstance& instance) {
    return happy_swap_solve(instance).swaps;
  });

  py::class_<TkbInstance>(mod, "TkbInstance")
      .def_readonly("k", &TkbInstance::k)
      .def_readonly("b", &TkbInstance::b)
      .def_property_readonly("instance",
                             [](const TkbInstance& t) { return t.instance; });
  mod.def("generate_tkb", &generate_tkb, py::arg("k"), py::arg("b"));
  mod.def("tkb_upper_bound_solution",
          [](int k, int b) { return tkb_upper_bound_solution(k, b).swaps; });

  mod.def("straying_radius",
          [](const SequentialInstance& instance, const std::vector<Edge>& swaps) {
            StrayingReport report = straying_radius(instance, SwapSequence{swaps});
            return py::make_tuple(report.overall, report.per_token_radius);
          });
  mod.def("contrary_moves",
          [](const GadgetInstance& g, const std::vector<Edge>& swaps) {
            ContraryMoveReport report = contrary_moves(g, SwapSequence{swaps});
            py::dict d;
            d["per_token"] = report.per_token;
            d["total"] = report.total;
            d["total_moves"] = report.total_moves;
            return d;
          });
  mod.def("exchange_sequence",
          [](const GadgetInstance& g, const std::vector<Edge>& swaps) {
            return exchange_sequence(g, SwapSequence{swaps}).chi;
          });
}
