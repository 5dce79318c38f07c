#pragma once

#include <string>
#include <variant>

#include "tokenswap/graph.hpp"

namespace tokenswap {

// Instance files:
//   {"tree": {"n": int, "edges": [[u,v],...]}, "start": [...], "target": [...],
//    "weights": [...]?, "budget": int?, "mode": "sequential"|"parallel"}
// Witness files:
//   {"swaps": [[u,v],...]}  or  {"rounds": [[[u,v],...],...]}

using AnyInstance = std::variant<SequentialInstance, ParallelInstance>;
using AnyWitness = std::variant<SwapSequence, RoundSchedule>;

AnyInstance parse_instance_json(const std::string& text);
SequentialInstance parse_sequential_json(const std::string& text);
ParallelInstance parse_parallel_json(const std::string& text);

std::string to_json(const SequentialInstance& instance);
std::string to_json(const ParallelInstance& instance);

AnyWitness parse_witness_json(const std::string& text);
std::string to_json(const SwapSequence& seq);
std::string to_json(const RoundSchedule& sched);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tokenswap
