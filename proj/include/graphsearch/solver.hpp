#pragma once

#include "graphsearch/graph.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace graphsearch {

// Which response set the minimax game uses.
enum class QueryModel { VertexQuery, VertexQueryDirected, DistanceInformed, EdgeQueryTree };

QueryModel query_model_from_name(const std::string& name);
std::string query_model_name(QueryModel model);

// Memoized map from candidate set (bitmask over vertex ids, canonical
// key) to the optimal worst-case query count.
struct OptTable {
    std::unordered_map<std::uint32_t, int> memo;
    int root_value = 0;
};

// OPT(S) = 0 if |S| <= 1, else min over queries q of 1 + max over
// responses consistent with some candidate of OPT of the surviving set.
// The adversary commits lazily: the max ranges over overlapping response
// sets, mirroring adversarial tie-breaking among correct answers.
// Guarded to n <= 20 (state space 2^n).
int opt_queries(const Graph& graph, const DistanceMatrix& dist, QueryModel model,
                OptTable* table = nullptr);

// One optimal decision tree reconstructed from the table (queries chosen
// lowest-id first), serialized as indented text, one node per line:
//   query <q>
//     on target: <q>
//     on edge <u>-<v>[ dist <l>]:
//       ...
//   vertex <v>           (leaf: the unique remaining candidate)
// Edge-query trees use `query <u>-<v>` and `on side <u>:`.
std::string opt_strategy_tree(const Graph& graph, const DistanceMatrix& dist, QueryModel model);

} // namespace graphsearch
