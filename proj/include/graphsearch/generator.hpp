#pragma once

#include "graphsearch/graph.hpp"

#include <cstdint>
#include <string>

namespace graphsearch {

enum class Family {
    Path,
    Star,
    CompleteBinaryTree,
    RandomTree,
    Grid,
    ErConnected,
    DirectedCycle,
    NestCycle,
    RandomStronglyConnected,
};

Family family_from_name(const std::string& name);
std::string family_name(Family family);

// Deterministic, seeded instance construction: the same spec always
// yields the same graph byte-for-byte in the text format.
struct GeneratorSpec {
    Family family = Family::Path;
    int n = 0;             // vertex count (Path, Star, CompleteBinaryTree, RandomTree,
                           // DirectedCycle, ErConnected, RandomStronglyConnected)
    int max_degree = 0;    // RandomTree cap, 0 = unbounded
    int width = 0;         // Grid
    int height = 0;        // Grid
    int m = 0;             // ErConnected / RandomStronglyConnected edge count
    int cycle_order = 0;   // NestCycle c (>= 2)
    int depth = 0;         // NestCycle k (>= 0)
    std::uint64_t seed = 0;
    std::int64_t wmax = 1; // weights drawn uniformly from [1, wmax]

    std::string id() const; // stable label, e.g. "path-8" or "er-64-128-s7"
};

Graph generate(const GeneratorSpec& spec);

} // namespace graphsearch
