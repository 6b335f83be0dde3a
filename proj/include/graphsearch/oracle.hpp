#pragma once

#include "graphsearch/graph.hpp"
#include "graphsearch/median.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace graphsearch {

// How a truthful answer is picked when several edges are correct.
enum class CorrectPolicy { MinEdgeId, AdversarialMaxSurvivor, SeededRandom };
// What an incorrect (probability 1-p) answer looks like.
enum class LiePolicy { UniformResponse, AdversarialMirrored };

struct QueryResponse {
    enum class Kind { Target, Edge, EdgeDist, Side };
    Kind kind = Kind::Target;
    int vertex = -1;        // Target: the queried vertex; Side: the chosen endpoint
    int arc_id = -1;        // Edge / EdgeDist
    std::int64_t dist = -1; // EdgeDist

    static QueryResponse target(int q) { return {Kind::Target, q, -1, -1}; }
    static QueryResponse edge(int arc_id) { return {Kind::Edge, -1, arc_id, -1}; }
    static QueryResponse edge_dist(int arc_id, std::int64_t d) { return {Kind::EdgeDist, -1, arc_id, d}; }
    static QueryResponse side(int endpoint) { return {Kind::Side, endpoint, -1, -1}; }
    friend bool operator==(const QueryResponse&, const QueryResponse&) = default;
};

std::string response_to_string(const QueryResponse& r, const Graph& graph);

// The answer side of the query game. Strategies only see this interface,
// which also lets a human play the oracle through a terminal.
class Oracle {
public:
    virtual ~Oracle() = default;
    // mirror = the algorithm's current candidate set, handed over so an
    // adversarial oracle can pick among correct answers; it never leaks
    // the other way.
    virtual QueryResponse answer_truthful(const Graph& graph, const DistanceMatrix& dist, int q,
                                          const CandidateSet& mirror) = 0;
    virtual QueryResponse answer_noisy(const Graph& graph, const DistanceMatrix& dist, int q,
                                       const WeightVector& mirror_weights) = 0;
    virtual QueryResponse answer_distance_informed(const Graph& graph, const DistanceMatrix& dist,
                                                   int q, const CandidateSet& mirror) = 0;
    virtual QueryResponse answer_edge_query(const Graph& tree, int u, int v) = 0;
    virtual int queries_answered() const = 0;
};

// Machine oracle with a hidden target and an adversary policy. Response
// randomness is drawn from an rng derived as (seed, query index), so
// replies are reproducible independent of scheduling.
class SimulatedOracle final : public Oracle {
public:
    SimulatedOracle(int target, CorrectPolicy correct_policy, double p = 1.0,
                    LiePolicy lie_policy = LiePolicy::UniformResponse, std::uint64_t seed = 0);

    int target() const { return target_; }
    double p() const { return p_; }

    QueryResponse answer_truthful(const Graph&, const DistanceMatrix&, int q,
                                  const CandidateSet& mirror) override;
    QueryResponse answer_noisy(const Graph&, const DistanceMatrix&, int q,
                               const WeightVector& mirror_weights) override;
    QueryResponse answer_distance_informed(const Graph&, const DistanceMatrix&, int q,
                                           const CandidateSet& mirror) override;
    QueryResponse answer_edge_query(const Graph& tree, int u, int v) override;
    int queries_answered() const override { return query_index_; }

private:
    int target_;
    CorrectPolicy correct_policy_;
    LiePolicy lie_policy_;
    double p_;
    std::uint64_t seed_;
    int query_index_ = 0;
};

// Human oracle: prints each query and parses typed responses
// (`target`, `edge <u> <v>`, `edge <u> <v> dist <l>`, `side <u>`).
// Responses are validated for legality, not truthfulness; malformed or
// illegal input is re-prompted.
class InteractiveOracle final : public Oracle {
public:
    InteractiveOracle(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    QueryResponse answer_truthful(const Graph&, const DistanceMatrix&, int q,
                                  const CandidateSet&) override;
    QueryResponse answer_noisy(const Graph&, const DistanceMatrix&, int q,
                               const WeightVector&) override;
    QueryResponse answer_distance_informed(const Graph&, const DistanceMatrix&, int q,
                                           const CandidateSet&) override;
    QueryResponse answer_edge_query(const Graph& tree, int u, int v) override;
    int queries_answered() const override { return query_index_; }

private:
    QueryResponse prompt_vertex_query(const Graph& graph, const DistanceMatrix& dist, int q,
                                      bool with_distance);
    std::istream& in_;
    std::ostream& out_;
    int query_index_ = 0;
};

// True when t lies in the component of tree minus {u,v} containing `side`.
bool on_side_of(const Graph& tree, int u, int v, int side, int t);

} // namespace graphsearch
