#include "graphsearch/oracle.hpp"

#include "graphsearch/rng.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace graphsearch {

std::string response_to_string(const QueryResponse& r, const Graph& graph) {
    std::ostringstream out;
    switch (r.kind) {
    case QueryResponse::Kind::Target:
        out << "target";
        break;
    case QueryResponse::Kind::Edge:
        out << "edge:" << graph.arc(r.arc_id).from << '-' << graph.arc(r.arc_id).to;
        break;
    case QueryResponse::Kind::EdgeDist:
        out << "edge:" << graph.arc(r.arc_id).from << '-' << graph.arc(r.arc_id).to << ":" << r.dist;
        break;
    case QueryResponse::Kind::Side:
        out << "side:" << r.vertex;
        break;
    }
    return out.str();
}

namespace {

std::vector<int> correct_arcs(const Graph& graph, const DistanceMatrix& dist, int q, int t) {
    std::vector<int> ids;
    for (int id : graph.out_arcs(q)) {
        const Arc& a = graph.arc(id);
        if (dist.at(q, t) == a.weight + dist.at(a.to, t)) ids.push_back(id);
    }
    return ids;
}

} // namespace

SimulatedOracle::SimulatedOracle(int target, CorrectPolicy correct_policy, double p,
                                 LiePolicy lie_policy, std::uint64_t seed)
    : target_(target), correct_policy_(correct_policy), lie_policy_(lie_policy), p_(p),
      seed_(seed) {
    if (p <= 0.5 || p > 1.0)
        throw std::invalid_argument("oracle: p must lie in (1/2, 1]");
}

QueryResponse SimulatedOracle::answer_truthful(const Graph& graph, const DistanceMatrix& dist,
                                               int q, const CandidateSet& mirror) {
    Rng rng(mix_seed(seed_, static_cast<std::uint64_t>(query_index_)));
    ++query_index_;
    if (q == target_) return QueryResponse::target(q);
    const auto ids = correct_arcs(graph, dist, q, target_);
    switch (correct_policy_) {
    case CorrectPolicy::MinEdgeId:
        return QueryResponse::edge(ids.front());
    case CorrectPolicy::SeededRandom:
        return QueryResponse::edge(ids[rng.next_below(ids.size())]);
    case CorrectPolicy::AdversarialMaxSurvivor: {
        int best = ids.front();
        int best_survivors = -1;
        for (int id : ids) {
            const int survivors = mirror.intersection_size(reach(graph, dist, q, id));
            if (survivors > best_survivors) {
                best_survivors = survivors;
                best = id;
            }
        }
        return QueryResponse::edge(best);
    }
    }
    throw std::logic_error("unreachable");
}

QueryResponse SimulatedOracle::answer_noisy(const Graph& graph, const DistanceMatrix& dist, int q,
                                            const WeightVector& mirror_weights) {
    if (p_ <= 0.5 || p_ >= 1.0)
        throw std::invalid_argument("answer_noisy: requires p in (1/2, 1)");
    Rng rng(mix_seed(seed_, static_cast<std::uint64_t>(query_index_)));
    ++query_index_;
    const bool truthful = rng.bernoulli(p_);
    if (truthful) {
        if (q == target_) return QueryResponse::target(q);
        const auto ids = correct_arcs(graph, dist, q, target_);
        switch (correct_policy_) {
        case CorrectPolicy::MinEdgeId:
            return QueryResponse::edge(ids.front());
        case CorrectPolicy::SeededRandom:
            return QueryResponse::edge(ids[rng.next_below(ids.size())]);
        case CorrectPolicy::AdversarialMaxSurvivor: {
            // Weighted analog of the survivor count: keep as much of the
            // algorithm's weight mass alive as a correct answer can.
            int best = ids.front();
            double best_mass = -1.0;
            for (int id : ids) {
                const double m = mirror_weights.mass(reach(graph, dist, q, id));
                if (m > best_mass) {
                    best_mass = m;
                    best = id;
                }
            }
            return QueryResponse::edge(best);
        }
        }
        throw std::logic_error("unreachable");
    }
    // Lie. The response set is {Target(q)} followed by the arcs out of q;
    // a lie is allowed to coincide with a correct answer.
    const auto out = graph.out_arcs(q);
    if (lie_policy_ == LiePolicy::UniformResponse) {
        const std::uint64_t pick = rng.next_below(out.size() + 1);
        if (pick == 0) return QueryResponse::target(q);
        return QueryResponse::edge(out[static_cast<std::size_t>(pick - 1)]);
    }
    // AdversarialMirrored: maximize, after the multiplicative update the
    // response implies, (total weight of V minus t) / (weight of t).
    // Ratios are compared by cross-multiplication so a zero target weight
    // falls back to the fixed response ordering.
    const double pt = p_;
    const double add_t = mirror_weights.at(target_);
    auto ratio_parts = [&](const CandidateSet& consistent, double& num, double& den) {
        const double total = pt * mirror_weights.mass(consistent) +
                             (1.0 - pt) * (1.0 - mirror_weights.mass(consistent));
        const double t_new = add_t * (consistent.contains(target_) ? pt : 1.0 - pt);
        num = total - t_new;
        den = t_new;
    };
    double best_num = 0.0, best_den = 0.0;
    QueryResponse best = QueryResponse::target(q);
    {
        CandidateSet c(graph.vertex_count());
        c.add(q);
        ratio_parts(c, best_num, best_den);
    }
    for (int id : out) {
        double num = 0.0, den = 0.0;
        ratio_parts(reach(graph, dist, q, id), num, den);
        if (num * best_den > best_num * den) {
            best_num = num;
            best_den = den;
            best = QueryResponse::edge(id);
        }
    }
    return best;
}

QueryResponse SimulatedOracle::answer_distance_informed(const Graph& graph,
                                                        const DistanceMatrix& dist, int q,
                                                        const CandidateSet& mirror) {
    Rng rng(mix_seed(seed_, static_cast<std::uint64_t>(query_index_)));
    ++query_index_;
    if (q == target_) return QueryResponse::target(q);
    const std::int64_t ell = dist.at(q, target_);
    const auto ids = correct_arcs(graph, dist, q, target_);
    switch (correct_policy_) {
    case CorrectPolicy::MinEdgeId:
        return QueryResponse::edge_dist(ids.front(), ell);
    case CorrectPolicy::SeededRandom:
        return QueryResponse::edge_dist(ids[rng.next_below(ids.size())], ell);
    case CorrectPolicy::AdversarialMaxSurvivor: {
        int best = ids.front();
        int best_survivors = -1;
        for (int id : ids) {
            const int survivors = mirror.intersection_size(reach_dist(graph, dist, q, id, ell));
            if (survivors > best_survivors) {
                best_survivors = survivors;
                best = id;
            }
        }
        return QueryResponse::edge_dist(best, ell);
    }
    }
    throw std::logic_error("unreachable");
}

bool on_side_of(const Graph& tree, int u, int v, int side, int t) {
    // BFS from `side` without crossing {u,v}.
    std::vector<char> seen(static_cast<std::size_t>(tree.vertex_count()), 0);
    std::vector<int> queue{side};
    seen[static_cast<std::size_t>(side)] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        if (x == t) return true;
        for (int id : tree.out_arcs(x)) {
            const int y = tree.arc(id).to;
            if ((x == u && y == v) || (x == v && y == u)) continue;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
    }
    return seen[static_cast<std::size_t>(t)];
}

QueryResponse SimulatedOracle::answer_edge_query(const Graph& tree, int u, int v) {
    if (!tree.find_arc(u, v) || !tree.find_arc(v, u))
        throw std::invalid_argument("answer_edge_query: edge not in tree");
    ++query_index_;
    return QueryResponse::side(on_side_of(tree, u, v, u, target_) ? u : v);
}

QueryResponse InteractiveOracle::prompt_vertex_query(const Graph& graph,
                                                     const DistanceMatrix& dist, int q,
                                                     bool with_distance) {
    ++query_index_;
    for (;;) {
        out_ << "query vertex " << q
             << (with_distance ? "  [target | edge <u> <v> dist <l>]" : "  [target | edge <u> <v>]")
             << "\n> " << std::flush;
        std::string line;
        if (!std::getline(in_, line)) throw std::runtime_error("interactive: input stream closed");
        std::istringstream parts(line);
        std::string word;
        if (!(parts >> word)) continue;
        if (word == "target") return QueryResponse::target(q);
        if (word == "edge") {
            int u = -1, v = -1;
            if (!(parts >> u >> v)) {
                out_ << "malformed edge response\n";
                continue;
            }
            if (u != q) {
                out_ << "edge must leave the queried vertex " << q << "\n";
                continue;
            }
            const auto id = graph.find_arc(u, v);
            if (!id) {
                out_ << "no arc " << u << "->" << v << " in the graph\n";
                continue;
            }
            if (!with_distance) return QueryResponse::edge(*id);
            std::string kw;
            std::int64_t ell = -1;
            if (!(parts >> kw >> ell) || kw != "dist" || ell < 0) {
                out_ << "expected: edge <u> <v> dist <l>\n";
                continue;
            }
            if (reach_dist(graph, dist, q, *id, ell).empty()) {
                out_ << "no vertex reachable through that edge at distance " << ell << "\n";
                continue;
            }
            return QueryResponse::edge_dist(*id, ell);
        }
        out_ << "expected 'target' or 'edge ...'\n";
    }
}

QueryResponse InteractiveOracle::answer_truthful(const Graph& graph, const DistanceMatrix& dist,
                                                 int q, const CandidateSet&) {
    return prompt_vertex_query(graph, dist, q, false);
}

QueryResponse InteractiveOracle::answer_noisy(const Graph& graph, const DistanceMatrix& dist,
                                              int q, const WeightVector&) {
    return prompt_vertex_query(graph, dist, q, false);
}

QueryResponse InteractiveOracle::answer_distance_informed(const Graph& graph,
                                                          const DistanceMatrix& dist, int q,
                                                          const CandidateSet&) {
    return prompt_vertex_query(graph, dist, q, true);
}

QueryResponse InteractiveOracle::answer_edge_query(const Graph& tree, int u, int v) {
    ++query_index_;
    for (;;) {
        out_ << "query edge {" << u << "," << v << "}  [side <u>]\n> " << std::flush;
        std::string line;
        if (!std::getline(in_, line)) throw std::runtime_error("interactive: input stream closed");
        std::istringstream parts(line);
        std::string word;
        int side = -1;
        if ((parts >> word >> side) && word == "side" && (side == u || side == v))
            return QueryResponse::side(side);
        out_ << "expected: side " << u << " | side " << v << "\n";
    }
}

} // namespace graphsearch
