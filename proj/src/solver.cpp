#include "graphsearch/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace graphsearch {

QueryModel query_model_from_name(const std::string& name) {
    if (name == "vertex") return QueryModel::VertexQuery;
    if (name == "vertex-directed") return QueryModel::VertexQueryDirected;
    if (name == "distance-informed") return QueryModel::DistanceInformed;
    if (name == "edge-tree") return QueryModel::EdgeQueryTree;
    throw std::invalid_argument("unknown query model: " + name);
}

std::string query_model_name(QueryModel model) {
    switch (model) {
    case QueryModel::VertexQuery: return "vertex";
    case QueryModel::VertexQueryDirected: return "vertex-directed";
    case QueryModel::DistanceInformed: return "distance-informed";
    case QueryModel::EdgeQueryTree: return "edge-tree";
    }
    return "?";
}

namespace {

using Mask = std::uint32_t;

struct Response {
    Mask survivors;        // S_r for the full vertex set; intersect with S at use
    int arc_id = -1;       // vertex / distance models
    std::int64_t ell = -1; // distance model
    int side = -1;         // edge-tree model
};

// All responses to one query, with survivor masks precomputed over V.
struct QueryNode {
    int queried_vertex = -1; // vertex models
    int edge_u = -1, edge_v = -1;
    std::vector<Response> responses;
};

struct Game {
    int n = 0;
    std::vector<QueryNode> queries;
    std::unordered_map<Mask, int> memo;

    int opt(Mask s) {
        if (std::popcount(s) <= 1) return 0;
        if (const auto it = memo.find(s); it != memo.end()) return it->second;
        int best = std::numeric_limits<int>::max();
        for (const QueryNode& node : queries) {
            int worst = 0;
            bool useless = false;
            for (const Response& r : node.responses) {
                const Mask child = s & r.survivors;
                if (child == 0) continue;
                if (child == s) { // no progress: querying here can never be optimal
                    useless = true;
                    break;
                }
                worst = std::max(worst, opt(child));
                if (1 + worst >= best) break;
            }
            if (!useless) best = std::min(best, 1 + worst);
        }
        memo.emplace(s, best);
        return best;
    }
};

Game build_game(const Graph& graph, const DistanceMatrix& dist, QueryModel model) {
    const int n = graph.vertex_count();
    if (n > 20) throw std::invalid_argument("exact solver is limited to n <= 20");
    switch (model) {
    case QueryModel::VertexQuery:
        if (graph.is_directed())
            throw std::invalid_argument("vertex model expects an undirected graph");
        break;
    case QueryModel::VertexQueryDirected:
        if (!graph.is_directed())
            throw std::invalid_argument("vertex-directed model expects a directed graph");
        break;
    case QueryModel::DistanceInformed:
        break;
    case QueryModel::EdgeQueryTree:
        if (!graph.is_tree()) throw std::invalid_argument("edge-tree model expects a tree");
        break;
    }

    Game game;
    game.n = n;
    auto set_to_mask = [](const CandidateSet& s) {
        Mask m = 0;
        s.for_each([&](int v) { m |= Mask{1} << v; });
        return m;
    };

    if (model == QueryModel::EdgeQueryTree) {
        for (const Arc& e : graph.edges()) {
            QueryNode node;
            node.edge_u = e.from;
            node.edge_v = e.to;
            Mask side_u = 0;
            for (int t = 0; t < n; ++t)
                if (on_side_of_tree(graph, e.from, e.to, t)) side_u |= Mask{1} << t;
            node.responses.push_back({side_u, -1, -1, e.from});
            node.responses.push_back({static_cast<Mask>(((n == 32 ? 0 : Mask{1} << n) - 1) & ~side_u),
                                      -1, -1, e.to});
            game.queries.push_back(std::move(node));
        }
        return game;
    }

    for (int q = 0; q < n; ++q) {
        QueryNode node;
        node.queried_vertex = q;
        for (int id : graph.out_arcs(q)) {
            if (model == QueryModel::DistanceInformed) {
                const CandidateSet full = reach(graph, dist, q, id);
                std::map<std::int64_t, Mask> by_dist;
                full.for_each([&](int w) { by_dist[dist.at(q, w)] |= Mask{1} << w; });
                for (const auto& [ell, mask] : by_dist)
                    node.responses.push_back({mask, id, ell, -1});
            } else {
                node.responses.push_back({set_to_mask(reach(graph, dist, q, id)), id, -1, -1});
            }
        }
        game.queries.push_back(std::move(node));
    }
    return game;
}

} // namespace

// Declared here to keep the Game helper self-contained; uses the oracle
// module's component split.
bool on_side_of_tree(const Graph& tree, int u, int v, int t);

int opt_queries(const Graph& graph, const DistanceMatrix& dist, QueryModel model,
                OptTable* table) {
    Game game = build_game(graph, dist, model);
    const Mask all = game.n == 32 ? ~Mask{0} : (Mask{1} << game.n) - 1;
    const int value = game.opt(all);
    if (table) {
        table->memo = std::move(game.memo);
        table->memo.emplace(all, value);
        table->root_value = value;
    }
    return value;
}

namespace {

void render_tree(Game& game, const Graph& graph, Mask s, int depth, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (std::popcount(s) == 1) {
        out << pad << "vertex " << std::countr_zero(s) << '\n';
        return;
    }
    const int value = game.opt(s);
    // Lowest-id query achieving the optimum.
    const QueryNode* chosen = nullptr;
    for (const QueryNode& node : game.queries) {
        int worst = 0;
        bool useless = false;
        for (const Response& r : node.responses) {
            const Mask child = s & r.survivors;
            if (child == 0) continue;
            if (child == s) {
                useless = true;
                break;
            }
            worst = std::max(worst, game.opt(child));
        }
        if (!useless && 1 + worst == value) {
            chosen = &node;
            break;
        }
    }
    if (chosen->queried_vertex >= 0) {
        const int q = chosen->queried_vertex;
        out << pad << "query " << q << '\n';
        if (s & (Mask{1} << q)) out << pad << "  on target: " << q << '\n';
        for (const Response& r : chosen->responses) {
            const Mask child = s & r.survivors;
            if (child == 0) continue;
            const Arc& a = graph.arc(r.arc_id);
            out << pad << "  on edge " << a.from << '-' << a.to;
            if (r.ell >= 0) out << " dist " << r.ell;
            out << ":\n";
            render_tree(game, graph, child, depth + 2, out);
        }
    } else {
        out << pad << "query " << chosen->edge_u << '-' << chosen->edge_v << '\n';
        for (const Response& r : chosen->responses) {
            const Mask child = s & r.survivors;
            if (child == 0) continue;
            out << pad << "  on side " << r.side << ":\n";
            render_tree(game, graph, child, depth + 2, out);
        }
    }
}

} // namespace

std::string opt_strategy_tree(const Graph& graph, const DistanceMatrix& dist, QueryModel model) {
    Game game = build_game(graph, dist, model);
    if (game.n == 1) return "";
    const Mask all = game.n == 32 ? ~Mask{0} : (Mask{1} << game.n) - 1;
    std::ostringstream out;
    render_tree(game, graph, all, 0, out);
    return out.str();
}

} // namespace graphsearch
