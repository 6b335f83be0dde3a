#pragma once

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphsearch {

struct Arc {
    int from = 0;
    int to = 0;
    std::int64_t weight = 1;
};

// Positively integer-weighted (di)graph. Undirected graphs are stored as
// symmetric arc pairs so one code path serves both orientations; vertex
// ids are 0..n-1. Construction validates weights, (strong) connectivity,
// and the load-time overflow bound on the total weight.
class Graph {
public:
    static Graph undirected(int n, std::vector<Arc> edges);
    static Graph directed(int n, std::vector<Arc> arcs);

    bool is_directed() const { return directed_; }
    int vertex_count() const { return n_; }
    // Logical edge count: undirected edges counted once.
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    const Arc& arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }
    std::span<const Arc> arcs() const { return arcs_; }
    // Edges as given at construction (one record per undirected edge).
    std::span<const Arc> edges() const { return edges_; }
    // Ids of arcs leaving u, ascending by arc id.
    std::span<const int> out_arcs(int u) const { return out_[static_cast<std::size_t>(u)]; }
    int out_degree(int u) const { return static_cast<int>(out_[static_cast<std::size_t>(u)].size()); }

    // Arc id of u->v, if present.
    std::optional<int> find_arc(int u, int v) const;

    bool unit_weights() const;
    bool is_tree() const { return !directed_ && edge_count() == n_ - 1; }

private:
    Graph() = default;
    void build_adjacency();
    void validate() const;

    bool directed_ = false;
    int n_ = 0;
    std::vector<Arc> edges_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
};

// Exact all-pairs shortest distances. Immutable after construction; the
// double mirror used by the weighted-median hot loop is materialized
// lazily and is safe to share across threads.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<std::int64_t> dist)
        : n_(n), dist_(std::move(dist)) {}

    int n() const { return n_; }
    std::int64_t at(int u, int v) const {
        return dist_[static_cast<std::size_t>(u) * n_ + v];
    }
    std::span<const std::int64_t> row(int u) const {
        return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }
    // Same row converted to double, built once on first use.
    std::span<const double> row_d(int u) const;

private:
    int n_;
    std::vector<std::int64_t> dist_;
    mutable std::vector<double> dist_d_;
    mutable std::once_flag dist_d_once_;
};

// Set S of vertices still consistent with all responses (bitset semantics).
class CandidateSet {
public:
    CandidateSet() = default;
    explicit CandidateSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
    static CandidateSet full(int n);
    static CandidateSet of(int n, std::initializer_list<int> members);

    int universe() const { return n_; }
    bool contains(int v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    }
    void add(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const;
    bool empty() const;
    int first() const; // lowest member id, -1 if empty

    void intersect_with(const CandidateSet& other);
    int intersection_size(const CandidateSet& other) const;

    std::vector<int> to_vector() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int bit = __builtin_ctzll(w);
                f(static_cast<int>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Exact nonnegative rational, normalized with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};
bool rational_less(const Rational& a, const Rational& b);

struct GraphMetadata {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    std::int64_t diameter = 0;
    // Smallest factor such that every arc e lies on a cycle of total
    // weight <= c * w(e). Exactly 2 for undirected graphs.
    std::optional<Rational> cycle_constant;
};

DistanceMatrix dijkstra_all_pairs(const Graph& graph);

// Vertices w such that arc e=(u,v) lies on a shortest u-w path:
// d(u,w) == w(e) + d(v,w), tested with exact integer equality.
CandidateSet reach(const Graph& graph, const DistanceMatrix& dist, int u, int arc_id);
// Subset of reach(u,e) at distance exactly ell from u.
CandidateSet reach_dist(const Graph& graph, const DistanceMatrix& dist, int u, int arc_id,
                        std::int64_t ell);

GraphMetadata metadata(const Graph& graph, const DistanceMatrix& dist);

// Line-oriented text format, `#` comments ignored:
//   directed|undirected <n> <m>
//   <u> <v> <w>          (m lines, 0-based ids; undirected edges once)
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& graph, std::ostream& out);
std::string graph_to_text(const Graph& graph);

} // namespace graphsearch
