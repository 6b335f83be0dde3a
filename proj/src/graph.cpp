#include "graphsearch/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace graphsearch {

namespace {

constexpr std::int64_t kMaxTotalWeight = std::int64_t{1} << 62;

std::vector<int> bfs_order(int n, const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> seen(n, 0);
    std::vector<int> queue{src};
    seen[static_cast<std::size_t>(src)] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int v : adj[static_cast<std::size_t>(queue[i])]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        }
    }
    return queue;
}

} // namespace

Graph Graph::undirected(int n, std::vector<Arc> edges) {
    Graph g;
    g.directed_ = false;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.arcs_.reserve(g.edges_.size() * 2);
    for (const Arc& e : g.edges_) {
        g.arcs_.push_back(e);
        g.arcs_.push_back({e.to, e.from, e.weight});
    }
    g.build_adjacency();
    g.validate();
    return g;
}

Graph Graph::directed(int n, std::vector<Arc> arcs) {
    Graph g;
    g.directed_ = true;
    g.n_ = n;
    g.edges_ = arcs;
    g.arcs_ = std::move(arcs);
    g.build_adjacency();
    g.validate();
    return g;
}

void Graph::build_adjacency() {
    out_.assign(static_cast<std::size_t>(n_), {});
    for (int id = 0; id < static_cast<int>(arcs_.size()); ++id) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        out_[static_cast<std::size_t>(a.from)].push_back(id);
    }
}

void Graph::validate() const {
    if (n_ <= 0) throw std::invalid_argument("graph must have at least one vertex");
    std::int64_t total = 0;
    std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n_));
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(n_));
    std::vector<std::pair<int, int>> seen_pairs;
    seen_pairs.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.from == a.to) throw std::invalid_argument("self-loops are not allowed");
        if (a.weight < 1) throw std::invalid_argument("arc weights must be >= 1");
        total += a.weight;
        if (total >= kMaxTotalWeight)
            throw std::invalid_argument("total edge weight exceeds 2^62; rejected to keep distances exact");
        fwd[static_cast<std::size_t>(a.from)].push_back(a.to);
        rev[static_cast<std::size_t>(a.to)].push_back(a.from);
        seen_pairs.emplace_back(a.from, a.to);
    }
    std::sort(seen_pairs.begin(), seen_pairs.end());
    if (std::adjacent_find(seen_pairs.begin(), seen_pairs.end()) != seen_pairs.end())
        throw std::invalid_argument("parallel arcs are not allowed");
    if (n_ == 1) return;
    if (static_cast<int>(bfs_order(n_, fwd, 0).size()) != n_)
        throw std::invalid_argument(directed_ ? "directed graph is not strongly connected"
                                              : "undirected graph is not connected");
    if (directed_ && static_cast<int>(bfs_order(n_, rev, 0).size()) != n_)
        throw std::invalid_argument("directed graph is not strongly connected");
}

std::optional<int> Graph::find_arc(int u, int v) const {
    for (int id : out_arcs(u))
        if (arc(id).to == v) return id;
    return std::nullopt;
}

bool Graph::unit_weights() const {
    return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.weight == 1; });
}

std::span<const double> DistanceMatrix::row_d(int u) const {
    std::call_once(dist_d_once_, [this] {
        dist_d_.resize(dist_.size());
        for (std::size_t i = 0; i < dist_.size(); ++i)
            dist_d_[i] = static_cast<double>(dist_[i]);
    });
    return {dist_d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
}

CandidateSet CandidateSet::full(int n) {
    CandidateSet s(n);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    if (n % 64) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
}

CandidateSet CandidateSet::of(int n, std::initializer_list<int> members) {
    CandidateSet s(n);
    for (int v : members) s.add(v);
    return s;
}

int CandidateSet::size() const {
    int count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
}

bool CandidateSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int CandidateSet::first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
}

void CandidateSet::intersect_with(const CandidateSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

int CandidateSet::intersection_size(const CandidateSet& other) const {
    int count = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        count += std::popcount(words_[i] & other.words_[i]);
    return count;
}

std::vector<int> CandidateSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return {g ? num / g : num, g ? den / g : den};
}

bool rational_less(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

DistanceMatrix dijkstra_all_pairs(const Graph& graph) {
    const int n = graph.vertex_count();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(n) * n,
                                   std::numeric_limits<std::int64_t>::max());
    const bool unit = graph.unit_weights();
    for (int src = 0; src < n; ++src) {
        auto* row = dist.data() + static_cast<std::size_t>(src) * n;
        if (unit) {
            std::vector<int> queue{src};
            row[src] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                const int u = queue[i];
                for (int id : graph.out_arcs(u)) {
                    const int v = graph.arc(id).to;
                    if (row[v] == std::numeric_limits<std::int64_t>::max()) {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        } else {
            using Item = std::pair<std::int64_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            row[src] = 0;
            heap.emplace(0, src);
            while (!heap.empty()) {
                const auto [d, u] = heap.top();
                heap.pop();
                if (d != row[u]) continue;
                for (int id : graph.out_arcs(u)) {
                    const Arc& a = graph.arc(id);
                    const std::int64_t nd = d + a.weight;
                    if (nd < row[a.to]) {
                        row[a.to] = nd;
                        heap.emplace(nd, a.to);
                    }
                }
            }
        }
    }
    return {n, std::move(dist)};
}

CandidateSet reach(const Graph& graph, const DistanceMatrix& dist, int u, int arc_id) {
    const Arc& a = graph.arc(arc_id);
    if (a.from != u) throw std::invalid_argument("reach: arc is not out of the queried vertex");
    const int n = graph.vertex_count();
    CandidateSet s(n);
    const auto du = dist.row(u);
    const auto dv = dist.row(a.to);
    for (int w = 0; w < n; ++w)
        if (du[static_cast<std::size_t>(w)] == a.weight + dv[static_cast<std::size_t>(w)]) s.add(w);
    return s;
}

CandidateSet reach_dist(const Graph& graph, const DistanceMatrix& dist, int u, int arc_id,
                        std::int64_t ell) {
    const Arc& a = graph.arc(arc_id);
    if (a.from != u) throw std::invalid_argument("reach_dist: arc is not out of the queried vertex");
    if (ell < 0) throw std::invalid_argument("reach_dist: negative distance");
    const int n = graph.vertex_count();
    CandidateSet s(n);
    const auto du = dist.row(u);
    const auto dv = dist.row(a.to);
    for (int w = 0; w < n; ++w)
        if (du[static_cast<std::size_t>(w)] == ell &&
            du[static_cast<std::size_t>(w)] == a.weight + dv[static_cast<std::size_t>(w)])
            s.add(w);
    return s;
}

GraphMetadata metadata(const Graph& graph, const DistanceMatrix& dist) {
    GraphMetadata meta;
    meta.n = graph.vertex_count();
    meta.m = graph.edge_count();
    for (int u = 0; u < meta.n; ++u) meta.max_degree = std::max(meta.max_degree, graph.out_degree(u));
    for (int u = 0; u < meta.n; ++u)
        for (std::int64_t d : dist.row(u)) meta.diameter = std::max(meta.diameter, d);
    // c = max over arcs e=(u,v,w) of (w + d(v,u)) / w, kept exact: the
    // (c-1)/c shrink checks must not round.
    Rational best = Rational::of(0, 1);
    for (const Arc& a : graph.arcs()) {
        const Rational r = Rational::of(a.weight + dist.at(a.to, a.from), a.weight);
        if (rational_less(best, r)) best = r;
    }
    if (meta.n > 1) meta.cycle_constant = best;
    return meta;
}

namespace {

std::vector<std::string> read_payload_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

} // namespace

Graph read_graph(std::istream& in) {
    const auto lines = read_payload_lines(in);
    if (lines.empty()) throw std::runtime_error("graph file: missing header line");
    std::istringstream header(lines[0]);
    std::string kind;
    int n = 0, m = 0;
    if (!(header >> kind >> n >> m) || (kind != "directed" && kind != "undirected"))
        throw std::runtime_error("graph file: header must be 'directed|undirected <n> <m>'");
    if (static_cast<int>(lines.size()) - 1 != m)
        throw std::runtime_error("graph file: edge count does not match header");
    std::vector<Arc> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        std::istringstream row(lines[static_cast<std::size_t>(i)]);
        Arc a;
        if (!(row >> a.from >> a.to >> a.weight))
            throw std::runtime_error("graph file: bad edge line '" + lines[static_cast<std::size_t>(i)] + "'");
        edges.push_back(a);
    }
    return kind == "directed" ? Graph::directed(n, std::move(edges))
                              : Graph::undirected(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const Graph& graph, std::ostream& out) {
    out << (graph.is_directed() ? "directed " : "undirected ") << graph.vertex_count() << ' '
        << graph.edge_count() << '\n';
    for (const Arc& e : graph.edges())
        out << e.from << ' ' << e.to << ' ' << e.weight << '\n';
}

std::string graph_to_text(const Graph& graph) {
    std::ostringstream out;
    write_graph(graph, out);
    return out.str();
}

} // namespace graphsearch
