#include "graphsearch/generator.hpp"

#include "graphsearch/rng.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graphsearch {

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "star") return Family::Star;
    if (name == "cbt") return Family::CompleteBinaryTree;
    if (name == "random-tree") return Family::RandomTree;
    if (name == "grid") return Family::Grid;
    if (name == "er") return Family::ErConnected;
    if (name == "directed-cycle") return Family::DirectedCycle;
    if (name == "nest-cycle") return Family::NestCycle;
    if (name == "random-sc") return Family::RandomStronglyConnected;
    throw std::invalid_argument("unknown graph family: " + name);
}

std::string family_name(Family family) {
    switch (family) {
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::CompleteBinaryTree: return "cbt";
    case Family::RandomTree: return "random-tree";
    case Family::Grid: return "grid";
    case Family::ErConnected: return "er";
    case Family::DirectedCycle: return "directed-cycle";
    case Family::NestCycle: return "nest-cycle";
    case Family::RandomStronglyConnected: return "random-sc";
    }
    return "?";
}

std::string GeneratorSpec::id() const {
    std::ostringstream out;
    out << family_name(family);
    switch (family) {
    case Family::Path:
    case Family::Star:
    case Family::CompleteBinaryTree:
    case Family::DirectedCycle:
        out << '-' << n;
        break;
    case Family::RandomTree:
        out << '-' << n << '-' << max_degree << "-s" << seed;
        break;
    case Family::Grid:
        out << '-' << width << 'x' << height;
        break;
    case Family::ErConnected:
    case Family::RandomStronglyConnected:
        out << '-' << n << '-' << m << "-s" << seed;
        break;
    case Family::NestCycle:
        out << '-' << cycle_order << '-' << depth;
        break;
    }
    if (wmax > 1) out << "-w" << wmax;
    return out.str();
}

namespace {

constexpr int kConnectivityRetries = 1000;

std::int64_t draw_weight(Rng& rng, std::int64_t wmax) {
    return wmax <= 1 ? 1 : 1 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(wmax)));
}

void apply_weights(std::vector<Arc>& edges, std::uint64_t seed, std::int64_t wmax) {
    if (wmax <= 1) return;
    Rng rng(mix_seed(seed, 0x77));
    for (Arc& e : edges) e.weight = draw_weight(rng, wmax);
}

Graph make_path(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<Arc> edges;
    for (int i = 0; i + 1 < spec.n; ++i) edges.push_back({i, i + 1, 1});
    apply_weights(edges, spec.seed, spec.wmax);
    return Graph::undirected(spec.n, std::move(edges));
}

Graph make_star(const GeneratorSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("star: n must be >= 2");
    std::vector<Arc> edges;
    for (int i = 1; i < spec.n; ++i) edges.push_back({0, i, 1});
    apply_weights(edges, spec.seed, spec.wmax);
    return Graph::undirected(spec.n, std::move(edges));
}

Graph make_cbt(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("cbt: n must be >= 1");
    std::vector<Arc> edges;
    for (int i = 1; i < spec.n; ++i) edges.push_back({(i - 1) / 2, i, 1});
    apply_weights(edges, spec.seed, spec.wmax);
    return Graph::undirected(spec.n, std::move(edges));
}

Graph make_random_tree(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("random-tree: n must be >= 1");
    if (spec.max_degree == 1 && spec.n > 2)
        throw std::invalid_argument("random-tree: max degree 1 only admits n <= 2");
    Rng rng(mix_seed(spec.seed, 0x7e));
    std::vector<int> degree(static_cast<std::size_t>(spec.n), 0);
    std::vector<int> eligible{0};
    std::vector<Arc> edges;
    for (int v = 1; v < spec.n; ++v) {
        const std::size_t pick = rng.next_below(eligible.size());
        const int parent = eligible[pick];
        edges.push_back({parent, v, 1});
        if (++degree[static_cast<std::size_t>(parent)] ==
            (spec.max_degree > 0 ? spec.max_degree : spec.n)) {
            eligible[pick] = eligible.back();
            eligible.pop_back();
        }
        degree[static_cast<std::size_t>(v)] = 1;
        if (spec.max_degree == 0 || spec.max_degree > 1) eligible.push_back(v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    apply_weights(edges, spec.seed, spec.wmax);
    return Graph::undirected(spec.n, std::move(edges));
}

Graph make_grid(const GeneratorSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw std::invalid_argument("grid: width and height must be >= 1");
    std::vector<Arc> edges;
    auto id = [&](int r, int c) { return r * spec.width + c; };
    for (int r = 0; r < spec.height; ++r)
        for (int c = 0; c < spec.width; ++c) {
            if (c + 1 < spec.width) edges.push_back({id(r, c), id(r, c + 1), 1});
            if (r + 1 < spec.height) edges.push_back({id(r, c), id(r + 1, c), 1});
        }
    std::sort(edges.begin(), edges.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    apply_weights(edges, spec.seed, spec.wmax);
    return Graph::undirected(spec.width * spec.height, std::move(edges));
}

Graph make_er(const GeneratorSpec& spec) {
    const std::int64_t max_m = static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2;
    if (spec.n < 2 || spec.m < spec.n - 1 || spec.m > max_m)
        throw std::invalid_argument("er: need n >= 2 and n-1 <= m <= n(n-1)/2");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(max_m));
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) pairs.emplace_back(u, v);
    for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
        Rng rng(mix_seed(spec.seed, 0xe0 + static_cast<std::uint64_t>(attempt)));
        // Partial Fisher-Yates: the first m entries are a uniform sample.
        for (int i = 0; i < spec.m; ++i) {
            const std::size_t j = i + rng.next_below(pairs.size() - static_cast<std::size_t>(i));
            std::swap(pairs[static_cast<std::size_t>(i)], pairs[j]);
        }
        std::vector<Arc> edges;
        edges.reserve(static_cast<std::size_t>(spec.m));
        for (int i = 0; i < spec.m; ++i)
            edges.push_back({pairs[static_cast<std::size_t>(i)].first,
                             pairs[static_cast<std::size_t>(i)].second, 1});
        std::sort(edges.begin(), edges.end(),
                  [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
        apply_weights(edges, spec.seed, spec.wmax);
        try {
            return Graph::undirected(spec.n, std::move(edges));
        } catch (const std::invalid_argument&) {
            // not connected; retry with the next derived stream
        }
    }
    throw std::runtime_error("er: exhausted connectivity retries");
}

Graph make_directed_cycle(const GeneratorSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("directed-cycle: n must be >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < spec.n; ++i) arcs.push_back({i, (i + 1) % spec.n, 1});
    return Graph::directed(spec.n, std::move(arcs));
}

Graph make_nest_cycle(const GeneratorSpec& spec) {
    const int c = spec.cycle_order;
    const int k = spec.depth;
    if (c < 2 || k < 0) throw std::invalid_argument("nest-cycle: need c >= 2 and k >= 0");
    std::int64_t n = 1;
    for (int i = 0; i < k; ++i) {
        n *= c;
        if (n > 1'000'000) throw std::invalid_argument("nest-cycle: c^k too large");
    }
    // c^(k-1)-sized copies laid out copy-major; each level adds a directed
    // c-cycle through the lowest-id vertex of each copy.
    std::vector<Arc> arcs;
    std::int64_t block = 1;
    for (int level = 1; level <= k; ++level) {
        const std::int64_t parent_block = block * c;
        for (std::int64_t base = 0; base + parent_block <= n; base += parent_block)
            for (int i = 0; i < c; ++i) {
                const int from = static_cast<int>(base + i * block);
                const int to = static_cast<int>(base + ((i + 1) % c) * block);
                arcs.push_back({from, to, 1});
            }
        block = parent_block;
    }
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    return Graph::directed(static_cast<int>(n), std::move(arcs));
}

Graph make_random_sc(const GeneratorSpec& spec) {
    const std::int64_t max_m = static_cast<std::int64_t>(spec.n) * (spec.n - 1);
    if (spec.n < 2 || spec.m < spec.n || spec.m > max_m)
        throw std::invalid_argument("random-sc: need n >= 2 and n <= m <= n(n-1)");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(max_m));
    for (int u = 0; u < spec.n; ++u)
        for (int v = 0; v < spec.n; ++v)
            if (u != v) pairs.emplace_back(u, v);
    for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
        Rng rng(mix_seed(spec.seed, 0x5c + static_cast<std::uint64_t>(attempt)));
        for (int i = 0; i < spec.m; ++i) {
            const std::size_t j = i + rng.next_below(pairs.size() - static_cast<std::size_t>(i));
            std::swap(pairs[static_cast<std::size_t>(i)], pairs[j]);
        }
        std::vector<Arc> arcs;
        arcs.reserve(static_cast<std::size_t>(spec.m));
        for (int i = 0; i < spec.m; ++i)
            arcs.push_back({pairs[static_cast<std::size_t>(i)].first,
                            pairs[static_cast<std::size_t>(i)].second, 1});
        std::sort(arcs.begin(), arcs.end(),
                  [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
        apply_weights(arcs, spec.seed, spec.wmax);
        try {
            return Graph::directed(spec.n, std::move(arcs));
        } catch (const std::invalid_argument&) {
            // not strongly connected; retry
        }
    }
    throw std::runtime_error("random-sc: exhausted connectivity retries");
}

} // namespace

Graph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
    case Family::Path: return make_path(spec);
    case Family::Star: return make_star(spec);
    case Family::CompleteBinaryTree: return make_cbt(spec);
    case Family::RandomTree: return make_random_tree(spec);
    case Family::Grid: return make_grid(spec);
    case Family::ErConnected: return make_er(spec);
    case Family::DirectedCycle: return make_directed_cycle(spec);
    case Family::NestCycle: return make_nest_cycle(spec);
    case Family::RandomStronglyConnected: return make_random_sc(spec);
    }
    throw std::logic_error("unreachable");
}

} // namespace graphsearch
