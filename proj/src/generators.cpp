#include "arbor/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace arbor {

namespace {

void require(bool ok, const std::string &message)
{
    if (!ok)
        throw InputError(message);
}

} // namespace

Graph complete(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int m, int n)
{
    require(m >= 1 && n >= 1, "complete bipartite graph needs both sides >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= m; ++u)
        for (Vertex v = m + 1; v <= m + n; ++v)
            edges.push_back({u, v});
    return Graph(m + n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int> &part_sizes)
{
    std::vector<int> part_of;
    part_of.push_back(-1);
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        require(part_sizes[p] >= 1, "multipartite parts must be nonempty");
        part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
    }
    int n = static_cast<int>(part_of.size()) - 1;
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (part_of[u] != part_of[v])
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({v, v + 1});
    edges.push_back({1, n});
    return Graph(n, std::move(edges));
}

Graph path(int n)
{
    require(n >= 1, "path needs n >= 1");
    return path_power(n, 1);
}

Graph path_power(int n, int power)
{
    require(n >= 1 && power >= 1, "path power needs n >= 1 and power >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= std::min(n, u + power); ++v)
            edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

DoubleWheel double_wheel(int l)
{
    require(l >= 3, "double wheel needs a rim of length >= 3");
    DoubleWheel dw;
    dw.hub_x = l + 1;
    dw.hub_y = l + 2;
    std::vector<Edge> edges;
    auto &roles = dw.labeled.roles;
    roles.assign(l + 3, "");
    for (Vertex v = 1; v <= l; ++v) {
        dw.rim.push_back(v);
        roles[v] = "rim:" + std::to_string(v);
        edges.push_back(make_edge(v, v % l + 1));
        edges.push_back({v, dw.hub_x});
        edges.push_back({v, dw.hub_y});
    }
    roles[dw.hub_x] = "hub:x";
    roles[dw.hub_y] = "hub:y";
    dw.labeled.graph = Graph(l + 2, std::move(edges));
    return dw;
}

GkGraph gk(int k)
{
    require(k >= 3, "G_k is only generated for k >= 3");
    GkGraph out;
    out.k = k;
    const int path_len = k * (k - 1) * (k - 1);
    const int block_count = k * (k - 1) / 2;
    const int block_len = 2 * (k - 1);
    out.path_vertices = path_len;

    std::vector<Edge> edges = path_power(path_len, k - 1).edges();
    std::vector<std::string> roles(path_len + 1);
    Vertex next = path_len + 1;

    for (int b = 0; b < block_count; ++b) {
        GkBlock block;
        Vertex first = b * block_len + 1;
        for (int pos = 1; pos <= block_len; ++pos) {
            Vertex v = first + pos - 1;
            bool prime = pos <= k - 2 || pos == k;
            (prime ? block.prime : block.double_prime).push_back(v);
            roles[v] = "h1:" + std::to_string(v) + ":block" + std::to_string(b + 1) +
                       (prime ? ":prime" : ":dprime");
        }
        block.w_prime = next++;
        block.w_double_prime = next++;
        roles.push_back("w:block" + std::to_string(b + 1) + ":prime");
        roles.push_back("w:block" + std::to_string(b + 1) + ":dprime");
        for (Vertex v : block.prime)
            edges.push_back({v, block.w_prime});
        for (Vertex v : block.double_prime)
            edges.push_back({v, block.w_double_prime});
        out.blocks.push_back(std::move(block));
    }

    const Vertex h2_last = next - 1;
    out.hanging.assign(h2_last + 1, {});
    for (Vertex host = 1; host <= h2_last; ++host) {
        std::vector<Vertex> clique{host};
        for (int i = 0; i < k - 1; ++i) {
            out.hanging[host].push_back(next);
            clique.push_back(next++);
            roles.push_back("hang:" + std::to_string(host));
        }
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t c = a + 1; c < clique.size(); ++c)
                edges.push_back(make_edge(clique[a], clique[c]));
    }

    out.labeled.graph = Graph(next - 1, std::move(edges));
    out.labeled.roles = std::move(roles);
    return out;
}

Prop2Gadget prop2_gadget(int k)
{
    require(k >= 2, "the cover/partition gadget needs k >= 2");
    Prop2Gadget out;
    const int copy = 2 * k + 1;
    std::vector<Edge> edges;
    std::vector<std::string> roles(2 * copy + 1);
    for (int c = 0; c < 2; ++c) {
        Vertex base = c * copy;
        for (Vertex a = 1; a <= k; ++a) {
            roles[base + a] = "copy" + std::to_string(c + 1) + ":small";
            for (Vertex b = k + 1; b <= copy; ++b)
                edges.push_back({base + a, base + b});
        }
        for (Vertex b = k + 1; b <= copy; ++b)
            roles[base + b] = "copy" + std::to_string(c + 1) + ":large";
    }
    out.bridge = {k + 1, copy + k + 1};
    edges.push_back(out.bridge);
    roles[out.bridge.u] += ":bridge";
    roles[out.bridge.v] += ":bridge";
    out.labeled.graph = Graph(2 * copy, std::move(edges));
    out.labeled.roles = std::move(roles);
    return out;
}

LabeledGraph planar_ia_gadget()
{
    auto center = double_wheel(5);
    auto spoke = double_wheel(7);
    std::vector<Edge> edges = center.labeled.graph.edges();
    std::vector<std::string> roles(8);
    for (Vertex v = 1; v <= 7; ++v)
        roles[v] = "center:" + center.labeled.roles[v];

    Vertex next = 8;
    for (Vertex vi = 1; vi <= 7; ++vi) {
        // hub x of the copy is identified with vi, the other 8 vertices are fresh
        std::vector<Vertex> map(10, 0);
        for (Vertex w = 1; w <= 9; ++w) {
            if (w == spoke.hub_x) {
                map[w] = vi;
                continue;
            }
            map[w] = next++;
            roles.push_back("spoke" + std::to_string(vi) + ":" + spoke.labeled.roles[w]);
        }
        for (auto [u, v] : spoke.labeled.graph.edges())
            edges.push_back(make_edge(map[u], map[v]));
    }
    return {Graph(next - 1, std::move(edges)), std::move(roles)};
}

namespace {

// Saturating arithmetic for the size guard.
std::int64_t sat_mul(std::int64_t a, std::int64_t b)
{
    constexpr auto cap = std::int64_t{1} << 62;
    if (a != 0 && b > cap / a)
        return cap;
    return a * b;
}

std::int64_t sat_binomial(std::int64_t n, int r)
{
    std::int64_t result = 1;
    for (int i = 1; i <= r; ++i) {
        result = sat_mul(result, n - r + i);
        result /= i;
    }
    return result;
}

std::int64_t ipow(std::int64_t base, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r = sat_mul(r, base);
    return r;
}

} // namespace

DegenerateLowerBound degenerate_lb_graph(int d, std::optional<std::int64_t> n_override)
{
    require(d >= 2, "degenerate lower-bound graph needs d >= 2");
    DegenerateLowerBound out;
    out.d = d;
    const std::int64_t faithful_n = sat_mul(ipow(2, d), ipow(d, d + 1));
    out.n_b = n_override.value_or(faithful_n);
    out.faithful = !n_override || *n_override == faithful_n;
    require(out.n_b >= d, "N must be at least d");

    const auto subsets = sat_binomial(out.n_b, d);
    const auto total = d + out.n_b + sat_mul(subsets, out.n_b);
    if (total > kMaxGeneratedVertices)
        throw InputError("degenerate lower-bound graph for d=" + std::to_string(d) + ", N=" +
                         std::to_string(out.n_b) + " has " + std::to_string(total) +
                         " vertices, above the generator limit of " + std::to_string(kMaxGeneratedVertices));

    const int nb = static_cast<int>(out.n_b);
    std::vector<Edge> edges;
    std::vector<std::string> roles(1);
    for (int i = 1; i <= d; ++i)
        roles.push_back("a:" + std::to_string(i));
    for (int i = 1; i <= nb; ++i)
        roles.push_back("b:" + std::to_string(i));
    for (Vertex a = 1; a <= d; ++a)
        for (Vertex b = d + 1; b <= d + nb; ++b)
            edges.push_back({a, b});

    Vertex next = d + nb + 1;
    std::vector<int> subset(d);
    std::iota(subset.begin(), subset.end(), 0);
    std::int64_t index = 0;
    while (true) {
        ++index;
        for (int j = 0; j < nb; ++j) {
            roles.push_back("bs:" + std::to_string(index));
            for (int s : subset)
                edges.push_back({d + 1 + s, next});
            ++next;
        }
        // lexicographic successor of the d-subset
        int i = d - 1;
        while (i >= 0 && subset[i] == nb - d + i)
            --i;
        if (i < 0)
            break;
        ++subset[i];
        for (int j = i + 1; j < d; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    out.labeled.graph = Graph(next - 1, std::move(edges));
    out.labeled.roles = std::move(roles);
    return out;
}

Graph subdivide_once(const Graph &g)
{
    const int n = g.order();
    std::vector<Edge> edges;
    for (std::size_t id = 0; id < g.size(); ++id) {
        Vertex mid = n + 1 + static_cast<Vertex>(id);
        edges.push_back({g.edge(id).u, mid});
        edges.push_back({g.edge(id).v, mid});
    }
    return Graph(n + static_cast<int>(g.size()), std::move(edges));
}

Graph random_degenerate(int n, int d, std::uint64_t seed)
{
    require(n >= 1 && d >= 0, "random degenerate graph needs n >= 1, d >= 0");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> label(n + 1);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin() + 1, label.end(), rng);

    std::vector<Edge> edges;
    std::vector<Vertex> earlier;
    for (Vertex v = 2; v <= n; ++v) {
        earlier.resize(v - 1);
        std::iota(earlier.begin(), earlier.end(), 1);
        std::shuffle(earlier.begin(), earlier.end(), rng);
        int take = std::min(d, v - 1);
        for (int i = 0; i < take; ++i)
            edges.push_back(make_edge(label[earlier[i]], label[v]));
    }
    return Graph(n, std::move(edges));
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed)
{
    require(n >= 1, "random graph needs n >= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

namespace {

std::string rooted_code(const Graph &t, Vertex root, Vertex parent)
{
    std::vector<std::string> children;
    for (Vertex c : t.neighbors(root))
        if (c != parent)
            children.push_back(rooted_code(t, c, root));
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto &c : children)
        code += c;
    return code + ")";
}

std::string tree_code(const Graph &t)
{
    const int n = t.order();
    if (n <= 2)
        return rooted_code(t, 1, 0);
    std::vector<int> deg(n + 1);
    std::vector<Vertex> layer;
    for (Vertex v = 1; v <= n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1)
            layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next_layer;
        for (Vertex leaf : layer)
            for (Vertex u : t.neighbors(leaf))
                if (--deg[u] == 1)
                    next_layer.push_back(u);
        layer = std::move(next_layer);
    }
    std::string best;
    for (Vertex c : layer) {
        auto code = rooted_code(t, c, 0);
        if (best.empty() || code < best)
            best = code;
    }
    return best;
}

} // namespace

std::vector<Graph> free_trees(int n)
{
    require(n >= 1, "trees need n >= 1");
    std::map<std::string, Graph> level{{tree_code(Graph(1, {})), Graph(1, {})}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> grown;
        for (const auto &[code, t] : level) {
            for (Vertex v = 1; v < size; ++v) {
                auto edges = t.edges();
                edges.push_back({v, size});
                Graph bigger(size, std::move(edges));
                grown.try_emplace(tree_code(bigger), std::move(bigger));
            }
        }
        level = std::move(grown);
    }
    std::vector<Graph> out;
    for (auto &[code, t] : level)
        out.push_back(std::move(t));
    return out;
}

std::vector<Graph> all_graphs_up_to_isomorphism(int n)
{
    require(n >= 1 && n <= 6, "exhaustive graph enumeration supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pair_index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
        pair_index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
    }

    std::vector<std::vector<int>> perm_maps;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> map(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i)
            map[i] = pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
        perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    const std::uint32_t limit = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        bool canonical = true;
        for (const auto &map : perm_maps) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1)
                    image |= 1u << map[i];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical)
            continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back({pairs[i].first + 1, pairs[i].second + 1});
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

} // namespace arbor
