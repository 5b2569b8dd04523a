#include "arbor/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>

namespace arbor {

OrderingCertificate degeneracy(const Graph &g)
{
    const int n = g.order();
    OrderingCertificate cert;
    if (n == 0)
        return cert;

    std::vector<int> deg(n + 1);
    int max_deg = 0;
    for (Vertex v = 1; v <= n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<Vertex>> buckets(max_deg + 1);
    for (Vertex v = 1; v <= n; ++v)
        buckets[deg[v]].push_back(v);

    std::vector<bool> removed(n + 1, false);
    std::vector<Vertex> removal;
    removal.reserve(n);
    int low = 0;
    while (static_cast<int>(removal.size()) < n) {
        low = std::max(low - 1, 0);
        Vertex v = 0;
        while (!v) {
            while (buckets[low].empty())
                ++low;
            Vertex cand = buckets[low].back();
            buckets[low].pop_back();
            // stale entries are skipped lazily
            if (!removed[cand] && deg[cand] == low)
                v = cand;
        }
        removed[v] = true;
        removal.push_back(v);
        cert.d = std::max(cert.d, deg[v]);
        for (Vertex u : g.neighbors(v))
            if (!removed[u])
                buckets[--deg[u]].push_back(u);
    }
    cert.order.assign(removal.rbegin(), removal.rend());
    return cert;
}

bool is_degeneracy_ordering(const Graph &g, const OrderingCertificate &cert)
{
    const int n = g.order();
    if (static_cast<int>(cert.order.size()) != n)
        return false;
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = cert.order[i];
        if (!g.contains(v) || pos[v] != -1)
            return false;
        pos[v] = i;
    }
    for (Vertex v = 1; v <= n; ++v) {
        int earlier = 0;
        for (Vertex u : g.neighbors(v))
            earlier += pos[u] < pos[v];
        if (earlier > cert.d)
            return false;
    }
    return true;
}

bool is_perfect_elimination_order(const Graph &g, const std::vector<Vertex> &order)
{
    const int n = g.order();
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        if (!g.contains(order[i]) || pos[order[i]] != -1)
            return false;
        pos[order[i]] = i;
    }
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (Vertex u : g.neighbors(v))
            if (pos[u] > pos[v])
                later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b]))
                    return false;
    }
    return true;
}

namespace {

// Maximum cardinality search; the reverse visiting order is a perfect
// elimination order exactly when g is chordal.
std::vector<Vertex> mcs_elimination_order(const Graph &g)
{
    const int n = g.order();
    std::vector<int> weight(n + 1, 0);
    std::vector<bool> done(n + 1, false);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 1; v <= n; ++v)
        queue.emplace(0, -v);

    std::vector<Vertex> visit;
    visit.reserve(n);
    while (!queue.empty()) {
        auto it = std::prev(queue.end());
        Vertex v = -it->second;
        queue.erase(it);
        done[v] = true;
        visit.push_back(v);
        for (Vertex u : g.neighbors(v)) {
            if (done[u])
                continue;
            queue.erase({weight[u], -u});
            queue.emplace(++weight[u], -u);
        }
    }
    return {visit.rbegin(), visit.rend()};
}

// Cycle v, a, ..., b through a shortest a-b path avoiding N[v] - {a, b}.
std::vector<Vertex> find_chordless_cycle(const Graph &g)
{
    const int n = g.order();
    for (Vertex v = 1; v <= n; ++v) {
        auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                Vertex a = nbrs[i], b = nbrs[j];
                if (g.has_edge(a, b))
                    continue;
                std::vector<bool> blocked(n + 1, false);
                blocked[v] = true;
                for (Vertex u : nbrs)
                    blocked[u] = true;
                blocked[b] = false;
                std::vector<Vertex> parent(n + 1, 0);
                std::deque<Vertex> frontier{a};
                parent[a] = a;
                while (!frontier.empty() && !parent[b]) {
                    Vertex x = frontier.front();
                    frontier.pop_front();
                    for (Vertex y : g.neighbors(x)) {
                        if (blocked[y] || parent[y])
                            continue;
                        parent[y] = x;
                        frontier.push_back(y);
                    }
                }
                if (!parent[b])
                    continue;
                std::vector<Vertex> path;
                for (Vertex x = b; x != a; x = parent[x])
                    path.push_back(x);
                path.push_back(a);
                std::vector<Vertex> cycle{v};
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                return cycle;
            }
        }
    }
    return {};
}

} // namespace

ChordalityResult chordality(const Graph &g)
{
    ChordalityResult result;
    auto order = mcs_elimination_order(g);
    if (is_perfect_elimination_order(g, order)) {
        result.chordal = true;
        result.elimination_order = std::move(order);
    } else {
        result.chordless_cycle = find_chordless_cycle(g);
    }
    return result;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph &g) : g_(g) {}

    int run()
    {
        std::vector<Vertex> all;
        auto ordering = degeneracy(g_).order;
        // high-core vertices first tends to find large cliques early
        all.assign(ordering.rbegin(), ordering.rend());
        expand(all, 0);
        return best_;
    }

private:
    void expand(const std::vector<Vertex> &candidates, int size)
    {
        if (candidates.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        std::vector<Vertex> order;
        std::vector<int> bound;
        colour_sort(candidates, order, bound);
        std::vector<Vertex> remaining(order.begin(), order.end());
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best_)
                return;
            Vertex v = order[i];
            std::vector<Vertex> next;
            for (int j = 0; j < i; ++j)
                if (g_.has_edge(v, order[j]))
                    next.push_back(order[j]);
            expand(next, size + 1);
        }
    }

    void colour_sort(const std::vector<Vertex> &candidates, std::vector<Vertex> &order, std::vector<int> &bound)
    {
        std::vector<std::vector<Vertex>> classes;
        for (Vertex v : candidates) {
            auto fits = [&](const std::vector<Vertex> &cls) {
                return std::none_of(cls.begin(), cls.end(), [&](Vertex u) { return g_.has_edge(u, v); });
            };
            auto it = std::find_if(classes.begin(), classes.end(), fits);
            if (it == classes.end())
                classes.push_back({v});
            else
                it->push_back(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (Vertex v : classes[c]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(c + 1));
            }
    }

    const Graph &g_;
    int best_ = 0;
};

} // namespace

int clique_number(const Graph &g)
{
    if (g.order() == 0)
        return 0;
    return CliqueSearch(g).run();
}

int treewidth_chordal(const Graph &g)
{
    if (!chordality(g).chordal)
        throw InputError("graph is not chordal; only chordal tree-width is supported");
    return std::max(clique_number(g) - 1, 0);
}

namespace {

int ceil_ratio(std::size_t edges, std::size_t vertices)
{
    if (vertices < 2)
        return 0;
    auto denom = vertices - 1;
    return static_cast<int>((edges + denom - 1) / denom);
}

std::size_t induced_edge_count(const Graph &g, const std::vector<bool> &inside)
{
    std::size_t count = 0;
    for (auto [u, v] : g.edges())
        count += inside[u] && inside[v];
    return count;
}

} // namespace

DensityResult nash_williams_density(const Graph &g)
{
    const int n = g.order();
    DensityResult result;
    if (n <= kExactDensityMaxVertices) {
        std::vector<std::uint32_t> adj(n, 0);
        for (auto [u, v] : g.edges()) {
            adj[u - 1] |= 1u << (v - 1);
            adj[v - 1] |= 1u << (u - 1);
        }
        auto connected = [&](std::uint32_t set) {
            std::uint32_t seen = set & -set;
            std::uint32_t frontier = seen;
            while (frontier) {
                std::uint32_t next = 0;
                for (auto f = frontier; f; f &= f - 1)
                    next |= adj[std::countr_zero(f)];
                next &= set & ~seen;
                seen |= next;
                frontier = next;
            }
            return seen == set;
        };
        std::uint32_t best_set = 0;
        for (std::uint32_t set = 1; set < (1u << n); ++set) {
            int size = std::popcount(set);
            if (size < 2)
                continue;
            std::size_t twice = 0;
            for (auto s = set; s; s &= s - 1)
                twice += std::popcount(adj[std::countr_zero(s)] & set);
            int ratio = ceil_ratio(twice / 2, size);
            if (ratio > result.value && connected(set)) {
                result.value = ratio;
                best_set = set;
            }
        }
        for (int i = 0; i < n; ++i)
            if (best_set >> i & 1)
                result.witness.push_back(i + 1);
        return result;
    }

    // Too large to enumerate: every core of the peeling order and every
    // closed neighbourhood gives a valid lower bound.
    result.exact = false;
    auto consider = [&](const std::vector<bool> &inside) {
        std::size_t size = std::count(inside.begin() + 1, inside.end(), true);
        int ratio = ceil_ratio(induced_edge_count(g, inside), size);
        if (ratio > result.value) {
            result.value = ratio;
            result.witness.clear();
            for (Vertex v = 1; v <= n; ++v)
                if (inside[v])
                    result.witness.push_back(v);
        }
    };
    auto order = degeneracy(g).order;
    std::vector<bool> inside(n + 1, false);
    // suffixes of the removal order are the successive cores
    for (Vertex v : order) {
        inside[v] = true;
        if (g.degree(v) > 0)
            consider(inside);
    }
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<bool> ball(n + 1, false);
        ball[v] = true;
        for (Vertex u : g.neighbors(v))
            ball[u] = true;
        consider(ball);
    }
    return result;
}

void check_star_decomposition(const Graph &host, const StarDecomposition &dec)
{
    std::vector<int> owner(host.order() + 1, -1);
    auto claim = [&](Vertex v, int star) {
        if (!host.contains(v))
            throw InputError("star vertex " + std::to_string(v) + " is not in the host graph");
        if (owner[v] != -1)
            throw InputError("stars overlap at vertex " + std::to_string(v));
        owner[v] = star;
    };
    for (int i = 0; i < static_cast<int>(dec.stars.size()); ++i) {
        const auto &star = dec.stars[i];
        claim(star.center, i);
        for (Vertex leaf : star.leaves) {
            claim(leaf, i);
            if (!host.has_edge(star.center, leaf))
                throw InputError("leaf " + std::to_string(leaf) + " is not adjacent to centre " +
                                 std::to_string(star.center));
        }
    }
}

bool is_half_shallow_minor(const Graph &host, const Graph &minor, const StarDecomposition &dec)
{
    if (static_cast<int>(dec.stars.size()) != minor.order())
        throw InputError("need exactly one star per minor vertex");
    check_star_decomposition(host, dec);

    auto center_sees = [&](const Star &from, const Star &to) {
        if (host.has_edge(from.center, to.center))
            return true;
        return std::any_of(to.leaves.begin(), to.leaves.end(),
                           [&](Vertex leaf) { return host.has_edge(from.center, leaf); });
    };
    for (auto [i, j] : minor.edges()) {
        const auto &si = dec.stars[i - 1];
        const auto &sj = dec.stars[j - 1];
        if (!center_sees(si, sj) && !center_sees(sj, si))
            return false;
    }
    return true;
}

} // namespace arbor
