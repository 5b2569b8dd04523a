#include "arbor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace arbor {

Edge make_edge(Vertex a, Vertex b)
{
    if (a == b)
        throw InputError("loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(Edge e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    if (n < 0)
        throw InputError("negative vertex count");
    for (auto &e : edges_) {
        e = make_edge(e.u, e.v);
        if (e.u < 1 || e.v > n)
            throw InputError("edge " + to_string(e) + " outside 1.." + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw InputError("duplicate edge " + to_string(*dup));

    adjacency_.assign(n + 1, {});
    incident_.assign(n + 1, {});
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        auto [u, v] = edges_[id];
        adjacency_[u].push_back(v);
        incident_[u].push_back(id);
        adjacency_[v].push_back(u);
        incident_[v].push_back(id);
    }
    for (Vertex v = 1; v <= n; ++v) {
        auto &adj = adjacency_[v];
        auto &inc = incident_[v];
        std::vector<std::size_t> perm(adj.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return adj[a] < adj[b]; });
        std::vector<Vertex> sorted_adj;
        std::vector<std::size_t> sorted_inc;
        sorted_adj.reserve(adj.size());
        sorted_inc.reserve(adj.size());
        for (auto p : perm) {
            sorted_adj.push_back(adj[p]);
            sorted_inc.push_back(inc[p]);
        }
        adj = std::move(sorted_adj);
        inc = std::move(sorted_inc);
    }
}

int Graph::max_degree() const
{
    int best = 0;
    for (Vertex v = 1; v <= n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const
{
    if (!contains(a) || !contains(b) || a == b)
        return std::nullopt;
    const auto &adj = adjacency_[a];
    auto it = std::lower_bound(adj.begin(), adj.end(), b);
    if (it == adj.end() || *it != b)
        return std::nullopt;
    return incident_[a][static_cast<std::size_t>(it - adj.begin())];
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    std::vector<Vertex> relabel(n_ + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (!contains(keep[i]))
            throw InputError("vertex " + std::to_string(keep[i]) + " not in graph");
        relabel[keep[i]] = static_cast<Vertex>(i + 1);
    }
    std::vector<Edge> kept;
    for (auto [u, v] : edges_)
        if (relabel[u] && relabel[v])
            kept.push_back(make_edge(relabel[u], relabel[v]));
    return Graph(static_cast<int>(keep.size()), std::move(kept));
}

} // namespace arbor
