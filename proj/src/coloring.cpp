#include "arbor/coloring.hpp"

#include "arbor/structure.hpp"
#include "arbor/verify.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <chrono>

namespace arbor {

using detail::VertexSet;

namespace {

class VertexColoringSearch {
public:
    VertexColoringSearch(const Graph &g, bool acyclic, int k, Budget budget)
        : g_(g), acyclic_(acyclic), k_(k), budget_(budget), adj_(detail::adjacency_sets(g)), classes_(k + 1),
          color_(g.order() + 1, 0), start_(std::chrono::steady_clock::now())
    {
        // most-constrained-first static order: most already-placed neighbours
        const int n = g.order();
        std::vector<int> placed_nbrs(n + 1, 0);
        std::vector<bool> placed(n + 1, false);
        for (int step = 0; step < n; ++step) {
            Vertex best = 0;
            for (Vertex v = 1; v <= n; ++v)
                if (!placed[v] && (!best || placed_nbrs[v] > placed_nbrs[best] ||
                                   (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best))))
                    best = v;
            placed[best] = true;
            order_.push_back(best);
            for (Vertex u : g.neighbors(best))
                ++placed_nbrs[u];
        }
    }

    bool run() { return place(0, 0); }
    bool exhausted() const { return exhausted_; }
    const std::vector<int> &colors() const { return color_; }
    SearchStats stats() const
    {
        std::chrono::duration<double> t = std::chrono::steady_clock::now() - start_;
        return {nodes_, t.count()};
    }

private:
    bool allowed(Vertex v, int c) const
    {
        if (adj_[v].intersects(classes_[c]))
            return false;
        if (!acyclic_)
            return true;
        for (int other = 1; other <= k_; ++other) {
            if (other == c)
                continue;
            VertexSet nbrs = adj_[v] & classes_[other];
            if (nbrs.count() < 2)
                continue;
            VertexSet within = classes_[c] | classes_[other];
            VertexSet seen;
            bool cyclic = false;
            nbrs.for_each([&](int u) {
                if (cyclic || seen.test(u)) {
                    cyclic = true;
                    return;
                }
                seen |= detail::flood(adj_, u, within);
            });
            if (cyclic)
                return false;
        }
        return true;
    }

    bool place(std::size_t i, int used)
    {
        if (exhausted_)
            return false;
        if (++nodes_ > budget_.nodes ||
            ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > budget_.wall_time)) {
            exhausted_ = true;
            return false;
        }
        if (i == order_.size())
            return true;
        Vertex v = order_[i];
        // a fresh colour is only tried as the lowest unused one
        for (int c = 1; c <= std::min(k_, used + 1); ++c) {
            if (!allowed(v, c))
                continue;
            classes_[c].set(v);
            color_[v] = c;
            if (place(i + 1, std::max(used, c)))
                return true;
            classes_[c].reset(v);
            color_[v] = 0;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph &g_;
    bool acyclic_;
    int k_;
    Budget budget_;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> classes_;
    std::vector<int> color_;
    std::vector<Vertex> order_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

bool is_forest(const Graph &g) { return validate_edge_set(g, g.edges(), ForestClass::Forest); }

ColoringResult vertex_coloring(const Graph &g, bool acyclic, Budget budget)
{
    if (g.order() > kMaxExactVertices)
        throw InputError("exact colouring supports at most " + std::to_string(kMaxExactVertices) + " vertices");
    ColoringResult result;
    const auto kind = acyclic ? ColoringKind::AcyclicVertex : ColoringKind::ProperVertex;
    if (g.order() == 0) {
        result.status = SolveStatus::Feasible;
        result.certificate = ColoringCertificate{kind, 0, {0}, {}};
        return result;
    }
    int lb = std::max(clique_number(g), 1);
    if (acyclic && !is_forest(g))
        lb = std::max(lb, 3);
    result.lower = lb;
    result.upper = g.order();
    for (int k = lb; k <= g.order(); ++k) {
        VertexColoringSearch search(g, acyclic, k, budget);
        bool found = search.run();
        auto stats = search.stats();
        result.stats.nodes += stats.nodes;
        result.stats.seconds += stats.seconds;
        if (found) {
            result.status = SolveStatus::Feasible;
            result.value = result.lower = result.upper = k;
            result.certificate = ColoringCertificate{kind, k, search.colors(), {}};
            if (!verify_coloring(g, *result.certificate))
                throw std::logic_error("colouring search produced an invalid colouring");
            return result;
        }
        if (search.exhausted()) {
            result.status = SolveStatus::BudgetExhausted;
            result.lower = k;
            return result;
        }
    }
    throw std::logic_error("n colours always suffice");
}

} // namespace

ColoringResult chromatic_number(const Graph &g, Budget budget) { return vertex_coloring(g, false, budget); }

ColoringResult acyclic_chromatic_number(const Graph &g, Budget budget) { return vertex_coloring(g, true, budget); }

ColoringResult edge_chromatic_number(const Graph &g, Budget budget)
{
    SolveRequest req;
    req.graph = g;
    req.cls = ForestClass::Matching;
    req.mode = CoverMode::Partition;
    req.budget = budget;
    auto solved = min_cover(req);

    ColoringResult result;
    result.status = solved.status;
    result.lower = solved.lower;
    result.upper = solved.upper;
    result.stats = solved.stats;
    if (solved.status == SolveStatus::Feasible) {
        result.value = solved.k;
        ColoringCertificate col{ColoringKind::ProperEdge, solved.k, {}, {}};
        for (std::size_t i = 0; i < solved.certificate->parts.size(); ++i)
            for (auto e : solved.certificate->parts[i])
                col.edge_colors[e] = static_cast<int>(i + 1);
        result.certificate = std::move(col);
    }
    return result;
}

ColoringCertificate greedy_coloring(const Graph &g)
{
    ColoringCertificate col{ColoringKind::ProperVertex, 0, std::vector<int>(g.order() + 1, 0), {}};
    for (Vertex v : degeneracy(g).order) {
        std::vector<bool> taken(g.degree(v) + 2, false);
        for (Vertex u : g.neighbors(v))
            if (col.vertex_colors[u] && col.vertex_colors[u] < static_cast<int>(taken.size()))
                taken[col.vertex_colors[u]] = true;
        int c = 1;
        while (taken[c])
            ++c;
        col.vertex_colors[v] = c;
        col.colors = std::max(col.colors, c);
    }
    return col;
}

} // namespace arbor
