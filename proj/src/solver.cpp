#include "arbor/solver.hpp"

#include "arbor/structure.hpp"
#include "arbor/verify.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace arbor {

using detail::adjacency_sets;
using detail::flood;
using detail::VertexSet;

std::string_view tag(SolveStatus status)
{
    switch (status) {
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

constexpr int kMaxParts = 64;

class BudgetClock {
public:
    explicit BudgetClock(Budget budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    /// Counts one search node; false once the budget is spent.
    bool tick()
    {
        if (exhausted_)
            return false;
        ++nodes_;
        if (nodes_ > budget_.nodes)
            exhausted_ = true;
        else if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > budget_.wall_time)
            exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }

    SearchStats stats() const
    {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        return {nodes_, elapsed.count()};
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

struct Limits {
    std::vector<int> cap;   // per vertex
    std::vector<int> floor; // per vertex
};

// Induced classes: a part is E(G[P]) for its vertex set P, so the search
// assigns every vertex the set of parts containing it. An edge is covered iff
// its endpoints share a part; in partition mode they share exactly one.
class MembershipSearch {
public:
    MembershipSearch(const Graph &g, ForestClass cls, CoverMode mode, int k, Limits limits, bool symmetry,
                     BudgetClock &clock)
        : g_(g), cls_(cls), mode_(mode), k_(k), limits_(std::move(limits)), symmetry_(symmetry), clock_(clock),
          adj_(adjacency_sets(g)), members_(k), mask_(g.order() + 1, 0)
    {
        has_floors_ = std::any_of(limits_.floor.begin(), limits_.floor.end(), [](int f) { return f > 0; });
        build_order();
        used_ = symmetry_ ? 0 : k_;
    }

    bool run() { return assign(0); }

    std::vector<std::vector<Edge>> parts() const
    {
        std::vector<std::vector<Edge>> out;
        for (int p = 0; p < used_; ++p) {
            std::vector<Edge> part;
            for (auto [u, v] : g_.edges())
                if (members_[p].test(u) && members_[p].test(v))
                    part.push_back({u, v});
            if (!part.empty())
                out.push_back(std::move(part));
        }
        return out;
    }

private:
    // Greedy order: next vertex has the most already-placed neighbours.
    void build_order()
    {
        const int n = g_.order();
        std::vector<int> placed_nbrs(n + 1, 0);
        std::vector<bool> placed(n + 1, false);
        for (int step = 0; step < n; ++step) {
            Vertex best = 0;
            for (Vertex v = 1; v <= n; ++v) {
                if (placed[v])
                    continue;
                if (!best || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && g_.degree(v) > g_.degree(best)))
                    best = v;
            }
            placed[best] = true;
            order_.push_back(best);
            for (Vertex u : g_.neighbors(best))
                ++placed_nbrs[u];
        }
        pos_.assign(n + 1, 0);
        for (int i = 0; i < n; ++i)
            pos_[order_[i]] = i;
        later_.assign(n + 1, 0);
        closes_.assign(n, {});
        for (Vertex v = 1; v <= n; ++v) {
            int last = pos_[v];
            for (Vertex u : g_.neighbors(v)) {
                last = std::max(last, pos_[u]);
                later_[v] += pos_[u] > pos_[v];
            }
            closes_[last].push_back(v);
        }

        // A part holds at most alpha(G[N(v)]) edges at v, since two adjacent
        // neighbours would close a triangle; an induced matching holds one.
        // Any clique partition of N(v) bounds alpha from above.
        need_.assign(n + 1, 0);
        for (Vertex v = 1; v <= n; ++v) {
            const int deg = g_.degree(v);
            if (deg == 0)
                continue;
            int per_part = 1;
            if (cls_ != ForestClass::InducedMatching) {
                std::vector<VertexSet> cliques;
                for (Vertex u : g_.neighbors(v)) {
                    auto it = std::find_if(cliques.begin(), cliques.end(),
                                           [&](const VertexSet &c) { return (adj_[u] & c) == c; });
                    if (it != cliques.end())
                        it->set(u);
                    else
                        cliques.emplace_back().set(u);
                }
                per_part = static_cast<int>(cliques.size());
            }
            need_[v] = (deg + per_part - 1) / per_part;
        }
    }

    bool can_join(Vertex v, int p) const
    {
        const VertexSet &part = members_[p];
        VertexSet nbrs = adj_[v] & part;
        if (nbrs.empty())
            return true;
        if (cls_ == ForestClass::InducedMatching) {
            if (nbrs.count() > 1)
                return false;
            return (adj_[nbrs.first()] & part).empty();
        }
        VertexSet merged;
        bool cyclic = false;
        nbrs.for_each([&](int u) {
            if (cyclic)
                return;
            if (merged.test(u)) {
                cyclic = true;
                return;
            }
            merged |= flood(adj_, u, part);
        });
        if (cyclic)
            return false;
        if (cls_ == ForestClass::InducedStarForest) {
            merged.set(v);
            int hubs = 0;
            merged.for_each([&](int x) { hubs += (adj_[x] & merged).count() >= 2; });
            return hubs <= 1;
        }
        return true;
    }

    bool assign(int i)
    {
        if (!clock_.tick())
            return false;
        const int n = g_.order();
        if (i == n)
            return true;
        const Vertex v = order_[i];

        std::uint64_t allowed = 0;
        for (int p = 0; p < used_; ++p)
            if (can_join(v, p))
                allowed |= std::uint64_t{1} << p;

        std::vector<std::uint64_t> earlier;
        for (Vertex u : g_.neighbors(v))
            if (pos_[u] < i) {
                if (!(mask_[u] & allowed))
                    return false;
                earlier.push_back(mask_[u]);
            }

        const int cap = limits_.cap[v];
        const int lo = std::max(limits_.floor[v], need_[v]);
        // Without floors some solution uses every membership for a private
        // edge, so v opens at most one part per later neighbour.
        const int max_new = !symmetry_ ? 0 : has_floors_ ? k_ - used_ : std::min(k_ - used_, later_[v]);

        // Subsets of allowed existing parts meeting every placed neighbour.
        std::vector<std::uint64_t> choices;
        for (std::uint64_t s = allowed;; s = (s - 1) & allowed) {
            bool ok = true;
            for (auto m : earlier) {
                int shared = std::popcount(s & m);
                if (shared == 0 || (mode_ == CoverMode::Partition && shared > 1)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                choices.push_back(s);
            if (s == 0)
                break;
        }
        std::stable_sort(choices.begin(), choices.end(),
                         [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });

        for (int total = lo; total <= cap; ++total) {
            for (int fresh = 0; fresh <= std::min(max_new, total); ++fresh) {
                for (auto s : choices) {
                    if (std::popcount(s) + fresh != total)
                        continue;
                    if (try_choice(i, v, s, fresh))
                        return true;
                    if (clock_.exhausted())
                        return false;
                }
            }
        }
        return false;
    }

    bool try_choice(int i, Vertex v, std::uint64_t existing, int fresh)
    {
        std::uint64_t chosen = existing;
        for (int j = 0; j < fresh; ++j)
            chosen |= std::uint64_t{1} << (used_ + j);
        for (auto bits = chosen; bits; bits &= bits - 1)
            members_[std::countr_zero(bits)].set(v);
        mask_[v] = chosen;
        used_ += fresh;

        bool ok = closed_vertices_ok(i) && assign(i + 1);

        if (!ok) {
            used_ -= fresh;
            mask_[v] = 0;
            for (auto bits = chosen; bits; bits &= bits - 1)
                members_[std::countr_zero(bits)].reset(v);
        }
        return ok;
    }

    // Once every neighbour of w is placed, each part containing w must give
    // w an edge; a solution with an isolated member stays a solution after
    // dropping it, so this loses nothing.
    bool closed_vertices_ok(int i) const
    {
        for (Vertex w : closes_[i])
            for (auto bits = mask_[w]; bits; bits &= bits - 1)
                if ((adj_[w] & members_[std::countr_zero(bits)]).empty())
                    return false;
        return true;
    }

    const Graph &g_;
    ForestClass cls_;
    CoverMode mode_;
    int k_;
    Limits limits_;
    bool symmetry_;
    BudgetClock &clock_;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> members_;
    std::vector<std::uint64_t> mask_;
    std::vector<Vertex> order_;
    std::vector<int> pos_;
    std::vector<int> later_;
    std::vector<int> need_;
    std::vector<std::vector<Vertex>> closes_;
    int used_ = 0;
    bool has_floors_ = false;
};

// Non-induced classes: every edge is given one part (partition) or a nonempty
// set of parts (cover), with the class checked incrementally per part.
class EdgeSearch {
public:
    EdgeSearch(const Graph &g, ForestClass cls, CoverMode mode, int k, Limits limits, bool symmetry,
               BudgetClock &clock)
        : g_(g), cls_(cls), mode_(mode), k_(k), limits_(std::move(limits)), symmetry_(symmetry), clock_(clock),
          adj_(adjacency_sets(g)), part_adj_(k, std::vector<VertexSet>(g.order() + 1)), part_vertices_(k),
          load_(g.order() + 1, 0), pending_(g.order() + 1, 0)
    {
        build_order();
        used_ = symmetry_ ? 0 : k_;
        for (auto [u, v] : g_.edges()) {
            ++pending_[u];
            ++pending_[v];
        }
    }

    bool run() { return assign(0); }

    std::vector<std::vector<Edge>> parts() const
    {
        std::vector<std::vector<Edge>> out(k_);
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (auto bits = chosen_[i]; bits; bits &= bits - 1)
                out[std::countr_zero(bits)].push_back(g_.edge(order_[i]));
        std::erase_if(out, [](const auto &part) { return part.empty(); });
        for (auto &part : out)
            std::sort(part.begin(), part.end());
        return out;
    }

private:
    // Conflict-dense edges first: triangles through the edge, then degree sum.
    void build_order()
    {
        std::vector<std::pair<int, int>> key(g_.size());
        for (std::size_t id = 0; id < g_.size(); ++id) {
            auto [u, v] = g_.edge(id);
            key[id] = {(adj_[u] & adj_[v]).count(), g_.degree(u) + g_.degree(v)};
        }
        order_.resize(g_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return key[a] > key[b]; });
        chosen_.assign(g_.size(), 0);
    }

    bool can_add(Vertex u, Vertex v, int p) const
    {
        const auto &padj = part_adj_[p];
        if (requires_matching(cls_))
            return padj[u].empty() && padj[v].empty();
        VertexSet comp_u = flood(padj, u, part_vertices_[p] | single(u));
        if (comp_u.test(v))
            return false;
        VertexSet merged = comp_u | flood(padj, v, part_vertices_[p] | single(v));
        if (requires_stars(cls_)) {
            int hubs = 0;
            merged.for_each([&](int x) { hubs += padj[x].count() + (x == u || x == v) >= 2; });
            if (hubs > 1)
                return false;
        }
        if (requires_weak_induced(cls_)) {
            int twice = 0;
            merged.for_each([&](int x) { twice += (adj_[x] & merged).count(); });
            if (twice / 2 != merged.count() - 1)
                return false;
        }
        return true;
    }

    static VertexSet single(int v)
    {
        VertexSet s;
        s.set(v);
        return s;
    }

    // Adds edge to part p; false (with nothing changed) if a load cap breaks.
    bool add(Vertex u, Vertex v, int p)
    {
        bool new_u = !part_vertices_[p].test(u);
        bool new_v = !part_vertices_[p].test(v);
        if (load_[u] + new_u > limits_.cap[u] || load_[v] + new_v > limits_.cap[v])
            return false;
        load_[u] += new_u;
        load_[v] += new_v;
        part_vertices_[p].set(u);
        part_vertices_[p].set(v);
        part_adj_[p][u].set(v);
        part_adj_[p][v].set(u);
        return true;
    }

    void remove(Vertex u, Vertex v, int p)
    {
        part_adj_[p][u].reset(v);
        part_adj_[p][v].reset(u);
        for (Vertex x : {u, v})
            if (part_adj_[p][x].empty()) {
                part_vertices_[p].reset(x);
                --load_[x];
            }
    }

    bool floor_reachable(Vertex x) const
    {
        int extra = mode_ == CoverMode::Partition ? pending_[x] : (pending_[x] > 0 ? k_ : 0);
        return load_[x] + std::min(extra, k_ - load_[x]) >= limits_.floor[x];
    }

    bool assign(std::size_t i)
    {
        if (!clock_.tick())
            return false;
        if (i == order_.size())
            return true;
        auto [u, v] = g_.edge(order_[i]);

        std::uint64_t allowed = 0;
        for (int p = 0; p < used_; ++p)
            if (can_add(u, v, p))
                allowed |= std::uint64_t{1} << p;
        const int max_new = symmetry_ ? std::min(1, k_ - used_) : 0;

        if (mode_ == CoverMode::Partition) {
            for (auto bits = allowed; bits; bits &= bits - 1)
                if (try_parts(i, u, v, std::uint64_t{1} << std::countr_zero(bits), 0))
                    return true;
            return max_new > 0 && try_parts(i, u, v, 0, 1);
        }

        const int fresh_limit = symmetry_ ? k_ - used_ : 0;
        for (int fresh = 0; fresh <= fresh_limit; ++fresh)
            for (std::uint64_t s = allowed;; s = (s - 1) & allowed) {
                if ((s || fresh) && try_parts(i, u, v, s, fresh))
                    return true;
                if (s == 0 || clock_.exhausted())
                    break;
            }
        return false;
    }

    bool try_parts(std::size_t i, Vertex u, Vertex v, std::uint64_t existing, int fresh)
    {
        std::uint64_t chosen = existing;
        for (int j = 0; j < fresh; ++j)
            chosen |= std::uint64_t{1} << (used_ + j);

        std::uint64_t applied = 0;
        bool ok = true;
        for (auto bits = chosen; bits; bits &= bits - 1) {
            int p = std::countr_zero(bits);
            if (!add(u, v, p)) {
                ok = false;
                break;
            }
            applied |= std::uint64_t{1} << p;
        }
        --pending_[u];
        --pending_[v];
        used_ += fresh;
        chosen_[i] = chosen;

        ok = ok && floor_reachable(u) && floor_reachable(v) && (i + 1 < order_.size() || floors_met()) &&
             assign(i + 1);

        if (!ok) {
            chosen_[i] = 0;
            used_ -= fresh;
            ++pending_[u];
            ++pending_[v];
            for (auto bits = applied; bits; bits &= bits - 1)
                remove(u, v, std::countr_zero(bits));
        }
        return ok;
    }

    bool floors_met() const
    {
        for (Vertex x = 1; x <= g_.order(); ++x)
            if (load_[x] < limits_.floor[x])
                return false;
        return true;
    }

    const Graph &g_;
    ForestClass cls_;
    CoverMode mode_;
    int k_;
    Limits limits_;
    bool symmetry_;
    BudgetClock &clock_;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<VertexSet>> part_adj_;
    std::vector<VertexSet> part_vertices_;
    std::vector<int> load_;
    std::vector<int> pending_;
    std::vector<std::size_t> order_;
    std::vector<std::uint64_t> chosen_;
    int used_ = 0;
};

void check_request(const SolveRequest &req, int k)
{
    const Graph &g = req.graph;
    if (g.order() > kMaxExactVertices)
        throw InputError("exact search supports at most " + std::to_string(kMaxExactVertices) + " vertices");
    if (k < 1 || k > kMaxParts)
        throw InputError("k must lie in 1.." + std::to_string(kMaxParts));
    for (const auto *limits : {&req.load_caps, &req.load_floors})
        for (auto [v, t] : *limits) {
            if (!g.contains(v))
                throw InputError("load constraint on unknown vertex " + std::to_string(v));
            if (t < 0 || t > k)
                throw InputError("load constraint for vertex " + std::to_string(v) + " outside [0, k]");
        }
}

Limits make_limits(const SolveRequest &req, int k)
{
    Limits limits;
    limits.cap.assign(req.graph.order() + 1, k);
    limits.floor.assign(req.graph.order() + 1, 0);
    for (auto [v, t] : req.load_caps)
        limits.cap[v] = std::min(limits.cap[v], t);
    for (auto [v, t] : req.load_floors)
        limits.floor[v] = std::max(limits.floor[v], t);
    return limits;
}

} // namespace

SolveResult decide_cover(const SolveRequest &req)
{
    if (!req.k)
        throw InputError("decide_cover needs k");
    const int k = *req.k;
    check_request(req, k);
    const Graph &g = req.graph;

    SolveResult result;
    result.k = k;
    BudgetClock clock(req.budget);
    auto limits = make_limits(req, k);

    bool found = false;
    std::vector<std::vector<Edge>> parts;
    if (g.size() == 0) {
        found = std::all_of(limits.floor.begin(), limits.floor.end(), [](int f) { return f == 0; });
    } else if (requires_induced(req.cls)) {
        MembershipSearch search(g, req.cls, req.mode, k, limits, req.symmetry_breaking, clock);
        found = search.run();
        if (found)
            parts = search.parts();
    } else {
        // These classes are closed under edge deletion, so without floors a
        // minimum cover can be taken to be a partition.
        auto mode = req.load_floors.empty() ? CoverMode::Partition : req.mode;
        EdgeSearch search(g, req.cls, mode, k, limits, req.symmetry_breaking, clock);
        found = search.run();
        if (found)
            parts = search.parts();
    }
    result.stats = clock.stats();

    if (found) {
        result.status = SolveStatus::Feasible;
        CoverCertificate cert{req.cls, req.mode, std::move(parts)};
        auto report = verify_certificate(g, cert);
        if (!report.valid())
            throw std::logic_error("solver produced an invalid certificate");
        for (auto [v, t] : req.load_floors)
            if (report.load[v] < t)
                throw std::logic_error("solver violated a load floor");
        for (auto [v, t] : req.load_caps)
            if (report.load[v] > t)
                throw std::logic_error("solver violated a load cap");
        result.certificate = std::move(cert);
    } else {
        result.status = clock.exhausted() ? SolveStatus::BudgetExhausted : SolveStatus::Infeasible;
    }
    return result;
}

int max_part_size(const Graph &g, ForestClass cls)
{
    const int n = g.order();
    if (requires_matching(cls) && !(requires_induced(cls) && n <= kExactDensityMaxVertices))
        return n / 2;
    if (!requires_induced(cls) || n > kExactDensityMaxVertices) {
        // a forest spanning each component is the largest conceivable part
        std::vector<int> comp(n + 1, 0);
        int components = 0;
        for (Vertex s = 1; s <= n; ++s) {
            if (comp[s])
                continue;
            ++components;
            std::vector<Vertex> stack{s};
            comp[s] = components;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g.neighbors(x))
                    if (!comp[y]) {
                        comp[y] = components;
                        stack.push_back(y);
                    }
            }
        }
        return n - components;
    }

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u - 1] |= 1u << (v - 1);
        adj[v - 1] |= 1u << (u - 1);
    }
    int best = 0;
    for (std::uint32_t set = 1; set < (1u << n); ++set) {
        int size = std::popcount(set);
        int twice = 0;
        for (auto s = set; s; s &= s - 1)
            twice += std::popcount(adj[std::countr_zero(s)] & set);
        int edges = twice / 2;
        if (edges <= best || edges > size - 1)
            continue;
        std::vector<Edge> induced;
        for (auto [u, v] : g.edges())
            if ((set >> (u - 1) & 1) && (set >> (v - 1) & 1))
                induced.push_back({u, v});
        if (validate_edge_set(g, induced, cls))
            best = edges;
    }
    return best;
}

int cover_lower_bound(const SolveRequest &req)
{
    const Graph &g = req.graph;
    int lb = std::max(req.known_lower_bound, 0);
    for (auto [v, t] : req.load_floors)
        lb = std::max(lb, t);
    if (g.size() == 0)
        return lb;
    lb = std::max(lb, 1);
    // every class here consists of forests, so arboricity bounds all of them
    lb = std::max(lb, nash_williams_density(g).value);
    if (int biggest = max_part_size(g, req.cls); biggest > 0)
        lb = std::max(lb, static_cast<int>((g.size() + biggest - 1) / biggest));
    if (requires_matching(req.cls))
        lb = std::max(lb, g.max_degree());
    return lb;
}

SolveResult min_cover(const SolveRequest &req)
{
    const Graph &g = req.graph;
    if (g.order() > kMaxExactVertices)
        throw InputError("exact search supports at most " + std::to_string(kMaxExactVertices) + " vertices");

    int max_floor = 0;
    for (auto [v, t] : req.load_floors)
        max_floor = std::max(max_floor, t);
    const int lb = cover_lower_bound(req);
    const int ub = std::min(kMaxParts, std::max(lb, static_cast<int>(g.size()) + max_floor));

    SolveResult result;
    result.lower = lb;
    result.upper = static_cast<int>(g.size()) + max_floor;
    if (g.size() == 0 && max_floor == 0) {
        result.status = SolveStatus::Feasible;
        result.certificate = CoverCertificate{req.cls, req.mode, {}};
        result.lower = result.upper = result.k = 0;
        return result;
    }

    for (int k = std::max(lb, 1); k <= ub; ++k) {
        SolveRequest step = req;
        step.k = k;
        auto outcome = decide_cover(step);
        result.stats.nodes += outcome.stats.nodes;
        result.stats.seconds += outcome.stats.seconds;
        if (outcome.status == SolveStatus::Feasible) {
            result.status = SolveStatus::Feasible;
            result.k = result.lower = result.upper = k;
            result.certificate = std::move(outcome.certificate);
            return result;
        }
        if (outcome.status == SolveStatus::BudgetExhausted) {
            result.status = SolveStatus::BudgetExhausted;
            result.lower = k;
            return result;
        }
        result.lower = k + 1;
    }
    result.status = SolveStatus::Infeasible;
    return result;
}

SolveResult strong_chromatic_index(const Graph &g, Budget budget)
{
    SolveRequest req;
    req.graph = g;
    req.cls = ForestClass::InducedMatching;
    req.mode = CoverMode::Cover;
    req.budget = budget;
    return min_cover(req);
}

} // namespace arbor
