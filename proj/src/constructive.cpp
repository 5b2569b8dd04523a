#include "arbor/constructive.hpp"

#include "arbor/structure.hpp"
#include "arbor/verify.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>

namespace arbor {

namespace {

using LocalAdjacency = std::map<Vertex, std::vector<Vertex>>;

LocalAdjacency local_adjacency(std::span<const Edge> edges)
{
    LocalAdjacency adj;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

ColoringCertificate as_kind(const ColoringCertificate &col, ColoringKind kind)
{
    if (!colors_vertices(col.kind))
        throw InputError("expected a vertex colouring");
    ColoringCertificate copy = col;
    copy.kind = kind;
    return copy;
}

void require_acyclic(const Graph &g, const ColoringCertificate &col)
{
    if (!verify_coloring(g, as_kind(col, ColoringKind::AcyclicVertex)))
        throw InputError("colouring is not acyclic");
}

void require_proper(const Graph &g, const ColoringCertificate &col)
{
    if (!verify_coloring(g, as_kind(col, ColoringKind::ProperVertex)))
        throw InputError("colouring is not proper");
}

std::vector<std::vector<Edge>> nonempty(std::vector<std::vector<Edge>> slots)
{
    std::erase_if(slots, [](const auto &s) { return s.empty(); });
    for (auto &s : slots)
        std::sort(s.begin(), s.end());
    return slots;
}

} // namespace

ForestClass split_layers_class(ForestClass input, int modulus)
{
    if (requires_induced(input) && modulus == 3)
        return ForestClass::InducedStarForest;
    if (requires_induced(input) || requires_weak_induced(input) || input == ForestClass::Matching)
        return ForestClass::WeakInducedStarForest;
    return ForestClass::StarForest;
}

CoverCertificate split_layers(const Graph &g, const CoverCertificate &cert, int modulus)
{
    if (modulus != 2 && modulus != 3)
        throw InputError("layer modulus must be 2 or 3");
    CoverCertificate out{split_layers_class(cert.cls, modulus), cert.mode, {}};
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto &part = cert.parts[i];
        if (!validate_edge_set(g, part, cert.cls))
            throw InputError("part " + std::to_string(i + 1) + " is not a " + std::string(tag(cert.cls)));
        auto adj = local_adjacency(part);
        std::map<Vertex, int> depth;
        std::vector<std::vector<Edge>> buckets(modulus);
        // map iteration is ascending, so every tree is entered at its smallest vertex
        for (const auto &[root, _] : adj) {
            if (depth.contains(root))
                continue;
            depth[root] = 0;
            std::deque<Vertex> queue{root};
            while (!queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                for (Vertex y : adj[x]) {
                    if (depth.contains(y))
                        continue;
                    depth[y] = depth[x] + 1;
                    buckets[depth[x] % modulus].push_back(make_edge(x, y));
                    queue.push_back(y);
                }
            }
        }
        for (auto &b : nonempty(std::move(buckets)))
            out.parts.push_back(std::move(b));
    }
    return out;
}

DegeneracyStarCover degeneracy_star_cover(const Graph &g)
{
    DegeneracyStarCover result;
    auto &col = result.coloring;
    col.ordering = degeneracy(g);
    const int d = col.ordering.d;
    const int n = g.order();
    std::vector<int> pos(n + 1, 0);
    for (std::size_t i = 0; i < col.ordering.order.size(); ++i)
        pos[col.ordering.order[i]] = static_cast<int>(i);

    auto color_of = [&](Vertex a, Vertex b) {
        auto it = col.edge_colors.find(make_edge(a, b));
        return it == col.edge_colors.end() ? 0 : it->second;
    };

    for (Vertex v : col.ordering.order) {
        std::vector<Vertex> left;
        for (Vertex u : g.neighbors(v))
            if (pos[u] < pos[v])
                left.push_back(u);
        std::sort(left.begin(), left.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });

        std::vector<int> picked;
        for (std::size_t i = 0; i < left.size(); ++i) {
            Vertex w = left[i];
            // S'(w_i): drop colours of w_i's edges to later left-neighbours of v
            std::vector<int> available = col.reserved_sets[w];
            for (std::size_t j = i + 1; j < left.size(); ++j)
                if (int c = color_of(w, left[j]))
                    std::erase(available, c);
            auto it = std::find_if(available.begin(), available.end(), [&](int c) {
                return std::find(picked.begin(), picked.end(), c) == picked.end();
            });
            if (it == available.end())
                throw std::logic_error("degeneracy colouring ran out of colours");
            picked.push_back(*it);
            col.edge_colors[make_edge(v, w)] = *it;
        }
        auto &reserved = col.reserved_sets[v];
        for (int c = 1; c <= 2 * d && static_cast<int>(reserved.size()) < d; ++c)
            if (std::find(picked.begin(), picked.end(), c) == picked.end())
                reserved.push_back(c);
    }

    std::vector<std::vector<Edge>> classes(2 * d);
    for (const auto &[e, c] : col.edge_colors)
        classes[c - 1].push_back(e);
    result.cover = {ForestClass::WeakInducedStarForest, CoverMode::Partition, nonempty(std::move(classes))};
    return result;
}

std::vector<std::string> degeneracy_coloring_violations(const Graph &g, const DegeneracyColoring &col)
{
    std::vector<std::string> out;
    const int d = col.ordering.d;
    if (!is_degeneracy_ordering(g, col.ordering)) {
        out.push_back("ordering is not a degeneracy ordering");
        return out;
    }
    std::vector<int> pos(g.order() + 1, 0);
    for (std::size_t i = 0; i < col.ordering.order.size(); ++i)
        pos[col.ordering.order[i]] = static_cast<int>(i);

    for (Vertex v : col.ordering.order) {
        auto it = col.reserved_sets.find(v);
        if (it == col.reserved_sets.end() || static_cast<int>(it->second.size()) != d) {
            out.push_back("S(" + std::to_string(v) + ") does not have d colours");
            continue;
        }
        for (Vertex u : g.neighbors(v)) {
            if (pos[u] > pos[v])
                continue;
            auto c = col.edge_colors.find(make_edge(u, v));
            if (c != col.edge_colors.end() &&
                std::find(it->second.begin(), it->second.end(), c->second) != it->second.end())
                out.push_back("S(" + std::to_string(v) + ") contains the colour of left edge " +
                              to_string(make_edge(u, v)));
        }
    }

    std::map<int, std::vector<Edge>> classes;
    for (const auto &[e, c] : col.edge_colors) {
        if (!g.has_edge(e.u, e.v))
            out.push_back("coloured edge " + to_string(e) + " is not in the graph");
        else if (c < 1 || c > 2 * d)
            out.push_back("edge " + to_string(e) + " has colour outside 1..2d");
        else
            classes[c].push_back(e);
    }
    if (col.edge_colors.size() != g.size())
        out.push_back("not every edge is coloured");
    for (const auto &[c, edges] : classes) {
        if (!validate_edge_set(g, edges, ForestClass::WeakInducedStarForest)) {
            out.push_back("colour " + std::to_string(c) + " is not a weak induced star forest");
            continue;
        }
        auto adj = local_adjacency(edges);
        for (const auto &[x, nbrs] : adj) {
            if (nbrs.size() < 2)
                continue;
            for (Vertex y : nbrs)
                if (pos[y] < pos[x])
                    out.push_back("colour " + std::to_string(c) + " has a star centred at " + std::to_string(x) +
                                  " that is not a right star");
        }
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> round_robin_matchings(int k)
{
    if (k < 2)
        throw InputError("round robin needs k >= 2");
    const int m = k % 2 == 0 ? k : k + 1; // odd k: vertex k+1 is a bye
    std::vector<std::vector<std::pair<int, int>>> rounds;
    auto add = [&](std::vector<std::pair<int, int>> &round, int a, int b) {
        a += 1;
        b += 1;
        if (a > k || b > k)
            return;
        round.emplace_back(std::min(a, b), std::max(a, b));
    };
    for (int r = 0; r < m - 1; ++r) {
        std::vector<std::pair<int, int>> round;
        add(round, m - 1, r);
        for (int i = 1; i < m / 2; ++i)
            add(round, (r + i) % (m - 1), (r - i + m - 1) % (m - 1));
        std::sort(round.begin(), round.end());
        rounds.push_back(std::move(round));
    }
    return rounds;
}

SlotCover acyclic_pairs_cover(const Graph &g, const ColoringCertificate &col)
{
    require_acyclic(g, col);
    const int k = col.colors;
    auto slot = [k](int i, int j) { return (i - 1) * k - (i - 1) * i / 2 + (j - i - 1); };
    std::vector<std::vector<Edge>> slots(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (auto e : g.edges()) {
        int a = col.vertex_colors[e.u], b = col.vertex_colors[e.v];
        slots[slot(std::min(a, b), std::max(a, b))].push_back(e);
    }
    SlotCover out;
    out.slots = slots.size();
    out.cover = {ForestClass::InducedForest, CoverMode::Partition, nonempty(std::move(slots))};
    return out;
}

SlotCover acyclic_matching_cover(const Graph &g, const ColoringCertificate &col)
{
    require_acyclic(g, col);
    const int k = col.colors;
    SlotCover out;
    out.cover = {ForestClass::WeakInducedForest, CoverMode::Partition, {}};
    if (k < 2)
        return out;
    auto rounds = round_robin_matchings(k);
    std::map<std::pair<int, int>, std::size_t> round_of;
    for (std::size_t r = 0; r < rounds.size(); ++r)
        for (auto p : rounds[r])
            round_of[p] = r;
    std::vector<std::vector<Edge>> slots(rounds.size());
    for (auto e : g.edges()) {
        int a = col.vertex_colors[e.u], b = col.vertex_colors[e.v];
        slots[round_of.at({std::min(a, b), std::max(a, b)})].push_back(e);
    }
    out.slots = slots.size();
    out.cover.parts = nonempty(std::move(slots));
    return out;
}

std::vector<std::vector<Star>> designate_centers(const Graph &g, const CoverCertificate &stars)
{
    std::vector<std::vector<Star>> out;
    for (std::size_t i = 0; i < stars.parts.size(); ++i) {
        const auto &part = stars.parts[i];
        if (!validate_edge_set(g, part, ForestClass::StarForest))
            throw InputError("part " + std::to_string(i + 1) + " is not a star forest");
        auto adj = local_adjacency(part);
        std::vector<Star> part_stars;
        for (const auto &[x, nbrs] : adj) {
            bool center = nbrs.size() >= 2 || (adj[nbrs.front()].size() == 1 && x < nbrs.front());
            if (!center)
                continue;
            Star s{x, nbrs};
            std::sort(s.leaves.begin(), s.leaves.end());
            part_stars.push_back(std::move(s));
        }
        out.push_back(std::move(part_stars));
    }
    return out;
}

CoverCertificate leaf_color_split(const Graph &g, const CoverCertificate &stars, const ColoringCertificate &col,
                                  const std::vector<std::vector<Star>> &centers)
{
    require_proper(g, col);
    if (centers.size() != stars.parts.size())
        throw InputError("missing centre designation");
    CoverCertificate out{ForestClass::WeakInducedStarForest, stars.mode, {}};
    for (std::size_t i = 0; i < stars.parts.size(); ++i) {
        if (!validate_edge_set(g, stars.parts[i], ForestClass::StarForest))
            throw InputError("part " + std::to_string(i + 1) + " is not a star forest");
        std::map<Edge, Vertex> leaf_of;
        for (const auto &s : centers[i])
            for (Vertex l : s.leaves)
                leaf_of[make_edge(s.center, l)] = l;
        std::vector<std::vector<Edge>> by_color(col.colors);
        for (auto e : stars.parts[i]) {
            auto it = leaf_of.find(e);
            if (it == leaf_of.end())
                throw InputError("missing centre designation for edge " + to_string(e) + " in part " +
                                 std::to_string(i + 1));
            by_color[col.vertex_colors[it->second] - 1].push_back(e);
        }
        for (auto &p : nonempty(std::move(by_color)))
            out.parts.push_back(std::move(p));
    }
    return out;
}

CoverCertificate leaf_color_split(const Graph &g, const CoverCertificate &stars, const ColoringCertificate &col)
{
    return leaf_color_split(g, stars, col, designate_centers(g, stars));
}

std::uint64_t lexicographic_subset_rank(const std::vector<int> &subset, int universe)
{
    if (universe > 62)
        throw InputError("subset universe too large to rank");
    std::uint64_t rank = 0;
    int prev = 0;
    for (int a : subset) {
        if (a <= prev || a > universe)
            throw InputError("subset must be sorted and within 1..universe");
        // the prefix itself, then every set continuing with a skipped element x
        rank += 1;
        for (int x = prev + 1; x < a; ++x)
            rank += std::uint64_t{1} << (universe - x);
        prev = a;
    }
    return rank;
}

MinorColoring shallow_minor_coloring(const Graph &g, const StarDecomposition &dec, const ColoringCertificate &phi,
                                     const CoverCertificate &isa_cert)
{
    Graph minor(static_cast<int>(dec.stars.size()), dec.minor_edges);
    if (!is_half_shallow_minor(g, minor, dec))
        throw InputError("star decomposition does not witness every minor edge");
    require_proper(g, phi);
    if (!is_subclass(isa_cert.cls, ForestClass::InducedStarForest) || !verify_certificate(g, isa_cert).valid())
        throw InputError("expected a valid cover by induced star forests");
    const int k = static_cast<int>(isa_cert.k());
    if (k > 62)
        throw InputError("too many star forests to encode colours");

    std::map<Edge, std::vector<int>> forests_of;
    for (int i = 0; i < k; ++i)
        for (auto e : isa_cert.parts[i])
            forests_of[e].push_back(i + 1);

    MinorColoring out{minor, {ColoringKind::ProperVertex, 0, std::vector<int>(minor.order() + 1, 0), {}}};
    for (std::size_t i = 0; i < dec.stars.size(); ++i) {
        const auto &s = dec.stars[i];
        std::set<int> a;
        for (Vertex l : s.leaves)
            if (auto it = forests_of.find(make_edge(s.center, l)); it != forests_of.end())
                a.insert(it->second.begin(), it->second.end());
        std::uint64_t rank = lexicographic_subset_rank({a.begin(), a.end()}, k);
        std::uint64_t color = phi.vertex_colors[s.center] + static_cast<std::uint64_t>(phi.colors) * rank;
        if (color > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
            throw InputError("minor colour does not fit in an int");
        out.coloring.vertex_colors[i + 1] = static_cast<int>(color);
        out.coloring.colors = std::max(out.coloring.colors, static_cast<int>(color));
    }
    if (!verify_coloring(minor, out.coloring))
        throw std::logic_error("minor colouring is not proper");
    return out;
}

StarDecomposition subdivision_star_decomposition(const Graph &g)
{
    StarDecomposition dec;
    const int n = g.order();
    dec.stars.resize(n);
    for (Vertex v = 1; v <= n; ++v)
        dec.stars[v - 1].center = v;
    for (std::size_t id = 0; id < g.size(); ++id)
        dec.stars[g.edge(id).u - 1].leaves.push_back(n + 1 + static_cast<Vertex>(id));
    dec.minor_edges = g.edges();
    return dec;
}

} // namespace arbor
