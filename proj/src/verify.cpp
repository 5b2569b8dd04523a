#include "arbor/verify.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace arbor {

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

bool validate_edge_set(const Graph &g, std::span<const Edge> input, ForestClass cls)
{
    std::vector<Edge> edges;
    edges.reserve(input.size());
    for (auto e : input) {
        e = make_edge(e.u, e.v);
        if (!g.has_edge(e.u, e.v))
            throw InputError("edge " + to_string(e) + " is not in the graph");
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty())
        return true;

    std::unordered_map<Vertex, int> local;
    std::vector<Vertex> vertices;
    auto index_of = [&](Vertex v) {
        auto [it, fresh] = local.try_emplace(v, static_cast<int>(vertices.size()));
        if (fresh)
            vertices.push_back(v);
        return it->second;
    };
    std::vector<std::pair<int, int>> local_edges;
    for (auto [u, v] : edges)
        local_edges.emplace_back(index_of(u), index_of(v));

    std::vector<int> degree(vertices.size(), 0);
    DisjointSets components(vertices.size());
    for (auto [a, b] : local_edges) {
        ++degree[a];
        ++degree[b];
        if (!components.unite(a, b))
            return false;
    }

    if (requires_matching(cls) &&
        std::any_of(degree.begin(), degree.end(), [](int d) { return d > 1; }))
        return false;

    if (requires_stars(cls)) {
        std::unordered_map<int, int> hubs;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (degree[i] >= 2 && ++hubs[components.find(static_cast<int>(i))] > 1)
                return false;
    }

    bool induced = requires_induced(cls);
    bool weak = requires_weak_induced(cls);
    if (induced || weak) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            Vertex x = vertices[i];
            for (Vertex y : g.neighbors(x)) {
                if (y < x)
                    continue;
                auto other = local.find(y);
                if (other == local.end())
                    continue;
                if (weak && components.find(static_cast<int>(i)) != components.find(other->second))
                    continue;
                if (!std::binary_search(edges.begin(), edges.end(), Edge{x, y}))
                    return false;
            }
        }
    }
    return true;
}

bool VerifyReport::valid() const
{
    return std::all_of(part_valid.begin(), part_valid.end(), [](bool b) { return b; }) &&
           empty_parts.empty() && foreign_edges.empty() && missing_edges.empty() && shared_edges.empty();
}

std::vector<std::string> VerifyReport::diagnostics() const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < part_valid.size(); ++i)
        if (!part_valid[i])
            out.push_back("part " + std::to_string(i + 1) + " violates its class");
    for (auto i : empty_parts)
        out.push_back("part " + std::to_string(i + 1) + " is empty");
    for (auto e : foreign_edges)
        out.push_back("edge " + to_string(e) + " is not in the graph");
    for (auto e : missing_edges)
        out.push_back("edge " + to_string(e) + " is not covered");
    for (auto e : shared_edges)
        out.push_back("edge " + to_string(e) + " lies in more than one part");
    return out;
}

VerifyReport verify_certificate(const Graph &g, const CoverCertificate &cert)
{
    VerifyReport report;
    report.load.assign(g.order() + 1, 0);
    std::vector<int> times_covered(g.size(), 0);

    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto &part = cert.parts[i];
        if (part.empty())
            report.empty_parts.push_back(i);

        std::vector<Edge> known;
        std::vector<Vertex> touched;
        for (auto e : part) {
            if (e.u == e.v || !g.has_edge(e.u, e.v)) {
                report.foreign_edges.push_back(e);
                continue;
            }
            e = make_edge(e.u, e.v);
            known.push_back(e);
        }
        std::sort(known.begin(), known.end());
        known.erase(std::unique(known.begin(), known.end()), known.end());
        for (auto e : known) {
            ++times_covered[*g.edge_id(e.u, e.v)];
            touched.push_back(e.u);
            touched.push_back(e.v);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (auto v : touched)
            ++report.load[v];

        report.part_valid.push_back(known.size() == part.size() &&
                                    validate_edge_set(g, known, cert.cls));
    }

    for (std::size_t id = 0; id < g.size(); ++id) {
        if (times_covered[id] == 0)
            report.missing_edges.push_back(g.edge(id));
        else if (cert.mode == CoverMode::Partition && times_covered[id] > 1)
            report.shared_edges.push_back(g.edge(id));
    }
    return report;
}

namespace {

bool induces_forest(const Graph &g, const std::vector<int> &color, int a, int b)
{
    DisjointSets sets(g.order() + 1);
    for (auto [u, v] : g.edges()) {
        bool in_u = color[u] == a || color[u] == b;
        bool in_v = color[v] == a || color[v] == b;
        if (in_u && in_v && !sets.unite(u, v))
            return false;
    }
    return true;
}

} // namespace

bool verify_coloring(const Graph &g, const ColoringCertificate &col)
{
    auto in_range = [&](int c) { return c >= 1 && c <= col.colors; };

    if (colors_vertices(col.kind)) {
        if (static_cast<int>(col.vertex_colors.size()) != g.order() + 1)
            throw InputError("vertex colouring does not match the vertex count");
        for (Vertex v = 1; v <= g.order(); ++v)
            if (!in_range(col.vertex_colors[v]))
                throw InputError("vertex " + std::to_string(v) + " has no colour in 1.." +
                                 std::to_string(col.colors));
        const auto &c = col.vertex_colors;
        for (auto [u, v] : g.edges())
            if (c[u] == c[v])
                return false;
        if (col.kind == ColoringKind::AcyclicVertex)
            for (int a = 1; a <= col.colors; ++a)
                for (int b = a + 1; b <= col.colors; ++b)
                    if (!induces_forest(g, c, a, b))
                        return false;
        return true;
    }

    for (const auto &[e, c] : col.edge_colors)
        if (!g.has_edge(e.u, e.v))
            throw InputError("coloured edge " + to_string(e) + " is not in the graph");
    if (col.edge_colors.size() != g.size())
        throw InputError("edge colouring is partial");
    std::vector<std::vector<Edge>> classes(col.colors + 1);
    for (const auto &[e, c] : col.edge_colors) {
        if (!in_range(c))
            throw InputError("edge " + to_string(e) + " has no colour in 1.." + std::to_string(col.colors));
        classes[c].push_back(e);
    }
    auto cls = col.kind == ColoringKind::ProperEdge ? ForestClass::Matching : ForestClass::InducedMatching;
    return std::all_of(classes.begin(), classes.end(),
                       [&](const auto &edges) { return validate_edge_set(g, edges, cls); });
}

std::string_view tag(CoverMode mode) { return mode == CoverMode::Cover ? "cover" : "partition"; }

std::optional<CoverMode> parse_cover_mode(std::string_view text)
{
    if (text == "cover")
        return CoverMode::Cover;
    if (text == "partition")
        return CoverMode::Partition;
    return std::nullopt;
}

std::string_view tag(ColoringKind kind)
{
    switch (kind) {
    case ColoringKind::ProperVertex: return "proper-vertex";
    case ColoringKind::AcyclicVertex: return "acyclic-vertex";
    case ColoringKind::ProperEdge: return "proper-edge";
    case ColoringKind::StrongEdge: return "strong-edge";
    }
    return "?";
}

std::optional<ColoringKind> parse_coloring_kind(std::string_view text)
{
    for (auto kind : {ColoringKind::ProperVertex, ColoringKind::AcyclicVertex, ColoringKind::ProperEdge,
                      ColoringKind::StrongEdge})
        if (tag(kind) == text)
            return kind;
    return std::nullopt;
}

} // namespace arbor
