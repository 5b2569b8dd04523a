#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/generators.hpp"
#include "arbor/io.hpp"
#include "arbor/structure.hpp"
#include "arbor/verify.hpp"
#include "oracle.hpp"

#include <random>
#include <sstream>

using namespace arbor;

namespace {

Graph graph(int n, std::initializer_list<std::pair<int, int>> pairs)
{
    std::vector<Edge> edges;
    for (auto [a, b] : pairs)
        edges.push_back(make_edge(a, b));
    return Graph(n, edges);
}

// intervals [l, r] on a small line; overlapping intervals are adjacent
Graph random_interval_graph(int n, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> pos(0, 3 * n);
    std::vector<std::pair<int, int>> iv;
    for (int i = 0; i < n; ++i) {
        int a = pos(rng), b = pos(rng);
        iv.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second)
                edges.push_back({i + 1, j + 1});
    return Graph(n, edges);
}

} // namespace

TEST_CASE("graph construction normalises and rejects bad edges")
{
    Graph g(4, {{3, 1}, {2, 1}, {4, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edge(0) == Edge{1, 2});
    CHECK(g.edge(2) == Edge{3, 4});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(2, 4));
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g == Graph(4, {{1, 2}, {1, 3}, {3, 4}}));

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(make_edge(2, 2), InputError);
}

TEST_CASE("incident edge ids line up with neighbours")
{
    auto g = complete(5);
    for (Vertex v = 1; v <= 5; ++v) {
        auto nb = g.neighbors(v);
        auto ids = g.incident_edges(v);
        REQUIRE(nb.size() == ids.size());
        for (std::size_t i = 0; i < nb.size(); ++i)
            CHECK(g.edge(ids[i]) == make_edge(v, nb[i]));
    }
}

TEST_CASE("induced subgraph relabels in the given order")
{
    auto c = cycle(5);
    std::vector<Vertex> keep{5, 1, 2};
    auto h = c.induced(keep);
    CHECK(h.order() == 3);
    CHECK(h == graph(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("graph file round trip")
{
    for (const auto &g : {complete(5), double_wheel(6).labeled.graph, Graph(3, {}), gk(3).labeled.graph}) {
        auto text = graph_to_string(g);
        CHECK(graph_from_string(text) == g);
    }
}

TEST_CASE("graph reader is strict")
{
    CHECK_THROWS_AS(graph_from_string("p 3 2\ne 1 2\n"), FormatError);
    CHECK_THROWS_AS(graph_from_string("p 3 1\ne 2 1\n"), FormatError);
    CHECK_THROWS_AS(graph_from_string("p 3 1\ne 1 4\n"), FormatError);
    CHECK_THROWS_AS(graph_from_string("p 3 2\ne 1 2\ne 1 2\n"), FormatError);
    CHECK_THROWS_AS(graph_from_string("q 3 0\n"), FormatError);
    CHECK_THROWS_AS(graph_from_string("p 3 1\ne 1 x\n"), FormatError);
    CHECK(graph_from_string("p 2 1\n\ne 1 2\n").size() == 1);
}

TEST_CASE("certificate and colouring round trip")
{
    auto g = complete(4);
    CoverCertificate cert{ForestClass::InducedStarForest, CoverMode::Partition, {{{1, 2}}, {{1, 3}, {1, 4}}}};
    std::stringstream s;
    write_certificate(s, cert);
    CHECK(read_certificate(s) == cert);

    ColoringCertificate col{ColoringKind::AcyclicVertex, 4, {0, 1, 2, 3, 4}, {}};
    std::stringstream t;
    write_coloring(t, col);
    CHECK(read_coloring(t, 4) == col);

    ColoringCertificate edges{ColoringKind::ProperEdge, 2, {}, {{{1, 2}, 1}, {{2, 3}, 2}}};
    std::stringstream u;
    write_coloring(u, edges);
    CHECK(read_coloring(u, 3) == edges);

    std::stringstream bad("c cover forest 2\nf 1 1-2\n");
    CHECK_THROWS_AS(read_certificate(bad), FormatError);
    std::stringstream numbering("c cover forest 1\nf 2 1-2\n");
    CHECK_THROWS_AS(read_certificate(numbering), FormatError);
}

TEST_CASE("dot output has one statement per vertex and edge")
{
    auto g = double_wheel(5).labeled.graph;
    CoverCertificate cert{ForestClass::Forest, CoverMode::Cover, {g.edges()}};
    for (auto text : {to_dot(g), to_dot(g, &cert)}) {
        std::istringstream in(text);
        std::string line;
        int nodes = 0, edges = 0;
        std::getline(in, line);
        CHECK(line == "graph G {");
        while (std::getline(in, line)) {
            if (line == "}")
                break;
            CHECK(line.back() == ';');
            (line.find("--") != std::string::npos ? edges : nodes)++;
        }
        CHECK(nodes == g.order());
        CHECK(edges == static_cast<int>(g.size()));
    }
}

TEST_CASE("class membership agrees with the definitional oracle")
{
    // every edge subset of a few small graphs, every class
    for (const auto &g : {complete(4), cycle(5), double_wheel(3).labeled.graph, complete_bipartite(2, 3),
                          graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}})}) {
        const auto m = static_cast<std::uint32_t>(g.size());
        for (std::uint32_t s = 0; s < (1u << m); ++s) {
            auto edges = oracle::edges_of(g, s);
            for (auto cls : all_forest_classes)
                CHECK_MESSAGE(validate_edge_set(g, edges, cls) == oracle::member(g, edges, cls),
                              tag(cls) << " on " << graph_to_string(g));
        }
    }
}

TEST_CASE("class membership examples")
{
    auto k4 = complete(4);
    std::vector<Edge> p3{{1, 2}, {2, 3}};
    CHECK(validate_edge_set(k4, p3, ForestClass::Forest));
    CHECK(validate_edge_set(k4, p3, ForestClass::StarForest));
    CHECK_FALSE(validate_edge_set(k4, p3, ForestClass::WeakInducedForest));
    CHECK_FALSE(validate_edge_set(k4, p3, ForestClass::InducedForest));
    std::vector<Edge> two{{1, 2}, {3, 4}};
    CHECK(validate_edge_set(k4, two, ForestClass::Matching));
    CHECK(validate_edge_set(k4, two, ForestClass::WeakInducedForest));
    CHECK_FALSE(validate_edge_set(k4, two, ForestClass::InducedMatching));
    CHECK(validate_edge_set(k4, {}, ForestClass::InducedMatching));
    std::vector<Edge> foreign{{1, 2}};
    CHECK_THROWS_AS(validate_edge_set(path(2), std::vector<Edge>{{1, 3}}, ForestClass::Forest), InputError);
    CHECK(validate_edge_set(path(2), foreign, ForestClass::InducedMatching));
}

TEST_CASE("verify_certificate reports each failure kind")
{
    auto g = cycle(4);
    CoverCertificate good{ForestClass::InducedMatching, CoverMode::Partition, {{{1, 2}}, {{2, 3}}, {{3, 4}}, {{1, 4}}}};
    CHECK(verify_certificate(g, good).valid());

    CoverCertificate missing{ForestClass::Forest, CoverMode::Cover, {{{1, 2}, {2, 3}}}};
    auto r = verify_certificate(g, missing);
    CHECK_FALSE(r.valid());
    CHECK(r.missing_edges == std::vector<Edge>{{1, 4}, {3, 4}});
    CHECK(r.diagnostics().size() == 2);

    CoverCertificate shared{ForestClass::Forest, CoverMode::Partition, {{{1, 2}, {2, 3}, {3, 4}}, {{1, 4}, {1, 2}}}};
    auto s = verify_certificate(g, shared);
    CHECK(s.shared_edges == std::vector<Edge>{{1, 2}});
    shared.mode = CoverMode::Cover;
    CHECK(verify_certificate(g, shared).valid());
    CHECK(verify_certificate(g, shared).load[1] == 2);

    CoverCertificate bad_class{ForestClass::InducedForest, CoverMode::Cover, {{{1, 2}, {2, 3}, {3, 4}}, {{1, 4}}}};
    auto b = verify_certificate(g, bad_class);
    CHECK(b.part_valid == std::vector<bool>{false, true});

    CoverCertificate empty{ForestClass::Forest, CoverMode::Cover, {g.edges(), {}}};
    CHECK(verify_certificate(g, empty).empty_parts == std::vector<std::size_t>{1});

    CoverCertificate foreign{ForestClass::Forest, CoverMode::Cover, {{{1, 3}}, g.edges()}};
    CHECK(verify_certificate(g, foreign).foreign_edges == std::vector<Edge>{{1, 3}});
}

TEST_CASE("verify_coloring")
{
    auto c4 = cycle(4);
    ColoringCertificate two{ColoringKind::ProperVertex, 2, {0, 1, 2, 1, 2}, {}};
    CHECK(verify_coloring(c4, two));
    two.kind = ColoringKind::AcyclicVertex;
    CHECK_FALSE(verify_coloring(c4, two)); // classes 1, 2 induce the whole cycle
    ColoringCertificate three{ColoringKind::AcyclicVertex, 3, {0, 1, 2, 1, 3}, {}};
    CHECK(verify_coloring(c4, three));
    ColoringCertificate partial{ColoringKind::ProperVertex, 2, {0, 1, 2, 0, 2}, {}};
    CHECK_THROWS_AS(verify_coloring(c4, partial), InputError);

    auto p4 = path(4);
    ColoringCertificate proper{ColoringKind::ProperEdge, 2, {}, {{{1, 2}, 1}, {{2, 3}, 2}, {{3, 4}, 1}}};
    CHECK(verify_coloring(p4, proper));
    proper.kind = ColoringKind::StrongEdge;
    CHECK_FALSE(verify_coloring(p4, proper));
}

TEST_CASE("degeneracy matches the brute-force minimum over orderings")
{
    std::vector<Graph> graphs{complete(5), cycle(6), double_wheel(5).labeled.graph, complete_bipartite(3, 3),
                              path(4), Graph(3, {})};
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        graphs.push_back(random_graph(7, 0.45, seed));
    for (const auto &g : graphs) {
        auto cert = degeneracy(g);
        CHECK(cert.d == oracle::degeneracy(g));
        CHECK(is_degeneracy_ordering(g, cert));
    }
    OrderingCertificate wrong{{1, 2, 3, 4}, 2};
    CHECK_FALSE(is_degeneracy_ordering(complete(4), wrong));
}

TEST_CASE("Nash-Williams density")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            // closed form for complete bipartite graphs
            int expected = (m * n + m + n - 2) / (m + n - 1);
            CHECK(nash_williams_density(complete_bipartite(m, n)).value == expected);
        }
    for (int n = 2; n <= 7; ++n)
        CHECK(nash_williams_density(complete(n)).value == (n + 1) / 2);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = random_graph(9, 0.5, seed);
        auto r = nash_williams_density(g);
        CHECK(r.exact);
        CHECK(r.value == oracle::density(g));
    }
    auto big = random_graph(30, 0.2, 7);
    auto r = nash_williams_density(big);
    CHECK_FALSE(r.exact);
    CHECK(r.value >= 1);
}

TEST_CASE("clique number")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto g = random_graph(10, 0.5, seed);
        CHECK(clique_number(g) == oracle::clique_number(g));
    }
    CHECK(clique_number(complete(7)) == 7);
    CHECK(clique_number(Graph(4, {})) == 1);
}

TEST_CASE("chordality on random interval graphs and cycles")
{
    std::mt19937 rng(1);
    for (int i = 0; i < 40; ++i) {
        auto g = random_interval_graph(10, rng);
        auto r = chordality(g);
        REQUIRE(r.chordal);
        CHECK(is_perfect_elimination_order(g, r.elimination_order));
        CHECK(oracle::chordal(g));
    }
    for (int n = 4; n <= 9; ++n) {
        auto r = chordality(cycle(n));
        CHECK_FALSE(r.chordal);
        CHECK(r.chordless_cycle.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("chordality agrees with the induced-cycle oracle and its witnesses check out")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = random_graph(8, 0.4, seed);
        auto r = chordality(g);
        CHECK(r.chordal == oracle::chordal(g));
        if (r.chordal) {
            CHECK(is_perfect_elimination_order(g, r.elimination_order));
            continue;
        }
        // the witness is an induced cycle of length >= 4
        const auto &c = r.chordless_cycle;
        REQUIRE(c.size() >= 4);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                bool consecutive = j == i + 1 || (i == 0 && j == c.size() - 1);
                CHECK(g.has_edge(c[i], c[j]) == consecutive);
            }
    }
}

TEST_CASE("tree-width of chordal graphs")
{
    CHECK(treewidth_chordal(complete(5)) == 4);
    CHECK(treewidth_chordal(path_power(10, 3)) == 3);
    CHECK(treewidth_chordal(path(6)) == 1);
    CHECK_THROWS_AS(treewidth_chordal(cycle(5)), InputError);
}

TEST_CASE("half-shallow minors")
{
    auto k4 = complete(4);
    auto host = subdivide_once(k4);
    StarDecomposition dec;
    for (Vertex v = 1; v <= 4; ++v)
        dec.stars.push_back({v, {}});
    for (std::size_t id = 0; id < k4.size(); ++id)
        dec.stars[k4.edge(id).u - 1].leaves.push_back(5 + static_cast<Vertex>(id));
    dec.minor_edges = k4.edges();
    CHECK(is_half_shallow_minor(host, k4, dec));

    // singleton stars only see the subdivided edges' endpoints: no K4 edges witnessed
    StarDecomposition bare;
    for (Vertex v = 1; v <= 4; ++v)
        bare.stars.push_back({v, {}});
    bare.minor_edges = k4.edges();
    CHECK_FALSE(is_half_shallow_minor(host, k4, bare));

    StarDecomposition overlapping = dec;
    overlapping.stars[1].leaves.push_back(5);
    CHECK_THROWS_AS(is_half_shallow_minor(host, k4, overlapping), InputError);

    StarDecomposition not_star = dec;
    not_star.stars[0].leaves.push_back(4);
    CHECK_THROWS_AS(check_star_decomposition(host, not_star), InputError);
}
