#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/generators.hpp"
#include "arbor/io.hpp"
#include "arbor/structure.hpp"
#include "oracle.hpp"

#include <set>

using namespace arbor;

namespace {

bool bipartite(const Graph &g)
{
    std::vector<int> side(g.order() + 1, -1);
    for (Vertex s = 1; s <= g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int components(const Graph &g)
{
    std::vector<bool> seen(g.order() + 1, false);
    int count = 0;
    for (Vertex s = 1; s <= g.order(); ++s) {
        if (seen[s])
            continue;
        ++count;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
    }
    return count;
}

} // namespace

TEST_CASE("basic families")
{
    for (int n = 1; n <= 7; ++n) {
        CHECK(complete(n).size() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(path(n).size() == static_cast<std::size_t>(n - 1));
    }
    for (int n = 3; n <= 8; ++n) {
        auto c = cycle(n);
        CHECK(c.size() == static_cast<std::size_t>(n));
        for (Vertex v = 1; v <= n; ++v)
            CHECK(c.degree(v) == 2);
    }
    auto kb = complete_bipartite(2, 3);
    CHECK(kb.order() == 5);
    CHECK(kb.size() == 6);
    CHECK(kb.has_edge(1, 3));
    CHECK_FALSE(kb.has_edge(1, 2));
    CHECK(complete_multipartite({2, 2, 2}).size() == 12);
    CHECK(path_power(6, 2).size() == 9);
    CHECK_THROWS_AS(cycle(2), InputError);
}

TEST_CASE("double wheels")
{
    for (int l = 3; l <= 11; ++l) {
        auto dw = double_wheel(l);
        const auto &g = dw.labeled.graph;
        CHECK(g.order() == l + 2);
        CHECK(g.size() == static_cast<std::size_t>(3 * l));
        CHECK_FALSE(g.has_edge(dw.hub_x, dw.hub_y));
        CHECK(g.degree(dw.hub_x) == l);
        CHECK(g.degree(dw.hub_y) == l);
        CHECK(dw.rim.size() == static_cast<std::size_t>(l));
        for (std::size_t i = 0; i < dw.rim.size(); ++i)
            CHECK(g.has_edge(dw.rim[i], dw.rim[(i + 1) % dw.rim.size()]));
    }
    CHECK(double_wheel(5).labeled.graph.size() == 15);
    CHECK(double_wheel(7).labeled.graph.size() == 21);
    CHECK_THROWS_AS(double_wheel(2), InputError);
}

TEST_CASE("gk counts and structure")
{
    struct Expect {
        int k, n, m;
    } cases[] = {{3, 54, 87}, {4, 192, 426}};
    for (auto [k, n, m] : cases) {
        auto gg = gk(k);
        const auto &g = gg.labeled.graph;
        CHECK(g.order() == n);
        CHECK(static_cast<int>(g.size()) == m);
        CHECK(gg.path_vertices == k * (k - 1) * (k - 1));
        CHECK(gg.blocks.size() == static_cast<std::size_t>(k * (k - 1) / 2));
        CHECK(chordality(g).chordal);
        CHECK(clique_number(g) == k);
        CHECK(treewidth_chordal(g) == k - 1);
        for (const auto &b : gg.blocks) {
            for (const auto *s : {&b.prime, &b.double_prime}) {
                REQUIRE(s->size() == static_cast<std::size_t>(k - 1));
                for (std::size_t i = 0; i < s->size(); ++i)
                    for (std::size_t j = i + 1; j < s->size(); ++j)
                        CHECK(g.has_edge((*s)[i], (*s)[j]));
            }
            for (Vertex x : b.prime)
                CHECK(g.has_edge(b.w_prime, x));
            for (Vertex x : b.double_prime)
                CHECK(g.has_edge(b.w_double_prime, x));
            CHECK(g.degree(b.w_prime) == k - 1 + k - 1); // its S set plus a hanging clique
        }
        // every H_2 vertex carries one hanging K_k
        CHECK(gg.hanging.size() == static_cast<std::size_t>(gg.path_vertices + 2 * gg.blocks.size() + 1));
        std::set<std::string> kinds;
        for (std::size_t v = 1; v < gg.labeled.roles.size(); ++v)
            kinds.insert(gg.labeled.roles[v].substr(0, gg.labeled.roles[v].find(':')));
        CHECK(kinds == std::set<std::string>{"h1", "w", "hang"});
    }
    CHECK_THROWS_AS(gk(2), InputError);
}

TEST_CASE("gk block layout")
{
    // S' = first k-2 vertices plus the k-th of the block, S'' = the rest
    auto gg = gk(4);
    const auto &b = gg.blocks[1];
    int start = 1 + 2 * (4 - 1);
    CHECK(b.prime == std::vector<Vertex>{start, start + 1, start + 3});
    CHECK(b.double_prime == std::vector<Vertex>{start + 2, start + 4, start + 5});
}

TEST_CASE("two copies of K_{k,k+1} joined by an edge")
{
    for (int k = 2; k <= 5; ++k) {
        auto p = prop2_gadget(k);
        const auto &g = p.labeled.graph;
        CHECK(g.order() == 2 * (2 * k + 1));
        CHECK(static_cast<int>(g.size()) == 2 * k * (k + 1) + 1);
        CHECK(g.has_edge(p.bridge.u, p.bridge.v));
        CHECK(g.degree(p.bridge.u) == k + 1);
        CHECK(g.degree(p.bridge.v) == k + 1);
        std::vector<Edge> rest;
        for (auto e : g.edges())
            if (e != p.bridge)
                rest.push_back(e);
        Graph h(g.order(), rest);
        CHECK(components(h) == 2);
    }
    CHECK(prop2_gadget(2).bridge == Edge{3, 8});
    CHECK_THROWS_AS(prop2_gadget(1), InputError);
}

TEST_CASE("planar gadget")
{
    auto lg = planar_ia_gadget();
    const auto &g = lg.graph;
    CHECK(g.order() == 63);
    CHECK(g.size() == 162);
    // rim vertices of the DW_5 have degree 4 there, hubs 5; each gains 7 as a DW_7 hub
    auto dw5 = double_wheel(5);
    for (Vertex v = 1; v <= 7; ++v)
        CHECK(g.degree(v) == dw5.labeled.graph.degree(v) + 7);
    CHECK(g.degree(1) == 11);
    CHECK(g.degree(6) == 12);
}

TEST_CASE("degenerate lower-bound graphs")
{
    auto t = degenerate_lb_graph(2, 4);
    CHECK_FALSE(t.faithful);
    CHECK(t.labeled.graph.order() == 30);
    CHECK(t.labeled.graph.size() == 2 * 4 + 6 * 2 * 4);
    CHECK(degeneracy(t.labeled.graph).d <= 2);
    CHECK(bipartite(t.labeled.graph));

    auto f = degenerate_lb_graph(2);
    CHECK(f.faithful);
    CHECK(f.n_b == 32);
    CHECK(f.labeled.graph.order() == 15906);
    CHECK(degeneracy(f.labeled.graph).d <= 2);
    CHECK(bipartite(f.labeled.graph));

    auto three = degenerate_lb_graph(3, 5);
    CHECK(three.labeled.graph.order() == 3 + 5 + 10 * 5);
    CHECK(degeneracy(three.labeled.graph).d <= 3);

    try {
        degenerate_lb_graph(3);
        FAIL("expected the size guard to trigger");
    } catch (const InputError &e) {
        const long long n = 648, full = 3 + n + n * (n - 1) * (n - 2) / 6 * n;
        CHECK(std::string(e.what()).find(std::to_string(full)) != std::string::npos);
    }
    CHECK_THROWS_AS(degenerate_lb_graph(1), InputError);
}

TEST_CASE("subdivision")
{
    auto s3 = subdivide_once(complete(3));
    CHECK(s3.order() == 6);
    CHECK(s3.size() == 6);
    for (Vertex v = 1; v <= 6; ++v)
        CHECK(s3.degree(v) == 2);
    CHECK(components(s3) == 1);
    auto s4 = subdivide_once(complete(4));
    CHECK(s4.order() == 10);
    CHECK(s4.size() == 12);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        CHECK(bipartite(subdivide_once(random_graph(8, 0.5, seed))));
}

TEST_CASE("random generators are seeded and respect their parameters")
{
    CHECK(random_graph(12, 0.3, 5) == random_graph(12, 0.3, 5));
    CHECK(random_degenerate(30, 2, 9) == random_degenerate(30, 2, 9));
    CHECK_FALSE(random_degenerate(30, 2, 9) == random_degenerate(30, 2, 10));
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        for (int d : {1, 2, 3}) {
            auto g = random_degenerate(40, d, seed);
            CHECK(degeneracy(g).d <= d);
            CHECK(static_cast<int>(g.size()) == d * 40 - d * (d + 1) / 2);
        }
}

TEST_CASE("free trees")
{
    // known counts of unlabelled trees
    const std::size_t counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        auto trees = free_trees(n);
        CHECK(trees.size() == counts[n]);
        for (const auto &t : trees) {
            CHECK(t.order() == n);
            CHECK(static_cast<int>(t.size()) == n - 1);
            CHECK(components(t) == 1);
        }
    }
}

TEST_CASE("all graphs up to isomorphism")
{
    const std::size_t counts[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n)
        CHECK(all_graphs_up_to_isomorphism(n).size() == counts[n]);
}
