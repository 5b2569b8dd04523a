#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/coloring.hpp"
#include "arbor/constructive.hpp"
#include "arbor/generators.hpp"
#include "arbor/solver.hpp"
#include "arbor/structure.hpp"
#include "arbor/verify.hpp"

#include <set>

using namespace arbor;

namespace {

CoverCertificate optimal(const Graph &g, ForestClass cls, CoverMode mode = CoverMode::Cover)
{
    SolveRequest req;
    req.graph = g;
    req.cls = cls;
    req.mode = mode;
    auto r = min_cover(req);
    REQUIRE(r.certificate);
    return *r.certificate;
}

ColoringCertificate acyclic(const Graph &g)
{
    auto r = acyclic_chromatic_number(g);
    REQUIRE(r.certificate);
    return *r.certificate;
}

std::vector<Graph> sample_graphs()
{
    std::vector<Graph> out{complete(4), complete(5), cycle(5), complete_bipartite(3, 4), path(6),
                           double_wheel(5).labeled.graph, path_power(8, 2)};
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        out.push_back(random_graph(8, 0.4, seed));
    return out;
}

} // namespace

TEST_CASE("split_layers class rule")
{
    CHECK(split_layers_class(ForestClass::InducedForest, 3) == ForestClass::InducedStarForest);
    CHECK(split_layers_class(ForestClass::InducedForest, 2) == ForestClass::WeakInducedStarForest);
    CHECK(split_layers_class(ForestClass::WeakInducedForest, 2) == ForestClass::WeakInducedStarForest);
    CHECK(split_layers_class(ForestClass::Forest, 2) == ForestClass::StarForest);
    CHECK(split_layers_class(ForestClass::Forest, 3) == ForestClass::StarForest);
}

TEST_CASE("split_layers on a single star leaves it alone")
{
    Graph star(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CoverCertificate cert{ForestClass::InducedForest, CoverMode::Cover, {star.edges()}};
    for (int modulus : {2, 3}) {
        auto out = split_layers(star, cert, modulus);
        REQUIRE(out.k() == 1);
        CHECK(out.parts[0] == star.edges());
        CHECK(verify_certificate(star, out).valid());
    }
}

TEST_CASE("split_layers on P5 gives two star forests")
{
    auto g = path(5);
    CoverCertificate cert{ForestClass::Forest, CoverMode::Partition, {g.edges()}};
    auto out = split_layers(g, cert, 2);
    CHECK(out.k() == 2);
    CHECK(out.cls == ForestClass::StarForest);
    CHECK(verify_certificate(g, out).valid());
}

TEST_CASE("split_layers bounds on K_{3,4}")
{
    auto g = complete_bipartite(3, 4);
    auto ia = optimal(g, ForestClass::InducedForest);
    auto three = split_layers(g, ia, 3);
    CHECK(three.k() <= 3 * ia.k());
    CHECK(three.cls == ForestClass::InducedStarForest);
    CHECK(verify_certificate(g, three).valid());
    auto two = split_layers(g, ia, 2);
    CHECK(two.k() <= 2 * ia.k());
    CHECK(verify_certificate(g, two).valid());
}

TEST_CASE("split_layers is valid on every sample and class")
{
    for (const auto &g : sample_graphs())
        for (auto cls : {ForestClass::Forest, ForestClass::WeakInducedForest, ForestClass::InducedForest})
            for (int modulus : {2, 3}) {
                auto in = optimal(g, cls);
                auto out = split_layers(g, in, modulus);
                CHECK(out.k() <= static_cast<std::size_t>(modulus) * in.k());
                CHECK(out.cls == split_layers_class(cls, modulus));
                CHECK(verify_certificate(g, out).valid());
            }
}

TEST_CASE("split_layers rejects a part outside its class")
{
    auto g = complete(3);
    CoverCertificate bad{ForestClass::Forest, CoverMode::Cover, {g.edges()}};
    CHECK_THROWS_AS(split_layers(g, bad, 2), InputError);
}

TEST_CASE("degeneracy star cover")
{
    auto k4 = degeneracy_star_cover(complete(4));
    CHECK(k4.cover.k() <= 6);
    CHECK(verify_certificate(complete(4), k4.cover).valid());
    auto tree = degeneracy_star_cover(path(7));
    CHECK(tree.cover.k() <= 2);
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
        for (int d : {1, 2, 3, 4}) {
            auto g = random_degenerate(25, d, seed);
            auto r = degeneracy_star_cover(g);
            CHECK(r.coloring.ordering.d <= d);
            CHECK(r.cover.k() <= static_cast<std::size_t>(2 * r.coloring.ordering.d));
            CHECK(r.cover.cls == ForestClass::WeakInducedStarForest);
            CHECK(r.cover.mode == CoverMode::Partition);
            CHECK(verify_certificate(g, r.cover).valid());
            CHECK(degeneracy_coloring_violations(g, r.coloring).empty());
        }
}

TEST_CASE("degeneracy colouring invariants hold on every prefix")
{
    // the induced subgraph on a prefix of the ordering inherits the colouring
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = random_degenerate(14, 3, seed);
        auto r = degeneracy_star_cover(g);
        const auto &order = r.coloring.ordering.order;
        for (std::size_t len = 1; len <= order.size(); ++len) {
            std::vector<Vertex> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
            std::vector<int> label(g.order() + 1, 0);
            auto sorted = prefix;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i)
                label[sorted[i]] = static_cast<int>(i) + 1;
            auto h = g.induced(sorted);
            DegeneracyColoring sub;
            sub.ordering.d = r.coloring.ordering.d;
            for (Vertex v : prefix) {
                sub.ordering.order.push_back(label[v]);
                sub.reserved_sets[label[v]] = r.coloring.reserved_sets.at(v);
            }
            for (const auto &[e, c] : r.coloring.edge_colors)
                if (label[e.u] && label[e.v])
                    sub.edge_colors[make_edge(label[e.u], label[e.v])] = c;
            CHECK_MESSAGE(degeneracy_coloring_violations(h, sub).empty(), "prefix " << len);
        }
    }
}

TEST_CASE("degeneracy colouring checker catches tampering")
{
    auto g = complete(4);
    auto r = degeneracy_star_cover(g);
    auto bad = r.coloring;
    bad.edge_colors.begin()->second = 2 * bad.ordering.d + 1;
    CHECK_FALSE(degeneracy_coloring_violations(g, bad).empty());
    bad = r.coloring;
    bad.reserved_sets.begin()->second.pop_back();
    CHECK_FALSE(degeneracy_coloring_violations(g, bad).empty());
    bad = r.coloring;
    for (auto &[e, c] : bad.edge_colors)
        c = 1;
    CHECK_FALSE(degeneracy_coloring_violations(g, bad).empty());
}

TEST_CASE("round robin matchings")
{
    for (int k : {2, 3, 4, 5, 6, 7}) {
        auto rounds = round_robin_matchings(k);
        CHECK(rounds.size() == static_cast<std::size_t>(k - 1 + k % 2));
        std::set<std::pair<int, int>> seen;
        for (const auto &round : rounds) {
            std::set<int> used;
            for (auto [a, b] : round) {
                CHECK(a < b);
                CHECK(a >= 1);
                CHECK(b <= k);
                CHECK(used.insert(a).second);
                CHECK(used.insert(b).second);
                CHECK(seen.insert({a, b}).second);
            }
        }
        CHECK(seen.size() == static_cast<std::size_t>(k * (k - 1) / 2));
    }
    CHECK_THROWS_AS(round_robin_matchings(1), InputError);
}

TEST_CASE("acyclic colouring covers")
{
    for (const auto &g : sample_graphs()) {
        auto col = acyclic(g);
        const std::size_t k = static_cast<std::size_t>(col.colors);
        auto pairs = acyclic_pairs_cover(g, col);
        CHECK(pairs.slots == k * (k - 1) / 2);
        CHECK(pairs.cover.k() <= pairs.slots);
        CHECK(pairs.cover.cls == ForestClass::InducedForest);
        CHECK(verify_certificate(g, pairs.cover).valid());
        auto matchings = acyclic_matching_cover(g, col);
        CHECK(matchings.slots == k - 1 + k % 2);
        CHECK(matchings.cover.k() <= matchings.slots);
        CHECK(matchings.cover.cls == ForestClass::WeakInducedForest);
        CHECK(verify_certificate(g, matchings.cover).valid());
    }
    // a colouring that is proper but not acyclic
    auto c4 = cycle(4);
    ColoringCertificate two{ColoringKind::AcyclicVertex, 2, {0, 1, 2, 1, 2}, {}};
    CHECK_THROWS_AS(acyclic_pairs_cover(c4, two), InputError);
    CHECK_THROWS_AS(acyclic_matching_cover(c4, two), InputError);
}

TEST_CASE("designated centres")
{
    Graph g(5, {{1, 2}, {3, 4}, {3, 5}});
    CoverCertificate cert{ForestClass::StarForest, CoverMode::Cover, {g.edges()}};
    auto centers = designate_centers(g, cert);
    REQUIRE(centers.size() == 1);
    REQUIRE(centers[0].size() == 2);
    std::map<Vertex, std::size_t> leaves;
    for (const auto &s : centers[0])
        leaves[s.center] = s.leaves.size();
    CHECK(leaves == std::map<Vertex, std::size_t>{{1, 1}, {3, 2}});
    auto p4 = path(4);
    CHECK_THROWS_AS(designate_centers(p4, {ForestClass::Forest, CoverMode::Cover, {p4.edges()}}), InputError);
}

TEST_CASE("leaf colour split")
{
    auto k4 = complete(4);
    auto sa = optimal(k4, ForestClass::StarForest);
    auto split = leaf_color_split(k4, sa, *chromatic_number(k4).certificate);
    CHECK(split.k() <= 8);
    CHECK(split.cls == ForestClass::WeakInducedStarForest);
    CHECK(verify_certificate(k4, split).valid());
    for (const auto &g : sample_graphs()) {
        auto stars = optimal(g, ForestClass::StarForest);
        auto col = *chromatic_number(g).certificate;
        auto out = leaf_color_split(g, stars, col);
        CHECK(out.k() <= stars.k() * static_cast<std::size_t>(col.colors));
        CHECK(verify_certificate(g, out).valid());
    }
    auto centers = designate_centers(k4, sa);
    centers.pop_back();
    CHECK_THROWS_AS(leaf_color_split(k4, sa, *chromatic_number(k4).certificate, centers), InputError);
}

TEST_CASE("lexicographic subset rank")
{
    CHECK(lexicographic_subset_rank({}, 2) == 0);
    CHECK(lexicographic_subset_rank({1}, 2) == 1);
    CHECK(lexicographic_subset_rank({1, 2}, 2) == 2);
    CHECK(lexicographic_subset_rank({2}, 2) == 3);
    // ranks are a bijection onto 0..2^K-1 that respects the sequence order
    const int universe = 5;
    std::vector<std::pair<std::vector<int>, std::uint64_t>> all;
    for (int mask = 0; mask < (1 << universe); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < universe; ++i)
            if (mask >> i & 1)
                s.push_back(i + 1);
        all.emplace_back(s, lexicographic_subset_rank(s, universe));
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i].second == i);
}

TEST_CASE("minor colouring with the trivial decomposition")
{
    auto g = complete_bipartite(2, 3);
    StarDecomposition dec;
    for (Vertex v = 1; v <= g.order(); ++v)
        dec.stars.push_back({v, {}});
    dec.minor_edges = g.edges();
    auto phi = *chromatic_number(g).certificate;
    auto isa = optimal(g, ForestClass::InducedStarForest);
    auto out = shallow_minor_coloring(g, dec, phi, isa);
    CHECK(out.minor == g);
    CHECK(verify_coloring(out.minor, out.coloring));
    // every star is a single vertex, so A_i is empty and psi = phi
    CHECK(out.coloring.vertex_colors == phi.vertex_colors);
}

TEST_CASE("minor colouring of K_n from its subdivision")
{
    for (int n : {3, 4, 5}) {
        auto g = complete(n);
        auto sd = subdivide_once(g);
        auto dec = subdivision_star_decomposition(g);
        CHECK(is_half_shallow_minor(sd, g, dec));
        auto phi = *chromatic_number(sd).certificate;
        auto isa = optimal(sd, ForestClass::InducedStarForest);
        auto out = shallow_minor_coloring(sd, dec, phi, isa);
        CHECK(out.minor == g);
        CHECK(verify_coloring(g, out.coloring));
        const auto bound = static_cast<std::uint64_t>(phi.colors) << isa.k();
        CHECK(static_cast<std::uint64_t>(out.coloring.colors) <= bound);
    }
}

TEST_CASE("minor colouring rejects bad inputs")
{
    auto g = complete(3);
    auto sd = subdivide_once(g);
    auto dec = subdivision_star_decomposition(g);
    auto phi = *chromatic_number(sd).certificate;
    auto isa = optimal(sd, ForestClass::InducedStarForest);
    auto wrong = phi;
    wrong.vertex_colors[1] = wrong.vertex_colors[sd.neighbors(1).front()];
    CHECK_THROWS_AS(shallow_minor_coloring(sd, dec, wrong, isa), InputError);
    auto forests = optimal(sd, ForestClass::Forest);
    CHECK_THROWS_AS(shallow_minor_coloring(sd, dec, phi, forests), InputError);
    auto broken = dec;
    broken.stars[0].center = broken.stars[1].center;
    CHECK_THROWS_AS(shallow_minor_coloring(sd, broken, phi, isa), InputError);
}
