#pragma once

#include "arbor/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arbor {

/// A generated graph with a role tag per vertex (roles[0] unused).
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> roles;
};

Graph complete(int n);
/// Parts {1..m} and {m+1..m+n}.
Graph complete_bipartite(int m, int n);
Graph complete_multipartite(const std::vector<int> &part_sizes);
Graph cycle(int n);
Graph path(int n);

/// Vertices 1..n in path order, uv an edge iff 0 < |u - v| <= power.
Graph path_power(int n, int power);

struct DoubleWheel {
    LabeledGraph labeled;
    std::vector<Vertex> rim; // cyclic order
    Vertex hub_x = 0;
    Vertex hub_y = 0;
};

/// Rim cycle 1..l, hubs l+1 and l+2 adjacent to every rim vertex.
DoubleWheel double_wheel(int l);

struct GkBlock {
    std::vector<Vertex> prime;        // first k-2 vertices of the block plus its k-th
    std::vector<Vertex> double_prime; // the remaining k-1 vertices
    Vertex w_prime = 0;
    Vertex w_double_prime = 0;
};

struct GkGraph {
    LabeledGraph labeled;
    int k = 0;
    int path_vertices = 0; // H_1 occupies 1..path_vertices
    std::vector<GkBlock> blocks;
    /// host vertex of H_2 -> the k-1 fresh vertices completing its hanging K_k
    std::vector<std::vector<Vertex>> hanging;
};

/// Tree-width k-1 witness: (k-1)-st power of a path on k(k-1)^2 vertices,
/// cliques S', S'' per block extended by w', w'', and a K_k hung on every
/// vertex of that graph. Requires k >= 3.
GkGraph gk(int k);

struct Prop2Gadget {
    LabeledGraph labeled;
    Edge bridge; // joins the larger sides of the two K_{k,k+1} copies
};

/// Two disjoint K_{k,k+1} joined by one edge between their (k+1)-sides.
Prop2Gadget prop2_gadget(int k);

/// One DW_5 on vertices 1..7 with a DW_7 hung by a hub at each of them.
LabeledGraph planar_ia_gadget();

struct DegenerateLowerBound {
    LabeledGraph labeled;
    int d = 0;
    std::int64_t n_b = 0;
    /// False when a truncated N was requested.
    bool faithful = true;
};

inline constexpr std::int64_t kMaxGeneratedVertices = 5'000'000;

/// A (|A| = d) fully joined to B (|B| = N), and each d-subset S of B fully
/// joined to its own fresh set B_S of N vertices. Default N = 2^d d^(d+1).
DegenerateLowerBound degenerate_lb_graph(int d, std::optional<std::int64_t> n_override = std::nullopt);

/// sd_1(G): vertex n + 1 + id subdivides edge id.
Graph subdivide_once(const Graph &g);

/// Each vertex i > 1 joins min(d, i - 1) uniformly chosen earlier vertices,
/// so 1..n is a d-degeneracy ordering. Vertex ids are then shuffled.
Graph random_degenerate(int n, int d, std::uint64_t seed);

Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// All free trees on n vertices up to isomorphism, in canonical-code order.
std::vector<Graph> free_trees(int n);

/// Every graph on n vertices up to isomorphism (n <= 6).
std::vector<Graph> all_graphs_up_to_isomorphism(int n);

} // namespace arbor
