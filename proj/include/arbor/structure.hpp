#pragma once

#include "arbor/certificate.hpp"
#include "arbor/graph.hpp"

#include <vector>

namespace arbor {

/// Minimum d with a witness ordering, from iterated minimum-degree removal.
OrderingCertificate degeneracy(const Graph &g);

/// Checks the OrderingCertificate invariant against g.
bool is_degeneracy_ordering(const Graph &g, const OrderingCertificate &cert);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering: every vertex's later neighbours form a clique.
    std::vector<Vertex> elimination_order;
    /// Chordless cycle of length >= 4 in cyclic order, when not chordal.
    std::vector<Vertex> chordless_cycle;
};

ChordalityResult chordality(const Graph &g);

bool is_perfect_elimination_order(const Graph &g, const std::vector<Vertex> &order);

/// Exact maximum clique size (branch and bound, greedy colouring bound).
int clique_number(const Graph &g);

/// Tree-width of a chordal graph. Throws InputError otherwise.
int treewidth_chordal(const Graph &g);

struct DensityResult {
    /// max over induced connected subgraphs H, |V(H)| >= 2, of ceil(|E(H)| / (|V(H)| - 1)).
    int value = 0;
    /// False when the graph was too large to enumerate and value is only a lower bound.
    bool exact = true;
    std::vector<Vertex> witness;
};

inline constexpr int kExactDensityMaxVertices = 20;

DensityResult nash_williams_density(const Graph &g);

/// True iff every edge v_i v_j of `minor` has a host edge between the centre
/// of star i and star j (or vice versa). Throws InputError if the stars are
/// not vertex-disjoint stars of `host` or their count differs from minor.order().
bool is_half_shallow_minor(const Graph &host, const Graph &minor, const StarDecomposition &stars);

/// Throws InputError if `stars` are not pairwise vertex-disjoint stars of host.
void check_star_decomposition(const Graph &host, const StarDecomposition &stars);

} // namespace arbor
