#pragma once

#include "arbor/certificate.hpp"
#include "arbor/graph.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

/// Roots every tree of every part at its smallest vertex and buckets edges by
/// the depth of their upper endpoint modulo `modulus` (2 or 3). Empty buckets
/// are dropped, so the result has at most modulus * k parts. Output class:
/// induced input with modulus 3 gives induced star forests, any induced or
/// weak induced input gives weak induced star forests, otherwise star forests.
/// Throws InputError if a part is not a member of cert.cls.
CoverCertificate split_layers(const Graph &g, const CoverCertificate &cert, int modulus);

/// The class split_layers produces from `input` with `modulus`.
ForestClass split_layers_class(ForestClass input, int modulus);

struct DegeneracyColoring {
    OrderingCertificate ordering;
    /// Colours in 1..2d.
    std::map<Edge, int> edge_colors;
    /// S(v), d colours each, sorted.
    std::map<Vertex, std::vector<int>> reserved_sets;
};

struct DegeneracyStarCover {
    DegeneracyColoring coloring;
    /// Nonempty colour classes in colour order, weak induced star forests, partition mode.
    CoverCertificate cover;
};

/// Edge colouring with at most 2d colours along a degeneracy ordering in which
/// every colour class is a weak induced star forest of right stars.
DegeneracyStarCover degeneracy_star_cover(const Graph &g);

/// Violations of the DegeneracyColoring invariants on g (empty when all hold).
/// Checks |S(v)| = d, S(v) avoids left-going edge colours, colours in 1..2d,
/// and every colour class is a weak induced star forest of right stars.
std::vector<std::string> degeneracy_coloring_violations(const Graph &g, const DegeneracyColoring &col);

/// A cover built from k colour classes, with one slot per class pair or per
/// matching. Empty slots are not kept in `cover`, so cover.k() <= slots.
struct SlotCover {
    CoverCertificate cover;
    std::size_t slots = 0;
};

/// Slot {i,j} holds every edge between classes i and j: C(k,2) slots of
/// induced forests. Throws InputError unless `col` is a valid acyclic colouring.
SlotCover acyclic_pairs_cover(const Graph &g, const ColoringCertificate &col);

/// Slot l holds the edges whose class pair lies in matching l of
/// round_robin_matchings(k): k-1+(k mod 2) slots of weak induced forests.
SlotCover acyclic_matching_cover(const Graph &g, const ColoringCertificate &col);

/// Circle method 1-factorisation of K_k on 1..k (k-1 rounds for even k,
/// k rounds for odd k). Pairs are (smaller, larger). Throws InputError if k < 2.
std::vector<std::vector<std::pair<int, int>>> round_robin_matchings(int k);

/// Stars of each star-forest part. A star with a single edge is centred at
/// its smaller vertex. Throws InputError if a part is not a star forest.
std::vector<std::vector<Star>> designate_centers(const Graph &g, const CoverCertificate &stars);

/// Part (i,j) holds the edges of star forest i whose leaf has colour j.
/// Empty parts are dropped. Throws InputError if `centers` does not match the
/// parts of `stars` or if `col` is not a proper vertex colouring.
CoverCertificate leaf_color_split(const Graph &g, const CoverCertificate &stars, const ColoringCertificate &col,
                                  const std::vector<std::vector<Star>> &centers);
CoverCertificate leaf_color_split(const Graph &g, const CoverCertificate &stars, const ColoringCertificate &col);

struct MinorColoring {
    Graph minor;
    ColoringCertificate coloring;
};

/// Colours minor vertex i by the pair (phi(c_i), A_i), A_i the indices of the
/// star forests meeting E(S_i), encoded as phi(c_i) + chi(phi) * rank(A_i)
/// with subsets ranked lexicographically. Throws InputError on an invalid
/// decomposition, an improper phi or an isa_cert that is not a valid cover by
/// induced star forests.
MinorColoring shallow_minor_coloring(const Graph &g, const StarDecomposition &dec, const ColoringCertificate &phi,
                                     const CoverCertificate &isa_cert);

/// Lexicographic rank of a sorted subset of 1..universe among all subsets of
/// 1..universe ordered as sorted sequences (the empty set has rank 0).
std::uint64_t lexicographic_subset_rank(const std::vector<int> &subset, int universe);

/// For sd_1(G) built by subdivide_once: star v is centred at v and holds the
/// subdivision vertices of the edges whose smaller endpoint is v. The minor is G.
StarDecomposition subdivision_star_decomposition(const Graph &g);

} // namespace arbor
