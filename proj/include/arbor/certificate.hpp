#pragma once

#include "arbor/forest_class.hpp"
#include "arbor/graph.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace arbor {

enum class CoverMode { Cover, Partition };

std::string_view tag(CoverMode mode);
std::optional<CoverMode> parse_cover_mode(std::string_view text);

/// A family of edge subsets claimed to cover (or partition) E(G), each part a
/// member of `cls`.
struct CoverCertificate {
    ForestClass cls = ForestClass::Forest;
    CoverMode mode = CoverMode::Cover;
    std::vector<std::vector<Edge>> parts;

    std::size_t k() const { return parts.size(); }
    bool operator==(const CoverCertificate &) const = default;
};

/// Vertex ordering in which every vertex has at most `d` earlier neighbours.
struct OrderingCertificate {
    std::vector<Vertex> order;
    int d = 0;
};

enum class ColoringKind { ProperVertex, AcyclicVertex, ProperEdge, StrongEdge };

std::string_view tag(ColoringKind kind);
std::optional<ColoringKind> parse_coloring_kind(std::string_view text);

constexpr bool colors_vertices(ColoringKind kind)
{
    return kind == ColoringKind::ProperVertex || kind == ColoringKind::AcyclicVertex;
}

/// Colours are 1..colors. Vertex kinds fill vertex_colors (index 0 unused,
/// 0 = unassigned); edge kinds fill edge_colors.
struct ColoringCertificate {
    ColoringKind kind = ColoringKind::ProperVertex;
    int colors = 0;
    std::vector<int> vertex_colors;
    std::map<Edge, int> edge_colors;

    bool operator==(const ColoringCertificate &) const = default;
};

struct Star {
    Vertex center = 0;
    std::vector<Vertex> leaves;
};

/// Vertex-disjoint stars of a host graph, star i standing for vertex i+1 of
/// the minor.
struct StarDecomposition {
    std::vector<Star> stars;
    std::vector<Edge> minor_edges;
};

} // namespace arbor
