#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace arbor {

/// Raised when an operation receives arguments that violate its contract.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a text file does not conform to one of the arbor formats.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Vertex = int;

/// Unordered vertex pair stored with the smaller endpoint first.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

Edge make_edge(Vertex a, Vertex b);

std::string to_string(Edge e);

/// Immutable simple undirected graph on vertices 1..n.
///
/// Edges are kept sorted lexicographically, so two graphs built from the same
/// edge set compare equal regardless of insertion order. Edge ids are
/// positions in that sorted list.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(std::size_t id) const { return edges_[id]; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    /// Edge ids parallel to neighbors(v).
    std::span<const std::size_t> incident_edges(Vertex v) const { return incident_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    bool contains(Vertex v) const { return v >= 1 && v <= n_; }
    bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
    std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

    /// Subgraph induced by `keep`, relabelled 1..|keep| in the given order.
    Graph induced(std::span<const Vertex> keep) const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    // index 0 unused so vertex ids index directly
    std::vector<std::vector<Vertex>> adjacency_{1};
    std::vector<std::vector<std::size_t>> incident_{1};
};

} // namespace arbor
