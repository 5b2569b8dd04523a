#pragma once

#include "arbor/certificate.hpp"
#include "arbor/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace arbor {

/// True iff the subgraph (V(S), S) belongs to `cls` relative to host `g`.
/// The empty set belongs to every class. Throws InputError if S has an edge
/// that is not in g.
bool validate_edge_set(const Graph &g, std::span<const Edge> edges, ForestClass cls);

struct VerifyReport {
    std::vector<bool> part_valid;
    std::vector<std::size_t> empty_parts;
    /// Part edges that are not edges of the host graph.
    std::vector<Edge> foreign_edges;
    /// Host edges covered by no part.
    std::vector<Edge> missing_edges;
    /// Partition mode only: edges lying in two or more parts.
    std::vector<Edge> shared_edges;
    /// load[v] = number of parts whose vertex set contains v (index 0 unused).
    std::vector<int> load;

    bool valid() const;
    /// One diagnostic line per failure, empty when valid.
    std::vector<std::string> diagnostics() const;
};

VerifyReport verify_certificate(const Graph &g, const CoverCertificate &cert);

/// Throws InputError when the assignment is partial or references elements
/// outside g.
bool verify_coloring(const Graph &g, const ColoringCertificate &col);

} // namespace arbor
