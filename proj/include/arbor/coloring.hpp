#pragma once

#include "arbor/certificate.hpp"
#include "arbor/solver.hpp"

#include <optional>

namespace arbor {

struct ColoringResult {
    SolveStatus status = SolveStatus::Infeasible;
    /// The exact value when status is Feasible.
    int value = 0;
    int lower = 0;
    int upper = 0;
    std::optional<ColoringCertificate> certificate;
    SearchStats stats;
};

ColoringResult chromatic_number(const Graph &g, Budget budget = {});

/// Proper colouring in which every two classes induce a forest.
ColoringResult acyclic_chromatic_number(const Graph &g, Budget budget = {});

/// chi'(G), computed as a minimum partition into matchings.
ColoringResult edge_chromatic_number(const Graph &g, Budget budget = {});

/// Proper colouring with at most max_degree + 1 colours, first-fit along a
/// degeneracy ordering (so at most degeneracy + 1 colours).
ColoringCertificate greedy_coloring(const Graph &g);

} // namespace arbor
