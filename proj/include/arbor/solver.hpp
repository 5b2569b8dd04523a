#pragma once

#include "arbor/certificate.hpp"
#include "arbor/graph.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

namespace arbor {

/// Largest vertex count the exact engines accept.
inline constexpr int kMaxExactVertices = 127;

struct Budget {
    std::uint64_t nodes = 10'000'000;
    std::chrono::milliseconds wall_time{60'000};
};

enum class SolveStatus { Feasible, Infeasible, BudgetExhausted };

std::string_view tag(SolveStatus status);

struct SolveRequest {
    Graph graph;
    ForestClass cls = ForestClass::Forest;
    CoverMode mode = CoverMode::Cover;
    /// Set: decide whether at most k parts suffice. Unset: minimise.
    std::optional<int> k;
    /// vertex -> maximum number of parts whose vertex set contains it
    std::map<Vertex, int> load_caps;
    /// vertex -> minimum number of parts whose vertex set contains it
    std::map<Vertex, int> load_floors;
    Budget budget;
    /// Test hook: disabling must never change feasibility.
    bool symmetry_breaking = true;
    /// A lower bound on the optimum already proven elsewhere (minimise only).
    int known_lower_bound = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<CoverCertificate> certificate;
    /// Decide: the requested k. Minimise: the optimum when feasible.
    int k = 0;
    /// Proven bounds on the optimum (minimise) -- lower == upper when solved.
    int lower = 0;
    int upper = 0;
    SearchStats stats;
};

/// Exact decision: can E(G) be covered (or partitioned) by at most k members
/// of the class under the load constraints? Infeasible answers are proofs.
SolveResult decide_cover(const SolveRequest &request);

/// Iterative deepening from sound lower bounds up to the optimum.
SolveResult min_cover(const SolveRequest &request);

/// Lower bound used by min_cover before any search (density, part size,
/// maximum degree for matching classes, load floors, the request's hint).
int cover_lower_bound(const SolveRequest &request);

/// Upper bound on the number of edges of a single member of the class;
/// exact for induced classes on at most 20 vertices.
int max_part_size(const Graph &g, ForestClass cls);

/// Minimum number of induced matchings covering E(G).
SolveResult strong_chromatic_index(const Graph &g, Budget budget = {});

} // namespace arbor
