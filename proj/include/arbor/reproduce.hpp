#pragma once

#include "arbor/certificate.hpp"
#include "arbor/graph.hpp"
#include "arbor/solver.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arbor {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Small graphs used by the property-style criteria: complete, bipartite and
/// multipartite graphs, cycles, paths, double wheels, path powers, small trees,
/// the two-copies gadget, sd_1(K_4) and seeded random graphs.
std::vector<NamedGraph> test_corpus(std::uint64_t seed = 1);

/// Minimum cover or partition size by enumerating every member of the class
/// inside E(G). Only for graphs with at most 16 edges.
int exhaustive_cover_number(const Graph &g, ForestClass cls, CoverMode mode);

/// Trees on n vertices with wisa = 2 and isa = 3, in free_trees order.
std::vector<Graph> wisa2_isa3_trees(int n);

struct CriterionResult {
    std::string id;
    std::string statement;
    bool gating = true;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

using CoverOracle = std::function<int(const Graph &, ForestClass, CoverMode)>;

struct ReproduceOptions {
    /// Adds criterion 5 and the long-running gk(3) and planar gadget rows.
    bool extended = false;
    /// Runs criterion 5 without the other long rows.
    bool criterion5 = false;
    std::uint64_t seed = 1;
    /// Criterion 13 compares the first tree found with this file when set.
    std::optional<std::filesystem::path> golden_tree;
    /// Reference for criterion 10; exhaustive_cover_number when empty.
    CoverOracle reference_cover;
    /// Called after every row, for streaming output.
    std::function<void(const CriterionResult &)> on_result;
};

std::vector<CriterionResult> reproduce(const ReproduceOptions &options);

/// One line per row.
void print_result(std::ostream &out, const CriterionResult &row);

bool all_gating_passed(const std::vector<CriterionResult> &rows);

} // namespace arbor
