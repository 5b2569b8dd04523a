#pragma once

#include "arbor/coloring.hpp"
#include "arbor/solver.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

enum class Parameter {
    Arboricity,                  // a
    WeakInducedArboricity,       // wia
    InducedArboricity,           // ia
    StarArboricity,              // sa
    WeakInducedStarArboricity,   // wisa
    InducedStarArboricity,       // isa
    ChromaticIndex,              // chi'
    StrongChromaticIndex,        // chi'_s
    AcyclicChromaticNumber,      // chi_acyc
};

inline constexpr std::array all_parameters{
    Parameter::Arboricity,           Parameter::WeakInducedArboricity,     Parameter::InducedArboricity,
    Parameter::StarArboricity,       Parameter::WeakInducedStarArboricity, Parameter::InducedStarArboricity,
    Parameter::ChromaticIndex,       Parameter::StrongChromaticIndex,      Parameter::AcyclicChromaticNumber,
};

std::string_view name(Parameter p);

/// The covering class whose minimum cover size is `p` (not defined for chi_acyc).
ForestClass covering_class(Parameter p);

using ParameterValues = std::map<Parameter, int>;

/// Every applicable inequality among the supplied values that fails, as a
/// human-readable line. Checked: the three basic chains, sa <= 2a,
/// wisa <= 2wia, isa <= 3ia, wia <= 4a^2, sa <= chi_acyc and
/// chi_acyc <= 3^ia, ia <= C(chi_acyc, 2).
std::vector<std::string> check_inequality_chain(const ParameterValues &values);

struct ParameterOptions {
    Budget budget;
    /// Feed already-computed smaller parameters to later searches as lower
    /// bounds. Leave off when the results are themselves checked against the chain.
    bool chain_seeding = false;
};

struct ParameterReport {
    ParameterValues values;
    std::map<Parameter, CoverCertificate> covers;
    std::optional<ColoringCertificate> acyclic_coloring;
    /// Parameters whose computation hit the budget.
    std::vector<Parameter> unresolved;
};

ParameterReport compute_parameters(const Graph &g, const ParameterOptions &options = {});

} // namespace arbor
