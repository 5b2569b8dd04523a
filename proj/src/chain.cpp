#include "arbor/chain.hpp"

#include <algorithm>

namespace arbor {

std::string_view name(Parameter p)
{
    switch (p) {
    case Parameter::Arboricity: return "a";
    case Parameter::WeakInducedArboricity: return "wia";
    case Parameter::InducedArboricity: return "ia";
    case Parameter::StarArboricity: return "sa";
    case Parameter::WeakInducedStarArboricity: return "wisa";
    case Parameter::InducedStarArboricity: return "isa";
    case Parameter::ChromaticIndex: return "chi'";
    case Parameter::StrongChromaticIndex: return "chi'_s";
    case Parameter::AcyclicChromaticNumber: return "chi_acyc";
    }
    return "?";
}

ForestClass covering_class(Parameter p)
{
    switch (p) {
    case Parameter::Arboricity: return ForestClass::Forest;
    case Parameter::WeakInducedArboricity: return ForestClass::WeakInducedForest;
    case Parameter::InducedArboricity: return ForestClass::InducedForest;
    case Parameter::StarArboricity: return ForestClass::StarForest;
    case Parameter::WeakInducedStarArboricity: return ForestClass::WeakInducedStarForest;
    case Parameter::InducedStarArboricity: return ForestClass::InducedStarForest;
    case Parameter::ChromaticIndex: return ForestClass::Matching;
    case Parameter::StrongChromaticIndex: return ForestClass::InducedMatching;
    case Parameter::AcyclicChromaticNumber: break;
    }
    throw InputError("chi_acyc is not a covering number");
}

namespace {

long long pow3(int e)
{
    long long r = 1;
    for (int i = 0; i < e && r < (1LL << 40); ++i)
        r *= 3;
    return r;
}

} // namespace

std::vector<std::string> check_inequality_chain(const ParameterValues &values)
{
    using enum Parameter;
    std::vector<std::string> violations;
    auto get = [&](Parameter p) -> std::optional<long long> {
        auto it = values.find(p);
        if (it == values.end())
            return std::nullopt;
        return it->second;
    };
    auto le = [&](Parameter lhs, Parameter rhs, long long factor, const char *label) {
        auto l = get(lhs), r = get(rhs);
        if (l && r && *l > factor * *r)
            violations.push_back(std::string(label) + ": " + std::string(name(lhs)) + "=" + std::to_string(*l) +
                                 " exceeds " + (factor == 1 ? "" : std::to_string(factor) + "*") +
                                 std::string(name(rhs)) + "=" + std::to_string(*r));
    };

    le(Arboricity, WeakInducedArboricity, 1, "chain 1");
    le(WeakInducedArboricity, InducedArboricity, 1, "chain 1");
    le(InducedArboricity, InducedStarArboricity, 1, "chain 1");
    le(InducedStarArboricity, StrongChromaticIndex, 1, "chain 1");
    le(WeakInducedArboricity, WeakInducedStarArboricity, 1, "chain 2");
    le(WeakInducedStarArboricity, InducedStarArboricity, 1, "chain 2");
    le(Arboricity, StarArboricity, 1, "chain 3");
    le(StarArboricity, WeakInducedStarArboricity, 1, "chain 3");
    le(WeakInducedStarArboricity, ChromaticIndex, 1, "chain 3");
    le(ChromaticIndex, StrongChromaticIndex, 1, "chain 3");
    le(StarArboricity, Arboricity, 2, "layer splitting");
    le(WeakInducedStarArboricity, WeakInducedArboricity, 2, "layer splitting");
    le(InducedStarArboricity, InducedArboricity, 3, "layer splitting");
    le(StarArboricity, AcyclicChromaticNumber, 1, "star arboricity vs acyclic colouring");

    if (auto wia = get(WeakInducedArboricity), a = get(Arboricity); wia && a && *wia > 4 * *a * *a)
        violations.push_back("leaf-colour split: wia=" + std::to_string(*wia) + " exceeds 4a^2=" +
                             std::to_string(4 * *a * *a));
    if (auto ia = get(InducedArboricity), acyc = get(AcyclicChromaticNumber); ia && acyc) {
        if (*acyc > pow3(static_cast<int>(*ia)))
            violations.push_back("acyclic colouring: chi_acyc=" + std::to_string(*acyc) + " exceeds 3^ia, ia=" +
                                 std::to_string(*ia));
        if (*ia > *acyc * (*acyc - 1) / 2)
            violations.push_back("acyclic colouring: ia=" + std::to_string(*ia) + " exceeds C(chi_acyc, 2)=" +
                                 std::to_string(*acyc * (*acyc - 1) / 2));
    }
    return violations;
}

ParameterReport compute_parameters(const Graph &g, const ParameterOptions &options)
{
    using enum Parameter;
    ParameterReport report;

    auto seed = [&](std::initializer_list<Parameter> below) {
        int lb = 0;
        if (options.chain_seeding)
            for (auto p : below)
                if (auto it = report.values.find(p); it != report.values.end())
                    lb = std::max(lb, it->second);
        return lb;
    };

    auto cover = [&](Parameter p, CoverMode mode, std::initializer_list<Parameter> below) {
        SolveRequest req;
        req.graph = g;
        req.cls = covering_class(p);
        req.mode = mode;
        req.budget = options.budget;
        req.known_lower_bound = seed(below);
        auto result = min_cover(req);
        if (result.status == SolveStatus::Feasible) {
            report.values[p] = result.k;
            report.covers[p] = *result.certificate;
        } else {
            report.unresolved.push_back(p);
        }
    };

    cover(Arboricity, CoverMode::Partition, {});
    cover(StarArboricity, CoverMode::Partition, {Arboricity});
    cover(WeakInducedArboricity, CoverMode::Partition, {Arboricity});
    cover(WeakInducedStarArboricity, CoverMode::Partition, {WeakInducedArboricity, StarArboricity});
    cover(InducedArboricity, CoverMode::Cover, {WeakInducedArboricity});
    cover(InducedStarArboricity, CoverMode::Cover, {InducedArboricity, WeakInducedStarArboricity});
    cover(ChromaticIndex, CoverMode::Partition, {WeakInducedStarArboricity});
    cover(StrongChromaticIndex, CoverMode::Cover, {InducedStarArboricity, ChromaticIndex});

    auto acyc = acyclic_chromatic_number(g, options.budget);
    if (acyc.status == SolveStatus::Feasible) {
        report.values[AcyclicChromaticNumber] = acyc.value;
        report.acyclic_coloring = acyc.certificate;
    } else {
        report.unresolved.push_back(AcyclicChromaticNumber);
    }
    return report;
}

} // namespace arbor
