#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

/// Edge-set classes whose covering numbers are the arboricity-type
/// parameters: a, wia, ia, sa, wisa, isa, chi' and strong chromatic index.
enum class ForestClass {
    Forest,
    WeakInducedForest,
    InducedForest,
    StarForest,
    WeakInducedStarForest,
    InducedStarForest,
    Matching,
    InducedMatching,
};

inline constexpr std::array all_forest_classes{
    ForestClass::Forest,           ForestClass::WeakInducedForest,
    ForestClass::InducedForest,    ForestClass::StarForest,
    ForestClass::WeakInducedStarForest, ForestClass::InducedStarForest,
    ForestClass::Matching,         ForestClass::InducedMatching,
};

/// Short tag used on the command line and in certificate files.
std::string_view tag(ForestClass cls);
std::optional<ForestClass> parse_forest_class(std::string_view tag);

/// The whole subgraph must be induced in the host.
constexpr bool requires_induced(ForestClass cls)
{
    return cls == ForestClass::InducedForest || cls == ForestClass::InducedStarForest ||
           cls == ForestClass::InducedMatching;
}

/// Each component must be induced in the host.
constexpr bool requires_weak_induced(ForestClass cls)
{
    return cls == ForestClass::WeakInducedForest || cls == ForestClass::WeakInducedStarForest;
}

constexpr bool requires_stars(ForestClass cls)
{
    return cls == ForestClass::StarForest || cls == ForestClass::WeakInducedStarForest ||
           cls == ForestClass::InducedStarForest;
}

constexpr bool requires_matching(ForestClass cls)
{
    return cls == ForestClass::Matching || cls == ForestClass::InducedMatching;
}

/// Removing an edge from a member of the class yields a member. For these
/// classes minimum covers and minimum partitions have the same size.
constexpr bool downward_closed(ForestClass cls) { return !requires_induced(cls); }

/// Immediate containments; every member of `cls` is a member of each returned class.
std::vector<ForestClass> direct_superclasses(ForestClass cls);

/// Reflexive-transitive closure of direct_superclasses.
bool is_subclass(ForestClass sub, ForestClass super);

} // namespace arbor
