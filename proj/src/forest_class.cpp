#include "arbor/forest_class.hpp"

#include <utility>

namespace arbor {

std::string_view tag(ForestClass cls)
{
    switch (cls) {
    case ForestClass::Forest: return "forest";
    case ForestClass::WeakInducedForest: return "wif";
    case ForestClass::InducedForest: return "if";
    case ForestClass::StarForest: return "sf";
    case ForestClass::WeakInducedStarForest: return "wisf";
    case ForestClass::InducedStarForest: return "isf";
    case ForestClass::Matching: return "matching";
    case ForestClass::InducedMatching: return "im";
    }
    return "?";
}

std::optional<ForestClass> parse_forest_class(std::string_view text)
{
    for (auto cls : all_forest_classes)
        if (tag(cls) == text)
            return cls;
    // long spellings accepted on the command line
    static constexpr std::pair<std::string_view, ForestClass> aliases[] = {
        {"weak-induced-forest", ForestClass::WeakInducedForest},
        {"induced-forest", ForestClass::InducedForest},
        {"star-forest", ForestClass::StarForest},
        {"weak-induced-star-forest", ForestClass::WeakInducedStarForest},
        {"induced-star-forest", ForestClass::InducedStarForest},
        {"induced-matching", ForestClass::InducedMatching},
    };
    for (auto [name, cls] : aliases)
        if (name == text)
            return cls;
    return std::nullopt;
}

std::vector<ForestClass> direct_superclasses(ForestClass cls)
{
    using enum ForestClass;
    switch (cls) {
    case Forest: return {};
    case WeakInducedForest: return {Forest};
    case InducedForest: return {WeakInducedForest};
    case StarForest: return {Forest};
    case WeakInducedStarForest: return {WeakInducedForest, StarForest};
    case InducedStarForest: return {InducedForest, WeakInducedStarForest};
    case Matching: return {WeakInducedStarForest};
    case InducedMatching: return {InducedStarForest, Matching};
    }
    return {};
}

bool is_subclass(ForestClass sub, ForestClass super)
{
    if (sub == super)
        return true;
    for (auto up : direct_superclasses(sub))
        if (is_subclass(up, super))
            return true;
    return false;
}

} // namespace arbor
