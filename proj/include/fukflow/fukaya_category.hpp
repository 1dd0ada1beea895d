#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fukflow/category.hpp"

namespace fukflow {

// Objects V4, V2_1..V2_k, V0. hom(V4,V2_j) = {x2_j, x1_j},
// hom(V2_j,V0) = {y2_j, y1'_j}, hom(V4,V0) generated by z2_j, z1'_j, z1_j, z0_j.
DirectedCategoryPresentation build_fukaya_category(const FramedLink& fl);
DirectedCategoryPresentation build_fukaya_category(const LinkingMatrix& L);

// Pairs (Fukaya-side name, flow-side name).
using GeneratorDictionary = std::vector<std::pair<std::string, std::string>>;

GeneratorDictionary theorem_b_dictionary(std::size_t k);

struct CategoryComparison {
    bool equal = false;
    std::vector<std::string> diff;
};

// Compares hom presentations and every composition entry after translating
// `fukaya` into the generators of `flow` through `dict`.
CategoryComparison compare_categories(const DirectedCategoryPresentation& flow,
                                      const DirectedCategoryPresentation& fukaya, const GeneratorDictionary& dict);

struct TheoremBResult {
    bool holds = false;
    GeneratorDictionary dictionary;
    std::vector<std::string> diff;
};

TheoremBResult verify_theorem_b(const FramedLink& fl);

nlohmann::json to_json(const TheoremBResult& r);

}  // namespace fukflow
