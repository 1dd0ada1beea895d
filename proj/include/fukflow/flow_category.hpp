#pragma once

#include <string>
#include <vector>

#include "fukflow/category.hpp"

namespace fukflow {

// Objects x4, x2_1..x2_k, x0. hom(x4,x2_j) = {K+_j, p+_j},
// hom(x2_j,x0) = {K-_j, p-_j}, hom(x4,x0) = complement_homology.
DirectedCategoryPresentation build_flow_category(const FramedLink& fl);
DirectedCategoryPresentation build_flow_category(const LinkingMatrix& L);

// A product mu(upper generator, lower generator) at a given middle.
struct CompositeTerm {
    std::size_t middle;
    std::size_t left;
    std::size_t right;
    bool operator==(const CompositeTerm&) const = default;
};

// lhs = rhs, coefficients mod 2.
struct CompositeRelation {
    std::string family;
    std::vector<CompositeTerm> lhs;
    std::vector<CompositeTerm> rhs;
};

std::vector<CompositeRelation> relation_table(const DirectedCategoryPresentation& cat);
std::string format_relation(const DirectedCategoryPresentation& cat, const CompositeRelation& r);
// Sum of both sides in canonical form; zero when the table satisfies r.
BitVector relation_residual(const DirectedCategoryPresentation& cat, const CompositeRelation& r);

}  // namespace fukflow
