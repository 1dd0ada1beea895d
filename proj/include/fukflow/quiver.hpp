#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fukflow/category.hpp"
#include "fukflow/f2.hpp"

namespace fukflow {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
    bool operator==(const Arrow&) const = default;
};

// Arrow indices in the order they are traversed.
using Path = std::vector<std::size_t>;

// Sum of paths required to vanish.
struct QuiverRelation {
    std::string name;
    std::vector<Path> paths;
    bool operator==(const QuiverRelation&) const = default;
};

struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<QuiverRelation> relations;

    std::size_t arrow_index(const std::string& name) const;  // UnknownGenerator
    // Unique arrow names, endpoints in range, and each relation's paths
    // composable with common endpoints. Throws InvalidModel.
    void validate() const;
    bool operator==(const QuiverPresentation&) const = default;
};

struct QuiverRepresentation {
    std::vector<std::size_t> dims;  // per vertex
    std::vector<BitMatrix> maps;    // per arrow, dim(target) x dim(source)
    bool operator==(const QuiverRepresentation&) const = default;
};

// Vertices are the objects, arrows the hom basis elements, and each product
// of basis arrows gives one relation "composite - expansion".
QuiverPresentation from_category(const DirectedCategoryPresentation& cat);

// a_0, a_1: x4 -> x2; b_0, b_1: x2 -> x0; c_0, c_1: x4 -> x0 with
// b_1a_1 = 0, b_0a_0 = c_0, b_0a_1 - b_1a_0 = c_1 (read mod 2).
QuiverPresentation cp2_quiver();
// All dimensions 1, the _0 arrows the identity and the _1 arrows zero.
QuiverRepresentation standard_representation(const QuiverPresentation& q);
QuiverRepresentation zero_representation(const QuiverPresentation& q, const std::vector<std::size_t>& dims);
QuiverRepresentation random_representation(const QuiverPresentation& q, const std::vector<std::size_t>& dims,
                                           std::mt19937_64& rng);

// Hom(top, -) for a category and the quiver from_category builds from it.
QuiverRepresentation regular_representation(const DirectedCategoryPresentation& cat);

// Throws ShapeMismatch when r does not fit q.
void check_shape(const QuiverPresentation& q, const QuiverRepresentation& r);
BitMatrix evaluate(const QuiverPresentation& q, const QuiverRepresentation& r, const Path& p);

struct RelationCheck {
    bool ok = true;
    std::vector<std::string> violations;
};
RelationCheck check_relations(const QuiverPresentation& q, const QuiverRepresentation& r);

constexpr std::size_t kMaxIsoDimension = 3;

// Every invertible n x n matrix, n <= 3.
std::vector<BitMatrix> general_linear_group(std::size_t n);
BitMatrix inverse(const BitMatrix& g);  // ShapeMismatch if singular

// Search for vertexwise invertible g with g_t M1 = M2 g_s on every arrow.
// DimensionTooLarge beyond kMaxIsoDimension.
bool isomorphic(const QuiverPresentation& q, const QuiverRepresentation& r1, const QuiverRepresentation& r2);
// Independent check: walks the whole orbit of r1 under M -> g_t M g_s^-1.
bool isomorphic_by_orbit(const QuiverPresentation& q, const QuiverRepresentation& r1, const QuiverRepresentation& r2);

nlohmann::json to_json(const QuiverPresentation& q);
nlohmann::json to_json(const QuiverPresentation& q, const QuiverRepresentation& r);
QuiverRepresentation representation_from_json(const QuiverPresentation& q, const nlohmann::json& j);
std::string to_dot(const QuiverPresentation& q);

}  // namespace fukflow
