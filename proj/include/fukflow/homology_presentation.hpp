#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fukflow/f2.hpp"
#include "fukflow/link_data.hpp"

namespace fukflow {

struct GradedClass {
    std::string name;
    std::optional<int> degree;
    std::string component;  // where the class lives, e.g. "K+_1" or "Sigma40_2"
    bool operator==(const GradedClass&) const = default;
};

struct F2Presentation {
    std::vector<GradedClass> generators;
    std::vector<BitVector> relations;

    // filled by reduce()
    bool reduced = false;
    std::vector<std::size_t> basis;       // indices of surviving generators, ascending
    std::vector<BitVector> expression;    // per generator, supported on basis

    std::size_t size() const { return generators.size(); }
    std::size_t rank() const { return basis.size(); }
    std::size_t index_of(const std::string& name) const;  // throws UnknownGenerator
    BitVector vec(const std::vector<std::string>& names) const;
    BitVector zero() const { return BitVector(generators.size()); }
    void add_relation(const std::vector<std::string>& names) { relations.push_back(vec(names)); }

    // Rewrites v in the canonical basis. Requires reduce().
    BitVector canonical(const BitVector& v) const;
    std::vector<std::string> names_of(const BitVector& v) const;
    std::string format(const BitVector& v) const;  // "a + b" or "0"

    // Betti number per degree 0..max_degree, from the canonical basis.
    std::vector<int> betti(int max_degree = 3) const;

    bool operator==(const F2Presentation& o) const {
        return generators == o.generators && relations == o.relations && reduced == o.reduced && basis == o.basis &&
               expression == o.expression;
    }
};

F2Presentation make_presentation(std::vector<GradedClass> generators);

// Row reduction pivots on the last nonzero column of each relation, so the
// earliest generators in the list are the ones kept in the canonical basis.
F2Presentation reduce(const F2Presentation& p);

// Generators: dU_j (degree 2), mu_j and lambda_j (degree 1), q_j (degree 0).
F2Presentation complement_homology(const LinkingMatrix& L);

nlohmann::json to_json(const F2Presentation& p);

}  // namespace fukflow
