#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fukflow/homology_presentation.hpp"
#include "fukflow/link_data.hpp"

namespace fukflow {

// Three-level directed category: top, middles 1..k, bottom.
// Object indices: 0 is top, 1..k are the middles, k+1 is bottom.
struct DirectedCategoryPresentation {
    std::string kind;
    std::vector<std::string> objects;
    std::vector<F2Presentation> upper;  // hom(top, mid_j)
    std::vector<F2Presentation> lower;  // hom(mid_j, bottom)
    F2Presentation long_hom;            // hom(top, bottom), reduced
    // table[j][a][b]: product of generator a of upper[j] with generator b of
    // lower[j], as a raw vector over long_hom generators
    std::vector<std::vector<std::vector<BitVector>>> table;
    std::optional<LinkingMatrix> linking;

    std::size_t middle_count() const { return upper.size(); }
    std::size_t top() const { return 0; }
    std::size_t bottom() const { return middle_count() + 1; }

    F2Presentation hom(std::size_t a, std::size_t b) const;

    // Product of u in hom(top, mid_j) with v in hom(mid_i, bottom), canonical.
    // Distinct middles give zero.
    BitVector compose(std::size_t j, const BitVector& u, std::size_t i, const BitVector& v) const;
    BitVector compose_generators(std::size_t j, std::size_t a, std::size_t b) const;

    // Products of three or more morphisms vanish identically.
    BitVector higher_product(std::size_t order) const;

    bool operator==(const DirectedCategoryPresentation&) const = default;
};

// Objects/hom shapes, identities, directedness and relation compatibility.
std::vector<std::string> structural_problems(const DirectedCategoryPresentation& cat);

nlohmann::json to_json(const DirectedCategoryPresentation& cat);
std::string to_dot(const DirectedCategoryPresentation& cat);

// Composition table of the Morse function on RP^2 with three critical points:
// B2A2 = B1A1 = C1 and B1A2 = B2A1 = C2.
DirectedCategoryPresentation rp2_category();

}  // namespace fukflow
