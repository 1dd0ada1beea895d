#include "fukflow/category.hpp"

#include <sstream>

#include "fukflow/errors.hpp"

namespace fukflow {

namespace {

F2Presentation identity_hom(const std::string& object) {
    auto p = make_presentation({{"e_" + object, 0, object}});
    return reduce(p);
}

F2Presentation zero_hom() { return reduce(make_presentation({})); }

}  // namespace

F2Presentation DirectedCategoryPresentation::hom(std::size_t a, std::size_t b) const {
    if (a > bottom() || b > bottom()) throw Error(ErrorKind::InvalidComponent, "object index out of range");
    if (a == b) return identity_hom(objects[a]);
    if (a == top() && b == bottom()) return long_hom;
    if (a == top()) return upper[b - 1];
    if (b == bottom() && a != top()) return lower[a - 1];
    return zero_hom();
}

BitVector DirectedCategoryPresentation::compose(std::size_t j, const BitVector& u, std::size_t i,
                                                const BitVector& v) const {
    BitVector raw(long_hom.size());
    if (i != j) return raw;
    for (std::size_t a : u.support())
        for (std::size_t b : v.support()) raw ^= table[j][a][b];
    return long_hom.canonical(raw);
}

BitVector DirectedCategoryPresentation::compose_generators(std::size_t j, std::size_t a, std::size_t b) const {
    return long_hom.canonical(table[j][a][b]);
}

BitVector DirectedCategoryPresentation::higher_product(std::size_t) const { return BitVector(long_hom.size()); }

std::vector<std::string> structural_problems(const DirectedCategoryPresentation& cat) {
    std::vector<std::string> out;
    const std::size_t k = cat.middle_count();
    if (cat.objects.size() != k + 2) out.push_back("object count is not k+2");
    if (cat.lower.size() != k || cat.table.size() != k) out.push_back("middle layer sizes disagree");
    if (!cat.long_hom.reduced) out.push_back("hom(top,bottom) is not reduced");
    if (!out.empty()) return out;

    for (std::size_t a = 0; a < cat.objects.size(); ++a)
        for (std::size_t b = 0; b < cat.objects.size(); ++b) {
            const auto h = cat.hom(a, b);
            const bool below = (a > b) || (a != b && a != cat.top() && b != cat.bottom());
            if (a == b && h.rank() != 1) out.push_back("hom(" + cat.objects[a] + "," + cat.objects[a] + ") is not spanned by the identity");
            if (below && h.size() != 0) out.push_back("hom(" + cat.objects[a] + "," + cat.objects[b] + ") should vanish");
        }
    for (std::size_t j = 0; j < k; ++j) {
        const auto& up = cat.upper[j];
        const auto& lo = cat.lower[j];
        if (cat.table[j].size() != up.size()) {
            out.push_back("table row count mismatch at middle " + std::to_string(j + 1));
            continue;
        }
        for (const auto& row : cat.table[j]) {
            if (row.size() != lo.size()) out.push_back("table column count mismatch at middle " + std::to_string(j + 1));
            for (const auto& e : row)
                if (e.size() != cat.long_hom.size()) out.push_back("table entry has wrong length");
        }
        // a relation on either side must compose to zero against every generator of the other
        for (const auto& rel : up.relations)
            for (std::size_t b = 0; b < lo.size(); ++b)
                if (cat.compose(j, rel, j, BitVector::unit(lo.size(), b)).any())
                    out.push_back("relation of " + cat.objects[0] + "->" + cat.objects[j + 1] + " composes to nonzero");
        for (const auto& rel : lo.relations)
            for (std::size_t a = 0; a < up.size(); ++a)
                if (cat.compose(j, BitVector::unit(up.size(), a), j, rel).any())
                    out.push_back("relation of " + cat.objects[j + 1] + "->" + cat.objects.back() + " composes to nonzero");
    }
    return out;
}

nlohmann::json to_json(const DirectedCategoryPresentation& cat) {
    nlohmann::json j;
    j["kind"] = cat.kind;
    j["objects"] = cat.objects;
    nlohmann::json homs = nlohmann::json::array();
    auto add = [&](std::size_t a, std::size_t b, const F2Presentation& p) {
        nlohmann::json h = to_json(p);
        h["source"] = cat.objects[a];
        h["target"] = cat.objects[b];
        homs.push_back(h);
    };
    for (std::size_t m = 0; m < cat.middle_count(); ++m) add(cat.top(), m + 1, cat.upper[m]);
    for (std::size_t m = 0; m < cat.middle_count(); ++m) add(m + 1, cat.bottom(), cat.lower[m]);
    add(cat.top(), cat.bottom(), cat.long_hom);
    j["homs"] = homs;
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t m = 0; m < cat.middle_count(); ++m)
        for (std::size_t a = 0; a < cat.upper[m].size(); ++a)
            for (std::size_t b = 0; b < cat.lower[m].size(); ++b)
                table.push_back({{"middle", cat.objects[m + 1]},
                                 {"left", cat.upper[m].generators[a].name},
                                 {"right", cat.lower[m].generators[b].name},
                                 {"raw", cat.long_hom.names_of(cat.table[m][a][b])},
                                 {"value", cat.long_hom.names_of(cat.compose_generators(m, a, b))}});
    j["composition"] = table;
    j["higher_products"] = "zero";
    if (cat.linking) j["linking_matrix"] = to_json(*cat.linking);
    return j;
}

std::string to_dot(const DirectedCategoryPresentation& cat) {
    std::ostringstream os;
    os << "digraph \"" << cat.kind << "\" {\n  rankdir=TB;\n";
    for (const auto& o : cat.objects) os << "  \"" << o << "\";\n";
    auto edges = [&](std::size_t a, std::size_t b, const F2Presentation& p) {
        for (std::size_t i : p.basis)
            os << "  \"" << cat.objects[a] << "\" -> \"" << cat.objects[b] << "\" [label=\"" << p.generators[i].name
               << "\"];\n";
    };
    for (std::size_t m = 0; m < cat.middle_count(); ++m) edges(cat.top(), m + 1, cat.upper[m]);
    for (std::size_t m = 0; m < cat.middle_count(); ++m) edges(m + 1, cat.bottom(), cat.lower[m]);
    edges(cat.top(), cat.bottom(), cat.long_hom);
    os << "}\n";
    return os.str();
}

DirectedCategoryPresentation rp2_category() {
    DirectedCategoryPresentation c;
    c.kind = "rp2";
    c.objects = {"x2", "x1", "x0"};
    c.upper.push_back(reduce(make_presentation({{"A1", 1, "x2-x1"}, {"A2", 1, "x2-x1"}})));
    c.lower.push_back(reduce(make_presentation({{"B1", 1, "x1-x0"}, {"B2", 1, "x1-x0"}})));
    c.long_hom = reduce(make_presentation({{"C1", 1, "x2-x0"}, {"C2", 1, "x2-x0"}}));
    const BitVector c1 = BitVector::unit(2, 0), c2 = BitVector::unit(2, 1);
    // table[0][A][B]
    c.table = {{{c1, c2}, {c2, c1}}};
    return c;
}

}  // namespace fukflow
