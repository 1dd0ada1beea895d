#include "fukflow/homology_presentation.hpp"

#include <algorithm>
#include <set>

#include "fukflow/errors.hpp"

namespace fukflow {

std::size_t F2Presentation::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return i;
    throw Error(ErrorKind::UnknownGenerator, "no generator named '" + name + "'");
}

BitVector F2Presentation::vec(const std::vector<std::string>& names) const {
    BitVector v(generators.size());
    for (const auto& n : names) v.flip(index_of(n));
    return v;
}

BitVector F2Presentation::canonical(const BitVector& v) const {
    BitVector out(generators.size());
    for (std::size_t i : v.support()) out ^= expression[i];
    return out;
}

std::vector<std::string> F2Presentation::names_of(const BitVector& v) const {
    std::vector<std::string> out;
    for (std::size_t i : v.support()) out.push_back(generators[i].name);
    return out;
}

std::string F2Presentation::format(const BitVector& v) const {
    auto ns = names_of(v);
    if (ns.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < ns.size(); ++i) s += (i ? " + " : "") + ns[i];
    return s;
}

std::vector<int> F2Presentation::betti(int max_degree) const {
    std::vector<int> b(max_degree + 1, 0);
    for (std::size_t i : basis) {
        const auto& d = generators[i].degree;
        if (d && *d >= 0 && *d <= max_degree) ++b[*d];
    }
    return b;
}

F2Presentation make_presentation(std::vector<GradedClass> generators) {
    F2Presentation p;
    p.generators = std::move(generators);
    return p;
}

F2Presentation reduce(const F2Presentation& in) {
    std::set<std::string> names;
    for (const auto& g : in.generators)
        if (!names.insert(g.name).second)
            throw Error(ErrorKind::DuplicateGeneratorName, "generator '" + g.name + "' is listed twice");

    const std::size_t n = in.generators.size();
    std::vector<BitVector> rows;
    for (const auto& r : in.relations) {
        if (r.size() != n) throw Error(ErrorKind::ShapeMismatch, "relation length differs from generator count");
        rows.push_back(r);
    }

    // Gauss-Jordan with pivots taken from the right.
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = n; c-- > 0 && rank < rows.size();) {
        std::size_t sel = rank;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    std::vector<std::size_t> order(rank);
    for (std::size_t i = 0; i < rank; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });

    F2Presentation out;
    out.generators = in.generators;
    out.reduced = true;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i : order) {
        out.relations.push_back(rows[i]);
        is_pivot[pivots[i]] = true;
    }
    for (std::size_t g = 0; g < n; ++g)
        if (!is_pivot[g]) out.basis.push_back(g);
    out.expression.assign(n, BitVector(n));
    for (std::size_t g = 0; g < n; ++g)
        if (!is_pivot[g]) out.expression[g].set(g);
    for (std::size_t i = 0; i < rank; ++i) {
        BitVector e = rows[i];
        e.flip(pivots[i]);
        out.expression[pivots[i]] = e;
    }
    return out;
}

F2Presentation complement_homology(const LinkingMatrix& L) {
    const std::size_t k = L.size();
    std::vector<GradedClass> gens;
    auto tag = [](std::size_t j) { return "dU_" + std::to_string(j + 1); };
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"dU_" + std::to_string(j + 1), 2, tag(j)});
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"mu_" + std::to_string(j + 1), 1, tag(j)});
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"lambda_" + std::to_string(j + 1), 1, tag(j)});
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"q_" + std::to_string(j + 1), 0, tag(j)});
    F2Presentation p = make_presentation(std::move(gens));

    if (k > 0) {
        BitVector all(p.size());
        for (std::size_t j = 0; j < k; ++j) all.set(j);
        p.relations.push_back(all);
    }
    for (std::size_t j = 0; j + 1 < k; ++j) {
        BitVector r(p.size());
        r.set(3 * k + j);
        r.set(3 * k + j + 1);
        p.relations.push_back(r);
    }
    for (std::size_t j = 0; j < k; ++j) {
        BitVector r(p.size());
        r.set(2 * k + j);
        for (std::size_t i = 0; i < k; ++i)
            if (i != j && (L(j, i) % 2 != 0)) r.set(k + i);
        p.relations.push_back(r);
    }
    return reduce(p);
}

nlohmann::json to_json(const F2Presentation& p) {
    nlohmann::json j;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : p.generators) {
        nlohmann::json gj{{"name", g.name}, {"component", g.component}};
        gj["degree"] = g.degree ? nlohmann::json(*g.degree) : nlohmann::json(nullptr);
        gens.push_back(gj);
    }
    j["generators"] = gens;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : p.relations) rels.push_back(p.names_of(r));
    j["relations"] = rels;
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i : p.basis) basis.push_back(p.generators[i].name);
    j["basis"] = basis;
    if (p.reduced) {
        nlohmann::json ex = nlohmann::json::object();
        for (std::size_t g = 0; g < p.size(); ++g) ex[p.generators[g].name] = p.names_of(p.expression[g]);
        j["expression"] = ex;
    }
    j["betti"] = p.betti();
    return j;
}

}  // namespace fukflow
