#include "fukflow/fukaya_category.hpp"

#include <set>

#include "fukflow/errors.hpp"
#include "fukflow/flow_category.hpp"

namespace fukflow {

namespace {

std::string idx(std::size_t j) { return std::to_string(j + 1); }
int mod2(int v) { return ((v % 2) + 2) % 2; }

}  // namespace

DirectedCategoryPresentation build_fukaya_category(const FramedLink& fl) {
    return build_fukaya_category(linking_matrix(fl));
}

DirectedCategoryPresentation build_fukaya_category(const LinkingMatrix& L) {
    const std::size_t k = L.size();
    DirectedCategoryPresentation c;
    c.kind = "fukaya";
    c.linking = L;
    c.objects.push_back("V4");
    for (std::size_t j = 0; j < k; ++j) c.objects.push_back("V2_" + idx(j));
    c.objects.push_back("V0");
    for (std::size_t j = 0; j < k; ++j) {
        const std::string s42 = "Sigma42_" + idx(j), s20 = "Sigma20_" + idx(j);
        c.upper.push_back(reduce(make_presentation({{"x2_" + idx(j), 2, s42}, {"x1_" + idx(j), 1, s42}})));
        c.lower.push_back(reduce(make_presentation({{"y2_" + idx(j), 2, s20}, {"y1'_" + idx(j), 1, s20}})));
    }

    std::vector<GradedClass> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"z2_" + idx(j), 2, "Sigma40_" + idx(j)});
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"z1'_" + idx(j), 1, "Sigma40_" + idx(j)});
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"z1_" + idx(j), 1, "Sigma40_" + idx(j)});
    for (std::size_t j = 0; j < k; ++j) gens.push_back({"z0_" + idx(j), 0, "Sigma40_" + idx(j)});
    F2Presentation H = make_presentation(std::move(gens));
    if (k > 0) {
        std::vector<std::string> all;
        for (std::size_t j = 0; j < k; ++j) all.push_back("z2_" + idx(j));
        H.add_relation(all);
    }
    for (std::size_t j = 0; j + 1 < k; ++j) H.add_relation({"z0_" + idx(j), "z0_" + idx(j + 1)});
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::string> r{"z1_" + idx(j)};
        for (std::size_t i = 0; i < k; ++i)
            if (i != j && mod2(L(j, i))) r.push_back("z1'_" + idx(i));
        H.add_relation(r);
    }
    c.long_hom = reduce(H);
    const auto& Hr = c.long_hom;

    c.table.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        c.table[j].assign(2, std::vector<BitVector>(2, Hr.zero()));
        c.table[j][0][0] = Hr.vec({"z2_" + idx(j)});   // x2 y2
        c.table[j][1][1] = Hr.vec({"z0_" + idx(j)});   // x1 y1'
        c.table[j][0][1] = Hr.vec({"z1'_" + idx(j)});  // x2 y1'
        BitVector v = Hr.vec({"z1_" + idx(j)});        // x1 y2
        if (mod2(L(j, j))) v ^= Hr.vec({"z1'_" + idx(j)});
        c.table[j][1][0] = v;
    }
    return c;
}

GeneratorDictionary theorem_b_dictionary(std::size_t k) {
    GeneratorDictionary d;
    for (std::size_t j = 0; j < k; ++j) {
        const auto s = idx(j);
        d.push_back({"x2_" + s, "K+_" + s});
        d.push_back({"x1_" + s, "p+_" + s});
        d.push_back({"y2_" + s, "K-_" + s});
        d.push_back({"y1'_" + s, "p-_" + s});
        d.push_back({"z2_" + s, "dU_" + s});
        d.push_back({"z1_" + s, "lambda_" + s});
        d.push_back({"z1'_" + s, "mu_" + s});
        d.push_back({"z0_" + s, "q_" + s});
    }
    return d;
}

namespace {

struct Translator {
    std::map<std::string, std::string> forward;

    // index map from generators of `from` into generators of `to`
    std::vector<std::size_t> map(const F2Presentation& from, const F2Presentation& to, const std::string& where,
                                 std::vector<std::string>& diff) const {
        std::vector<std::size_t> m;
        if (from.size() != to.size())
            diff.push_back(where + ": generator counts differ (" + std::to_string(from.size()) + " vs " +
                           std::to_string(to.size()) + ")");
        for (const auto& g : from.generators) {
            auto it = forward.find(g.name);
            if (it == forward.end()) {
                diff.push_back(where + ": generator " + g.name + " is not in the dictionary");
                m.push_back(SIZE_MAX);
                continue;
            }
            try {
                m.push_back(to.index_of(it->second));
            } catch (const Error&) {
                diff.push_back(where + ": " + g.name + " maps to " + it->second + ", which is absent");
                m.push_back(SIZE_MAX);
            }
        }
        return m;
    }

    static BitVector apply(const BitVector& v, const std::vector<std::size_t>& m, std::size_t n) {
        BitVector out(n);
        for (std::size_t i : v.support())
            if (m[i] != SIZE_MAX) out.flip(m[i]);
        return out;
    }
};

bool complete(const std::vector<std::size_t>& m) {
    for (auto i : m)
        if (i == SIZE_MAX) return false;
    return true;
}

void compare_hom(const F2Presentation& flow, const F2Presentation& fuk, const Translator& tr, const std::string& where,
                 std::vector<std::string>& diff) {
    auto m = tr.map(fuk, flow, where, diff);
    if (!complete(m) || fuk.size() != flow.size()) return;
    F2Presentation mapped = make_presentation(flow.generators);
    for (const auto& r : fuk.relations) mapped.relations.push_back(Translator::apply(r, m, flow.size()));
    mapped = reduce(mapped);
    const auto ref = reduce(flow);
    if (mapped.relations != ref.relations) {
        std::string a, b;
        for (const auto& r : mapped.relations) a += "[" + ref.format(r) + "] ";
        for (const auto& r : ref.relations) b += "[" + ref.format(r) + "] ";
        diff.push_back(where + ": relations differ; translated " + a + "vs " + b);
    }
}

}  // namespace

CategoryComparison compare_categories(const DirectedCategoryPresentation& flow,
                                      const DirectedCategoryPresentation& fukaya, const GeneratorDictionary& dict) {
    CategoryComparison out;
    auto& diff = out.diff;
    Translator tr;
    std::set<std::string> targets;
    for (const auto& [a, b] : dict) {
        if (!tr.forward.emplace(a, b).second) diff.push_back("dictionary lists " + a + " twice");
        if (!targets.insert(b).second) diff.push_back("dictionary hits " + b + " twice");
    }
    const std::size_t k = flow.middle_count();
    if (fukaya.middle_count() != k) {
        diff.push_back("middle layer sizes differ");
        return out;
    }
    for (std::size_t j = 0; j < k; ++j) {
        compare_hom(flow.upper[j], fukaya.upper[j], tr, fukaya.objects[0] + "->" + fukaya.objects[j + 1], diff);
        compare_hom(flow.lower[j], fukaya.lower[j], tr, fukaya.objects[j + 1] + "->" + fukaya.objects.back(), diff);
    }
    const std::string long_name = fukaya.objects.front() + "->" + fukaya.objects.back();
    compare_hom(flow.long_hom, fukaya.long_hom, tr, long_name, diff);
    if (!diff.empty()) return out;

    std::vector<std::string> scratch;
    const auto mz = tr.map(fukaya.long_hom, flow.long_hom, long_name, scratch);
    for (std::size_t j = 0; j < k; ++j) {
        const auto mu = tr.map(fukaya.upper[j], flow.upper[j], "", scratch);
        const auto ml = tr.map(fukaya.lower[j], flow.lower[j], "", scratch);
        for (std::size_t a = 0; a < fukaya.upper[j].size(); ++a)
            for (std::size_t b = 0; b < fukaya.lower[j].size(); ++b) {
                const BitVector fv =
                    flow.long_hom.canonical(Translator::apply(fukaya.table[j][a][b], mz, flow.long_hom.size()));
                const BitVector ref = flow.compose_generators(j, mu[a], ml[b]);
                if (fv != ref)
                    diff.push_back("mu(" + fukaya.upper[j].generators[a].name + "," +
                                   fukaya.lower[j].generators[b].name + "): translated " + flow.long_hom.format(fv) +
                                   " but flow gives mu(" + flow.upper[j].generators[mu[a]].name + "," +
                                   flow.lower[j].generators[ml[b]].name + ") = " + flow.long_hom.format(ref));
            }
    }
    out.equal = diff.empty();
    return out;
}

TheoremBResult verify_theorem_b(const FramedLink& fl) {
    const auto L = linking_matrix(fl);
    const auto flow = build_flow_category(L);
    const auto fuk = build_fukaya_category(L);
    TheoremBResult r;
    r.dictionary = theorem_b_dictionary(L.size());
    auto cmp = compare_categories(flow, fuk, r.dictionary);
    r.holds = cmp.equal;
    r.diff = std::move(cmp.diff);
    return r;
}

nlohmann::json to_json(const TheoremBResult& r) {
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [a, b] : r.dictionary) d[a] = b;
    return {{"holds", r.holds}, {"dictionary", d}, {"diff", r.diff}};
}

}  // namespace fukflow
