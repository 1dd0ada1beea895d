#include "fukflow/flow_category.hpp"

#include "fukflow/errors.hpp"

namespace fukflow {

namespace {
constexpr std::size_t K_PLUS = 0, P_PLUS = 1, K_MINUS = 0, P_MINUS = 1;

std::string idx(std::size_t j) { return std::to_string(j + 1); }

int mod2(int v) { return ((v % 2) + 2) % 2; }
}  // namespace

DirectedCategoryPresentation build_flow_category(const FramedLink& fl) { return build_flow_category(linking_matrix(fl)); }

DirectedCategoryPresentation build_flow_category(const LinkingMatrix& L) {
    const std::size_t k = L.size();
    DirectedCategoryPresentation c;
    c.kind = "flow";
    c.linking = L;
    c.objects.push_back("x4");
    for (std::size_t j = 0; j < k; ++j) c.objects.push_back("x2_" + idx(j));
    c.objects.push_back("x0");
    for (std::size_t j = 0; j < k; ++j) {
        c.upper.push_back(reduce(make_presentation({{"K+_" + idx(j), 1, "K+_" + idx(j)}, {"p+_" + idx(j), 0, "K+_" + idx(j)}})));
        c.lower.push_back(reduce(make_presentation({{"K-_" + idx(j), 1, "K-_" + idx(j)}, {"p-_" + idx(j), 0, "K-_" + idx(j)}})));
    }
    c.long_hom = complement_homology(L);
    const auto& H = c.long_hom;
    c.table.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        c.table[j].assign(2, std::vector<BitVector>(2, H.zero()));
        c.table[j][K_PLUS][P_MINUS] = H.vec({"mu_" + idx(j)});
        BitVector pk = H.vec({"lambda_" + idx(j)});
        if (mod2(L(j, j))) pk ^= H.vec({"mu_" + idx(j)});
        c.table[j][P_PLUS][K_MINUS] = pk;
        c.table[j][K_PLUS][K_MINUS] = H.vec({"dU_" + idx(j)});
        c.table[j][P_PLUS][P_MINUS] = H.vec({"q_" + idx(j)});
    }
    return c;
}

std::vector<CompositeRelation> relation_table(const DirectedCategoryPresentation& cat) {
    if (!cat.linking) throw Error(ErrorKind::InvalidModel, "relation_table needs a category built from a linking matrix");
    const auto& L = *cat.linking;
    const std::size_t k = cat.middle_count();
    std::vector<CompositeRelation> out;

    CompositeRelation top{"boundary-tori", {}, {}};
    for (std::size_t j = 0; j < k; ++j) top.lhs.push_back({j, K_PLUS, K_MINUS});
    out.push_back(top);

    for (std::size_t j = 0; j + 1 < k; ++j)
        out.push_back({"points", {{j, P_PLUS, P_MINUS}}, {{j + 1, P_PLUS, P_MINUS}}});

    for (std::size_t j = 0; j < k; ++j) {
        CompositeRelation r{"longitudes", {{j, P_PLUS, K_MINUS}}, {}};
        if (mod2(L(j, j))) r.rhs.push_back({j, K_PLUS, P_MINUS});
        for (std::size_t i = 0; i < k; ++i)
            if (i != j && mod2(L(j, i))) r.rhs.push_back({i, K_PLUS, P_MINUS});
        out.push_back(r);
    }
    return out;
}

std::string format_relation(const DirectedCategoryPresentation& cat, const CompositeRelation& r) {
    auto term = [&](const CompositeTerm& t) {
        return "mu(" + cat.upper[t.middle].generators[t.left].name + "," + cat.lower[t.middle].generators[t.right].name +
               ")";
    };
    auto side = [&](const std::vector<CompositeTerm>& ts) {
        if (ts.empty()) return std::string("0");
        std::string s;
        for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? " + " : "") + term(ts[i]);
        return s;
    };
    return side(r.lhs) + " = " + side(r.rhs);
}

BitVector relation_residual(const DirectedCategoryPresentation& cat, const CompositeRelation& r) {
    BitVector s(cat.long_hom.size());
    for (const auto& t : r.lhs) s ^= cat.compose_generators(t.middle, t.left, t.right);
    for (const auto& t : r.rhs) s ^= cat.compose_generators(t.middle, t.left, t.right);
    return s;
}

}  // namespace fukflow
