#include <doctest.h>

#include <random>

#include "fukflow/flow_category.hpp"

using namespace fukflow;

namespace {

BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
    return v;
}

std::vector<std::vector<int>> all_framings(std::size_t k) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& f : out)
            for (int m : {-1, 0, 1, 2}) {
                auto g = f;
                g.push_back(m);
                next.push_back(g);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("products for the unknot with framing one") {
    const auto cat = build_flow_category(fixture_link("unknot", {1}));
    const auto& H = cat.long_hom;
    // K+ = 0, p+ = 1 upstairs; K- = 0, p- = 1 downstairs
    CHECK(cat.compose_generators(0, 0, 1) == H.vec({"mu_1"}));
    CHECK(cat.compose_generators(0, 1, 0) == H.vec({"mu_1"}));
    CHECK(cat.compose_generators(0, 0, 0).none());
    CHECK(cat.compose_generators(0, 1, 1) == H.vec({"q_1"}));
}

TEST_CASE("even framing leaves the longitude product at zero for the unknot") {
    const auto cat = build_flow_category(fixture_link("unknot", {0}));
    CHECK(cat.compose_generators(0, 1, 0).none());
}

TEST_CASE("hopf link products") {
    const auto cat = build_flow_category(fixture_link("hopf", {0, 0}));
    const auto& H = cat.long_hom;
    CHECK(cat.compose_generators(0, 1, 0) == H.vec({"mu_2"}));
    CHECK(cat.compose_generators(1, 1, 0) == H.vec({"mu_1"}));
    CHECK(cat.compose_generators(1, 0, 0) == H.vec({"dU_1"}));
    CHECK(cat.compose_generators(1, 1, 1) == H.vec({"q_1"}));
}

TEST_CASE("objects and hom shapes") {
    const auto cat = build_flow_category(fixture_link("3-chain"));
    CHECK(cat.objects == std::vector<std::string>{"x4", "x2_1", "x2_2", "x2_3", "x0"});
    CHECK(structural_problems(cat).empty());
    CHECK(cat.hom(1, 2).size() == 0);
    CHECK(cat.hom(4, 0).size() == 0);
    CHECK(cat.hom(2, 2).rank() == 1);
    CHECK(cat.higher_product(3).none());
}

TEST_CASE("relation table holds on every fixture and framing") {
    for (const char* name : {"unknot", "2-unlink", "3-unlink", "hopf", "trefoil", "3-chain", "whitehead", "borromean"}) {
        const std::size_t k = fixture_link(name).diagram.component_count();
        for (const auto& fr : all_framings(k)) {
            const auto cat = build_flow_category(fixture_link(name, fr));
            CAPTURE(name);
            for (const auto& rel : relation_table(cat)) {
                CAPTURE(format_relation(cat, rel));
                CHECK(relation_residual(cat, rel).none());
            }
        }
    }
}

TEST_CASE("format of a relation") {
    const auto cat = build_flow_category(fixture_link("hopf"));
    const auto rels = relation_table(cat);
    CHECK(format_relation(cat, rels.front()) == "mu(K+_1,K-_1) + mu(K+_2,K-_2) = 0");
}

TEST_CASE("composition is bilinear and vanishes across middles") {
    std::mt19937_64 rng(3);
    const auto cat = build_flow_category(fixture_link("3-chain", {1, 0, -1}));
    for (int t = 0; t < 200; ++t) {
        const std::size_t j = rng() % 3, i = rng() % 3;
        const auto u = random_vector(2, rng), u2 = random_vector(2, rng), v = random_vector(2, rng);
        CHECK(cat.compose(j, u ^ u2, j, v) == (cat.compose(j, u, j, v) ^ cat.compose(j, u2, j, v)));
        CHECK(cat.compose(j, v, j, u ^ u2) == (cat.compose(j, v, j, u) ^ cat.compose(j, v, j, u2)));
        if (i != j) CHECK(cat.compose(j, u, i, v).none());
    }
}

TEST_CASE("diagrams with equal linking matrices give equal categories") {
    CHECK(build_flow_category(fixture_link("hopf")) == build_flow_category(fixture_link("hopf-kink")));
    CHECK(build_flow_category(fixture_link("unknot", {1})) == build_flow_category(fixture_link("unknot-kink", {1})));
    CHECK(build_flow_category(fixture_link("2-unlink")) == build_flow_category(fixture_link("whitehead")));
    CHECK_FALSE(build_flow_category(fixture_link("hopf")) == build_flow_category(fixture_link("2-unlink")));
}

TEST_CASE("rp2 composition table") {
    const auto c = rp2_category();
    const auto& H = c.long_hom;
    CHECK(c.compose_generators(0, 1, 1) == H.vec({"C1"}));
    CHECK(c.compose_generators(0, 0, 0) == H.vec({"C1"}));
    CHECK(c.compose_generators(0, 1, 0) == H.vec({"C2"}));
    CHECK(c.compose_generators(0, 0, 1) == H.vec({"C2"}));
    CHECK(structural_problems(c).empty());
}

TEST_CASE("exports") {
    const auto cat = build_flow_category(fixture_link("hopf"));
    const auto j = to_json(cat);
    CHECK(j["objects"].size() == 4);
    CHECK(j["composition"].size() == 8);
    CHECK(j["higher_products"] == "zero");
    CHECK(j["linking_matrix"].is_array());
    const auto dot = to_dot(cat);
    CHECK(dot.find("\"x4\" -> \"x2_1\" [label=\"K+_1\"]") != std::string::npos);
}
