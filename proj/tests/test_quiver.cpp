#include <doctest.h>

#include <random>

#include "fukflow/errors.hpp"
#include "fukflow/flow_category.hpp"
#include "fukflow/fukaya_category.hpp"
#include "fukflow/quiver.hpp"

using namespace fukflow;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Usage;
}

std::vector<std::size_t> random_dims(std::size_t nv, std::size_t max, std::mt19937_64& rng) {
    std::vector<std::size_t> d(nv);
    for (auto& x : d) x = rng() % (max + 1);
    return d;
}

// Applies vertexwise invertible matrices to r.
QuiverRepresentation transport(const QuiverPresentation& q, const QuiverRepresentation& r, std::mt19937_64& rng) {
    std::vector<BitMatrix> g, gi;
    for (std::size_t d : r.dims) {
        const auto group = general_linear_group(d);
        g.push_back(group[rng() % group.size()]);
        gi.push_back(inverse(g.back()));
    }
    auto out = r;
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        out.maps[i] = g[q.arrows[i].target] * r.maps[i] * gi[q.arrows[i].source];
    return out;
}

}  // namespace

TEST_CASE("cp2 quiver and its standard representation") {
    const auto q = cp2_quiver();
    CHECK_NOTHROW(q.validate());
    const auto r = standard_representation(q);
    CHECK(r.dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(r.maps[q.arrow_index("a_0")] == BitMatrix::identity(1));
    CHECK(r.maps[q.arrow_index("a_1")].is_zero());
    CHECK(check_relations(q, r).ok);
}

TEST_CASE("a broken standard representation names the failing relation") {
    const auto q = cp2_quiver();
    auto r = standard_representation(q);
    r.maps[q.arrow_index("a_0")] = BitMatrix(1, 1);
    const auto c = check_relations(q, r);
    CHECK_FALSE(c.ok);
    CHECK(c.violations == std::vector<std::string>{"b_0a_0 - c_0"});
}

TEST_CASE("zero representations satisfy everything") {
    const auto q = cp2_quiver();
    CHECK(check_relations(q, zero_representation(q, {2, 3, 1})).ok);
    CHECK(check_relations(q, zero_representation(q, {0, 0, 0})).ok);
}

TEST_CASE("shape errors") {
    const auto q = cp2_quiver();
    auto r = standard_representation(q);
    r.maps[0] = BitMatrix(2, 1);
    CHECK(kind_of([&] { check_relations(q, r); }) == ErrorKind::ShapeMismatch);
    CHECK(kind_of([&] { zero_representation(q, {1, 1}); }) == ErrorKind::ShapeMismatch);
    const auto big = zero_representation(q, {4, 1, 1});
    CHECK(kind_of([&] { isomorphic(q, big, big); }) == ErrorKind::DimensionTooLarge);
    auto bad = q;
    bad.arrows.push_back({"a_0", 0, 1});
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidModel);
    bad = q;
    bad.relations.push_back({"mixed", {{0}, {4}}});
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidModel);
}

TEST_CASE("group enumeration") {
    CHECK(general_linear_group(0).size() == 1);
    CHECK(general_linear_group(1).size() == 1);
    CHECK(general_linear_group(2).size() == 6);
    CHECK(general_linear_group(3).size() == 168);
    for (const auto& g : general_linear_group(3)) CHECK(g * inverse(g) == BitMatrix::identity(3));
}

TEST_CASE("standard against zero maps") {
    const auto q = cp2_quiver();
    const auto s = standard_representation(q);
    const auto z = zero_representation(q, {1, 1, 1});
    CHECK(isomorphic(q, s, s));
    CHECK_FALSE(isomorphic(q, s, z));
    CHECK_FALSE(isomorphic_by_orbit(q, s, z));
    CHECK_FALSE(isomorphic(q, s, zero_representation(q, {1, 1, 2})));
}

TEST_CASE("quiver of the unknot flow category") {
    const auto cat = build_flow_category(fixture_link("unknot", {1}));
    const auto q = from_category(cat);
    CHECK(q.vertices.size() == 3);
    CHECK(q.arrows.size() == 6);
    CHECK(q.relations.size() == 4);
    CHECK_NOTHROW(q.validate());
    CHECK(q.relations[0].name == "K-_1*K+_1");
    CHECK(q.relations[1].name == "p-_1*K+_1 - mu_1");
    CHECK(q.relations[2].name == "K-_1*p+_1 - mu_1");
    CHECK(q.relations[3].name == "p-_1*p+_1 - q_1");
}

TEST_CASE("quiver of the rp2 category") {
    const auto q = from_category(rp2_category());
    std::vector<std::string> names;
    for (const auto& r : q.relations) names.push_back(r.name);
    CHECK(names == std::vector<std::string>{"B1*A1 - C1", "B2*A1 - C2", "B1*A2 - C2", "B2*A2 - C1"});
}

TEST_CASE("no middle objects") {
    const auto cat = build_flow_category(LinkingMatrix{});
    const auto q = from_category(cat);
    CHECK(q.vertices.size() == 2);
    CHECK(q.relations.empty());
}

TEST_CASE("regular representations satisfy their relations") {
    for (const char* name : {"unknot", "hopf", "trefoil", "3-chain", "borromean"}) {
        CAPTURE(name);
        for (const auto& cat : {build_flow_category(fixture_link(name)), build_fukaya_category(fixture_link(name))}) {
            const auto q = from_category(cat);
            const auto r = regular_representation(cat);
            CHECK(check_relations(q, r).ok);
        }
    }
    const auto rp2 = rp2_category();
    CHECK(check_relations(from_category(rp2), regular_representation(rp2)).ok);
}

TEST_CASE("representation json round trip and dot") {
    std::mt19937_64 rng(4);
    const auto q = cp2_quiver();
    const auto r = random_representation(q, {2, 1, 3}, rng);
    CHECK(representation_from_json(q, to_json(q, r)) == r);
    CHECK(to_json(q)["arrows"].size() == 6);
    CHECK(to_dot(q).find("\"x4\" -> \"x2\" [label=\"a_0\"]") != std::string::npos);
}

// ---- properties -----------------------------------------------------------

TEST_CASE("isomorphism is an equivalence relation") {
    std::mt19937_64 rng(31);
    const auto q = cp2_quiver();
    for (int t = 0; t < 60; ++t) {
        const auto dims = random_dims(3, 2, rng);
        const auto a = random_representation(q, dims, rng);
        const auto b = transport(q, a, rng);
        const auto c = transport(q, b, rng);
        const auto other = random_representation(q, dims, rng);
        CHECK(isomorphic(q, a, a));
        CHECK(isomorphic(q, a, b));
        CHECK(isomorphic(q, b, a));
        CHECK(isomorphic(q, a, c));
        CHECK(isomorphic(q, a, other) == isomorphic(q, other, a));
        if (isomorphic(q, a, other) && isomorphic(q, other, b)) CHECK(isomorphic(q, a, b));
    }
}

TEST_CASE("relations are invariant under isomorphism") {
    std::mt19937_64 rng(32);
    const auto q = cp2_quiver();
    for (int t = 0; t < 200; ++t) {
        const auto dims = random_dims(3, 3, rng);
        const auto a = rng() % 3 == 0 ? zero_representation(q, dims) : random_representation(q, dims, rng);
        const auto b = transport(q, a, rng);
        CHECK(check_relations(q, a).ok == check_relations(q, b).ok);
        CHECK(check_relations(q, a).violations == check_relations(q, b).violations);
    }
}

TEST_CASE("exhaustive search agrees with the orbit oracle") {
    std::mt19937_64 rng(33);
    const auto q = cp2_quiver();
    int agreeing_iso = 0;
    for (int t = 0; t < 50; ++t) {
        const auto dims = random_dims(3, 2, rng);
        const auto a = random_representation(q, dims, rng);
        const auto b = (t % 2) ? transport(q, a, rng) : random_representation(q, dims, rng);
        const bool fast = isomorphic(q, a, b);
        CHECK(fast == isomorphic_by_orbit(q, a, b));
        agreeing_iso += fast;
    }
    CHECK(agreeing_iso >= 25);
}

TEST_CASE("dimension vector (2,1,1) pairs") {
    std::mt19937_64 rng(34);
    const auto q = cp2_quiver();
    for (int t = 0; t < 40; ++t) {
        const auto a = random_representation(q, {2, 1, 1}, rng);
        const auto b = random_representation(q, {2, 1, 1}, rng);
        CHECK(isomorphic(q, a, b) == isomorphic_by_orbit(q, a, b));
    }
}
