#include <doctest.h>

#include <algorithm>
#include <random>

#include "fukflow/errors.hpp"
#include "fukflow/homology_presentation.hpp"

using namespace fukflow;

namespace {

F2Presentation random_presentation(std::size_t n, std::size_t rels, std::mt19937_64& rng) {
    std::vector<GradedClass> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back({"g" + std::to_string(i), static_cast<int>(i % 3), ""});
    auto p = make_presentation(gens);
    for (std::size_t r = 0; r < rels; ++r) {
        BitVector v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
        p.relations.push_back(v);
    }
    return p;
}

BitMatrix relation_matrix(const F2Presentation& p) {
    BitMatrix m(p.relations.size(), p.size());
    for (std::size_t r = 0; r < p.relations.size(); ++r) m.row(r) = p.relations[r];
    return m;
}

}  // namespace

TEST_CASE("complement of the unknot") {
    const auto h = complement_homology(LinkingMatrix{{{1}}});
    CHECK(h.betti() == std::vector<int>{1, 1, 0, 0});
    CHECK(h.names_of(h.canonical(h.vec({"lambda_1"}))).empty());
    CHECK(h.names_of(h.canonical(h.vec({"dU_1"}))).empty());
    CHECK(h.format(h.canonical(h.vec({"mu_1", "q_1"}))) == "mu_1 + q_1");
}

TEST_CASE("complement of the hopf link") {
    const auto h = complement_homology(LinkingMatrix{{{0, 1}, {1, 0}}});
    CHECK(h.betti() == std::vector<int>{1, 2, 1, 0});
    // lambda_1 = mu_2, lambda_2 = mu_1, dU_2 = dU_1, q_2 = q_1
    CHECK(h.canonical(h.vec({"lambda_1"})) == h.vec({"mu_2"}));
    CHECK(h.canonical(h.vec({"lambda_2"})) == h.vec({"mu_1"}));
    CHECK(h.canonical(h.vec({"dU_2"})) == h.vec({"dU_1"}));
    CHECK(h.canonical(h.vec({"q_2"})) == h.vec({"q_1"}));
}

TEST_CASE("betti numbers are (1, k, k-1, 0) and do not see framings") {
    for (std::size_t k = 1; k <= 4; ++k)
        for (int m = -1; m <= 2; ++m) {
            LinkingMatrix L{std::vector<std::vector<int>>(k, std::vector<int>(k, 1))};
            for (std::size_t i = 0; i < k; ++i) L.entries[i][i] = m;
            CHECK(complement_homology(L).betti() == std::vector<int>{1, int(k), int(k) - 1, 0});
        }
}

TEST_CASE("name errors") {
    CHECK_THROWS_AS(reduce(make_presentation({{"a", 0, ""}, {"a", 1, ""}})), Error);
    try {
        reduce(make_presentation({{"a", 0, ""}, {"a", 1, ""}}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateGeneratorName);
    }
    const auto p = reduce(make_presentation({{"a", 0, ""}}));
    try {
        p.index_of("b");
        FAIL("expected UnknownGenerator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownGenerator);
    }
}

TEST_CASE("earliest generators survive") {
    auto p = make_presentation({{"a", 1, ""}, {"b", 1, ""}, {"c", 1, ""}});
    p.add_relation({"a", "b"});
    p.add_relation({"b", "c"});
    const auto r = reduce(p);
    CHECK(r.basis == std::vector<std::size_t>{0});
    CHECK(r.canonical(r.vec({"c"})) == r.vec({"a"}));
}

TEST_CASE("json shape") {
    const auto j = to_json(complement_homology(LinkingMatrix{{{0}}}));
    CHECK(j.contains("generators"));
    CHECK(j.contains("relations"));
    CHECK(j.contains("basis"));
    CHECK(j.contains("betti"));
}

// ---- properties -----------------------------------------------------------

TEST_CASE("random 12 x 12 presentations") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_presentation(12, 12, rng);
        const auto r = reduce(p);
        CHECK(r.rank() == 12 - relation_matrix(p).rank());
        // reduction is idempotent
        auto again = reduce(r);
        CHECK(again.basis == r.basis);
        CHECK(again.expression == r.expression);
        RowSpace span(12);
        for (const auto& rel : p.relations) span.insert(rel);
        for (int s = 0; s < 10; ++s) {
            BitVector v(12), w(12);
            for (std::size_t i = 0; i < 12; ++i) {
                v.set(i, rng() & 1u);
                w.set(i, rng() & 1u);
            }
            const auto cv = r.canonical(v);
            CHECK(r.canonical(cv) == cv);
            CHECK(span.contains(cv ^ v));
            CHECK((r.canonical(v ^ w)) == (cv ^ r.canonical(w)));
            for (std::size_t i : cv.support())
                CHECK(std::find(r.basis.begin(), r.basis.end(), i) != r.basis.end());
        }
        for (const auto& rel : p.relations) CHECK(r.canonical(rel).none());
    }
}
