#include <doctest.h>

#include <algorithm>
#include <random>

#include "fukflow/errors.hpp"
#include "fukflow/link_data.hpp"

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

const char* kHopf = "X(1,3,2,4),X(3,1,4,2)";

}  // namespace

TEST_CASE("hopf link parses into two components") {
    const auto d = parse_pd(kHopf);
    CHECK(d.component_count() == 2);
    CHECK(d.crossings.size() == 2);
    CHECK(linking_number(d, 0, 1) == 1);
    CHECK(linking_number(d, 1, 0) == 1);
}

TEST_CASE("unknot with a kink") {
    const auto d = parse_pd("X(1,2,2,1)");
    CHECK(d.component_count() == 1);
    CHECK(self_crossing_count(d, 0) == 1);
    CHECK(std::abs(writhe(d, 0)) == 1);
}

TEST_CASE("crossingless circles") {
    const auto d = parse_pd("Loop(1),Loop(2)");
    CHECK(d.component_count() == 2);
    CHECK(linking_number(d, 0, 1) == 0);
    CHECK(parse_pd("X[1,3,2,4],X[3,1,4,2]") == parse_pd(kHopf));
}

TEST_CASE("parser errors") {
    CHECK(kind_of([] { parse_pd("X(1,2,3)"); }) == ErrorKind::MalformedToken);
    CHECK(kind_of([] { parse_pd("Y(1,2,3,4)"); }) == ErrorKind::MalformedToken);
    CHECK(kind_of([] { parse_pd("X(1,3,2,4),X(3,1,4,5)"); }) == ErrorKind::ArcLabelNotPairedTwice);
    CHECK(kind_of([] { parse_pd(""); }) == ErrorKind::EmptyDiagram);
    CHECK(parse_pd("", true).component_count() == 0);
    CHECK(kind_of([] { linking_number(parse_pd(kHopf), 0, 0); }) == ErrorKind::SameComponent);
    CHECK(kind_of([] { linking_number(parse_pd(kHopf), 0, 2); }) == ErrorKind::InvalidComponent);
    CHECK(kind_of([] { make_framed_link(parse_pd(kHopf), {0}); }) == ErrorKind::InvalidFraming);
    CHECK(kind_of([] { fixture_link("no-such-link"); }) == ErrorKind::UnknownFixture);
}

TEST_CASE("linking matrices of fixtures") {
    CHECK(linking_matrix(fixture_link("hopf", {2, -1})).entries == std::vector<std::vector<int>>{{2, 1}, {1, -1}});
    CHECK(linking_matrix(fixture_link("hopf-kink")).entries == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(linking_matrix(fixture_link("3-chain")).entries ==
          std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    for (const char* name : {"whitehead", "borromean", "3-unlink"}) {
        const auto L = linking_matrix(fixture_link(name));
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = 0; j < L.size(); ++j) CHECK(L(i, j) == 0);
    }
}

TEST_CASE("framings parse with signs") {
    CHECK(parse_framings("-1,0,2") == std::vector<int>{-1, 0, 2});
    CHECK(kind_of([] { parse_framings("1,x"); }) == ErrorKind::InvalidFraming);
}

TEST_CASE("every catalog entry parses") {
    const auto catalog = load_catalog();
    CHECK(catalog.size() >= 6);
    for (const auto& f : catalog) {
        CAPTURE(f.name);
        const auto fl = make_framed_link(parse_pd(f.pd), f.framings);
        CHECK(fl.framings.size() == fl.diagram.component_count());
    }
}

// ---- properties -----------------------------------------------------------

TEST_CASE("pd and json round trips") {
    for (const auto& f : load_catalog()) {
        CAPTURE(f.name);
        const auto fl = make_framed_link(parse_pd(f.pd), f.framings);
        CHECK(parse_pd(to_pd_string(fl.diagram)) == fl.diagram);
        CHECK(framed_link_from_json(to_json(fl)) == fl);
        CHECK(diagram_from_json(to_json(fl.diagram)) == fl.diagram);
    }
}

TEST_CASE("linking numbers are symmetric and flip under reversal") {
    for (const auto& f : load_catalog()) {
        CAPTURE(f.name);
        const auto d = parse_pd(f.pd);
        const int k = static_cast<int>(d.component_count());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                CHECK(linking_number(d, i, j) == linking_number(d, j, i));
                try {
                    const auto r = reverse_component(d, i);
                    CHECK(linking_number(r, i, j) == -linking_number(d, i, j));
                    CHECK(linking_number(r, j, i) == -linking_number(d, j, i));
                } catch (const Error& e) {
                    CHECK(e.kind() == ErrorKind::InvalidComponent);
                }
            }
    }
}

TEST_CASE("random relabelling of arcs leaves linking numbers unchanged") {
    std::mt19937_64 rng(5);
    for (const auto& f : load_catalog()) {
        const auto d = parse_pd(f.pd);
        if (d.crossings.empty()) continue;
        int max_label = 0;
        for (const auto& c : d.crossings)
            for (int a : c) max_label = std::max(max_label, a);
        std::vector<int> perm(max_label + 1);
        for (int i = 0; i <= max_label; ++i) perm[i] = i;
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        auto cs = d.crossings;
        for (auto& c : cs)
            for (int& a : c) a = perm[a];
        const auto e = build_diagram(cs, {});
        REQUIRE(e.component_count() == d.component_count());
        // components are ordered by smallest label, so compare the multiset
        std::vector<int> lk_d, lk_e;
        const int k = static_cast<int>(d.component_count());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                lk_d.push_back(std::abs(linking_number(d, i, j)));
                lk_e.push_back(std::abs(linking_number(e, i, j)));
            }
        std::sort(lk_d.begin(), lk_d.end());
        std::sort(lk_e.begin(), lk_e.end());
        CHECK(lk_d == lk_e);
    }
}
