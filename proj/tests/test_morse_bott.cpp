#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fukflow/errors.hpp"
#include "fukflow/morse_bott.hpp"

using namespace fukflow;

namespace {

CascadeComplex case_I(const CascadeData& d) {
    const auto& m = d.correspondences.front();
    return differential_case_I(d.components[m.source], d.components[m.target], m);
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Usage;
}

Rational random_offset(std::mt19937_64& rng) { return Rational(static_cast<long long>(rng() % 64), 64); }

CriticalComponent random_component(const std::string& name, std::size_t dim, Rational action, std::mt19937_64& rng) {
    CriticalComponent c;
    c.name = name;
    c.action = action;
    for (std::size_t f = 0; f < dim; ++f) c.factors.push_back(CircleMorse::standard(random_offset(rng)));
    return c;
}

// Source and target of dimension up to two, moduli of dimension up to two,
// each evaluation coordinate a translate of its own moduli coordinate.
CascadeData random_cascade(std::mt19937_64& rng) {
    CascadeData d;
    const std::size_t ds = rng() % 3, dt = rng() % 3;
    d.components.push_back(random_component("S", ds, 2, rng));
    d.components.push_back(random_component("T", dt, 1, rng));
    Correspondence m;
    m.name = "M";
    m.source = 0;
    m.target = 1;
    m.dimension = std::max<std::size_t>(std::max(ds, dt), rng() % 3);
    std::vector<std::size_t> perm(m.dimension);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < ds; ++i) m.ev_minus.coords.push_back({false, i, random_offset(rng)});
    for (std::size_t i = 0; i < dt; ++i) m.ev_plus.coords.push_back({false, perm[i], random_offset(rng)});
    d.correspondences.push_back(m);
    return d;
}

// Differential entries keyed by where the critical points sit, with the
// target component moved back by `back`; shifting re-sorts marked points, so
// generator positions in the matrix are not comparable directly.
using Key = std::pair<int, std::vector<Rational>>;
std::set<std::pair<Key, Key>> located_edges(const CascadeData& d, const CascadeComplex& c, Rational back) {
    std::vector<Key> keys;
    for (int comp = 0; comp < 2; ++comp)
        for (const auto& p : d.components[comp].critical_points()) {
            Key k{comp, {}};
            for (std::size_t f = 0; f < p.tuple.size(); ++f)
                k.second.push_back(mod1(d.components[comp].factors[f].points()[p.tuple[f]].position - (comp ? back : 0)));
            keys.push_back(k);
        }
    std::set<std::pair<Key, Key>> out;
    for (std::size_t col = 0; col < c.size(); ++col)
        for (std::size_t r : c.boundary(col).support()) out.insert({keys[col], keys[r]});
    return out;
}

}  // namespace

TEST_CASE("circle set intersections") {
    const auto a = CircleSet::arc(0, Rational(1, 2));
    const auto b = CircleSet::arc(Rational(1, 4), Rational(1, 2));
    const auto c = intersect(a, b);
    REQUIRE(c.kind == CircleSet::Kind::Arcs);
    REQUIRE(c.arcs.size() == 1);
    CHECK(c.arcs[0] == Arc{Rational(1, 4), Rational(1, 4)});
    CHECK(intersect(a, CircleSet::point(Rational(1, 8))).points == std::vector<Rational>{Rational(1, 8)});
    CHECK(intersect(a, CircleSet::point(Rational(3, 4))).is_empty());
    CHECK(intersect(CircleSet::full(), a).arcs == a.arcs);
    CHECK(intersect(CircleSet::full(), CircleSet::full()).dimension() == 1);
    CHECK(CircleSet::empty().dimension() == -1);
    CHECK(kind_of([&] { a.contains(Rational(1, 2)); }) == ErrorKind::NonTransverse);
    CHECK(kind_of([] { intersect(CircleSet::point(0), CircleSet::point(0)); }) == ErrorKind::NonTransverse);
    // wrap-around arc
    CHECK(CircleSet::arc(Rational(3, 4), Rational(1, 2)).contains(Rational(1, 8)));
}

TEST_CASE("circle morse data") {
    const auto s = CircleMorse::standard(Rational(1, 8));
    REQUIRE(s.size() == 2);
    CHECK(s.points()[0].index == 0);
    CHECK(s.points()[1].position == Rational(5, 8));
    CHECK(s.unstable(0).dimension() == 0);
    CHECK(s.unstable(1).dimension() == 1);
    CHECK(s.stable(1).dimension() == 0);
    CHECK(kind_of([] { CircleMorse::from_points({{0, 0}, {Rational(1, 2), 0}}); }) == ErrorKind::InvalidModel);
}

TEST_CASE("the torus has four critical points and zero differential") {
    const auto d = upper_pair_data();
    const auto& torus = d.components[0];
    const auto pts = torus.critical_points();
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].name == "x2");
    CHECK(pts[1].name == "x1");
    CHECK(pts[2].name == "x1'");
    CHECK(pts[3].name == "x0");
    CHECK(morse_differential(torus).is_zero());
    CHECK(morse_differential(d.components[1]).is_zero());
}

TEST_CASE("three-dimensional components are rejected") {
    CriticalComponent c;
    c.name = "T3";
    c.factors.assign(3, CircleMorse::standard());
    CHECK(kind_of([&] { c.validate(); }) == ErrorKind::UnsupportedModel);
}

TEST_CASE("case I on the upper pair") {
    const auto c = case_I(upper_pair_data());
    CHECK(c.format(c.boundary("x2")) == "0");
    CHECK(c.format(c.boundary("x1")) == "0");
    CHECK(c.format(c.boundary("x1'")) == "a1");
    CHECK(c.format(c.boundary("x0")) == "a0");
    CHECK(c.square_zero());
    const auto h = homology(c);
    REQUIRE(h.rank() == 2);
    CHECK(h.generators[h.basis[0]].name == "x2");
    CHECK(h.generators[h.basis[1]].name == "x1");
}

TEST_CASE("case I on the lower pair") {
    const auto c = case_I(lower_pair_data());
    CHECK(c.format(c.boundary("y2")) == "0");
    CHECK(c.format(c.boundary("y1'")) == "0");
    CHECK(c.format(c.boundary("y1")) == "b1");
    CHECK(c.format(c.boundary("y0")) == "b0");
    const auto h = homology(c);
    REQUIRE(h.rank() == 2);
    CHECK(h.generators[h.basis[0]].name == "y2");
    CHECK(h.generators[h.basis[1]].name == "y1'");
}

TEST_CASE("empty moduli give the direct sum") {
    auto d = upper_pair_data();
    d.correspondences[0].empty_moduli = true;
    const auto c = case_I(d);
    CHECK(c.differential.is_zero());
    CHECK(homology(c).rank() == 6);
}

TEST_CASE("a complex with nonzero square is refused") {
    CascadeComplex c;
    c.generators = {{"a", "", 2}, {"b", "", 1}, {"c", "", 0}};
    c.differential = BitMatrix(3, 3);
    c.differential.set(1, 0);
    c.differential.set(2, 1);
    CHECK_FALSE(c.square_zero());
    CHECK(kind_of([&] { homology(c); }) == ErrorKind::DifferentialNotSquareZero);
}

TEST_CASE("cascade enumeration") {
    const auto d = upper_pair_data();
    const auto x = find_critical(d, "x1'");
    const auto a1 = find_critical(d, "a1");
    const auto zero_dim = [](const std::vector<CascadeConfiguration>& v) {
        int n = 0;
        for (const auto& c : v) n += c.dimension == 0;
        return n;
    };
    CHECK(zero_dim(cascade_moduli(d, x, a1, 1)) == 1);
    CHECK(cascade_moduli(d, x, a1, 0).empty());
    CHECK(kind_of([&] { find_critical(d, "nope"); }) == ErrorKind::UnknownGenerator);
    const auto j = to_json(cascade_moduli(d, x, a1, 1).front());
    CHECK(j["path"] == nlohmann::json({"Sigma42", "M42", "K+"}));
}

TEST_CASE("json dump of a complex") {
    const auto j = to_json(case_I(upper_pair_data()));
    CHECK(j["generators"].size() == 6);
    CHECK(j["differential"].size() == 2);
}

// ---- properties -----------------------------------------------------------

TEST_CASE("random translated correspondences square to zero") {
    std::mt19937_64 rng(2024);
    int done = 0, tries = 0;
    while (done < 200 && tries < 5000) {
        ++tries;
        const auto d = random_cascade(rng);
        CascadeComplex c;
        try {
            c = case_I(d);
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::NonTransverse);
            continue;
        }
        ++done;
        CHECK(c.square_zero());
    }
    CHECK(done == 200);
}

TEST_CASE("shifting the target with its evaluation map changes nothing") {
    std::mt19937_64 rng(77);
    int done = 0;
    for (int t = 0; t < 2000 && done < 100; ++t) {
        auto d = random_cascade(rng);
        const auto original = d;
        CascadeComplex base;
        try {
            base = case_I(d);
        } catch (const Error&) {
            continue;
        }
        const Rational shift = random_offset(rng);
        for (auto& f : d.components[1].factors) f = f.shifted(shift);
        for (auto& m : d.correspondences[0].ev_plus.coords) m.offset += shift;
        const auto moved = case_I(d);
        CHECK(located_edges(d, moved, shift) == located_edges(original, base, 0));
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("one-step cascades reproduce the cross terms") {
    std::mt19937_64 rng(8);
    int done = 0;
    for (int t = 0; t < 3000 && done < 100; ++t) {
        const auto d = random_cascade(rng);
        CascadeComplex c;
        try {
            c = case_I(d);
        } catch (const Error&) {
            continue;
        }
        const auto xs = d.components[0].critical_points();
        const auto ys = d.components[1].critical_points();
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j) {
                int zero = 0;
                for (const auto& cfg : cascade_moduli(d, {0, xs[i].tuple}, {1, ys[j].tuple}, 1))
                    zero += cfg.dimension == 0;
                CHECK(c.differential.get(xs.size() + j, i) == (zero % 2 == 1));
            }
        ++done;
    }
    CHECK(done == 100);
}
