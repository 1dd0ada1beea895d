#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fukflow/errors.hpp"
#include "fukflow/geometry.hpp"

using namespace fukflow;
using namespace fukflow::geom;

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

Vec2 unit2(double a) { return {std::cos(a), std::sin(a)}; }

}  // namespace

TEST_CASE("domain checks") {
    CHECK(kind_of([] { CotangentPoint::make({1, 1, 0, 0}, {0, 0, 0, 0}); }) == ErrorKind::DomainViolation);
    CHECK(kind_of([] { CotangentPoint::make({1, 0, 0, 0}, {1, 0, 0, 0}); }) == ErrorKind::DomainViolation);
    CHECK(kind_of([] { QuadricPoint::make({cd(2), 0, 0, 0}); }) == ErrorKind::DomainViolation);
    CHECK_NOTHROW(QuadricPoint::make({cd(1), 0, 0, 0}));
}

TEST_CASE("zero section maps to the real sphere") {
    const auto z = mu_inv(CotangentPoint::make({0, 1, 0, 0}, {0, 0, 0, 0}));
    CHECK(std::abs(z.z()[1] - cd(1)) < 1e-15);
    const auto p = mu(z);
    CHECK(p.u()[1] == doctest::Approx(1.0));
}

TEST_CASE("mu on a point with momentum") {
    // x = f u, y = -v / f with f^2 = (1 + sqrt(1 + 4 |v|^2)) / 2
    const auto p = CotangentPoint::make({1, 0, 0, 0}, {0, 2, 0, 0});
    const auto z = mu_inv(p);
    const double f = std::sqrt((1 + std::sqrt(17.0)) / 2);
    CHECK(z.z()[0].real() == doctest::Approx(f));
    CHECK(z.z()[1].imag() == doctest::Approx(-2 / f));
    const auto back = mu(z);
    CHECK(back.v()[1] == doctest::Approx(2.0));
}

TEST_CASE("P along sigma traces an ellipse") {
    const Vec2 e = unit2(0.4), f = unit2(2.0);
    for (double lambda : {-0.7, 0.0, 0.35, 1.2})
        for (double theta = 0; theta < M_PI; theta += 0.1) {
            const cd w = P(mu_inv(sigma(e, f, theta, lambda)).z());
            CHECK(std::abs(w - p_image(theta, lambda)) < kRoundTripTol);
            const double a = ellipse_a(lambda), b = ellipse_b(lambda);
            if (b != 0) CHECK(std::pow(w.real() / a, 2) + std::pow(w.imag() / b, 2) == doctest::Approx(1.0));
        }
}

TEST_CASE("trivialization") {
    const auto z = mu_inv(sigma(unit2(0.1), unit2(1.3), 0.5, 0.2));
    const auto t = trivialization(z);
    CHECK(std::abs(t.lambda - P(z.z())) < 1e-15);
    // w1 and w2 lie on the unit complex conics
    CHECK(std::abs(t.w1[0] * t.w1[0] + t.w1[1] * t.w1[1] - cd(1)) < 1e-12);
    CHECK(std::abs(t.w2[0] * t.w2[0] + t.w2[1] * t.w2[1] - cd(1)) < 1e-12);
    // theta = 0, lambda = 0 gives P = 1
    CHECK(kind_of([] { trivialization(mu_inv(sigma(unit2(0), unit2(0), 0, 0))); }) == ErrorKind::BranchCutProximity);
    // real P beyond 1
    CHECK(kind_of([] { trivialization(mu_inv(sigma(unit2(0), unit2(0), 0, 1.0))); }) ==
          ErrorKind::BranchCutProximity);
}

TEST_CASE("rho lands on the quadric") {
    const auto z = rho(unit2(0.2), unit2(0.9), cd(0.3, 1.7));
    cd s = 0;
    for (const auto& c : z.z()) s += c * c;
    CHECK(std::abs(s - cd(1)) < 1e-12);
    CHECK(kind_of([] { rho(unit2(0), unit2(0), cd(0)); }) == ErrorKind::ZeroArgument);
}

TEST_CASE("tangent projection is tangent") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    const auto z = mu_inv(CotangentPoint::make({0, 0.6, 0.8, 0}, {0.5, 0, 0, 1}));
    CVec4 xi;
    for (auto& c : xi) c = cd(g(rng), g(rng));
    const auto t = tangent_projection(z.z(), xi);
    cd s = 0;
    for (int j = 0; j < 4; ++j) s += z.z()[j] * t[j];
    CHECK(std::abs(s) < 1e-12);
}

TEST_CASE("numeric checks at full size") {
    const auto r = geometry_checks(12345);
    CHECK(r.image_checks == 48 * 21 * 100);
    CHECK(r.round_trips == 10000);
    CHECK(r.pullback_checks == 100);
    CHECK(r.max_image_error < kRoundTripTol);
    CHECK(r.max_round_trip < kRoundTripTol);
    CHECK(r.max_pullback_defect < kFiniteDifferenceTol);
    CHECK(r.passed());
}

TEST_CASE("figure sampling") {
    const auto spec = default_figure(10, 0.5);
    CHECK(spec.curves.size() == 3);
    const auto pts = sample_figure(spec);
    std::size_t expected = 0;
    for (const auto& c : spec.curves) expected += (c.nodes.size() - 1) * 10 + 1;
    CHECK(pts.size() == expected);
    for (const auto& p : pts) CHECK(std::abs(p.value - p_image(p.theta, p.lambda)) == 0.0);
    // Gamma_0 and Gamma_4 meet above the axis at theta = pi/4
    const auto& g4 = spec.curves[1];
    const auto& g0 = spec.curves[2];
    CHECK(g4.id == "Gamma_4");
    CHECK(g0.id == "Gamma_0");
    CHECK(g4.nodes.front()[0] == 0.0);
    CHECK(g0.nodes.back()[0] == doctest::Approx(M_PI / 2));
    std::vector<cd> meet;
    for (const auto& p : pts)
        if (p.curve != "Gamma_2" && std::abs(p.theta - M_PI / 4) < 1e-12) meet.push_back(p.value);
    REQUIRE(meet.size() == 2);
    CHECK(std::abs(meet[0] - meet[1]) < 1e-12);
    CHECK(meet[0].imag() > 0);
    const auto csv = figure_csv(pts);
    CHECK(csv.rfind("curve_id,theta,lambda,re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(pts.size() + 1));
    const auto svg = figure_svg(pts);
    CHECK(svg.find("viewBox=\"-200 -150 400 300\"") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), 'M') >= 3);
    CHECK(figure_csv(sample_figure(default_figure(10, 0.5))) == csv);
}

TEST_CASE("atomic write") {
    const auto dir = std::filesystem::temp_directory_path() / "fukflow_geometry_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.csv").string();
    write_atomic(path, "a,b\n");
    write_atomic(path, "c,d\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "c,d\n");
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file();
    CHECK(files == 1);
    CHECK(kind_of([&] { write_atomic((dir / "missing" / "x.csv").string(), "x"); }) == ErrorKind::IOFailure);
    std::filesystem::remove_all(dir);
}
