#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace fukflow::geom {

using cd = std::complex<double>;
using Vec2 = std::array<double, 2>;
using Vec4 = std::array<double, 4>;
using CVec2 = std::array<cd, 2>;
using CVec4 = std::array<cd, 4>;

constexpr double kConstructionTol = 1e-12;
constexpr double kRoundTripTol = 1e-10;
constexpr double kFiniteDifferenceTol = 1e-6;
constexpr double kFiniteDifferenceStep = 1e-5;
constexpr double kBranchCutTol = 1e-8;

// Point of T*S^3 inside R^4 x R^4.
class CotangentPoint {
public:
    static CotangentPoint make(const Vec4& u, const Vec4& v, double tol = kConstructionTol);
    const Vec4& u() const { return u_; }
    const Vec4& v() const { return v_; }

private:
    Vec4 u_{}, v_{};
};

// Point of the affine quadric sum z_j^2 = 1 in C^4.
class QuadricPoint {
public:
    static QuadricPoint make(const CVec4& z, double tol = kConstructionTol);
    const CVec4& z() const { return z_; }

private:
    CVec4 z_{};
};

QuadricPoint mu_inv(const CotangentPoint& p);
CotangentPoint mu(const QuadricPoint& z);

CotangentPoint sigma(const Vec2& e, const Vec2& f, double theta, double lambda);
cd P(const CVec4& z);
cd p_image(double theta, double lambda);

struct Trivialized {
    cd lambda;
    CVec2 w1;
    CVec2 w2;
};
Trivialized trivialization(const QuadricPoint& z);

// z1 = (zeta + 1/zeta)/2, z2 = -i (zeta - 1/zeta)/2, placed along e and f.
QuadricPoint rho(const Vec2& e, const Vec2& f, cd zeta);

// Axes of the ellipse traced by a constant-lambda curve.
double ellipse_a(double lambda);
double ellipse_b(double lambda);

// mu^*(sum -v du) - sum y dx evaluated on a tangent vector xi at z, with
// central differences of step h. Returns |lhs - rhs| / max(1, |rhs|).
double pullback_defect(const QuadricPoint& z, const CVec4& xi, double h = kFiniteDifferenceStep);
// Projects an arbitrary complex vector to the tangent space of the quadric at z.
CVec4 tangent_projection(const CVec4& z, const CVec4& xi);

// ---- numeric checks -------------------------------------------------------

struct GeometryReport {
    std::size_t image_checks = 0, round_trips = 0, pullback_checks = 0;
    double max_image_error = 0;     // |P(mu^-1(sigma)) - p_image|
    double max_round_trip = 0;      // both composites, max coordinate error
    double max_pullback_defect = 0;
    bool passed() const {
        return max_image_error < kRoundTripTol && max_round_trip < kRoundTripTol &&
               max_pullback_defect < kFiniteDifferenceTol;
    }
};

// 48 x 21 grid of (theta, lambda) against `frames` random orthonormal-pair
// choices (e, f), then random round trips and tangent vectors.
GeometryReport geometry_checks(std::uint64_t seed, std::size_t frames = 100, std::size_t round_trips = 10000,
                               std::size_t pullbacks = 100);

// ---- figure ---------------------------------------------------------------

struct CurveSpec {
    std::string id;
    std::vector<std::array<double, 2>> nodes;  // (theta, lambda), linear in between
};

struct FigureSpec {
    int grid_n = 96;         // samples per segment
    double lambda_max = 0.6;
    std::vector<CurveSpec> curves;
};

struct SampledPoint {
    std::string curve;
    double theta, lambda;
    cd value;
};

// Gamma_2 is the zero section; Gamma_0 and Gamma_4 each cross it twice,
// forming one triangle with lambda > 0 and a bigon with each of them below.
FigureSpec default_figure(int grid_n = 96, double lambda_max = 0.6);
std::vector<SampledPoint> sample_figure(const FigureSpec& spec);
std::string figure_csv(const std::vector<SampledPoint>& pts);
std::string figure_svg(const std::vector<SampledPoint>& pts);

// Temp file plus rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace fukflow::geom
