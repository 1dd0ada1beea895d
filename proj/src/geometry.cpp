#include "fukflow/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unistd.h>

#include "fukflow/errors.hpp"

namespace fukflow::geom {

namespace {

double norm(const Vec4& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]); }
double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

double f_of(double s) { return std::sqrt((1.0 + std::sqrt(1.0 + 4.0 * s * s)) / 2.0); }

// mu on all of C^4 with nonzero real part; used by the finite differences
std::pair<Vec4, Vec4> mu_raw(const CVec4& z) {
    Vec4 x{}, y{};
    for (int j = 0; j < 4; ++j) {
        x[j] = z[j].real();
        y[j] = z[j].imag();
    }
    const double nx = norm(x);
    Vec4 u{}, v{};
    for (int j = 0; j < 4; ++j) {
        u[j] = x[j] / nx;
        v[j] = -nx * y[j];
    }
    return {u, v};
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

}  // namespace

CotangentPoint CotangentPoint::make(const Vec4& u, const Vec4& v, double tol) {
    if (std::abs(norm(u) - 1.0) >= tol || std::abs(dot(u, v)) >= tol)
        throw Error(ErrorKind::DomainViolation, "(u, v) is not in the cotangent bundle of the unit sphere");
    CotangentPoint p;
    p.u_ = u;
    p.v_ = v;
    return p;
}

QuadricPoint QuadricPoint::make(const CVec4& z, double tol) {
    if (std::abs(z[0] * z[0] + z[1] * z[1] + z[2] * z[2] + z[3] * z[3] - 1.0) >= tol)
        throw Error(ErrorKind::DomainViolation, "z is not on the quadric");
    QuadricPoint q;
    q.z_ = z;
    return q;
}

QuadricPoint mu_inv(const CotangentPoint& p) {
    const double s = norm(p.v());
    const double f = f_of(s);
    CVec4 z;
    for (int j = 0; j < 4; ++j) z[j] = cd(f * p.u()[j], -p.v()[j] / f);
    return QuadricPoint::make(z, kRoundTripTol);
}

CotangentPoint mu(const QuadricPoint& z) {
    const auto [u, v] = mu_raw(z.z());
    return CotangentPoint::make(u, v, kRoundTripTol);
}

CotangentPoint sigma(const Vec2& e, const Vec2& f, double theta, double lambda) {
    const double c = std::cos(theta), s = std::sin(theta);
    const Vec4 u{c * e[0], c * e[1], s * f[0], s * f[1]};
    const Vec4 v{-lambda * s * e[0], -lambda * s * e[1], lambda * c * f[0], lambda * c * f[1]};
    return CotangentPoint::make(u, v);
}

cd P(const CVec4& z) { return z[0] * z[0] + z[1] * z[1] - z[2] * z[2] - z[3] * z[3]; }

cd p_image(double theta, double lambda) {
    return {std::sqrt(1.0 + 4.0 * lambda * lambda) * std::cos(2.0 * theta), 2.0 * lambda * std::sin(2.0 * theta)};
}

Trivialized trivialization(const QuadricPoint& zp) {
    const auto& z = zp.z();
    const cd lambda = P(z);
    if (std::abs(lambda - 1.0) < kBranchCutTol || std::abs(lambda + 1.0) < kBranchCutTol)
        throw Error(ErrorKind::BranchCutProximity, "P(z) is too close to +-1");
    if (std::abs(lambda.imag()) < kConstructionTol && std::abs(lambda.real()) > 1.0)
        throw Error(ErrorKind::BranchCutProximity, "P(z) lies on a branch cut of the square roots");
    const cd alpha = std::sqrt(2.0 / (1.0 + lambda));
    const cd beta = std::sqrt(2.0 / (1.0 - lambda));
    return {lambda, {alpha * z[0], alpha * z[1]}, {beta * z[2], beta * z[3]}};
}

QuadricPoint rho(const Vec2& e, const Vec2& f, cd zeta) {
    if (zeta == cd(0.0, 0.0)) throw Error(ErrorKind::ZeroArgument, "zeta must be nonzero");
    const cd inv = 1.0 / zeta;
    const cd z1 = (zeta + inv) / 2.0;
    const cd z2 = cd(0.0, -1.0) * (zeta - inv) / 2.0;
    return QuadricPoint::make({z1 * e[0], z1 * e[1], z2 * f[0], z2 * f[1]}, kRoundTripTol);
}

double ellipse_a(double lambda) { return std::sqrt(1.0 + 4.0 * lambda * lambda); }
double ellipse_b(double lambda) { return 2.0 * lambda; }

CVec4 tangent_projection(const CVec4& z, const CVec4& xi) {
    cd s = 0;
    double n2 = 0;
    for (int j = 0; j < 4; ++j) {
        s += z[j] * xi[j];
        n2 += std::norm(z[j]);
    }
    const cd c = s / n2;
    CVec4 out;
    for (int j = 0; j < 4; ++j) out[j] = xi[j] - c * std::conj(z[j]);
    return out;
}

double pullback_defect(const QuadricPoint& zp, const CVec4& xi, double h) {
    const auto& z = zp.z();
    CVec4 zp_, zm_;
    for (int j = 0; j < 4; ++j) {
        zp_[j] = z[j] + h * xi[j];
        zm_[j] = z[j] - h * xi[j];
    }
    const auto [up, vp] = mu_raw(zp_);
    const auto [um, vm] = mu_raw(zm_);
    const auto [u0, v0] = mu_raw(z);
    double lhs = 0, rhs = 0;
    for (int j = 0; j < 4; ++j) {
        lhs += -v0[j] * (up[j] - um[j]) / (2.0 * h);
        rhs += z[j].imag() * xi[j].real();
    }
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

// ---- numeric checks -------------------------------------------------------

GeometryReport geometry_checks(std::uint64_t seed, std::size_t frames, std::size_t round_trips, std::size_t pullbacks) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::normal_distribution<double> gauss;
    GeometryReport rep;

    for (std::size_t k = 0; k < frames; ++k) {
        const double a = angle(rng), b = angle(rng);
        const Vec2 e{std::cos(a), std::sin(a)}, f{std::cos(b), std::sin(b)};
        for (int i = 0; i < 48; ++i)
            for (int j = 0; j < 21; ++j) {
                const double theta = i * M_PI / 48.0, lambda = -1.0 + 0.1 * j;
                const cd got = P(mu_inv(sigma(e, f, theta, lambda)).z());
                rep.max_image_error = std::max(rep.max_image_error, std::abs(got - p_image(theta, lambda)));
                ++rep.image_checks;
            }
    }

    auto random_cotangent = [&] {
        Vec4 u, v;
        for (auto& c : u) c = gauss(rng);
        const double n = norm(u);
        for (auto& c : u) c /= n;
        for (auto& c : v) c = 2.0 * gauss(rng);
        const double d = dot(u, v);
        for (int i = 0; i < 4; ++i) v[i] -= d * u[i];
        return CotangentPoint::make(u, v);
    };

    for (std::size_t k = 0; k < round_trips; ++k) {
        const auto p = random_cotangent();
        const auto z = mu_inv(p);
        const auto back = mu(z);
        const auto z2 = mu_inv(back);
        double err = 0;
        for (int i = 0; i < 4; ++i) {
            err = std::max(err, std::abs(back.u()[i] - p.u()[i]));
            err = std::max(err, std::abs(back.v()[i] - p.v()[i]));
            err = std::max(err, std::abs(z2.z()[i] - z.z()[i]));
        }
        rep.max_round_trip = std::max(rep.max_round_trip, err);
        ++rep.round_trips;
    }

    for (std::size_t k = 0; k < pullbacks; ++k) {
        const auto z = mu_inv(random_cotangent());
        CVec4 xi;
        for (auto& c : xi) c = cd(gauss(rng), gauss(rng));
        xi = tangent_projection(z.z(), xi);
        rep.max_pullback_defect = std::max(rep.max_pullback_defect, pullback_defect(z, xi));
        ++rep.pullback_checks;
    }
    return rep;
}

// ---- figure ---------------------------------------------------------------

FigureSpec default_figure(int grid_n, double r) {
    const double q = M_PI / 16.0;  // theta step; 2 theta runs over [0, pi]
    FigureSpec s;
    s.grid_n = grid_n;
    s.lambda_max = r;
    s.curves.push_back({"Gamma_2", {{0.0, 0.0}, {8 * q, 0.0}}});
    s.curves.push_back({"Gamma_4", {{0.0, r / 2}, {q, 0.0}, {2 * q, -r / 2}, {3 * q, 0.0}, {5 * q, r}, {8 * q, r}}});
    s.curves.push_back({"Gamma_0", {{0.0, r}, {3 * q, r}, {5 * q, 0.0}, {6 * q, -r / 2}, {7 * q, 0.0}, {8 * q, r / 2}}});
    return s;
}

std::vector<SampledPoint> sample_figure(const FigureSpec& spec) {
    if (spec.grid_n < 1) throw Error(ErrorKind::DomainViolation, "grid size must be positive");
    std::vector<SampledPoint> out;
    for (const auto& c : spec.curves) {
        for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
            const auto& a = c.nodes[i];
            const auto& b = c.nodes[i + 1];
            for (int s = (i == 0 ? 0 : 1); s <= spec.grid_n; ++s) {
                const double t = static_cast<double>(s) / spec.grid_n;
                const double th = a[0] + t * (b[0] - a[0]);
                const double la = a[1] + t * (b[1] - a[1]);
                out.push_back({c.id, th, la, p_image(th, la)});
            }
        }
    }
    return out;
}

std::string figure_csv(const std::vector<SampledPoint>& pts) {
    std::ostringstream os;
    os << "curve_id,theta,lambda,re,im\n";
    for (const auto& p : pts)
        os << p.curve << ',' << fmt("%.12g", p.theta) << ',' << fmt("%.12g", p.lambda) << ','
           << fmt("%.12g", p.value.real() + 0.0) << ',' << fmt("%.12g", p.value.imag() + 0.0) << '\n';
    return os.str();
}

std::string figure_svg(const std::vector<SampledPoint>& pts) {
    static const std::map<std::string, std::string> colour{
        {"Gamma_0", "#1b6ca8"}, {"Gamma_2", "#222222"}, {"Gamma_4", "#c0392b"}};
    std::map<std::string, std::string> paths;
    std::vector<std::string> order;
    for (const auto& p : pts) {
        auto& d = paths[p.curve];
        if (d.empty()) order.push_back(p.curve);
        d += (d.empty() ? "M" : " L") + fmt("%.5f", p.value.real() * 100.0) + "," + fmt("%.5f", -p.value.imag() * 100.0);
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-200 -150 400 300\" width=\"800\" height=\"600\">\n";
    os << "  <line x1=\"-200\" y1=\"0\" x2=\"200\" y2=\"0\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    os << "  <line x1=\"0\" y1=\"-150\" x2=\"0\" y2=\"150\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    for (const auto& id : order) {
        auto it = colour.find(id);
        os << "  <path id=\"" << id << "\" d=\"" << paths[id] << "\" fill=\"none\" stroke=\""
           << (it == colour.end() ? "#555555" : it->second) << "\" stroke-width=\"1.2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::IOFailure, "cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw Error(ErrorKind::IOFailure, "write to " + tmp + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorKind::IOFailure, "cannot move output into " + path);
    }
}

}  // namespace fukflow::geom
