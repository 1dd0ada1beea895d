#include "fukflow/index_calculus.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "fukflow/errors.hpp"

namespace fukflow {

namespace {

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::string rat(const Rational& r) {
    return std::to_string(r.numerator()) + (r.denominator() == 1 ? "" : "/" + std::to_string(r.denominator()));
}

}  // namespace

Rational LagrangianLineLoop::total_turn() const {
    if (points.empty()) return Rational(0);
    return points.back().angle - points.front().angle;
}

Rational snap_to_pi_multiple(double radians, long long max_denominator, double tol) {
    const double x = radians / M_PI;
    for (long long q = 1; q <= max_denominator; ++q) {
        const double p = std::round(x * static_cast<double>(q));
        if (std::abs(p / static_cast<double>(q) - x) * M_PI <= tol) return Rational(static_cast<long long>(p), q);
    }
    throw Error(ErrorKind::DomainViolation, "angle " + std::to_string(radians) + " is not a recognisable multiple of pi");
}

LagrangianLineLoop loop_from_radians(const std::vector<std::pair<double, double>>& breakpoints, AreaForm convention) {
    LagrangianLineLoop l;
    l.convention = convention;
    for (const auto& [t, a] : breakpoints) {
        if (!l.points.empty() && !(t > l.points.back().parameter))
            throw Error(ErrorKind::DomainViolation, "breakpoint parameters must increase");
        l.points.push_back({t, snap_to_pi_multiple(a)});
    }
    return l;
}

long long winding_number(const LagrangianLineLoop& loop) {
    const Rational t = loop.total_turn();
    if (!is_integer(t)) throw Error(ErrorKind::NotClosed, "total turn " + rat(t) + " pi is not a multiple of pi");
    return t.numerator();
}

std::vector<Rational> puncture_rotations(const std::vector<LinePath>& arcs, const BoundaryData& b) {
    if (arcs.size() != b.punctures.size())
        throw Error(ErrorKind::NotClosed, "need one puncture between each pair of consecutive arcs");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].angles.empty()) throw Error(ErrorKind::NotClosed, "empty boundary arc");
        const Rational arrive = arcs[i].end();
        const Rational leave = arcs[(i + 1) % arcs.size()].start();
        const bool fw = b.punctures[i].forward;
        const Rational line0 = fw ? arrive : leave;
        const Rational line1 = fw ? leave : arrive;
        const Rational r = mod1(line1 - line0);
        if (r == Rational(0))
            throw Error(ErrorKind::DegeneratePuncture, "puncture " + std::to_string(i) + " has equal asymptotic lines");
        const Rational sigma = b.sigma_positive ? r : r - Rational(1);
        out.push_back(fw ? sigma : -sigma);
    }
    return out;
}

long long winding_number(const std::vector<LinePath>& arcs, const BoundaryData& b) {
    const auto rot = puncture_rotations(arcs, b);
    Rational total(0);
    for (const auto& a : arcs) total += a.end() - a.start();
    for (const auto& r : rot) total += r;
    if (!is_integer(total)) throw Error(ErrorKind::NotClosed, "boundary loop turns by " + rat(total) + " pi");
    return total.numerator();
}

std::vector<LinePath> fig8_arcs() {
    return {
        {{Rational(-1, 2), Rational(1, 2)}},
        {{Rational(1, 4)}},
        {{Rational(-1, 4)}},
    };
}

BoundaryData fig8_boundary() { return {{{true}, {true}, {true}}, false}; }

long long maslov_of_loop(const LagrangianLineLoop& loop) {
    const Rational t = loop.total_turn();
    if (!is_integer(t) || t.numerator() % 2 != 0)
        throw Error(ErrorKind::NotClosed, "total turn " + rat(t) + " pi is not a whole number of full turns");
    const long long m = t.numerator() / 2;
    return loop.convention == AreaForm::DxDy ? m : -m;
}

LagrangianLineLoop concatenate(const LagrangianLineLoop& a, const LagrangianLineLoop& b) {
    if (a.points.empty()) return b;
    if (b.points.empty()) return a;
    if (a.convention != b.convention) throw Error(ErrorKind::DomainViolation, "conventions differ");
    const Rational shift = a.points.back().angle - b.points.front().angle;
    if (!is_integer(shift)) throw Error(ErrorKind::NotClosed, "end line of the first loop is not the start of the second");
    LagrangianLineLoop out = a;
    const double dt = a.points.back().parameter - b.points.front().parameter;
    for (std::size_t i = 1; i < b.points.size(); ++i)
        out.points.push_back({b.points[i].parameter + dt, b.points[i].angle + shift});
    return out;
}

LagrangianLineLoop flip_convention(LagrangianLineLoop loop) {
    loop.convention = loop.convention == AreaForm::DxDy ? AreaForm::DyDx : AreaForm::DxDy;
    return loop;
}

// ---- gluing ---------------------------------------------------------------

namespace {

const PunctureSlot& slot(const IndexPart& p, const std::string& label) {
    for (const auto& s : p.punctures)
        if (s.label == label) return s;
    throw Error(ErrorKind::MismatchedPuncture, p.name + " has no puncture '" + label + "'");
}

}  // namespace

long long glued_index(const std::vector<IndexPart>& parts, const std::vector<Gluing>& gluings) {
    if (parts.empty()) throw Error(ErrorKind::MismatchedPuncture, "nothing to glue");
    if (gluings.size() + 1 != parts.size())
        throw Error(ErrorKind::MismatchedPuncture, "a gluing tree on " + std::to_string(parts.size()) + " parts needs " +
                                                       std::to_string(parts.size() - 1) + " gluings");
    std::vector<std::size_t> parent(parts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::pair<std::size_t, std::string>, bool> used;
    long long total = 0;
    for (const auto& p : parts) total += p.index;
    for (const auto& g : gluings) {
        if (g.a >= parts.size() || g.b >= parts.size() || g.a == g.b)
            throw Error(ErrorKind::MismatchedPuncture, "gluing refers to an invalid part");
        const auto& sa = slot(parts[g.a], g.puncture_a);
        const auto& sb = slot(parts[g.b], g.puncture_b);
        if (used[{g.a, g.puncture_a}] || used[{g.b, g.puncture_b}])
            throw Error(ErrorKind::MismatchedPuncture, "puncture glued twice");
        used[{g.a, g.puncture_a}] = used[{g.b, g.puncture_b}] = true;
        if (sa.k != sb.k)
            throw Error(ErrorKind::MismatchedPuncture, parts[g.a].name + ":" + sa.label + " and " + parts[g.b].name + ":" +
                                                           sb.label + " have different intersection dimensions");
        const auto ra = find(g.a), rb = find(g.b);
        if (ra == rb) throw Error(ErrorKind::MismatchedPuncture, "gluing graph has a cycle");
        parent[ra] = rb;
        total -= sa.k;
    }
    return total;
}

IndexPart glue(const IndexPart& a, const std::string& pa, const IndexPart& b, const std::string& pb) {
    const long long idx = glued_index({a, b}, {{0, pa, 1, pb}});
    IndexPart out{a.name + "#" + b.name, idx, {}};
    for (const auto& s : a.punctures)
        if (s.label != pa) out.punctures.push_back(s);
    for (const auto& s : b.punctures)
        if (s.label != pb) out.punctures.push_back(s);
    return out;
}

TriangleIndices solve_triangle_index(long long n, long long mu, long long mu_prime) {
    if (n < 1) throw Error(ErrorKind::DomainViolation, "dimension must be positive");
    const long long twice_h = 2 * n - 1 + mu_prime;
    if (twice_h % 2 != 0)
        throw Error(ErrorKind::DomainViolation, "strip-cap index is not an integer for these inputs");
    TriangleIndices r;
    r.strip_cap = twice_h / 2;
    r.triangle = n + mu + 3 * (n - 1) - 3 * r.strip_cap;

    // check both equations through the gluing rule itself
    const int k = static_cast<int>(n - 1);
    IndexPart h1{"H1", r.strip_cap, {{"p", k}}};
    IndexPart h2{"H2", r.strip_cap, {{"p", k}}};
    IndexPart h3{"H3", r.strip_cap, {{"p", k}}};
    IndexPart v{"V", r.triangle, {{"z0", k}, {"z1", k}, {"z2", k}}};
    if (glued_index({h1, h2}, {{0, "p", 1, "p"}}) != n + mu_prime ||
        glued_index({v, h1, h2, h3}, {{0, "z0", 1, "p"}, {0, "z1", 2, "p"}, {0, "z2", 3, "p"}}) != n + mu)
        throw Error(ErrorKind::DomainViolation, "index system is inconsistent");
    return r;
}

}  // namespace fukflow
