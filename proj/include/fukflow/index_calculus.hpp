#pragma once

#include <string>
#include <vector>

#include "fukflow/morse_bott.hpp"  // Rational

namespace fukflow {

// Angles of lines in the plane are stored as rational multiples of pi, so a
// line is an angle mod 1 in these units.
enum class AreaForm { DxDy, DyDx };

struct Breakpoint {
    double parameter = 0;
    Rational angle;  // units of pi
};

// Piecewise-linear lift of a loop of lines.
struct LagrangianLineLoop {
    std::vector<Breakpoint> points;
    AreaForm convention = AreaForm::DxDy;

    Rational total_turn() const;  // units of pi
};

// Nearest p/q (q <= max_denominator) to radians/pi within tol radians.
Rational snap_to_pi_multiple(double radians, long long max_denominator = 720, double tol = 1e-6);
LagrangianLineLoop loop_from_radians(const std::vector<std::pair<double, double>>& breakpoints, AreaForm convention);

// Signed half-turns.
long long winding_number(const LagrangianLineLoop& loop);

// One boundary arc of a disc with punctures: a lifted path of lines.
struct LinePath {
    std::vector<Rational> angles;
    Rational start() const { return angles.front(); }
    Rational end() const { return angles.back(); }
};

// Puncture i sits between arc i and arc i+1 (cyclically). With `forward`
// the arriving arc is side 0; the short rotation e^{it sigma} from the side-0
// line to the side-1 line then contributes sigma, and -sigma when reversed.
struct Puncture {
    bool forward = true;
};

struct BoundaryData {
    std::vector<Puncture> punctures;
    bool sigma_positive = false;  // sigma in (0, pi) instead of (-pi, 0)
};

long long winding_number(const std::vector<LinePath>& arcs, const BoundaryData& b);
// Rotation contributed by each puncture, units of pi.
std::vector<Rational> puncture_rotations(const std::vector<LinePath>& arcs, const BoundaryData& b);

// Boundary pattern of the triangle: one arc turning half a revolution
// counter-clockwise, two flat arcs, three punctures.
std::vector<LinePath> fig8_arcs();
BoundaryData fig8_boundary();

// A full turn of lines counts as one under dx^dy. Loops turning by an odd
// number of half-turns are rejected with NotClosed.
long long maslov_of_loop(const LagrangianLineLoop& loop);

LagrangianLineLoop concatenate(const LagrangianLineLoop& a, const LagrangianLineLoop& b);
LagrangianLineLoop flip_convention(LagrangianLineLoop loop);

// ---- gluing ---------------------------------------------------------------

struct PunctureSlot {
    std::string label;
    int k = 0;  // dimension of the boundary intersection at this puncture
};

struct IndexPart {
    std::string name;
    long long index = 0;
    std::vector<PunctureSlot> punctures;
};

struct Gluing {
    std::size_t a;
    std::string puncture_a;
    std::size_t b;
    std::string puncture_b;
};

// Sum of indices minus k over glued punctures; the gluing graph must be a tree.
long long glued_index(const std::vector<IndexPart>& parts, const std::vector<Gluing>& gluings);
IndexPart glue(const IndexPart& a, const std::string& pa, const IndexPart& b, const std::string& pb);

struct TriangleIndices {
    long long strip_cap = 0;  // index_H
    long long triangle = 0;   // index_V
};

// Solves index_V + 3 index_H - 3(n-1) = n + mu and 2 index_H - (n-1) = n + mu'.
TriangleIndices solve_triangle_index(long long n, long long mu, long long mu_prime);

}  // namespace fukflow
