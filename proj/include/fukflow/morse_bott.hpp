#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "fukflow/f2.hpp"
#include "fukflow/homology_presentation.hpp"
#include "fukflow/link_data.hpp"

namespace fukflow {

using Rational = boost::rational<long long>;

// Representative of t mod 1 in [0,1).
Rational mod1(Rational t);

// ---- subsets of R/Z -------------------------------------------------------

// Open arc (start, start + length); length 1 is the circle minus `start`.
struct Arc {
    Rational start;
    Rational length;
    bool operator==(const Arc&) const = default;
};

// Either a finite point set, a union of open arcs, or the whole circle.
struct CircleSet {
    enum class Kind { Points, Arcs, Full };
    Kind kind = Kind::Points;
    std::vector<Rational> points;
    std::vector<Arc> arcs;

    static CircleSet full() { return {Kind::Full, {}, {}}; }
    static CircleSet empty() { return {Kind::Points, {}, {}}; }
    static CircleSet point(Rational p) { return {Kind::Points, {mod1(p)}, {}}; }
    static CircleSet arc(Rational start, Rational length) { return {Kind::Arcs, {}, {{mod1(start), length}}}; }

    bool is_empty() const { return kind == Kind::Points ? points.empty() : (kind == Kind::Arcs && arcs.empty()); }
    int dimension() const;  // -1 when empty
    std::size_t component_count() const;
    bool contains(Rational p) const;  // throws NonTransverse for boundary points
    CircleSet shifted(Rational c) const;  // {x + c}
    std::string describe() const;
};

// Throws NonTransverse when the intersection is not transverse.
CircleSet intersect(const CircleSet& a, const CircleSet& b);

// Product of per-coordinate subsets of a flat torus (R/Z)^d.
struct ProductSet {
    std::vector<CircleSet> coords;
    bool empty_factor = false;  // set when a constant coordinate constraint failed

    bool is_empty() const;
    int dimension() const;
    std::size_t component_count() const;
};

ProductSet intersect(const ProductSet& a, const ProductSet& b);

// ---- Morse data -----------------------------------------------------------

struct CirclePoint {
    Rational position;
    int index;  // 0 minimum, 1 maximum
};

// Height function on R/Z given by alternating marked minima and maxima.
class CircleMorse {
public:
    static CircleMorse from_points(std::vector<CirclePoint> pts);
    // minimum at offset, maximum at offset + 1/2
    static CircleMorse standard(Rational offset = 0);

    const std::vector<CirclePoint>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    CircleMorse shifted(Rational t) const;
    CircleSet unstable(std::size_t i) const;
    CircleSet stable(std::size_t i) const;

private:
    std::vector<CirclePoint> pts_;
};

struct CriticalPoint {
    std::string name;
    std::vector<std::size_t> tuple;  // one marked point per factor
    int index = 0;
};

// A critical component with a flat model: no factors is a point, one a
// circle, two a torus.
struct CriticalComponent {
    std::string name;
    std::vector<CircleMorse> factors;
    Rational action;
    std::map<std::vector<std::size_t>, std::string> labels;

    std::size_t dimension() const { return factors.size(); }
    // ordered by decreasing Morse index, then lexicographically by tuple
    std::vector<CriticalPoint> critical_points() const;
    ProductSet unstable(const std::vector<std::size_t>& tuple) const;
    ProductSet stable(const std::vector<std::size_t>& tuple) const;
    void validate() const;  // UnsupportedModel beyond dimension 2
};

CriticalComponent point_component(std::string name, Rational action, std::string label = "");

// One output coordinate of an evaluation map: t[source] + offset, or a constant.
struct CoordinateMap {
    bool constant = false;
    std::size_t source = 0;
    Rational offset;
};

struct EvaluationMap {
    std::vector<CoordinateMap> coords;  // one per coordinate of the component
    // {t : ev(t) in cell}
    ProductSet preimage(const ProductSet& cell, std::size_t domain_dim) const;
};

// Strip moduli M* = (R/Z)^dimension with evaluation maps into source and target.
struct Correspondence {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t dimension = 0;
    EvaluationMap ev_minus;
    EvaluationMap ev_plus;
    bool empty_moduli = false;
};

struct CascadeData {
    std::vector<CriticalComponent> components;
    std::vector<Correspondence> correspondences;
    void validate() const;
};

struct CascadeComplex {
    struct Generator {
        std::string name;
        std::string component;
        int degree = 0;
    };
    std::vector<Generator> generators;
    BitMatrix differential;  // column j is the boundary of generator j

    std::size_t size() const { return generators.size(); }
    std::size_t index_of(const std::string& name) const;
    BitVector boundary(std::size_t j) const { return differential.column(j); }
    BitVector boundary(const std::string& name) const { return boundary(index_of(name)); }
    std::string format(const BitVector& v) const;
    bool square_zero() const;
};

// Within-component differential by counting flow lines in U(x) n S(y).
BitMatrix morse_differential(const CriticalComponent& c);

CascadeComplex differential_case_I(const CriticalComponent& source, const CriticalComponent& target,
                                   const Correspondence& corr);

// Homology with representatives taken among generators whenever possible.
F2Presentation homology(const CascadeComplex& c);

// Betti numbers by generator degree; requires a degree -1 differential.
std::vector<int> graded_betti(const CascadeComplex& c, int max_degree = 3);

nlohmann::json to_json(const CascadeComplex& c);

// ---- cascades -------------------------------------------------------------

struct CellPiece {
    bool point = true;
    Rational start;
    Rational length;  // arcs only; 1 means circle minus start, 0 with point=false means whole circle
};

struct CascadeConfiguration {
    std::vector<std::string> path;  // components and correspondences in order
    std::vector<std::vector<CellPiece>> cells;  // one product cell per moduli factor
    int dimension = 0;
};

struct CriticalRef {
    std::size_t component;
    std::vector<std::size_t> tuple;
};

CriticalRef find_critical(const CascadeData& data, const std::string& name);

std::vector<CascadeConfiguration> cascade_moduli(const CascadeData& data, const CriticalRef& x, const CriticalRef& y,
                                                 std::size_t k);

nlohmann::json to_json(const CascadeConfiguration& c);

// Torus and circle data attached to the pairs (V4, V2) and (V2, V0).
CascadeData upper_pair_data();
CascadeData lower_pair_data();

// ---- link complement ------------------------------------------------------

CascadeComplex handle_complex_from_link(const FramedLink& fl);

}  // namespace fukflow
