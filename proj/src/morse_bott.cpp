#include "fukflow/morse_bott.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "fukflow/errors.hpp"

namespace fukflow {

namespace {

long long floor_div(long long n, long long d) { return n >= 0 ? n / d : -((-n + d - 1) / d); }

std::string rat(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

[[noreturn]] void non_transverse(const std::string& what) { throw Error(ErrorKind::NonTransverse, what); }

}  // namespace

Rational mod1(Rational t) { return t - Rational(floor_div(t.numerator(), t.denominator())); }

// ---- CircleSet ------------------------------------------------------------

int CircleSet::dimension() const {
    if (is_empty()) return -1;
    return kind == Kind::Points ? 0 : 1;
}

std::size_t CircleSet::component_count() const {
    switch (kind) {
        case Kind::Points: return points.size();
        case Kind::Arcs: return arcs.size();
        case Kind::Full: return 1;
    }
    return 0;
}

bool CircleSet::contains(Rational p) const {
    p = mod1(p);
    switch (kind) {
        case Kind::Full: return true;
        case Kind::Points:
            if (std::find(points.begin(), points.end(), p) != points.end())
                non_transverse("constant " + rat(p) + " sits on a point constraint");
            return false;
        case Kind::Arcs:
            for (const auto& a : arcs) {
                const Rational d = mod1(p - a.start);
                if (d == Rational(0) || d == a.length) non_transverse("constant " + rat(p) + " sits on an arc endpoint");
                if (d < a.length) return true;
            }
            return false;
    }
    return false;
}

CircleSet CircleSet::shifted(Rational c) const {
    CircleSet out = *this;
    for (auto& p : out.points) p = mod1(p + c);
    std::sort(out.points.begin(), out.points.end());
    for (auto& a : out.arcs) a.start = mod1(a.start + c);
    return out;
}

std::string CircleSet::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Full: return "R/Z";
        case Kind::Points:
            os << '{';
            for (std::size_t i = 0; i < points.size(); ++i) os << (i ? "," : "") << rat(points[i]);
            os << '}';
            return os.str();
        case Kind::Arcs:
            for (std::size_t i = 0; i < arcs.size(); ++i)
                os << (i ? " u " : "") << '(' << rat(arcs[i].start) << ',' << rat(arcs[i].start + arcs[i].length) << ')';
            return arcs.empty() ? "{}" : os.str();
    }
    return "";
}

CircleSet intersect(const CircleSet& a, const CircleSet& b) {
    using K = CircleSet::Kind;
    if (a.kind == K::Full) return b;
    if (b.kind == K::Full) return a;
    if (a.kind == K::Points && b.kind == K::Points) {
        for (const auto& p : a.points)
            if (std::find(b.points.begin(), b.points.end(), p) != b.points.end())
                non_transverse("two point constraints coincide at " + rat(p));
        return CircleSet::empty();
    }
    if (a.kind == K::Points || b.kind == K::Points) {
        const CircleSet& pts = a.kind == K::Points ? a : b;
        const CircleSet& open = a.kind == K::Points ? b : a;
        CircleSet out = CircleSet::empty();
        for (const auto& p : pts.points)
            if (open.contains(p)) out.points.push_back(p);
        return out;
    }
    CircleSet out{K::Arcs, {}, {}};
    for (const auto& x : a.arcs)
        for (const auto& y : b.arcs)
            for (long long m = -1; m <= 1; ++m) {
                const Rational lo = std::max(x.start, y.start + Rational(m));
                const Rational hi = std::min(x.start + x.length, y.start + Rational(m) + y.length);
                if (lo < hi) out.arcs.push_back({mod1(lo), hi - lo});
            }
    std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& p, const Arc& q) { return p.start < q.start; });
    return out;
}

bool ProductSet::is_empty() const {
    if (empty_factor) return true;
    return std::any_of(coords.begin(), coords.end(), [](const CircleSet& c) { return c.is_empty(); });
}

int ProductSet::dimension() const {
    if (is_empty()) return -1;
    int d = 0;
    for (const auto& c : coords) d += c.dimension();
    return d;
}

std::size_t ProductSet::component_count() const {
    if (is_empty()) return 0;
    std::size_t n = 1;
    for (const auto& c : coords) n *= c.component_count();
    return n;
}

ProductSet intersect(const ProductSet& a, const ProductSet& b) {
    if (a.coords.size() != b.coords.size()) throw Error(ErrorKind::ShapeMismatch, "product sets of different dimension");
    ProductSet out;
    out.empty_factor = a.empty_factor || b.empty_factor;
    for (std::size_t i = 0; i < a.coords.size(); ++i) out.coords.push_back(intersect(a.coords[i], b.coords[i]));
    return out;
}

// ---- Morse data -----------------------------------------------------------

CircleMorse CircleMorse::from_points(std::vector<CirclePoint> pts) {
    for (auto& p : pts) p.position = mod1(p.position);
    std::sort(pts.begin(), pts.end(), [](const CirclePoint& a, const CirclePoint& b) { return a.position < b.position; });
    if (pts.size() < 2 || pts.size() % 2 != 0)
        throw Error(ErrorKind::InvalidModel, "a circle height function needs an even number (>= 2) of critical points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        if (p.index != 0 && p.index != 1) throw Error(ErrorKind::InvalidModel, "circle critical points have index 0 or 1");
        if (p.index == q.index) throw Error(ErrorKind::InvalidModel, "minima and maxima must alternate");
        if (i + 1 < pts.size() && p.position == q.position)
            throw Error(ErrorKind::InvalidModel, "marked points must be distinct");
    }
    CircleMorse m;
    m.pts_ = std::move(pts);
    return m;
}

CircleMorse CircleMorse::standard(Rational offset) {
    return from_points({{offset, 0}, {offset + Rational(1, 2), 1}});
}

CircleMorse CircleMorse::shifted(Rational t) const {
    auto pts = pts_;
    for (auto& p : pts) p.position += t;
    return from_points(std::move(pts));
}

CircleSet CircleMorse::unstable(std::size_t i) const {
    const std::size_t n = pts_.size();
    if (pts_[i].index == 0) return CircleSet::point(pts_[i].position);
    const Rational prev = pts_[(i + n - 1) % n].position;
    const Rational next = pts_[(i + 1) % n].position;
    return CircleSet::arc(prev, n == 2 ? Rational(1) : mod1(next - prev));
}

CircleSet CircleMorse::stable(std::size_t i) const {
    const std::size_t n = pts_.size();
    if (pts_[i].index == 1) return CircleSet::point(pts_[i].position);
    const Rational prev = pts_[(i + n - 1) % n].position;
    const Rational next = pts_[(i + 1) % n].position;
    return CircleSet::arc(prev, n == 2 ? Rational(1) : mod1(next - prev));
}

std::vector<CriticalPoint> CriticalComponent::critical_points() const {
    std::vector<CriticalPoint> out;
    std::vector<std::size_t> t(factors.size(), 0);
    while (true) {
        CriticalPoint cp;
        cp.tuple = t;
        for (std::size_t f = 0; f < factors.size(); ++f) cp.index += factors[f].points()[t[f]].index;
        auto it = labels.find(t);
        if (it != labels.end()) cp.name = it->second;
        else {
            cp.name = name + "[";
            for (std::size_t f = 0; f < t.size(); ++f) cp.name += (f ? "," : "") + std::to_string(t[f]);
            cp.name += "]";
        }
        out.push_back(cp);
        std::size_t f = 0;
        while (f < t.size() && ++t[f] == factors[f].size()) t[f++] = 0;
        if (f == t.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (a.index != b.index) return a.index > b.index;
        return a.tuple < b.tuple;
    });
    return out;
}

ProductSet CriticalComponent::unstable(const std::vector<std::size_t>& tuple) const {
    ProductSet p;
    for (std::size_t f = 0; f < factors.size(); ++f) p.coords.push_back(factors[f].unstable(tuple.at(f)));
    return p;
}

ProductSet CriticalComponent::stable(const std::vector<std::size_t>& tuple) const {
    ProductSet p;
    for (std::size_t f = 0; f < factors.size(); ++f) p.coords.push_back(factors[f].stable(tuple.at(f)));
    return p;
}

void CriticalComponent::validate() const {
    if (factors.size() > 2)
        throw Error(ErrorKind::UnsupportedModel, name + ": only point, circle and torus models are supported");
}

CriticalComponent point_component(std::string name, Rational action, std::string label) {
    CriticalComponent c;
    c.name = std::move(name);
    c.action = action;
    c.labels[{}] = label.empty() ? c.name : label;
    return c;
}

ProductSet EvaluationMap::preimage(const ProductSet& cell, std::size_t domain_dim) const {
    if (cell.coords.size() != coords.size())
        throw Error(ErrorKind::ShapeMismatch, "evaluation map has the wrong number of coordinates");
    ProductSet out;
    out.coords.assign(domain_dim, CircleSet::full());
    out.empty_factor = cell.empty_factor;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const auto& m = coords[i];
        if (m.constant) {
            if (!cell.coords[i].contains(m.offset)) out.empty_factor = true;
            continue;
        }
        if (m.source >= domain_dim) throw Error(ErrorKind::InvalidModel, "evaluation map reads a missing coordinate");
        out.coords[m.source] = intersect(out.coords[m.source], cell.coords[i].shifted(-m.offset));
    }
    return out;
}

void CascadeData::validate() const {
    for (const auto& c : components) c.validate();
    for (const auto& r : correspondences) {
        if (r.source >= components.size() || r.target >= components.size())
            throw Error(ErrorKind::InvalidModel, r.name + ": endpoint out of range");
        if (!(components[r.source].action > components[r.target].action))
            throw Error(ErrorKind::InvalidModel, r.name + ": action must drop from source to target");
        if (r.ev_minus.coords.size() != components[r.source].dimension() ||
            r.ev_plus.coords.size() != components[r.target].dimension())
            throw Error(ErrorKind::InvalidModel, r.name + ": evaluation map shape does not match its component");
    }
}

// ---- complexes ------------------------------------------------------------

std::size_t CascadeComplex::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return i;
    throw Error(ErrorKind::UnknownGenerator, "no generator named '" + name + "'");
}

std::string CascadeComplex::format(const BitVector& v) const {
    std::string s;
    for (std::size_t i : v.support()) s += (s.empty() ? "" : " + ") + generators[i].name;
    return s.empty() ? "0" : s;
}

bool CascadeComplex::square_zero() const { return (differential * differential).is_zero(); }

BitMatrix morse_differential(const CriticalComponent& c) {
    c.validate();
    const auto crit = c.critical_points();
    BitMatrix d(crit.size(), crit.size());
    for (std::size_t x = 0; x < crit.size(); ++x)
        for (std::size_t y = 0; y < crit.size(); ++y) {
            if (crit[x].index - crit[y].index != 1) continue;
            const auto s = intersect(c.unstable(crit[x].tuple), c.stable(crit[y].tuple));
            if (s.dimension() == 1 && s.component_count() % 2 == 1) d.set(y, x);
        }
    return d;
}

CascadeComplex differential_case_I(const CriticalComponent& source, const CriticalComponent& target,
                                   const Correspondence& corr) {
    source.validate();
    target.validate();
    if (!(source.action > target.action))
        throw Error(ErrorKind::InvalidModel, "source action must exceed target action");
    const auto cs = source.critical_points();
    const auto ct = target.critical_points();
    CascadeComplex c;
    for (const auto& p : cs) c.generators.push_back({p.name, source.name, p.index});
    for (const auto& p : ct) c.generators.push_back({p.name, target.name, p.index});
    const std::size_t ns = cs.size(), nt = ct.size();
    c.differential = BitMatrix(ns + nt, ns + nt);
    const auto ds = morse_differential(source);
    const auto dt = morse_differential(target);
    for (std::size_t r = 0; r < ns; ++r)
        for (std::size_t col = 0; col < ns; ++col)
            if (ds.get(r, col)) c.differential.set(r, col);
    for (std::size_t r = 0; r < nt; ++r)
        for (std::size_t col = 0; col < nt; ++col)
            if (dt.get(r, col)) c.differential.set(ns + r, ns + col);
    if (corr.empty_moduli) return c;
    for (std::size_t x = 0; x < ns; ++x) {
        const auto ux = corr.ev_minus.preimage(source.unstable(cs[x].tuple), corr.dimension);
        for (std::size_t y = 0; y < nt; ++y) {
            const auto sy = corr.ev_plus.preimage(target.stable(ct[y].tuple), corr.dimension);
            const auto m = intersect(ux, sy);
            if (m.dimension() == 0 && m.component_count() % 2 == 1) c.differential.set(ns + y, x);
        }
    }
    return c;
}

F2Presentation homology(const CascadeComplex& c) {
    if (!c.square_zero()) throw Error(ErrorKind::DifferentialNotSquareZero, "boundary of a boundary is nonzero");
    const std::size_t n = c.size();
    RowSpace span(n);
    for (std::size_t j = 0; j < n; ++j) span.insert(c.boundary(j));
    std::vector<GradedClass> reps;
    for (std::size_t j = 0; j < n; ++j)
        if (c.boundary(j).none() && span.insert(BitVector::unit(n, j)))
            reps.push_back({c.generators[j].name, c.generators[j].degree, c.generators[j].component});
    const BitMatrix dt = c.differential;
    for (const auto& z : kernel_basis(dt)) {
        if (!span.insert(z)) continue;
        std::optional<int> deg;
        bool homogeneous = true;
        for (std::size_t i : z.support()) {
            if (deg && *deg != c.generators[i].degree) homogeneous = false;
            deg = c.generators[i].degree;
        }
        reps.push_back({c.format(z), homogeneous ? deg : std::nullopt, "cycle"});
    }
    return reduce(make_presentation(std::move(reps)));
}

std::vector<int> graded_betti(const CascadeComplex& c, int max_degree) {
    const std::size_t n = c.size();
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t r : c.boundary(col).support())
            if (c.generators[r].degree != c.generators[col].degree - 1)
                throw Error(ErrorKind::InvalidModel, "differential does not lower degree by one");
    auto rank_from = [&](int d) {
        RowSpace s(n);
        for (std::size_t col = 0; col < n; ++col)
            if (c.generators[col].degree == d) s.insert(c.boundary(col));
        return static_cast<int>(s.dim());
    };
    std::vector<int> b(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        int nd = 0;
        for (const auto& g : c.generators) nd += g.degree == d;
        b[d] = nd - rank_from(d) - rank_from(d + 1);
    }
    return b;
}

nlohmann::json to_json(const CascadeComplex& c) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : c.generators) gens.push_back({{"name", g.name}, {"component", g.component}, {"degree", g.degree}});
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t col = 0; col < c.size(); ++col)
        for (std::size_t r : c.boundary(col).support()) pairs.push_back({col, r});
    return {{"generators", gens}, {"differential", pairs}};
}

// ---- cascades -------------------------------------------------------------

namespace {

std::vector<std::vector<CellPiece>> cells_of(const ProductSet& s) {
    std::vector<std::vector<CellPiece>> out;
    if (s.is_empty()) return out;
    std::vector<std::vector<CellPiece>> per;
    for (const auto& c : s.coords) {
        std::vector<CellPiece> ps;
        switch (c.kind) {
            case CircleSet::Kind::Full: ps.push_back({false, 0, 0}); break;
            case CircleSet::Kind::Points:
                for (const auto& p : c.points) ps.push_back({true, p, 0});
                break;
            case CircleSet::Kind::Arcs:
                for (const auto& a : c.arcs) ps.push_back({false, a.start, a.length});
                break;
        }
        per.push_back(ps);
    }
    out.push_back({});
    for (const auto& ps : per) {
        std::vector<std::vector<CellPiece>> next;
        for (const auto& prefix : out)
            for (const auto& p : ps) {
                auto q = prefix;
                q.push_back(p);
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

int cell_dimension(const std::vector<CellPiece>& c) {
    int d = 0;
    for (const auto& p : c) d += p.point ? 0 : 1;
    return d;
}

void chains(const CascadeData& data, std::size_t from, std::size_t to, std::size_t k, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        if (from == to) out.push_back(cur);
        return;
    }
    for (std::size_t r = 0; r < data.correspondences.size(); ++r) {
        const auto& c = data.correspondences[r];
        if (c.source != from) continue;
        cur.push_back(r);
        chains(data, c.target, to, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

CriticalRef find_critical(const CascadeData& data, const std::string& name) {
    for (std::size_t i = 0; i < data.components.size(); ++i)
        for (const auto& p : data.components[i].critical_points())
            if (p.name == name) return {i, p.tuple};
    throw Error(ErrorKind::UnknownGenerator, "no critical point named '" + name + "'");
}

std::vector<CascadeConfiguration> cascade_moduli(const CascadeData& data, const CriticalRef& x, const CriticalRef& y,
                                                 std::size_t k) {
    data.validate();
    const auto& cx = data.components.at(x.component);
    const auto& cy = data.components.at(y.component);
    std::vector<CascadeConfiguration> out;
    if (k == 0) {
        if (x.component != y.component) return out;
        const auto s = intersect(cx.unstable(x.tuple), cy.stable(y.tuple));
        for (auto& cell : cells_of(s)) {
            CascadeConfiguration cfg;
            cfg.path = {cx.name};
            cfg.dimension = cell_dimension(cell);
            cfg.cells.push_back(std::move(cell));
            out.push_back(std::move(cfg));
        }
        return out;
    }
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> cur;
    chains(data, x.component, y.component, k, cur, found);
    for (const auto& chain : found) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const auto& mid = data.components[data.correspondences[chain[i]].target];
            if (mid.dimension() != 0)
                throw Error(ErrorKind::UnsupportedModel,
                            "cascades through the positive-dimensional component " + mid.name + " are not modeled");
        }
        std::vector<std::vector<std::vector<CellPiece>>> factor_cells;
        std::vector<std::string> path{cx.name};
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const auto& r = data.correspondences[chain[i]];
            ProductSet s;
            s.coords.assign(r.dimension, CircleSet::full());
            s.empty_factor = r.empty_moduli;
            if (i == 0) s = intersect(s, r.ev_minus.preimage(cx.unstable(x.tuple), r.dimension));
            if (i + 1 == chain.size()) s = intersect(s, r.ev_plus.preimage(cy.stable(y.tuple), r.dimension));
            factor_cells.push_back(cells_of(s));
            path.push_back(r.name);
            path.push_back(data.components[r.target].name);
        }
        std::vector<std::vector<std::vector<CellPiece>>> combos{{}};
        for (const auto& fc : factor_cells) {
            std::vector<std::vector<std::vector<CellPiece>>> next;
            for (const auto& prefix : combos)
                for (const auto& c : fc) {
                    auto q = prefix;
                    q.push_back(c);
                    next.push_back(q);
                }
            combos = std::move(next);
        }
        for (auto& cells : combos) {
            CascadeConfiguration cfg;
            cfg.path = path;
            for (const auto& c : cells) cfg.dimension += cell_dimension(c);
            cfg.cells = std::move(cells);
            out.push_back(std::move(cfg));
        }
    }
    return out;
}

nlohmann::json to_json(const CascadeConfiguration& c) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : c.cells) {
        nlohmann::json pieces = nlohmann::json::array();
        for (const auto& p : cell) {
            if (p.point) pieces.push_back({{"point", rat(p.start)}});
            else if (p.length == Rational(0)) pieces.push_back({{"circle", true}});
            else pieces.push_back({{"arc", {rat(p.start), rat(p.start + p.length)}}});
        }
        cells.push_back(pieces);
    }
    return {{"path", c.path}, {"dimension", c.dimension}, {"cells", cells}};
}

// ---- the torus/circle pairs ----------------------------------------------

namespace {

CriticalComponent torus(std::string name, Rational offset, Rational action, std::array<std::string, 4> names) {
    CriticalComponent c;
    c.name = std::move(name);
    c.factors = {CircleMorse::standard(offset), CircleMorse::standard(offset)};
    c.action = action;
    // tuple entries: 0 the minimum, 1 the maximum of each factor
    c.labels[{1, 1}] = names[0];
    c.labels[{0, 1}] = names[1];
    c.labels[{1, 0}] = names[2];
    c.labels[{0, 0}] = names[3];
    return c;
}

CriticalComponent quarter_circle(std::string name, Rational action, std::string min_name, std::string max_name) {
    CriticalComponent c;
    c.name = std::move(name);
    c.factors = {CircleMorse::from_points({{Rational(1, 4), 0}, {Rational(3, 4), 1}})};
    c.action = action;
    c.labels[{0}] = std::move(min_name);
    c.labels[{1}] = std::move(max_name);
    return c;
}

CoordinateMap coord(std::size_t s) { return {false, s, 0}; }

}  // namespace

CascadeData upper_pair_data() {
    CascadeData d;
    d.components.push_back(torus("Sigma42", 0, 1, {"x2", "x1", "x1'", "x0"}));
    d.components.push_back(quarter_circle("K+", 0, "a0", "a1"));
    Correspondence m{"M42", 0, 1, 2, {{coord(0), coord(1)}}, {{coord(0)}}, false};
    d.correspondences.push_back(m);
    return d;
}

CascadeData lower_pair_data() {
    CascadeData d;
    d.components.push_back(torus("Sigma20", Rational(1, 8), 1, {"y2", "y1", "y1'", "y0"}));
    d.components.push_back(quarter_circle("K-", 0, "b0", "b1"));
    Correspondence m{"M20", 0, 1, 2, {{coord(0), coord(1)}}, {{coord(1)}}, false};
    d.correspondences.push_back(m);
    return d;
}

}  // namespace fukflow
