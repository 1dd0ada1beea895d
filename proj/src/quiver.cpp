#include "fukflow/quiver.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "fukflow/errors.hpp"

namespace fukflow {

std::size_t QuiverPresentation::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    throw Error(ErrorKind::UnknownGenerator, "no arrow named " + name);
}

void QuiverPresentation::validate() const {
    std::set<std::string> names;
    for (const auto& a : arrows) {
        if (!names.insert(a.name).second) throw Error(ErrorKind::InvalidModel, "arrow name " + a.name + " repeated");
        if (a.source >= vertices.size() || a.target >= vertices.size())
            throw Error(ErrorKind::InvalidModel, "arrow " + a.name + " has an endpoint out of range");
    }
    for (const auto& r : relations) {
        if (r.paths.empty()) continue;
        std::size_t s = SIZE_MAX, t = SIZE_MAX;
        for (const auto& p : r.paths) {
            if (p.empty()) throw Error(ErrorKind::InvalidModel, "relation " + r.name + " has an empty path");
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i] >= arrows.size()) throw Error(ErrorKind::InvalidModel, "relation " + r.name + " uses an unknown arrow");
                if (i && arrows[p[i - 1]].target != arrows[p[i]].source)
                    throw Error(ErrorKind::InvalidModel, "relation " + r.name + " has a non-composable path");
            }
            const std::size_t ps = arrows[p.front()].source, pt = arrows[p.back()].target;
            if (s == SIZE_MAX) {
                s = ps;
                t = pt;
            } else if (ps != s || pt != t) {
                throw Error(ErrorKind::InvalidModel, "paths of relation " + r.name + " have different endpoints");
            }
        }
    }
}

QuiverPresentation from_category(const DirectedCategoryPresentation& cat) {
    QuiverPresentation q;
    q.vertices = cat.objects;
    const std::size_t k = cat.middle_count();
    std::vector<std::vector<std::size_t>> up_arrow(k), lo_arrow(k);
    for (std::size_t j = 0; j < k; ++j) {
        up_arrow[j].assign(cat.upper[j].size(), SIZE_MAX);
        for (std::size_t g : cat.upper[j].basis) {
            up_arrow[j][g] = q.arrows.size();
            q.arrows.push_back({cat.upper[j].generators[g].name, cat.top(), j + 1});
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        lo_arrow[j].assign(cat.lower[j].size(), SIZE_MAX);
        for (std::size_t g : cat.lower[j].basis) {
            lo_arrow[j][g] = q.arrows.size();
            q.arrows.push_back({cat.lower[j].generators[g].name, j + 1, cat.bottom()});
        }
    }
    std::vector<std::size_t> long_arrow(cat.long_hom.size(), SIZE_MAX);
    for (std::size_t g : cat.long_hom.basis) {
        long_arrow[g] = q.arrows.size();
        q.arrows.push_back({cat.long_hom.generators[g].name, cat.top(), cat.bottom()});
    }

    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t a : cat.upper[j].basis)
            for (std::size_t b : cat.lower[j].basis) {
                QuiverRelation r;
                const auto& A = q.arrows[up_arrow[j][a]];
                const auto& B = q.arrows[lo_arrow[j][b]];
                r.name = B.name + "*" + A.name;
                r.paths.push_back({up_arrow[j][a], lo_arrow[j][b]});
                for (std::size_t c : cat.compose_generators(j, a, b).support()) {
                    r.name += " - " + q.arrows[long_arrow[c]].name;
                    r.paths.push_back({long_arrow[c]});
                }
                q.relations.push_back(std::move(r));
            }
    return q;
}

QuiverPresentation cp2_quiver() {
    QuiverPresentation q;
    q.vertices = {"x4", "x2", "x0"};
    q.arrows = {{"a_0", 0, 1}, {"a_1", 0, 1}, {"b_0", 1, 2}, {"b_1", 1, 2}, {"c_0", 0, 2}, {"c_1", 0, 2}};
    enum { a0, a1, b0, b1, c0, c1 };
    q.relations = {
        {"b_1a_1", {{a1, b1}}},
        {"b_0a_0 - c_0", {{a0, b0}, {c0}}},
        {"b_0a_1 - b_1a_0 - c_1", {{a1, b0}, {a0, b1}, {c1}}},
    };
    return q;
}

QuiverRepresentation zero_representation(const QuiverPresentation& q, const std::vector<std::size_t>& dims) {
    if (dims.size() != q.vertices.size()) throw Error(ErrorKind::ShapeMismatch, "one dimension per vertex expected");
    QuiverRepresentation r;
    r.dims = dims;
    for (const auto& a : q.arrows) r.maps.emplace_back(dims[a.target], dims[a.source]);
    return r;
}

QuiverRepresentation standard_representation(const QuiverPresentation& q) {
    auto r = zero_representation(q, std::vector<std::size_t>(q.vertices.size(), 1));
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& n = q.arrows[i].name;
        if (n.size() >= 2 && n.compare(n.size() - 2, 2, "_0") == 0) r.maps[i].set(0, 0);
    }
    return r;
}

QuiverRepresentation random_representation(const QuiverPresentation& q, const std::vector<std::size_t>& dims,
                                           std::mt19937_64& rng) {
    auto r = zero_representation(q, dims);
    for (auto& m : r.maps)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, rng() & 1u);
    return r;
}

QuiverRepresentation regular_representation(const DirectedCategoryPresentation& cat) {
    const auto q = from_category(cat);
    const std::size_t k = cat.middle_count();
    std::vector<std::size_t> dims(cat.objects.size());
    dims[cat.top()] = 1;
    for (std::size_t j = 0; j < k; ++j) dims[j + 1] = cat.upper[j].rank();
    dims[cat.bottom()] = cat.long_hom.rank();
    auto r = zero_representation(q, dims);

    auto position = [](const F2Presentation& p, std::size_t g) {
        for (std::size_t i = 0; i < p.basis.size(); ++i)
            if (p.basis[i] == g) return i;
        return SIZE_MAX;
    };
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& a = q.arrows[i];
        if (a.source == cat.top() && a.target == cat.bottom()) {
            r.maps[i].set(position(cat.long_hom, cat.long_hom.index_of(a.name)), 0);
        } else if (a.source == cat.top()) {
            const auto& up = cat.upper[a.target - 1];
            r.maps[i].set(position(up, up.index_of(a.name)), 0);
        } else {
            const std::size_t j = a.source - 1;
            const auto& up = cat.upper[j];
            const std::size_t b = cat.lower[j].index_of(a.name);
            for (std::size_t c = 0; c < up.basis.size(); ++c)
                for (std::size_t g : cat.compose_generators(j, up.basis[c], b).support())
                    r.maps[i].set(position(cat.long_hom, g), c);
        }
    }
    return r;
}

void check_shape(const QuiverPresentation& q, const QuiverRepresentation& r) {
    if (r.dims.size() != q.vertices.size()) throw Error(ErrorKind::ShapeMismatch, "dimension vector has the wrong length");
    if (r.maps.size() != q.arrows.size()) throw Error(ErrorKind::ShapeMismatch, "one matrix per arrow expected");
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& a = q.arrows[i];
        if (r.maps[i].rows() != r.dims[a.target] || r.maps[i].cols() != r.dims[a.source])
            throw Error(ErrorKind::ShapeMismatch, "matrix of " + a.name + " should be " + std::to_string(r.dims[a.target]) +
                                                      "x" + std::to_string(r.dims[a.source]));
    }
}

BitMatrix evaluate(const QuiverPresentation& q, const QuiverRepresentation& r, const Path& p) {
    BitMatrix m = BitMatrix::identity(r.dims[q.arrows[p.front()].source]);
    for (std::size_t a : p) m = r.maps[a] * m;
    return m;
}

RelationCheck check_relations(const QuiverPresentation& q, const QuiverRepresentation& r) {
    check_shape(q, r);
    RelationCheck out;
    for (const auto& rel : q.relations) {
        if (rel.paths.empty()) continue;
        const auto& first = rel.paths.front();
        BitMatrix sum(r.dims[q.arrows[first.back()].target], r.dims[q.arrows[first.front()].source]);
        for (const auto& p : rel.paths) sum += evaluate(q, r, p);
        if (!sum.is_zero()) {
            out.ok = false;
            out.violations.push_back(rel.name);
        }
    }
    return out;
}

std::vector<BitMatrix> general_linear_group(std::size_t n) {
    if (n > kMaxIsoDimension) throw Error(ErrorKind::DimensionTooLarge, "GL(" + std::to_string(n) + ") is not enumerated");
    std::vector<BitMatrix> out;
    const std::size_t bits = n * n;
    for (std::size_t code = 0; code < (std::size_t(1) << bits); ++code) {
        BitMatrix m(n, n);
        for (std::size_t b = 0; b < bits; ++b)
            if ((code >> b) & 1u) m.set(b / n, b % n);
        if (m.rank() == n) out.push_back(m);
    }
    return out;
}

BitMatrix inverse(const BitMatrix& g) {
    const std::size_t n = g.rows();
    if (g.cols() != n) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
    BitMatrix a = g, inv = BitMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !a.get(p, c)) ++p;
        if (p == n) throw Error(ErrorKind::ShapeMismatch, "matrix is singular");
        std::swap(a.row(p), a.row(c));
        std::swap(inv.row(p), inv.row(c));
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && a.get(r, c)) {
                a.row(r) ^= a.row(c);
                inv.row(r) ^= inv.row(c);
            }
    }
    return inv;
}

namespace {

// false when shapes or dimension vectors differ
bool comparable(const QuiverPresentation& q, const QuiverRepresentation& r1, const QuiverRepresentation& r2) {
    check_shape(q, r1);
    check_shape(q, r2);
    for (std::size_t d : r1.dims)
        if (d > kMaxIsoDimension) throw Error(ErrorKind::DimensionTooLarge, "vertex dimension above 3");
    for (std::size_t d : r2.dims)
        if (d > kMaxIsoDimension) throw Error(ErrorKind::DimensionTooLarge, "vertex dimension above 3");
    return r1.dims == r2.dims;
}

}  // namespace

bool isomorphic(const QuiverPresentation& q, const QuiverRepresentation& r1, const QuiverRepresentation& r2) {
    if (!comparable(q, r1, r2)) return false;
    const std::size_t nv = q.vertices.size();
    std::vector<std::vector<BitMatrix>> groups;
    for (std::size_t d : r1.dims) groups.push_back(general_linear_group(d));

    // arrows to test once vertex v is assigned
    std::vector<std::vector<std::size_t>> ready(nv);
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        ready[std::max(q.arrows[i].source, q.arrows[i].target)].push_back(i);

    std::vector<const BitMatrix*> g(nv, nullptr);
    std::function<bool(std::size_t)> search = [&](std::size_t v) {
        if (v == nv) return true;
        for (const auto& cand : groups[v]) {
            g[v] = &cand;
            bool fits = true;
            for (std::size_t i : ready[v]) {
                const auto& a = q.arrows[i];
                if (*g[a.target] * r1.maps[i] != r2.maps[i] * *g[a.source]) {
                    fits = false;
                    break;
                }
            }
            if (fits && search(v + 1)) return true;
        }
        return false;
    };
    return search(0);
}

bool isomorphic_by_orbit(const QuiverPresentation& q, const QuiverRepresentation& r1, const QuiverRepresentation& r2) {
    if (!comparable(q, r1, r2)) return false;
    const std::size_t nv = q.vertices.size();
    std::vector<std::vector<BitMatrix>> groups, inverses;
    for (std::size_t d : r1.dims) {
        groups.push_back(general_linear_group(d));
        inverses.emplace_back();
        for (const auto& m : groups.back()) inverses.back().push_back(inverse(m));
    }
    std::vector<std::size_t> choice(nv, 0);
    while (true) {
        QuiverRepresentation image = r1;
        for (std::size_t i = 0; i < q.arrows.size(); ++i) {
            const auto& a = q.arrows[i];
            image.maps[i] = groups[a.target][choice[a.target]] * r1.maps[i] * inverses[a.source][choice[a.source]];
        }
        if (image == r2) return true;
        std::size_t v = 0;
        while (v < nv && ++choice[v] == groups[v].size()) choice[v++] = 0;
        if (v == nv) return false;
    }
}

nlohmann::json to_json(const QuiverPresentation& q) {
    nlohmann::json j;
    j["vertices"] = q.vertices;
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"name", a.name}, {"source", q.vertices[a.source]}, {"target", q.vertices[a.target]}});
    j["arrows"] = arrows;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : q.relations) {
        nlohmann::json paths = nlohmann::json::array();
        for (const auto& p : r.paths) {
            nlohmann::json names = nlohmann::json::array();
            for (std::size_t a : p) names.push_back(q.arrows[a].name);
            paths.push_back(names);
        }
        rels.push_back({{"name", r.name}, {"paths", paths}});
    }
    j["relations"] = rels;
    return j;
}

nlohmann::json to_json(const QuiverPresentation& q, const QuiverRepresentation& r) {
    check_shape(q, r);
    nlohmann::json dims = nlohmann::json::object(), maps = nlohmann::json::object();
    for (std::size_t v = 0; v < q.vertices.size(); ++v) dims[q.vertices[v]] = r.dims[v];
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t a = 0; a < r.maps[i].rows(); ++a) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t b = 0; b < r.maps[i].cols(); ++b) row.push_back(r.maps[i].get(a, b) ? 1 : 0);
            rows.push_back(row);
        }
        maps[q.arrows[i].name] = rows;
    }
    return {{"dims", dims}, {"maps", maps}};
}

QuiverRepresentation representation_from_json(const QuiverPresentation& q, const nlohmann::json& j) {
    try {
        std::vector<std::size_t> dims;
        for (const auto& v : q.vertices) dims.push_back(j.at("dims").at(v).get<std::size_t>());
        auto r = zero_representation(q, dims);
        for (std::size_t i = 0; i < q.arrows.size(); ++i) {
            const auto& rows = j.at("maps").at(q.arrows[i].name);
            if (rows.size() != r.maps[i].rows()) throw Error(ErrorKind::ShapeMismatch, "row count of " + q.arrows[i].name);
            for (std::size_t a = 0; a < rows.size(); ++a) {
                if (rows[a].size() != r.maps[i].cols())
                    throw Error(ErrorKind::ShapeMismatch, "column count of " + q.arrows[i].name);
                for (std::size_t b = 0; b < rows[a].size(); ++b) r.maps[i].set(a, b, rows[a][b].get<int>() & 1);
            }
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ShapeMismatch, std::string("bad representation: ") + e.what());
    }
}

std::string to_dot(const QuiverPresentation& q) {
    std::ostringstream os;
    os << "digraph quiver {\n  rankdir=LR;\n";
    for (const auto& v : q.vertices) os << "  \"" << v << "\";\n";
    for (const auto& a : q.arrows)
        os << "  \"" << q.vertices[a.source] << "\" -> \"" << q.vertices[a.target] << "\" [label=\"" << a.name << "\"];\n";
    for (std::size_t i = 0; i < q.relations.size(); ++i)
        os << "  // relation " << i + 1 << ": " << q.relations[i].name << " = 0\n";
    os << "}\n";
    return os.str();
}

}  // namespace fukflow
