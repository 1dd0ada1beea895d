#include "fukflow/link_data.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "fukflow/errors.hpp"

#ifndef FUKFLOW_DATA_DIR
#define FUKFLOW_DATA_DIR "data"
#endif

namespace fukflow {

namespace {

using Quad = std::array<int, 4>;

struct Dart {
    int arc;
    Position tail;
    Position head;
};

Position other_position(const std::vector<Position>& ps, const Position& p) {
    return ps[0] == p ? ps[1] : ps[0];
}

// Follows the strand starting with `arc` travelling towards `head`.
// Returns an empty vector when the walk contradicts an under-strand direction.
std::vector<Dart> walk(const std::vector<Quad>& cr, const std::map<int, std::vector<Position>>& pos, int arc,
                       Position head) {
    std::vector<Dart> out;
    Position tail = other_position(pos.at(arc), head);
    const int start_arc = arc;
    const Position start_head = head;
    while (true) {
        if (head.slot == 2 || tail.slot == 0) return {};
        out.push_back({arc, tail, head});
        Position next_tail{head.crossing, (head.slot + 2) % 4};
        arc = cr[next_tail.crossing][next_tail.slot];
        tail = next_tail;
        head = other_position(pos.at(arc), tail);
        if (arc == start_arc && head == start_head) break;
        if (out.size() > 4 * cr.size() + 4) return {};
    }
    return out;
}

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

[[noreturn]] void malformed(std::string_view s, std::size_t i, const std::string& msg) {
    throw Error(ErrorKind::MalformedToken, msg + " at offset " + std::to_string(i) + " in \"" + std::string(s) + "\"");
}

}  // namespace

LinkDiagram build_diagram(std::vector<Quad> crossings, std::vector<int> loops, bool allow_empty) {
    if (crossings.empty() && loops.empty() && !allow_empty)
        throw Error(ErrorKind::EmptyDiagram, "diagram has no crossings and no components");

    std::map<int, std::vector<Position>> pos;
    for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
        for (int s = 0; s < 4; ++s) {
            if (crossings[c][s] <= 0)
                throw Error(ErrorKind::MalformedToken, "arc labels must be positive integers");
            pos[crossings[c][s]].push_back({c, s});
        }
    for (const auto& [label, ps] : pos)
        if (ps.size() != 2)
            throw Error(ErrorKind::ArcLabelNotPairedTwice,
                        "arc " + std::to_string(label) + " appears " + std::to_string(ps.size()) + " times");
    std::set<int> loop_set;
    for (int l : loops) {
        if (l <= 0) throw Error(ErrorKind::MalformedToken, "arc labels must be positive integers");
        if (pos.count(l) || !loop_set.insert(l).second)
            throw Error(ErrorKind::ArcLabelNotPairedTwice, "loop arc " + std::to_string(l) + " is reused");
    }

    LinkDiagram d;
    d.crossings = std::move(crossings);
    d.loops = std::move(loops);

    std::vector<std::vector<Dart>> comps;
    std::set<int> seen;
    for (const auto& [label, ps] : pos) {
        if (seen.count(label)) continue;
        auto fwd = walk(d.crossings, pos, label, ps[1]);
        auto bwd = walk(d.crossings, pos, label, ps[0]);
        std::vector<Dart> chosen;
        if (fwd.empty() && bwd.empty())
            throw Error(ErrorKind::InconsistentOrientation,
                        "no consistent orientation for the strand through arc " + std::to_string(label));
        if (fwd.empty()) chosen = std::move(bwd);
        else if (bwd.empty()) chosen = std::move(fwd);
        else {
            // strand never passes under; pick the direction whose second arc has the smaller label
            const int a = fwd.size() > 1 ? fwd[1].arc : 0;
            const int b = bwd.size() > 1 ? bwd[1].arc : 0;
            chosen = (b < a) ? std::move(bwd) : std::move(fwd);
        }
        for (const auto& dt : chosen) seen.insert(dt.arc);
        comps.push_back(std::move(chosen));
    }

    struct Pending {
        int min_label;
        std::vector<Dart> darts;
        bool loop;
    };
    std::vector<Pending> all;
    for (auto& c : comps) {
        int m = c.front().arc;
        for (const auto& dt : c) m = std::min(m, dt.arc);
        all.push_back({m, std::move(c), false});
    }
    for (int l : d.loops) all.push_back({l, {Dart{l, {}, {}}}, true});
    std::sort(all.begin(), all.end(), [](const Pending& a, const Pending& b) { return a.min_label < b.min_label; });

    for (int ci = 0; ci < static_cast<int>(all.size()); ++ci) {
        auto& darts = all[ci].darts;
        auto it = std::find_if(darts.begin(), darts.end(), [&](const Dart& x) { return x.arc == all[ci].min_label; });
        std::rotate(darts.begin(), it, darts.end());
        std::vector<int> arcs;
        for (const auto& dt : darts) {
            arcs.push_back(dt.arc);
            d.arcs[dt.arc] = ArcInfo{ci, dt.tail, dt.head};
        }
        d.components.push_back(std::move(arcs));
    }

    const int n = static_cast<int>(d.crossings.size());
    d.signs.assign(n, 0);
    d.under_component.assign(n, -1);
    d.over_component.assign(n, -1);
    for (int c = 0; c < n; ++c) {
        const auto& q = d.crossings[c];
        d.under_component[c] = d.arcs.at(q[0]).component;
        d.over_component[c] = d.arcs.at(q[1]).component;
        const Position in1{c, 1};
        const Position in3{c, 3};
        if (d.arcs.at(q[3]).head == in3) d.signs[c] = +1;
        else if (d.arcs.at(q[1]).head == in1) d.signs[c] = -1;
        else
            throw Error(ErrorKind::InconsistentOrientation, "over-strand at crossing " + std::to_string(c) +
                                                                " has no incoming end");
    }
    return d;
}

LinkDiagram parse_pd(std::string_view text, bool allow_empty) {
    std::vector<Quad> crossings;
    std::vector<int> loops;
    std::size_t i = 0;
    skip_ws(text, i);
    bool first = true;
    while (i < text.size()) {
        if (!first) {
            if (text[i] != ',') malformed(text, i, "expected ','");
            ++i;
            skip_ws(text, i);
        }
        first = false;
        std::size_t start = i;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
        const std::string head(text.substr(start, i - start));
        if (head != "X" && head != "Loop") malformed(text, start, "unknown token '" + head + "'");
        skip_ws(text, i);
        if (i >= text.size() || (text[i] != '(' && text[i] != '[')) malformed(text, i, "expected '('");
        const char close = text[i] == '(' ? ')' : ']';
        ++i;
        std::vector<int> labels;
        while (true) {
            skip_ws(text, i);
            std::size_t ds = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (ds == i) malformed(text, i, "expected a positive integer");
            if (i - ds > 9) malformed(text, ds, "arc label too large");
            labels.push_back(std::stoi(std::string(text.substr(ds, i - ds))));
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == close) {
                ++i;
                break;
            }
            malformed(text, i, "unterminated token");
        }
        if (head == "X") {
            if (labels.size() != 4) malformed(text, start, "X needs exactly four labels");
            crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
        } else {
            if (labels.size() != 1) malformed(text, start, "Loop needs exactly one label");
            loops.push_back(labels[0]);
        }
        skip_ws(text, i);
    }
    return build_diagram(std::move(crossings), std::move(loops), allow_empty);
}

std::string to_pd_string(const LinkDiagram& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& q : d.crossings) {
        os << (first ? "" : ",") << "X(" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ')';
        first = false;
    }
    for (int l : d.loops) {
        os << (first ? "" : ",") << "Loop(" << l << ')';
        first = false;
    }
    return os.str();
}

static void check_component(const LinkDiagram& d, int j) {
    if (j < 0 || j >= static_cast<int>(d.component_count()))
        throw Error(ErrorKind::InvalidComponent, "component index " + std::to_string(j) + " out of range");
}

int linking_number(const LinkDiagram& d, int i, int j) {
    check_component(d, i);
    check_component(d, j);
    if (i == j) throw Error(ErrorKind::SameComponent, "linking number needs two distinct components");
    int s = 0;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const int u = d.under_component[c], o = d.over_component[c];
        if ((u == i && o == j) || (u == j && o == i)) s += d.signs[c];
    }
    if (s % 2 != 0)
        throw Error(ErrorKind::InconsistentOrientation, "odd inter-component crossing sum; diagram is not closed");
    return s / 2;
}

int self_crossing_count(const LinkDiagram& d, int j) {
    check_component(d, j);
    int n = 0;
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        if (d.under_component[c] == j && d.over_component[c] == j) ++n;
    return n;
}

int writhe(const LinkDiagram& d, int j) {
    check_component(d, j);
    int w = 0;
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        if (d.under_component[c] == j && d.over_component[c] == j) w += d.signs[c];
    return w;
}

LinkDiagram reverse_component(const LinkDiagram& d, int j) {
    check_component(d, j);
    auto cr = d.crossings;
    bool any_under = false;
    for (std::size_t c = 0; c < cr.size(); ++c)
        if (d.under_component[c] == j) {
            any_under = true;
            const auto q = cr[c];
            cr[c] = {q[2], q[3], q[0], q[1]};
        }
    const bool is_loop = std::find(d.loops.begin(), d.loops.end(), d.components[j][0]) != d.loops.end();
    if (!any_under && !is_loop)
        throw Error(ErrorKind::InvalidComponent,
                    "component " + std::to_string(j) + " never passes under; its orientation is not encoded");
    return build_diagram(std::move(cr), d.loops, true);
}

FramedLink make_framed_link(LinkDiagram d, std::vector<int> framings) {
    if (d.component_count() == 0) throw Error(ErrorKind::EmptyDiagram, "a framed link needs at least one component");
    if (framings.size() != d.component_count())
        throw Error(ErrorKind::InvalidFraming, "expected " + std::to_string(d.component_count()) + " framings, got " +
                                                   std::to_string(framings.size()));
    return FramedLink{std::move(d), std::move(framings)};
}

LinkingMatrix linking_matrix(const FramedLink& fl) {
    const int k = static_cast<int>(fl.diagram.component_count());
    LinkingMatrix m;
    m.entries.assign(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        m.entries[i][i] = fl.framings[i];
        for (int j = i + 1; j < k; ++j) m.entries[i][j] = m.entries[j][i] = linking_number(fl.diagram, i, j);
    }
    return m;
}

nlohmann::json to_json(const LinkDiagram& d) {
    nlohmann::json j;
    j["crossings"] = d.crossings;
    j["loops"] = d.loops;
    j["components"] = d.components;
    j["signs"] = d.signs;
    return j;
}

nlohmann::json to_json(const FramedLink& fl) {
    return {{"diagram", to_json(fl.diagram)}, {"framings", fl.framings}};
}

nlohmann::json to_json(const LinkingMatrix& m) { return m.entries; }

LinkDiagram diagram_from_json(const nlohmann::json& j) {
    try {
        auto cr = j.at("crossings").get<std::vector<Quad>>();
        auto loops = j.contains("loops") ? j.at("loops").get<std::vector<int>>() : std::vector<int>{};
        LinkDiagram d = build_diagram(std::move(cr), std::move(loops), true);
        if (j.contains("components") && j.at("components").get<std::vector<std::vector<int>>>() != d.components)
            throw Error(ErrorKind::InconsistentOrientation, "stored components disagree with the crossings");
        if (j.contains("signs") && j.at("signs").get<std::vector<int>>() != d.signs)
            throw Error(ErrorKind::InconsistentOrientation, "stored signs disagree with the crossings");
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedToken, e.what());
    }
}

FramedLink framed_link_from_json(const nlohmann::json& j) {
    try {
        return make_framed_link(diagram_from_json(j.at("diagram")), j.at("framings").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedToken, e.what());
    }
}

std::vector<int> parse_framings(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string tok(text.substr(i, j - i));
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (tok.empty() || *end != '\0') throw Error(ErrorKind::InvalidFraming, "bad framing '" + tok + "'");
        out.push_back(static_cast<int>(v));
        i = j + 1;
    }
    return out;
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("FUKAYA_FLOW_FIXTURES"); env && *env) return env;
    return std::string(FUKFLOW_DATA_DIR) + "/links.catalog";
}

std::vector<LinkFixture> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IOFailure, "cannot open fixture catalog " + path);
    std::vector<LinkFixture> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '|')) {
            auto a = f.find_first_not_of(" \t\r");
            auto b = f.find_last_not_of(" \t\r");
            fields.push_back(a == std::string::npos ? "" : f.substr(a, b - a + 1));
        }
        if (fields.size() != 3)
            throw Error(ErrorKind::MalformedToken, path + ":" + std::to_string(lineno) + ": expected name | pd | framings");
        out.push_back({fields[0], fields[1], parse_framings(fields[2])});
    }
    return out;
}

std::vector<LinkFixture> load_catalog() { return load_catalog(default_catalog_path()); }

const LinkFixture* find_fixture(const std::vector<LinkFixture>& catalog, std::string_view name) {
    for (const auto& f : catalog)
        if (f.name == name) return &f;
    return nullptr;
}

FramedLink fixture_link(std::string_view name) {
    const auto cat = load_catalog();
    const auto* f = find_fixture(cat, name);
    if (!f) throw Error(ErrorKind::UnknownFixture, "no fixture named '" + std::string(name) + "'");
    return make_framed_link(parse_pd(f->pd), f->framings);
}

FramedLink fixture_link(std::string_view name, std::vector<int> framings) {
    auto fl = fixture_link(name);
    return make_framed_link(std::move(fl.diagram), std::move(framings));
}

}  // namespace fukflow
