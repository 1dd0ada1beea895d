#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fukflow {

// A slot of a crossing. Slots are numbered counter-clockwise starting from
// the incoming under-strand: 0 under in, 1 over, 2 under out, 3 over.
struct Position {
    int crossing = -1;
    int slot = -1;
    bool operator==(const Position&) const = default;
    auto operator<=>(const Position&) const = default;
};

struct ArcInfo {
    int component = -1;
    // tail: where the arc leaves a crossing, head: where it enters the next one.
    // Both are unset for crossingless circles.
    Position tail;
    Position head;
};

struct LinkDiagram {
    std::vector<std::array<int, 4>> crossings;
    // crossingless components, one arc label each
    std::vector<int> loops;

    // derived by build_diagram
    std::vector<std::vector<int>> components;  // arcs in orientation order
    std::vector<int> signs;
    std::vector<int> under_component;
    std::vector<int> over_component;
    std::map<int, ArcInfo> arcs;

    std::size_t component_count() const { return components.size(); }
    bool operator==(const LinkDiagram& o) const {
        return crossings == o.crossings && loops == o.loops;
    }
};

LinkDiagram build_diagram(std::vector<std::array<int, 4>> crossings, std::vector<int> loops,
                          bool allow_empty = false);

// Accepts X(a,b,c,d) tokens (square brackets also accepted) and Loop(a) for a
// crossingless circle, separated by commas.
LinkDiagram parse_pd(std::string_view text, bool allow_empty = false);
std::string to_pd_string(const LinkDiagram& d);

int linking_number(const LinkDiagram& d, int i, int j);
int self_crossing_count(const LinkDiagram& d, int j);
int writhe(const LinkDiagram& d, int j);

// Same diagram with component j traversed backwards. Requires j to pass under
// at least once, since PD codes only record orientation through under-strands.
LinkDiagram reverse_component(const LinkDiagram& d, int j);

struct FramedLink {
    LinkDiagram diagram;
    std::vector<int> framings;
    bool operator==(const FramedLink&) const = default;
};

FramedLink make_framed_link(LinkDiagram d, std::vector<int> framings);

struct LinkingMatrix {
    std::vector<std::vector<int>> entries;
    std::size_t size() const { return entries.size(); }
    int operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
    bool operator==(const LinkingMatrix&) const = default;
};

LinkingMatrix linking_matrix(const FramedLink& fl);

nlohmann::json to_json(const LinkDiagram& d);
nlohmann::json to_json(const FramedLink& fl);
nlohmann::json to_json(const LinkingMatrix& m);
LinkDiagram diagram_from_json(const nlohmann::json& j);
FramedLink framed_link_from_json(const nlohmann::json& j);

// Named links shipped with the repository.
struct LinkFixture {
    std::string name;
    std::string pd;
    std::vector<int> framings;
};

std::string default_catalog_path();
std::vector<LinkFixture> load_catalog(const std::string& path);
std::vector<LinkFixture> load_catalog();
const LinkFixture* find_fixture(const std::vector<LinkFixture>& catalog, std::string_view name);
FramedLink fixture_link(std::string_view name);
FramedLink fixture_link(std::string_view name, std::vector<int> framings);

std::vector<int> parse_framings(std::string_view text);

}  // namespace fukflow
