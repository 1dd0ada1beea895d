#include <algorithm>
#include <numeric>

#include "fukflow/errors.hpp"
#include "fukflow/morse_bott.hpp"

// Cell complex of a link complement built from a diagram. Each component j
// carries a boundary torus with cells z0_j, z1'_j (meridian), z1_j
// (longitude) and z2_j. There is a 1-handle per crossing, one 2-handle per
// bounded face of the projection, connecting 1-handles between split pieces
// and a single 3-handle.
//
// Face walks ride along the side of each tube that faces the region. The
// 1-handle at a crossing is attached to the top of the under-tube and the
// bottom of the over-tube; the dual of the meridian class is the line at
// angle 1/8 on each tube, measured from the top towards the left side. So a
// walk crosses it exactly when it moves from the left side of an under-strand
// to the top. The dual of the longitude is a meridian disc placed on the
// first arc of the component; the diagram's self-crossings twist the
// blackboard longitude, and an odd count adds one meridian per pass.

namespace fukflow {

namespace {

struct Dart {
    int arc;
    bool forward;  // along the component orientation
    Position from;
    Position to;
};

struct Corner {
    int crossing;
    int in_slot;
    int out_slot;
    bool in_forward;
    bool out_forward;
};

struct Face {
    std::vector<Dart> darts;
    std::vector<Corner> corners;
};

int find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

}  // namespace

CascadeComplex handle_complex_from_link(const FramedLink& fl) {
    const LinkDiagram& d = fl.diagram;
    const int k = static_cast<int>(d.component_count());
    const int C = static_cast<int>(d.crossings.size());

    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    for (int c = 0; c < C; ++c) parent[find(parent, d.under_component[c])] = find(parent, d.over_component[c]);
    std::vector<int> piece_of(k, -1);
    std::vector<int> piece_rep;  // smallest component of each piece
    for (int j = 0; j < k; ++j) {
        const int r = find(parent, j);
        if (piece_of[r] < 0) {
            piece_of[r] = static_cast<int>(piece_rep.size());
            piece_rep.push_back(j);
        }
        piece_of[j] = piece_of[r];
    }
    const int P = static_cast<int>(piece_rep.size());

    std::vector<int> marked(k), twist(k);
    for (int j = 0; j < k; ++j) {
        marked[j] = d.components[j].front();
        twist[j] = self_crossing_count(d, j) % 2;
    }

    // ---- faces ----
    std::vector<std::vector<Face>> faces(P);
    auto dart_from = [&](Position p) {
        const int arc = d.crossings[p.crossing][p.slot];
        const ArcInfo& ai = d.arcs.at(arc);
        if (ai.tail == p) return Dart{arc, true, ai.tail, ai.head};
        return Dart{arc, false, ai.head, ai.tail};
    };
    std::map<std::pair<int, bool>, bool> used;
    std::vector<int> arcs_sorted;
    for (const auto& [label, info] : d.arcs)
        if (info.tail.crossing >= 0) arcs_sorted.push_back(label);
    for (int arc : arcs_sorted)
        for (bool fw : {true, false}) {
            if (used[{arc, fw}]) continue;
            const ArcInfo& ai = d.arcs.at(arc);
            Dart start = fw ? Dart{arc, true, ai.tail, ai.head} : Dart{arc, false, ai.head, ai.tail};
            Face f;
            Dart cur = start;
            while (true) {
                used[{cur.arc, cur.forward}] = true;
                f.darts.push_back(cur);
                const Position out{cur.to.crossing, (cur.to.slot + 3) % 4};
                Dart next = dart_from(out);
                f.corners.push_back({cur.to.crossing, cur.to.slot, out.slot, cur.forward, next.forward});
                if (next.arc == start.arc && next.forward == start.forward) break;
                if (f.darts.size() > 4 * static_cast<std::size_t>(C) + 4)
                    throw Error(ErrorKind::NonPlanarPD, "face walk does not close");
                cur = next;
            }
            faces[piece_of[ai.component]].push_back(std::move(f));
        }

    std::vector<int> piece_crossings(P, 0);
    for (int c = 0; c < C; ++c) ++piece_crossings[piece_of[d.under_component[c]]];
    for (int p = 0; p < P; ++p) {
        if (piece_crossings[p] == 0) continue;
        const int V = piece_crossings[p], E = 2 * V, F = static_cast<int>(faces[p].size());
        if (V - E + F != 2)
            throw Error(ErrorKind::NonPlanarPD, "Euler characteristic " + std::to_string(V - E + F) +
                                                    " on a connected piece of the diagram");
    }

    // ---- generators ----
    CascadeComplex cx;
    auto js = [](int j) { return std::to_string(j + 1); };
    for (int j = 0; j < k; ++j) {
        const std::string tag = "Sigma40_" + js(j);
        cx.generators.push_back({"z2_" + js(j), tag, 2});
        cx.generators.push_back({"z1'_" + js(j), tag, 1});
        cx.generators.push_back({"z1_" + js(j), tag, 1});
        cx.generators.push_back({"z0_" + js(j), tag, 0});
    }
    auto z2 = [](int j) { return 4 * j; };
    auto z1p = [](int j) { return 4 * j + 1; };
    auto z1 = [](int j) { return 4 * j + 2; };
    auto z0 = [](int j) { return 4 * j + 3; };
    const int h0 = 4 * k;
    for (int c = 0; c < C; ++c) cx.generators.push_back({"h_" + std::to_string(c + 1), "crossing_" + std::to_string(c + 1), 1});
    const int e0 = h0 + C;
    for (int p = 0; p + 1 < P; ++p)
        cx.generators.push_back({"e_" + std::to_string(p + 1), "connect_" + std::to_string(p + 1), 1});
    const int f0 = e0 + std::max(P - 1, 0);

    struct Bounded {
        int piece;
        std::vector<int> boundary;  // generator indices, with multiplicity
    };
    std::vector<Bounded> bounded;
    for (int p = 0; p < P; ++p) {
        if (piece_crossings[p] == 0) {
            const int j = piece_rep[p];
            bounded.push_back({p, {z1(j)}});
            continue;
        }
        std::size_t outer = 0;
        for (std::size_t i = 1; i < faces[p].size(); ++i)
            if (faces[p][i].darts.size() > faces[p][outer].darts.size()) outer = i;
        for (std::size_t i = 0; i < faces[p].size(); ++i) {
            if (i == outer) continue;
            Bounded b{p, {}};
            for (const auto& dt : faces[p][i].darts) {
                const int j = d.arcs.at(dt.arc).component;
                if (dt.arc == marked[j]) {
                    b.boundary.push_back(z1(j));
                    if (twist[j]) b.boundary.push_back(z1p(j));
                }
            }
            for (const auto& cn : faces[p][i].corners) {
                b.boundary.push_back(h0 + cn.crossing);
                const int u = d.under_component[cn.crossing];
                if ((cn.in_slot % 2 == 0) && cn.in_forward) b.boundary.push_back(z1p(u));
                if ((cn.out_slot % 2 == 0) && cn.out_forward) b.boundary.push_back(z1p(u));
            }
            bounded.push_back(std::move(b));
        }
    }
    for (std::size_t i = 0; i < bounded.size(); ++i)
        cx.generators.push_back({"F_" + std::to_string(i + 1), "piece_" + std::to_string(bounded[i].piece + 1), 2});
    const int t0 = f0 + static_cast<int>(bounded.size());
    cx.generators.push_back({"T", "3-handle", 3});

    const std::size_t n = cx.generators.size();
    cx.differential = BitMatrix(n, n);
    for (int c = 0; c < C; ++c) {
        cx.differential.flip(z0(d.under_component[c]), h0 + c);
        cx.differential.flip(z0(d.over_component[c]), h0 + c);
    }
    for (int p = 0; p + 1 < P; ++p) {
        cx.differential.flip(z0(piece_rep[p]), e0 + p);
        cx.differential.flip(z0(piece_rep[p + 1]), e0 + p);
    }
    for (std::size_t i = 0; i < bounded.size(); ++i)
        for (int g : bounded[i].boundary) cx.differential.flip(g, f0 + static_cast<int>(i));
    for (int j = 0; j < k; ++j) cx.differential.flip(z2(j), t0);
    return cx;
}

}  // namespace fukflow
