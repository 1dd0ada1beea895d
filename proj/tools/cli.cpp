#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fukflow/errors.hpp"
#include "fukflow/flow_category.hpp"
#include "fukflow/fukaya_category.hpp"
#include "fukflow/geometry.hpp"
#include "fukflow/index_calculus.hpp"
#include "fukflow/link_data.hpp"
#include "fukflow/morse_bott.hpp"

namespace fukflow::cli {

namespace {

using nlohmann::json;

struct LinkInput {
    std::string fixture, pd, pd_file, framings;
    bool no_fixtures = false;
    bool allow_empty = false;
};

struct Output {
    std::string format;
    std::string path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IOFailure, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Diagram plus default framings, before framings are attached.
std::pair<LinkDiagram, std::vector<int>> load_diagram(const LinkInput& in) {
    const int sources = !in.fixture.empty() + !in.pd.empty() + !in.pd_file.empty();
    if (sources != 1) throw Error(ErrorKind::Usage, "give exactly one of --fixture, --pd, --pd-file");
    std::string text;
    std::optional<std::vector<int>> defaults;
    if (!in.fixture.empty()) {
        const LinkFixture* f = nullptr;
        std::vector<LinkFixture> catalog;
        if (!in.no_fixtures) {
            catalog = load_catalog();
            f = find_fixture(catalog, in.fixture);
        }
        if (f) {
            text = f->pd;
            defaults = f->framings;
        } else if (std::filesystem::is_regular_file(in.fixture)) {
            text = read_file(in.fixture);
        } else {
            throw Error(ErrorKind::UnknownFixture, "no fixture or file named " + in.fixture);
        }
    } else if (!in.pd.empty()) {
        text = in.pd;
    } else {
        text = read_file(in.pd_file);
    }
    LinkDiagram d = parse_pd(text, in.allow_empty);
    if (!defaults) defaults = std::vector<int>(d.component_count(), 0);
    return {d, *defaults};
}

FramedLink load_link(const LinkInput& in) {
    auto [d, framings] = load_diagram(in);
    if (!in.framings.empty()) framings = parse_framings(in.framings);
    return make_framed_link(std::move(d), std::move(framings));
}

void add_link_options(CLI::App* sub, LinkInput& in) {
    sub->add_option("--fixture", in.fixture, "Named link from the catalog, or a PD file path");
    sub->add_option("--pd", in.pd, "Inline PD code, e.g. 'X(1,3,2,4),X(3,1,4,2)'");
    sub->add_option("--pd-file", in.pd_file, "File holding a PD code");
    sub->add_option("--framings", in.framings,
                    "Comma separated integers; write --framings=-1,0 when the first is negative");
    sub->add_flag("--no-fixtures", in.no_fixtures, "Treat --fixture as a file path only");
}

void add_output_options(CLI::App* sub, Output& o, const std::vector<std::string>& formats) {
    // Output is shared between subcommands, so the default is set once this one is chosen
    sub->preparse_callback([&o, def = formats.front()](std::size_t) { o.format = def; });
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.path, "Write to this file instead of stdout");
}

void emit(const Output& o, const std::string& content, std::ostream& out) {
    if (o.path.empty())
        out << content;
    else
        geom::write_atomic(o.path, content);
}

std::string envelope(const json& data) { return json{{"schema", kSchema}, {"data", data}}.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return join(s);
}

AreaForm parse_convention(const std::string& s) {
    if (s == "dx^dy" || s == "dxdy") return AreaForm::DxDy;
    if (s == "dy^dx" || s == "dydx") return AreaForm::DyDx;
    throw Error(ErrorKind::Usage, "convention must be dx^dy or dy^dx");
}

std::vector<std::pair<double, double>> parse_loop(const std::string& text) {
    std::vector<std::pair<double, double>> pts;
    try {
        for (const auto& p : json::parse(text)) {
            if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::MalformedToken, "loop entries are [t, angle] pairs");
            pts.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedToken, std::string("loop is not a JSON list of pairs: ") + e.what());
    }
    return pts;
}

std::size_t part_ref(const json& v, const std::vector<IndexPart>& parts) {
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    const auto name = v.get<std::string>();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].name == name) return i;
    throw Error(ErrorKind::MismatchedPuncture, "no part named " + name);
}

long long glued_index_from_json(const json& spec) {
    try {
        std::vector<IndexPart> parts;
        for (const auto& p : spec.at("parts")) {
            IndexPart part{p.value("name", "part" + std::to_string(parts.size())), p.at("index").get<long long>(), {}};
            for (const auto& s : p.value("punctures", json::array()))
                part.punctures.push_back({s.at("label").get<std::string>(), s.at("k").get<int>()});
            parts.push_back(part);
        }
        std::vector<Gluing> gluings;
        for (const auto& g : spec.value("gluings", json::array()))
            gluings.push_back({part_ref(g.at("a"), parts), g.at("puncture_a").get<std::string>(),
                               part_ref(g.at("b"), parts), g.at("puncture_b").get<std::string>()});
        return glued_index(parts, gluings);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedToken, std::string("bad gluing spec: ") + e.what());
    }
}

CascadeData pair_data(const std::string& pair) { return pair == "upper" ? upper_pair_data() : lower_pair_data(); }

// Betti numbers need a complex graded by a single degree; case-I complexes
// mix local Morse indices of two components, so they are reported without.
json complex_json(const CascadeComplex& c, bool with_betti = true) {
    json j = to_json(c);
    const auto h = homology(c);
    std::vector<std::string> basis;
    for (std::size_t i : h.basis) basis.push_back(h.generators[i].name);
    j["homology_basis"] = basis;
    if (with_betti) j["betti"] = graded_betti(c);
    return j;
}

std::string complex_text(const CascadeComplex& c, bool with_betti = true) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i)
        os << "d " << c.generators[i].name << " = " << c.format(c.boundary(i)) << "\n";
    const auto h = homology(c);
    std::vector<std::string> basis;
    for (std::size_t i : h.basis) basis.push_back(h.generators[i].name);
    os << "homology: " << join(basis) << "\n";
    if (with_betti) os << "betti: " << join_ints(graded_betti(c)) << "\n";
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Framed links, their flow and Fukaya categories, and supporting computations", "fukaya-flow"};
    app.require_subcommand(1);
    app.footer("Exit status: 0 success, 1 verification failure, 2 usage or input error.\n"
               "FUKAYA_FLOW_FIXTURES overrides the fixture catalog path.");

    std::function<int()> action;
    LinkInput link;
    Output o;

    auto* parse_link = app.add_subcommand("parse-link", "Parse a PD code and report components and framings");
    add_link_options(parse_link, link);
    parse_link->add_flag("--allow-empty", link.allow_empty, "Accept an empty diagram");
    add_output_options(parse_link, o, {"json", "text"});
    parse_link->callback([&] {
        action = [&] {
            auto [d, framings] = load_diagram(link);
            json data;
            std::ostringstream text;
            if (d.component_count() == 0) {
                data = to_json(d);
                text << "components: 0\ncrossings: 0\npd: \n";
            } else {
                if (!link.framings.empty()) framings = parse_framings(link.framings);
                const auto fl = make_framed_link(d, framings);
                data = to_json(fl);
                text << "components: " << d.component_count() << "\ncrossings: " << d.crossings.size()
                     << "\npd: " << to_pd_string(d) << "\nframings: " << join_ints(fl.framings) << "\n";
            }
            emit(o, o.format == "json" ? envelope(data) : text.str(), out);
            return 0;
        };
    });

    auto* lm = app.add_subcommand("linking-matrix", "Linking matrix with framings on the diagonal");
    add_link_options(lm, link);
    add_output_options(lm, o, {"json", "text"});
    lm->callback([&] {
        action = [&] {
            const auto L = linking_matrix(load_link(link));
            std::string text;
            for (const auto& row : L.entries) text += join_ints(row) + "\n";
            emit(o, o.format == "json" ? envelope(to_json(L)) : text, out);
            return 0;
        };
    });

    std::string homology_source = "presentation";
    auto* ch = app.add_subcommand("complement-homology", "F2 homology of the link complement");
    add_link_options(ch, link);
    add_output_options(ch, o, {"text", "json"});
    ch->add_option("--source", homology_source, "presentation or handles")
        ->check(CLI::IsMember({"presentation", "handles"}));
    ch->callback([&] {
        action = [&] {
            const auto fl = load_link(link);
            if (homology_source == "handles") {
                const auto c = handle_complex_from_link(fl);
                const auto betti = graded_betti(c);
                emit(o, o.format == "json" ? envelope(complex_json(c)) : join_ints(betti) + "\n", out);
            } else {
                const auto h = complement_homology(linking_matrix(fl));
                emit(o, o.format == "json" ? envelope(to_json(h)) : join_ints(h.betti()) + "\n", out);
            }
            return 0;
        };
    });

    auto category_command = [&](const char* name, const char* help, auto builder) {
        auto* sub = app.add_subcommand(name, help);
        add_link_options(sub, link);
        add_output_options(sub, o, {"json", "dot"});
        sub->callback([&, builder] {
            action = [&, builder] {
                const auto cat = builder(load_link(link));
                emit(o, o.format == "json" ? envelope(to_json(cat)) : to_dot(cat), out);
                return 0;
            };
        });
    };
    category_command("flow-category", "Flow category of the surgery Morse function",
                     [](const FramedLink& fl) { return build_flow_category(fl); });
    category_command("fukaya-category", "Directed Fukaya category of the Lefschetz fibration",
                     [](const FramedLink& fl) { return build_fukaya_category(fl); });

    auto* vb = app.add_subcommand("verify-theorem-b", "Compare the two categories through the generator dictionary");
    add_link_options(vb, link);
    vb->add_option("--out", o.path, "Write the JSON result to this file instead of stdout");
    vb->callback([&] {
        action = [&] {
            const auto r = verify_theorem_b(load_link(link));
            emit(o, envelope(to_json(r)), out);
            for (const auto& line : r.diff) err << line << "\n";
            return r.holds ? 0 : 1;
        };
    });

    std::string mode = "case-I", pair = "upper";
    auto* mb = app.add_subcommand("morse-bott", "Morse-Bott complexes: the case-I cascade or a link complement");
    mb->add_option("--mode", mode, "case-I or handles")->check(CLI::IsMember({"case-I", "handles"}));
    mb->add_option("--pair", pair, "upper (Sigma42, K+) or lower (Sigma20, K-)")
        ->check(CLI::IsMember({"upper", "lower"}));
    add_link_options(mb, link);
    add_output_options(mb, o, {"text", "json"});
    mb->callback([&] {
        action = [&] {
            CascadeComplex c;
            if (mode == "handles") {
                c = handle_complex_from_link(load_link(link));
            } else {
                const auto d = pair_data(pair);
                d.validate();
                const auto& m = d.correspondences.front();
                c = differential_case_I(d.components[m.source], d.components[m.target], m);
            }
            const bool graded = mode == "handles";
            emit(o, o.format == "json" ? envelope(complex_json(c, graded)) : complex_text(c, graded), out);
            return 0;
        };
    });

    std::string from, to;
    int max_k = 2;
    auto* cd = app.add_subcommand("cascade-diagnostics", "Enumerate cascade configurations between critical points");
    cd->add_option("--pair", pair, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));
    cd->add_option("--from", from, "Start critical point (default: all)");
    cd->add_option("--to", to, "End critical point (default: all)");
    cd->add_option("--max-k", max_k, "Largest number of correspondence steps")->check(CLI::Range(0, 4));
    add_output_options(cd, o, {"text", "json"});
    cd->callback([&] {
        action = [&] {
            const auto d = pair_data(pair);
            d.validate();
            std::vector<std::string> names;
            for (const auto& comp : d.components)
                for (const auto& p : comp.critical_points()) names.push_back(p.name);
            std::vector<std::string> xs = from.empty() ? names : std::vector<std::string>{from};
            std::vector<std::string> ys = to.empty() ? names : std::vector<std::string>{to};
            json entries = json::array();
            std::ostringstream text;
            for (const auto& x : xs)
                for (const auto& y : ys) {
                    if (x == y) continue;
                    const auto rx = find_critical(d, x), ry = find_critical(d, y);
                    for (int k = 0; k <= max_k; ++k) {
                        json e{{"from", x}, {"to", y}, {"k", k}};
                        try {
                            const auto confs = cascade_moduli(d, rx, ry, static_cast<std::size_t>(k));
                            if (confs.empty()) continue;
                            json list = json::array();
                            for (const auto& conf : confs) list.push_back(to_json(conf));
                            e["configurations"] = list;
                            text << x << " -> " << y << " k=" << k << ": " << confs.size() << "\n";
                            for (const auto& conf : confs) text << "  " << to_json(conf).dump() << "\n";
                        } catch (const Error& ex) {
                            if (ex.kind() != ErrorKind::UnsupportedModel && ex.kind() != ErrorKind::NonTransverse) throw;
                            e["error"] = ex.what();
                            text << x << " -> " << y << " k=" << k << ": " << ex.what() << "\n";
                        }
                        entries.push_back(e);
                    }
                }
            emit(o, o.format == "json" ? envelope(entries) : text.str(), out);
            return 0;
        };
    });

    std::string loop_text, convention = "dx^dy";
    bool winding = false;
    auto* ms = app.add_subcommand("maslov", "Maslov index of a loop of lines in the plane");
    ms->add_option("--loop", loop_text, "JSON list of [t, angle in radians] breakpoints")->required();
    ms->add_option("--convention", convention, "dx^dy or dy^dx");
    ms->add_flag("--winding", winding, "Print the winding number in half-turns instead");
    ms->callback([&] {
        action = [&] {
            const auto loop = loop_from_radians(parse_loop(loop_text), parse_convention(convention));
            out << (winding ? winding_number(loop) : maslov_of_loop(loop)) << "\n";
            return 0;
        };
    });

    std::string spec_text, spec_file;
    bool triangle = false;
    long long n = 3, mu = -1, mu_prime = -1;
    auto* gi = app.add_subcommand("glued-index", "Index of glued operators, or the triangle index system");
    gi->add_option("--spec", spec_text, "JSON {parts:[{name,index,punctures:[{label,k}]}], gluings:[{a,puncture_a,b,puncture_b}]}");
    gi->add_option("--spec-file", spec_file, "File holding the JSON spec");
    gi->add_flag("--triangle", triangle, "Solve for index_H and index_V");
    gi->add_option("--n", n, "Complex dimension");
    gi->add_option("--mu", mu, "Maslov term of the triangle equation");
    gi->add_option("--mu-prime", mu_prime, "Maslov term of the strip-cap equation");
    add_output_options(gi, o, {"text", "json"});
    gi->callback([&] {
        action = [&] {
            if (triangle + !spec_text.empty() + !spec_file.empty() != 1)
                throw Error(ErrorKind::Usage, "give exactly one of --triangle, --spec, --spec-file");
            if (triangle) {
                const auto t = solve_triangle_index(n, mu, mu_prime);
                emit(o,
                     o.format == "json" ? envelope({{"index_H", t.strip_cap}, {"index_V", t.triangle}})
                                        : "index_H " + std::to_string(t.strip_cap) + "\nindex_V " +
                                              std::to_string(t.triangle) + "\n",
                     out);
                return 0;
            }
            json spec;
            try {
                spec = json::parse(spec_text.empty() ? read_file(spec_file) : spec_text);
            } catch (const json::exception& e) {
                throw Error(ErrorKind::MalformedToken, std::string("spec is not JSON: ") + e.what());
            }
            const long long v = glued_index_from_json(spec);
            emit(o, o.format == "json" ? envelope({{"index", v}}) : std::to_string(v) + "\n", out);
            return 0;
        };
    });

    std::uint64_t seed = 1;
    std::size_t frames = 100, round_trips = 10000, pullbacks = 100;
    auto* gc = app.add_subcommand("geometry-check", "Numeric checks of the closed-form maps");
    gc->add_option("--seed", seed, "Random seed");
    gc->add_option("--frames", frames, "Random (e, f) pairs tried on the 48x21 grid");
    gc->add_option("--round-trips", round_trips, "Random mu / mu^-1 round trips");
    gc->add_option("--pullbacks", pullbacks, "Random tangent vectors for the pullback check");
    add_output_options(gc, o, {"text", "json"});
    gc->callback([&] {
        action = [&] {
            const auto r = geom::geometry_checks(seed, frames, round_trips, pullbacks);
            json data{{"image_checks", r.image_checks},
                      {"max_image_error", r.max_image_error},
                      {"round_trips", r.round_trips},
                      {"max_round_trip", r.max_round_trip},
                      {"pullback_checks", r.pullback_checks},
                      {"max_pullback_defect", r.max_pullback_defect},
                      {"passed", r.passed()}};
            std::ostringstream text;
            text << "image " << r.image_checks << " max " << r.max_image_error << " tol " << geom::kRoundTripTol << "\n"
                 << "round-trip " << r.round_trips << " max " << r.max_round_trip << " tol " << geom::kRoundTripTol
                 << "\n"
                 << "pullback " << r.pullback_checks << " max " << r.max_pullback_defect << " tol "
                 << geom::kFiniteDifferenceTol << "\n"
                 << (r.passed() ? "ok" : "FAILED") << "\n";
            emit(o, o.format == "json" ? envelope(data) : text.str(), out);
            return r.passed() ? 0 : 1;
        };
    });

    int grid_n = 96;
    double lambda_max = 0.6;
    auto* ef = app.add_subcommand("emit-figure", "Images of the three curves under P");
    ef->add_option("--grid-n", grid_n, "Samples per curve segment")->check(CLI::PositiveNumber);
    ef->add_option("--lambda-max", lambda_max, "Height of the curves in lambda")->check(CLI::PositiveNumber);
    add_output_options(ef, o, {"csv", "svg"});
    ef->callback([&] {
        action = [&] {
            const auto pts = geom::sample_figure(geom::default_figure(grid_n, lambda_max));
            emit(o, o.format == "csv" ? geom::figure_csv(pts) : geom::figure_svg(pts), out);
            return 0;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* shown = &app;
        for (const auto* sub : app.get_subcommands()) shown = sub;
        out << shown->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        const CLI::App* shown = &app;
        for (const auto* sub : app.get_subcommands()) shown = sub;
        err << shown->help();
        return 2;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.kind() == ErrorKind::DifferentialNotSquareZero ? 1 : 2;
    }
}

}  // namespace fukflow::cli
