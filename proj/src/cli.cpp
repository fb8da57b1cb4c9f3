#include "fcd/cli.hpp"

#include "fcd/diagram.hpp"
#include "fcd/fourterm.hpp"
#include "fcd/pdpoly.hpp"
#include "fcd/pdual.hpp"
#include "fcd/surface.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

namespace fcd {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_diagram_arg(const std::string& arg, std::istream& in) {
    if (arg != "-") return arg;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json stats_to_json(const SurfaceStats& s) {
    ordered_json j;
    j["components"] = s.components;
    j["vertices"] = s.vertices;
    j["edges"] = s.edges;
    j["boundary"] = s.boundary;
    j["euler_genus"] = s.euler_genus;
    j["orientable"] = s.orientable;
    j["genus"] = s.genus;
    return j;
}

ordered_json poly_to_json(const Polynomial& p) {
    ordered_json coeffs = ordered_json::object();
    for (const auto& [e, c] : p.terms()) {
        if (c.fits_int64())
            coeffs[std::to_string(e)] = c.to_int64();
        else
            coeffs[std::to_string(e)] = c.str();
    }
    ordered_json j;
    j["coeffs"] = std::move(coeffs);
    return j;
}

std::vector<int> resolve_chord_set(const Diagram& d, const std::string& csv) {
    std::vector<int> chords;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string item = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        // trim surrounding spaces
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            item = item.substr(b, e - b + 1);
            int id = d.chord_id(item);
            if (id < 0) throw Error("unknown chord '" + item + "'");
            if (std::find(chords.begin(), chords.end(), id) == chords.end()) chords.push_back(id);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return chords;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"framed chord diagrams: ribbon-graph genus, partial duals, "
                 "partial-dual polynomials and four-term relation checks"};
    app.require_subcommand(1);

    struct {
        std::string diagram;
        std::string format = "text";
        std::string set;
        std::string end;
        std::string over;
        std::string relation = "all";
        int cap = 20;
        int trials = 200;
        int max_spectators = 8;
        uint64_t seed = 7;
    } o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_diagram = [&](CLI::App* cmd) {
        cmd->add_option("diagram", o.diagram, "signed rotation, e.g. \"(a, b, -a, b)\"; '-' reads stdin")
            ->required();
    };

    CLI::App* genus = app.add_subcommand("genus", "Euler genus of the diagram's ribbon graph");
    add_diagram(genus);
    add_format(genus);

    CLI::App* stats = app.add_subcommand("stats", "surface statistics of the ribbon graph");
    add_diagram(stats);
    add_format(stats);

    CLI::App* poly = app.add_subcommand("poly", "partial-dual polynomial");
    add_diagram(poly);
    add_format(poly);
    poly->add_option("--cap", o.cap, "refuse diagrams with more chords than this")
        ->default_val(20);

    CLI::App* pdual_cmd = app.add_subcommand("pdual", "partial dual with respect to a chord set");
    add_diagram(pdual_cmd);
    add_format(pdual_cmd);
    pdual_cmd->add_option("--set", o.set, "comma-separated chord labels (empty for the identity dual)");

    CLI::App* canon = app.add_subcommand("canon", "canonical form of the diagram");
    add_diagram(canon);
    add_format(canon);

    CLI::App* mirror_cmd = app.add_subcommand("mirror", "mirror image (all circles flipped)");
    add_diagram(mirror_cmd);
    add_format(mirror_cmd);

    CLI::App* slide_cmd = app.add_subcommand("slide", "slide a chord end along an adjacent chord");
    add_diagram(slide_cmd);
    add_format(slide_cmd);
    slide_cmd->add_option("--end", o.end, "end to move, as circle:index")->required();
    slide_cmd->add_option("--over", o.over, "chord to slide along")->required();

    CLI::App* check = app.add_subcommand("check4t", "verify the four-term relations on random ambients");
    add_format(check);
    check->add_option("--relation", o.relation, "all, t1, t2 or t3")
        ->check(CLI::IsMember({"all", "t1", "t2", "t3", "T1", "T2", "T3"}));
    check->add_option("--trials", o.trials, "ambients per relation")->default_val(200);
    check->add_option("--max-spectators", o.max_spectators, "spectator chords per ambient (0..8)")
        ->default_val(8);
    check->add_option("--seed", o.seed, "base seed")->default_val(7);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const bool json = o.format == "json";
    try {
        if (app.got_subcommand(genus)) {
            Diagram d = parse(read_diagram_arg(o.diagram, in));
            int eps = euler_genus(d);
            if (json) {
                ordered_json j;
                j["euler_genus"] = eps;
                out << j.dump() << "\n";
            } else {
                out << eps << "\n";
            }
        } else if (app.got_subcommand(stats)) {
            Diagram d = parse(read_diagram_arg(o.diagram, in));
            SurfaceStats s = surface_stats(d);
            if (json) {
                out << stats_to_json(s).dump() << "\n";
            } else {
                out << "components: " << s.components << "\n"
                    << "vertices: " << s.vertices << "\n"
                    << "edges: " << s.edges << "\n"
                    << "boundary: " << s.boundary << "\n"
                    << "euler_genus: " << s.euler_genus << "\n"
                    << "orientable: " << (s.orientable ? "true" : "false") << "\n"
                    << "genus: " << s.genus << "\n";
            }
        } else if (app.got_subcommand(poly)) {
            Diagram d = parse(read_diagram_arg(o.diagram, in));
            PdPolyOptions popts;
            popts.cap = o.cap;
            Polynomial p = partial_dual_polynomial(d, popts);
            if (json)
                out << poly_to_json(p).dump() << "\n";
            else
                out << p.str() << "\n";
        } else if (app.got_subcommand(pdual_cmd)) {
            Diagram d = parse(read_diagram_arg(o.diagram, in));
            DualResult r = partial_dual(d, resolve_chord_set(d, o.set));
            if (json) {
                ordered_json j;
                j["diagram"] = serialize(r.diagram);
                out << j.dump() << "\n";
            } else {
                out << serialize(r.diagram) << "\n";
            }
        } else if (app.got_subcommand(canon)) {
            Diagram d = parse(read_diagram_arg(o.diagram, in));
            std::string s = canonical_form(d);
            if (json) {
                ordered_json j;
                j["diagram"] = s;
                out << j.dump() << "\n";
            } else {
                out << s << "\n";
            }
        } else if (app.got_subcommand(mirror_cmd)) {
            Diagram d = parse(read_diagram_arg(o.diagram, in));
            std::string s = serialize(mirror(d));
            if (json) {
                ordered_json j;
                j["diagram"] = s;
                out << j.dump() << "\n";
            } else {
                out << s << "\n";
            }
        } else if (app.got_subcommand(slide_cmd)) {
            Diagram d = parse(read_diagram_arg(o.diagram, in));
            size_t colon = o.end.find(':');
            int ci = -1, index = -1;
            try {
                if (colon == std::string::npos) throw std::invalid_argument("");
                ci = std::stoi(o.end.substr(0, colon));
                index = std::stoi(o.end.substr(colon + 1));
            } catch (const std::exception&) {
                err << "error: --end expects circle:index, got '" << o.end << "'\n";
                return 2;
            }
            int over = d.chord_id(o.over);
            if (over < 0) throw Error("unknown chord '" + o.over + "'");
            std::string s = serialize(slide(d, ci, index, over));
            if (json) {
                ordered_json j;
                j["diagram"] = s;
                out << j.dump() << "\n";
            } else {
                out << s << "\n";
            }
        } else if (app.got_subcommand(check)) {
            FourTermOptions fopts;
            fopts.trials = o.trials;
            fopts.max_spectators = o.max_spectators;
            fopts.seed = o.seed;
            if (o.relation != "all") {
                auto r = relation_from_name(o.relation);
                fopts.relations = {*r};
            }
            FourTermReport report = check_four_term(fopts);
            if (json) {
                ordered_json j;
                j["pass"] = report.pass();
                j["seed"] = fopts.seed;
                j["trials"] = fopts.trials;
                j["max_spectators"] = fopts.max_spectators;
                ordered_json rels = ordered_json::array();
                for (Relation r : fopts.relations) rels.push_back(relation_name(r));
                j["relations"] = std::move(rels);
                j["checked"] = report.checked;
                ordered_json fails = ordered_json::array();
                for (const FourTermFailure& f : report.failures) {
                    ordered_json jf;
                    jf["relation"] = relation_name(f.relation);
                    jf["trial"] = f.trial;
                    jf["ambient"] = f.ambient;
                    jf["diagrams"] = f.diagrams;
                    jf["residual"] = f.residual;
                    fails.push_back(std::move(jf));
                }
                j["failures"] = std::move(fails);
                out << j.dump() << "\n";
            } else {
                int per = fopts.trials;
                for (Relation r : fopts.relations) {
                    int failed = 0;
                    for (const FourTermFailure& f : report.failures)
                        if (f.relation == r) ++failed;
                    out << "relation " << relation_name(r) << ": " << (per - failed) << "/" << per
                        << " ambients vanish\n";
                }
                for (const FourTermFailure& f : report.failures) {
                    out << "FAIL " << relation_name(f.relation) << " trial " << f.trial
                        << ": residual " << f.residual << "\n";
                    out << "  ambient " << f.ambient << "\n";
                    for (const auto& ds : f.diagrams) out << "  " << ds << "\n";
                }
                out << "4T check: " << (report.pass() ? "PASS" : "FAIL") << " (" << report.checked
                    << " combinations, seed " << fopts.seed << ")\n";
            }
            if (!report.pass()) return 3;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace fcd
