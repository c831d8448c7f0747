#include "vknot/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/realization.hpp"
#include "vknot/representation.hpp"

namespace vknot::cli {

namespace {

using nlohmann::json;

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Args {
    std::string command;
    std::string file;
    bool json = false;
    bool classify = false;
    bool find_nontrivial = false;
    std::string handles;
    std::string arcs;
    std::string word;
    int handle_index = -1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Args parse_args(const std::vector<std::string>& argv) {
    if (argv.empty()) throw UsageError("missing command");
    Args a;
    a.command = argv[0];
    const std::vector<std::string> commands = {"validate",  "invariants", "realizations",
                                               "simplify",  "represent",  "twist",
                                               "skein-check"};
    if (std::find(commands.begin(), commands.end(), a.command) == commands.end())
        throw UsageError("unknown command: " + a.command);
    for (size_t i = 1; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        auto next = [&](const char* flag) -> const std::string& {
            if (i + 1 >= argv.size())
                throw UsageError(std::string(flag) + " needs a value");
            return argv[++i];
        };
        if (s == "--json") a.json = true;
        else if (s == "--classify") a.classify = true;
        else if (s == "--find-nontrivial") a.find_nontrivial = true;
        else if (s == "--handles") a.handles = next("--handles");
        else if (s == "--arcs") a.arcs = next("--arcs");
        else if (s == "--word") a.word = next("--word");
        else if (s == "--handle") a.handle_index = std::stoi(next("--handle"));
        else if (!s.empty() && s[0] == '-') throw UsageError("unknown flag: " + s);
        else if (a.file.empty()) a.file = s;
        else throw UsageError("unexpected argument: " + s);
    }
    if (a.file.empty()) throw UsageError(a.command + " needs a .vkd file");
    return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !s.empty()) out.push_back(cur);
    return out;
}

Assignment parse_arcs(const std::string& text, int n_virtual) {
    Assignment a;
    if (!text.empty())
        for (const std::string& tok : split(text, ',')) {
            if (tok == "1") a.push_back(OverArc::strand1);
            else if (tok == "2") a.push_back(OverArc::strand2);
            else throw UsageError("--arcs entries must be 1 or 2");
        }
    if (static_cast<int>(a.size()) != n_virtual)
        throw UsageError("--arcs must list a choice for each of the " +
                         std::to_string(n_virtual) + " virtual crossings");
    return a;
}

std::vector<std::vector<int>> parse_handles(const std::string& text) {
    std::vector<std::vector<int>> groups;
    if (text.empty()) return groups;
    for (const std::string& g : split(text, ';')) {
        std::vector<int> members;
        for (const std::string& tok : split(g, ','))
            members.push_back(std::stoi(tok));
        groups.push_back(std::move(members));
    }
    return groups;
}

json pair_json(const IntersectionPair& p) { return json::array({p.p, p.n}); }

json representation_report(const Representation& rep) {
    json r;
    r["genus"] = rep.genus();
    json classes = json::array();
    json words = json::array();
    for (const Handle& h : rep.handles()) {
        classes.push_back(json::array({h.p, h.n}));
        std::string w;
        for (size_t i = 0; i < h.twist_word.size(); ++i) {
            if (i) w += ",";
            w += h.twist_word[i];
        }
        words.push_back(w);
    }
    r["torus_classes"] = classes;
    r["twist_words"] = words;
    json table = json::array();
    for (const auto& row : intersection_pairs(rep)) {
        json jrow = json::array();
        for (const IntersectionPair& p : row) jrow.push_back(pair_json(p));
        table.push_back(jrow);
    }
    r["intersection_table"] = table;
    Diagram f = canonicalize(forget(rep));
    r["forget"] = render_diagram(f);
    r["jones_forget"] = jones(f).str();
    return r;
}

Representation build_representation(const Args& a, const Diagram& d) {
    std::vector<std::vector<int>> groups = parse_handles(a.handles);
    if (groups.empty()) // default: one singleton handle per virtual crossing
        for (int v : d.virtual_ids()) groups.push_back({v});
    Assignment arcs = parse_arcs(a.arcs, d.virtual_count());
    return from_diagram(d, arcs, groups);
}

json run_command(const Args& a, const Diagram& d) {
    json payload;
    if (a.command == "validate") {
        payload["valid"] = true;
        payload["crossings"] = d.crossing_count();
        payload["classical"] = d.classical_count();
        payload["virtual"] = d.virtual_count();
        payload["free_loops"] = d.free_loops();
        payload["components"] = d.components().count();
        payload["canonical"] = render_diagram(d);
    } else if (a.command == "invariants") {
        payload["writhe"] = writhe(d);
        payload["components"] = d.components().count();
        payload["linking_matrix"] = linking_matrix(d);
        payload["bracket"] = bracket(d).str();
        payload["jones"] = jones(d).str();
        payload["jones_unlink"] = is_jones_unlink(d);
    } else if (a.command == "realizations") {
        if (a.find_nontrivial) {
            auto found = find_nontrivial_realization(d);
            payload["found"] = found.has_value();
            payload["assignment"] = found ? assignment_str(*found) : "";
        } else if (a.classify) {
            json reports = json::array();
            for (const RealizationReport& r : classify_realizations(d)) {
                json jr;
                jr["assignment"] = assignment_str(r.assignment);
                jr["status"] = status_name(r.status);
                jr["jones"] = r.jones_value.str();
                jr["reduction_moves"] = r.reduction.size();
                reports.push_back(jr);
            }
            payload["count"] = reports.size();
            payload["reports"] = reports;
        } else {
            json list = json::array();
            for (const auto& [assignment, diagram] : enumerate_realizations(d)) {
                json jr;
                jr["assignment"] = assignment_str(assignment);
                jr["diagram"] = render_diagram(canonicalize(diagram));
                list.push_back(jr);
            }
            payload["count"] = list.size();
            payload["realizations"] = list;
        }
    } else if (a.command == "simplify") {
        SimplifyResult r = simplify_with_trace(d);
        payload["moves"] = r.trace.size();
        json steps = json::array();
        for (const MoveSite& s : r.trace) steps.push_back(move_kind_name(s.kind));
        payload["applied"] = steps;
        payload["diagram"] = render_diagram(r.diagram);
        payload["crossings"] = r.diagram.crossing_count();
    } else if (a.command == "represent") {
        payload = representation_report(build_representation(a, d));
    } else if (a.command == "twist") {
        Representation rep = build_representation(a, d);
        if (a.handle_index < 0 || a.handle_index >= rep.genus())
            throw UsageError("--handle index out of range");
        if (a.word.empty()) throw UsageError("twist needs --word");
        for (const std::string& tok : split(a.word, ',')) {
            if (tok == "M+") rep = dehn_twist_meridian(rep, a.handle_index, +1);
            else if (tok == "M-") rep = dehn_twist_meridian(rep, a.handle_index, -1);
            else if (tok == "L+") rep = dehn_twist_longitude(rep, a.handle_index, +1);
            else if (tok == "L-") rep = dehn_twist_longitude(rep, a.handle_index, -1);
            else throw UsageError("twist word tokens are M+ M- L+ L-");
        }
        payload = representation_report(rep);
    } else if (a.command == "skein-check") {
        json residuals = json::array();
        bool all_zero = true;
        for (int id : d.classical_ids()) {
            if (d.crossing(id).sign != +1) continue;
            LaurentPoly r = skein_residual(d, id);
            json jr;
            jr["crossing"] = id;
            jr["residual"] = r.str();
            residuals.push_back(jr);
            if (!r.is_zero()) all_zero = false;
        }
        payload["checked"] = residuals.size();
        payload["all_zero"] = all_zero;
        payload["residuals"] = residuals;
    }
    return payload;
}

std::string text_report(const Args& a, const json& payload) {
    std::ostringstream os;
    if (a.command == "validate") {
        os << "valid diagram: " << payload["classical"].get<int>() << " classical, "
           << payload["virtual"].get<int>() << " virtual, "
           << payload["free_loops"].get<int>() << " free loops, "
           << payload["components"].get<int>() << " components\n";
    } else if (a.command == "invariants") {
        os << "writhe: " << payload["writhe"].get<int>() << "\n";
        os << "components: " << payload["components"].get<int>() << "\n";
        os << "bracket: " << payload["bracket"].get<std::string>() << "\n";
        os << "jones: " << payload["jones"].get<std::string>() << "\n";
        os << "jones_unlink: " << (payload["jones_unlink"].get<bool>() ? "true" : "false")
           << "\n";
    } else if (a.command == "realizations") {
        if (payload.contains("found")) {
            if (payload["found"].get<bool>())
                os << "nontrivial realization: " << payload["assignment"].get<std::string>()
                   << "\n";
            else
                os << "no nontrivial realization certified\n";
        } else if (payload.contains("reports")) {
            for (const auto& r : payload["reports"])
                os << r["assignment"].get<std::string>() << " "
                   << r["status"].get<std::string>() << " jones "
                   << r["jones"].get<std::string>() << "\n";
        } else {
            os << payload["count"].get<std::size_t>() << " realizations\n";
        }
    } else if (a.command == "simplify") {
        os << "applied " << payload["moves"].get<std::size_t>() << " moves\n";
        os << payload["diagram"].get<std::string>();
    } else if (a.command == "represent" || a.command == "twist") {
        os << "genus: " << payload["genus"].get<int>() << "\n";
        os << "torus classes:";
        for (const auto& c : payload["torus_classes"])
            os << " (" << c[0].get<long long>() << "," << c[1].get<long long>() << ")";
        os << "\n";
        os << "jones(forget): " << payload["jones_forget"].get<std::string>() << "\n";
        os << payload["forget"].get<std::string>();
    } else if (a.command == "skein-check") {
        os << "checked " << payload["checked"].get<std::size_t>()
           << " positive crossings: "
           << (payload["all_zero"].get<bool>() ? "all residuals zero" : "NONZERO residual")
           << "\n";
    }
    return os.str();
}

} // namespace

std::string usage() {
    return "usage: vknot <command> <file.vkd> [flags]\n"
           "commands:\n"
           "  validate <file>                      check the diagram and echo canonical form\n"
           "  invariants <file>                    writhe, linking matrix, bracket, jones\n"
           "  realizations <file> [--classify] [--find-nontrivial]\n"
           "  simplify <file>                      monotone R1/R2/VR1/VR2 reduction\n"
           "  represent <file> --arcs a[,b...] [--handles g1[;g2...]]\n"
           "  twist <file> --arcs ... [--handles ...] --handle H --word M+,L+,M-\n"
           "  skein-check <file>                   skein residual at every positive crossing\n"
           "flags: --json for machine output; VKNOT_THREADS caps parallelism\n";
}

CommandResult run(const std::vector<std::string>& argv) {
    Args args;
    try {
        args = parse_args(argv);
    } catch (const UsageError& e) {
        return {kUsageError, std::string("usage error: ") + e.what() + "\n" + usage()};
    }

    std::ifstream in(args.file, std::ios::binary);
    if (!in) return {kInputError, "cannot open file: " + args.file + "\n"};
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string source = buf.str();

    json result;
    result["command"] = args.command;
    result["input"] = args.file;
    result["digest"] = fnv1a_digest(source);

    try {
        Diagram d = parse_diagram(source);
        json payload = run_command(args, d);
        result["payload"] = payload;
        result["exit_code"] = kOk;
        if (args.json) return {kOk, result.dump(2) + "\n"};
        return {kOk, text_report(args, payload)};
    } catch (const UsageError& e) {
        return {kUsageError, std::string("usage error: ") + e.what() + "\n"};
    } catch (const ParseError& e) {
        return {kInputError, std::string("parse error: ") + e.what() + "\n"};
    } catch (const ValidationError& e) {
        return {kInputError, std::string("validation error: ") + e.what() + "\n"};
    } catch (const BoundError& e) {
        return {kBoundError, std::string("bound exceeded: ") + e.what() + "\n"};
    } catch (const OperationError& e) {
        return {kUsageError, std::string("operation error: ") + e.what() + "\n"};
    }
}

} // namespace vknot::cli
