#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ladder/classifier.hpp"
#include "ladder/json_io.hpp"
#include "ladder/spine.hpp"

namespace ladder::cli {

inline std::string fnv1a_hex(const std::string& s)
{
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

struct Options {
    std::string command;
    std::string input = "-";
    std::string format = "text";
    int t = 2;
    bool verify = false;
};

inline std::string read_input(const Options& opt, std::istream& in)
{
    if (opt.input == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(opt.input);
    require(f.good(), errc::not_a_ladder, "cannot open input file: " + opt.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

namespace detail {

inline std::string fmt_cell(const Cell& c)
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline std::string fmt_class(const DivisorClass& v)
{
    std::string s;
    auto term = [&](long long coeff, const std::string& name) {
        if (coeff == 0) return;
        if (!s.empty()) s += coeff > 0 ? " + " : " - ";
        else if (coeff < 0) s += "-";
        long long a = coeff < 0 ? -coeff : coeff;
        if (a != 1) s += std::to_string(a) + "*";
        s += "[" + name + "]";
    };
    for (int i = 1; i <= v.h + 1; ++i) term(v.q(i), "q" + std::to_string(i));
    for (int j = 1; j <= v.k; ++j) term(v.p(j), "p" + std::to_string(j));
    return s.empty() ? "0" : s;
}

inline void print_text(std::ostream& out, const std::string& command, const json& payload);

inline json payload_info(const Ladder& Y)
{
    return json{{"ladder", to_json(Y)},
                {"cells", Y.cell_count()},
                {"corners", to_json(corners(Y))},
                {"eta_kappa", to_json(eta_kappa(Y))},
                {"shape", to_json(shape(Y))}};
}

inline json payload_classgroup(const Ladder& Y)
{
    ClassGroupDescriptor d = class_group(Y);
    json gens = json::object();
    for (int i = 1; i <= d.h + 1; ++i) {
        json cellsq = json::array(), cellsqp = json::array();
        for (const Cell& c : prime_generators(Y, {PrimeKind::Q, i})) cellsq.push_back(to_json(c));
        for (const Cell& c : prime_generators(Y, {PrimeKind::Qprime, i})) cellsqp.push_back(to_json(c));
        gens["q" + std::to_string(i)] = cellsq;
        gens["q" + std::to_string(i) + "'"] = cellsqp;
    }
    for (int j = 1; j <= d.k; ++j) {
        json cellsp = json::array();
        for (const Cell& c : prime_generators(Y, {PrimeKind::P, j})) cellsp.push_back(to_json(c));
        gens["p" + std::to_string(j)] = cellsp;
    }
    json rel = json::array();
    for (int i = 1; i <= d.h + 1; ++i)
        rel.push_back(json{{"index", i}, {"qprime_class", to_json(qprime_class(Y, i))}});
    return json{{"rank", d.rank}, {"h", d.h}, {"k", d.k}, {"basis", d.basis},
                {"generators", gens}, {"qprime_relations", rel}};
}

inline json payload_canonical(const Ladder& Y)
{
    auto [data, omega] = canonical_class(Y);
    return json{{"lambda", data.lambda}, {"delta", data.delta}, {"ij", data.ij},
                {"omega", to_json(omega)}, {"gorenstein", omega.is_zero()}};
}

inline json payload_candidates(const Ladder& Y)
{
    json cands = json::array();
    for (const Candidate& c : enumerate_candidates(Y)) cands.push_back(to_json(c));
    ShapeReport sh = shape(Y);
    std::string branch = sh.thick ? "thick" : sh.thin ? "thin" : "mixed";
    return json{{"branch", branch}, {"candidates", cands}};
}

inline json payload_witness(const Ladder& Y, int t)
{
    require(t == 2, errc::out_of_scope, "witness battery exists for t = 2 only");
    std::vector<TraceEntry> trace;
    ShapeReport sh = shape(Y);
    if (sh.one_sided && !sh.is_rectangle) {
        CornerData cd = corners(Y);
        Ladder Yn = cd.k() == 0 ? reflect(Y) : Y;
        StripResult sr = strip_unused(Yn, 2);
        ladder::detail::one_sided_witnesses(sr.kept, trace);
    } else if (sh.two_sided && !sh.coincidental_corners && two_connected(Y)) {
        if (sh.thick) ladder::detail::thick_witness(Y, trace);
        else if (sh.thin) ladder::detail::thin_witness(Y, trace);
        else trace.push_back({"no-witness", json{{"note", "mixed branch has no displayed witness"}}});
    } else {
        trace.push_back({"no-witness", json{{"note", "no witness pattern applies to this shape"}}});
    }
    json entries = json::array();
    for (const auto& e : trace) entries.push_back(json{{"anchor", e.anchor}, {"data", e.data}});
    return json{{"entries", entries}};
}

} // namespace detail

/// Run one CLI invocation. Exit codes: 0 ok, 1 domain error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact invariants of ladder determinantal rings"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "ladder file ('-' for stdin)");
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    const std::vector<std::string> commands = {"validate", "info",       "classgroup", "canonical",
                                               "classify", "candidates", "witness",    "spine",
                                               "reflect",  "strip"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub);
        if (name == "classify" || name == "witness" || name == "strip")
            sub->add_option("--t", opt.t, "minor size");
        if (name == "classify") sub->add_flag("--verify", opt.verify, "run proof-level witnesses");
    }

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    opt.command = app.get_subcommands().front()->get_name();

    json report;
    report["command"] = opt.command;
    json warnings = json::array();
    try {
        std::string text = read_input(opt, in);
        Ladder Y = parse_ladder(text);
        report["input_digest"] = fnv1a_hex(to_json(Y).dump());

        json payload;
        if (opt.command == "validate") {
            payload = json{{"ok", true}, {"ladder", to_json(Y)}, {"cells", Y.cell_count()}};
        } else if (opt.command == "info") {
            payload = detail::payload_info(Y);
        } else if (opt.command == "classgroup") {
            payload = detail::payload_classgroup(Y);
        } else if (opt.command == "canonical") {
            payload = detail::payload_canonical(Y);
        } else if (opt.command == "classify") {
            payload = to_json(classify(Y, opt.t, opt.verify));
            payload["t"] = opt.t;
        } else if (opt.command == "candidates") {
            payload = detail::payload_candidates(Y);
        } else if (opt.command == "witness") {
            payload = detail::payload_witness(Y, opt.t);
        } else if (opt.command == "spine") {
            Ladder S = spine(Y);
            payload = json{{"spine", to_json(S)}, {"grid", render_grid(S)},
                           {"corners", to_json(corners(S))}};
        } else if (opt.command == "reflect") {
            Ladder R = reflect(Y);
            payload = json{{"reflected", to_json(R)}, {"grid", render_grid(R)},
                           {"corners", to_json(corners(R))}};
        } else if (opt.command == "strip") {
            StripResult sr = strip_unused(Y, opt.t);
            json removed = json::array();
            for (const Cell& c : sr.removed) removed.push_back(to_json(c));
            if (sr.reflected)
                warnings.push_back("input was k = 0 one-sided; handled through reflection");
            payload = json{{"kept", to_json(sr.kept)}, {"grid", render_grid(sr.kept)},
                           {"removed", removed}};
        }
        report["payload"] = payload;
        report["warnings"] = warnings;
    } catch (const ladder_error& e) {
        report["payload"] = json{{"error", e.code_name()}, {"message", e.what()}};
        report["warnings"] = warnings;
        if (opt.format == "json")
            out << report.dump(2) << "\n";
        else
            err << "error: " << e.what() << "\n";
        return 1;
    }

    if (opt.format == "json") {
        out << report.dump(2) << "\n";
    } else {
        detail::print_text(out, opt.command, report["payload"]);
    }
    return 0;
}

namespace detail {

inline void print_text(std::ostream& out, const std::string& command, const json& payload)
{
    if (command == "validate") {
        out << "ok: " << payload["ladder"]["m"] << "x" << payload["ladder"]["n"] << " ladder, "
            << payload["cells"] << " cells\n";
    } else if (command == "info") {
        const json& c = payload["corners"];
        out << "grid: " << payload["ladder"]["m"] << "x" << payload["ladder"]["n"]
            << "  cells: " << payload["cells"] << "\n";
        out << "h = " << c["h"] << ", lower corners: " << c["lower"].dump() << "\n";
        out << "k = " << c["k"] << ", upper corners: " << c["upper"].dump() << "\n";
        const json& ek = payload["eta_kappa"];
        out << "eta/kappa: (" << ek["eta1"] << ", " << ek["eta2"] << ", " << ek["kappa1"] << ", "
            << ek["kappa2"] << ")\n";
        out << "shape: " << payload["shape"].dump() << "\n";
    } else if (command == "classgroup") {
        out << "rank Cl = " << payload["rank"] << "  (h = " << payload["h"] << ", k = " << payload["k"]
            << ")\n";
        out << "basis:";
        for (const auto& b : payload["basis"]) out << " " << b.get<std::string>();
        out << "\ngenerators:\n";
        for (auto it = payload["generators"].begin(); it != payload["generators"].end(); ++it)
            out << "  " << it.key() << " = " << it.value().dump() << "\n";
        out << "relations [q_i] + [q_i'] + sum_{I_i} [p_j] = 0;  [q_i'] =\n";
        for (const auto& r : payload["qprime_relations"])
            out << "  i=" << r["index"] << ": " << r["qprime_class"].dump() << "\n";
    } else if (command == "canonical") {
        out << "lambda = " << payload["lambda"].dump() << "\n";
        out << "delta  = " << payload["delta"].dump() << "\n";
        out << "i_j    = " << payload["ij"].dump() << "\n";
        out << "omega  = " << payload["omega"].dump() << "\n";
        out << "gorenstein: " << (payload["gorenstein"].get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "classify") {
        out << "status: " << payload["status"].get<std::string>() << "\n";
        if (payload.contains("classes")) {
            out << "classes (" << payload["size"] << "):";
            for (const auto& c : payload["classes"]) out << " " << c.dump();
            out << "\n";
        }
        if (payload.contains("bound")) out << "bound: " << payload["bound"] << "\n";
        if (payload.contains("reason")) out << "reason: " << payload["reason"].get<std::string>() << "\n";
        for (const auto& e : payload["trace"])
            out << "  trace " << e["anchor"].get<std::string>() << ": " << e["data"].dump() << "\n";
    } else if (command == "candidates") {
        out << "branch: " << payload["branch"].get<std::string>() << "\n";
        for (const auto& c : payload["candidates"]) {
            out << c["label"].get<std::string>() << " (from " << c["origin"].get<std::string>()
                << "): class " << c["class"].dump() << (c["live"].get<bool>() ? "  LIVE" : "  dead")
                << "\n";
            for (const auto& sc : c["side_conditions"])
                out << "    [" << (sc["satisfied"].get<bool>() ? "x" : " ") << "] "
                    << sc["description"].get<std::string>() << "\n";
        }
    } else if (command == "witness") {
        for (const auto& e : payload["entries"])
            out << e["anchor"].get<std::string>() << ": " << e["data"].dump() << "\n";
    } else if (command == "spine" || command == "reflect" || command == "strip") {
        out << payload["grid"].get<std::string>();
        if (payload.contains("removed")) out << "removed: " << payload["removed"].dump() << "\n";
        if (payload.contains("corners")) out << "corners: " << payload["corners"].dump() << "\n";
    }
}

} // namespace detail

} // namespace ladder::cli
