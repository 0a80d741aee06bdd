#pragma once

// Command-line front end. run() takes argv and two streams so tests can
// drive it in-process. Exit codes: 0 ok, 1 property failure, 2 input or
// usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "vkb/ald.hpp"
#include "vkb/bracket.hpp"
#include "vkb/diagram.hpp"
#include "vkb/gauss_io.hpp"
#include "vkb/json_io.hpp"
#include "vkb/skein.hpp"
#include "vkb/verify.hpp"

namespace vkb::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_input = 2;

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Crossing limit from VKB_MAX_CROSSINGS, else the library default.
inline int default_max_crossings_from_env() {
    const char* v = std::getenv("VKB_MAX_CROSSINGS");
    if (v == nullptr || *v == '\0') return default_max_crossings;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0 || n > 62) throw input_error(std::string("VKB_MAX_CROSSINGS is not a crossing count: ") + v);
    return static_cast<int>(n);
}

struct options {
    std::string file;
    std::string code;
    std::string format = "auto";
    bool json = false;
    int max_crossings = default_max_crossings;
    unsigned workers = 1;
    int order = 5;
    bool coloring = false;

    // enumeration
    int enum_min = 0;
    int enum_max = 4;
    int witness_max = exhaustive_crossing_limit;
    int components = 1;
    std::string dedupe = "none";
    std::string witness_dedupe = "cyclic-relabel";
    std::string filter = "any";
    bool deep = false;

    // fuzz
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    int max_moves = 8;
    int start_crossings = 8;
};

inline std::vector<diagram> read_diagrams(const options& o) {
    std::string text;
    if (!o.code.empty()) {
        text = o.code;
    } else if (o.file.empty()) {
        throw input_error("no input: give FILE or -c CODE");
    } else if (o.file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(o.file);
        if (!in) throw input_error("cannot open " + o.file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const bool pd = o.format == "pd" || (o.format == "auto" && looks_like_pd(text));
    if (pd) return {parse_pd(text)};
    auto ds = o.code.empty() ? parse_gauss_file(text) : std::vector<diagram>{parse_gauss(text)};
    if (ds.empty()) throw input_error("input holds no diagram");
    return ds;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string verdict(const verification_record& r) {
    if (r.colorable)
        return r.congruence_ok ? "colorable; exponent congruence holds" : "VIOLATION: colorable but exponents break the congruence";
    if (congruence_matches(r.congruence, r.components))
        return "not colorable; congruence does not rule out a colorable diagram of this link";
    return "not colorable; congruence rules out any colorable diagram of this link";
}

inline int cmd_polynomial(const options& o, bool normalized, std::ostream& out) {
    const bracket_options bopt{o.max_crossings, o.workers};
    json arr = json::array();
    for (const auto& d : read_diagrams(o)) {
        const auto p = normalized ? f_polynomial(d, bopt) : bracket_parallel(d, o.workers, o.max_crossings);
        if (o.json)
            arr.push_back({{"code", serialize_inline(d)}, {normalized ? "f" : "bracket", to_json(p)}, {"text", to_string(p)}});
        else
            out << to_string(p) << '\n';
    }
    if (o.json) out << arr.dump(2) << '\n';
    return exit_ok;
}

inline int cmd_check(const options& o, std::ostream& out) {
    verify_options vopt;
    vopt.max_crossings = o.max_crossings;
    json arr = json::array();
    int rc = exit_ok;
    bool first = true;
    for (const auto& d : read_diagrams(o)) {
        const auto r = verify_diagram(d, vopt);
        if (!r.congruence_ok) rc = exit_failure;
        const auto change = make_alternating(d);
        if (o.json) {
            auto j = to_json(r);
            j["verdict"] = verdict(r);
            if (change) j["alternating_after_changing"] = *change;
            if (o.coloring)
                if (const auto col = checkerboard_colorable(d))
                    j["coloring"] = coloring_to_json(boundary_regions(build_ald(d)), *col);
            arr.push_back(j);
            continue;
        }
        if (!first) out << '\n';
        first = false;
        out << "code: " << serialize_inline(d) << '\n'
            << "components: " << r.components << '\n'
            << "crossings: " << r.crossings << '\n'
            << "writhe: " << r.writhe << '\n'
            << "genus: " << r.genus << '\n'
            << "colorable: " << yes_no(r.colorable) << '\n'
            << "alternating: " << yes_no(r.alternating) << '\n'
            << "alternatable: " << yes_no(r.alternatable);
        if (change && !change->empty()) {
            out << " (change";
            for (int id : *change) out << ' ' << id;
            out << ')';
        }
        out << '\n'
            << "f: " << to_string(r.f) << '\n'
            << "congruence: " << to_string(r.congruence) << '\n'
            << "verdict: " << verdict(r) << '\n';
    }
    if (o.json) out << arr.dump(2) << '\n';
    return rc;
}

inline int cmd_verify(const options& o, std::ostream& out) {
    verify_options vopt;
    vopt.deep = true;
    vopt.max_crossings = o.max_crossings;
    vopt.series_order = o.order;
    const bracket_options bopt{o.max_crossings, 1};
    json arr = json::array();
    int rc = exit_ok;
    bool first = true;
    for (const auto& d : read_diagrams(o)) {
        const auto r = verify_diagram(d, vopt);
        if (!r.ok()) rc = exit_failure;
        std::vector<skein_report> sk;
        std::vector<finite_type_report> ft;
        for (int id = 1; id <= d.crossing_count(); ++id) {
            sk.push_back(skein_identity_check(d, id, bopt));
            ft.push_back(finite_type_recursion_check(d, id, o.order, bopt));
        }
        const auto spectrum = index_spectrum(d, o.max_crossings);
        const auto toggles = toggle_deltas(d, o.max_crossings);
        if (o.json) {
            auto j = to_json(r);
            j["index_spectrum"] = spectrum;
            j["toggle_deltas"] = toggles;
            json crossings = json::array();
            for (std::size_t i = 0; i < sk.size(); ++i)
                crossings.push_back({{"splice", to_json(sk[i])}, {"series", to_json(ft[i])}});
            j["crossings"] = crossings;
            arr.push_back(j);
            continue;
        }
        if (!first) out << '\n';
        first = false;
        out << "code: " << serialize_inline(d) << '\n' << "f: " << to_string(r.f) << '\n';
        for (std::size_t i = 0; i < sk.size(); ++i) {
            const auto& s = sk[i];
            out << "crossing " << s.crossing << " (" << (s.sign > 0 ? '+' : '-') << "): k=" << s.k << " ell=" << s.ell
                << " splice recursion " << (s.ok() ? "holds" : "FAILS") << ", difference identity "
                << (ft[i].difference_identity_holds ? "holds" : "FAILS") << ", series convention "
                << ft[i].convention() << '\n';
        }
        out << "index spectrum: {";
        bool sep = false;
        for (int v : spectrum) {
            out << (sep ? "," : "") << v;
            sep = true;
        }
        out << "}\ntoggle deltas: {";
        sep = false;
        for (int v : toggles) {
            out << (sep ? "," : "") << v;
            sep = true;
        }
        out << "}\nresult: ";
        if (r.ok()) {
            out << "ok\n";
        } else {
            out << "FAILED:";
            for (const auto& f : r.failures()) out << ' ' << f;
            out << '\n';
        }
    }
    if (o.json) out << arr.dump(2) << '\n';
    return rc;
}

inline enum_spec spec_from(const options& o, int max_crossings, const std::string& dedupe) {
    enum_spec s;
    s.min_crossings = o.enum_min;
    s.max_crossings = max_crossings;
    s.max_components = o.components;
    s.dedupe = dedupe == "none" ? dedupe_mode::none : dedupe_mode::cyclic_relabel;
    s.filter = o.filter == "colorable" ? enum_filter::colorable
               : o.filter == "alternating" ? enum_filter::alternating
                                           : enum_filter::any;
    return s;
}

inline int cmd_sweep(const options& o, std::ostream& out) {
    sweep_options sopt;
    sopt.workers = o.workers;
    sopt.verify.deep = o.deep;
    sopt.verify.series_order = o.order;
    const auto s = sweep(spec_from(o, o.enum_max, o.dedupe), sopt);
    if (o.json) {
        out << to_json(s).dump(2) << '\n';
    } else {
        out << "diagrams: " << s.diagrams << '\n'
            << "colorable: " << s.colorable << '\n'
            << "alternating: " << s.alternating << '\n'
            << "alternatable: " << s.alternatable << '\n'
            << "classical: " << s.classical << '\n';
        for (const auto& [k, v] : s.by_congruence) out << "congruence " << k << ": " << v << '\n';
        if (s.deep)
            out << "splice sites: " << s.skein_sites << " (positive " << s.positive_sites << ", negative "
                << s.negative_sites << ", ell nonzero " << s.ell_nonzero_sites << ")\n";
        for (const auto& w : s.mixed_witnesses) out << "mixed witness: " << w << '\n';
        out << "failures: " << s.failure_count << '\n';
        for (const auto& f : s.failures) {
            out << "  " << f.code << ':';
            for (const auto& c : f.checks) out << ' ' << c;
            out << '\n';
        }
        out << "seconds: " << s.seconds << '\n';
    }
    return s.ok() ? exit_ok : exit_failure;
}

inline int cmd_witness(const options& o, std::ostream& out) {
    const auto spec = spec_from(o, o.witness_max, o.witness_dedupe);
    const auto w = find_nonalternating_form_witness(spec, bracket_options{o.max_crossings, o.workers});
    if (o.json) {
        out << to_json(w).dump(2) << '\n';
    } else if (w.witness) {
        out << "witness: " << serialize_inline(*w.witness) << '\n'
            << "stream: " << to_string(w.stage) << '\n'
            << "genus: " << surface_genus(*w.witness) << '\n'
            << "f: " << to_string(w.f) << '\n'
            << "scanned: " << w.scanned << '\n';
    } else {
        out << "no witness with at most " << spec.max_crossings << " crossings (scanned " << w.scanned << ")\n";
    }
    if (!o.json)
        out << "classical knots scanned: " << w.classical_scanned << ", counterexamples among them: "
            << w.classical_counterexamples << '\n';
    return exit_ok;
}

inline int cmd_fuzz(const options& o, std::ostream& out) {
    fuzz_options f;
    f.seed = o.seed;
    f.trials = o.trials;
    f.max_moves = o.max_moves;
    f.max_start_crossings = o.start_crossings;
    f.max_components = o.components;
    const auto r = fuzz_invariance(f);
    if (o.json) {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << "trials: " << r.trials << '\n' << "moves: " << r.moves << '\n';
        for (std::size_t k = 0; k < r.by_kind.size(); ++k)
            out << "  " << to_string(static_cast<move_kind>(k)) << ": " << r.by_kind[k] << '\n';
        out << "f mismatches: " << r.f_mismatches << '\n'
            << "congruence violations: " << r.congruence_violations << '\n'
            << "R1 writhe changes tracked: " << r.r1_writhe_tracked << " (mismatches " << r.r1_writhe_mismatches
            << ")\n";
        for (const auto& s : r.failures) out << "  " << s << '\n';
    }
    return r.ok() ? exit_ok : exit_failure;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    options o;
    try {
        o.max_crossings = default_max_crossings_from_env();
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    o.workers = std::max(1U, std::thread::hardware_concurrency());

    CLI::App app{"Kauffman bracket, f-polynomial and checkerboard colorability of virtual link diagrams", "vkb"};
    app.require_subcommand(1, 1);

    auto add_input = [&o](CLI::App* sub) {
        sub->add_option("file", o.file, "Diagram file (Gauss code or PD); - reads stdin");
        sub->add_option("-c,--code", o.code, "Inline Gauss code, ';' between components");
        sub->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"gauss", "pd", "auto"}));
        sub->add_option("--max-crossings", o.max_crossings, "Refuse diagrams with more crossings")
            ->check(CLI::Range(0, 62));
    };
    auto add_common = [&o](CLI::App* sub) {
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
    };
    // for sweep and witness --max-crossings bounds the enumeration
    auto add_enum = [&o](CLI::App* sub, int& max, std::string& dedupe) {
        sub->add_option("--max-crossings", max, "Largest crossing count enumerated")->check(CLI::Range(0, 64));
        sub->add_option("--min-crossings", o.enum_min, "Smallest crossing count enumerated")->check(CLI::Range(0, 64));
        sub->add_option("--components", o.components, "Enumerate up to this many components")
            ->check(CLI::Range(1, 16));
        sub->add_option("--dedupe", dedupe, "Orbit dedupe")->check(CLI::IsMember({"none", "cyclic-relabel"}));
        sub->add_option("--filter", o.filter, "Restrict the stream")
            ->check(CLI::IsMember({"any", "colorable", "alternating"}));
    };

    auto* fpoly = app.add_subcommand("fpoly", "Print the f-polynomial of each diagram");
    add_input(fpoly);
    add_common(fpoly);
    auto* brk = app.add_subcommand("bracket", "Print the Kauffman bracket of each diagram");
    add_input(brk);
    add_common(brk);
    auto* check = app.add_subcommand("check", "Colorability, alternation and the congruence verdict");
    add_input(check);
    add_common(check);
    check->add_flag("--coloring", o.coloring, "Include a coloring witness in JSON output");
    auto* ver = app.add_subcommand("verify", "Splice recursion, state index and series checks per diagram");
    add_input(ver);
    add_common(ver);
    ver->add_option("--order", o.order, "Series order")->check(CLI::Range(0, 12));
    auto* sw = app.add_subcommand("sweep", "Exhaustive verification over small Gauss codes");
    add_common(sw);
    add_enum(sw, o.enum_max, o.dedupe);
    sw->add_flag("--deep", o.deep, "Also run the per-crossing and per-state checks");
    sw->add_option("--order", o.order, "Series order for --deep")->check(CLI::Range(0, 12));
    auto* wit = app.add_subcommand("witness", "Search for a diagram whose f is not of alternating form");
    add_common(wit);
    add_enum(wit, o.witness_max, o.witness_dedupe);
    auto* fz = app.add_subcommand("fuzz", "Random Reidemeister rewrites; f must not change");
    add_common(fz);
    fz->add_option("--trials", o.trials, "Number of random diagrams");
    fz->add_option("--seed", o.seed, "Random seed");
    fz->add_option("--max-moves", o.max_moves, "Moves per diagram")->check(CLI::Range(1, 1000));
    fz->add_option("--start-crossings", o.start_crossings, "Largest starting diagram")->check(CLI::Range(0, 12));
    fz->add_option("--components", o.components, "Largest component count")->check(CLI::Range(1, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*fpoly) return cmd_polynomial(o, true, out);
        if (*brk) return cmd_polynomial(o, false, out);
        if (*check) return cmd_check(o, out);
        if (*ver) return cmd_verify(o, out);
        if (*sw) return cmd_sweep(o, out);
        if (*wit) return cmd_witness(o, out);
        if (*fz) return cmd_fuzz(o, out);
    } catch (const diagram_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_input;
}

} // namespace vkb::cli
