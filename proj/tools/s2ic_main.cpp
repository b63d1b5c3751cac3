// ───────────────────────────────────────────────────────────────────────────
// s2ic — command-line front end for the decision toolkit.
//
//   s2ic sat "FORMULA"              satisfiability over contact algebras
//   s2ic valid "FORMULA"            validity over the simple algebras
//   s2ic qe "FORMULA" --drop p,q    quantifier elimination
//   s2ic admit RULE                 admissibility of a premise/conclusion rule
//   s2ic frame dual|cover|amalgam|minext|factor|split|quotient …
//
// Exit codes: 0 completed, 1 internal inconsistency (oracle disagreement or
// a failed self-verification), 2 parse/usage error, 3 resource limit hit
// (with partial statistics when available).  --json switches every command
// to a schema-tagged JSON report; --no-timing zeroes the time_ms fields so
// reruns are byte-identical.
// ───────────────────────────────────────────────────────────────────────────

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "s2ic/admit.hpp"
#include "s2ic/frames.hpp"
#include "s2ic/limits.hpp"
#include "s2ic/qe.hpp"
#include "s2ic/report.hpp"
#include "s2ic/sat.hpp"
#include "s2ic/syntax.hpp"
#include "s2ic/transform.hpp"

namespace {

using namespace s2ic;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct Options {
    bool json = false;
    bool no_timing = false;
    double timeout_s = 3600.0;
    int max_atoms = 512;
    int max_frame_size = 16;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Limits make_limits(const Options& opts) {
    Limits lim;
    lim.timeout_s = opts.timeout_s;
    lim.max_atoms = opts.max_atoms;
    return lim;
}

// ── small input helpers ──────────────────────────────────────────────────────

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

std::string first_word(const std::string& text) {
    std::istringstream in(text);
    std::string w;
    in >> w;
    return w;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        // Trim surrounding blanks so "a, b" and "a,b" agree.
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

// Frame arguments are a file path or the inline `frame …; points …;` text.
ContactFrame load_frame(const std::string& arg, const Options& opts) {
    std::string text = first_word(arg) == "frame" ? arg : slurp(arg);
    ContactFrame f = parse_frame(text);
    if (f.points.size() > static_cast<size_t>(opts.max_frame_size))
        throw ResourceLimitError("frame", "frame '" + f.name + "' has " +
                                              std::to_string(f.points.size()) +
                                              " points; --max-frame-size is " +
                                              std::to_string(opts.max_frame_size));
    return f;
}

// ── scenario files (frames plus maps between them) ───────────────────────────
//
// Statements start at a line whose first word is `frame` or `map` and run to
// the next such line.  Frame statements use the frame text format; a map
// statement is
//     map NAME DOMFRAME CODFRAME a>x b>y …
// with one assignment per domain point.

struct Scenario {
    std::map<std::string, ContactFrame> frames;
    std::vector<std::pair<std::string, StableMap>> maps;  // in file order
};

Scenario parse_scenario(const std::string& text, const Options& opts) {
    std::vector<std::string> statements;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line = line.substr(0, pos);
            std::string head = first_word(line);
            if (head == "frame" || head == "map")
                statements.push_back(line);
            else if (!statements.empty())
                statements.back() += "\n" + line;
            else if (!head.empty())
                throw std::invalid_argument(
                    "scenario files start with a 'frame' or 'map' statement");
        }
    }

    Scenario sc;
    for (const std::string& stmt : statements) {
        if (first_word(stmt) == "frame") {
            ContactFrame f = parse_frame(stmt);
            if (f.points.size() > static_cast<size_t>(opts.max_frame_size))
                throw ResourceLimitError("frame", "frame '" + f.name + "' has " +
                                                      std::to_string(f.points.size()) +
                                                      " points; --max-frame-size is " +
                                                      std::to_string(opts.max_frame_size));
            sc.frames[f.name] = f;
            continue;
        }
        std::istringstream in(stmt);
        std::string kw, name, dom_name, cod_name;
        in >> kw >> name >> dom_name >> cod_name;
        if (name.empty() || dom_name.empty() || cod_name.empty())
            throw std::invalid_argument("map statement needs: map NAME DOM COD a>x …");
        if (!sc.frames.count(dom_name) || !sc.frames.count(cod_name))
            throw std::invalid_argument("map '" + name +
                                        "' refers to a frame not defined above it");
        const ContactFrame& dom = sc.frames.at(dom_name);
        const ContactFrame& cod = sc.frames.at(cod_name);
        std::vector<int> f(dom.points.size(), -1);
        std::string pair;
        while (in >> pair) {
            auto gt = pair.find('>');
            if (gt == std::string::npos || gt == 0 || gt + 1 == pair.size())
                throw std::invalid_argument("map assignment '" + pair +
                                            "' is not of the form point>image");
            int i = dom.index_of(pair.substr(0, gt));
            int j = cod.index_of(pair.substr(gt + 1));
            if (i < 0 || j < 0)
                throw std::invalid_argument("map assignment '" + pair +
                                            "' names an unknown point");
            if (f[static_cast<size_t>(i)] != -1)
                throw std::invalid_argument("map '" + name + "' assigns '" +
                                            pair.substr(0, gt) + "' twice");
            f[static_cast<size_t>(i)] = j;
        }
        for (size_t i = 0; i < f.size(); ++i)
            if (f[i] == -1)
                throw std::invalid_argument("map '" + name + "' leaves point '" +
                                            dom.points[i] + "' without an image");
        StableMap m{dom, cod, f};
        m.validate();
        sc.maps.emplace_back(name, m);
    }
    return sc;
}

const StableMap& pick_map(const Scenario& sc, const std::string& wanted, const char* role) {
    if (sc.maps.empty())
        throw std::invalid_argument("scenario file defines no map statements");
    if (wanted.empty()) return sc.maps.front().second;
    for (const auto& [name, m] : sc.maps)
        if (name == wanted) return m;
    throw std::invalid_argument(std::string("no map named '") + wanted + "' for --" + role);
}

// ── output helpers ───────────────────────────────────────────────────────────

void emit(const Options& opts, const Json& report, const std::string& text) {
    if (opts.json)
        std::cout << render(report, opts.no_timing) << "\n";
    else
        std::cout << text << "\n";
}

std::string set_text(const ContactFrame& frame, const PointSet& ps) {
    std::string out = "{";
    bool first = true;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (!ps[i]) continue;
        if (!first) out += ", ";
        out += frame.points[i];
        first = false;
    }
    return out + "}";
}

std::string model_text(const KripkeModel& model) {
    std::ostringstream os;
    os << "  " << frame_to_text(model.frame);
    for (const auto& [var, ps] : model.valuation)
        os << "\n  " << var << " = " << set_text(model.frame, ps);
    return os.str();
}

std::string map_text(const StableMap& m) {
    std::ostringstream os;
    os << m.dom.name << " -> " << m.cod.name << ":";
    for (size_t i = 0; i < m.dom.points.size(); ++i)
        os << " " << m.dom.points[i] << ">" << m.cod.points[static_cast<size_t>(m.f[i])];
    return os.str();
}

// ── command bodies ───────────────────────────────────────────────────────────

int run_sat(const Options& opts, const std::string& formula, bool oracle_check,
            int oracle_points) {
    Limits lim = make_limits(opts);
    FormPtr f = normalize_atoms(parse_contact(formula));
    auto t0 = std::chrono::steady_clock::now();
    SatResult res = satisfiable(f, lim);
    Json j = sat_report(res, ms_since(t0));

    std::ostringstream text;
    text << (res.status == SatStatus::Sat ? "sat" : "unsat");
    if (res.model) text << "\n" << model_text(*res.model);

    bool mismatch = false;
    if (oracle_check) {
        SatResult ref = brute_force_oracle(f, oracle_points, lim);
        mismatch = ref.status != res.status;
        j["oracle"] = Json{{"status", ref.status == SatStatus::Sat ? "sat" : "unsat"},
                           {"points_bound", oracle_points},
                           {"evaluations", ref.stats.assignments},
                           {"agrees", !mismatch}};
        text << "\noracle(" << oracle_points
             << "): " << (ref.status == SatStatus::Sat ? "sat" : "unsat")
             << (mismatch ? "  ** DISAGREES **" : "  (agrees)");
    }
    emit(opts, j, text.str());
    return mismatch ? kExitInternal : kExitOk;
}

int run_valid(const Options& opts, const std::string& formula) {
    Limits lim = make_limits(opts);
    ModalPtr m = parse_modal(formula);
    auto t0 = std::chrono::steady_clock::now();
    ValidityResult res = s2ic_valid(m, lim);
    std::ostringstream text;
    text << (res.valid ? "valid" : "invalid");
    if (res.countermodel) text << "\n" << model_text(*res.countermodel);
    emit(opts, validity_report(res, ms_since(t0)), text.str());
    return kExitOk;
}

int run_qe(const Options& opts, const std::string& formula, const std::string& drop,
           const std::string& keep, bool do_simplify) {
    Limits lim = make_limits(opts);
    FormPtr f = normalize_atoms(parse_contact(formula));
    std::vector<std::string> eliminated = split_list(drop, ',');
    std::vector<std::string> kept = split_list(keep, ',');
    if (kept.empty()) {
        // Default: every variable of the formula that is not being dropped.
        std::set<std::string> vars;
        form_vars(f, vars);
        for (const std::string& e : eliminated) vars.erase(e);
        kept.assign(vars.begin(), vars.end());
    }
    auto t0 = std::chrono::steady_clock::now();
    QeResult res = eliminate(f, eliminated, kept, lim);
    if (do_simplify) res.formula = simplify(res.formula, lim);
    Json j = qe_report(f, res, ms_since(t0));
    if (do_simplify) j["simplified"] = true;

    std::ostringstream text;
    text << pretty(res.formula) << "\n  pair types " << res.stats.pair_types << ", classes "
         << res.stats.classes << ", realizable " << res.stats.realizable;
    emit(opts, j, text.str());
    return kExitOk;
}

std::vector<Pi2Rule> resolve_rules(const std::string& arg) {
    if (auto builtin = find_builtin_rule(arg)) return {*builtin};
    if (first_word(arg) == "rule") return parse_rules(arg);
    if (file_exists(arg)) return parse_rules(slurp(arg));
    throw std::invalid_argument("'" + arg + "' is neither a bundled rule name nor a rule file");
}

Json admit_stats_json(const AdmitStats& st) {
    return Json{{"antecedent_branches", st.antecedent_branches},
                {"branches", st.consequent_branches},
                {"branches_eliminated", st.branches_eliminated},
                {"pair_types", st.qe_pair_types},
                {"classes", st.qe_classes},
                {"sat_assignments", st.sat_assignments},
                {"sat_theory_checks", st.sat_theory_checks},
                {"time_ms", st.time_ms}};
}

int run_admit(const Options& opts, const std::string& rule_arg, bool trace) {
    Limits lim = make_limits(opts);
    std::vector<Pi2Rule> rules = resolve_rules(rule_arg);
    for (const Pi2Rule& rule : rules) {
        AdmitStats progress;
        TraceSink sink;
        if (trace)
            sink = [](const BranchTrace& t) { std::cout << trace_line(t).dump() << "\n"; };
        try {
            AdmissibilityReport rep = decide_admissible(rule, lim, &progress, sink);
            std::ostringstream text;
            text << "rule " << rule.name << ": "
                 << (rep.verdict == Verdict::Admissible ? "admissible" : "not admissible");
            if (rep.countermodel)
                text << "\ncountermodel ("
                     << (rep.countermodel_verified ? "verified" : "NOT VERIFIED")
                     << "):\n" << model_text(*rep.countermodel);
            text << "\n  branches " << rep.stats.consequent_branches << ", pair types "
                 << rep.stats.qe_pair_types << ", sat assignments " << rep.stats.sat_assignments;
            emit(opts, admit_report(rule.name, rep), text.str());
            if (rep.countermodel && !rep.countermodel_verified) return kExitInternal;
        } catch (const ResourceLimitError& e) {
            Json partial = admit_stats_json(progress);
            partial["rule"] = rule.name;
            if (opts.json)
                std::cout << render(limit_report(e.where, e.what(), partial), opts.no_timing)
                          << "\n";
            else
                std::cout << "rule " << rule.name << ": " << e.what() << "\n";
            return kExitLimit;
        }
    }
    return kExitOk;
}

// ── frame command bodies ─────────────────────────────────────────────────────

int run_dual(const Options& opts, const std::string& frame_arg) {
    ContactFrame f = load_frame(frame_arg, opts);
    DualAlgebra d = dual_algebra(f);
    std::ostringstream text;
    text << "dual of " << f.name << ": " << (uint64_t{1} << d.npoints) << " elements, "
         << d.prec.size() << " precedence pairs";
    emit(opts, dual_report(f, d), text.str());
    return kExitOk;
}

int run_cover(const Options& opts, const std::string& frame_arg) {
    ContactFrame f = load_frame(frame_arg, opts);
    Cover c = one_step_cover(f);
    std::ostringstream text;
    text << frame_to_text(c.frame) << "\nmap " << map_text(c.map) << "\none-step: "
         << (is_one_step(c.frame) ? "yes" : "no");
    emit(opts, cover_report(f, c), text.str());
    return kExitOk;
}

int run_amalgam(const Options& opts, const std::string& scenario_path, const std::string& left,
                const std::string& right) {
    Scenario sc = parse_scenario(slurp(scenario_path), opts);
    const StableMap& f = pick_map(sc, left, "left");
    const StableMap* g = nullptr;
    if (!right.empty()) {
        g = &pick_map(sc, right, "right");
    } else {
        // Default: the first map after the left one.
        for (size_t i = 0; i + 1 < sc.maps.size(); ++i)
            if (&sc.maps[i].second == &f) g = &sc.maps[i + 1].second;
        if (!g && sc.maps.size() >= 2) g = &sc.maps[1].second;
    }
    if (!g) throw std::invalid_argument("amalgamation needs two maps into a common frame");
    Amalgam a = pullback_amalgam(f, *g);
    std::ostringstream text;
    text << frame_to_text(a.frame) << "\npi1 " << map_text(a.pi1) << "\npi2 "
         << map_text(a.pi2);
    emit(opts, amalgam_report(a), text.str());
    return kExitOk;
}

int run_minext(const Options& opts, const std::string& frame_arg, const std::string& point,
               const std::string& s1, const std::string& s2, bool connect) {
    ContactFrame f = load_frame(frame_arg, opts);
    MinExtSpec spec{point, split_list(s1, ','), split_list(s2, ','), connect};
    MinimalExtension ext = minimal_extensions(f, spec);
    std::ostringstream text;
    text << frame_to_text(ext.frame) << "\nmap " << map_text(ext.map);
    emit(opts, minext_report(ext), text.str());
    return kExitOk;
}

int run_factor(const Options& opts, const std::string& scenario_path,
               const std::string& which) {
    Scenario sc = parse_scenario(slurp(scenario_path), opts);
    const StableMap& m = pick_map(sc, which, "map");
    std::vector<StableMap> chain = factor_minimal(m);
    std::ostringstream text;
    text << chain.size() << " minimal steps";
    for (const StableMap& step : chain) text << "\n  " << map_text(step);
    emit(opts, factor_report(chain), text.str());
    return kExitOk;
}

int run_split(const Options& opts, const std::string& frame_arg, const std::string& axiom) {
    ContactFrame f = load_frame(frame_arg, opts);
    SplitAxiom which = axiom == "S1" ? SplitAxiom::S1
                                     : (axiom == "S2" ? SplitAxiom::S2 : SplitAxiom::S3);
    SplitCheck check = splitting_check(f, which);
    std::ostringstream text;
    text << axiom << " on " << f.name << ": " << (check.holds ? "holds" : "fails") << " ("
         << check.witnesses.size() << (check.holds ? " premise instances" : " violation")
         << ")";
    emit(opts, split_report(f, which, check), text.str());
    return kExitOk;
}

int run_quotient(const Options& opts, const std::string& frame_arg, const std::string& blocks) {
    ContactFrame f = load_frame(frame_arg, opts);
    std::vector<std::vector<std::string>> parts;
    for (const std::string& block : split_list(blocks, '|')) parts.push_back(split_list(block, ','));
    Quotient q = quotient_by_partition(f, parts);
    std::ostringstream text;
    text << frame_to_text(q.frame) << "\nmap " << map_text(q.map);
    emit(opts, quotient_report(q), text.str());
    return kExitOk;
}

}  // namespace

// ── entry point ──────────────────────────────────────────────────────────────

int main(int argc, char** argv) {
    Options opts;
    std::function<int()> action;

    CLI::App app{"decision toolkit for symmetric strict implication"};
    app.require_subcommand(1);
    app.add_flag("--json", opts.json, "emit a JSON report instead of text");
    app.add_flag("--no-timing", opts.no_timing, "zero time_ms fields for byte-stable output");
    app.add_option("--timeout", opts.timeout_s, "wall-clock budget in seconds")
        ->capture_default_str();
    app.add_option("--max-atoms", opts.max_atoms, "largest atom count accepted")
        ->capture_default_str();
    app.add_option("--max-frame-size", opts.max_frame_size, "largest frame accepted")
        ->capture_default_str();

    // sat
    static std::string sat_formula;
    static bool sat_oracle = false;
    static int sat_oracle_points = 4;
    auto* sat_cmd = app.add_subcommand("sat", "satisfiability of a quantifier-free formula");
    sat_cmd->fallthrough();
    sat_cmd->add_option("formula", sat_formula, "contact-algebra formula")->required();
    sat_cmd->add_flag("--oracle-check", sat_oracle, "cross-check against the enumeration oracle");
    sat_cmd->add_option("--oracle-points", sat_oracle_points, "oracle model size bound")
        ->capture_default_str();
    sat_cmd->callback(
        [&]() { action = [&]() { return run_sat(opts, sat_formula, sat_oracle, sat_oracle_points); }; });

    // valid
    static std::string valid_formula;
    auto* valid_cmd = app.add_subcommand("valid", "validity over the simple algebras");
    valid_cmd->fallthrough();
    valid_cmd->add_option("formula", valid_formula, "modal formula")->required();
    valid_cmd->callback([&]() { action = [&]() { return run_valid(opts, valid_formula); }; });

    // qe
    static std::string qe_formula, qe_drop, qe_keep;
    static bool qe_simplify = false;
    auto* qe_cmd = app.add_subcommand("qe", "eliminate existential variables");
    qe_cmd->fallthrough();
    qe_cmd->add_option("formula", qe_formula, "contact-algebra formula")->required();
    qe_cmd->add_option("--drop", qe_drop, "comma-separated variables to eliminate")->required();
    qe_cmd->add_option("--keep", qe_keep, "comma-separated kept variables (default: the rest)");
    qe_cmd->add_flag("--simplify", qe_simplify, "run the certified simplifier on the result");
    qe_cmd->callback(
        [&]() { action = [&]() { return run_qe(opts, qe_formula, qe_drop, qe_keep, qe_simplify); }; });

    // admit
    static std::string admit_rule;
    static bool admit_trace = false;
    auto* admit_cmd = app.add_subcommand("admit", "admissibility of a premise/conclusion rule");
    admit_cmd->fallthrough();
    admit_cmd->add_option("rule", admit_rule, "bundled rule name, rule file, or inline text")
        ->required();
    admit_cmd->add_flag("--trace", admit_trace, "stream one JSON line per eliminated branch");
    admit_cmd->callback([&]() { action = [&]() { return run_admit(opts, admit_rule, admit_trace); }; });

    // frame …
    auto* frame_cmd = app.add_subcommand("frame", "finite-frame toolkit");
    frame_cmd->require_subcommand(1);
    frame_cmd->fallthrough();

    static std::string fr_arg;
    auto* dual_cmd = frame_cmd->add_subcommand("dual", "dual contact algebra of a frame");
    dual_cmd->fallthrough();
    dual_cmd->add_option("frame", fr_arg, "frame file or inline text")->required();
    dual_cmd->callback([&]() { action = [&]() { return run_dual(opts, fr_arg); }; });

    auto* cover_cmd = frame_cmd->add_subcommand("cover", "1-step cover of a frame");
    cover_cmd->fallthrough();
    cover_cmd->add_option("frame", fr_arg, "frame file or inline text")->required();
    cover_cmd->callback([&]() { action = [&]() { return run_cover(opts, fr_arg); }; });

    static std::string am_path, am_left, am_right;
    auto* am_cmd = frame_cmd->add_subcommand("amalgam", "pullback of two maps into one frame");
    am_cmd->fallthrough();
    am_cmd->add_option("scenario", am_path, "scenario file with frames and maps")->required();
    am_cmd->add_option("--left", am_left, "map name (default: first map)");
    am_cmd->add_option("--right", am_right, "map name (default: second map)");
    am_cmd->callback(
        [&]() { action = [&]() { return run_amalgam(opts, am_path, am_left, am_right); }; });

    static std::string mx_point, mx_s1, mx_s2;
    static bool mx_connect = false;
    auto* mx_cmd = frame_cmd->add_subcommand("minext", "minimal one-point extension");
    mx_cmd->fallthrough();
    mx_cmd->add_option("frame", fr_arg, "frame file or inline text")->required();
    mx_cmd->add_option("--point", mx_point, "point to split")->required();
    mx_cmd->add_option("--s1", mx_s1, "neighbors of the first copy (comma list)");
    mx_cmd->add_option("--s2", mx_s2, "neighbors of the second copy (comma list)");
    mx_cmd->add_flag("--connect", mx_connect, "relate the two copies");
    mx_cmd->callback([&]() {
        action = [&]() { return run_minext(opts, fr_arg, mx_point, mx_s1, mx_s2, mx_connect); };
    });

    static std::string fc_path, fc_map;
    auto* fc_cmd = frame_cmd->add_subcommand("factor", "factor a map into minimal steps");
    fc_cmd->fallthrough();
    fc_cmd->add_option("scenario", fc_path, "scenario file with frames and maps")->required();
    fc_cmd->add_option("--map", fc_map, "map name (default: first map)");
    fc_cmd->callback([&]() { action = [&]() { return run_factor(opts, fc_path, fc_map); }; });

    static std::string sp_axiom;
    auto* sp_cmd = frame_cmd->add_subcommand("split", "exhaustive splitting-condition check");
    sp_cmd->fallthrough();
    sp_cmd->add_option("frame", fr_arg, "frame file or inline text")->required();
    sp_cmd->add_option("--axiom", sp_axiom, "S1, S2 or S3")
        ->required()
        ->check(CLI::IsMember({"S1", "S2", "S3"}));
    sp_cmd->callback([&]() { action = [&]() { return run_split(opts, fr_arg, sp_axiom); }; });

    static std::string qt_blocks;
    auto* qt_cmd = frame_cmd->add_subcommand("quotient", "quotient by a point partition");
    qt_cmd->fallthrough();
    qt_cmd->add_option("frame", fr_arg, "frame file or inline text")->required();
    qt_cmd->add_option("--blocks", qt_blocks, "partition, e.g. \"a,b|c\"")->required();
    qt_cmd->callback([&]() { action = [&]() { return run_quotient(opts, fr_arg, qt_blocks); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        if (opts.json)
            std::cout << render(limit_report(e.where, e.what(), Json{}), opts.no_timing) << "\n";
        else
            std::cout << e.what() << "\n";
        return kExitLimit;
    } catch (const SizeLimitError& e) {
        if (opts.json)
            std::cout << render(limit_report("frame", e.what(), Json{}), opts.no_timing) << "\n";
        else
            std::cout << e.what() << "\n";
        return kExitLimit;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
