// ───────────────────────────────────────────────────────────────────────────
// report.cpp — JSON builders for the CLI and tests.
// ───────────────────────────────────────────────────────────────────────────

#include "s2ic/report.hpp"

#include <string>
#include <vector>

namespace s2ic {

namespace {

constexpr const char* kSchema = "s2ic-report/1";

// Subset mask into the frame's point names, canonical order.
Json mask_names(const ContactFrame& frame, uint32_t mask) {
    Json arr = Json::array();
    for (size_t i = 0; i < frame.points.size(); ++i)
        if ((mask >> i) & 1) arr.push_back(frame.points[i]);
    return arr;
}

Json stats_json(const SatStats& s) {
    return Json{{"assignments", s.assignments},
                {"theory_checks", s.theory_checks},
                {"learned_clauses", s.learned}};
}

Json stats_json(const QeStats& s) {
    return Json{{"pair_types", s.pair_types},
                {"classes", s.classes},
                {"realizable", s.realizable},
                {"max_frontier", s.max_frontier}};
}

}  // namespace

// ── building blocks ─────────────────────────────────────────────────────────

Json to_json(const ContactFrame& frame) {
    Json edges = Json::array();
    for (const auto& [i, j] : frame.edges)
        edges.push_back(Json::array({frame.points[static_cast<size_t>(i)],
                                     frame.points[static_cast<size_t>(j)]}));
    return Json{{"name", frame.name}, {"points", frame.points}, {"edges", edges}};
}

Json to_json(const KripkeModel& model) {
    Json j = to_json(model.frame);
    Json val = Json::object();
    for (const auto& [var, ps] : model.valuation) {
        Json arr = Json::array();
        for (size_t i = 0; i < ps.size(); ++i)
            if (ps[i]) arr.push_back(model.frame.points[i]);
        val[var] = arr;
    }
    j["valuation"] = val;
    return j;
}

Json to_json(const StableMap& map) {
    Json images = Json::object();
    for (size_t i = 0; i < map.dom.points.size(); ++i)
        images[map.dom.points[i]] = map.cod.points[static_cast<size_t>(map.f[i])];
    return Json{{"dom", to_json(map.dom)}, {"cod", to_json(map.cod)}, {"images", images}};
}

// ── full reports ────────────────────────────────────────────────────────────

Json sat_report(const SatResult& result, double time_ms) {
    Json j{{"schema", kSchema},
           {"command", "sat"},
           {"status", result.status == SatStatus::Sat ? "sat" : "unsat"},
           {"stats", stats_json(result.stats)}};
    j["stats"]["time_ms"] = time_ms;
    if (result.model) j["model"] = to_json(*result.model);
    return j;
}

Json oracle_report(const SatResult& result, double time_ms) {
    Json j{{"schema", kSchema},
           {"command", "sat-oracle"},
           {"status", result.status == SatStatus::Sat ? "sat" : "unsat"},
           {"stats", Json{{"evaluations", result.stats.assignments}, {"time_ms", time_ms}}}};
    if (result.model) j["model"] = to_json(*result.model);
    return j;
}

Json validity_report(const ValidityResult& result, double time_ms) {
    Json j{{"schema", kSchema},
           {"command", "valid"},
           {"status", result.valid ? "valid" : "invalid"},
           {"stats", Json{{"time_ms", time_ms}}}};
    if (result.countermodel) {
        j["countermodel"] = to_json(*result.countermodel);
        j["verified"] = true;  // s2ic_valid checks before returning
    }
    return j;
}

Json qe_report(const FormPtr& input, const QeResult& result, double time_ms) {
    Json j{{"schema", kSchema},
           {"command", "qe"},
           {"input", pretty(input)},
           {"formula", pretty(result.formula)},
           {"stats", stats_json(result.stats)}};
    j["stats"]["time_ms"] = time_ms;
    return j;
}

Json admit_report(const std::string& rule_name, const AdmissibilityReport& report) {
    Json stats{{"branches", report.stats.consequent_branches},
               {"antecedent_branches", report.stats.antecedent_branches},
               {"branches_eliminated", report.stats.branches_eliminated},
               {"classes", report.stats.qe_classes},
               {"pair_types", report.stats.qe_pair_types},
               {"sat_assignments", report.stats.sat_assignments},
               {"sat_theory_checks", report.stats.sat_theory_checks},
               {"time_ms", report.stats.time_ms}};
    Json j{{"schema", kSchema},
           {"command", "admit"},
           {"rule", rule_name},
           {"verdict", report.verdict == Verdict::Admissible ? "admissible" : "not_admissible"},
           {"eliminated", pretty(report.eliminated)},
           {"stats", stats}};
    if (report.countermodel) {
        j["countermodel"] = to_json(*report.countermodel);
        j["verified"] = report.countermodel_verified;
    }
    return j;
}

Json trace_line(const BranchTrace& trace) {
    return Json{{"branch", trace.branch},
                {"consequent", trace.consequent},
                {"existential_part", trace.existential_part},
                {"qe_result", trace.qe_result},
                {"residue", trace.residue},
                {"pair_types", trace.qe.pair_types},
                {"classes", trace.qe.classes},
                {"realizable", trace.qe.realizable},
                {"surviving", trace.surviving}};
}

// ── frame reports ───────────────────────────────────────────────────────────

Json dual_report(const ContactFrame& frame, const DualAlgebra& dual) {
    Json j{{"schema", kSchema},
           {"command", "frame dual"},
           {"frame", to_json(frame)},
           {"elements", uint64_t{1} << dual.npoints},
           {"prec_count", dual.prec.size()}};
    // The full pair listing only when small enough to be readable.
    if (dual.prec.size() <= 4096) {
        Json pairs = Json::array();
        for (const auto& [a, b] : dual.prec)
            pairs.push_back(Json::array({mask_names(frame, a), mask_names(frame, b)}));
        j["prec"] = pairs;
    } else {
        j["prec_truncated"] = true;
    }
    return j;
}

Json cover_report(const ContactFrame& base, const Cover& cover) {
    return Json{{"schema", kSchema},
                {"command", "frame cover"},
                {"base", to_json(base)},
                {"cover", to_json(cover.frame)},
                {"map", to_json(cover.map)},
                {"one_step", is_one_step(cover.frame)}};
}

Json amalgam_report(const Amalgam& amalgam) {
    return Json{{"schema", kSchema},
                {"command", "frame amalgam"},
                {"frame", to_json(amalgam.frame)},
                {"pi1", to_json(amalgam.pi1)},
                {"pi2", to_json(amalgam.pi2)}};
}

Json minext_report(const MinimalExtension& ext) {
    return Json{{"schema", kSchema},
                {"command", "frame minext"},
                {"extension", to_json(ext.frame)},
                {"map", to_json(ext.map)}};
}

Json factor_report(const std::vector<StableMap>& chain) {
    Json steps = Json::array();
    for (const StableMap& step : chain) steps.push_back(to_json(step));
    return Json{{"schema", kSchema}, {"command", "frame factor"}, {"steps", steps}};
}

Json split_report(const ContactFrame& frame, SplitAxiom axiom, const SplitCheck& check) {
    const char* name = axiom == SplitAxiom::S1 ? "S1" : (axiom == SplitAxiom::S2 ? "S2" : "S3");
    Json witnesses = Json::array();
    for (const SplitWitness& w : check.witnesses) {
        Json premise = Json::array();
        for (uint32_t mask : w.premise) premise.push_back(mask_names(frame, mask));
        Json entry{{"premise", premise}, {"resolved", w.resolved}};
        if (w.resolved)
            entry["split"] = Json::array(
                {mask_names(frame, w.split.first), mask_names(frame, w.split.second)});
        witnesses.push_back(entry);
    }
    return Json{{"schema", kSchema},
                {"command", "frame split"},
                {"axiom", name},
                {"frame", to_json(frame)},
                {"holds", check.holds},
                {"witnesses", witnesses}};
}

Json quotient_report(const Quotient& quotient) {
    return Json{{"schema", kSchema},
                {"command", "frame quotient"},
                {"quotient", to_json(quotient.frame)},
                {"map", to_json(quotient.map)}};
}

Json limit_report(const std::string& where, const std::string& detail, const Json& partial) {
    Json j{{"schema", kSchema}, {"status", "resource_limit"}, {"where", where},
           {"detail", detail}};
    if (!partial.is_null()) j["partial"] = partial;
    return j;
}

// ── rendering ───────────────────────────────────────────────────────────────

namespace {

void zero_times(Json& j) {
    if (j.is_object()) {
        for (auto& [key, value] : j.items()) {
            if (key == "time_ms" && value.is_number())
                value = 0;
            else
                zero_times(value);
        }
    } else if (j.is_array()) {
        for (Json& v : j) zero_times(v);
    }
}

}  // namespace

std::string render(const Json& j, bool zero_time) {
    if (!zero_time) return j.dump(2);
    Json copy = j;
    zero_times(copy);
    return copy.dump(2);
}

}  // namespace s2ic
