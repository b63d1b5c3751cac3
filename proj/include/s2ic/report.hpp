// ───────────────────────────────────────────────────────────────────────────
// report.hpp — machine-readable reports.
//
// Every CLI answer has a JSON form built here.  Reports carry a schema tag
// ("s2ic-report/1"), objects serialize with sorted keys, and all arrays
// follow the canonical orders of the underlying structures, so that two
// runs on the same input produce byte-identical output — except for the
// "time_ms" fields, which render() can zero out on request (the CLI's
// --no-timing switch) for reproducible diffs.
// ───────────────────────────────────────────────────────────────────────────
#pragma once

#include <string>

#include "json.hpp"

#include "s2ic/admit.hpp"
#include "s2ic/frames.hpp"
#include "s2ic/qe.hpp"
#include "s2ic/sat.hpp"
#include "s2ic/syntax.hpp"

namespace s2ic {

using Json = nlohmann::json;

// ── building blocks ─────────────────────────────────────────────────────────

Json to_json(const ContactFrame& frame);
Json to_json(const KripkeModel& model);  // points/edges/valuation arrays
Json to_json(const StableMap& map);      // embeds dom and cod frames

// ── full reports (each carries the schema tag) ──────────────────────────────

Json sat_report(const SatResult& result, double time_ms);
Json oracle_report(const SatResult& result, double time_ms);
Json validity_report(const ValidityResult& result, double time_ms);
Json qe_report(const FormPtr& input, const QeResult& result, double time_ms);
Json admit_report(const std::string& rule_name, const AdmissibilityReport& report);

// One line of --trace output (no schema tag; it is a stream element).
Json trace_line(const BranchTrace& trace);

// Frame-command reports.
Json dual_report(const ContactFrame& frame, const DualAlgebra& dual);
Json cover_report(const ContactFrame& base, const Cover& cover);
Json amalgam_report(const Amalgam& amalgam);
Json minext_report(const MinimalExtension& ext);
Json factor_report(const std::vector<StableMap>& chain);
Json split_report(const ContactFrame& frame, SplitAxiom axiom, const SplitCheck& check);
Json quotient_report(const Quotient& quotient);

// A resource-limit report for exit code 3; `partial` may carry whatever
// statistics were collected before the budget ran out.
Json limit_report(const std::string& where, const std::string& detail, const Json& partial);

// ── rendering ───────────────────────────────────────────────────────────────

// Pretty-prints with two-space indentation and sorted keys.  zero_time
// recursively replaces the value of every "time_ms" member with 0.
std::string render(const Json& j, bool zero_time = false);

}  // namespace s2ic
