// ───────────────────────────────────────────────────────────────────────────
// sat.hpp — satisfiability of quantifier-free contact formulas.
//
// A quantifier-free contact formula is satisfiable in some contact algebra
// iff it is satisfiable in the dual algebra of a finite 1-step frame whose
// edge classes are pairs.  That collapses the search space to something a
// DPLL loop over the formula's atoms can walk: the solver picks a truth
// value for every inequality atom (the Boolean abstraction) and then asks a
// decidable theory question — can this set of positive and negative atoms be
// realized by a disjoint union of two-point cliques?
//
// The theory check is where all the real content lives; see sat.cpp for the
// pair-witness construction and the argument that witnesses for distinct
// negative atoms never interact.
// ───────────────────────────────────────────────────────────────────────────
#pragma once

#include <cstdint>
#include <optional>

#include "s2ic/frames.hpp"
#include "s2ic/limits.hpp"
#include "s2ic/syntax.hpp"

namespace s2ic {

// ── results ────────────────────────────────────────────────────────────────

enum class SatStatus { Sat, Unsat };

struct SatStats {
    uint64_t assignments = 0;    // DPLL nodes explored (decisions + leaves)
    uint64_t theory_checks = 0;  // pair-witness feasibility checks run
    uint64_t learned = 0;        // blocking clauses recorded
};

struct SatResult {
    SatStatus status = SatStatus::Unsat;
    std::optional<KripkeModel> model;  // present iff status == Sat
    SatStats stats;
};

// Decides satisfiability of an equation-free quantifier-free contact
// formula.  A Sat result carries a model that is a disjoint union of
// two-point cliques (duplicated points when no negative atom is in play);
// the model passes model_check and is_one_step by construction, and the
// first model found is deterministic for a fixed input.  Throws
// std::invalid_argument on equations and ResourceLimitError when the
// configured atom/variable/time budget runs out.
SatResult satisfiable(const FormPtr& phi, const Limits& limits = Limits{});

struct EntailResult {
    bool holds = false;
    std::optional<KripkeModel> countermodel;  // present iff !holds
    SatStats stats;
};

// Decides phi ⊨ psi over contact algebras by testing phi ∧ ¬psi for
// unsatisfiability.  Equations in either input are rewritten to atoms first,
// so callers may pass formulas straight from the parser.
EntailResult entails(const FormPtr& phi, const FormPtr& psi,
                     const Limits& limits = Limits{});

// ── independent reference oracle ───────────────────────────────────────────

// Decides satisfiability by brute force: every reflexive-symmetric frame
// with at most max_points points (all adjacency patterns over labeled
// points), every valuation of the formula's variables.  Completely
// independent of the DPLL/theory-check pipeline above — this is the
// ground-truth cross-check for randomized testing, not a production path.
// Handles equations natively.  Enumeration order (point count ascending,
// edge pattern ascending, valuation ascending) fixes the first model.
// Throws ResourceLimitError when the frame/valuation product is too large
// to enumerate or the time budget expires.
SatResult brute_force_oracle(const FormPtr& phi, int max_points = 4,
                             const Limits& limits = Limits{});

}  // namespace s2ic
