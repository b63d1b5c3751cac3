// ───────────────────────────────────────────────────────────────────────────
// admit.hpp — the admissibility pipeline for premise/conclusion rules.
//
// A rule F / G (context variables x̄, premise parameters p̄) is admissible
// iff the sentence  ∀x̄,z (G ≰ z ⇒ ∃p̄ F ≰ z)  holds in the existentially
// closed contact algebras.  The pipeline makes that decidable:
//
//   1. pi2_matrix: encode both inequations over a fresh z, flatten the
//      strict implications to witness variables, split the witnesses by
//      0/1 case analysis — each side becomes a disjunction of
//      quantifier-free contact branches.
//   2. eliminate (module qe) removes the premise parameters from every
//      consequent branch.  The existential distributes over the branch
//      disjunction, and the antecedent mentions no parameters, so the
//      whole sentence reduces to the universal closure of
//          ψ  =  ⋀ (antecedent branch ⇒ ⋁ eliminated consequent branches).
//   3. satisfiable(¬ψ) (module sat) settles validity: Unsat means the rule
//      is admissible, and a model of ¬ψ is a finite countermodel that
//      model_check re-verifies before it is reported.
//
// s2ic_valid decides plain validity of a modal formula over the simple
// algebras by the same flatten/branch/SAT route, and builtin_rules() ships
// the bundled example rules.
// ───────────────────────────────────────────────────────────────────────────
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "s2ic/frames.hpp"
#include "s2ic/limits.hpp"
#include "s2ic/qe.hpp"
#include "s2ic/sat.hpp"
#include "s2ic/syntax.hpp"

namespace s2ic {

// ── the quantifier-free matrix ──────────────────────────────────────────────

struct Pi2Matrix {
    std::vector<std::string> kept;        // context variables plus the fresh z
    std::vector<std::string> eliminated;  // premise parameters (the flattening
                                          // witnesses are already resolved)
    std::string zvar;                     // the fresh variable's name

    // The rule's matrix is equivalent to ⋁ antecedents ⇒ ⋁ consequents with
    // the existential over `eliminated` scoped to each consequent branch.
    std::vector<FormPtr> antecedents;  // over kept; branches of G ≰ z
    std::vector<FormPtr> consequents;  // over kept ∪ eliminated; of F ≰ z

    // All antecedent/consequent combinations (antecedent-major order).
    std::vector<std::pair<FormPtr, FormPtr>> branch_pairs() const;
};

// Builds the matrix for a well-formed rule.  z is named "z" unless that
// collides with a rule variable ("z2", "z3", … then).
Pi2Matrix pi2_matrix(const Pi2Rule& rule);

// ── admissibility ───────────────────────────────────────────────────────────

enum class Verdict { Admissible, NotAdmissible };

struct AdmitStats {
    uint64_t antecedent_branches = 0;
    uint64_t consequent_branches = 0;
    uint64_t branches_eliminated = 0;  // consequent branches completed by QE
    uint64_t qe_pair_types = 0;        // accumulated over branches
    uint64_t qe_classes = 0;
    uint64_t sat_assignments = 0;
    uint64_t sat_theory_checks = 0;
    double time_ms = 0;
};

// Per-branch elimination record for --trace consumers.
struct BranchTrace {
    int branch = 0;                // consequent branch index
    std::string consequent;        // the branch before elimination
    std::string existential_part;  // conjuncts mentioning eliminated variables
    std::string qe_result;         // elimination result for that part
    std::string residue;           // kept-only conjuncts carried unchanged
    QeStats qe;
    bool surviving = false;        // eliminated branch is not ⊥
};
using TraceSink = std::function<void(const BranchTrace&)>;

struct AdmissibilityReport {
    Verdict verdict = Verdict::Admissible;
    FormPtr eliminated;  // ψ — the rule is admissible iff ∀ψ holds
    std::optional<KripkeModel> countermodel;  // present iff NotAdmissible
    bool countermodel_verified = false;       // model_check(countermodel, ¬ψ)
    AdmitStats stats;
};

// Decides admissibility.  Deterministic for a fixed rule.  On
// ResourceLimitError the partially filled *progress (when given) carries
// the statistics gathered so far.
AdmissibilityReport decide_admissible(const Pi2Rule& rule, const Limits& limits = Limits{},
                                      AdmitStats* progress = nullptr,
                                      const TraceSink& trace = TraceSink{});

// ── validity over simple algebras ───────────────────────────────────────────

struct ValidityResult {
    bool valid = false;
    std::optional<KripkeModel> countermodel;  // eval_modal(ψ) is not the full
                                              // set there; present iff invalid
};

// psi is valid iff psi = ⊤ holds in every simple algebra; decided as Unsat
// of the branch disjunction of the flattened inequation ⊤ ≰ psi.
ValidityResult s2ic_valid(const ModalPtr& psi, const Limits& limits = Limits{});

// ── bundled rules ───────────────────────────────────────────────────────────

// The example rules shipped with the toolkit: rho9, rho_s1, rho_s2, rho_s3
// and not_admissible_fixture (same content as the rules/ directory).
const std::vector<Pi2Rule>& builtin_rules();
std::optional<Pi2Rule> find_builtin_rule(const std::string& name);

}  // namespace s2ic
