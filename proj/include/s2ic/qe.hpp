// ───────────────────────────────────────────────────────────────────────────
// qe.hpp — quantifier elimination over existentially closed contact
// algebras.
//
// eliminate(φ, ȳ, x̄) returns a quantifier-free formula over x̄ that is
// equivalent to ∃ȳ φ in every existentially closed contact algebra.  The
// engine reasons with pair types: pairs of valuations over x̄ ∪ ȳ tagged
// with which basis atoms (φ's own atoms followed by the minterm atoms over
// x̄) their two-point clique satisfies.  Models decompose into such
// cliques, an atom holds in a disjoint union iff it holds in every
// component, so the basis-atom profile of an assembled model is the
// intersection of its components' signatures.  The construction enumerates
// exactly the reachable intersections; see qe.cpp.
//
// The pair-type table and the two-point models behind it are exposed so
// tests can cross-check cached signatures against the model checker and
// validate the intersection law on disjoint unions.
// ───────────────────────────────────────────────────────────────────────────
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s2ic/frames.hpp"
#include "s2ic/limits.hpp"
#include "s2ic/syntax.hpp"

namespace s2ic {

// ── pair types ──────────────────────────────────────────────────────────────

// One representative pair of valuations (bit i = value of vars[i] in the
// owning table) plus its cached signature, split into the two basis blocks.
struct PairType {
    uint64_t v = 0, w = 0;
    std::vector<bool> phi_sig;      // truth of each formula atom in the clique
    std::vector<bool> minterm_sig;  // truth of each minterm atom in the clique
};

struct PairTypeTable {
    std::vector<std::string> vars;       // kept variables first, then eliminated
    std::vector<FormPtr> phi_atoms;      // input atoms, first-occurrence order
    std::vector<FormPtr> minterm_atoms;  // canonical minterm-atom basis over kept
    std::vector<PairType> types;         // deduplicated by signature, first
                                         // representative in (v, w) scan order
};

// Enumerates the deduplicated pair types of φ's atoms over kept ∪
// eliminated.  Validates that the two variable lists are disjoint and cover
// vars(φ); throws ResourceLimitError when the valuation-pair space or the
// type count exceeds the configured budget.
PairTypeTable enumerate_pair_types(const FormPtr& phi,
                                   const std::vector<std::string>& eliminated,
                                   const std::vector<std::string>& kept,
                                   const Limits& limits = Limits{});

// The two-point clique model a pair type describes (point names "a", "b").
KripkeModel pair_type_model(const PairTypeTable& table, const PairType& type);

// ── elimination ─────────────────────────────────────────────────────────────

struct QeStats {
    uint64_t pair_types = 0;      // deduplicated pair types
    uint64_t classes = 0;         // propositional atom classes examined
    uint64_t realizable = 0;      // classes that contributed a disjunct
    uint64_t max_frontier = 0;    // widest killer-choice frontier encountered
};

struct QeResult {
    FormPtr formula;  // quantifier-free, vars ⊆ kept; ⊥ when nothing realizes φ
    QeStats stats;
};

// Quantifier elimination: the returned formula mentions only kept variables,
// is built deterministically (identical text for identical inputs), and is
// equivalent to ∃ eliminated . φ over existentially closed contact algebras.
// φ must be equation-free (normalize_atoms first).
QeResult eliminate(const FormPtr& phi, const std::vector<std::string>& eliminated,
                   const std::vector<std::string>& kept, const Limits& limits = Limits{});

// Logic-preserving cleanup: drops disjuncts entailed by other disjuncts and
// conjuncts entailed by their siblings, to a fixpoint.  The result is
// certified equivalent to the input by two entailment checks (logic_error
// if certification ever failed).  Deterministic and idempotent.
FormPtr simplify(const FormPtr& psi, const Limits& limits = Limits{});

}  // namespace s2ic
