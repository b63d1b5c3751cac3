// ─────────────────────────────────────────────────────────────────────────────
//  transform.hpp — translations between the syntax layers
//
//  The toolkit moves problems between three languages:
//
//    contact formulas  --tau1-->  first-order skeletons over modal terms
//    FO skeletons      --flatten_modal/tau2_branches-->  contact formulas
//    FO skeletons (equational)  --encode_fo-->  modal formulas
//
//  plus the small rewrites used throughout: equation elimination
//  (normalize_atoms), the minterm atom basis over a kept-variable list,
//  constant folding of trivially true/false atoms, and the projective-unifier
//  transformer on substitutions.
//
//  flatten_modal is the workhorse: it pulls every strict-implication subterm
//  t ~> u out of a first-order skeleton, naming its truth value with a fresh
//  0/1-constrained witness variable, and rewrites the remaining equational
//  structure into contact atoms.  tau2_branches then resolves the witnesses
//  by case split, so that the disjunction of the branches is equivalent to
//  the original skeleton over simple algebras read as contact algebras.
// ─────────────────────────────────────────────────────────────────────────────
#pragma once

#include <cstdint>
#include <map>

#include "s2ic/syntax.hpp"

namespace s2ic {

// Equation elimination: t == u becomes (t ⊕ u) << !(t ⊕ u); other leaves are
// untouched.  The result is equation-free and equivalent over every contact
// algebra (d = 0 iff d << !d).
FormPtr normalize_atoms(const FormPtr& f);

// The conjunction of literals selected by the sign vector eps over kept:
// bit i of eps clear means kept[i] occurs positively, set means negated.
TermPtr minterm_of(const std::vector<std::string>& kept, uint32_t eps);

// All 4^|kept| atoms  m_eps << !m_delta  in canonical order (eps-major, then
// delta), e.g. kept=[x]: x<<!x, x<<x, !x<<!x, !x<<x.
std::vector<FormPtr> minterm_atoms(const std::vector<std::string>& kept);

// Boolean terms embed into the modal language and, when Sim/Univ/Diam-free,
// modal formulas read back as Boolean terms (modal_to_term throws
// std::invalid_argument otherwise).
ModalPtr term_to_modal(const TermPtr& t);
TermPtr modal_to_term(const ModalPtr& m);

// Equational FO skeletons into the modal language: s = t becomes [A](s <-> t),
// connectives pass through.  Throws std::invalid_argument on a Nleq atom —
// rewrite those first via their definition.
ModalPtr encode_fo(const FoPtr& f);

// Contact formulas into FO skeletons: t << u becomes (t ~> u) = 1.  The input
// must be equation-free (run normalize_atoms first).
FoPtr tau1(const FormPtr& f);

// Witness extraction.  fresh lists the introduced 0/1 witnesses w_i in
// introduction order; core is
//
//    /\_i [ (w_i = 1 /\ t_i << u_i) \/ (w_i = 0 /\ ~(t_i << u_i)) ]  /\  psi
//
// with every equation already normalized and every Nleq atom a !<= b turned
// into ~((a /\ !b) << !(a /\ !b)).  Exists-fresh of core is equivalent to the
// input over simple algebras read as contact algebras.  Identical ~>-subterms
// share one witness.  paper_orientation flips each block to pair w_i = 1 with
// u_i << t_i instead (diagnostic only; the default orientation is forced by
// "a << b iff (a ~> b) = 1").
struct Flattened {
    std::vector<std::string> fresh;
    FormPtr core;
};
Flattened flatten_modal(const FoPtr& f, bool paper_orientation = false);

// One branch per 0/1 assignment to fresh (assignment masks in increasing
// order, bit i giving w_i), each constant-folded; branches whose
// propositional skeleton is unsatisfiable are dropped.  The disjunction of
// the branches is equivalent to exists-fresh core in every contact algebra.
std::vector<FormPtr> tau2_branches(const std::vector<std::string>& fresh, const FormPtr& core);

// Substitutions on modal formulas.
using ModalSubst = std::map<std::string, ModalPtr>;
ModalPtr apply_subst(const ModalPtr& m, const ModalSubst& sigma);

// The projective-unifier transformer: given phi and a substitution sigma,
// returns pi with  pi(x) = ([A]phi /\ x) \/ (![A]phi /\ sigma(x))  for each
// variable x of phi, identity elsewhere.  Whenever sigma unifies phi (i.e.
// [A]sigma(phi) is valid), so does pi.
ModalSubst projective_unifier(const ModalPtr& phi, const ModalSubst& sigma);

// Folds atoms decided by the axioms alone: 0 << t and t << 1 (and their
// constant instances) become top, 1 << 0 becomes bot, t == t becomes top, and
// constant equations evaluate.  Everything else is rebuilt unchanged.
FormPtr fold_constants(const FormPtr& f);

// Replaces a term variable throughout a contact formula; atoms are rebuilt
// through the term factories, so constants fold on the way.
FormPtr substitute_term_var(const FormPtr& f, const std::string& var, const TermPtr& repl);

// Satisfiability of the propositional skeleton (atoms read as opaque
// letters).  Conservative: formulas with more than 24 distinct atoms are
// reported satisfiable without checking — callers use this only to discard
// branches, never to certify.
bool propositionally_sat(const FormPtr& f);

}  // namespace s2ic
