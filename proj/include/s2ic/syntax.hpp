// ─────────────────────────────────────────────────────────────────────────────
//  syntax.hpp — abstract syntax for the four object languages of the toolkit
//
//  Four term/formula layers share one design: immutable nodes behind
//  shared_ptr<const ...>, built through factory functions that fold the
//  obvious constant cases.  Structural equality, a total order, hashing and
//  variable collection are provided for each layer.
//
//    * BoolTerm        — Boolean-algebra terms t ::= 0 | 1 | x | !t | t&t |
//                        t|t | t^t | t->t | t<->t
//    * ModalFormula    — modal language with strict implication t ~> u,
//                        universal modality [A]t and its dual <E>t
//    * ContactFormula  — quantifier-free first-order formulas over the atoms
//                        t << u (reachability/precedence) and t == u, with the
//                        propositional connectives ~ /\ \/ => <=>
//    * FoFormula       — first-order skeleton over *modal* terms used while
//                        translating rules: equations s = t, non-ordering
//                        atoms s !<= t, and propositional connectives
//
//  A Pi2Rule packages a named rule F / G with its context variables (xvars)
//  and the fresh parameters being eliminated (pvars).
//
//  Parsing lives in parser.cpp, printing in printer.cpp.  Printed output of
//  every layer re-parses to a structurally equal object.
// ─────────────────────────────────────────────────────────────────────────────
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace s2ic {

// ── Boolean terms ────────────────────────────────────────────────────────────

enum class TermOp : uint8_t { Zero, One, Var, Not, And, Or, Xor, Imp, Iff };

struct BoolTerm;
using TermPtr = std::shared_ptr<const BoolTerm>;

struct BoolTerm {
    TermOp op;
    std::string var;   // TermOp::Var only
    TermPtr a, b;      // unary: a; binary: a, b
};

TermPtr t_zero();
TermPtr t_one();
TermPtr t_var(std::string name);
TermPtr t_not(TermPtr a);
TermPtr t_and(TermPtr a, TermPtr b);
TermPtr t_or(TermPtr a, TermPtr b);
TermPtr t_xor(TermPtr a, TermPtr b);
TermPtr t_imp(TermPtr a, TermPtr b);
TermPtr t_iff(TermPtr a, TermPtr b);
TermPtr t_and(const std::vector<TermPtr>& ts);  // empty ⇒ 1
TermPtr t_or(const std::vector<TermPtr>& ts);   // empty ⇒ 0

int  term_compare(const TermPtr& a, const TermPtr& b);
bool term_equal(const TermPtr& a, const TermPtr& b);
size_t term_hash(const TermPtr& t);
void term_vars(const TermPtr& t, std::set<std::string>& out);
bool eval_term(const TermPtr& t, const std::function<bool(const std::string&)>& val);
TermPtr term_subst(const TermPtr& t, const std::string& var, const TermPtr& repl);

// ── Modal formulas ───────────────────────────────────────────────────────────

enum class ModalOp : uint8_t { Top, Bot, Var, Not, And, Or, Xor, Imp, Iff, Sim, Univ, Diam };

struct ModalFormula;
using ModalPtr = std::shared_ptr<const ModalFormula>;

struct ModalFormula {
    ModalOp op;
    std::string var;
    ModalPtr a, b;
};

ModalPtr m_top();
ModalPtr m_bot();
ModalPtr m_var(std::string name);
ModalPtr m_not(ModalPtr a);
ModalPtr m_and(ModalPtr a, ModalPtr b);
ModalPtr m_or(ModalPtr a, ModalPtr b);
ModalPtr m_xor(ModalPtr a, ModalPtr b);
ModalPtr m_imp(ModalPtr a, ModalPtr b);
ModalPtr m_iff(ModalPtr a, ModalPtr b);
ModalPtr m_sim(ModalPtr a, ModalPtr b);   // a ~> b
ModalPtr m_univ(ModalPtr a);              // [A] a
ModalPtr m_diam(ModalPtr a);              // <E> a
ModalPtr m_and(const std::vector<ModalPtr>& ms);
ModalPtr m_or(const std::vector<ModalPtr>& ms);

int  modal_compare(const ModalPtr& a, const ModalPtr& b);
bool modal_equal(const ModalPtr& a, const ModalPtr& b);
size_t modal_hash(const ModalPtr& m);
void modal_vars(const ModalPtr& m, std::set<std::string>& out);

// Rewrites <E>a to !([A](!a)); the result contains no Diam node.
ModalPtr desugar_diam(const ModalPtr& m);

// ── Quantifier-free contact formulas ────────────────────────────────────────

enum class FormOp : uint8_t { Top, Bot, Atom, Equation, Neg, Conj, Disj, Imp, Iff };

struct ContactFormula;
using FormPtr = std::shared_ptr<const ContactFormula>;

struct ContactFormula {
    FormOp op;
    TermPtr t, u;      // Atom (t << u) and Equation (t == u)
    FormPtr a, b;
};

FormPtr f_top();
FormPtr f_bot();
FormPtr f_atom(TermPtr t, TermPtr u);      // t << u
FormPtr f_equation(TermPtr t, TermPtr u);  // t == u
FormPtr f_neg(FormPtr a);
FormPtr f_conj(FormPtr a, FormPtr b);
FormPtr f_disj(FormPtr a, FormPtr b);
FormPtr f_imp(FormPtr a, FormPtr b);
FormPtr f_iff(FormPtr a, FormPtr b);
FormPtr f_conj(const std::vector<FormPtr>& fs);  // empty ⇒ top
FormPtr f_disj(const std::vector<FormPtr>& fs);  // empty ⇒ bot

int  form_compare(const FormPtr& a, const FormPtr& b);
bool form_equal(const FormPtr& a, const FormPtr& b);
size_t form_hash(const FormPtr& f);
void form_vars(const FormPtr& f, std::set<std::string>& out);

// Distinct atoms of f in first-occurrence order (Atom nodes only; the input
// must be equation-free, see normalize_atoms in transform.hpp).
std::vector<FormPtr> form_atoms(const FormPtr& f);

// Splits a top-level conjunction into its conjuncts (a non-conjunction is a
// singleton list).
std::vector<FormPtr> conjuncts_of(const FormPtr& f);

// ── First-order skeletons over modal terms ──────────────────────────────────

enum class FoOp : uint8_t { Top, Bot, Eq, Nleq, Neg, Conj, Disj, Imp, Iff };

struct FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

struct FoFormula {
    FoOp op;
    ModalPtr s, t;     // Eq (s = t) and Nleq (s !<= t)
    FoPtr a, b;
};

FoPtr fo_top();
FoPtr fo_bot();
FoPtr fo_eq(ModalPtr s, ModalPtr t);
FoPtr fo_nleq(ModalPtr s, ModalPtr t);
FoPtr fo_neg(FoPtr a);
FoPtr fo_conj(FoPtr a, FoPtr b);
FoPtr fo_disj(FoPtr a, FoPtr b);
FoPtr fo_imp(FoPtr a, FoPtr b);
FoPtr fo_iff(FoPtr a, FoPtr b);

// ── Π₂ rules ────────────────────────────────────────────────────────────────

// A rule F/G: from F(x̄, p̄) infer G(x̄), where the parameters p̄ occur only in
// the premise.  validate_rule throws std::invalid_argument when a variable of
// F or G is not declared, or when a parameter leaks into G.
struct Pi2Rule {
    std::string name;
    std::vector<std::string> xvars;  // context variables, shared by F and G
    std::vector<std::string> pvars;  // premise-only parameters
    ModalPtr F;                      // premise
    ModalPtr G;                      // conclusion
};

void validate_rule(const Pi2Rule& rule);

// ── Parsing ─────────────────────────────────────────────────────────────────

struct ParseError : std::runtime_error {
    int line, col;
    std::vector<std::string> expected;
    ParseError(std::string msg, int line_, int col_, std::vector<std::string> exp);
};

TermPtr  parse_term(const std::string& text);
FormPtr  parse_contact(const std::string& text);
ModalPtr parse_modal(const std::string& text);
Pi2Rule  parse_rule(const std::string& text);                // first rule in the text
std::vector<Pi2Rule> parse_rules(const std::string& text);   // every "rule NAME" block

// ── Printing (inverse of parsing, minimal parentheses) ─────────────────────

std::string pretty(const TermPtr& t);
std::string pretty(const ModalPtr& m);
std::string pretty(const FormPtr& f);
std::string pretty(const FoPtr& f);
std::string rule_to_text(const Pi2Rule& rule);

}  // namespace s2ic
