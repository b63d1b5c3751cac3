// Pretty-printers: inverse of the parsers, emitting the fewest parentheses
// that re-parse to a structurally equal tree.  Each binary operator carries a
// precedence level; a child is parenthesized when its level is looser than
// the position requires, with the associating side allowed to tie.

#include "s2ic/syntax.hpp"

#include <sstream>

namespace s2ic {

namespace {

// ── terms ────────────────────────────────────────────────────────────────────
// levels: <-> 0, -> 1, | 2, + 3, & 4, unary/atom 5

int term_level(const TermPtr& t) {
    switch (t->op) {
        case TermOp::Iff: return 0;
        case TermOp::Imp: return 1;
        case TermOp::Or: return 2;
        case TermOp::Xor: return 3;
        case TermOp::And: return 4;
        default: return 5;
    }
}

void print_term(std::ostream& os, const TermPtr& t, int min_level) {
    int lvl = term_level(t);
    bool paren = lvl < min_level;
    if (paren) os << '(';
    switch (t->op) {
        case TermOp::Zero: os << '0'; break;
        case TermOp::One: os << '1'; break;
        case TermOp::Var: os << t->var; break;
        case TermOp::Not:
            os << '!';
            print_term(os, t->a, 5);
            break;
        case TermOp::Iff:  // right-associative
            print_term(os, t->a, 1);
            os << " <-> ";
            print_term(os, t->b, 0);
            break;
        case TermOp::Imp:
            print_term(os, t->a, 2);
            os << " -> ";
            print_term(os, t->b, 1);
            break;
        case TermOp::Or:  // left-associative
            print_term(os, t->a, 2);
            os << " | ";
            print_term(os, t->b, 3);
            break;
        case TermOp::Xor:
            print_term(os, t->a, 3);
            os << " + ";
            print_term(os, t->b, 4);
            break;
        case TermOp::And:
            print_term(os, t->a, 4);
            os << " & ";
            print_term(os, t->b, 5);
            break;
    }
    if (paren) os << ')';
}

// ── modal formulas ───────────────────────────────────────────────────────────
// levels: <-> 0, -> 1, ~> 2, | 3, + 4, & 5, unary/atom 6

int modal_level(const ModalPtr& m) {
    switch (m->op) {
        case ModalOp::Iff: return 0;
        case ModalOp::Imp: return 1;
        case ModalOp::Sim: return 2;
        case ModalOp::Or: return 3;
        case ModalOp::Xor: return 4;
        case ModalOp::And: return 5;
        default: return 6;
    }
}

void print_modal(std::ostream& os, const ModalPtr& m, int min_level) {
    int lvl = modal_level(m);
    bool paren = lvl < min_level;
    if (paren) os << '(';
    switch (m->op) {
        case ModalOp::Top: os << '1'; break;
        case ModalOp::Bot: os << '0'; break;
        case ModalOp::Var: os << m->var; break;
        case ModalOp::Not:
            os << '!';
            print_modal(os, m->a, 6);
            break;
        case ModalOp::Univ:
            os << "[A]";
            print_modal(os, m->a, 6);
            break;
        case ModalOp::Diam:
            os << "<E>";
            print_modal(os, m->a, 6);
            break;
        case ModalOp::Iff:
            print_modal(os, m->a, 1);
            os << " <-> ";
            print_modal(os, m->b, 0);
            break;
        case ModalOp::Imp:
            print_modal(os, m->a, 2);
            os << " -> ";
            print_modal(os, m->b, 1);
            break;
        case ModalOp::Sim:  // non-associative: both sides strictly tighter
            print_modal(os, m->a, 3);
            os << " ~> ";
            print_modal(os, m->b, 3);
            break;
        case ModalOp::Or:
            print_modal(os, m->a, 3);
            os << " | ";
            print_modal(os, m->b, 4);
            break;
        case ModalOp::Xor:
            print_modal(os, m->a, 4);
            os << " + ";
            print_modal(os, m->b, 5);
            break;
        case ModalOp::And:
            print_modal(os, m->a, 5);
            os << " & ";
            print_modal(os, m->b, 6);
            break;
    }
    if (paren) os << ')';
}

// ── contact formulas ─────────────────────────────────────────────────────────
// levels: <=> 0, => 1, \/ 2, /\ 3, ~/atom 4

int form_level(const FormPtr& f) {
    switch (f->op) {
        case FormOp::Iff: return 0;
        case FormOp::Imp: return 1;
        case FormOp::Disj: return 2;
        case FormOp::Conj: return 3;
        default: return 4;
    }
}

void print_form(std::ostream& os, const FormPtr& f, int min_level) {
    int lvl = form_level(f);
    bool paren = lvl < min_level;
    if (paren) os << '(';
    switch (f->op) {
        case FormOp::Top: os << "top"; break;
        case FormOp::Bot: os << "bot"; break;
        case FormOp::Atom:
            // Term connectives and formula connectives use disjoint tokens,
            // so the embedded terms never need parentheses.
            print_term(os, f->t, 0);
            os << " << ";
            print_term(os, f->u, 0);
            break;
        case FormOp::Equation:
            print_term(os, f->t, 0);
            os << " == ";
            print_term(os, f->u, 0);
            break;
        case FormOp::Neg:
            os << '~';
            print_form(os, f->a, 4);
            break;
        case FormOp::Iff:
            print_form(os, f->a, 1);
            os << " <=> ";
            print_form(os, f->b, 0);
            break;
        case FormOp::Imp:
            print_form(os, f->a, 2);
            os << " => ";
            print_form(os, f->b, 1);
            break;
        case FormOp::Disj:
            print_form(os, f->a, 2);
            os << " \\/ ";
            print_form(os, f->b, 3);
            break;
        case FormOp::Conj:
            print_form(os, f->a, 3);
            os << " /\\ ";
            print_form(os, f->b, 4);
            break;
    }
    if (paren) os << ')';
}

// ── first-order skeletons (diagnostic output only) ───────────────────────────

int fo_level(const FoPtr& f) {
    switch (f->op) {
        case FoOp::Iff: return 0;
        case FoOp::Imp: return 1;
        case FoOp::Disj: return 2;
        case FoOp::Conj: return 3;
        default: return 4;
    }
}

void print_fo(std::ostream& os, const FoPtr& f, int min_level) {
    int lvl = fo_level(f);
    bool paren = lvl < min_level;
    if (paren) os << '(';
    switch (f->op) {
        case FoOp::Top: os << "top"; break;
        case FoOp::Bot: os << "bot"; break;
        case FoOp::Eq:
            print_modal(os, f->s, 3);
            os << " = ";
            print_modal(os, f->t, 3);
            break;
        case FoOp::Nleq:
            print_modal(os, f->s, 3);
            os << " !<= ";
            print_modal(os, f->t, 3);
            break;
        case FoOp::Neg:
            os << '~';
            print_fo(os, f->a, 4);
            break;
        case FoOp::Iff:
            print_fo(os, f->a, 1);
            os << " <=> ";
            print_fo(os, f->b, 0);
            break;
        case FoOp::Imp:
            print_fo(os, f->a, 2);
            os << " => ";
            print_fo(os, f->b, 1);
            break;
        case FoOp::Disj:
            print_fo(os, f->a, 2);
            os << " \\/ ";
            print_fo(os, f->b, 3);
            break;
        case FoOp::Conj:
            print_fo(os, f->a, 3);
            os << " /\\ ";
            print_fo(os, f->b, 4);
            break;
    }
    if (paren) os << ')';
}

}  // namespace

std::string pretty(const TermPtr& t) {
    std::ostringstream os;
    print_term(os, t, 0);
    return os.str();
}

std::string pretty(const ModalPtr& m) {
    std::ostringstream os;
    print_modal(os, m, 0);
    return os.str();
}

std::string pretty(const FormPtr& f) {
    std::ostringstream os;
    print_form(os, f, 0);
    return os.str();
}

std::string pretty(const FoPtr& f) {
    std::ostringstream os;
    print_fo(os, f, 0);
    return os.str();
}

std::string rule_to_text(const Pi2Rule& rule) {
    std::ostringstream os;
    os << "rule " << rule.name << "\n";
    os << "xvars";
    for (const auto& v : rule.xvars) os << ' ' << v;
    os << "\npvars";
    for (const auto& v : rule.pvars) os << ' ' << v;
    os << "\nF: " << pretty(rule.F) << "\nG: " << pretty(rule.G) << "\n";
    return os.str();
}

}  // namespace s2ic
