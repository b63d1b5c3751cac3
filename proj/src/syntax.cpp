// Constructors, structural comparison, hashing, variable collection and
// evaluation for the four syntax layers.  Factories fold only the cases that
// keep later passes simple (double negation and constant operands); anything
// smarter belongs to transform.cpp where it can be tested in isolation.

#include "s2ic/syntax.hpp"

#include <algorithm>

namespace s2ic {

// ── Boolean terms ────────────────────────────────────────────────────────────

namespace {
TermPtr mk_term(TermOp op, std::string var, TermPtr a, TermPtr b) {
    return std::make_shared<const BoolTerm>(BoolTerm{op, std::move(var), std::move(a), std::move(b)});
}
}  // namespace

TermPtr t_zero() { static const TermPtr z = mk_term(TermOp::Zero, "", nullptr, nullptr); return z; }
TermPtr t_one()  { static const TermPtr o = mk_term(TermOp::One, "", nullptr, nullptr); return o; }
TermPtr t_var(std::string name) { return mk_term(TermOp::Var, std::move(name), nullptr, nullptr); }

TermPtr t_not(TermPtr a) {
    if (a->op == TermOp::Zero) return t_one();
    if (a->op == TermOp::One) return t_zero();
    if (a->op == TermOp::Not) return a->a;
    return mk_term(TermOp::Not, "", std::move(a), nullptr);
}

TermPtr t_and(TermPtr a, TermPtr b) {
    if (a->op == TermOp::Zero || b->op == TermOp::Zero) return t_zero();
    if (a->op == TermOp::One) return b;
    if (b->op == TermOp::One) return a;
    return mk_term(TermOp::And, "", std::move(a), std::move(b));
}

TermPtr t_or(TermPtr a, TermPtr b) {
    if (a->op == TermOp::One || b->op == TermOp::One) return t_one();
    if (a->op == TermOp::Zero) return b;
    if (b->op == TermOp::Zero) return a;
    return mk_term(TermOp::Or, "", std::move(a), std::move(b));
}

TermPtr t_xor(TermPtr a, TermPtr b) {
    if (a->op == TermOp::Zero) return b;
    if (b->op == TermOp::Zero) return a;
    if (a->op == TermOp::One) return t_not(b);
    if (b->op == TermOp::One) return t_not(a);
    return mk_term(TermOp::Xor, "", std::move(a), std::move(b));
}

TermPtr t_imp(TermPtr a, TermPtr b) {
    if (a->op == TermOp::Zero || b->op == TermOp::One) return t_one();
    if (a->op == TermOp::One) return b;
    if (b->op == TermOp::Zero) return t_not(a);
    return mk_term(TermOp::Imp, "", std::move(a), std::move(b));
}

TermPtr t_iff(TermPtr a, TermPtr b) {
    if (a->op == TermOp::One) return b;
    if (b->op == TermOp::One) return a;
    if (a->op == TermOp::Zero) return t_not(b);
    if (b->op == TermOp::Zero) return t_not(a);
    return mk_term(TermOp::Iff, "", std::move(a), std::move(b));
}

TermPtr t_and(const std::vector<TermPtr>& ts) {
    TermPtr acc = t_one();
    for (const auto& t : ts) acc = t_and(acc, t);
    return acc;
}

TermPtr t_or(const std::vector<TermPtr>& ts) {
    TermPtr acc = t_zero();
    for (const auto& t : ts) acc = t_or(acc, t);
    return acc;
}

int term_compare(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->op != b->op) return a->op < b->op ? -1 : 1;
    switch (a->op) {
        case TermOp::Zero:
        case TermOp::One: return 0;
        case TermOp::Var: return a->var.compare(b->var) < 0 ? -1 : (a->var == b->var ? 0 : 1);
        case TermOp::Not: return term_compare(a->a, b->a);
        default: {
            int c = term_compare(a->a, b->a);
            return c != 0 ? c : term_compare(a->b, b->b);
        }
    }
}

bool term_equal(const TermPtr& a, const TermPtr& b) { return term_compare(a, b) == 0; }

size_t term_hash(const TermPtr& t) {
    size_t h = static_cast<size_t>(t->op) * 0x9e3779b97f4a7c15ull;
    if (t->op == TermOp::Var) h ^= std::hash<std::string>{}(t->var);
    if (t->a) h = h * 31 + term_hash(t->a);
    if (t->b) h = h * 31 + term_hash(t->b);
    return h;
}

void term_vars(const TermPtr& t, std::set<std::string>& out) {
    if (t->op == TermOp::Var) { out.insert(t->var); return; }
    if (t->a) term_vars(t->a, out);
    if (t->b) term_vars(t->b, out);
}

bool eval_term(const TermPtr& t, const std::function<bool(const std::string&)>& val) {
    switch (t->op) {
        case TermOp::Zero: return false;
        case TermOp::One: return true;
        case TermOp::Var: return val(t->var);
        case TermOp::Not: return !eval_term(t->a, val);
        case TermOp::And: return eval_term(t->a, val) && eval_term(t->b, val);
        case TermOp::Or:  return eval_term(t->a, val) || eval_term(t->b, val);
        case TermOp::Xor: return eval_term(t->a, val) != eval_term(t->b, val);
        case TermOp::Imp: return !eval_term(t->a, val) || eval_term(t->b, val);
        case TermOp::Iff: return eval_term(t->a, val) == eval_term(t->b, val);
    }
    return false;  // unreachable
}

TermPtr term_subst(const TermPtr& t, const std::string& var, const TermPtr& repl) {
    switch (t->op) {
        case TermOp::Zero:
        case TermOp::One: return t;
        case TermOp::Var: return t->var == var ? repl : t;
        case TermOp::Not: return t_not(term_subst(t->a, var, repl));
        case TermOp::And: return t_and(term_subst(t->a, var, repl), term_subst(t->b, var, repl));
        case TermOp::Or:  return t_or(term_subst(t->a, var, repl), term_subst(t->b, var, repl));
        case TermOp::Xor: return t_xor(term_subst(t->a, var, repl), term_subst(t->b, var, repl));
        case TermOp::Imp: return t_imp(term_subst(t->a, var, repl), term_subst(t->b, var, repl));
        case TermOp::Iff: return t_iff(term_subst(t->a, var, repl), term_subst(t->b, var, repl));
    }
    return t;  // unreachable
}

// ── Modal formulas ───────────────────────────────────────────────────────────

namespace {
ModalPtr mk_modal(ModalOp op, std::string var, ModalPtr a, ModalPtr b) {
    return std::make_shared<const ModalFormula>(ModalFormula{op, std::move(var), std::move(a), std::move(b)});
}
}  // namespace

ModalPtr m_top() { static const ModalPtr t = mk_modal(ModalOp::Top, "", nullptr, nullptr); return t; }
ModalPtr m_bot() { static const ModalPtr b = mk_modal(ModalOp::Bot, "", nullptr, nullptr); return b; }
ModalPtr m_var(std::string name) { return mk_modal(ModalOp::Var, std::move(name), nullptr, nullptr); }

ModalPtr m_not(ModalPtr a) {
    if (a->op == ModalOp::Top) return m_bot();
    if (a->op == ModalOp::Bot) return m_top();
    if (a->op == ModalOp::Not) return a->a;
    return mk_modal(ModalOp::Not, "", std::move(a), nullptr);
}

ModalPtr m_and(ModalPtr a, ModalPtr b) {
    if (a->op == ModalOp::Bot || b->op == ModalOp::Bot) return m_bot();
    if (a->op == ModalOp::Top) return b;
    if (b->op == ModalOp::Top) return a;
    return mk_modal(ModalOp::And, "", std::move(a), std::move(b));
}

ModalPtr m_or(ModalPtr a, ModalPtr b) {
    if (a->op == ModalOp::Top || b->op == ModalOp::Top) return m_top();
    if (a->op == ModalOp::Bot) return b;
    if (b->op == ModalOp::Bot) return a;
    return mk_modal(ModalOp::Or, "", std::move(a), std::move(b));
}

ModalPtr m_xor(ModalPtr a, ModalPtr b) {
    if (a->op == ModalOp::Bot) return b;
    if (b->op == ModalOp::Bot) return a;
    if (a->op == ModalOp::Top) return m_not(b);
    if (b->op == ModalOp::Top) return m_not(a);
    return mk_modal(ModalOp::Xor, "", std::move(a), std::move(b));
}

ModalPtr m_imp(ModalPtr a, ModalPtr b) {
    if (a->op == ModalOp::Bot || b->op == ModalOp::Top) return m_top();
    if (a->op == ModalOp::Top) return b;
    if (b->op == ModalOp::Bot) return m_not(a);
    return mk_modal(ModalOp::Imp, "", std::move(a), std::move(b));
}

ModalPtr m_iff(ModalPtr a, ModalPtr b) {
    if (a->op == ModalOp::Top) return b;
    if (b->op == ModalOp::Top) return a;
    if (a->op == ModalOp::Bot) return m_not(b);
    if (b->op == ModalOp::Bot) return m_not(a);
    return mk_modal(ModalOp::Iff, "", std::move(a), std::move(b));
}

ModalPtr m_sim(ModalPtr a, ModalPtr b) { return mk_modal(ModalOp::Sim, "", std::move(a), std::move(b)); }
ModalPtr m_univ(ModalPtr a) { return mk_modal(ModalOp::Univ, "", std::move(a), nullptr); }
ModalPtr m_diam(ModalPtr a) { return mk_modal(ModalOp::Diam, "", std::move(a), nullptr); }

ModalPtr m_and(const std::vector<ModalPtr>& ms) {
    ModalPtr acc = m_top();
    for (const auto& m : ms) acc = m_and(acc, m);
    return acc;
}

ModalPtr m_or(const std::vector<ModalPtr>& ms) {
    ModalPtr acc = m_bot();
    for (const auto& m : ms) acc = m_or(acc, m);
    return acc;
}

int modal_compare(const ModalPtr& a, const ModalPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->op != b->op) return a->op < b->op ? -1 : 1;
    switch (a->op) {
        case ModalOp::Top:
        case ModalOp::Bot: return 0;
        case ModalOp::Var: return a->var.compare(b->var) < 0 ? -1 : (a->var == b->var ? 0 : 1);
        case ModalOp::Not:
        case ModalOp::Univ:
        case ModalOp::Diam: return modal_compare(a->a, b->a);
        default: {
            int c = modal_compare(a->a, b->a);
            return c != 0 ? c : modal_compare(a->b, b->b);
        }
    }
}

bool modal_equal(const ModalPtr& a, const ModalPtr& b) { return modal_compare(a, b) == 0; }

size_t modal_hash(const ModalPtr& m) {
    size_t h = static_cast<size_t>(m->op) * 0xc2b2ae3d27d4eb4full;
    if (m->op == ModalOp::Var) h ^= std::hash<std::string>{}(m->var);
    if (m->a) h = h * 31 + modal_hash(m->a);
    if (m->b) h = h * 31 + modal_hash(m->b);
    return h;
}

void modal_vars(const ModalPtr& m, std::set<std::string>& out) {
    if (m->op == ModalOp::Var) { out.insert(m->var); return; }
    if (m->a) modal_vars(m->a, out);
    if (m->b) modal_vars(m->b, out);
}

ModalPtr desugar_diam(const ModalPtr& m) {
    switch (m->op) {
        case ModalOp::Top:
        case ModalOp::Bot:
        case ModalOp::Var: return m;
        case ModalOp::Diam: return m_not(m_univ(m_not(desugar_diam(m->a))));
        case ModalOp::Not: return m_not(desugar_diam(m->a));
        case ModalOp::Univ: return m_univ(desugar_diam(m->a));
        case ModalOp::And: return m_and(desugar_diam(m->a), desugar_diam(m->b));
        case ModalOp::Or:  return m_or(desugar_diam(m->a), desugar_diam(m->b));
        case ModalOp::Xor: return m_xor(desugar_diam(m->a), desugar_diam(m->b));
        case ModalOp::Imp: return m_imp(desugar_diam(m->a), desugar_diam(m->b));
        case ModalOp::Iff: return m_iff(desugar_diam(m->a), desugar_diam(m->b));
        case ModalOp::Sim: return m_sim(desugar_diam(m->a), desugar_diam(m->b));
    }
    return m;  // unreachable
}

// ── Quantifier-free contact formulas ────────────────────────────────────────

namespace {
FormPtr mk_form(FormOp op, TermPtr t, TermPtr u, FormPtr a, FormPtr b) {
    return std::make_shared<const ContactFormula>(
        ContactFormula{op, std::move(t), std::move(u), std::move(a), std::move(b)});
}
}  // namespace

FormPtr f_top() { static const FormPtr t = mk_form(FormOp::Top, nullptr, nullptr, nullptr, nullptr); return t; }
FormPtr f_bot() { static const FormPtr b = mk_form(FormOp::Bot, nullptr, nullptr, nullptr, nullptr); return b; }

FormPtr f_atom(TermPtr t, TermPtr u) {
    return mk_form(FormOp::Atom, std::move(t), std::move(u), nullptr, nullptr);
}

FormPtr f_equation(TermPtr t, TermPtr u) {
    return mk_form(FormOp::Equation, std::move(t), std::move(u), nullptr, nullptr);
}

FormPtr f_neg(FormPtr a) {
    if (a->op == FormOp::Top) return f_bot();
    if (a->op == FormOp::Bot) return f_top();
    if (a->op == FormOp::Neg) return a->a;
    return mk_form(FormOp::Neg, nullptr, nullptr, std::move(a), nullptr);
}

FormPtr f_conj(FormPtr a, FormPtr b) {
    if (a->op == FormOp::Bot || b->op == FormOp::Bot) return f_bot();
    if (a->op == FormOp::Top) return b;
    if (b->op == FormOp::Top) return a;
    return mk_form(FormOp::Conj, nullptr, nullptr, std::move(a), std::move(b));
}

FormPtr f_disj(FormPtr a, FormPtr b) {
    if (a->op == FormOp::Top || b->op == FormOp::Top) return f_top();
    if (a->op == FormOp::Bot) return b;
    if (b->op == FormOp::Bot) return a;
    return mk_form(FormOp::Disj, nullptr, nullptr, std::move(a), std::move(b));
}

FormPtr f_imp(FormPtr a, FormPtr b) {
    if (a->op == FormOp::Bot || b->op == FormOp::Top) return f_top();
    if (a->op == FormOp::Top) return b;
    if (b->op == FormOp::Bot) return f_neg(a);
    return mk_form(FormOp::Imp, nullptr, nullptr, std::move(a), std::move(b));
}

FormPtr f_iff(FormPtr a, FormPtr b) {
    if (a->op == FormOp::Top) return b;
    if (b->op == FormOp::Top) return a;
    if (a->op == FormOp::Bot) return f_neg(b);
    if (b->op == FormOp::Bot) return f_neg(a);
    return mk_form(FormOp::Iff, nullptr, nullptr, std::move(a), std::move(b));
}

FormPtr f_conj(const std::vector<FormPtr>& fs) {
    FormPtr acc = f_top();
    for (const auto& f : fs) acc = f_conj(acc, f);
    return acc;
}

FormPtr f_disj(const std::vector<FormPtr>& fs) {
    FormPtr acc = f_bot();
    for (const auto& f : fs) acc = f_disj(acc, f);
    return acc;
}

int form_compare(const FormPtr& a, const FormPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->op != b->op) return a->op < b->op ? -1 : 1;
    switch (a->op) {
        case FormOp::Top:
        case FormOp::Bot: return 0;
        case FormOp::Atom:
        case FormOp::Equation: {
            int c = term_compare(a->t, b->t);
            return c != 0 ? c : term_compare(a->u, b->u);
        }
        case FormOp::Neg: return form_compare(a->a, b->a);
        default: {
            int c = form_compare(a->a, b->a);
            return c != 0 ? c : form_compare(a->b, b->b);
        }
    }
}

bool form_equal(const FormPtr& a, const FormPtr& b) { return form_compare(a, b) == 0; }

size_t form_hash(const FormPtr& f) {
    size_t h = static_cast<size_t>(f->op) * 0x165667b19e3779f9ull;
    if (f->t) h = h * 31 + term_hash(f->t);
    if (f->u) h = h * 31 + term_hash(f->u);
    if (f->a) h = h * 31 + form_hash(f->a);
    if (f->b) h = h * 31 + form_hash(f->b);
    return h;
}

void form_vars(const FormPtr& f, std::set<std::string>& out) {
    if (f->t) term_vars(f->t, out);
    if (f->u) term_vars(f->u, out);
    if (f->a) form_vars(f->a, out);
    if (f->b) form_vars(f->b, out);
}

namespace {
void collect_atoms(const FormPtr& f, std::vector<FormPtr>& out) {
    if (f->op == FormOp::Atom) {
        for (const auto& seen : out)
            if (form_equal(seen, f)) return;
        out.push_back(f);
        return;
    }
    if (f->op == FormOp::Equation)
        throw std::invalid_argument("form_atoms: equation encountered; run normalize_atoms first");
    if (f->a) collect_atoms(f->a, out);
    if (f->b) collect_atoms(f->b, out);
}
}  // namespace

std::vector<FormPtr> form_atoms(const FormPtr& f) {
    std::vector<FormPtr> out;
    collect_atoms(f, out);
    return out;
}

std::vector<FormPtr> conjuncts_of(const FormPtr& f) {
    if (f->op == FormOp::Conj) {
        auto left = conjuncts_of(f->a);
        auto right = conjuncts_of(f->b);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
    return {f};
}

// ── First-order skeletons ───────────────────────────────────────────────────

namespace {
FoPtr mk_fo(FoOp op, ModalPtr s, ModalPtr t, FoPtr a, FoPtr b) {
    return std::make_shared<const FoFormula>(
        FoFormula{op, std::move(s), std::move(t), std::move(a), std::move(b)});
}
}  // namespace

FoPtr fo_top() { static const FoPtr t = mk_fo(FoOp::Top, nullptr, nullptr, nullptr, nullptr); return t; }
FoPtr fo_bot() { static const FoPtr b = mk_fo(FoOp::Bot, nullptr, nullptr, nullptr, nullptr); return b; }
FoPtr fo_eq(ModalPtr s, ModalPtr t) { return mk_fo(FoOp::Eq, std::move(s), std::move(t), nullptr, nullptr); }
FoPtr fo_nleq(ModalPtr s, ModalPtr t) { return mk_fo(FoOp::Nleq, std::move(s), std::move(t), nullptr, nullptr); }

FoPtr fo_neg(FoPtr a) {
    if (a->op == FoOp::Top) return fo_bot();
    if (a->op == FoOp::Bot) return fo_top();
    if (a->op == FoOp::Neg) return a->a;
    return mk_fo(FoOp::Neg, nullptr, nullptr, std::move(a), nullptr);
}

FoPtr fo_conj(FoPtr a, FoPtr b) {
    if (a->op == FoOp::Bot || b->op == FoOp::Bot) return fo_bot();
    if (a->op == FoOp::Top) return b;
    if (b->op == FoOp::Top) return a;
    return mk_fo(FoOp::Conj, nullptr, nullptr, std::move(a), std::move(b));
}

FoPtr fo_disj(FoPtr a, FoPtr b) {
    if (a->op == FoOp::Top || b->op == FoOp::Top) return fo_top();
    if (a->op == FoOp::Bot) return b;
    if (b->op == FoOp::Bot) return a;
    return mk_fo(FoOp::Disj, nullptr, nullptr, std::move(a), std::move(b));
}

FoPtr fo_imp(FoPtr a, FoPtr b) {
    if (a->op == FoOp::Bot || b->op == FoOp::Top) return fo_top();
    if (a->op == FoOp::Top) return b;
    if (b->op == FoOp::Bot) return fo_neg(a);
    return mk_fo(FoOp::Imp, nullptr, nullptr, std::move(a), std::move(b));
}

FoPtr fo_iff(FoPtr a, FoPtr b) {
    if (a->op == FoOp::Top) return b;
    if (b->op == FoOp::Top) return a;
    if (a->op == FoOp::Bot) return fo_neg(b);
    if (b->op == FoOp::Bot) return fo_neg(a);
    return mk_fo(FoOp::Iff, nullptr, nullptr, std::move(a), std::move(b));
}

// ── Π₂ rules ────────────────────────────────────────────────────────────────

void validate_rule(const Pi2Rule& rule) {
    std::set<std::string> declared(rule.xvars.begin(), rule.xvars.end());
    std::set<std::string> params(rule.pvars.begin(), rule.pvars.end());
    for (const auto& p : params) {
        if (declared.count(p))
            throw std::invalid_argument("rule " + rule.name + ": variable '" + p +
                                        "' declared both as context variable and parameter");
        declared.insert(p);
    }
    std::set<std::string> fv;
    modal_vars(rule.F, fv);
    for (const auto& v : fv)
        if (!declared.count(v))
            throw std::invalid_argument("rule " + rule.name + ": undeclared variable '" + v +
                                        "' in premise");
    std::set<std::string> gv;
    modal_vars(rule.G, gv);
    for (const auto& v : gv) {
        if (params.count(v))
            throw std::invalid_argument("rule " + rule.name + ": parameter '" + v +
                                        "' occurs in conclusion");
        if (!declared.count(v))
            throw std::invalid_argument("rule " + rule.name + ": undeclared variable '" + v +
                                        "' in conclusion");
    }
}

}  // namespace s2ic
