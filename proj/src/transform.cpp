#include "s2ic/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace s2ic {

// ── normalize_atoms ──────────────────────────────────────────────────────────

FormPtr normalize_atoms(const FormPtr& f) {
    switch (f->op) {
        case FormOp::Top:
        case FormOp::Bot:
        case FormOp::Atom:
            return f;
        case FormOp::Equation: {
            TermPtr d = t_xor(f->t, f->u);
            return f_atom(d, t_not(d));
        }
        case FormOp::Neg: return f_neg(normalize_atoms(f->a));
        case FormOp::Conj: return f_conj(normalize_atoms(f->a), normalize_atoms(f->b));
        case FormOp::Disj: return f_disj(normalize_atoms(f->a), normalize_atoms(f->b));
        case FormOp::Imp: return f_imp(normalize_atoms(f->a), normalize_atoms(f->b));
        case FormOp::Iff: return f_iff(normalize_atoms(f->a), normalize_atoms(f->b));
    }
    return f;  // unreachable
}

// ── minterms ─────────────────────────────────────────────────────────────────

TermPtr minterm_of(const std::vector<std::string>& kept, uint32_t eps) {
    TermPtr m = t_one();
    for (size_t i = 0; i < kept.size(); ++i) {
        TermPtr lit = t_var(kept[i]);
        if ((eps >> i) & 1u) lit = t_not(lit);
        m = t_and(m, lit);
    }
    return m;
}

std::vector<FormPtr> minterm_atoms(const std::vector<std::string>& kept) {
    if (kept.size() >= 16)
        throw std::invalid_argument("minterm_atoms: too many kept variables");
    for (size_t i = 0; i < kept.size(); ++i)
        for (size_t j = i + 1; j < kept.size(); ++j)
            if (kept[i] == kept[j])
                throw std::invalid_argument("minterm_atoms: duplicate kept variable " + kept[i]);
    uint32_t n = 1u << kept.size();
    std::vector<FormPtr> out;
    out.reserve(static_cast<size_t>(n) * n);
    for (uint32_t eps = 0; eps < n; ++eps)
        for (uint32_t delta = 0; delta < n; ++delta)
            out.push_back(f_atom(minterm_of(kept, eps), t_not(minterm_of(kept, delta))));
    return out;
}

// ── embeddings between terms and modal formulas ─────────────────────────────

ModalPtr term_to_modal(const TermPtr& t) {
    switch (t->op) {
        case TermOp::Zero: return m_bot();
        case TermOp::One: return m_top();
        case TermOp::Var: return m_var(t->var);
        case TermOp::Not: return m_not(term_to_modal(t->a));
        case TermOp::And: return m_and(term_to_modal(t->a), term_to_modal(t->b));
        case TermOp::Or:  return m_or(term_to_modal(t->a), term_to_modal(t->b));
        case TermOp::Xor: return m_xor(term_to_modal(t->a), term_to_modal(t->b));
        case TermOp::Imp: return m_imp(term_to_modal(t->a), term_to_modal(t->b));
        case TermOp::Iff: return m_iff(term_to_modal(t->a), term_to_modal(t->b));
    }
    return m_bot();  // unreachable
}

TermPtr modal_to_term(const ModalPtr& m) {
    switch (m->op) {
        case ModalOp::Top: return t_one();
        case ModalOp::Bot: return t_zero();
        case ModalOp::Var: return t_var(m->var);
        case ModalOp::Not: return t_not(modal_to_term(m->a));
        case ModalOp::And: return t_and(modal_to_term(m->a), modal_to_term(m->b));
        case ModalOp::Or:  return t_or(modal_to_term(m->a), modal_to_term(m->b));
        case ModalOp::Xor: return t_xor(modal_to_term(m->a), modal_to_term(m->b));
        case ModalOp::Imp: return t_imp(modal_to_term(m->a), modal_to_term(m->b));
        case ModalOp::Iff: return t_iff(modal_to_term(m->a), modal_to_term(m->b));
        case ModalOp::Sim:
        case ModalOp::Univ:
        case ModalOp::Diam:
            throw std::invalid_argument("modal_to_term: formula is not purely Boolean");
    }
    return t_zero();  // unreachable
}

// ── encode_fo ────────────────────────────────────────────────────────────────

ModalPtr encode_fo(const FoPtr& f) {
    switch (f->op) {
        case FoOp::Top: return m_top();
        case FoOp::Bot: return m_bot();
        case FoOp::Eq: return m_univ(m_iff(f->s, f->t));
        case FoOp::Nleq:
            throw std::invalid_argument("encode_fo: Nleq atom; rewrite via its definition first");
        case FoOp::Neg: return m_not(encode_fo(f->a));
        case FoOp::Conj: return m_and(encode_fo(f->a), encode_fo(f->b));
        case FoOp::Disj: return m_or(encode_fo(f->a), encode_fo(f->b));
        case FoOp::Imp: return m_imp(encode_fo(f->a), encode_fo(f->b));
        case FoOp::Iff: return m_iff(encode_fo(f->a), encode_fo(f->b));
    }
    return m_top();  // unreachable
}

// ── tau1 ─────────────────────────────────────────────────────────────────────

FoPtr tau1(const FormPtr& f) {
    switch (f->op) {
        case FormOp::Top: return fo_top();
        case FormOp::Bot: return fo_bot();
        case FormOp::Atom:
            return fo_eq(m_sim(term_to_modal(f->t), term_to_modal(f->u)), m_top());
        case FormOp::Equation:
            throw std::invalid_argument("tau1: equation encountered; run normalize_atoms first");
        case FormOp::Neg: return fo_neg(tau1(f->a));
        case FormOp::Conj: return fo_conj(tau1(f->a), tau1(f->b));
        case FormOp::Disj: return fo_disj(tau1(f->a), tau1(f->b));
        case FormOp::Imp: return fo_imp(tau1(f->a), tau1(f->b));
        case FormOp::Iff: return fo_iff(tau1(f->a), tau1(f->b));
    }
    return fo_top();  // unreachable
}

// ── flatten_modal ────────────────────────────────────────────────────────────

namespace {

// Witness table for ~>-subterms, deduplicated structurally.
struct WitnessTable {
    std::vector<std::pair<TermPtr, TermPtr>> sims;  // (t_i, u_i), Boolean by construction
    std::vector<std::string> names;
    std::set<std::string> used;
    int counter = 0;

    std::string fresh_name() {
        for (;;) {
            std::string cand = "w" + std::to_string(++counter);
            if (!used.count(cand)) {
                used.insert(cand);
                return cand;
            }
        }
    }

    std::string witness_for(const TermPtr& t, const TermPtr& u) {
        for (size_t i = 0; i < sims.size(); ++i)
            if (term_equal(sims[i].first, t) && term_equal(sims[i].second, u)) return names[i];
        sims.emplace_back(t, u);
        names.push_back(fresh_name());
        return names.back();
    }
};

// Replaces every ~>-subterm (innermost first) by its witness variable and
// returns the resulting purely Boolean term.  [A]a is read as 1 ~> a and
// <E> has been desugared away before we get here.
TermPtr extract_sims(const ModalPtr& m, WitnessTable& wt) {
    switch (m->op) {
        case ModalOp::Top: return t_one();
        case ModalOp::Bot: return t_zero();
        case ModalOp::Var: return t_var(m->var);
        case ModalOp::Not: return t_not(extract_sims(m->a, wt));
        case ModalOp::And: return t_and(extract_sims(m->a, wt), extract_sims(m->b, wt));
        case ModalOp::Or:  return t_or(extract_sims(m->a, wt), extract_sims(m->b, wt));
        case ModalOp::Xor: return t_xor(extract_sims(m->a, wt), extract_sims(m->b, wt));
        case ModalOp::Imp: return t_imp(extract_sims(m->a, wt), extract_sims(m->b, wt));
        case ModalOp::Iff: return t_iff(extract_sims(m->a, wt), extract_sims(m->b, wt));
        case ModalOp::Sim: {
            TermPtr t = extract_sims(m->a, wt);
            TermPtr u = extract_sims(m->b, wt);
            return t_var(wt.witness_for(t, u));
        }
        case ModalOp::Univ: {
            TermPtr u = extract_sims(m->a, wt);
            return t_var(wt.witness_for(t_one(), u));
        }
        case ModalOp::Diam:
            throw std::logic_error("extract_sims: Diam should have been desugared");
    }
    return t_zero();  // unreachable
}

// The contact-atom reading of d != 0, i.e. ~(d << !d).
FormPtr nonzero(const TermPtr& d) { return f_neg(f_atom(d, t_not(d))); }

// The contact-atom reading of d == 0.
FormPtr zero(const TermPtr& d) { return f_atom(d, t_not(d)); }

FormPtr skeleton_to_contact(const FoPtr& f, WitnessTable& wt) {
    switch (f->op) {
        case FoOp::Top: return f_top();
        case FoOp::Bot: return f_bot();
        case FoOp::Eq: {
            TermPtr s = extract_sims(desugar_diam(f->s), wt);
            TermPtr t = extract_sims(desugar_diam(f->t), wt);
            return zero(t_xor(s, t));
        }
        case FoOp::Nleq: {
            TermPtr s = extract_sims(desugar_diam(f->s), wt);
            TermPtr t = extract_sims(desugar_diam(f->t), wt);
            return nonzero(t_and(s, t_not(t)));
        }
        case FoOp::Neg: return f_neg(skeleton_to_contact(f->a, wt));
        case FoOp::Conj: return f_conj(skeleton_to_contact(f->a, wt), skeleton_to_contact(f->b, wt));
        case FoOp::Disj: return f_disj(skeleton_to_contact(f->a, wt), skeleton_to_contact(f->b, wt));
        case FoOp::Imp: return f_imp(skeleton_to_contact(f->a, wt), skeleton_to_contact(f->b, wt));
        case FoOp::Iff: return f_iff(skeleton_to_contact(f->a, wt), skeleton_to_contact(f->b, wt));
    }
    return f_top();  // unreachable
}

void fo_modal_vars(const FoPtr& f, std::set<std::string>& out) {
    if (f->s) modal_vars(f->s, out);
    if (f->t) modal_vars(f->t, out);
    if (f->a) fo_modal_vars(f->a, out);
    if (f->b) fo_modal_vars(f->b, out);
}

}  // namespace

Flattened flatten_modal(const FoPtr& f, bool paper_orientation) {
    WitnessTable wt;
    fo_modal_vars(f, wt.used);

    FormPtr psi = skeleton_to_contact(f, wt);

    // Witness blocks.  Note that extracting a nested ~>-subterm can itself
    // append to the table, so we walked innermost-first above and the list is
    // already closed here.
    std::vector<FormPtr> blocks;
    for (size_t i = 0; i < wt.sims.size(); ++i) {
        TermPtr w = t_var(wt.names[i]);
        TermPtr t = wt.sims[i].first;
        TermPtr u = wt.sims[i].second;
        if (paper_orientation) std::swap(t, u);
        FormPtr w_is_1 = zero(t_xor(w, t_one()));   // folds to !w << w
        FormPtr w_is_0 = zero(w);                   // w << !w
        blocks.push_back(f_disj(f_conj(w_is_1, f_atom(t, u)),
                                f_conj(w_is_0, f_neg(f_atom(t, u)))));
    }

    FormPtr core = f_conj(f_conj(blocks), psi);
    return {wt.names, core};
}

// ── constant folding and substitution ────────────────────────────────────────

namespace {

bool is_const(const TermPtr& t) { return t->op == TermOp::Zero || t->op == TermOp::One; }

}  // namespace

FormPtr fold_constants(const FormPtr& f) {
    switch (f->op) {
        case FormOp::Top:
        case FormOp::Bot:
            return f;
        case FormOp::Atom:
            // 0 << t and t << 1 hold in every contact algebra; 1 << 0 fails
            // in every nontrivial one (and the degenerate algebra satisfies
            // everything, so folding it to bot preserves equivalence over the
            // class used for satisfiability).
            if (f->t->op == TermOp::Zero || f->u->op == TermOp::One) return f_top();
            if (f->t->op == TermOp::One && f->u->op == TermOp::Zero) return f_bot();
            return f;
        case FormOp::Equation:
            if (term_equal(f->t, f->u)) return f_top();
            if (is_const(f->t) && is_const(f->u)) return f->t->op == f->u->op ? f_top() : f_bot();
            return f;
        case FormOp::Neg: return f_neg(fold_constants(f->a));
        case FormOp::Conj: return f_conj(fold_constants(f->a), fold_constants(f->b));
        case FormOp::Disj: return f_disj(fold_constants(f->a), fold_constants(f->b));
        case FormOp::Imp: return f_imp(fold_constants(f->a), fold_constants(f->b));
        case FormOp::Iff: return f_iff(fold_constants(f->a), fold_constants(f->b));
    }
    return f;  // unreachable
}

FormPtr substitute_term_var(const FormPtr& f, const std::string& var, const TermPtr& repl) {
    switch (f->op) {
        case FormOp::Top:
        case FormOp::Bot:
            return f;
        case FormOp::Atom:
            return f_atom(term_subst(f->t, var, repl), term_subst(f->u, var, repl));
        case FormOp::Equation:
            return f_equation(term_subst(f->t, var, repl), term_subst(f->u, var, repl));
        case FormOp::Neg: return f_neg(substitute_term_var(f->a, var, repl));
        case FormOp::Conj:
            return f_conj(substitute_term_var(f->a, var, repl), substitute_term_var(f->b, var, repl));
        case FormOp::Disj:
            return f_disj(substitute_term_var(f->a, var, repl), substitute_term_var(f->b, var, repl));
        case FormOp::Imp:
            return f_imp(substitute_term_var(f->a, var, repl), substitute_term_var(f->b, var, repl));
        case FormOp::Iff:
            return f_iff(substitute_term_var(f->a, var, repl), substitute_term_var(f->b, var, repl));
    }
    return f;  // unreachable
}

// ── propositional skeleton satisfiability ────────────────────────────────────

namespace {

struct FormLess {
    bool operator()(const FormPtr& a, const FormPtr& b) const { return form_compare(a, b) < 0; }
};

void collect_atomic(const FormPtr& f, std::vector<FormPtr>& out) {
    if (f->op == FormOp::Atom || f->op == FormOp::Equation) {
        for (const auto& seen : out)
            if (form_equal(seen, f)) return;
        out.push_back(f);
        return;
    }
    if (f->a) collect_atomic(f->a, out);
    if (f->b) collect_atomic(f->b, out);
}

bool eval_skeleton(const FormPtr& f, const std::map<FormPtr, bool, FormLess>& val) {
    switch (f->op) {
        case FormOp::Top: return true;
        case FormOp::Bot: return false;
        case FormOp::Atom:
        case FormOp::Equation: return val.at(f);
        case FormOp::Neg: return !eval_skeleton(f->a, val);
        case FormOp::Conj: return eval_skeleton(f->a, val) && eval_skeleton(f->b, val);
        case FormOp::Disj: return eval_skeleton(f->a, val) || eval_skeleton(f->b, val);
        case FormOp::Imp: return !eval_skeleton(f->a, val) || eval_skeleton(f->b, val);
        case FormOp::Iff: return eval_skeleton(f->a, val) == eval_skeleton(f->b, val);
    }
    return false;  // unreachable
}

}  // namespace

bool propositionally_sat(const FormPtr& f) {
    std::vector<FormPtr> atoms;
    collect_atomic(f, atoms);
    if (atoms.size() > 24) return true;  // conservative: callers only prune on false
    uint32_t n = 1u << atoms.size();
    for (uint32_t mask = 0; mask < n; ++mask) {
        std::map<FormPtr, bool, FormLess> val;
        for (size_t i = 0; i < atoms.size(); ++i) val[atoms[i]] = (mask >> i) & 1u;
        if (eval_skeleton(f, val)) return true;
    }
    return false;
}

// ── tau2_branches ────────────────────────────────────────────────────────────

std::vector<FormPtr> tau2_branches(const std::vector<std::string>& fresh, const FormPtr& core) {
    if (fresh.size() > 24)
        throw std::invalid_argument("tau2_branches: too many witnesses to case-split");
    std::vector<FormPtr> out;
    uint32_t n = 1u << fresh.size();
    for (uint32_t mask = 0; mask < n; ++mask) {
        FormPtr branch = core;
        for (size_t i = 0; i < fresh.size(); ++i)
            branch = substitute_term_var(branch, fresh[i],
                                         ((mask >> i) & 1u) ? t_one() : t_zero());
        branch = fold_constants(branch);
        if (propositionally_sat(branch)) out.push_back(branch);
    }
    return out;
}

// ── substitutions and the projective-unifier transformer ───────────────────

ModalPtr apply_subst(const ModalPtr& m, const ModalSubst& sigma) {
    switch (m->op) {
        case ModalOp::Top:
        case ModalOp::Bot:
            return m;
        case ModalOp::Var: {
            auto it = sigma.find(m->var);
            return it == sigma.end() ? m : it->second;
        }
        case ModalOp::Not: return m_not(apply_subst(m->a, sigma));
        case ModalOp::Univ: return m_univ(apply_subst(m->a, sigma));
        case ModalOp::Diam: return m_diam(apply_subst(m->a, sigma));
        case ModalOp::And: return m_and(apply_subst(m->a, sigma), apply_subst(m->b, sigma));
        case ModalOp::Or:  return m_or(apply_subst(m->a, sigma), apply_subst(m->b, sigma));
        case ModalOp::Xor: return m_xor(apply_subst(m->a, sigma), apply_subst(m->b, sigma));
        case ModalOp::Imp: return m_imp(apply_subst(m->a, sigma), apply_subst(m->b, sigma));
        case ModalOp::Iff: return m_iff(apply_subst(m->a, sigma), apply_subst(m->b, sigma));
        case ModalOp::Sim: return m_sim(apply_subst(m->a, sigma), apply_subst(m->b, sigma));
    }
    return m;  // unreachable
}

ModalSubst projective_unifier(const ModalPtr& phi, const ModalSubst& sigma) {
    std::set<std::string> vars;
    modal_vars(phi, vars);
    ModalSubst pi;
    for (const auto& x : vars) {
        auto it = sigma.find(x);
        ModalPtr sx = it == sigma.end() ? m_var(x) : it->second;
        pi[x] = m_or(m_and(m_univ(phi), m_var(x)), m_and(m_not(m_univ(phi)), sx));
    }
    return pi;
}

}  // namespace s2ic
