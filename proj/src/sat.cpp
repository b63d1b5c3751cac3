// ───────────────────────────────────────────────────────────────────────────
// sat.cpp — DPLL over atom assignments with a pair-witness theory check.
//
// satisfiable() compiles the formula into a flat node array whose leaves
// index a deduplicated atom list (first-occurrence order).  A chronological
// DPLL loop assigns atoms three-valued truth (canonical order: lowest atom
// index first, false before true), propagates literals forced by the
// formula structure and by learned clauses, and at every node asks the
// theory question for the atoms assigned so far:
//
//   positives P = atoms assigned true, negatives N = atoms assigned false;
//   is  ⋀P ∧ ⋀{¬n : n ∈ N}  realizable in some contact algebra?
//
// Pair-witness theory check.  It suffices to search models that are
// disjoint unions of two-point cliques with valuations attached to the
// points.  Within one clique {v, w} an atom t ≺ u holds iff
//
//     (t(v) ∨ t(w)) → (u(v) ∧ u(w)),
//
// the four edge directions vv, vw, wv, ww collapsing into that single
// implication.  Hence:
//   (a) with no negatives, one valuation v with t(v) → u(v) for every
//       positive atom suffices; the model duplicates v into a related pair;
//   (b) each negative t' ≺ u' gets its own pair (v, w) satisfying every
//       positive as above plus t'(v) ∧ ¬u'(w), which fails the atom across
//       the v→w edge.
// The per-negative pairs are assembled into one model as a disjoint union,
// and they never interact: the union is a 1-step frame whose edge classes
// are exactly the pairs, so every point's only neighbours are its own pair.
// Positive atoms are universally quantified over edges and were checked
// inside every pair separately; a negative atom needs just one failing edge
// somewhere.  Adding further pairs can neither revive a defeated negative
// nor defeat a checked positive — which is why the search is independent
// per negative (linear in |N|) instead of one joint exponential search.
//
// Monotonicity.  If (P, N) has no pair-witness model, neither does any
// (P', N') with P ⊆ P' and N ⊆ N' — the conditions only get harder.  Two
// consequences carry the solver:
//   * the check runs eagerly on partial assignments; a failure prunes the
//     whole subtree regardless of the still-unassigned atoms;
//   * a failure is recorded as a blocking clause over the responsible atoms
//     only (a greedily minimized positive core plus the single failing
//     negative), not over the whole assignment.  Short clauses are what
//     keep inputs with hundreds of atoms tractable.
//
// Valuation search.  With at most 6 term variables every term compiles to a
// 64-bit truth table (bit v = value under valuation v) and pair feasibility
// is decided exhaustively over at most 2^{2·6} combinations with word-level
// scans.  Beyond 6 variables a backtracking search assigns the two witness
// valuations bit by bit under three-valued constraint pruning; the variable
// budget in Limits caps that secondary path.
// ───────────────────────────────────────────────────────────────────────────

#include "s2ic/sat.hpp"

#include "s2ic/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace s2ic {

namespace {

// ── three-valued helpers (-1 false, 0 unknown, +1 true) ────────────────────

int8_t not3(int8_t a) { return static_cast<int8_t>(-a); }
int8_t and3(int8_t a, int8_t b) {
    if (a == -1 || b == -1) return -1;
    if (a == 1 && b == 1) return 1;
    return 0;
}
int8_t or3(int8_t a, int8_t b) { return not3(and3(not3(a), not3(b))); }
int8_t imp3(int8_t a, int8_t b) { return or3(not3(a), b); }
int8_t iff3(int8_t a, int8_t b) {
    if (a == 0 || b == 0) return 0;
    return a == b ? 1 : -1;
}

// ── the solver ──────────────────────────────────────────────────────────────

class Solver {
  public:
    Solver(const FormPtr& phi, const Limits& limits) : limits_(limits), phi_(phi) {
        // form_atoms dedups structurally (and throws on equations); fold
        // printed duplicates too so every atom index is reachable.
        for (const FormPtr& a : form_atoms(phi)) {
            const std::string key = pretty(a);
            if (atom_index_.count(key)) continue;
            atom_index_[key] = static_cast<int>(atoms_.size());
            atoms_.push_back(a);
        }
        limits_.check_atoms("sat", atoms_.size());

        std::set<std::string> vs;
        for (const FormPtr& a : atoms_) {
            term_vars(a->t, vs);
            term_vars(a->u, vs);
        }
        vars_.assign(vs.begin(), vs.end());
        if (static_cast<int>(vars_.size()) > limits_.max_vars)
            throw ResourceLimitError(
                "sat", "formula uses " + std::to_string(vars_.size()) +
                           " term variables; limit is " + std::to_string(limits_.max_vars));
        for (size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = static_cast<int>(i);

        root_ = compile(phi);
        assign_.assign(atoms_.size(), 0);

        fast_ = vars_.size() <= 6;
        if (fast_) {
            const int V = 1 << vars_.size();
            full_ = (V == 64) ? ~0ull : ((1ull << V) - 1);
            tt_t_.reserve(atoms_.size());
            tt_u_.reserve(atoms_.size());
            for (const FormPtr& a : atoms_) {
                tt_t_.push_back(table(a->t));
                tt_u_.push_back(table(a->u));
            }
        }
    }

    SatResult run() {
        SatResult res;
        if (solve()) {
            // Cheap insurance on the two promised model invariants.
            if (!model_check(model_, phi_) || !is_one_step(model_.frame))
                throw std::logic_error("internal error: sat witness failed verification");
            res.status = SatStatus::Sat;
            res.model = model_;
        } else {
            res.status = SatStatus::Unsat;
        }
        res.stats = stats_;
        return res;
    }

  private:
    // ── compiled formula ────────────────────────────────────────────────────

    struct Node {
        FormOp op;
        int atom = -1;  // for FormOp::Atom
        int a = -1, b = -1;
    };

    int compile(const FormPtr& f) {
        Node nd;
        nd.op = f->op;
        switch (f->op) {
            case FormOp::Top:
            case FormOp::Bot:
                break;
            case FormOp::Atom:
                nd.atom = atom_index_.at(pretty(f));
                break;
            case FormOp::Equation:
                throw std::invalid_argument(
                    "satisfiable: equations must be rewritten to atoms first "
                    "(normalize_atoms)");
            case FormOp::Neg:
                nd.a = compile(f->a);
                break;
            case FormOp::Conj:
            case FormOp::Disj:
            case FormOp::Imp:
            case FormOp::Iff:
                nd.a = compile(f->a);
                nd.b = compile(f->b);
                break;
        }
        nodes_.push_back(nd);
        return static_cast<int>(nodes_.size() - 1);
    }

    int8_t eval3(int idx) const {
        const Node& nd = nodes_[static_cast<size_t>(idx)];
        switch (nd.op) {
            case FormOp::Top: return 1;
            case FormOp::Bot: return -1;
            case FormOp::Atom: return assign_[static_cast<size_t>(nd.atom)];
            case FormOp::Neg: return not3(eval3(nd.a));
            case FormOp::Conj: return and3(eval3(nd.a), eval3(nd.b));
            case FormOp::Disj: return or3(eval3(nd.a), eval3(nd.b));
            case FormOp::Imp: return imp3(eval3(nd.a), eval3(nd.b));
            case FormOp::Iff: return iff3(eval3(nd.a), eval3(nd.b));
            case FormOp::Equation: break;
        }
        throw std::logic_error("internal error: equation survived compilation");
    }

    // ── assignment trail ────────────────────────────────────────────────────

    void set_atom(int a, int8_t v) {
        assign_[static_cast<size_t>(a)] = v;
        trail_.push_back(a);
    }
    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            assign_[static_cast<size_t>(trail_.back())] = 0;
            trail_.pop_back();
        }
    }

    // ── propagation ─────────────────────────────────────────────────────────

    // Forces literals that the formula structure determines under the current
    // partial assignment (a true conjunction forces both conjuncts, a true
    // disjunction with one refuted disjunct forces the other, …).  Returns
    // false on a contradiction; in particular force(root, true) fails exactly
    // when the formula already evaluates to false.
    bool force(int idx, bool want, bool& changed) {
        const Node& nd = nodes_[static_cast<size_t>(idx)];
        switch (nd.op) {
            case FormOp::Top: return want;
            case FormOp::Bot: return !want;
            case FormOp::Atom: {
                const int8_t tv = want ? 1 : -1;
                const int8_t cur = assign_[static_cast<size_t>(nd.atom)];
                if (cur == 0) {
                    set_atom(nd.atom, tv);
                    changed = true;
                    return true;
                }
                return cur == tv;
            }
            case FormOp::Neg: return force(nd.a, !want, changed);
            case FormOp::Conj: {
                if (want) return force(nd.a, true, changed) && force(nd.b, true, changed);
                const int8_t va = eval3(nd.a), vb = eval3(nd.b);
                if (va == 1 && vb == 1) return false;
                if (va == 1) return force(nd.b, false, changed);
                if (vb == 1) return force(nd.a, false, changed);
                return true;
            }
            case FormOp::Disj: {
                if (!want) return force(nd.a, false, changed) && force(nd.b, false, changed);
                const int8_t va = eval3(nd.a), vb = eval3(nd.b);
                if (va == -1) return force(nd.b, true, changed);
                if (vb == -1) return force(nd.a, true, changed);
                return true;
            }
            case FormOp::Imp: {
                if (!want) return force(nd.a, true, changed) && force(nd.b, false, changed);
                const int8_t va = eval3(nd.a), vb = eval3(nd.b);
                if (va == 1 && !force(nd.b, true, changed)) return false;
                if (vb == -1 && !force(nd.a, false, changed)) return false;
                return true;
            }
            case FormOp::Iff: {
                const int8_t va = eval3(nd.a);
                if (va != 0 && !force(nd.b, want == (va == 1), changed)) return false;
                const int8_t vb = eval3(nd.b);
                if (vb != 0 && !force(nd.a, want == (vb == 1), changed)) return false;
                return true;
            }
            case FormOp::Equation: break;
        }
        throw std::logic_error("internal error: equation survived compilation");
    }

    int8_t lit_value(int lit) const {
        const int8_t v = assign_[static_cast<size_t>(std::abs(lit) - 1)];
        return lit > 0 ? v : not3(v);
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            if (!force(root_, true, changed)) return false;
            for (const std::vector<int>& cl : clauses_) {
                bool satisfied = false;
                int open = 0, open_lit = 0;
                for (int lit : cl) {
                    const int8_t v = lit_value(lit);
                    if (v == 1) {
                        satisfied = true;
                        break;
                    }
                    if (v == 0) {
                        ++open;
                        open_lit = lit;
                    }
                }
                if (satisfied) continue;
                if (open == 0) return false;  // clause falsified
                if (open == 1) {              // unit: last literal is forced
                    set_atom(std::abs(open_lit) - 1, open_lit > 0 ? 1 : -1);
                    changed = true;
                }
            }
        }
        return true;
    }

    // ── theory check, fast path (≤ 6 variables, 64-bit truth tables) ────────

    uint64_t table(const TermPtr& t) const {
        switch (t->op) {
            case TermOp::Zero: return 0;
            case TermOp::One: return full_;
            case TermOp::Var: {
                const int i = var_index_.at(t->var);
                uint64_t m = 0;
                for (int v = 0; v < (1 << vars_.size()); ++v)
                    if ((v >> i) & 1) m |= 1ull << v;
                return m;
            }
            case TermOp::Not: return ~table(t->a) & full_;
            case TermOp::And: return table(t->a) & table(t->b);
            case TermOp::Or: return table(t->a) | table(t->b);
            case TermOp::Xor: return table(t->a) ^ table(t->b);
            case TermOp::Imp: return (~table(t->a) | table(t->b)) & full_;
            case TermOp::Iff: return ~(table(t->a) ^ table(t->b)) & full_;
        }
        throw std::logic_error("unreachable term op");
    }

    struct TheoryResult {
        bool ok = false;
        // Witness valuations (bit i = value of vars_[i]), one pair per
        // negative atom in ascending index order; a single duplicated pair
        // when there are no negatives.
        std::vector<std::pair<uint64_t, uint64_t>> pairs;
        // On failure: positive core plus the failing negative (-1 when the
        // positives alone are contradictory).
        std::vector<int> core;
        int failing_neg = -1;
    };

    uint64_t diag_of(const std::vector<int>& pos) const {
        uint64_t diag = full_;
        for (int p : pos) diag &= ~tt_t_[static_cast<size_t>(p)] | tt_u_[static_cast<size_t>(p)];
        return diag;
    }

    // W(v): the valuations w such that (v, w) satisfies every positive atom.
    uint64_t pair_partners(const std::vector<int>& pos, uint64_t diag, int v) const {
        uint64_t m = diag;
        for (int p : pos) {
            const size_t i = static_cast<size_t>(p);
            if ((tt_t_[i] >> v) & 1) m &= tt_u_[i];   // t(v) → u(w)
            if (!((tt_u_[i] >> v) & 1)) m &= ~tt_t_[i];  // t(w) → u(v)
        }
        return m & full_;
    }

    bool fast_find_pair(const std::vector<int>& pos, int neg, uint64_t& out_v,
                        uint64_t& out_w) const {
        const uint64_t diag = diag_of(pos);
        uint64_t vs = diag & tt_t_[static_cast<size_t>(neg)];
        while (vs) {
            const int v = __builtin_ctzll(vs);
            vs &= vs - 1;
            const uint64_t ws =
                pair_partners(pos, diag, v) & ~tt_u_[static_cast<size_t>(neg)] & full_;
            if (ws) {
                out_v = static_cast<uint64_t>(v);
                out_w = static_cast<uint64_t>(__builtin_ctzll(ws));
                return true;
            }
        }
        return false;
    }

    // Greedy core minimization: drop positives whose removal keeps the
    // conflict.  Skipped above the cap — the quadratic scan would cost more
    // than the longer clause is worth.
    static constexpr size_t kMinimizeCap = 48;

    std::vector<int> minimize_pos_core(const std::vector<int>& pos) const {
        std::vector<int> core = pos;
        if (core.size() > kMinimizeCap) return core;
        size_t i = 0;
        while (i < core.size()) {
            std::vector<int> trial = core;
            trial.erase(trial.begin() + static_cast<long>(i));
            if (diag_of(trial) == 0)
                core = std::move(trial);
            else
                ++i;
        }
        return core;
    }

    std::vector<int> minimize_neg_core(const std::vector<int>& pos, int neg) const {
        std::vector<int> core = pos;
        if (core.size() > kMinimizeCap) return core;
        uint64_t v = 0, w = 0;
        size_t i = 0;
        while (i < core.size()) {
            std::vector<int> trial = core;
            trial.erase(trial.begin() + static_cast<long>(i));
            if (!fast_find_pair(trial, neg, v, w))
                core = std::move(trial);
            else
                ++i;
        }
        return core;
    }

    void theory_fast(const std::vector<int>& pos, const std::vector<int>& neg,
                     TheoryResult& out) const {
        const uint64_t diag = diag_of(pos);
        if (diag == 0) {  // positives alone are contradictory
            out.core = minimize_pos_core(pos);
            return;
        }
        if (neg.empty()) {
            const uint64_t v = static_cast<uint64_t>(__builtin_ctzll(diag));
            out.pairs.emplace_back(v, v);
            out.ok = true;
            return;
        }
        for (int n : neg) {
            uint64_t v = 0, w = 0;
            if (!fast_find_pair(pos, n, v, w)) {
                out.core = minimize_neg_core(pos, n);
                out.failing_neg = n;
                return;
            }
            out.pairs.emplace_back(v, w);
        }
        out.ok = true;
    }

    // ── theory check, slow path (> 6 variables) ─────────────────────────────

    int8_t tval3(const TermPtr& t, const std::vector<int8_t>& vals) const {
        switch (t->op) {
            case TermOp::Zero: return -1;
            case TermOp::One: return 1;
            case TermOp::Var: return vals[static_cast<size_t>(var_index_.at(t->var))];
            case TermOp::Not: return not3(tval3(t->a, vals));
            case TermOp::And: return and3(tval3(t->a, vals), tval3(t->b, vals));
            case TermOp::Or: return or3(tval3(t->a, vals), tval3(t->b, vals));
            case TermOp::Imp: return imp3(tval3(t->a, vals), tval3(t->b, vals));
            case TermOp::Iff: return iff3(tval3(t->a, vals), tval3(t->b, vals));
            case TermOp::Xor: return not3(iff3(tval3(t->a, vals), tval3(t->b, vals)));
        }
        throw std::logic_error("unreachable term op");
    }

    // Conjunction status of all pair constraints under partial valuations:
    // -1 some constraint refuted, +1 all settled true, 0 still open.
    int8_t pair_status(const std::vector<int>& pos, int neg, const std::vector<int8_t>& v,
                       const std::vector<int8_t>& w) const {
        int8_t acc = 1;
        for (int p : pos) {
            const FormPtr& a = atoms_[static_cast<size_t>(p)];
            const int8_t lhs = or3(tval3(a->t, v), tval3(a->t, w));
            const int8_t rhs = and3(tval3(a->u, v), tval3(a->u, w));
            const int8_t c = imp3(lhs, rhs);
            if (c == -1) return -1;
            acc = and3(acc, c);
        }
        if (neg >= 0) {
            const FormPtr& a = atoms_[static_cast<size_t>(neg)];
            const int8_t c1 = tval3(a->t, v);
            const int8_t c2 = not3(tval3(a->u, w));
            if (c1 == -1 || c2 == -1) return -1;
            acc = and3(acc, and3(c1, c2));
        }
        return acc;
    }

    uint64_t pack(const std::vector<int8_t>& vals) const {
        uint64_t code = 0;
        for (size_t i = 0; i < vals.size(); ++i)
            if (vals[i] == 1) code |= 1ull << i;
        return code;
    }

    // Assigns the bits of v then the bits of w, false first, pruning with
    // the three-valued status.  `same` collapses w onto v for the
    // no-negatives case (a duplicated pair).
    bool slow_search(const std::vector<int>& pos, int neg, bool same, std::vector<int8_t>& v,
                     std::vector<int8_t>& w, size_t depth) {
        if (++slow_nodes_ % 4096 == 0) limits_.check("sat-theory");
        const int8_t st = pair_status(pos, neg, v, same ? v : w);
        if (st == -1) return false;
        const size_t total = same ? vars_.size() : 2 * vars_.size();
        if (depth == total) return st == 1;
        std::vector<int8_t>& slot = (depth < vars_.size()) ? v : w;
        const size_t i = (depth < vars_.size()) ? depth : depth - vars_.size();
        for (int8_t b : {static_cast<int8_t>(-1), static_cast<int8_t>(1)}) {
            slot[i] = b;
            if (slow_search(pos, neg, same, v, w, depth + 1)) return true;
        }
        slot[i] = 0;
        return false;
    }

    void theory_slow(const std::vector<int>& pos, const std::vector<int>& neg,
                     TheoryResult& out) {
        std::vector<int8_t> v(vars_.size(), 0), w(vars_.size(), 0);
        if (neg.empty()) {
            if (slow_search(pos, -1, /*same=*/true, v, w, 0)) {
                const uint64_t code = pack(v);
                out.pairs.emplace_back(code, code);
                out.ok = true;
            } else {
                out.core = pos;  // no minimization on the secondary path
            }
            return;
        }
        for (int n : neg) {
            std::fill(v.begin(), v.end(), 0);
            std::fill(w.begin(), w.end(), 0);
            if (!slow_search(pos, n, /*same=*/false, v, w, 0)) {
                out.core = pos;
                out.failing_neg = n;
                return;
            }
            out.pairs.emplace_back(pack(v), pack(w));
        }
        out.ok = true;
    }

    void theory_check(TheoryResult& out) {
        std::vector<int> pos, neg;
        for (size_t i = 0; i < assign_.size(); ++i) {
            if (assign_[i] == 1) pos.push_back(static_cast<int>(i));
            if (assign_[i] == -1) neg.push_back(static_cast<int>(i));
        }
        if (fast_)
            theory_fast(pos, neg, out);
        else
            theory_slow(pos, neg, out);
    }

    void learn(const TheoryResult& th) {
        std::vector<int> clause;
        clause.reserve(th.core.size() + 1);
        for (int p : th.core) clause.push_back(-(p + 1));
        if (th.failing_neg >= 0) clause.push_back(th.failing_neg + 1);
        clauses_.push_back(std::move(clause));
        ++stats_.learned;
    }

    // ── model assembly ──────────────────────────────────────────────────────

    KripkeModel build_model(const TheoryResult& th) const {
        const size_t k = th.pairs.size();
        std::vector<std::string> points;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < k; ++i) {
            points.push_back("p" + std::to_string(2 * i + 1));
            points.push_back("p" + std::to_string(2 * i + 2));
            edges.emplace_back(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
        }
        KripkeModel model;
        model.frame = make_frame("witness", std::move(points), edges);
        for (size_t j = 0; j < vars_.size(); ++j) {
            PointSet ps(2 * k, false);
            for (size_t i = 0; i < k; ++i) {
                ps[2 * i] = (th.pairs[i].first >> j) & 1;
                ps[2 * i + 1] = (th.pairs[i].second >> j) & 1;
            }
            model.valuation[vars_[j]] = std::move(ps);
        }
        return model;
    }

    // ── search ──────────────────────────────────────────────────────────────

    int pick_unassigned() const {
        for (size_t i = 0; i < assign_.size(); ++i)
            if (assign_[i] == 0) return static_cast<int>(i);
        return -1;
    }

    bool solve() {
        limits_.check("sat");
        ++stats_.assignments;
        if (!propagate()) return false;
        const int8_t fv = eval3(root_);
        if (fv == -1) return false;
        TheoryResult th;
        ++stats_.theory_checks;
        theory_check(th);
        if (!th.ok) {
            learn(th);
            return false;
        }
        if (fv == 1) {  // abstraction decided; unassigned atoms are don't-cares
            model_ = build_model(th);
            return true;
        }
        const int a = pick_unassigned();
        const size_t mark = trail_.size();
        set_atom(a, -1);
        if (solve()) return true;
        undo_to(mark);
        set_atom(a, 1);
        if (solve()) return true;
        undo_to(mark);
        return false;
    }

    // ── state ───────────────────────────────────────────────────────────────

    const Limits& limits_;
    FormPtr phi_;
    std::vector<FormPtr> atoms_;
    std::map<std::string, int> atom_index_;
    std::vector<std::string> vars_;
    std::map<std::string, int> var_index_;
    std::vector<Node> nodes_;
    int root_ = -1;

    bool fast_ = false;
    uint64_t full_ = 1;  // mask of valid valuation bits on the fast path
    std::vector<uint64_t> tt_t_, tt_u_;

    std::vector<int8_t> assign_;
    std::vector<int> trail_;
    std::vector<std::vector<int>> clauses_;
    uint64_t slow_nodes_ = 0;

    KripkeModel model_;
    SatStats stats_;
};

}  // namespace

SatResult satisfiable(const FormPtr& phi, const Limits& limits) {
    Solver solver(phi, limits);
    return solver.run();
}

EntailResult entails(const FormPtr& phi, const FormPtr& psi, const Limits& limits) {
    const FormPtr question = f_conj(normalize_atoms(phi), f_neg(normalize_atoms(psi)));
    SatResult sat = satisfiable(question, limits);
    EntailResult res;
    res.holds = (sat.status == SatStatus::Unsat);
    res.countermodel = std::move(sat.model);
    res.stats = sat.stats;
    return res;
}

// ── brute-force oracle ───────────────────────────────────────────────────────

namespace {

// Term extent as a bitmask over frame points.
uint32_t oracle_extent(const TermPtr& t, const std::map<std::string, uint32_t>& val,
                       uint32_t full) {
    switch (t->op) {
        case TermOp::Zero: return 0;
        case TermOp::One: return full;
        case TermOp::Var: {
            auto it = val.find(t->var);
            return it == val.end() ? 0 : it->second;
        }
        case TermOp::Not: return ~oracle_extent(t->a, val, full) & full;
        case TermOp::And: return oracle_extent(t->a, val, full) & oracle_extent(t->b, val, full);
        case TermOp::Or: return oracle_extent(t->a, val, full) | oracle_extent(t->b, val, full);
        case TermOp::Xor: return oracle_extent(t->a, val, full) ^ oracle_extent(t->b, val, full);
        case TermOp::Imp:
            return (~oracle_extent(t->a, val, full) | oracle_extent(t->b, val, full)) & full;
        case TermOp::Iff:
            return ~(oracle_extent(t->a, val, full) ^ oracle_extent(t->b, val, full)) & full;
    }
    throw std::logic_error("unreachable term op");
}

bool oracle_eval(const FormPtr& f, const std::map<std::string, uint32_t>& val,
                 const std::vector<uint32_t>& adj, uint32_t full) {
    switch (f->op) {
        case FormOp::Top: return true;
        case FormOp::Bot: return false;
        case FormOp::Atom: {
            const uint32_t te = oracle_extent(f->t, val, full);
            const uint32_t ue = oracle_extent(f->u, val, full);
            for (size_t x = 0; x < adj.size(); ++x)
                if (((te >> x) & 1) && (adj[x] & ~ue)) return false;
            return true;
        }
        case FormOp::Equation:
            return oracle_extent(f->t, val, full) == oracle_extent(f->u, val, full);
        case FormOp::Neg: return !oracle_eval(f->a, val, adj, full);
        case FormOp::Conj:
            return oracle_eval(f->a, val, adj, full) && oracle_eval(f->b, val, adj, full);
        case FormOp::Disj:
            return oracle_eval(f->a, val, adj, full) || oracle_eval(f->b, val, adj, full);
        case FormOp::Imp:
            return !oracle_eval(f->a, val, adj, full) || oracle_eval(f->b, val, adj, full);
        case FormOp::Iff:
            return oracle_eval(f->a, val, adj, full) == oracle_eval(f->b, val, adj, full);
    }
    throw std::logic_error("unreachable formula op");
}

}  // namespace

SatResult brute_force_oracle(const FormPtr& phi, int max_points, const Limits& limits) {
    if (max_points < 1) throw std::invalid_argument("brute_force_oracle: max_points must be ≥ 1");
    std::set<std::string> vset;
    form_vars(phi, vset);
    std::vector<std::string> vars(vset.begin(), vset.end());
    const int nv = static_cast<int>(vars.size());

    // Cost guard: the enumeration below runs 2^{k(k-1)/2} · 2^{k·nv} formula
    // evaluations per point count k.
    long double total = 0;
    for (int k = 1; k <= max_points; ++k)
        total += std::pow(2.0L, k * (k - 1) / 2) * std::pow(2.0L, k * nv);
    if (total > 6e7L)
        throw ResourceLimitError("oracle", "enumeration would need ~" +
                                               std::to_string(static_cast<double>(total)) +
                                               " model evaluations");

    SatResult res;
    uint64_t evals = 0;
    for (int k = 1; k <= max_points; ++k) {
        const uint32_t full = (1u << k) - 1;
        std::vector<std::pair<int, int>> pair_at;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) pair_at.emplace_back(i, j);
        const int m = static_cast<int>(pair_at.size());
        for (uint64_t emask = 0; emask < (1ull << m); ++emask) {
            std::vector<uint32_t> adj(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) adj[static_cast<size_t>(i)] = 1u << i;
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < m; ++b)
                if ((emask >> b) & 1) {
                    const auto [i, j] = pair_at[static_cast<size_t>(b)];
                    adj[static_cast<size_t>(i)] |= 1u << j;
                    adj[static_cast<size_t>(j)] |= 1u << i;
                    edges.emplace_back(i, j);
                }
            for (uint64_t vcode = 0; vcode < (1ull << (k * nv)); ++vcode) {
                if (++evals % 8192 == 0) limits.check("oracle");
                ++res.stats.assignments;
                std::map<std::string, uint32_t> val;
                for (int v = 0; v < nv; ++v)
                    val[vars[static_cast<size_t>(v)]] =
                        static_cast<uint32_t>((vcode >> (v * k)) & full);
                if (!oracle_eval(phi, val, adj, full)) continue;
                std::vector<std::string> points;
                for (int i = 1; i <= k; ++i) points.push_back("q" + std::to_string(i));
                KripkeModel model;
                model.frame = make_frame("oracle", std::move(points), edges);
                for (const auto& [name, mask] : val) {
                    PointSet ps(static_cast<size_t>(k), false);
                    for (int i = 0; i < k; ++i) ps[static_cast<size_t>(i)] = (mask >> i) & 1;
                    model.valuation[name] = std::move(ps);
                }
                res.status = SatStatus::Sat;
                res.model = std::move(model);
                return res;
            }
        }
    }
    res.status = SatStatus::Unsat;
    return res;
}

}  // namespace s2ic
