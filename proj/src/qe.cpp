// ───────────────────────────────────────────────────────────────────────────
// qe.cpp — pair-type quantifier elimination.
//
// Setting.  Work over models that are disjoint unions of two-point cliques
// (every satisfiable quantifier-free formula has one, and existentially
// closed algebras embed them all).  For a fixed basis of atoms, each clique
// is summarized by its signature — the set of basis atoms it satisfies —
// and the signature of a disjoint union is the INTERSECTION of the
// component signatures, because an atom t ≺ u is a universal statement
// about edges and the union adds no cross edges.
//
// eliminate(φ, ȳ, x̄) asks: which x̄-facts can coexist with ∃ȳ φ?  The
// basis is φ's own atoms followed by every minterm atom over x̄ (atoms
// m ≺ m' between conjunctions of kept literals — enough to pin down the
// complete quantifier-free x̄-type).  The algorithm:
//
//   1. Enumerate pair types: all valuation pairs over x̄ ∪ ȳ, deduplicated
//      by signature.  These are all possible components.
//   2. For every subset A of φ's atoms that propositionally satisfies φ
//      (a "class"): a union models φ with exactly-A when every component
//      signature contains A (so the A-atoms survive the intersection) and
//      every atom of Dead = atoms(φ) ∖ A is killed by at least one
//      component.  P_A collects the candidate components.
//   3. The reachable minterm profiles for the class are the intersections
//      ⋂ minterm_sig over subsets of P_A containing one killer per dead
//      atom (one arbitrary component when Dead = ∅).  Such profiles are
//      upward closed towards θ_A = ⋂_{τ ∈ P_A} minterm_sig(τ): adding
//      components only shrinks a profile, and θ_A is the floor.  So the
//      profile set is described by θ_A (atoms present in every profile)
//      plus the ⊆-maximal profiles B reachable from killer choices: a
//      disjunct  θ_A ∧ ⋁_B ⋀ {¬β : minterm atom β ∉ B}  says "the true
//      minterm atoms include θ_A and fit under some maximal B".
//   4. φ* is the disjunction over realizable classes (⊥ if none).
//
// The maximal-B computation processes dead atoms one at a time keeping
// only ⊆-maximal partial intersections.  That pruning is exact: if partial
// I ⊆ I′ then any final I ∩ S is contained in I′ ∩ S, so dropping dominated
// partials never loses a maximal final profile.
//
// Determinism: classes are visited in ascending subset order, pair types in
// ascending valuation order, frontier sets in a sorted canonical order, so
// the output formula text is a pure function of the input.
// ───────────────────────────────────────────────────────────────────────────

#include "s2ic/qe.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "s2ic/sat.hpp"
#include "s2ic/transform.hpp"

namespace s2ic {

namespace {

// Truth vector of a term over all valuations of `vars` (entry v = value of
// the term when vars[i] is bit i of v), memoized per printed term.
class TermTables {
  public:
    TermTables(const std::vector<std::string>& vars) : vars_(vars) {
        for (size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = i;
        nvals_ = size_t{1} << vars.size();
    }

    const std::vector<char>& of(const TermPtr& t) {
        const std::string key = pretty(t);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<char> tab(nvals_);
        switch (t->op) {
            case TermOp::Zero: break;
            case TermOp::One: std::fill(tab.begin(), tab.end(), 1); break;
            case TermOp::Var: {
                const size_t i = index_.at(t->var);
                for (size_t v = 0; v < nvals_; ++v) tab[v] = (v >> i) & 1;
                break;
            }
            case TermOp::Not: {
                const std::vector<char>& a = of(t->a);
                for (size_t v = 0; v < nvals_; ++v) tab[v] = !a[v];
                break;
            }
            default: {
                const std::vector<char>& a = of(t->a);
                const std::vector<char>& b = of(t->b);
                for (size_t v = 0; v < nvals_; ++v) {
                    switch (t->op) {
                        case TermOp::And: tab[v] = a[v] && b[v]; break;
                        case TermOp::Or: tab[v] = a[v] || b[v]; break;
                        case TermOp::Xor: tab[v] = a[v] != b[v]; break;
                        case TermOp::Imp: tab[v] = !a[v] || b[v]; break;
                        case TermOp::Iff: tab[v] = a[v] == b[v]; break;
                        default: throw std::logic_error("unreachable term op");
                    }
                }
            }
        }
        return memo_.emplace(key, std::move(tab)).first->second;
    }

  private:
    std::vector<std::string> vars_;
    std::map<std::string, size_t> index_;
    size_t nvals_ = 0;
    std::map<std::string, std::vector<char>> memo_;
};

// Atom truth in the two-point clique {v, w}: the four edge directions
// collapse to (t(v) ∨ t(w)) → (u(v) ∧ u(w)).
bool clique_atom(const std::vector<char>& t, const std::vector<char>& u, uint64_t v, uint64_t w) {
    return (!t[v] && !t[w]) || (u[v] && u[w]);
}

std::string sig_key(const std::vector<bool>& a, const std::vector<bool>& b) {
    std::string key(a.size() + b.size(), '0');
    for (size_t i = 0; i < a.size(); ++i) key[i] = a[i] ? '1' : '0';
    for (size_t i = 0; i < b.size(); ++i) key[a.size() + i] = b[i] ? '1' : '0';
    return key;
}

// Propositional truth of φ when atom i is true iff bit i of mask is set.
bool prop_eval(const FormPtr& f, const std::vector<FormPtr>& atoms,
               const std::map<std::string, size_t>& atom_index, uint64_t mask) {
    switch (f->op) {
        case FormOp::Top: return true;
        case FormOp::Bot: return false;
        case FormOp::Atom: return (mask >> atom_index.at(pretty(f))) & 1;
        case FormOp::Neg: return !prop_eval(f->a, atoms, atom_index, mask);
        case FormOp::Conj:
            return prop_eval(f->a, atoms, atom_index, mask) &&
                   prop_eval(f->b, atoms, atom_index, mask);
        case FormOp::Disj:
            return prop_eval(f->a, atoms, atom_index, mask) ||
                   prop_eval(f->b, atoms, atom_index, mask);
        case FormOp::Imp:
            return !prop_eval(f->a, atoms, atom_index, mask) ||
                   prop_eval(f->b, atoms, atom_index, mask);
        case FormOp::Iff:
            return prop_eval(f->a, atoms, atom_index, mask) ==
                   prop_eval(f->b, atoms, atom_index, mask);
        case FormOp::Equation: break;
    }
    throw std::invalid_argument("eliminate: equations must be rewritten first (normalize_atoms)");
}

}  // namespace

// ── pair-type enumeration ────────────────────────────────────────────────────

PairTypeTable enumerate_pair_types(const FormPtr& phi,
                                   const std::vector<std::string>& eliminated,
                                   const std::vector<std::string>& kept, const Limits& limits) {
    PairTypeTable table;

    std::set<std::string> seen;
    for (const std::string& x : kept)
        if (!seen.insert(x).second)
            throw std::invalid_argument("eliminate: duplicate kept variable " + x);
    for (const std::string& y : eliminated)
        if (!seen.insert(y).second)
            throw std::invalid_argument("eliminate: variable " + y +
                                        " listed twice or both kept and eliminated");
    std::set<std::string> phi_vars;
    form_vars(phi, phi_vars);
    for (const std::string& v : phi_vars)
        if (!seen.count(v))
            throw std::invalid_argument("eliminate: formula variable " + v +
                                        " is neither kept nor eliminated");

    table.vars = kept;
    table.vars.insert(table.vars.end(), eliminated.begin(), eliminated.end());
    table.phi_atoms = form_atoms(phi);  // throws on equations
    table.minterm_atoms = minterm_atoms(kept);
    limits.check_atoms("qe", table.phi_atoms.size() + table.minterm_atoms.size());

    const size_t nv = table.vars.size();
    if (nv >= 30 ||
        ((uint64_t{1} << nv) * ((uint64_t{1} << nv) + 1)) / 2 > limits.max_pair_types)
        throw ResourceLimitError(
            "qe", "pair enumeration over " + std::to_string(nv) +
                      " variables exceeds the pair-type budget of " +
                      std::to_string(limits.max_pair_types));

    TermTables tables(table.vars);
    std::vector<const std::vector<char>*> pt, pu, mt, mu;
    for (const FormPtr& a : table.phi_atoms) {
        pt.push_back(&tables.of(a->t));
        pu.push_back(&tables.of(a->u));
    }
    for (const FormPtr& a : table.minterm_atoms) {
        mt.push_back(&tables.of(a->t));
        mu.push_back(&tables.of(a->u));
    }

    const uint64_t nvals = uint64_t{1} << nv;
    std::set<std::string> sigs;
    uint64_t scanned = 0;
    for (uint64_t v = 0; v < nvals; ++v) {
        for (uint64_t w = v; w < nvals; ++w) {
            if (++scanned % 4096 == 0) limits.check("qe");
            PairType ty;
            ty.v = v;
            ty.w = w;
            ty.phi_sig.resize(table.phi_atoms.size());
            ty.minterm_sig.resize(table.minterm_atoms.size());
            for (size_t i = 0; i < pt.size(); ++i) ty.phi_sig[i] = clique_atom(*pt[i], *pu[i], v, w);
            for (size_t i = 0; i < mt.size(); ++i)
                ty.minterm_sig[i] = clique_atom(*mt[i], *mu[i], v, w);
            if (sigs.insert(sig_key(ty.phi_sig, ty.minterm_sig)).second) {
                if (sigs.size() > limits.max_pair_types)
                    throw ResourceLimitError("qe", "more than " +
                                                       std::to_string(limits.max_pair_types) +
                                                       " distinct pair types");
                table.types.push_back(std::move(ty));
            }
        }
    }
    return table;
}

KripkeModel pair_type_model(const PairTypeTable& table, const PairType& type) {
    KripkeModel model;
    model.frame = make_frame("pair", {"a", "b"}, {{0, 1}});
    for (size_t i = 0; i < table.vars.size(); ++i) {
        PointSet ps(2, false);
        ps[0] = (type.v >> i) & 1;
        ps[1] = (type.w >> i) & 1;
        model.valuation[table.vars[i]] = std::move(ps);
    }
    return model;
}

// ── elimination ─────────────────────────────────────────────────────────────

QeResult eliminate(const FormPtr& phi, const std::vector<std::string>& eliminated,
                   const std::vector<std::string>& kept, const Limits& limits) {
    QeResult res;
    PairTypeTable table = enumerate_pair_types(phi, eliminated, kept, limits);
    res.stats.pair_types = table.types.size();

    const size_t n_atoms = table.phi_atoms.size();
    const size_t n_min = table.minterm_atoms.size();
    std::map<std::string, size_t> atom_index;
    for (size_t i = 0; i < n_atoms; ++i) atom_index[pretty(table.phi_atoms[i])] = i;

    if (n_atoms >= 60 || (uint64_t{1} << n_atoms) > limits.max_classes)
        throw ResourceLimitError("qe", "class enumeration over " + std::to_string(n_atoms) +
                                           " atoms exceeds the class budget of " +
                                           std::to_string(limits.max_classes));

    std::vector<FormPtr> disjuncts;
    for (uint64_t a_mask = 0; a_mask < (uint64_t{1} << n_atoms); ++a_mask) {
        limits.check("qe");
        ++res.stats.classes;
        if (!prop_eval(phi, table.phi_atoms, atom_index, a_mask)) continue;

        // Components usable for this class: signature contains every A-atom.
        std::vector<size_t> candidates;
        for (size_t t = 0; t < table.types.size(); ++t) {
            bool ok = true;
            for (size_t i = 0; i < n_atoms && ok; ++i)
                if (((a_mask >> i) & 1) && !table.types[t].phi_sig[i]) ok = false;
            if (ok) candidates.push_back(t);
        }
        if (candidates.empty()) continue;

        // Every dead atom needs a killer among the candidates.
        std::vector<std::vector<size_t>> killers;  // per dead atom
        bool realizable = true;
        for (size_t i = 0; i < n_atoms && realizable; ++i) {
            if ((a_mask >> i) & 1) continue;
            std::vector<size_t> ks;
            for (size_t t : candidates)
                if (!table.types[t].phi_sig[i]) ks.push_back(t);
            if (ks.empty())
                realizable = false;
            else
                killers.push_back(std::move(ks));
        }
        if (!realizable) continue;
        ++res.stats.realizable;

        // θ: minterm atoms present in every candidate (the profile floor).
        std::vector<bool> theta(n_min, true);
        for (size_t t : candidates)
            for (size_t i = 0; i < n_min; ++i)
                if (!table.types[t].minterm_sig[i]) theta[i] = false;

        // Maximal reachable profiles from killer choices, dead atom by dead
        // atom, keeping only ⊆-maximal partial intersections (exact; see
        // the header comment).
        auto insert_maximal = [](std::vector<std::vector<bool>>& frontier,
                                 const std::vector<bool>& cand) {
            for (const std::vector<bool>& f : frontier) {
                bool superset = true;
                for (size_t i = 0; i < cand.size() && superset; ++i)
                    if (cand[i] && !f[i]) superset = false;
                if (superset) return;  // dominated (or duplicate)
            }
            frontier.erase(std::remove_if(frontier.begin(), frontier.end(),
                                          [&](const std::vector<bool>& f) {
                                              for (size_t i = 0; i < cand.size(); ++i)
                                                  if (f[i] && !cand[i]) return false;
                                              return true;  // f ⊆ cand: now dominated
                                          }),
                           frontier.end());
            frontier.push_back(cand);
        };

        std::vector<std::vector<bool>> frontier;
        if (killers.empty()) {
            // No dead atoms: one arbitrary component suffices, so the
            // maximal profiles are the maximal candidate signatures.
            for (size_t t : candidates)
                insert_maximal(frontier, table.types[t].minterm_sig);
        } else {
            for (size_t t : killers[0]) insert_maximal(frontier, table.types[t].minterm_sig);
            for (size_t d = 1; d < killers.size(); ++d) {
                std::vector<std::vector<bool>> next;
                for (const std::vector<bool>& part : frontier) {
                    for (size_t t : killers[d]) {
                        std::vector<bool> meet(n_min);
                        for (size_t i = 0; i < n_min; ++i)
                            meet[i] = part[i] && table.types[t].minterm_sig[i];
                        insert_maximal(next, meet);
                        if (next.size() > limits.max_families)
                            throw ResourceLimitError(
                                "qe", "killer-choice frontier exceeded " +
                                          std::to_string(limits.max_families) + " profiles");
                    }
                }
                frontier = std::move(next);
            }
        }
        res.stats.max_frontier = std::max(res.stats.max_frontier,
                                          static_cast<uint64_t>(frontier.size()));

        // Canonical order for the disjunct text.
        std::sort(frontier.begin(), frontier.end());

        std::vector<FormPtr> theta_part;
        for (size_t i = 0; i < n_min; ++i)
            if (theta[i]) theta_part.push_back(table.minterm_atoms[i]);
        std::vector<FormPtr> caps;
        for (const std::vector<bool>& b : frontier) {
            std::vector<FormPtr> negs;
            for (size_t i = 0; i < n_min; ++i)
                if (!b[i]) negs.push_back(f_neg(table.minterm_atoms[i]));
            caps.push_back(f_conj(negs));
        }
        disjuncts.push_back(f_conj(f_conj(theta_part), f_disj(caps)));
    }

    res.formula = f_disj(disjuncts);
    return res;
}

// ── simplification ───────────────────────────────────────────────────────────

namespace {

std::vector<FormPtr> disjuncts_of(const FormPtr& f) {
    if (f->op != FormOp::Disj) return {f};
    std::vector<FormPtr> left = disjuncts_of(f->a);
    std::vector<FormPtr> right = disjuncts_of(f->b);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

}  // namespace

FormPtr simplify(const FormPtr& psi, const Limits& limits) {
    FormPtr cur = psi;
    bool changed = true;
    while (changed) {
        changed = false;

        // Drop disjuncts entailed by another disjunct (first of an
        // equivalent group survives).
        std::vector<FormPtr> ds = disjuncts_of(cur);
        std::vector<bool> dead(ds.size(), false);
        for (size_t i = 0; i < ds.size(); ++i) {
            for (size_t j = 0; j < ds.size() && !dead[i]; ++j) {
                if (j == i || dead[j]) continue;
                if (!entails(ds[i], ds[j], limits).holds) continue;
                if (j < i || !entails(ds[j], ds[i], limits).holds) {
                    dead[i] = true;
                    changed = true;
                }
            }
        }
        std::vector<FormPtr> kept_ds;
        for (size_t i = 0; i < ds.size(); ++i)
            if (!dead[i]) kept_ds.push_back(ds[i]);

        // Inside each disjunct, drop conjuncts entailed by their siblings.
        for (FormPtr& d : kept_ds) {
            std::vector<FormPtr> cs = conjuncts_of(d);
            size_t i = 0;
            while (i < cs.size()) {
                if (cs.size() == 1) break;
                std::vector<FormPtr> rest;
                for (size_t j = 0; j < cs.size(); ++j)
                    if (j != i) rest.push_back(cs[j]);
                if (entails(f_conj(rest), cs[i], limits).holds) {
                    cs.erase(cs.begin() + static_cast<long>(i));
                    changed = true;
                } else {
                    ++i;
                }
            }
            d = f_conj(cs);
        }
        cur = f_disj(kept_ds);
    }

    // Certify Con-equivalence of input and output.
    if (!entails(psi, cur, limits).holds || !entails(cur, psi, limits).holds)
        throw std::logic_error("internal error: simplify changed the formula's meaning");
    return cur;
}

}  // namespace s2ic
