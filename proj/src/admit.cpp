// ───────────────────────────────────────────────────────────────────────────
// admit.cpp — admissibility pipeline, validity checker, bundled rules.
//
// Two soundness notes that the code below leans on:
//
//  * Branch-level elimination.  The antecedent branches contain no premise
//    parameters, and ∃p̄ distributes over the disjunction of consequent
//    branches, so eliminating per branch and assembling
//        ψ = ⋀_i (A_i ⇒ ⋁_j Q_j)
//    is equivalent to eliminating from the whole matrix at once — at a
//    fraction of the minterm basis size.
//
//  * Variable-restricted elimination.  Within one consequent branch, the
//    conjuncts free of eliminated variables are pulled out of the
//    existential (∃p̄ (C_e ∧ C_pure) ≡ (∃p̄ C_e) ∧ C_pure), and the
//    elimination of ∃p̄ C_e keeps only the kept variables that occur in
//    C_e.  Both the restricted and the full result are quantifier-free
//    formulas equivalent to ∃p̄ C_e over every existentially closed
//    algebra; quantifier-free equivalences transfer along embeddings, and
//    every contact algebra embeds into an existentially closed one, so the
//    two are interchangeable in ψ over all contact algebras — while the
//    minterm basis shrinks from 4^|kept| to 4^|kept ∩ vars(C_e)|.
// ───────────────────────────────────────────────────────────────────────────

#include "s2ic/admit.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "s2ic/transform.hpp"

namespace s2ic {

// ── matrix construction ──────────────────────────────────────────────────────

std::vector<std::pair<FormPtr, FormPtr>> Pi2Matrix::branch_pairs() const {
    std::vector<std::pair<FormPtr, FormPtr>> out;
    out.reserve(antecedents.size() * consequents.size());
    for (const FormPtr& a : antecedents)
        for (const FormPtr& c : consequents) out.emplace_back(a, c);
    return out;
}

Pi2Matrix pi2_matrix(const Pi2Rule& rule) {
    validate_rule(rule);

    std::set<std::string> taken(rule.xvars.begin(), rule.xvars.end());
    taken.insert(rule.pvars.begin(), rule.pvars.end());
    modal_vars(rule.F, taken);
    modal_vars(rule.G, taken);
    std::string z = "z";
    for (int i = 2; taken.count(z); ++i) z = "z" + std::to_string(i);

    Pi2Matrix m;
    m.kept = rule.xvars;
    m.kept.push_back(z);
    m.eliminated = rule.pvars;
    m.zvar = z;

    const ModalPtr zt = m_var(z);
    const auto side_branches = [&](const ModalPtr& side) {
        const Flattened fl = flatten_modal(fo_nleq(side, zt));
        return tau2_branches(fl.fresh, fl.core);
    };
    m.antecedents = side_branches(rule.G);
    m.consequents = side_branches(rule.F);
    return m;
}

// ── admissibility ───────────────────────────────────────────────────────────

namespace {

bool mentions_any(const FormPtr& f, const std::set<std::string>& vars) {
    std::set<std::string> fv;
    form_vars(f, fv);
    for (const std::string& v : fv)
        if (vars.count(v)) return true;
    return false;
}

}  // namespace

AdmissibilityReport decide_admissible(const Pi2Rule& rule, const Limits& limits,
                                      AdmitStats* progress, const TraceSink& trace) {
    const auto t0 = std::chrono::steady_clock::now();
    AdmitStats local;
    AdmitStats& st = progress ? *progress : local;
    st = AdmitStats{};
    const auto stamp = [&]() {
        st.time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
    };

    AdmissibilityReport report;
    const Pi2Matrix m = pi2_matrix(rule);
    st.antecedent_branches = m.antecedents.size();
    st.consequent_branches = m.consequents.size();

    const std::set<std::string> elim_set(m.eliminated.begin(), m.eliminated.end());

    // Eliminate the premise parameters from each consequent branch.
    std::vector<FormPtr> eliminated_branches;
    for (size_t j = 0; j < m.consequents.size(); ++j) {
        limits.check("admit");
        std::vector<FormPtr> exist_part, residue;
        for (const FormPtr& c : conjuncts_of(m.consequents[j]))
            (mentions_any(c, elim_set) ? exist_part : residue).push_back(c);

        FormPtr q;
        FormPtr qe_formula;
        QeStats qs;
        if (exist_part.empty()) {
            q = f_conj(residue);
        } else {
            const FormPtr ce = f_conj(exist_part);
            std::set<std::string> ce_vars;
            form_vars(ce, ce_vars);
            std::vector<std::string> kept_here, elim_here;
            for (const std::string& v : m.kept)
                if (ce_vars.count(v)) kept_here.push_back(v);
            for (const std::string& v : m.eliminated)
                if (ce_vars.count(v)) elim_here.push_back(v);
            QeResult qe = eliminate(ce, elim_here, kept_here, limits);
            qs = qe.stats;
            qe_formula = qe.formula;
            st.qe_pair_types += qe.stats.pair_types;
            st.qe_classes += qe.stats.classes;
            q = f_conj(qe.formula, f_conj(residue));
        }
        ++st.branches_eliminated;
        stamp();

        if (trace) {
            BranchTrace bt;
            bt.branch = static_cast<int>(j);
            bt.consequent = pretty(m.consequents[j]);
            bt.existential_part = exist_part.empty() ? "" : pretty(f_conj(exist_part));
            bt.qe_result = exist_part.empty() ? "" : pretty(qe_formula);
            bt.residue = residue.empty() ? "" : pretty(f_conj(residue));
            bt.qe = qs;
            bt.surviving = q->op != FormOp::Bot;
            trace(bt);
        }
        eliminated_branches.push_back(q);
    }

    // ψ = ⋀ (antecedent ⇒ ⋁ eliminated consequents); admissible iff ∀ψ.
    const FormPtr rhs = f_disj(eliminated_branches);
    std::vector<FormPtr> groups;
    groups.reserve(m.antecedents.size());
    for (const FormPtr& a : m.antecedents) groups.push_back(f_imp(a, rhs));
    const FormPtr psi = f_conj(groups);
    report.eliminated = psi;

    const SatResult sat = satisfiable(f_neg(psi), limits);
    st.sat_assignments = sat.stats.assignments;
    st.sat_theory_checks = sat.stats.theory_checks;
    stamp();

    if (sat.status == SatStatus::Unsat) {
        report.verdict = Verdict::Admissible;
    } else {
        report.verdict = Verdict::NotAdmissible;
        report.countermodel = sat.model;
        report.countermodel_verified = model_check(*sat.model, f_neg(psi));
    }
    report.stats = st;
    return report;
}

// ── validity over simple algebras ───────────────────────────────────────────

ValidityResult s2ic_valid(const ModalPtr& psi, const Limits& limits) {
    // psi = ⊤ fails somewhere iff ⊤ ≰ psi is satisfiable.
    const Flattened fl = flatten_modal(fo_nleq(m_top(), psi));
    const SatResult sat = satisfiable(f_disj(tau2_branches(fl.fresh, fl.core)), limits);

    ValidityResult res;
    res.valid = (sat.status == SatStatus::Unsat);
    if (!res.valid) {
        const PointSet ext = eval_modal(*sat.model, psi);
        if (std::find(ext.begin(), ext.end(), false) == ext.end())
            throw std::logic_error("internal error: validity countermodel does not refute");
        res.countermodel = *sat.model;
    }
    return res;
}

// ── bundled rules ───────────────────────────────────────────────────────────

namespace {

// Kept in sync with the rules/ directory (a unit test compares them).
const char* const kBuiltinRuleText = R"(# Rules bundled with the toolkit.

rule rho9
xvars x1 x2
pvars p
F: (p ~> p) & (x1 ~> p) & (p ~> x2)
G: x1 ~> x2

rule rho_s1
xvars phi1 phi2 phi3
pvars p1 p2
F: [A](((p1 | p2) <-> phi1) & !(p1 & p2) & <E>p1 & <E>p2 & (p1 ~> p1 | phi2) & (p2 ~> p2 | phi3))
G: [A](<E>phi1 & !(phi1 & (phi2 | phi3)) & (phi1 ~> phi1 | phi2 | phi3))

rule rho_s2
xvars phi1 phi2
pvars p1 p2
F: [A](((p1 | p2) <-> phi1) & !(p1 & p2) & !(p1 ~> !phi2) & !(p2 ~> !phi2) & (p1 ~> !p2))
G: [A](!(phi1 & phi2) & !(phi1 ~> !phi2))

rule rho_s3
xvars phi
pvars p1 p2
F: [A](((p1 | p2) -> phi) & !(p1 & p2) & (p1 ~> phi) & !(p1 ~> p2))
G: <E>phi

rule not_admissible_fixture
xvars x
pvars p
F: (x ~> p) & (p ~> x) & !([A](x <-> p))
G: 1
)";

}  // namespace

const std::vector<Pi2Rule>& builtin_rules() {
    static const std::vector<Pi2Rule> rules = parse_rules(kBuiltinRuleText);
    return rules;
}

std::optional<Pi2Rule> find_builtin_rule(const std::string& name) {
    for (const Pi2Rule& r : builtin_rules())
        if (r.name == name) return r;
    return std::nullopt;
}

}  // namespace s2ic
