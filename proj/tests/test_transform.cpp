// ───────────────────────────────────────────────────────────────────────────
// Layer translations: equation elimination, minterm bases, flattening of
// strict implications, branch expansion, unifier transformer, folding.
//
// Pinned shapes are checked by printed text; semantic claims (a translation
// preserves the models) are checked against the enumeration oracle, which
// evaluates equations natively and is independent of the main solver.
// ───────────────────────────────────────────────────────────────────────────

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace s2ic;
using testutil::cf;
using testutil::mf;
using testutil::tm;

namespace {

// Bounded-model equivalence: no model with at most max_points points tells
// the two formulas apart.  Handles equations (the oracle evaluates == by
// extent comparison).
bool oracle_equivalent(const FormPtr& a, const FormPtr& b, int max_points = 3) {
    return brute_force_oracle(f_neg(f_iff(a, b)), max_points).status == SatStatus::Unsat;
}

}  // namespace

TEST_CASE("normalize_atoms rewrites equations to self-avoidance atoms", "[transform]") {
    FormPtr f = normalize_atoms(cf("x == y"));
    CHECK(pretty(f) == "x + y << !(x + y)");
    // No equation survives anywhere in the tree.
    CHECK_NOTHROW(form_atoms(normalize_atoms(cf("~(x == y) /\\ (x == 1 => y << x)"))));
}

TEST_CASE("normalize_atoms preserves bounded models", "[transform]") {
    for (const char* text : {
             "x == y", "~(x == y)", "x == 1 => x << y", "(x & y) == (x | y)",
             "x == 0 \\/ y == 1", "(x == y) <=> (y == x)",
         }) {
        FormPtr f = cf(text);
        CHECK(oracle_equivalent(f, normalize_atoms(f)));
    }
}

TEST_CASE("minterm_of follows the sign-bit convention", "[transform]") {
    std::vector<std::string> kept{"x", "y"};
    CHECK(pretty(minterm_of(kept, 0b00)) == "x & y");
    CHECK(pretty(minterm_of(kept, 0b01)) == "!x & y");   // bit set = negated
    CHECK(pretty(minterm_of(kept, 0b10)) == "x & !y");
    CHECK(pretty(minterm_of(kept, 0b11)) == "!x & !y");
    CHECK(pretty(minterm_of({}, 0)) == "1");
}

TEST_CASE("minterm_atoms enumerates the documented order", "[transform]") {
    std::vector<FormPtr> one = minterm_atoms({"x"});
    REQUIRE(one.size() == 4);
    CHECK(pretty(one[0]) == "x << !x");
    CHECK(pretty(one[1]) == "x << x");      // !!x folds back to x
    CHECK(pretty(one[2]) == "!x << !x");    // eps=1, delta=0: !x << !x
    CHECK(pretty(one[3]) == "!x << x");

    CHECK(minterm_atoms({"x", "y"}).size() == 16);
    CHECK(minterm_atoms({}).size() == 1);  // 1 << 0
}

TEST_CASE("term and modal layers embed into each other", "[transform]") {
    TermPtr t = tm("x & !(y | 0)");
    CHECK(term_equal(modal_to_term(term_to_modal(t)), t));
    CHECK_THROWS_AS(modal_to_term(mf("x ~> y")), std::invalid_argument);
    CHECK_THROWS_AS(modal_to_term(mf("[A]x")), std::invalid_argument);
}

TEST_CASE("encode_fo turns equations into boxed biconditionals", "[transform]") {
    FoPtr eq = fo_eq(mf("x & y"), mf("x"));
    CHECK(pretty(encode_fo(eq)) == "[A](x & y <-> x)");
    CHECK_THROWS_AS(encode_fo(fo_nleq(mf("x"), mf("y"))), std::invalid_argument);
}

TEST_CASE("tau1 renders atoms as strict-implication equations", "[transform]") {
    FoPtr f = tau1(cf("x << y"));
    REQUIRE(f->op == FoOp::Eq);
    CHECK(pretty(f) == "(x ~> y) = 1");
}

TEST_CASE("flattening names each distinct strict implication once", "[transform]") {
    // (x ~> y) = 1  /\  (x ~> y) = 1 — the shared subterm gets one witness.
    FoPtr skel = fo_conj(tau1(cf("x << y")), tau1(cf("x << y")));
    Flattened fl = flatten_modal(skel);
    CHECK(fl.fresh.size() == 1);

    FoPtr two = fo_conj(tau1(cf("x << y")), tau1(cf("y << x")));
    CHECK(flatten_modal(two).fresh.size() == 2);
}

TEST_CASE("branch disjunction is equivalent to the original formula", "[transform]") {
    // Round trip: contact formula → FO skeleton → flatten → branches.  The
    // disjunction of the branches must keep exactly the same bounded models.
    for (const char* text : {
             "x << y", "~(x << y)", "x << y /\\ ~(y << x)",
             "x << y \\/ y << x", "(x & y) << !x", "~(x << !x) /\\ x << 1",
         }) {
        FormPtr f = cf(text);
        Flattened fl = flatten_modal(tau1(f));
        std::vector<FormPtr> branches = tau2_branches(fl.fresh, fl.core);
        CHECK(oracle_equivalent(f, f_disj(branches)));
    }
}

TEST_CASE("branches drop propositionally impossible witness assignments", "[transform]") {
    // A skeleton whose witness is forced to 1: w=0 branches must be filtered.
    FoPtr skel = tau1(cf("x << y"));
    Flattened fl = flatten_modal(skel);
    REQUIRE(fl.fresh.size() == 1);
    std::vector<FormPtr> branches = tau2_branches(fl.fresh, fl.core);
    CHECK(branches.size() == 1);
    CHECK(pretty(branches[0]) == "x << y");
}

TEST_CASE("projective transformer pins to its defining shape", "[transform]") {
    ModalPtr phi = mf("[A](x -> y)");
    ModalSubst sigma{{"x", mf("0")}};
    ModalSubst pi = projective_unifier(phi, sigma);
    // pi(x) = ([A]phi /\ x) \/ (![A]phi /\ sigma(x)); the y entry keeps y.
    REQUIRE(pi.count("x") == 1);
    CHECK(modal_equal(pi.at("x"),
                      m_or(m_and(m_univ(phi), m_var("x")),
                           m_and(m_not(m_univ(phi)), m_bot()))));
    REQUIRE(pi.count("y") == 1);
    CHECK(modal_equal(pi.at("y"),
                      m_or(m_and(m_univ(phi), m_var("y")),
                           m_and(m_not(m_univ(phi)), m_var("y")))));
}

TEST_CASE("projective transformer turns unifiers into projective unifiers", "[transform]") {
    // sigma(x)=0 unifies [A](x -> y); the transformed pi must also unify it,
    // and pi must be the identity under the [A]phi hypothesis:
    // [A]phi -> (pi(v) <-> v) is valid for every variable v.
    ModalPtr phi = mf("[A](x -> y)");
    ModalSubst sigma{{"x", mf("0")}};
    REQUIRE(s2ic_valid(m_univ(apply_subst(phi, sigma))).valid);

    ModalSubst pi = projective_unifier(phi, sigma);
    CHECK(s2ic_valid(m_univ(apply_subst(phi, pi))).valid);
    for (const char* v : {"x", "y"})
        CHECK(s2ic_valid(m_imp(m_univ(phi), m_iff(pi.at(v), m_var(v)))).valid);
}

TEST_CASE("fold_constants decides axiom-settled atoms", "[transform]") {
    CHECK(fold_constants(cf("0 << x"))->op == FormOp::Top);
    CHECK(fold_constants(cf("x << 1"))->op == FormOp::Top);
    CHECK(fold_constants(cf("1 << 0"))->op == FormOp::Bot);
    CHECK(fold_constants(cf("x == x"))->op == FormOp::Top);
    CHECK(fold_constants(cf("1 == 0"))->op == FormOp::Bot);
    CHECK(fold_constants(cf("0 == 0"))->op == FormOp::Top);
    // Undecided atoms pass through untouched.
    CHECK(pretty(fold_constants(cf("x << y"))) == "x << y");
    // Folding propagates through the connectives.
    CHECK(fold_constants(cf("x << y /\\ 1 << 0"))->op == FormOp::Bot);
    CHECK(fold_constants(cf("0 << x \\/ x << y"))->op == FormOp::Top);
}

TEST_CASE("substitute_term_var rewrites atoms through the factories", "[transform]") {
    FormPtr f = cf("x << y /\\ ~(y << x)");
    FormPtr g = substitute_term_var(f, "y", tm("x & z"));
    // Formula negation needs no parentheses before an atom — after '~' only
    // a formula can follow, so the whole atom is its operand.
    CHECK(pretty(g) == "x << x & z /\\ ~x & z << x");
    CHECK(pretty(cf(pretty(g))) == pretty(g));
    // Substitution itself does not fold; fold_constants finishes the job.
    FormPtr h = substitute_term_var(cf("x << y"), "y", t_one());
    CHECK(h->op == FormOp::Atom);
    CHECK(fold_constants(h)->op == FormOp::Top);
}

TEST_CASE("propositional satisfiability of the skeleton", "[transform]") {
    FormPtr a = cf("x << y");
    CHECK(propositionally_sat(a));
    CHECK_FALSE(propositionally_sat(f_conj(a, f_neg(a))));
    CHECK(propositionally_sat(f_disj(a, f_neg(a))));
    // The checker treats distinct atoms as independent letters, so a
    // contact-algebra contradiction with two distinct atoms stays "sat".
    CHECK(propositionally_sat(cf("x << y /\\ ~(y << y)")));

    // Above 24 distinct atoms the answer is conservatively "sat".
    std::vector<FormPtr> atoms;
    for (int i = 0; i < 25; ++i)
        atoms.push_back(f_atom(t_var("v" + std::to_string(i)), t_var("w" + std::to_string(i))));
    FormPtr big = f_conj(atoms);
    CHECK(propositionally_sat(f_conj(big, f_neg(big))));
}
