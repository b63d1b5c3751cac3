// ───────────────────────────────────────────────────────────────────────────
// Quantifier elimination: the flagship transitivity example, soundness and
// strength as properties over random inputs, the pair-type machinery, and
// the certified simplifier.
//
// Soundness: φ entails its projection φ* (φ* only weakens by forgetting the
// eliminated variables).  Strength: for consequences c over the kept
// variables alone, φ ⊨ c exactly when φ* ⊨ c — the projection forgets
// nothing expressible without the eliminated variables.  Together these pin
// φ* up to equivalence as the strongest kept-only consequence of φ.
// ───────────────────────────────────────────────────────────────────────────

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace s2ic;
using testutil::cf;
using testutil::equivalent;
using testutil::ncf;
using testutil::random_formula;

namespace {

// Random atom whose term mentions only the given variables — used to build
// consequences over the kept block for the strength check.
FormPtr random_kept_literal(std::mt19937& rng, const std::vector<std::string>& kept) {
    FormPtr atom = f_atom(testutil::random_term(rng, kept, 2), testutil::random_term(rng, kept, 2));
    return testutil::pick(rng, 0, 1) ? atom : f_neg(atom);
}

}  // namespace

TEST_CASE("eliminating the midpoint of a reflexive interpolant yields x << y", "[qe]") {
    FormPtr phi = cf("(z << z) /\\ (x << z) /\\ (z << y)");
    QeResult r = eliminate(phi, {"z"}, {"x", "y"});
    INFO("projection: " << pretty(r.formula));
    CHECK(equivalent(r.formula, cf("x << y")));
    std::set<std::string> vars;
    form_vars(r.formula, vars);
    CHECK(vars == std::set<std::string>{"x", "y"});
}

TEST_CASE("elimination is deterministic", "[qe]") {
    FormPtr phi = cf("~(p << x) /\\ (y << p) \\/ (p << !y)");
    QeResult a = eliminate(phi, {"p"}, {"x", "y"});
    QeResult b = eliminate(phi, {"p"}, {"x", "y"});
    CHECK(pretty(a.formula) == pretty(b.formula));
    CHECK(a.stats.pair_types == b.stats.pair_types);
    CHECK(a.stats.classes == b.stats.classes);
}

TEST_CASE("an unsatisfiable input projects to bottom", "[qe]") {
    QeResult r = eliminate(cf("(p << x) /\\ ~(p << x)"), {"p"}, {"x"});
    CHECK(satisfiable(r.formula).status == SatStatus::Unsat);
}

TEST_CASE("eliminating every variable decides the sentence", "[qe]") {
    // ∃p (¬(p ≺ p)) is consistent, so with nothing kept the result is ⊤.
    QeResult t = eliminate(cf("~(p << p)"), {"p"}, {});
    CHECK(equivalent(t.formula, f_top()));

    QeResult b = eliminate(cf("(p << p) /\\ ~(p << p)"), {"p"}, {});
    CHECK(equivalent(b.formula, f_bot()));
}

TEST_CASE("eliminating a variable the formula ignores changes nothing", "[qe]") {
    FormPtr phi = cf("x << y");
    QeResult r = eliminate(phi, {"p"}, {"x", "y"});
    CHECK(equivalent(r.formula, phi));
}

TEST_CASE("projection is sound and strong on random instances", "[qe]") {
    std::mt19937 rng(40961);
    const std::vector<std::string> kept{"x", "y"};
    const std::vector<std::string> elim{"p", "q"};
    std::vector<std::string> all = kept;
    all.insert(all.end(), elim.begin(), elim.end());

    for (int round = 0; round < 30; ++round) {
        FormPtr phi = random_formula(rng, all, 3);
        CAPTURE(round, pretty(phi));
        QeResult r = eliminate(phi, elim, kept);

        // Soundness: φ ⊨ φ*.
        CHECK(entails(phi, r.formula).holds);

        // Strength on random kept-only literals: the projection proves
        // exactly the consequences the original proves.
        for (int trial = 0; trial < 20; ++trial) {
            FormPtr c = random_kept_literal(rng, kept);
            CAPTURE(pretty(c));
            CHECK(entails(phi, c).holds == entails(r.formula, c).holds);
        }
    }
}

TEST_CASE("one-variable eliminations agree with the enumeration oracle", "[qe]") {
    // Small enough that equivalence of φ* with ∃p φ can be checked on bounded
    // frames directly: on every model of size ≤ 3 over the kept variables,
    // φ* holds iff some extension by p satisfies φ.
    std::mt19937 rng(6021);
    const std::vector<std::string> kept{"x"};
    for (int round = 0; round < 25; ++round) {
        FormPtr phi = random_formula(rng, {"x", "p"}, 2);
        CAPTURE(round, pretty(phi));
        QeResult r = eliminate(phi, {"p"}, kept);
        // ∃p φ ⊨ φ* always; over existentially closed algebras the converse
        // holds too, but on *small finite* frames only soundness is certain.
        // Check: wherever some p-extension satisfies φ, φ* holds.
        for (int n = 1; n <= 3; ++n) {
            for (const ContactFrame& fr : testutil::all_frames(n)) {
                uint32_t cells = 1u << n;
                for (uint32_t xv = 0; xv < cells; ++xv) {
                    KripkeModel base;
                    base.frame = fr;
                    PointSet xs(n);
                    for (int i = 0; i < n; ++i) xs[i] = (xv >> i) & 1u;
                    base.valuation["x"] = xs;
                    bool witnessed = false;
                    for (uint32_t pv = 0; pv < cells && !witnessed; ++pv) {
                        KripkeModel m = base;
                        PointSet ps(n);
                        for (int i = 0; i < n; ++i) ps[i] = (pv >> i) & 1u;
                        m.valuation["p"] = ps;
                        witnessed = model_check(m, phi);
                    }
                    if (witnessed) CHECK(model_check(base, r.formula));
                }
            }
        }
    }
}

TEST_CASE("pair-type signatures match their own models", "[qe]") {
    FormPtr phi = cf("(x << p) /\\ ~(p << y)");
    PairTypeTable table = enumerate_pair_types(phi, {"p"}, {"x", "y"});
    REQUIRE_FALSE(table.types.empty());
    for (const PairType& t : table.types) {
        KripkeModel m = pair_type_model(table, t);
        REQUIRE(m.frame.points.size() == 2);
        REQUIRE(t.phi_sig.size() == table.phi_atoms.size());
        REQUIRE(t.minterm_sig.size() == table.minterm_atoms.size());
        for (size_t i = 0; i < table.phi_atoms.size(); ++i)
            CHECK(model_check(m, table.phi_atoms[i]) == t.phi_sig[i]);
        for (size_t i = 0; i < table.minterm_atoms.size(); ++i)
            CHECK(model_check(m, table.minterm_atoms[i]) == t.minterm_sig[i]);
    }
}

TEST_CASE("pair types are deduplicated by signature", "[qe]") {
    FormPtr phi = cf("x << p");
    PairTypeTable table = enumerate_pair_types(phi, {"p"}, {"x"});
    std::set<std::pair<std::vector<bool>, std::vector<bool>>> seen;
    for (const PairType& t : table.types) {
        auto key = std::make_pair(t.phi_sig, t.minterm_sig);
        CHECK_FALSE(seen.count(key));
        seen.insert(key);
    }
}

TEST_CASE("pair-type enumeration validates its variable lists", "[qe]") {
    FormPtr phi = cf("x << p");
    // Overlapping blocks.
    CHECK_THROWS_AS(enumerate_pair_types(phi, {"p"}, {"x", "p"}), std::invalid_argument);
    // A formula variable in neither block.
    CHECK_THROWS_AS(enumerate_pair_types(phi, {}, {"x"}), std::invalid_argument);
    // Duplicates within one block.
    CHECK_THROWS_AS(enumerate_pair_types(phi, {"p", "p"}, {"x"}), std::invalid_argument);
}

TEST_CASE("elimination respects the pair-type budget", "[qe]") {
    Limits tight;
    tight.max_pair_types = 4;
    FormPtr phi = cf("(x << p) /\\ (p << y) /\\ ~(y << q)");
    CHECK_THROWS_AS(eliminate(phi, {"p", "q"}, {"x", "y"}, tight), ResourceLimitError);
}

TEST_CASE("simplify is certified, idempotent, and shrinks the flagship result", "[qe]") {
    QeResult r = eliminate(cf("(z << z) /\\ (x << z) /\\ (z << y)"), {"z"}, {"x", "y"});
    FormPtr slim = simplify(r.formula);
    CHECK(equivalent(slim, r.formula));
    CHECK(pretty(slim).size() <= pretty(r.formula).size());
    CHECK(pretty(simplify(slim)) == pretty(slim));
}

TEST_CASE("simplify preserves equivalence on random formulas", "[qe]") {
    std::mt19937 rng(2718);
    const std::vector<std::string> vars{"x", "y"};
    for (int round = 0; round < 40; ++round) {
        FormPtr phi = random_formula(rng, vars, 4);
        CAPTURE(round, pretty(phi));
        FormPtr slim = simplify(phi);
        CHECK(equivalent(slim, phi));
        CHECK(pretty(simplify(slim)) == pretty(slim));
    }
}
