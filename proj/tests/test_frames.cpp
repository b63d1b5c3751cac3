// ───────────────────────────────────────────────────────────────────────────
// Finite frames: semantics, duality, covers, amalgams, extensions, quotients
// and the splitting-condition checks.
//
// The dual-algebra direction is pinned by hand on 2-point frames and then
// swept over every labeled frame up to 3 points; the acceptance gate repeats
// the sweeps at the sizes the criteria ask for.
// ───────────────────────────────────────────────────────────────────────────

#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace s2ic;
using testutil::all_frames;
using testutil::cf;
using testutil::mf;
using testutil::random_formula;
using testutil::random_frame;
using testutil::random_model;
using testutil::random_surjection;

namespace {

// Pulled-back valuation along a stable map: V'(x) = f⁻¹(V(x)).
KripkeModel pull_back(const KripkeModel& base, const StableMap& f) {
    KripkeModel lifted{f.dom, {}};
    for (const auto& [var, ps] : base.valuation) {
        PointSet up(f.dom.points.size(), false);
        for (size_t i = 0; i < up.size(); ++i) up[i] = ps[static_cast<size_t>(f.f[i])];
        lifted.valuation[var] = up;
    }
    return lifted;
}

bool full(const PointSet& ps) {
    for (bool b : ps)
        if (!b) return false;
    return true;
}

bool empty(const PointSet& ps) {
    for (bool b : ps)
        if (b) return false;
    return true;
}

// f = chain[0] ∘ chain[1] ∘ … (rightmost applied first); empty ⇒ identity.
StableMap compose_chain(const std::vector<StableMap>& chain, const StableMap& like) {
    if (chain.empty()) {
        StableMap id{like.dom, like.dom, {}};
        for (size_t i = 0; i < like.dom.points.size(); ++i) id.f.push_back(static_cast<int>(i));
        return id;
    }
    StableMap acc = chain.back();
    for (size_t k = chain.size() - 1; k-- > 0;) acc = compose(chain[k], acc);
    return acc;
}

}  // namespace

// ── construction and text format ─────────────────────────────────────────────

TEST_CASE("make_frame normalizes the edge list", "[frames]") {
    ContactFrame f = make_frame("n", {"a", "b", "c"},
                                {{2, 1}, {0, 0}, {1, 2}, {0, 1}});
    // Loop dropped, duplicate collapsed, endpoints ordered, list sorted.
    CHECK(f.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(f.related(0, 0));  // loops are implicit
    CHECK(f.related(1, 2));
    CHECK(f.related(2, 1));
    CHECK_FALSE(f.related(0, 2));
    CHECK(f.neighbors(1) == std::vector<int>{0, 1, 2});
    CHECK(f.index_of("c") == 2);
    CHECK(f.index_of("missing") == -1);
}

TEST_CASE("frame text format round-trips", "[frames]") {
    ContactFrame f = parse_frame("# comment\nframe tri; points a b c; edges a-b b-c;");
    CHECK(f.name == "tri");
    CHECK(f.points == std::vector<std::string>{"a", "b", "c"});
    CHECK(f.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    ContactFrame g = parse_frame(frame_to_text(f));
    CHECK(g.name == f.name);
    CHECK(g.points == f.points);
    CHECK(g.edges == f.edges);

    CHECK_THROWS_AS(parse_frame("frame x; points;"), ParseError);
    CHECK_THROWS_AS(parse_frame("frame x; points a; edges ab;"), ParseError);
    CHECK_THROWS_AS(parse_frame("frame x; points a; edges a-z;"), ParseError);
}

// ── Kripke semantics ─────────────────────────────────────────────────────────

TEST_CASE("atom semantics quantifies over outgoing edges", "[frames]") {
    ContactFrame path = parse_frame("frame path; points a b c; edges a-b b-c;");
    KripkeModel m{path, {{"x", {true, false, false}}, {"y", {true, true, false}}}};
    // R[x] = {a, b} ⊆ y, so x << y holds.
    CHECK(model_check(m, cf("x << y")));
    // R[y] reaches c which is outside y.
    CHECK_FALSE(model_check(m, cf("y << y")));
    // Connectives.
    CHECK(model_check(m, cf("x << y /\\ ~(y << x)")));
    CHECK(model_check(m, cf("y << y => 1 << 0")));
    CHECK(model_check(m, cf("top")));
    CHECK_FALSE(model_check(m, cf("bot")));
    // The empty set sits below everything; loops force x << x to fail only
    // when an x-point has a non-x neighbor.
    CHECK(model_check(m, cf("0 << x")));
    CHECK(model_check(m, cf("x << 1")));
}

TEST_CASE("modal operators evaluate to all-or-nothing extents", "[frames]") {
    std::mt19937 rng(2711);
    const std::vector<std::string> vars{"x", "y"};
    for (int round = 0; round < 40; ++round) {
        ContactFrame fr = random_frame(rng, "r", 4);
        KripkeModel m = random_model(rng, fr, vars);
        // x ~> y is two-valued and mirrors the contact atom.
        PointSet sim = eval_modal(m, mf("x ~> y"));
        CHECK((full(sim) || empty(sim)));
        CHECK(full(sim) == model_check(m, cf("x << y")));
        // [A] and <E> are the universal and existential closures.
        PointSet box = eval_modal(m, mf("[A]x"));
        CHECK((full(box) || empty(box)));
        CHECK(full(box) == full(eval_modal(m, mf("x"))));
        PointSet dia = eval_modal(m, mf("<E>x"));
        CHECK((full(dia) || empty(dia)));
        CHECK(full(dia) == !empty(eval_modal(m, mf("x"))));
    }
}

TEST_CASE("model_check requires equation-free input", "[frames]") {
    ContactFrame fr = parse_frame("frame one; points a;");
    KripkeModel m{fr, {}};
    CHECK_THROWS_AS(model_check(m, cf("x == y")), std::invalid_argument);
    CHECK(model_check(m, normalize_atoms(cf("x == y"))));  // both empty
}

// ── duality ──────────────────────────────────────────────────────────────────

TEST_CASE("dual algebra of the 2-point frames, by hand", "[frames]") {
    DualAlgebra pair = dual_algebra(parse_frame("frame p; points a b; edges a-b;"));
    CHECK(pair.prec == std::vector<std::pair<uint32_t, uint32_t>>{
                           {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}});
    DualAlgebra split = dual_algebra(parse_frame("frame s; points a b;"));
    CHECK(split.prec == std::vector<std::pair<uint32_t, uint32_t>>{
                            {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 3}, {2, 2}, {2, 3},
                            {3, 3}});
}

TEST_CASE("r_image expands subsets along the relation", "[frames]") {
    ContactFrame path = parse_frame("frame path; points a b c; edges a-b b-c;");
    CHECK(r_image(path, 0b001) == 0b011);  // R[{a}] = {a,b}
    CHECK(r_image(path, 0b010) == 0b111);  // R[{b}] = {a,b,c}
    CHECK(r_image(path, 0b000) == 0b000);
    CHECK(r_image(path, 0b101) == 0b111);
}

TEST_CASE("contact laws hold on every dual up to 3 points", "[frames]") {
    for (int n = 1; n <= 3; ++n)
        for (const ContactFrame& fr : all_frames(n)) {
            auto violation = contact_axiom_violation(fr);
            INFO(frame_to_text(fr) << ": " << violation.value_or(""));
            CHECK_FALSE(violation.has_value());
        }
}

// ── map classification ───────────────────────────────────────────────────────

TEST_CASE("classify_map distinguishes the three classes", "[frames]") {
    ContactFrame pair = parse_frame("frame pair; points p q; edges p-q;");
    ContactFrame split = parse_frame("frame split; points p q;");
    ContactFrame one = parse_frame("frame one; points o;");

    // Identity on the pair: regular.
    CHECK(classify_map({pair, pair, {0, 1}}) == MapClass::RegularStable);
    // Split → pair embeds points without the edge: stable but the pair edge
    // has nothing over it, and the map is injective-but-not-onto-edges.
    CHECK(classify_map({split, pair, {0, 1}}) == MapClass::Stable);
    // Pair → split breaks the edge: not stable.
    CHECK(classify_map({pair, split, {0, 1}}) == MapClass::NotStable);
    // Collapsing the pair to the loop point: regular (loop lies over the loop).
    CHECK(classify_map({pair, one, {0, 0}}) == MapClass::RegularStable);
}

// ── covers ───────────────────────────────────────────────────────────────────

TEST_CASE("one_step_cover yields a regular cover by a 1-step frame", "[frames]") {
    for (int n = 1; n <= 3; ++n)
        for (const ContactFrame& fr : all_frames(n)) {
            Cover c = one_step_cover(fr);
            INFO(frame_to_text(fr) << " covered by " << frame_to_text(c.frame));
            CHECK(is_one_step(c.frame));
            CHECK(classify_map(c.map) == MapClass::RegularStable);
            // Quadratic size bound.
            CHECK(c.frame.points.size() <= 2 * fr.points.size() * fr.points.size());
        }
}

TEST_CASE("formulas transfer along covers with pulled-back valuations", "[frames]") {
    std::mt19937 rng(40923);
    const std::vector<std::string> vars{"x", "y"};
    for (int round = 0; round < 60; ++round) {
        ContactFrame fr = random_frame(rng, "base", 4);
        Cover c = one_step_cover(fr);
        KripkeModel base = random_model(rng, fr, vars);
        KripkeModel lifted = pull_back(base, c.map);
        FormPtr phi = random_formula(rng, vars, 3);
        INFO(frame_to_text(fr) << " | " << pretty(phi));
        CHECK(model_check(base, phi) == model_check(lifted, phi));
    }
}

TEST_CASE("is_one_step recognizes exactly the disjoint 2-cliques", "[frames]") {
    CHECK(is_one_step(parse_frame("frame a; points p q; edges p-q;")));
    CHECK(is_one_step(parse_frame("frame b; points p q r s; edges p-q r-s;")));
    CHECK_FALSE(is_one_step(parse_frame("frame c; points p;")));             // singleton
    CHECK_FALSE(is_one_step(parse_frame("frame d; points p q r; edges p-q q-r;")));  // chain
    CHECK_FALSE(is_one_step(parse_frame("frame e; points p q r; edges p-q;")));      // mixed
}

// ── relation lifts ───────────────────────────────────────────────────────────

TEST_CASE("lift_relation endows the carrier with the pulled-back relation", "[frames]") {
    ContactFrame base = parse_frame("frame base; points u v; edges u-v;");
    Lifted lifted = lift_relation({"a", "b", "c"}, {0, 0, 1}, base);
    CHECK(lifted.frame.points == std::vector<std::string>{"a", "b", "c"});
    // a,b sit over u (related to each other and to c over v).
    CHECK(lifted.frame.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(classify_map(lifted.map) == MapClass::RegularStable);

    CHECK_THROWS_AS(lift_relation({"a", "b"}, {0, 0}, base), NotSurjectiveError);
    CHECK_THROWS_AS(lift_relation({"a"}, {0, 7}, base), std::invalid_argument);
}

TEST_CASE("lifts also transfer formulas", "[frames]") {
    std::mt19937 rng(11818);
    const std::vector<std::string> vars{"x", "y"};
    for (int round = 0; round < 40; ++round) {
        ContactFrame base = random_frame(rng, "base", 3);
        int carrier_size = static_cast<int>(base.points.size()) + testutil::pick(rng, 0, 2);
        std::vector<std::string> carrier;
        for (int i = 0; i < carrier_size; ++i) carrier.push_back("c" + std::to_string(i));
        Lifted lifted = lift_relation(
            carrier, random_surjection(rng, carrier_size, static_cast<int>(base.points.size())),
            base);
        KripkeModel m = random_model(rng, base, vars);
        KripkeModel up = pull_back(m, lifted.map);
        FormPtr phi = random_formula(rng, vars, 3);
        CHECK(model_check(m, phi) == model_check(up, phi));
    }
}

// ── amalgamation ─────────────────────────────────────────────────────────────

TEST_CASE("pullback projections are regular and commute", "[frames]") {
    std::mt19937 rng(52290);
    for (int round = 0; round < 25; ++round) {
        ContactFrame a = random_frame(rng, "A", 3);
        int nb = static_cast<int>(a.points.size()) + testutil::pick(rng, 0, 2);
        int nc = static_cast<int>(a.points.size()) + testutil::pick(rng, 0, 2);
        std::vector<std::string> bp, cp;
        for (int i = 0; i < nb; ++i) bp.push_back("b" + std::to_string(i));
        for (int i = 0; i < nc; ++i) cp.push_back("c" + std::to_string(i));
        Lifted lb = lift_relation(bp, random_surjection(rng, nb, static_cast<int>(a.points.size())), a);
        Lifted lc = lift_relation(cp, random_surjection(rng, nc, static_cast<int>(a.points.size())), a);

        Amalgam am = pullback_amalgam(lb.map, lc.map);
        CHECK(classify_map(am.pi1) == MapClass::RegularStable);
        CHECK(classify_map(am.pi2) == MapClass::RegularStable);
        // f ∘ π1 = g ∘ π2 pointwise.
        StableMap left = compose(lb.map, am.pi1);
        StableMap right = compose(lc.map, am.pi2);
        CHECK(left.f == right.f);
    }
}

TEST_CASE("pullback rejects broken cospans", "[frames]") {
    ContactFrame pair = parse_frame("frame pair; points p q; edges p-q;");
    ContactFrame split = parse_frame("frame split; points p q;");
    ContactFrame one = parse_frame("frame one; points o;");
    StableMap collapse{pair, one, {0, 0}};
    StableMap not_regular{split, pair, {0, 1}};
    CHECK_THROWS_AS(pullback_amalgam(collapse, not_regular), NotRegularError);
    StableMap onto_other{pair, pair, {0, 1}};
    CHECK_THROWS_AS(pullback_amalgam(collapse, onto_other), std::invalid_argument);
}

// ── quotients ────────────────────────────────────────────────────────────────

TEST_CASE("quotient by the trivial partition is an isomorphism", "[frames]") {
    ContactFrame path = parse_frame("frame path; points a b c; edges a-b b-c;");
    Quotient q = quotient_by_partition(path, {{"a"}, {"b"}, {"c"}});
    CHECK(q.frame.points.size() == 3);
    CHECK(q.frame.edges == path.edges);
    CHECK(classify_map(q.map) == MapClass::RegularStable);
}

TEST_CASE("quotients collapse blocks and keep contact", "[frames]") {
    ContactFrame path = parse_frame("frame path; points a b c; edges a-b b-c;");
    Quotient q = quotient_by_partition(path, {{"a", "c"}, {"b"}});
    CHECK(q.frame.points.size() == 2);
    CHECK(q.frame.edges.size() == 1);  // the collapsed class touches b
    CHECK(classify_map(q.map) == MapClass::RegularStable);

    CHECK_THROWS_AS(quotient_by_partition(path, {{"a"}, {"b"}}), NotAPartitionError);
    CHECK_THROWS_AS(quotient_by_partition(path, {{"a", "b"}, {"b", "c"}}), NotAPartitionError);
    CHECK_THROWS_AS(quotient_by_partition(path, {{"a", "b", "zz"}}), NotAPartitionError);
}

// ── minimal extensions ───────────────────────────────────────────────────────

TEST_CASE("minimal extension splits one point and doubles the dual", "[frames]") {
    ContactFrame tri = parse_frame("frame tri; points a b c; edges a-b b-c;");
    MinimalExtension ext = minimal_extensions(tri, {"b", {"a"}, {"c"}, false});
    CHECK(ext.frame.points.size() == 4);
    CHECK(classify_map(ext.map) == MapClass::RegularStable);
    // The two copies keep their assigned neighbors and are unrelated.
    int b1 = ext.frame.index_of("b_1"), b2 = ext.frame.index_of("b_2");
    int a = ext.frame.index_of("a"), c = ext.frame.index_of("c");
    REQUIRE((b1 >= 0 && b2 >= 0 && a >= 0 && c >= 0));
    CHECK(ext.frame.related(a, b1));
    CHECK(ext.frame.related(c, b2));
    CHECK_FALSE(ext.frame.related(a, b2));
    CHECK_FALSE(ext.frame.related(c, b1));
    CHECK_FALSE(ext.frame.related(b1, b2));

    MinimalExtension joined = minimal_extensions(tri, {"b", {"a"}, {"c"}, true});
    CHECK(joined.frame.related(joined.frame.index_of("b_1"), joined.frame.index_of("b_2")));
}

TEST_CASE("extension spec must cover the neighbors exactly", "[frames]") {
    ContactFrame tri = parse_frame("frame tri; points a b c; edges a-b b-c;");
    CHECK_THROWS_AS(minimal_extensions(tri, {"b", {"a"}, {}, false}), SpecViolationError);
    CHECK_THROWS_AS(minimal_extensions(tri, {"b", {"a", "b"}, {"c"}, false}),
                    SpecViolationError);
    CHECK_THROWS_AS(minimal_extensions(tri, {"zz", {}, {}, false}), SpecViolationError);
}

TEST_CASE("the dual map of a minimal extension is an embedding", "[frames]") {
    // Sweep every frame on ≤3 points, every point, every split of its proper
    // neighborhood into (s1, s2, both), and both connect choices.
    for (int n = 1; n <= 3; ++n)
        for (const ContactFrame& fr : all_frames(n)) {
            for (const std::string& x : fr.points) {
                int xi = fr.index_of(x);
                std::vector<std::string> nbrs;
                for (int j : fr.neighbors(xi))
                    if (j != xi) nbrs.push_back(fr.points[static_cast<size_t>(j)]);
                int choices = 1;
                for (size_t k = 0; k < nbrs.size(); ++k) choices *= 3;
                for (int pattern = 0; pattern < choices; ++pattern)
                    for (bool connect : {false, true}) {
                        MinExtSpec spec{x, {}, {}, connect};
                        int rest = pattern;
                        for (const std::string& nb : nbrs) {
                            int c = rest % 3;
                            rest /= 3;
                            if (c == 0 || c == 2) spec.s1.push_back(nb);
                            if (c == 1 || c == 2) spec.s2.push_back(nb);
                        }
                        MinimalExtension ext = minimal_extensions(fr, spec);
                        REQUIRE(ext.frame.points.size() == fr.points.size() + 1);

                        // h(A) = map⁻¹(A) preserves and reflects precedence.
                        const size_t base_n = fr.points.size();
                        for (uint32_t A = 0; A < (1u << base_n); ++A)
                            for (uint32_t B = 0; B < (1u << base_n); ++B) {
                                uint32_t hA = 0, hB = 0;
                                for (size_t i = 0; i < ext.frame.points.size(); ++i) {
                                    if ((A >> ext.map.f[i]) & 1) hA |= (1u << i);
                                    if ((B >> ext.map.f[i]) & 1) hB |= (1u << i);
                                }
                                bool below = (r_image(fr, A) & ~B) == 0;
                                bool below_ext = (r_image(ext.frame, hA) & ~hB) == 0;
                                if (below != below_ext) {
                                    INFO(frame_to_text(fr) << " split " << x << " A=" << A
                                                           << " B=" << B);
                                    REQUIRE(below == below_ext);
                                }
                            }
                    }
            }
        }
}

// ── factorization ────────────────────────────────────────────────────────────

TEST_CASE("factor_minimal decomposes covers into single-point drops", "[frames]") {
    std::mt19937 rng(7321);
    for (int round = 0; round < 20; ++round) {
        ContactFrame fr = random_frame(rng, "base", 3);
        Cover c = one_step_cover(fr);
        std::vector<StableMap> chain = factor_minimal(c.map);
        CHECK(chain.size() == c.frame.points.size() - fr.points.size());
        for (const StableMap& step : chain) {
            CHECK(step.dom.points.size() == step.cod.points.size() + 1);
            CHECK(classify_map(step) == MapClass::RegularStable);
        }
        StableMap recomposed = compose_chain(chain, c.map);
        CHECK(recomposed.f == c.map.f);
        CHECK(recomposed.dom.points == c.map.dom.points);
        CHECK(recomposed.cod.points == c.map.cod.points);
    }
}

TEST_CASE("factor_minimal edge cases", "[frames]") {
    ContactFrame pair = parse_frame("frame pair; points p q; edges p-q;");
    StableMap id{pair, pair, {0, 1}};
    CHECK(factor_minimal(id).empty());
    StableMap swap{pair, pair, {1, 0}};
    CHECK_THROWS_AS(factor_minimal(swap), std::invalid_argument);
}

// ── splitting conditions ─────────────────────────────────────────────────────

TEST_CASE("the boundary splitting condition fails on every small frame", "[frames]") {
    for (int n = 1; n <= 3; ++n)
        for (const ContactFrame& fr : all_frames(n)) {
            SplitCheck check = splitting_check(fr, SplitAxiom::S3);
            INFO(frame_to_text(fr));
            CHECK_FALSE(check.holds);
            REQUIRE(check.witnesses.size() == 1);
            CHECK_FALSE(check.witnesses[0].resolved);
            CHECK(check.witnesses[0].premise.size() == 1);
            CHECK(check.witnesses[0].premise[0] != 0);  // a nonempty violating A
        }
}

TEST_CASE("splitting violations satisfy their premise conditions", "[frames]") {
    for (const ContactFrame& fr : all_frames(3)) {
        SplitCheck s1 = splitting_check(fr, SplitAxiom::S1);
        if (!s1.holds) {
            REQUIRE(s1.witnesses.size() == 1);
            const auto& w = s1.witnesses[0].premise;
            REQUIRE(w.size() == 3);  // A, B1, B2
            CHECK(w[0] != 0);
            CHECK(((w[1] | w[2]) & w[0]) == 0);
            CHECK((r_image(fr, w[0]) & ~(w[0] | w[1] | w[2])) == 0);
        }
        SplitCheck s2 = splitting_check(fr, SplitAxiom::S2);
        if (!s2.holds) {
            REQUIRE(s2.witnesses.size() == 1);
            const auto& w = s2.witnesses[0].premise;
            REQUIRE(w.size() == 2);  // A, B
            CHECK((w[0] & w[1]) == 0);
            CHECK((w[0] & r_image(fr, w[1])) != 0);
        }
    }
}

TEST_CASE("partition splitting handles the two-clique example", "[frames]") {
    ContactFrame two = parse_frame("frame two; points a b c d; edges a-b c-d;");
    PartitionSplitResult r = partition_split_check(two, {{"a", "b", "c", "d"}}, 0, {}, {});
    CHECK(r.disconnected_ok);
    CHECK(r.connected_ok);
    CHECK(r.both());

    // A singleton class cannot split into two nonempty parts.
    ContactFrame one = parse_frame("frame one; points o;");
    PartitionSplitResult s = partition_split_check(one, {{"o"}}, 0, {}, {});
    CHECK_FALSE(s.both());

    // S1 ∪ S2 must cover exactly the touching blocks.
    ContactFrame path = parse_frame("frame path; points a b c; edges a-b b-c;");
    CHECK_THROWS_AS(partition_split_check(path, {{"a"}, {"b"}, {"c"}}, 0, {}, {}),
                    PreconditionViolationError);
}

TEST_CASE("oversized frames are rejected by the subset enumerators", "[frames]") {
    std::vector<std::string> points;
    for (int i = 0; i < 17; ++i) points.push_back("p" + std::to_string(i));
    ContactFrame big = make_frame("big", points, {});
    CHECK_THROWS_AS(dual_algebra(big), SizeLimitError);
    CHECK_THROWS_AS(splitting_check(big, SplitAxiom::S3), SizeLimitError);
}
