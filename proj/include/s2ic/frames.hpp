// ─────────────────────────────────────────────────────────────────────────────
//  frames.hpp — finite contact frames, Kripke semantics and finite duality
//
//  A contact frame is a finite nonempty point set with a reflexive symmetric
//  relation R; loops are implicit (reflexivity is an axiom, not data) and the
//  edge list stores each unordered proper pair once.  Points carry a fixed
//  order, so every enumeration and report below is deterministic.
//
//  Semantics: a Kripke model assigns each variable a point subset;
//  the atom t << u holds when every R-edge (x, y) whose source satisfies t
//  has a target satisfying u.  Passing to all subsets of a frame with
//  A ≺ B iff R[A] ⊆ B yields its dual contact algebra.
//
//  The remaining operations are the frame-level toolkit for the decision
//  procedures: 1-step covers, pullback amalgams, relation lifts, quotients by
//  partitions, minimal one-point extensions and their chain factorization,
//  and the exhaustive splitting-condition checks that characterize duals of
//  existentially closed algebras.
//
//  Subset-enumerating operations are desk-scale by design and refuse frames
//  with more than 16 points (SizeLimitError).
// ─────────────────────────────────────────────────────────────────────────────
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "s2ic/syntax.hpp"

namespace s2ic {

// ── errors ───────────────────────────────────────────────────────────────────

struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};
struct EmptyPullbackError : std::runtime_error {
    explicit EmptyPullbackError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NotSurjectiveError : std::runtime_error {
    explicit NotSurjectiveError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NotAPartitionError : std::runtime_error {
    explicit NotAPartitionError(const std::string& msg) : std::runtime_error(msg) {}
};
struct SpecViolationError : std::runtime_error {
    explicit SpecViolationError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NotRegularError : std::runtime_error {
    explicit NotRegularError(const std::string& msg) : std::runtime_error(msg) {}
};
struct PreconditionViolationError : std::runtime_error {
    explicit PreconditionViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

// ── domain types ─────────────────────────────────────────────────────────────

struct ContactFrame {
    std::string name = "frame";
    std::vector<std::string> points;            // canonical order, nonempty
    std::vector<std::pair<int, int>> edges;     // proper edges, i < j, sorted, unique

    int index_of(const std::string& point) const;        // -1 when absent
    bool related(int i, int j) const;                    // includes implicit loops
    std::vector<int> neighbors(int i) const;             // includes i itself
    void validate() const;                               // throws std::invalid_argument
};

// Normalizes an arbitrary undirected edge list (drops loops and duplicates,
// orders endpoints) and validates.
ContactFrame make_frame(std::string name, std::vector<std::string> points,
                        const std::vector<std::pair<int, int>>& edges);

using PointSet = std::vector<bool>;  // indexed like ContactFrame::points

struct KripkeModel {
    ContactFrame frame;
    std::map<std::string, PointSet> valuation;  // absent variable = empty set

    PointSet value_of(const std::string& var) const;
};

struct StableMap {
    ContactFrame dom, cod;
    std::vector<int> f;  // f[i] = cod index of the image of dom point i

    int apply(int i) const { return f.at(static_cast<size_t>(i)); }
    void validate() const;  // totality and range; throws std::invalid_argument
};

StableMap compose(const StableMap& outer, const StableMap& inner);  // outer ∘ inner

struct MinExtSpec {
    std::string x;                    // the point being split
    std::vector<std::string> s1, s2;  // subsets of points ∖ {x}; union must be R[x] ∖ {x}
    bool connect = false;             // whether the two copies of x are related
};

// ── semantics ────────────────────────────────────────────────────────────────

// Requires an equation-free formula (normalize_atoms first).
bool model_check(const KripkeModel& model, const FormPtr& phi);

PointSet eval_modal(const KripkeModel& model, const ModalPtr& psi);

// ── finite duality ───────────────────────────────────────────────────────────

// Point subsets as bitmasks (bit i = points[i]); available for frames with at
// most 16 points, like every subset-enumerating operation below.
struct DualAlgebra {
    int npoints = 0;
    std::vector<std::string> point_names;
    std::vector<std::pair<uint32_t, uint32_t>> prec;  // all (A,B) with R[A] ⊆ B, lexicographic
};

DualAlgebra dual_algebra(const ContactFrame& frame);

// R[A] for a subset mask.
uint32_t r_image(const ContactFrame& frame, uint32_t mask);

// Exhaustive check of the contact-algebra laws on the dual of a frame:
// reflexivity/symmetry consequences, meet/join closure, order compatibility
// and contraposition over all subset pairs/triples.  Returns a description of
// the first violation, or nothing.
std::optional<std::string> contact_axiom_violation(const ContactFrame& frame);

// ── map classification ───────────────────────────────────────────────────────

enum class MapClass { NotStable, Stable, RegularStable };

// stable: edges map to edges; regular additionally needs surjectivity and a
// dom edge over every cod edge.
MapClass classify_map(const StableMap& m);

// ── covers ───────────────────────────────────────────────────────────────────

bool is_one_step(const ContactFrame& frame);

struct Cover {
    ContactFrame frame;  // the covering frame
    StableMap map;       // cover → base, regular stable
};

// 1-step cover of at most quadratic size: duplicate the points whose only
// neighbor is themselves, then take ordered distinct related pairs with first
// projection.
Cover one_step_cover(const ContactFrame& frame);

// ── amalgamation ─────────────────────────────────────────────────────────────

struct Amalgam {
    ContactFrame frame;   // the pullback
    StableMap pi1, pi2;   // projections to dom(f), dom(g)
};

// Pullback of a regular-stable cospan f: B → A, g: C → A; both projections
// are regular stable and f ∘ π1 = g ∘ π2.
Amalgam pullback_amalgam(const StableMap& f, const StableMap& g);

// ── relation lift ────────────────────────────────────────────────────────────

struct Lifted {
    ContactFrame frame;  // on the given carrier
    StableMap map;       // induced regular stable map onto the base
};

// Endows carrier with y1 R̃ y2 iff f(y1) R f(y2); f must be surjective.
Lifted lift_relation(const std::vector<std::string>& carrier, const std::vector<int>& f,
                     const ContactFrame& base);

// ── quotients ────────────────────────────────────────────────────────────────

struct Quotient {
    ContactFrame frame;  // one point per block
    StableMap map;       // base → quotient, regular stable
};

// Blocks are point-name lists; the quotient relation is
// A R B iff A ∩ R[B] ≠ ∅.
Quotient quotient_by_partition(const ContactFrame& frame,
                               const std::vector<std::vector<std::string>>& blocks);

// ── minimal extensions ───────────────────────────────────────────────────────

struct MinimalExtension {
    ContactFrame frame;  // carrier (points ∖ {x}) ⊕ {x_1, x_2}
    StableMap map;       // extension → base, regular stable, |dom| = |cod| + 1
};

// Splits spec.x into two copies with R[x_i] ∩ (points ∖ {x}) = S_i and the
// copies related iff spec.connect.  The dual algebra doubles in size and the
// induced algebra map is an embedding.
MinimalExtension minimal_extensions(const ContactFrame& frame, const MinExtSpec& spec);

// Decomposes a regular stable map into a chain f = f_1 ∘ … ∘ f_k of minimal
// regular stable maps (each dropping exactly one point), k = |dom| − |cod|.
// The identity yields the empty chain; a non-identity bijection cannot be
// decomposed and raises std::invalid_argument.
std::vector<StableMap> factor_minimal(const StableMap& f);

// ── splitting conditions ─────────────────────────────────────────────────────

enum class SplitAxiom { S1, S2, S3 };

struct SplitWitness {
    std::vector<uint32_t> premise;        // S1: A,B1,B2; S2: A,B; S3: A
    bool resolved = false;
    std::pair<uint32_t, uint32_t> split;  // (A1, A2) when resolved
};

struct SplitCheck {
    bool holds = false;
    // When holds: one entry per premise instance, in canonical mask order.
    // When not: the single violating premise (resolved = false).
    std::vector<SplitWitness> witnesses;
};

// Exhaustive test of a splitting condition over all clopen (= arbitrary)
// subsets:
//   S1: A ≠ ∅, (B1∪B2)∩A = ∅, R[A] ⊆ A∪B1∪B2  ⇒  A splits into disjoint
//       nonempty A1,A2 with R[A1] ⊆ A1∪B1 and R[A2] ⊆ A2∪B2;
//   S2: A∩B = ∅, A∩R[B] ≠ ∅  ⇒  A = A1 ⊎ A2 with A1∩R[B] ≠ ∅,
//       A2∩R[B] ≠ ∅ and A1∩R[A2] = ∅;
//   S3: A ≠ ∅  ⇒  A = A1 ⊎ A2 with R[A1] ⊆ A and R[A1] ⊈ A1.
SplitCheck splitting_check(const ContactFrame& frame, SplitAxiom which);

struct PartitionSplitResult {
    bool disconnected_ok = false, connected_ok = false;
    std::pair<uint32_t, uint32_t> disconnected_split, connected_split;
    bool both() const { return disconnected_ok && connected_ok; }
};

// Partition-level splitting: blocks index the partition, a_block the class A,
// s1/s2 select the blocks of S1/S2 (must jointly cover exactly the blocks C
// with A ∩ R[C] ≠ ∅, else PreconditionViolationError).  Searches subsets of
// A for the R-disconnected and the R-connected split, each with
// A_i ∩ R[C] ≠ ∅ iff C ∈ S_i for every other block C.
PartitionSplitResult partition_split_check(const ContactFrame& frame,
                                           const std::vector<std::vector<std::string>>& blocks,
                                           int a_block, const std::vector<int>& s1,
                                           const std::vector<int>& s2);

// ── text format ──────────────────────────────────────────────────────────────

// `frame NAME; points a b c; edges a-b b-c;` — loops implicit, edge section
// optional.  frame_to_text prints the same shape back.
ContactFrame parse_frame(const std::string& text);
std::string frame_to_text(const ContactFrame& frame);

}  // namespace s2ic
