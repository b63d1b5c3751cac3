#include "s2ic/frames.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace s2ic {

namespace {

constexpr int kSubsetLimit = 16;   // 2^16 subsets at most for duality ops
constexpr int kSplitLimit = 10;    // splitting checks walk subset pairs with splits
constexpr int kTripleLimit = 8;    // the axiom checker walks full subset triples

void require_subset_scale(const ContactFrame& frame, int limit, const char* what) {
    if (static_cast<int>(frame.points.size()) > limit) {
        std::ostringstream msg;
        msg << what << ": frame '" << frame.name << "' has " << frame.points.size()
            << " points; subset enumeration is limited to " << limit;
        throw SizeLimitError(msg.str());
    }
}

// Deterministic fresh-name helper: base, then base_2, base_3, ...
std::string uniquify(const std::string& base, std::set<std::string>& taken) {
    std::string cand = base;
    for (int i = 2; taken.count(cand); ++i) cand = base + "_" + std::to_string(i);
    taken.insert(cand);
    return cand;
}

std::vector<std::vector<int>> adjacency(const ContactFrame& frame) {
    std::vector<std::vector<int>> adj(frame.points.size());
    for (size_t i = 0; i < frame.points.size(); ++i) adj[i].push_back(static_cast<int>(i));
    for (auto [i, j] : frame.edges) {
        adj[static_cast<size_t>(i)].push_back(j);
        adj[static_cast<size_t>(j)].push_back(i);
    }
    return adj;
}

bool frames_equal(const ContactFrame& a, const ContactFrame& b) {
    return a.points == b.points && a.edges == b.edges;
}

}  // namespace

// ── ContactFrame basics ──────────────────────────────────────────────────────

int ContactFrame::index_of(const std::string& point) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i] == point) return static_cast<int>(i);
    return -1;
}

bool ContactFrame::related(int i, int j) const {
    if (i == j) return true;
    auto e = std::minmax(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(e.first, e.second));
}

std::vector<int> ContactFrame::neighbors(int i) const {
    std::vector<int> out{i};
    for (auto [a, b] : edges) {
        if (a == i) out.push_back(b);
        if (b == i) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void ContactFrame::validate() const {
    if (points.empty())
        throw std::invalid_argument("frame '" + name + "': contact frames are nonempty");
    std::set<std::string> seen;
    for (const auto& p : points) {
        if (p.empty()) throw std::invalid_argument("frame '" + name + "': empty point name");
        if (!seen.insert(p).second)
            throw std::invalid_argument("frame '" + name + "': duplicate point '" + p + "'");
    }
    int n = static_cast<int>(points.size());
    for (size_t k = 0; k < edges.size(); ++k) {
        auto [i, j] = edges[k];
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("frame '" + name + "': edge endpoint out of range");
        if (i >= j)
            throw std::invalid_argument("frame '" + name + "': edges must be normalized (i < j)");
        if (k > 0 && !(edges[k - 1] < edges[k]))
            throw std::invalid_argument("frame '" + name + "': edges must be sorted and unique");
    }
}

ContactFrame make_frame(std::string name, std::vector<std::string> points,
                        const std::vector<std::pair<int, int>>& edges) {
    ContactFrame frame{std::move(name), std::move(points), {}};
    std::set<std::pair<int, int>> norm;
    for (auto [i, j] : edges) {
        if (i == j) continue;  // loops are implicit
        norm.emplace(std::min(i, j), std::max(i, j));
    }
    frame.edges.assign(norm.begin(), norm.end());
    frame.validate();
    return frame;
}

PointSet KripkeModel::value_of(const std::string& var) const {
    auto it = valuation.find(var);
    if (it != valuation.end()) return it->second;
    return PointSet(frame.points.size(), false);
}

void StableMap::validate() const {
    dom.validate();
    cod.validate();
    if (f.size() != dom.points.size())
        throw std::invalid_argument("stable map: point function is not total");
    for (int img : f)
        if (img < 0 || img >= static_cast<int>(cod.points.size()))
            throw std::invalid_argument("stable map: image point out of range");
}

StableMap compose(const StableMap& outer, const StableMap& inner) {
    outer.validate();
    inner.validate();
    if (!frames_equal(outer.dom, inner.cod))
        throw std::invalid_argument("compose: inner codomain differs from outer domain");
    StableMap out{inner.dom, outer.cod, {}};
    out.f.reserve(inner.f.size());
    for (int mid : inner.f) out.f.push_back(outer.f[static_cast<size_t>(mid)]);
    return out;
}

// ── semantics ────────────────────────────────────────────────────────────────

namespace {

PointSet term_extent(const KripkeModel& model, const TermPtr& t) {
    size_t n = model.frame.points.size();
    switch (t->op) {
        case TermOp::Zero: return PointSet(n, false);
        case TermOp::One: return PointSet(n, true);
        case TermOp::Var: return model.value_of(t->var);
        case TermOp::Not: {
            PointSet a = term_extent(model, t->a);
            for (size_t i = 0; i < n; ++i) a[i] = !a[i];
            return a;
        }
        default: {
            PointSet a = term_extent(model, t->a);
            PointSet b = term_extent(model, t->b);
            for (size_t i = 0; i < n; ++i) {
                switch (t->op) {
                    case TermOp::And: a[i] = a[i] && b[i]; break;
                    case TermOp::Or:  a[i] = a[i] || b[i]; break;
                    case TermOp::Xor: a[i] = a[i] != b[i]; break;
                    case TermOp::Imp: a[i] = !a[i] || b[i]; break;
                    case TermOp::Iff: a[i] = a[i] == b[i]; break;
                    default: break;
                }
            }
            return a;
        }
    }
}

bool atom_holds(const KripkeModel& model, const std::vector<std::vector<int>>& adj,
                const TermPtr& t, const TermPtr& u) {
    PointSet src = term_extent(model, t);
    PointSet dst = term_extent(model, u);
    for (size_t x = 0; x < src.size(); ++x) {
        if (!src[x]) continue;
        for (int y : adj[x])
            if (!dst[static_cast<size_t>(y)]) return false;
    }
    return true;
}

bool check_rec(const KripkeModel& model, const std::vector<std::vector<int>>& adj,
               const FormPtr& phi) {
    switch (phi->op) {
        case FormOp::Top: return true;
        case FormOp::Bot: return false;
        case FormOp::Atom: return atom_holds(model, adj, phi->t, phi->u);
        case FormOp::Equation:
            throw std::invalid_argument("model_check: equation encountered; run normalize_atoms");
        case FormOp::Neg: return !check_rec(model, adj, phi->a);
        case FormOp::Conj: return check_rec(model, adj, phi->a) && check_rec(model, adj, phi->b);
        case FormOp::Disj: return check_rec(model, adj, phi->a) || check_rec(model, adj, phi->b);
        case FormOp::Imp: return !check_rec(model, adj, phi->a) || check_rec(model, adj, phi->b);
        case FormOp::Iff: return check_rec(model, adj, phi->a) == check_rec(model, adj, phi->b);
    }
    return false;  // unreachable
}

}  // namespace

bool model_check(const KripkeModel& model, const FormPtr& phi) {
    model.frame.validate();
    return check_rec(model, adjacency(model.frame), phi);
}

PointSet eval_modal(const KripkeModel& model, const ModalPtr& psi) {
    size_t n = model.frame.points.size();
    auto constant = [n](bool v) { return PointSet(n, v); };
    switch (psi->op) {
        case ModalOp::Top: return constant(true);
        case ModalOp::Bot: return constant(false);
        case ModalOp::Var: return model.value_of(psi->var);
        case ModalOp::Not: {
            PointSet a = eval_modal(model, psi->a);
            for (size_t i = 0; i < n; ++i) a[i] = !a[i];
            return a;
        }
        case ModalOp::Univ: {
            PointSet a = eval_modal(model, psi->a);
            bool all = std::all_of(a.begin(), a.end(), [](bool v) { return v; });
            return constant(all);
        }
        case ModalOp::Diam: {
            PointSet a = eval_modal(model, psi->a);
            bool some = std::any_of(a.begin(), a.end(), [](bool v) { return v; });
            return constant(some);
        }
        case ModalOp::Sim: {
            PointSet a = eval_modal(model, psi->a);
            PointSet b = eval_modal(model, psi->b);
            auto adj = adjacency(model.frame);
            for (size_t x = 0; x < n; ++x) {
                if (!a[x]) continue;
                for (int y : adj[x])
                    if (!b[static_cast<size_t>(y)]) return constant(false);
            }
            return constant(true);
        }
        default: {
            PointSet a = eval_modal(model, psi->a);
            PointSet b = eval_modal(model, psi->b);
            for (size_t i = 0; i < n; ++i) {
                switch (psi->op) {
                    case ModalOp::And: a[i] = a[i] && b[i]; break;
                    case ModalOp::Or:  a[i] = a[i] || b[i]; break;
                    case ModalOp::Xor: a[i] = a[i] != b[i]; break;
                    case ModalOp::Imp: a[i] = !a[i] || b[i]; break;
                    case ModalOp::Iff: a[i] = a[i] == b[i]; break;
                    default: break;
                }
            }
            return a;
        }
    }
}

// ── finite duality ───────────────────────────────────────────────────────────

uint32_t r_image(const ContactFrame& frame, uint32_t mask) {
    require_subset_scale(frame, 31, "r_image");
    uint32_t out = mask;  // reflexivity
    for (auto [i, j] : frame.edges) {
        if (mask & (1u << i)) out |= 1u << j;
        if (mask & (1u << j)) out |= 1u << i;
    }
    return out;
}

DualAlgebra dual_algebra(const ContactFrame& frame) {
    frame.validate();
    require_subset_scale(frame, kSubsetLimit, "dual_algebra");
    int n = static_cast<int>(frame.points.size());
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);

    std::vector<uint32_t> rimg(1u << n);
    for (uint32_t a = 0; a <= full; ++a) rimg[a] = r_image(frame, a);

    uint64_t pairs = 0;
    for (uint32_t a = 0; a <= full; ++a)
        pairs += 1ull << (n - __builtin_popcount(rimg[a]));
    if (pairs > (1ull << 22))
        throw SizeLimitError("dual_algebra: listing would hold " + std::to_string(pairs) +
                             " pairs; limit is " + std::to_string(1ull << 22));

    DualAlgebra dual;
    dual.npoints = n;
    dual.point_names = frame.points;
    for (uint32_t a = 0; a <= full; ++a) {
        // Supersets of R[a] in increasing order.
        for (uint32_t b = rimg[a];; b = (b + 1) | rimg[a]) {
            dual.prec.emplace_back(a, b);
            if (b == full) break;
        }
    }
    return dual;
}

std::optional<std::string> contact_axiom_violation(const ContactFrame& frame) {
    frame.validate();
    require_subset_scale(frame, kTripleLimit, "contact_axiom_violation");
    int n = static_cast<int>(frame.points.size());
    uint32_t full = (1u << n) - 1u;

    std::vector<uint32_t> rimg(1u << n);
    for (uint32_t a = 0; a <= full; ++a) rimg[a] = r_image(frame, a);
    auto prec = [&](uint32_t a, uint32_t b) { return (rimg[a] & ~b) == 0; };

    std::ostringstream msg;
    if (!prec(0, 0) || !prec(full, full)) return "bottom/top are not reflexive under the relation";
    for (uint32_t a = 0; a <= full; ++a) {
        for (uint32_t b = 0; b <= full; ++b) {
            if (prec(a, b)) {
                if ((a & ~b) != 0) {  // order: a ≺ b implies a ≤ b
                    msg << "inclusion fails for (" << a << "," << b << ")";
                    return msg.str();
                }
                if (!prec(full & ~b, full & ~a)) {  // contraposition
                    msg << "contraposition fails for (" << a << "," << b << ")";
                    return msg.str();
                }
                // Downward/upward monotonicity (order compatibility).
                for (uint32_t sub = a;; sub = (sub - 1) & a) {
                    if (!prec(sub, b)) {
                        msg << "downward monotonicity fails for (" << sub << "," << b << ")";
                        return msg.str();
                    }
                    if (sub == 0) break;
                }
                for (uint32_t sup = b;; sup = (sup + 1) | b) {
                    if (!prec(a, sup)) {
                        msg << "upward monotonicity fails for (" << a << "," << sup << ")";
                        return msg.str();
                    }
                    if (sup == full) break;
                }
            }
            for (uint32_t c = 0; c <= full; ++c) {
                if (prec(a, b) && prec(a, c) && !prec(a, b & c)) {
                    msg << "meet closure fails for (" << a << "," << b << "," << c << ")";
                    return msg.str();
                }
                if (prec(a, c) && prec(b, c) && !prec(a | b, c)) {
                    msg << "join closure fails for (" << a << "," << b << "," << c << ")";
                    return msg.str();
                }
            }
        }
    }
    return std::nullopt;
}

// ── map classification ───────────────────────────────────────────────────────

MapClass classify_map(const StableMap& m) {
    m.validate();
    for (auto [i, j] : m.dom.edges)
        if (!m.cod.related(m.f[static_cast<size_t>(i)], m.f[static_cast<size_t>(j)]))
            return MapClass::NotStable;

    std::vector<bool> hit(m.cod.points.size(), false);
    for (int img : m.f) hit[static_cast<size_t>(img)] = true;
    bool regular = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });

    // Every proper codomain edge needs a domain edge mapping onto it.
    for (auto [x, y] : m.cod.edges) {
        if (!regular) break;
        bool witnessed = false;
        for (auto [i, j] : m.dom.edges) {
            int fi = m.f[static_cast<size_t>(i)], fj = m.f[static_cast<size_t>(j)];
            if ((fi == x && fj == y) || (fi == y && fj == x)) {
                witnessed = true;
                break;
            }
        }
        regular = witnessed;
    }
    return regular ? MapClass::RegularStable : MapClass::Stable;
}

// ── covers ───────────────────────────────────────────────────────────────────

bool is_one_step(const ContactFrame& frame) {
    auto adj = adjacency(frame);
    for (size_t i = 0; i < adj.size(); ++i)
        if (adj[i].size() == 1) return false;  // singleton: only related to itself
    for (size_t y = 0; y < adj.size(); ++y)
        for (int x : adj[y])
            for (int z : adj[y])
                if (x != static_cast<int>(y) && static_cast<int>(y) != z && x != z) return false;
    return true;
}

Cover one_step_cover(const ContactFrame& frame) {
    frame.validate();

    // A frame that is already 1-step covers itself: the identity is the only
    // cover map that stays factorable (an isomorphism onto different point
    // names would admit no decomposition into single-point drops).
    if (is_one_step(frame)) {
        Cover self;
        self.frame = frame;
        self.map.dom = frame;
        self.map.cod = frame;
        self.map.f.resize(frame.points.size());
        for (size_t i = 0; i < frame.points.size(); ++i) self.map.f[i] = static_cast<int>(i);
        return self;
    }

    // Stage 1: duplicate singleton points so that everything has a proper edge.
    ContactFrame mid;
    mid.name = frame.name + "_nosing";
    std::vector<int> mid_to_base;
    std::set<std::string> taken;
    std::vector<int> kept_index(frame.points.size(), -1);
    auto adj = adjacency(frame);
    for (size_t i = 0; i < frame.points.size(); ++i) {
        if (adj[i].size() == 1) {
            int a = static_cast<int>(mid.points.size());
            mid.points.push_back(uniquify(frame.points[i] + "_d1", taken));
            mid.points.push_back(uniquify(frame.points[i] + "_d2", taken));
            mid_to_base.push_back(static_cast<int>(i));
            mid_to_base.push_back(static_cast<int>(i));
            mid.edges.emplace_back(a, a + 1);
        } else {
            kept_index[i] = static_cast<int>(mid.points.size());
            mid.points.push_back(uniquify(frame.points[i], taken));
            mid_to_base.push_back(static_cast<int>(i));
        }
    }
    for (auto [i, j] : frame.edges)
        mid.edges.emplace_back(kept_index[static_cast<size_t>(i)],
                               kept_index[static_cast<size_t>(j)]);
    mid = make_frame(mid.name, mid.points, mid.edges);

    // Stage 2: ordered distinct related pairs, related when they share their
    // underlying unordered pair; the cover map is the first projection.
    ContactFrame cover;
    cover.name = frame.name + "_cover";
    std::vector<int> cover_to_base;
    std::set<std::string> cover_taken;
    for (auto [i, j] : mid.edges) {
        int a = static_cast<int>(cover.points.size());
        cover.points.push_back(uniquify(mid.points[static_cast<size_t>(i)] + "_" +
                                            mid.points[static_cast<size_t>(j)],
                                        cover_taken));
        cover.points.push_back(uniquify(mid.points[static_cast<size_t>(j)] + "_" +
                                            mid.points[static_cast<size_t>(i)],
                                        cover_taken));
        cover_to_base.push_back(mid_to_base[static_cast<size_t>(i)]);
        cover_to_base.push_back(mid_to_base[static_cast<size_t>(j)]);
        cover.edges.emplace_back(a, a + 1);
    }
    cover = make_frame(cover.name, cover.points, cover.edges);

    StableMap map{cover, frame, cover_to_base};
    map.validate();
    return {cover, map};
}

// ── amalgamation ─────────────────────────────────────────────────────────────

Amalgam pullback_amalgam(const StableMap& f, const StableMap& g) {
    if (classify_map(f) != MapClass::RegularStable)
        throw NotRegularError("pullback_amalgam: first leg is not regular stable");
    if (classify_map(g) != MapClass::RegularStable)
        throw NotRegularError("pullback_amalgam: second leg is not regular stable");
    if (!frames_equal(f.cod, g.cod))
        throw std::invalid_argument("pullback_amalgam: legs have different codomains");

    ContactFrame pb;
    pb.name = f.dom.name + "_x_" + g.dom.name;
    std::vector<std::pair<int, int>> coords;
    std::set<std::string> taken;
    for (size_t b = 0; b < f.dom.points.size(); ++b)
        for (size_t c = 0; c < g.dom.points.size(); ++c)
            if (f.f[b] == g.f[c]) {
                coords.emplace_back(static_cast<int>(b), static_cast<int>(c));
                pb.points.push_back(uniquify(f.dom.points[b] + "_" + g.dom.points[c], taken));
            }
    if (coords.empty()) throw EmptyPullbackError("pullback_amalgam: empty pullback");

    for (size_t p = 0; p < coords.size(); ++p)
        for (size_t q = p + 1; q < coords.size(); ++q)
            if (f.dom.related(coords[p].first, coords[q].first) &&
                g.dom.related(coords[p].second, coords[q].second))
                pb.edges.emplace_back(static_cast<int>(p), static_cast<int>(q));
    pb = make_frame(pb.name, pb.points, pb.edges);

    StableMap pi1{pb, f.dom, {}}, pi2{pb, g.dom, {}};
    for (auto [b, c] : coords) {
        pi1.f.push_back(b);
        pi2.f.push_back(c);
    }
    return {pb, pi1, pi2};
}

// ── relation lift ────────────────────────────────────────────────────────────

Lifted lift_relation(const std::vector<std::string>& carrier, const std::vector<int>& f,
                     const ContactFrame& base) {
    base.validate();
    if (f.size() != carrier.size())
        throw std::invalid_argument("lift_relation: point function is not total");
    std::vector<bool> hit(base.points.size(), false);
    for (int img : f) {
        if (img < 0 || img >= static_cast<int>(base.points.size()))
            throw std::invalid_argument("lift_relation: image point out of range");
        hit[static_cast<size_t>(img)] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool v) { return v; }))
        throw NotSurjectiveError("lift_relation: map does not cover the base frame");

    ContactFrame lifted;
    lifted.name = base.name + "_lift";
    lifted.points = carrier;
    for (size_t i = 0; i < carrier.size(); ++i)
        for (size_t j = i + 1; j < carrier.size(); ++j)
            if (base.related(f[i], f[j]))
                lifted.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    lifted = make_frame(lifted.name, lifted.points, lifted.edges);

    StableMap map{lifted, base, f};
    map.validate();
    return {lifted, map};
}

// ── quotients ────────────────────────────────────────────────────────────────

Quotient quotient_by_partition(const ContactFrame& frame,
                               const std::vector<std::vector<std::string>>& blocks) {
    frame.validate();
    std::vector<int> block_of(frame.points.size(), -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw NotAPartitionError("quotient: empty block");
        for (const auto& name : blocks[b]) {
            int i = frame.index_of(name);
            if (i < 0) throw NotAPartitionError("quotient: unknown point '" + name + "'");
            if (block_of[static_cast<size_t>(i)] != -1)
                throw NotAPartitionError("quotient: point '" + name + "' in two blocks");
            block_of[static_cast<size_t>(i)] = static_cast<int>(b);
        }
    }
    for (size_t i = 0; i < block_of.size(); ++i)
        if (block_of[i] == -1)
            throw NotAPartitionError("quotient: point '" + frame.points[i] + "' not covered");

    ContactFrame quot;
    quot.name = frame.name + "_quot";
    std::set<std::string> taken;
    for (const auto& block : blocks) {
        std::string joined = block.front();
        for (size_t k = 1; k < block.size(); ++k) joined += "_" + block[k];
        quot.points.push_back(uniquify(joined, taken));
    }
    // A R B iff A ∩ R[B] ≠ ∅; for distinct blocks that is a crossing edge.
    for (auto [i, j] : frame.edges) {
        int bi = block_of[static_cast<size_t>(i)], bj = block_of[static_cast<size_t>(j)];
        if (bi != bj) quot.edges.emplace_back(std::min(bi, bj), std::max(bi, bj));
    }
    quot = make_frame(quot.name, quot.points, quot.edges);

    StableMap map{frame, quot, block_of};
    map.validate();
    return {quot, map};
}

// ── minimal extensions ───────────────────────────────────────────────────────

MinimalExtension minimal_extensions(const ContactFrame& frame, const MinExtSpec& spec) {
    frame.validate();
    int x = frame.index_of(spec.x);
    if (x < 0) throw SpecViolationError("minimal_extensions: unknown point '" + spec.x + "'");

    auto resolve = [&](const std::vector<std::string>& names, const char* side) {
        std::set<int> out;
        for (const auto& n : names) {
            int i = frame.index_of(n);
            if (i < 0)
                throw SpecViolationError(std::string("minimal_extensions: unknown point '") + n +
                                         "' in " + side);
            if (i == x)
                throw SpecViolationError(std::string("minimal_extensions: ") + side +
                                         " contains the split point");
            out.insert(i);
        }
        return out;
    };
    std::set<int> s1 = resolve(spec.s1, "S1"), s2 = resolve(spec.s2, "S2");

    std::set<int> rx;  // R[x] ∖ {x}
    for (int y : frame.neighbors(x))
        if (y != x) rx.insert(y);
    std::set<int> uni = s1;
    uni.insert(s2.begin(), s2.end());
    if (uni != rx)
        throw SpecViolationError("minimal_extensions: S1 ∪ S2 must equal the proper "
                                 "neighborhood of '" + spec.x + "'");

    ContactFrame ext;
    ext.name = frame.name + "_ext";
    std::set<std::string> taken;
    std::vector<int> old_to_new(frame.points.size(), -1);
    for (size_t i = 0; i < frame.points.size(); ++i) {
        if (static_cast<int>(i) == x) continue;
        old_to_new[i] = static_cast<int>(ext.points.size());
        ext.points.push_back(uniquify(frame.points[i], taken));
    }
    int x1 = static_cast<int>(ext.points.size());
    ext.points.push_back(uniquify(spec.x + "_1", taken));
    int x2 = static_cast<int>(ext.points.size());
    ext.points.push_back(uniquify(spec.x + "_2", taken));

    for (auto [i, j] : frame.edges)
        if (i != x && j != x)
            ext.edges.emplace_back(old_to_new[static_cast<size_t>(i)],
                                   old_to_new[static_cast<size_t>(j)]);
    for (int s : s1) ext.edges.emplace_back(x1, old_to_new[static_cast<size_t>(s)]);
    for (int s : s2) ext.edges.emplace_back(x2, old_to_new[static_cast<size_t>(s)]);
    if (spec.connect) ext.edges.emplace_back(x1, x2);
    ext = make_frame(ext.name, ext.points, ext.edges);

    StableMap map{ext, frame, std::vector<int>(ext.points.size(), x)};
    for (size_t i = 0; i < frame.points.size(); ++i)
        if (old_to_new[i] != -1) map.f[static_cast<size_t>(old_to_new[i])] = static_cast<int>(i);
    map.validate();
    return {ext, map};
}

// ── factorization into minimal links ─────────────────────────────────────────

std::vector<StableMap> factor_minimal(const StableMap& f) {
    if (classify_map(f) != MapClass::RegularStable)
        throw NotRegularError("factor_minimal: map is not regular stable");

    std::vector<StableMap> chain;
    StableMap cur = f;

    while (cur.dom.points.size() > cur.cod.points.size()) {
        // First codomain point with at least two preimages.
        int x = -1;
        {
            std::vector<int> count(cur.cod.points.size(), 0);
            for (int img : cur.f) ++count[static_cast<size_t>(img)];
            for (size_t i = 0; i < count.size(); ++i)
                if (count[i] >= 2) {
                    x = static_cast<int>(i);
                    break;
                }
        }
        // Split the fiber: first preimage alone vs the rest.
        std::vector<int> fiber;
        for (size_t v = 0; v < cur.f.size(); ++v)
            if (cur.f[v] == x) fiber.push_back(static_cast<int>(v));
        std::set<int> t1{fiber.front()}, t2(fiber.begin() + 1, fiber.end());

        // Intermediate frame: codomain with x split into x_1, x_2 whose
        // neighborhoods come from the images of the fiber halves.
        auto fiber_image = [&](const std::set<int>& half) {
            std::set<int> out;  // codomain points adjacent to the half, minus x
            for (int v : half)
                for (int w : cur.dom.neighbors(v)) {
                    int img = cur.f[static_cast<size_t>(w)];
                    if (img != x) out.insert(img);
                }
            return out;
        };
        std::set<int> img1 = fiber_image(t1), img2 = fiber_image(t2);
        bool connect = false;
        for (int v : t2)
            for (int w : cur.dom.neighbors(v))
                if (t1.count(w)) connect = true;

        MinExtSpec spec;
        spec.x = cur.cod.points[static_cast<size_t>(x)];
        for (int i : img1) spec.s1.push_back(cur.cod.points[static_cast<size_t>(i)]);
        for (int i : img2) spec.s2.push_back(cur.cod.points[static_cast<size_t>(i)]);
        spec.connect = connect;
        MinimalExtension step = minimal_extensions(cur.cod, spec);
        chain.push_back(step.map);

        // Remaining map into the intermediate frame; the two copies of x sit
        // at the end of the extension's point list by construction.
        int x1 = static_cast<int>(step.frame.points.size()) - 2;
        int x2 = static_cast<int>(step.frame.points.size()) - 1;
        StableMap next{cur.dom, step.frame, std::vector<int>(cur.dom.points.size(), -1)};
        for (size_t v = 0; v < cur.f.size(); ++v) {
            if (t1.count(static_cast<int>(v))) next.f[v] = x1;
            else if (t2.count(static_cast<int>(v))) next.f[v] = x2;
            else next.f[v] = step.frame.index_of(cur.cod.points[static_cast<size_t>(cur.f[v])]);
        }
        next.validate();
        cur = next;
    }

    // cur is now a bijection.  The identity vanishes; any other bijection is
    // folded into the innermost link, and a bare non-identity bijection has
    // no minimal decomposition at all.
    bool is_identity = frames_equal(cur.dom, cur.cod);
    if (is_identity)
        for (size_t i = 0; i < cur.f.size(); ++i)
            if (cur.f[i] != static_cast<int>(i)) is_identity = false;
    if (!is_identity) {
        if (chain.empty())
            throw std::invalid_argument(
                "factor_minimal: a non-identity bijection admits no minimal decomposition");
        chain.back() = compose(chain.back(), cur);
    }
    return chain;
}

// ── splitting conditions ─────────────────────────────────────────────────────

SplitCheck splitting_check(const ContactFrame& frame, SplitAxiom which) {
    frame.validate();
    require_subset_scale(frame, kSplitLimit, "splitting_check");
    int n = static_cast<int>(frame.points.size());
    uint32_t full = (1u << n) - 1u;

    std::vector<uint32_t> rimg(1u << n);
    for (uint32_t a = 0; a <= full; ++a) rimg[a] = r_image(frame, a);

    SplitCheck result;
    result.holds = true;

    auto resolve = [&](SplitWitness&& w, auto&& try_split) {
        // Proper submask enumeration of A in increasing order; A1 may be
        // empty only for the S3 shape, which passes the full range anyway.
        if (try_split(w)) {
            w.resolved = true;
            result.witnesses.push_back(std::move(w));
            return true;
        }
        result.holds = false;
        w.resolved = false;
        result.witnesses.clear();
        result.witnesses.push_back(std::move(w));
        return false;
    };

    switch (which) {
        case SplitAxiom::S1: {
            for (uint32_t a = 1; a <= full; ++a) {
                uint32_t comp = full & ~a;
                uint32_t needed = rimg[a] & ~a;  // must be covered by B1 ∪ B2
                // Subsets of comp in increasing numeric order.
                for (uint32_t b1 = 0;; b1 = (b1 - comp) & comp) {
                    for (uint32_t b2 = 0;; b2 = (b2 - comp) & comp) {
                        if ((needed & ~(b1 | b2)) == 0) {
                            SplitWitness w;
                            w.premise = {a, b1, b2};
                            bool ok = resolve(std::move(w), [&](SplitWitness& out) {
                                for (uint32_t a1 = (a - 1) & a; a1 != 0; a1 = (a1 - 1) & a) {
                                    uint32_t a2 = a & ~a1;
                                    if ((rimg[a1] & ~(a1 | b1)) == 0 &&
                                        (rimg[a2] & ~(a2 | b2)) == 0) {
                                        out.split = {a1, a2};
                                        return true;
                                    }
                                }
                                return false;
                            });
                            if (!ok) return result;
                        }
                        if (b2 == comp) break;
                    }
                    if (b1 == comp) break;
                }
            }
            break;
        }
        case SplitAxiom::S2: {
            for (uint32_t a = 0; a <= full; ++a) {
                for (uint32_t b = 0; b <= full; ++b) {
                    if ((a & b) != 0 || (a & rimg[b]) == 0) continue;
                    SplitWitness w;
                    w.premise = {a, b};
                    bool ok = resolve(std::move(w), [&](SplitWitness& out) {
                        for (uint32_t a1 = a;; a1 = (a1 - 1) & a) {
                            uint32_t a2 = a & ~a1;
                            if ((a1 & rimg[b]) != 0 && (a2 & rimg[b]) != 0 &&
                                (a1 & rimg[a2]) == 0) {
                                out.split = {a1, a2};
                                return true;
                            }
                            if (a1 == 0) break;
                        }
                        return false;
                    });
                    if (!ok) return result;
                }
            }
            break;
        }
        case SplitAxiom::S3: {
            for (uint32_t a = 1; a <= full; ++a) {
                SplitWitness w;
                w.premise = {a};
                bool ok = resolve(std::move(w), [&](SplitWitness& out) {
                    for (uint32_t a1 = a;; a1 = (a1 - 1) & a) {
                        uint32_t a2 = a & ~a1;
                        if ((rimg[a1] & ~a) == 0 && (rimg[a1] & ~a1) != 0) {
                            out.split = {a1, a2};
                            return true;
                        }
                        if (a1 == 0) break;
                    }
                    return false;
                });
                if (!ok) return result;
            }
            break;
        }
    }
    return result;
}

PartitionSplitResult partition_split_check(const ContactFrame& frame,
                                           const std::vector<std::vector<std::string>>& blocks,
                                           int a_block, const std::vector<int>& s1,
                                           const std::vector<int>& s2) {
    frame.validate();
    require_subset_scale(frame, kSubsetLimit, "partition_split_check");
    if (a_block < 0 || a_block >= static_cast<int>(blocks.size()))
        throw PreconditionViolationError("partition_split_check: A is not a partition block");

    // Reuse the quotient validation to check the partition shape.
    (void)quotient_by_partition(frame, blocks);

    std::vector<uint32_t> block_mask(blocks.size(), 0);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (const auto& name : blocks[b])
            block_mask[b] |= 1u << frame.index_of(name);

    auto in_range = [&](const std::vector<int>& sel) {
        for (int c : sel)
            if (c < 0 || c >= static_cast<int>(blocks.size()) || c == a_block) return false;
        return true;
    };
    if (!in_range(s1) || !in_range(s2))
        throw PreconditionViolationError("partition_split_check: S1/S2 must list blocks other than A");

    uint32_t a_mask = block_mask[static_cast<size_t>(a_block)];
    std::set<int> sel1(s1.begin(), s1.end()), sel2(s2.begin(), s2.end());
    std::set<int> required;  // blocks C ≠ A with A ∩ R[C] ≠ ∅
    for (size_t c = 0; c < blocks.size(); ++c)
        if (static_cast<int>(c) != a_block && (a_mask & r_image(frame, block_mask[c])) != 0)
            required.insert(static_cast<int>(c));
    std::set<int> uni = sel1;
    uni.insert(sel2.begin(), sel2.end());
    if (uni != required)
        throw PreconditionViolationError(
            "partition_split_check: S1 ∪ S2 must be exactly the blocks R-reaching A");

    PartitionSplitResult result;
    auto matches = [&](uint32_t part, const std::set<int>& sel) {
        for (size_t c = 0; c < blocks.size(); ++c) {
            if (static_cast<int>(c) == a_block) continue;
            bool touches = (part & r_image(frame, block_mask[c])) != 0;
            if (touches != (sel.count(static_cast<int>(c)) > 0)) return false;
        }
        return true;
    };
    for (uint32_t a1 = (a_mask - 1) & a_mask; a1 != 0; a1 = (a1 - 1) & a_mask) {
        uint32_t a2 = a_mask & ~a1;
        if (a2 == 0) continue;
        if (!matches(a1, sel1) || !matches(a2, sel2)) continue;
        bool connected = (a1 & r_image(frame, a2)) != 0;
        if (!connected && !result.disconnected_ok) {
            result.disconnected_ok = true;
            result.disconnected_split = {a1, a2};
        }
        if (connected && !result.connected_ok) {
            result.connected_ok = true;
            result.connected_split = {a1, a2};
        }
        if (result.both()) break;
    }
    return result;
}

// ── text format ──────────────────────────────────────────────────────────────

ContactFrame parse_frame(const std::string& text) {
    // Strip comments, then split on ';' into sections of words.
    std::string clean;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            clean += (pos == std::string::npos ? line : line.substr(0, pos)) + "\n";
        }
    }
    std::vector<std::vector<std::string>> sections;
    {
        std::string sect;
        std::istringstream in(clean);
        char c;
        auto flush = [&]() {
            std::istringstream ws(sect);
            std::vector<std::string> words;
            std::string w;
            while (ws >> w) words.push_back(w);
            if (!words.empty()) sections.push_back(words);
            sect.clear();
        };
        while (in.get(c)) {
            if (c == ';') flush();
            else sect += c;
        }
        flush();
    }

    std::string name = "frame";
    std::vector<std::string> points;
    std::vector<std::pair<std::string, std::string>> edge_names;
    for (const auto& words : sections) {
        const std::string& kw = words[0];
        if (kw == "frame") {
            if (words.size() != 2)
                throw ParseError("frame section expects exactly one name", 0, 0, {"frame NAME"});
            name = words[1];
        } else if (kw == "points") {
            points.assign(words.begin() + 1, words.end());
        } else if (kw == "edges") {
            for (size_t k = 1; k < words.size(); ++k) {
                auto dash = words[k].find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == words[k].size())
                    throw ParseError("edge '" + words[k] + "' is not of the form a-b", 0, 0,
                                     {"a-b"});
                edge_names.emplace_back(words[k].substr(0, dash), words[k].substr(dash + 1));
            }
        } else {
            throw ParseError("unknown frame section '" + kw + "'", 0, 0,
                             {"frame", "points", "edges"});
        }
    }
    if (points.empty())
        throw ParseError("frame needs a nonempty points section", 0, 0, {"points"});

    ContactFrame proto{name, points, {}};
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : edge_names) {
        int i = proto.index_of(a), j = proto.index_of(b);
        if (i < 0) throw ParseError("edge endpoint '" + a + "' is not a point", 0, 0, {});
        if (j < 0) throw ParseError("edge endpoint '" + b + "' is not a point", 0, 0, {});
        edges.emplace_back(i, j);
    }
    return make_frame(name, points, edges);
}

std::string frame_to_text(const ContactFrame& frame) {
    std::ostringstream os;
    os << "frame " << frame.name << "; points";
    for (const auto& p : frame.points) os << ' ' << p;
    os << ";";
    if (!frame.edges.empty()) {
        os << " edges";
        for (auto [i, j] : frame.edges)
            os << ' ' << frame.points[static_cast<size_t>(i)] << '-'
               << frame.points[static_cast<size_t>(j)];
        os << ";";
    }
    return os.str();
}

}  // namespace s2ic
