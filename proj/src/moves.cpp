#include "vknot/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tangle_internal.hpp"

namespace vknot {

namespace {

constexpr int A = 0, B = 1, C = 2, D = 3;

bool is_under_slot(int s) { return s == A || s == C; }

int strand_of_slot(int s) { return is_under_slot(s) ? 0 : 1; }

int kind_rank(MoveKind k) { return static_cast<int>(k); }

// occurrences of each label as (crossing, slot)
std::map<int, std::vector<EdgeEnd>> occurrences(const Diagram& d) {
    std::map<int, std::vector<EdgeEnd>> occ;
    for (int i = 0; i < d.crossing_count(); ++i)
        for (int s = 0; s < 4; ++s) occ[d.crossing(i).slot[s]].push_back({i, s});
    return occ;
}

} // namespace

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::r1: return "R1";
        case MoveKind::r2: return "R2";
        case MoveKind::vr1: return "VR1";
        case MoveKind::vr2: return "VR2";
        case MoveKind::r3: return "R3";
        case MoveKind::vr3: return "VR3";
        case MoveKind::vr4: return "VR4";
    }
    return "?";
}

std::vector<MoveSite> find_reductions(const Diagram& d) {
    std::vector<MoveSite> sites;
    auto occ = occurrences(d);

    // kinks: an edge occupying one slot of each strand at a single crossing
    for (const auto& [label, ends] : occ) {
        if (ends.size() != 2 || ends[0].crossing != ends[1].crossing) continue;
        int cr = ends[0].crossing;
        if (strand_of_slot(ends[0].slot) == strand_of_slot(ends[1].slot)) continue;
        const Crossing& c = d.crossing(cr);
        MoveSite site;
        site.kind = c.is_classical() ? MoveKind::r1 : MoveKind::vr1;
        site.crossings = {cr};
        site.edges = {label};
        site.kink_sign = c.sign;
        sites.push_back(std::move(site));
    }

    // bigons: two crossings sharing two edges
    std::map<std::pair<int, int>, std::vector<int>> shared;
    for (const auto& [label, ends] : occ) {
        if (ends[0].crossing == ends[1].crossing) continue;
        auto key = std::minmax(ends[0].crossing, ends[1].crossing);
        shared[{key.first, key.second}].push_back(label);
    }
    auto slot_at = [&](int label, int cr) {
        for (const EdgeEnd& e : occ[label])
            if (e.crossing == cr) return e.slot;
        return -1;
    };
    for (const auto& [pair, labels] : shared) {
        if (labels.size() < 2) continue;
        auto [c1, c2] = pair;
        const Crossing& x1 = d.crossing(c1);
        const Crossing& x2 = d.crossing(c2);
        if (x1.is_classical() && x2.is_classical()) {
            if (x1.sign == x2.sign) continue;
            for (int e : labels)
                for (int f : labels) {
                    if (e == f) continue;
                    if (is_under_slot(slot_at(e, c1)) && is_under_slot(slot_at(e, c2)) &&
                        !is_under_slot(slot_at(f, c1)) && !is_under_slot(slot_at(f, c2)))
                        sites.push_back({MoveKind::r2, {c1, c2}, {e, f}, 0});
                }
        } else if (x1.is_virtual() && x2.is_virtual()) {
            for (size_t a = 0; a < labels.size(); ++a)
                for (size_t b = a + 1; b < labels.size(); ++b) {
                    int e = labels[a], f = labels[b];
                    if (strand_of_slot(slot_at(e, c1)) != strand_of_slot(slot_at(f, c1)) &&
                        strand_of_slot(slot_at(e, c2)) != strand_of_slot(slot_at(f, c2)))
                        sites.push_back({MoveKind::vr2, {c1, c2}, {e, f}, 0});
                }
        }
    }

    // triangle faces of the rotation system
    std::set<std::pair<int, int>> visited; // dart = (crossing, slot)
    for (int cr = 0; cr < d.crossing_count(); ++cr) {
        for (int s = 0; s < 4; ++s) {
            if (visited.count({cr, s})) continue;
            // walk the face containing this dart
            std::vector<std::pair<int, int>> face;
            std::vector<int> face_edges;
            std::pair<int, int> cur{cr, s};
            do {
                face.push_back(cur);
                int exit_slot = (cur.second + 1) % 4;
                int label = d.crossing(cur.first).slot[exit_slot];
                face_edges.push_back(label);
                const EdgeRecord& rec = d.edge(label);
                EdgeEnd other = (rec.tail.crossing == cur.first && rec.tail.slot == exit_slot)
                                    ? rec.head
                                    : rec.tail;
                cur = {other.crossing, other.slot};
            } while (cur != face[0] && face.size() <= d.crossing_count() * 4u);
            for (const auto& dart : face) visited.insert(dart);
            if (face.size() != 3) continue;
            std::set<int> cr_set{face[0].first, face[1].first, face[2].first};
            std::set<int> edge_set(face_edges.begin(), face_edges.end());
            if (cr_set.size() != 3 || edge_set.size() != 3) continue;
            int n_classical = 0;
            for (int c : cr_set)
                if (d.crossing(c).is_classical()) ++n_classical;
            std::vector<int> crs(cr_set.begin(), cr_set.end());
            std::vector<int> eds(face_edges.begin(), face_edges.end());
            std::sort(eds.begin(), eds.end());
            if (n_classical == 3) {
                // some edge must ride over (or under) both of its crossings
                bool ok = false;
                for (int e : eds) {
                    const EdgeRecord& rec = d.edge(e);
                    if (is_under_slot(rec.tail.slot) == is_under_slot(rec.head.slot)) ok = true;
                }
                if (ok) sites.push_back({MoveKind::r3, crs, eds, 0});
            } else if (n_classical == 0) {
                sites.push_back({MoveKind::vr3, crs, eds, 0});
            } else if (n_classical == 1) {
                sites.push_back({MoveKind::vr4, crs, eds, 0});
            }
        }
    }

    std::sort(sites.begin(), sites.end(), [](const MoveSite& x, const MoveSite& y) {
        int mx = *std::min_element(x.crossings.begin(), x.crossings.end());
        int my = *std::min_element(y.crossings.begin(), y.crossings.end());
        if (mx != my) return mx < my;
        if (kind_rank(x.kind) != kind_rank(y.kind)) return kind_rank(x.kind) < kind_rank(y.kind);
        if (x.crossings != y.crossings) return x.crossings < y.crossings;
        return x.edges < y.edges;
    });
    return sites;
}

namespace {

// Surgeon: see smooth_oriented; duplicated here in slimmed-down form to keep
// the splice mechanics next to the move appliers.
struct Surgeon {
    std::vector<Crossing> crossings;
    int free_loops;
    std::map<int, EdgeRecord> edges;
    std::set<int> dead;

    explicit Surgeon(const Diagram& d)
        : crossings(d.crossings()), free_loops(d.free_loops()), edges(d.edges()) {}

    void splice_through(int cr, int in_slot, int out_slot) {
        int in_label = crossings[cr].slot[in_slot];
        int out_label = crossings[cr].slot[out_slot];
        if (in_label == out_label) {
            edges.erase(in_label);
            ++free_loops;
            return;
        }
        EdgeRecord& in_rec = edges.at(in_label);
        EdgeRecord& out_rec = edges.at(out_label);
        in_rec.head = out_rec.head;
        if (in_rec.head.crossing >= 0)
            crossings[in_rec.head.crossing].slot[in_rec.head.slot] = in_label;
        edges.erase(out_label);
    }

    void remove_crossing(const Diagram& d, int cr) {
        for (auto [in_slot, out_slot] : d.strands(cr)) {
            // slots may have been relabeled by earlier splices; pairing is by slot
            splice_through(cr, in_slot, out_slot);
        }
        dead.insert(cr);
    }

    Diagram finish() const {
        std::vector<Crossing> live;
        for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
            if (!dead.count(i)) live.push_back(crossings[i]);
        return Diagram::make(std::move(live), free_loops);
    }
};

void require(bool cond, const char* what) {
    if (!cond) throw OperationError(std::string("stale move site: ") + what);
}

Diagram apply_triangle(const Diagram& d, const MoveSite& site) {
    std::vector<Crossing> out = d.crossings();
    for (int e : site.edges) {
        const EdgeRecord& rec = d.edge(e);
        int P = rec.tail.crossing; // e outgoing here
        int Q = rec.head.crossing; // e incoming here
        require(std::count(site.crossings.begin(), site.crossings.end(), P) == 1 &&
                    std::count(site.crossings.begin(), site.crossings.end(), Q) == 1,
                "triangle edge endpoints moved");
        // strand slots of e at each crossing
        auto strand_slots = [&](int cr, int slot) {
            for (auto pr : d.strands(cr))
                if (pr.first == slot || pr.second == slot) return pr;
            throw OperationError("internal: slot not on a strand");
        };
        auto [inP, outP] = strand_slots(P, rec.tail.slot);
        auto [inQ, outQ] = strand_slots(Q, rec.head.slot);
        int u = d.crossing(P).slot[inP];
        int v = d.crossing(Q).slot[outQ];
        // slide: the strand now meets Q before P
        out[Q].slot[inQ] = u;
        out[Q].slot[outQ] = e;
        out[P].slot[inP] = e;
        out[P].slot[outP] = v;
    }
    return Diagram::make(std::move(out), d.free_loops());
}

} // namespace

Diagram apply_move(const Diagram& d, const MoveSite& site) {
    for (int cr : site.crossings)
        require(cr >= 0 && cr < d.crossing_count(), "crossing id out of range");
    switch (site.kind) {
        case MoveKind::r1:
        case MoveKind::vr1: {
            int cr = site.crossings.at(0);
            require(d.crossing(cr).is_classical() == (site.kind == MoveKind::r1),
                    "crossing kind changed");
            int label = site.edges.at(0);
            const EdgeRecord& rec = d.edge(label);
            require(rec.tail.crossing == cr && rec.head.crossing == cr,
                    "kink edge no longer loops");
            Surgeon s(d);
            s.remove_crossing(d, cr);
            return s.finish();
        }
        case MoveKind::r2:
        case MoveKind::vr2: {
            int c1 = site.crossings.at(0), c2 = site.crossings.at(1);
            for (int e : site.edges) {
                const EdgeRecord& rec = d.edge(e);
                require((rec.tail.crossing == c1 && rec.head.crossing == c2) ||
                            (rec.tail.crossing == c2 && rec.head.crossing == c1),
                        "shared edge moved");
            }
            if (site.kind == MoveKind::r2)
                require(d.crossing(c1).sign == -d.crossing(c2).sign, "signs changed");
            Surgeon s(d);
            s.remove_crossing(d, c1);
            s.remove_crossing(d, c2);
            return s.finish();
        }
        case MoveKind::r3:
        case MoveKind::vr3:
        case MoveKind::vr4:
            return apply_triangle(d, site);
    }
    throw OperationError("unknown move kind");
}

SimplifyResult simplify_with_trace(const Diagram& d) {
    SimplifyResult result{d, {}};
    for (;;) {
        std::vector<MoveSite> sites = find_reductions(result.diagram);
        auto it = std::find_if(sites.begin(), sites.end(),
                               [](const MoveSite& s) { return s.reduces_crossings(); });
        if (it == sites.end()) break;
        result.trace.push_back(*it);
        result.diagram = canonicalize(apply_move(result.diagram, *it));
    }
    return result;
}

Diagram simplify(const Diagram& d) { return simplify_with_trace(d).diagram; }

VirtualR2Insertion virtual_r2_insert(const Diagram& d, int e1, int e2) {
    if (e1 == e2) throw OperationError("virtual R2 insertion needs distinct edges");
    const EdgeRecord r1 = d.edge(e1);
    const EdgeRecord r2 = d.edge(e2);
    int m1 = d.max_label() + 1;
    int m2 = m1 + 1;
    int x1 = m1 + 2;
    int x2 = m1 + 3;
    std::vector<Crossing> out = d.crossings();
    // both strands pass the first crossing, then the second
    out.push_back(make_virtual(e1, e2, m1, m2));
    out.push_back(make_virtual(m2, m1, x2, x1));
    out[r1.head.crossing].slot[r1.head.slot] = x1;
    out[r2.head.crossing].slot[r2.head.slot] = x2;
    int w1 = d.crossing_count();
    int w2 = w1 + 1;
    return {Diagram::make(std::move(out), d.free_loops()), {w1, w2}, {x1, x2}};
}

TwistInsertion full_twist_insert(const Diagram& d, const TwistSpec& spec) {
    if (spec.edges.empty()) throw OperationError("twist needs at least one edge");
    if (spec.full_turns < 1) throw OperationError("full_turns must be positive");
    if (spec.sign != 1 && spec.sign != -1) throw OperationError("twist sign must be +1/-1");
    std::set<int> uniq(spec.edges.begin(), spec.edges.end());
    if (uniq.size() != spec.edges.size())
        throw OperationError("twist edges must be pairwise distinct");
    for (int e : spec.edges) d.edge(e); // existence check
    int k = static_cast<int>(spec.edges.size());
    if (k == 1) return {d, spec.edges}; // single-strand twist is a kink; suppressed
    auto [diagram, exits] =
        detail::splice_braid(d, spec.edges, k, static_cast<long long>(k) * spec.full_turns,
                             spec.sign);
    return {std::move(diagram), std::move(exits)};
}

} // namespace vknot
