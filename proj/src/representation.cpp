#include "vknot/representation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tangle_internal.hpp"

namespace vknot {

namespace detail {

BraidBuild build_torus_braid(int m, long long reps, int sign, int open_k,
                             int first_label) {
    BraidBuild b;
    b.next_label = first_label;
    std::vector<int> pos(m);
    for (int j = 0; j < m; ++j) pos[j] = b.next_label++;
    b.bottom = pos;
    for (long long rep = 0; rep < reps; ++rep) {
        for (int g = 0; g + 1 < m; ++g) {
            int u = pos[g], w = pos[g + 1];
            int uo = b.next_label++;
            int wo = b.next_label++;
            // positive: right strand over; negative: the mirror crossing
            if (sign > 0)
                b.crossings.push_back(make_classical(+1, u, w, uo, wo));
            else
                b.crossings.push_back(make_classical(-1, w, uo, wo, u));
            pos[g] = wo;
            pos[g + 1] = uo;
        }
    }
    // close positions open_k..m-1 around: top label becomes the bottom label
    std::map<int, int> rename;
    for (int j = open_k; j < m; ++j)
        if (pos[j] != b.bottom[j]) rename[pos[j]] = b.bottom[j];
    if (!rename.empty())
        for (Crossing& cr : b.crossings)
            for (int s = 0; s < 4; ++s) {
                auto it = rename.find(cr.slot[s]);
                if (it != rename.end()) cr.slot[s] = it->second;
            }
    b.top.assign(pos.begin(), pos.end());
    for (int j = 0; j < m; ++j) {
        auto it = rename.find(b.top[j]);
        if (it != rename.end()) b.top[j] = it->second;
    }
    b.top.resize(open_k);
    b.bottom.resize(open_k);
    return b;
}

std::pair<Diagram, std::vector<int>> splice_braid(const Diagram& d,
                                                  const std::vector<int>& cut_edges,
                                                  int m, long long reps, int sign) {
    int k = static_cast<int>(cut_edges.size());
    BraidBuild b = build_torus_braid(m, reps, sign, k, d.max_label() + 1);
    std::vector<Crossing> out = d.crossings();
    std::map<int, int> rename; // braid entry labels -> cut edge labels
    std::vector<int> exits(k);
    std::vector<char> identity(k, 0);
    for (int j = 0; j < k; ++j) {
        if (b.top[j] == b.bottom[j]) { // strand untouched by the braid word
            identity[j] = 1;
            exits[j] = cut_edges[j];
            continue;
        }
        rename[b.bottom[j]] = cut_edges[j];
        exits[j] = b.top[j];
    }
    for (Crossing cr : b.crossings) {
        for (int s = 0; s < 4; ++s) {
            auto it = rename.find(cr.slot[s]);
            if (it != rename.end()) cr.slot[s] = it->second;
        }
        out.push_back(cr);
    }
    for (int j = 0; j < k; ++j) {
        if (identity[j]) continue;
        const EdgeRecord& rec = d.edge(cut_edges[j]);
        out[rec.head.crossing].slot[rec.head.slot] = exits[j];
    }
    return {Diagram::make(std::move(out), d.free_loops()), exits};
}

} // namespace detail

TorusTangle torus_tangle(int p, long long n, int k, int first_label) {
    if (p < 1) throw OperationError("torus class needs p >= 1");
    if (k < 1) throw OperationError("torus tangle needs k >= 1 strands");
    int sign = n >= 0 ? +1 : -1;
    long long reps = (n >= 0 ? n : -n) * k;
    detail::BraidBuild b =
        detail::build_torus_braid(p * k, reps, sign, k, first_label);
    return {std::move(b.crossings), std::move(b.bottom), std::move(b.top)};
}

Diagram close_tangle(const TorusTangle& t) {
    std::map<int, int> rename;
    int free_loops = 0;
    for (size_t j = 0; j < t.bottom.size(); ++j) {
        if (t.top[j] == t.bottom[j]) {
            ++free_loops; // untouched strand closes to a plain circle
            continue;
        }
        rename[t.top[j]] = t.bottom[j];
    }
    std::vector<Crossing> out;
    for (Crossing cr : t.crossings) {
        for (int s = 0; s < 4; ++s) {
            auto it = rename.find(cr.slot[s]);
            if (it != rename.end()) cr.slot[s] = it->second;
        }
        out.push_back(cr);
    }
    return Diagram::make(std::move(out), free_loops);
}

Representation Representation::with_handle(int i, Handle h) const {
    std::vector<Handle> hs = handles_;
    hs.at(i) = std::move(h);
    return Representation(base_, arc_choice_, std::move(hs));
}

namespace {

struct Passage {
    int member;  // crossing id
    int in_slot; // incoming slot of this strand
    int in_edge;
    int out_edge;
};

std::vector<Passage> member_passages(const Diagram& d, const std::vector<int>& members) {
    std::vector<Passage> ps;
    for (int m : members) {
        const Crossing& cr = d.crossing(m);
        if (!cr.is_virtual())
            throw OperationError("handle members must be virtual crossings");
        for (auto [in_slot, out_slot] : d.strands(m))
            ps.push_back({m, in_slot, cr.slot[in_slot], cr.slot[out_slot]});
    }
    return ps;
}

Handle build_singleton_handle(const Diagram& d, int member, OverArc choice,
                              const ComponentMap& comp) {
    const Crossing& cr = d.crossing(member);
    auto strands = d.strands(member);
    auto [in1, out1] = strands[0];
    auto [in2, out2] = strands[1];
    int chosen_in = choice == OverArc::strand1 ? in1 : in2;
    int chosen_out = choice == OverArc::strand1 ? out1 : out2;
    int base_in = choice == OverArc::strand1 ? in2 : in1;

    Handle h;
    h.members = {member};
    h.k = 1;
    HandleSegment seg;
    seg.passages = {{member, chosen_in}};
    seg.entry_edge = cr.slot[chosen_in];
    seg.cut_edge = cr.slot[chosen_out];
    seg.align = +1;
    seg.component = comp.edge_component.at(cr.slot[chosen_in]);
    h.segments = {seg};
    h.base_component = comp.edge_component.at(cr.slot[base_in]);
    h.base_passes = 1;
    return h;
}

Handle build_group_handle(const Diagram& d, const std::vector<int>& members,
                          const ComponentMap& comp) {
    std::vector<Passage> ps = member_passages(d, members);
    std::set<int> member_set(members.begin(), members.end());

    // chain passages: out-edge of one equals in-edge of the next
    std::map<int, size_t> by_in_edge;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (by_in_edge.count(ps[i].in_edge))
            throw OperationError("handle strands are not simple");
        by_in_edge[ps[i].in_edge] = i;
    }
    std::vector<char> is_chain_start(ps.size(), 1);
    for (const Passage& p : ps)
        if (by_in_edge.count(p.out_edge)) is_chain_start[by_in_edge[p.out_edge]] = 0;

    std::vector<HandleSegment> segments;
    std::vector<char> used(ps.size(), 0);
    for (size_t i = 0; i < ps.size(); ++i) {
        if (!is_chain_start[i]) continue;
        HandleSegment seg;
        size_t cur = i;
        for (;;) {
            used[cur] = 1;
            seg.passages.push_back({ps[cur].member, ps[cur].in_slot});
            seg.cut_edge = ps[cur].out_edge;
            auto it = by_in_edge.find(ps[cur].out_edge);
            if (it == by_in_edge.end()) break;
            cur = it->second;
        }
        seg.entry_edge = ps[i].in_edge;
        seg.component = comp.edge_component.at(seg.entry_edge);
        segments.push_back(std::move(seg));
    }
    for (char u : used)
        if (!u)
            throw OperationError(
                "handle members are not consecutive along their strands");

    // each member must be crossed by two different segments
    std::map<int, int> seen_member;
    for (size_t si = 0; si < segments.size(); ++si)
        for (auto [m, slot] : segments[si].passages) {
            auto [it, inserted] = seen_member.try_emplace(m, static_cast<int>(si));
            if (!inserted && it->second == static_cast<int>(si))
                throw OperationError("handle strand crosses itself");
        }

    // orient segments against segment 0 through shared members
    int k = static_cast<int>(segments.size());
    std::vector<int> align(k, 0);
    align[0] = +1;
    auto member_order = [&](const HandleSegment& s) {
        std::map<int, int> order;
        for (size_t i = 0; i < s.passages.size(); ++i) order[s.passages[i].first] = (int)i;
        return order;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (a == b || align[a] == 0 || align[b] != 0) continue;
                auto oa = member_order(segments[a]);
                auto ob = member_order(segments[b]);
                std::vector<std::pair<int, int>> common;
                for (auto [m, ia] : oa)
                    if (ob.count(m)) common.push_back({ia, ob[m]});
                if (common.size() < 2) continue;
                std::sort(common.begin(), common.end());
                bool incr = true, decr = true;
                for (size_t i = 1; i < common.size(); ++i) {
                    if (common[i].second < common[i - 1].second) incr = false;
                    if (common[i].second > common[i - 1].second) decr = false;
                }
                if (incr == decr)
                    throw OperationError("handle strand orientation is ambiguous");
                align[b] = incr ? align[a] : -align[a];
                progress = true;
            }
    }
    for (int a : align)
        if (a == 0)
            throw OperationError("cannot orient handle strands (disconnected members)");
    for (int i = 0; i < k; ++i) segments[i].align = align[i];

    Handle h;
    h.members = members;
    h.k = k;
    h.segments = std::move(segments);
    return h;
}

} // namespace

Representation from_diagram(const Diagram& d, const Assignment& arc_choice,
                            const std::vector<std::vector<int>>& handle_groups) {
    std::vector<int> virtuals = d.virtual_ids();
    if (arc_choice.size() != virtuals.size())
        throw OperationError("arc choice must cover every virtual crossing");
    std::set<int> covered;
    for (const auto& g : handle_groups)
        for (int m : g)
            if (!covered.insert(m).second)
                throw OperationError("handle groups must be disjoint");
    if (covered != std::set<int>(virtuals.begin(), virtuals.end()))
        throw OperationError("handle groups must partition the virtual crossings");

    ComponentMap comp = d.components();
    std::map<int, OverArc> choice_of;
    for (size_t i = 0; i < virtuals.size(); ++i) choice_of[virtuals[i]] = arc_choice[i];

    std::vector<Handle> handles;
    for (const auto& g : handle_groups) {
        if (g.empty()) throw OperationError("empty handle group");
        if (g.size() == 1)
            handles.push_back(build_singleton_handle(d, g[0], choice_of[g[0]], comp));
        else
            handles.push_back(build_group_handle(d, g, comp));
    }
    return Representation(d, arc_choice, std::move(handles));
}

Diagram forget(const Representation& rep) {
    Diagram out = realize(rep.base(), rep.arc_choice());
    for (const Handle& h : rep.handles()) {
        if (h.p == 1 && h.n == 0) continue;
        if (h.p < 1)
            throw OperationError("cannot render a torus class with p < 1");
        if (h.k == 1 && h.p == 1 && h.n != 0) continue; // single-strand kinks suppressed
        for (const HandleSegment& seg : h.segments)
            if (seg.align != +1)
                throw OperationError("cannot render a handle with opposed strands");
        std::vector<int> cuts;
        for (const HandleSegment& seg : h.segments) cuts.push_back(seg.cut_edge);
        int sign = h.n >= 0 ? +1 : -1;
        long long reps = (h.n >= 0 ? h.n : -h.n) * h.k;
        auto [spliced, exits] =
            detail::splice_braid(out, cuts, h.p * h.k, reps, sign);
        out = std::move(spliced);
    }
    return out;
}

IntersectionPair component_pair(const Representation& rep, int component, int handle) {
    const Handle& h = rep.handle(handle);
    IntersectionPair pair;
    for (const HandleSegment& seg : h.segments) {
        if (seg.component != component) continue;
        pair.p += seg.align * h.p;
        pair.n += seg.align * h.n;
    }
    if (h.base_component == component) pair.n += h.base_passes;
    return pair;
}

IntersectionTable intersection_pairs(const Representation& rep) {
    int n_comp = rep.base().components().count();
    IntersectionTable table(n_comp, std::vector<IntersectionPair>(rep.genus()));
    for (int c = 0; c < n_comp; ++c)
        for (int h = 0; h < rep.genus(); ++h) table[c][h] = component_pair(rep, c, h);
    return table;
}

Representation dehn_twist_meridian(const Representation& rep, int handle, int dir) {
    if (dir != 1 && dir != -1) throw OperationError("twist direction must be +1/-1");
    Handle h = rep.handle(handle);
    h.n += dir * h.p;
    h.twist_word.push_back(dir > 0 ? "M+" : "M-");
    return rep.with_handle(handle, std::move(h));
}

Representation dehn_twist_longitude(const Representation& rep, int handle, int dir) {
    if (dir != 1 && dir != -1) throw OperationError("twist direction must be +1/-1");
    Handle h = rep.handle(handle);
    h.p += dir * h.n;
    h.twist_word.push_back(dir > 0 ? "L+" : "L-");
    return rep.with_handle(handle, std::move(h));
}

KnottingSequenceResult knotting_sequence(const Representation& rep, int handle) {
    int n_comp = rep.base().components().count();
    int component = -1;
    IntersectionPair pair;
    for (int c = 0; c < n_comp; ++c) {
        IntersectionPair p = component_pair(rep, c, handle);
        if (p.p != 0 || p.n != 0) {
            component = c;
            pair = p;
            break;
        }
    }
    if (component < 0)
        throw OperationError("knotting sequence needs a component with nonzero "
                             "intersection pair at the handle");
    // first meridian twist follows the arcs crossing the longitude; the
    // longitude twist follows the meridian arcs (equivalently, both winding
    // counts keep growing); the second meridian twist repeats the first
    int dir_m = pair.n > 0 ? +1 : (pair.n < 0 ? -1 : +1);

    KnottingSequenceResult result{rep, component, {}};
    const Handle& h0 = rep.handle(handle);
    result.class_trace.push_back({h0.p, h0.n});
    result.rep = dehn_twist_meridian(result.rep, handle, dir_m);
    result.class_trace.push_back({result.rep.handle(handle).p, result.rep.handle(handle).n});
    const Handle& h1 = result.rep.handle(handle);
    int dir_l = (h1.p > 0) == (h1.n > 0) ? +1 : -1;
    result.rep = dehn_twist_longitude(result.rep, handle, dir_l);
    result.class_trace.push_back({result.rep.handle(handle).p, result.rep.handle(handle).n});
    result.rep = dehn_twist_meridian(result.rep, handle, dir_m);
    result.class_trace.push_back({result.rep.handle(handle).p, result.rep.handle(handle).n});
    return result;
}

} // namespace vknot
