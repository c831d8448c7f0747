#include "vknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace vknot {

namespace {

// slot indices
constexpr int A = 0, B = 1, C = 2, D = 3;

} // namespace

const Crossing& Diagram::crossing(int id) const {
    if (id < 0 || id >= crossing_count())
        throw OperationError("crossing id out of range: " + std::to_string(id));
    return crossings_[id];
}

const EdgeRecord& Diagram::edge(int label) const {
    auto it = edges_.find(label);
    if (it == edges_.end())
        throw OperationError("no such edge label: " + std::to_string(label));
    return it->second;
}

int Diagram::max_label() const {
    return edges_.empty() ? 0 : edges_.rbegin()->first;
}

bool Diagram::slot_is_incoming(int crossing, int slot) const {
    const Crossing& cr = this->crossing(crossing);
    if (cr.is_classical()) {
        if (cr.sign > 0) return slot == A || slot == B;
        return slot == A || slot == D;
    }
    if (slot == A) return true;
    if (slot == C) return false;
    return cr.strand2_in_at_d ? slot == D : slot == B;
}

int Diagram::strand_out_slot(int crossing, int in_slot) const {
    const Crossing& cr = this->crossing(crossing);
    if (in_slot == A) return C;
    if (cr.is_classical()) {
        if (cr.sign > 0) {
            if (in_slot == B) return D;
        } else {
            if (in_slot == D) return B;
        }
    } else {
        if (in_slot == B && !cr.strand2_in_at_d) return D;
        if (in_slot == D && cr.strand2_in_at_d) return B;
    }
    throw OperationError("slot is not incoming");
}

std::array<std::pair<int, int>, 2> Diagram::strands(int crossing) const {
    const Crossing& cr = this->crossing(crossing);
    std::pair<int, int> s1{A, C};
    std::pair<int, int> s2;
    if (cr.is_classical()) {
        s2 = cr.sign > 0 ? std::pair{B, D} : std::pair{D, B};
    } else {
        s2 = cr.strand2_in_at_d ? std::pair{D, B} : std::pair{B, D};
    }
    return {s1, s2};
}

int Diagram::successor(int label) const {
    const EdgeRecord& e = edge(label);
    int out = strand_out_slot(e.head.crossing, e.head.slot);
    return crossings_[e.head.crossing].slot[out];
}

void Diagram::validate_and_index() {
    classical_count_ = 0;
    edges_.clear();
    if (free_loops_ < 0) throw ValidationError("negative free loop count");
    if (crossings_.empty() && free_loops_ == 0)
        throw ValidationError("empty diagram");

    std::map<int, std::vector<EdgeEnd>> occ;
    for (int i = 0; i < crossing_count(); ++i) {
        Crossing& cr = crossings_[i];
        if (cr.is_classical()) {
            ++classical_count_;
            if (cr.sign != 1 && cr.sign != -1)
                throw ValidationError("classical crossing must have sign +1 or -1");
        } else {
            cr.sign = 0;
        }
        for (int s = 0; s < 4; ++s) {
            if (cr.slot[s] <= 0)
                throw ValidationError("edge labels must be positive integers");
            occ[cr.slot[s]].push_back({i, s});
        }
    }
    for (const auto& [label, ends] : occ)
        if (ends.size() != 2)
            throw ValidationError("edge label " + std::to_string(label) + " appears " +
                                  std::to_string(ends.size()) + " times (want 2)");

    // Resolve orientation. Classical slot roles are fixed by the sign token;
    // virtual a->c is fixed and the b-d strand direction is propagated from
    // the neighbours, with a deterministic choice for isolated cycles.
    // role: 0 unknown, 1 incoming, 2 outgoing
    std::vector<std::array<int, 4>> role(crossing_count(), {0, 0, 0, 0});
    std::vector<EdgeEnd> worklist;
    auto assign = [&](int i, int s, int r) {
        if (role[i][s] == r) return;
        if (role[i][s] != 0)
            throw ValidationError("edge " + std::to_string(crossings_[i].slot[s]) +
                                  " has inconsistent orientation");
        role[i][s] = r;
        worklist.push_back({i, s});
    };
    for (int i = 0; i < crossing_count(); ++i) {
        const Crossing& cr = crossings_[i];
        assign(i, A, 1);
        assign(i, C, 2);
        if (cr.is_classical()) {
            assign(i, B, cr.sign > 0 ? 1 : 2);
            assign(i, D, cr.sign > 0 ? 2 : 1);
        }
    }
    size_t head = 0;
    auto drain = [&] {
        while (head < worklist.size()) {
            auto [i, s] = worklist[head++];
            int r = role[i][s];
            if (crossings_[i].is_virtual() && (s == B || s == D)) {
                int partner = s == B ? D : B;
                assign(i, partner, r == 1 ? 2 : 1);
                crossings_[i].strand2_in_at_d = role[i][D] == 1;
            }
            int label = crossings_[i].slot[s];
            for (const EdgeEnd& end : occ[label]) {
                if (end.crossing == i && end.slot == s) continue;
                assign(end.crossing, end.slot, r == 1 ? 2 : 1);
            }
        }
    };
    drain();
    // deterministic direction for virtual strands seen only by other virtuals
    for (int i = 0; i < crossing_count(); ++i) {
        if (crossings_[i].is_virtual() && role[i][B] == 0) {
            assign(i, B, 1);
            drain();
        }
    }

    for (const auto& [label, ends] : occ) {
        EdgeRecord rec;
        int ins = 0, outs = 0;
        for (const EdgeEnd& end : ends) {
            if (role[end.crossing][end.slot] == 1) {
                rec.head = end;
                ++ins;
            } else if (role[end.crossing][end.slot] == 2) {
                rec.tail = end;
                ++outs;
            }
        }
        if (ins != 1 || outs != 1)
            throw ValidationError("edge " + std::to_string(label) +
                                  " is not traversed once in each direction");
        edges_[label] = rec;
    }
}

Diagram Diagram::make(std::vector<Crossing> crossings, int free_loops) {
    Diagram d;
    d.crossings_ = std::move(crossings);
    d.free_loops_ = free_loops;
    d.validate_and_index();
    return d;
}

std::vector<int> Diagram::classical_ids() const {
    std::vector<int> out;
    for (int i = 0; i < crossing_count(); ++i)
        if (crossings_[i].is_classical()) out.push_back(i);
    return out;
}

std::vector<int> Diagram::virtual_ids() const {
    std::vector<int> out;
    for (int i = 0; i < crossing_count(); ++i)
        if (crossings_[i].is_virtual()) out.push_back(i);
    return out;
}

ComponentMap Diagram::components() const {
    ComponentMap map;
    map.free_loops = free_loops_;
    std::set<int> left;
    for (const auto& [label, rec] : edges_) left.insert(label);
    while (!left.empty()) {
        int start = *left.begin();
        std::vector<int> cycle;
        int cur = start;
        do {
            cycle.push_back(cur);
            left.erase(cur);
            cur = successor(cur);
        } while (cur != start);
        int idx = static_cast<int>(map.cycles.size());
        for (int e : cycle) map.edge_component[e] = idx;
        map.cycles.push_back(std::move(cycle));
    }
    return map;
}

bool Diagram::operator==(const Diagram& rhs) const {
    if (free_loops_ != rhs.free_loops_) return false;
    if (crossings_.size() != rhs.crossings_.size()) return false;
    for (size_t i = 0; i < crossings_.size(); ++i) {
        const Crossing& a = crossings_[i];
        const Crossing& b = rhs.crossings_[i];
        if (a.kind != b.kind || a.sign != b.sign || a.slot != b.slot) return false;
    }
    return true;
}

// ---- crossing-level operations ----

int crossing_sign(const Diagram& d, int crossing) {
    const Crossing& cr = d.crossing(crossing);
    if (cr.is_virtual())
        throw OperationError("sign undefined for virtual crossing");
    return cr.sign;
}

Diagram switch_crossing(const Diagram& d, int crossing) {
    const Crossing& cr = d.crossing(crossing);
    if (cr.is_virtual()) throw OperationError("cannot switch a virtual crossing");
    auto [a, b, c, dd] = cr.slot;
    std::vector<Crossing> out = d.crossings();
    // new under-strand = old over-strand; rotation order is preserved
    out[crossing] = cr.sign > 0 ? make_classical(-1, b, c, dd, a)
                                : make_classical(+1, dd, a, b, c);
    return Diagram::make(std::move(out), d.free_loops());
}

Diagram virtualize_crossing(const Diagram& d, int crossing) {
    const Crossing& cr = d.crossing(crossing);
    if (cr.is_virtual()) throw OperationError("crossing is already virtual");
    std::vector<Crossing> out = d.crossings();
    out[crossing] = make_virtual(cr.slot[0], cr.slot[1], cr.slot[2], cr.slot[3]);
    return Diagram::make(std::move(out), d.free_loops());
}

Diagram mirror(const Diagram& d) {
    std::vector<Crossing> out;
    out.reserve(d.crossings().size());
    for (const Crossing& cr : d.crossings()) {
        if (cr.is_virtual()) {
            out.push_back(cr);
            continue;
        }
        auto [a, b, c, dd] = cr.slot;
        out.push_back(cr.sign > 0 ? make_classical(-1, b, c, dd, a)
                                  : make_classical(+1, dd, a, b, c));
    }
    return Diagram::make(std::move(out), d.free_loops());
}

namespace {

// Shared splice machinery: mutable edge table keyed by label, with generic
// "remove crossing, reconnecting via the given in->out slot pairing".
struct Surgeon {
    std::vector<Crossing> crossings;
    int free_loops;
    std::map<int, EdgeRecord> edges;
    std::set<int> dead;

    explicit Surgeon(const Diagram& d)
        : crossings(d.crossings()), free_loops(d.free_loops()), edges(d.edges()) {}

    int& slot_label(const EdgeEnd& end) { return crossings[end.crossing].slot[end.slot]; }

    // joins the edge arriving at (cr, in_slot) to the edge leaving (cr, out_slot)
    void splice_through(int cr, int in_slot, int out_slot) {
        int in_label = crossings[cr].slot[in_slot];
        int out_label = crossings[cr].slot[out_slot];
        if (in_label == out_label) {
            // closed loop through this crossing only
            edges.erase(in_label);
            ++free_loops;
            return;
        }
        EdgeRecord& in_rec = edges.at(in_label);
        EdgeRecord& out_rec = edges.at(out_label);
        in_rec.head = out_rec.head;
        if (in_rec.head.crossing >= 0) slot_label(in_rec.head) = in_label;
        edges.erase(out_label);
    }

    void remove_crossing(int cr, const std::array<std::pair<int, int>, 2>& pairing) {
        for (const auto& [in_slot, out_slot] : pairing)
            splice_through(cr, in_slot, out_slot);
        dead.insert(cr);
    }

    Diagram finish() const {
        std::vector<Crossing> live;
        live.reserve(crossings.size());
        for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
            if (!dead.count(i)) live.push_back(crossings[i]);
        return Diagram::make(std::move(live), free_loops);
    }
};

} // namespace

Diagram smooth_oriented(const Diagram& d, int crossing) {
    const Crossing& cr = d.crossing(crossing);
    if (cr.is_virtual()) throw OperationError("cannot smooth a virtual crossing");
    Surgeon s(d);
    // the orientation-coherent reconnection: beta arcs {a-d, b-c} at a
    // positive crossing, alpha arcs {a-b, c-d} at a negative one
    if (cr.sign > 0)
        s.remove_crossing(crossing, {std::pair{A, D}, std::pair{B, C}});
    else
        s.remove_crossing(crossing, {std::pair{A, B}, std::pair{D, C}});
    return s.finish();
}

Diagram canonicalize(const Diagram& d) {
    ComponentMap comp = d.components();
    // order components by smallest edge label; within, start at that edge
    std::vector<std::vector<int>> cycles = comp.cycles;
    for (auto& cyc : cycles) {
        auto it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), it, cyc.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    std::map<int, int> relabel;
    int next = 1;
    for (const auto& cyc : cycles)
        for (int e : cyc) relabel[e] = next++;

    std::vector<Crossing> out = d.crossings();
    for (Crossing& cr : out)
        for (int s = 0; s < 4; ++s) cr.slot[s] = relabel.at(cr.slot[s]);

    // stable crossing order: sort by (smallest slot label, slot tuple)
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        int mx = *std::min_element(x.slot.begin(), x.slot.end());
        int my = *std::min_element(y.slot.begin(), y.slot.end());
        if (mx != my) return mx < my;
        return x.slot < y.slot;
    });
    return Diagram::make(std::move(out), d.free_loops());
}

// ---- text format ----

namespace {

struct TokenCursor {
    std::string text;
    size_t i = 0;

    void skip() {
        for (;;) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i < text.size() && text[i] == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
                continue;
            }
            break;
        }
    }
    bool done() {
        skip();
        return i >= text.size();
    }
};

std::array<int, 4> parse_slots(TokenCursor& c, const std::string& what) {
    c.skip();
    if (c.i >= c.text.size() || c.text[c.i] != '(')
        throw ParseError("expected '(' after " + what);
    ++c.i;
    std::array<int, 4> out{};
    for (int k = 0; k < 4; ++k) {
        c.skip();
        size_t start = c.i;
        while (c.i < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.i])))
            ++c.i;
        if (c.i == start) throw ParseError("expected edge label in " + what);
        out[k] = std::stoi(c.text.substr(start, c.i - start));
        c.skip();
        char want = k < 3 ? ',' : ')';
        if (c.i >= c.text.size() || c.text[c.i] != want)
            throw ParseError(std::string("expected '") + want + "' in " + what);
        ++c.i;
    }
    return out;
}

} // namespace

Diagram parse_diagram(const std::string& text) {
    TokenCursor c{text};
    std::vector<Crossing> crossings;
    int free_loops = 0;
    while (!c.done()) {
        char ch = c.text[c.i];
        if (ch == 'U') {
            ++c.i;
            ++free_loops;
        } else if (ch == 'X') {
            ++c.i;
            if (c.i >= c.text.size() || (c.text[c.i] != '+' && c.text[c.i] != '-'))
                throw ParseError("expected '+' or '-' after 'X'");
            int sign = c.text[c.i] == '+' ? +1 : -1;
            ++c.i;
            auto s = parse_slots(c, "classical crossing");
            crossings.push_back(make_classical(sign, s[0], s[1], s[2], s[3]));
        } else if (ch == 'V') {
            ++c.i;
            auto s = parse_slots(c, "virtual crossing");
            crossings.push_back(make_virtual(s[0], s[1], s[2], s[3]));
        } else {
            throw ParseError(std::string("unexpected character '") + ch +
                             "' at offset " + std::to_string(c.i));
        }
    }
    try {
        return Diagram::make(std::move(crossings), free_loops);
    } catch (const ValidationError&) {
        throw;
    }
}

std::string render_diagram(const Diagram& d) {
    std::ostringstream os;
    for (int i = 0; i < d.free_loops(); ++i) os << "U\n";

    struct Line {
        std::array<int, 4> slot;
        CrossingKind kind;
        int sign;
    };
    std::vector<Line> lines;
    for (int i = 0; i < d.crossing_count(); ++i) {
        const Crossing& cr = d.crossing(i);
        std::array<int, 4> t = cr.slot;
        if (cr.is_virtual()) {
            // rotate so the first slot is incoming; prefer the smaller tuple
            std::array<int, 4> alt = cr.strand2_in_at_d
                                         ? std::array{t[3], t[0], t[1], t[2]}
                                         : std::array{t[1], t[2], t[3], t[0]};
            if (alt < t) t = alt;
        }
        lines.push_back({t, cr.kind, cr.sign});
    }
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        int mx = *std::min_element(x.slot.begin(), x.slot.end());
        int my = *std::min_element(y.slot.begin(), y.slot.end());
        if (mx != my) return mx < my;
        return x.slot < y.slot;
    });
    for (const Line& l : lines) {
        if (l.kind == CrossingKind::virtual_)
            os << "V(";
        else
            os << (l.sign > 0 ? "X+(" : "X-(");
        os << l.slot[0] << "," << l.slot[1] << "," << l.slot[2] << "," << l.slot[3] << ")\n";
    }
    return os.str();
}

} // namespace vknot
