#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

enum class CrossingKind : std::uint8_t { classical, virtual_ };

// One 4-valent vertex of the combinatorial map. Slots (a,b,c,d) are stored in
// rotation order. For a classical crossing the under-strand enters at a and
// leaves at c; the over-strand occupies b,d and runs b->d when sign = +1,
// d->b when sign = -1. For a virtual crossing the strands are a->c and b<->d
// (direction of the second strand is resolved during validation).
struct Crossing {
    CrossingKind kind = CrossingKind::classical;
    int sign = 0;                 // +1 / -1 classical, 0 virtual
    std::array<int, 4> slot{};    // edge labels at (a,b,c,d)
    bool strand2_in_at_d = false; // virtual only: the b-d strand runs d->b

    bool is_classical() const { return kind == CrossingKind::classical; }
    bool is_virtual() const { return kind == CrossingKind::virtual_; }
};

inline Crossing make_classical(int sign, int a, int b, int c, int d) {
    return Crossing{CrossingKind::classical, sign, {a, b, c, d}, false};
}
inline Crossing make_virtual(int a, int b, int c, int d) {
    return Crossing{CrossingKind::virtual_, 0, {a, b, c, d}, false};
}

// Location of one edge end.
struct EdgeEnd {
    int crossing = -1;
    int slot = -1;
    bool operator==(const EdgeEnd&) const = default;
};

struct EdgeRecord {
    EdgeEnd tail; // outgoing slot
    EdgeEnd head; // incoming slot
};

struct ComponentMap {
    // component index per edge label, 0-based; edge-cycle components first
    // (ordered by smallest edge label), then one component per free loop
    std::map<int, int> edge_component;
    std::vector<std::vector<int>> cycles; // edge labels in traversal order
    int free_loops = 0;
    int count() const { return static_cast<int>(cycles.size()) + free_loops; }
};

// Immutable virtual link diagram: validated extended PD data plus the derived
// edge table and orientation resolution.
class Diagram {
public:
    Diagram() = default;

    // Validates and finishes construction; throws ValidationError.
    static Diagram make(std::vector<Crossing> crossings, int free_loops);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int id) const;
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int classical_count() const { return classical_count_; }
    int virtual_count() const { return crossing_count() - classical_count_; }
    int free_loops() const { return free_loops_; }
    bool empty() const { return crossings_.empty() && free_loops_ == 0; }

    const std::map<int, EdgeRecord>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeRecord& edge(int label) const;
    int max_label() const;
    // edge following `label` along its oriented component
    int successor(int label) const;

    // Indices of classical / virtual crossings in id order.
    std::vector<int> classical_ids() const;
    std::vector<int> virtual_ids() const;

    // slot roles
    bool slot_is_incoming(int crossing, int slot) const;
    // incoming slot -> outgoing slot of the same strand
    int strand_out_slot(int crossing, int in_slot) const;
    // the two strands at a crossing as (incoming slot, outgoing slot) pairs,
    // strand 0 = the a->c strand
    std::array<std::pair<int, int>, 2> strands(int crossing) const;

    ComponentMap components() const;

    bool operator==(const Diagram& rhs) const;

private:
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    int classical_count_ = 0;
    std::map<int, EdgeRecord> edges_;

    void validate_and_index();
};

// ---- operations ----

int crossing_sign(const Diagram& d, int crossing);
Diagram switch_crossing(const Diagram& d, int crossing);
Diagram virtualize_crossing(const Diagram& d, int crossing);
Diagram smooth_oriented(const Diagram& d, int crossing);
Diagram mirror(const Diagram& d);

// Renumbers edges 1..E consecutively along components; components ordered by
// their smallest original label, traversal starting at that edge.
Diagram canonicalize(const Diagram& d);

// ---- .vkd text ----

Diagram parse_diagram(const std::string& text);
// Canonical rendering: U lines first, then one crossing per line sorted by
// smallest slot label (virtual tuples rotated to their lexicographically
// smallest valid start). parse(render(d)) == d.
std::string render_diagram(const Diagram& d);

} // namespace vknot
