#pragma once

#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/realization.hpp"

namespace vknot {

// Open braid-pattern tangle on k*p strands realizing the (p,n) torus class,
// k-cabled: word (s1 ... s_{kp-1})^(k*n), uniform crossing sign = sign(n).
// Strand j enters at bottom[j] and leaves at top[j] for j < k; the remaining
// k*p - k strand ends are closed around (top position j joined to bottom
// position j for j >= k).
struct TorusTangle {
    std::vector<Crossing> crossings;
    std::vector<int> bottom; // k open entry labels
    std::vector<int> top;    // k open exit labels
};
TorusTangle torus_tangle(int p, long long n, int k, int first_label = 1);

// Plain closure of the open ends (top[j] joined to bottom[j]); for k = 1 this
// closes the (p,n) pattern into the torus knot/link diagram.
Diagram close_tangle(const TorusTangle& t);

// One strand passage through a handle site.
struct HandleSegment {
    std::vector<std::pair<int, int>> passages; // (member crossing id, incoming slot)
    int entry_edge = -1;
    int cut_edge = -1; // outgoing edge after the last passage; splice point
    int align = +1;    // orientation vs segment 0
    int component = -1;
};

struct Handle {
    std::vector<int> members; // virtual crossing ids realized by this handle
    int k = 1;                // through-strand count
    std::vector<HandleSegment> segments;
    // singleton handles keep the partner arc in the base surface; it crosses
    // the longitude once per passage
    int base_component = -1;
    int base_passes = 0;
    long long p = 1; // torus class, initially (1, 0)
    long long n = 0;
    std::vector<std::string> twist_word; // M+ M- L+ L-
};

struct IntersectionPair {
    long long p = 0;
    long long n = 0;
    bool operator==(const IntersectionPair&) const = default;
};
// rows: components of the base diagram; columns: handles
using IntersectionTable = std::vector<std::vector<IntersectionPair>>;

// Surface representation (F, L): base diagram plus one handle per group of
// virtual crossings; genus = handle count. forget() with no twists equals
// realize(base, arc_choice).
class Representation {
public:
    Representation(Diagram base, Assignment arc_choice, std::vector<Handle> handles)
        : base_(std::move(base)), arc_choice_(std::move(arc_choice)),
          handles_(std::move(handles)) {}

    const Diagram& base() const { return base_; }
    const Assignment& arc_choice() const { return arc_choice_; }
    const std::vector<Handle>& handles() const { return handles_; }
    const Handle& handle(int i) const { return handles_.at(i); }
    int genus() const { return static_cast<int>(handles_.size()); }

    Representation with_handle(int i, Handle h) const;

private:
    Diagram base_;
    Assignment arc_choice_;
    std::vector<Handle> handles_;
};

// handle_groups must partition the virtual crossing ids. A singleton group
// puts the chosen arc in the handle (k = 1) over its partner arc. A larger
// group needs its members consecutive along every strand involved (the
// virtual-R2-pair pattern); all strands through it become through-strands.
Representation from_diagram(const Diagram& d, const Assignment& arc_choice,
                            const std::vector<std::vector<int>>& handle_groups);

// Realizes the base per arc_choice, then splices each handle's k-cabled
// (p,n) torus tangle at its cut edges. Class (1,0) renders as the identity;
// the R1 kinks a twist would add to a single strand are suppressed.
Diagram forget(const Representation& rep);

IntersectionTable intersection_pairs(const Representation& rep);
IntersectionPair component_pair(const Representation& rep, int component, int handle);

Representation dehn_twist_meridian(const Representation& rep, int handle, int dir);
Representation dehn_twist_longitude(const Representation& rep, int handle, int dir);

// Meridian-longitude-meridian sequence with directions chosen from the
// dominant orientations of the arcs crossing the longitude resp. meridian;
// requires some component with nonzero intersection pair at the handle.
struct KnottingSequenceResult {
    Representation rep;
    int component = -1;
    std::vector<std::pair<long long, long long>> class_trace; // (p,n) incl. start
};
KnottingSequenceResult knotting_sequence(const Representation& rep, int handle);

} // namespace vknot
