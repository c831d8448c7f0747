#pragma once

#include <string>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

enum class MoveKind : int { r1, r2, vr1, vr2, r3, vr3, vr4 };

std::string move_kind_name(MoveKind k);

// A concrete applicable rewrite site. R1/VR1: one crossing + its loop edge.
// R2/VR2: two crossings + the two shared edges (first edge under at both for
// R2). Triangle moves: the three crossings and the three face edges.
struct MoveSite {
    MoveKind kind;
    std::vector<int> crossings;
    std::vector<int> edges;
    int kink_sign = 0; // R1 only: sign of the removed crossing
    bool reduces_crossings() const {
        return kind == MoveKind::r1 || kind == MoveKind::r2 ||
               kind == MoveKind::vr1 || kind == MoveKind::vr2;
    }
};

// Exhaustive scan for applicable sites: all reducing R1/R2/VR1/VR2 patterns
// plus the crossing-count-preserving triangle moves R3/VR3/VR4.
std::vector<MoveSite> find_reductions(const Diagram& d);

Diagram apply_move(const Diagram& d, const MoveSite& site);

// Greedy monotone simplification: repeatedly applies the first reducing site
// (smallest crossing id, then kind order) until none applies. Edges are
// canonically renumbered after every step; the result is a fixed point.
Diagram simplify(const Diagram& d);
struct SimplifyResult {
    Diagram diagram;
    std::vector<MoveSite> trace; // sites in application order, replayable
};
SimplifyResult simplify_with_trace(const Diagram& d);

// Inserts a virtual Reidemeister II pair between edges e1 and e2 (distinct;
// face adjacency is asserted by the caller). Both strands pass the first new
// crossing, then the second. Returns the new diagram plus the ids of the two
// new crossings and the labels of the outgoing half-edges past the pair.
struct VirtualR2Insertion {
    Diagram diagram;
    std::array<int, 2> new_crossings;
    std::array<int, 2> exit_edges; // past-the-pair halves of e1, e2
};
VirtualR2Insertion virtual_r2_insert(const Diagram& d, int e1, int e2);

// Full twist on k coherently traversed strands: cuts each listed edge and
// splices in the braid (s1 ... s_{k-1})^(k*turns) with every crossing of the
// given sign; k(k-1)*turns crossings total, k = 1 inserts nothing.
struct TwistSpec {
    std::vector<int> edges; // pairwise distinct, strand order = braid order
    int sign = +1;
    int full_turns = 1;
};
struct TwistInsertion {
    Diagram diagram;
    std::vector<int> exit_edges; // post-twist halves, per input edge
};
TwistInsertion full_twist_insert(const Diagram& d, const TwistSpec& spec);

} // namespace vknot
