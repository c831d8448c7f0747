#pragma once

// Internal braid-pattern builders shared by the move rewrites and the
// surface-representation rendering. Not installed.

#include <vector>

#include "vknot/diagram.hpp"

namespace vknot::detail {

struct BraidBuild {
    std::vector<Crossing> crossings; // fresh labels only
    std::vector<int> bottom;         // entry label per position
    std::vector<int> top;            // exit label per position (post closure renames)
    int next_label;                  // first unused label afterwards
};

// (s1 s2 ... s_{m-1})^reps on m parallel strands, every crossing of the given
// sign; positions j >= open_k are closed around (top joined to bottom).
// Entry/exit labels for the open strands are bottom[j] / top[j], j < open_k.
BraidBuild build_torus_braid(int m, long long reps, int sign, int open_k,
                             int first_label);

// Cuts each listed edge of `d` and splices the open braid strands through the
// cuts (strand j rides cut edge j). Returns the new diagram and the exit half
// labels, one per cut edge.
std::pair<Diagram, std::vector<int>> splice_braid(const Diagram& d,
                                                  const std::vector<int>& cut_edges,
                                                  int m, long long reps, int sign);

} // namespace vknot::detail
