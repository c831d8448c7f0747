#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {

inline constexpr int kMaxRealizationCrossings = 20;

// Over/under choice at one virtual crossing.
enum class OverArc : std::uint8_t {
    strand1, // the a->c strand goes over
    strand2, // the b-d strand goes over
};

// One choice per virtual crossing, in crossing-id order.
// Lexicographic order: strand1 < strand2, earlier crossings more significant.
using Assignment = std::vector<OverArc>;

std::string assignment_str(const Assignment& a);

Diagram realize(const Diagram& d, const Assignment& a);

std::vector<std::pair<Assignment, Diagram>> enumerate_realizations(const Diagram& d);

enum class TrivialityStatus { trivial_certified, nontrivial_certified, unknown };
std::string status_name(TrivialityStatus s);

struct RealizationReport {
    Assignment assignment;
    Diagram diagram;
    TrivialityStatus status;
    std::vector<MoveSite> reduction; // trivial certificate: replayable trace
    LaurentPoly jones_value;         // always computed; the nontrivial certificate
};

std::vector<RealizationReport> classify_realizations(const Diagram& d);
std::optional<Assignment> find_nontrivial_realization(const Diagram& d);

// Smallest k <= budget with a witness subset of classical crossings whose
// switching lets simplify() reach the crossing-free unlink. Subsets are tried
// by ascending size, then lexicographically.
struct UnknottingBound {
    int changes = 0;
    std::vector<int> witness;
};
std::optional<UnknottingBound> unknotting_bound(const Diagram& d, int budget);

struct RealizationUnknotting {
    Assignment assignment;
    int changes = 0;
    std::vector<int> witness;
};
std::optional<RealizationUnknotting>
min_unknotting_over_realizations(const Diagram& d, int budget);

// One virtual Reidemeister II insertion adjacent to each listed classical
// crossing (on its incoming under/over edges); the result has an assignment
// of the new virtual crossings realizing each crossing change up to R2.
Diagram untie_by_virtualization(const Diagram& d, const std::set<int>& crossings);

} // namespace vknot
