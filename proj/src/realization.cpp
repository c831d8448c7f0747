#include "vknot/realization.hpp"

#include <omp.h>

#include <algorithm>

namespace vknot {

namespace {

constexpr int A = 0, B = 1, C = 2, D = 3;

Crossing realize_one(const Crossing& cr, bool strand2_in_at_d, OverArc choice) {
    auto [a, b, c, d] = cr.slot;
    if (choice == OverArc::strand2) {
        // keep the under strand at a->c; sign from the b-d direction
        return strand2_in_at_d ? make_classical(-1, a, b, c, d)
                               : make_classical(+1, a, b, c, d);
    }
    // strand 1 over: rotate so the new under strand (b-d) leads
    if (strand2_in_at_d) return make_classical(+1, d, a, b, c);
    return make_classical(-1, b, c, d, a);
}

} // namespace

std::string assignment_str(const Assignment& a) {
    std::string out;
    for (OverArc c : a) out += (c == OverArc::strand1 ? '1' : '2');
    return out;
}

Diagram realize(const Diagram& d, const Assignment& a) {
    std::vector<int> virtuals = d.virtual_ids();
    if (a.size() != virtuals.size())
        throw OperationError("assignment must cover every virtual crossing");
    std::vector<Crossing> out = d.crossings();
    for (size_t i = 0; i < virtuals.size(); ++i) {
        const Crossing& cr = d.crossing(virtuals[i]);
        out[virtuals[i]] = realize_one(cr, cr.strand2_in_at_d, a[i]);
    }
    return Diagram::make(std::move(out), d.free_loops());
}

std::vector<std::pair<Assignment, Diagram>> enumerate_realizations(const Diagram& d) {
    int m = d.virtual_count();
    if (m > kMaxRealizationCrossings)
        throw BoundError("realization bound exceeded: " + std::to_string(m) +
                         " virtual crossings (max " +
                         std::to_string(kMaxRealizationCrossings) + ")");
    std::vector<std::pair<Assignment, Diagram>> out;
    std::uint64_t total = 1ull << m;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        Assignment a(m);
        for (int i = 0; i < m; ++i) {
            // crossing 0 is the most significant digit; strand1 < strand2
            bool bit = (code >> (m - 1 - i)) & 1ull;
            a[i] = bit ? OverArc::strand2 : OverArc::strand1;
        }
        out.emplace_back(a, realize(d, a));
    }
    return out;
}

std::string status_name(TrivialityStatus s) {
    switch (s) {
        case TrivialityStatus::trivial_certified: return "trivial-certified";
        case TrivialityStatus::nontrivial_certified: return "nontrivial-certified";
        case TrivialityStatus::unknown: return "unknown";
    }
    return "?";
}

std::vector<RealizationReport> classify_realizations(const Diagram& d) {
    if (d.crossing_count() > kMaxBracketCrossings)
        throw BoundError("realized diagrams would exceed the state sum bound");
    auto realizations = enumerate_realizations(d);
    std::vector<RealizationReport> reports(realizations.size());
    int total = static_cast<int>(realizations.size());
#pragma omp parallel for schedule(dynamic) if (total > 4)
    for (int i = 0; i < total; ++i) {
        const auto& [assignment, diagram] = realizations[i];
        RealizationReport rep;
        rep.assignment = assignment;
        rep.diagram = diagram;
        SimplifyResult simplified = simplify_with_trace(diagram);
        rep.jones_value = jones(diagram);
        if (simplified.diagram.crossing_count() == 0) {
            rep.status = TrivialityStatus::trivial_certified;
            rep.reduction = simplified.trace;
        } else if (!is_jones_unlink(diagram)) {
            rep.status = TrivialityStatus::nontrivial_certified;
        } else {
            rep.status = TrivialityStatus::unknown;
        }
        reports[i] = std::move(rep);
    }
    return reports;
}

std::optional<Assignment> find_nontrivial_realization(const Diagram& d) {
    for (const RealizationReport& rep : classify_realizations(d))
        if (rep.status == TrivialityStatus::nontrivial_certified) return rep.assignment;
    return std::nullopt;
}

namespace {

// ascending-size, then lexicographic subsets of {0..n-1}
bool next_subset(std::vector<int>& subset, int n) {
    int k = static_cast<int>(subset.size());
    for (int i = k - 1; i >= 0; --i) {
        if (subset[i] < n - (k - i)) {
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<UnknottingBound> unknotting_bound(const Diagram& d, int budget) {
    if (d.virtual_count() > 0)
        throw OperationError("fixed unknotting bound is defined for classical diagrams");
    std::vector<int> classical = d.classical_ids();
    int n = static_cast<int>(classical.size());
    budget = std::min(budget, n);
    for (int k = 0; k <= budget; ++k) {
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i) subset[i] = i;
        bool more = k <= n;
        while (more) {
            Diagram flipped = d;
            for (int i : subset) flipped = switch_crossing(flipped, classical[i]);
            if (simplify(flipped).crossing_count() == 0) {
                UnknottingBound out;
                out.changes = k;
                for (int i : subset) out.witness.push_back(classical[i]);
                return out;
            }
            more = k > 0 && next_subset(subset, n);
        }
    }
    return std::nullopt;
}

std::optional<RealizationUnknotting>
min_unknotting_over_realizations(const Diagram& d, int budget) {
    std::optional<RealizationUnknotting> best;
    for (const auto& [assignment, diagram] : enumerate_realizations(d)) {
        int cap = best ? best->changes - 1 : budget;
        if (cap < 0) break;
        std::optional<UnknottingBound> bound = unknotting_bound(diagram, cap);
        if (!bound) continue;
        RealizationUnknotting ru;
        ru.assignment = assignment;
        ru.changes = bound->changes;
        ru.witness = bound->witness;
        if (!best || ru.changes < best->changes) best = std::move(ru);
    }
    return best;
}

Diagram untie_by_virtualization(const Diagram& d, const std::set<int>& crossings) {
    Diagram out = d;
    for (int cr : crossings) {
        const Crossing& c = out.crossing(cr);
        if (!c.is_classical())
            throw OperationError("untying sites must be classical crossings");
        int under_in = c.slot[A];
        int over_in = c.sign > 0 ? c.slot[B] : c.slot[D];
        int over_out = c.sign > 0 ? c.slot[D] : c.slot[B];
        int e2 = over_in != under_in ? over_in : over_out;
        out = virtual_r2_insert(out, under_in, e2).diagram;
    }
    return out;
}

} // namespace vknot
