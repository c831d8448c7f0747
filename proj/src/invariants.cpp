#include "vknot/invariants.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace vknot {

namespace {

constexpr int A = 0, B = 1, C = 2, D = 3;

// Flat union-find over the 4n slot endpoints of one diagram.
struct LoopCounter {
    // static wiring: for each endpoint, the partner endpoint of the same edge
    std::vector<int> edge_partner;
    int n_endpoints;

    explicit LoopCounter(const Diagram& d) {
        n_endpoints = 4 * d.crossing_count();
        edge_partner.assign(n_endpoints, -1);
        for (const auto& [label, rec] : d.edges()) {
            int u = rec.tail.crossing * 4 + rec.tail.slot;
            int v = rec.head.crossing * 4 + rec.head.slot;
            edge_partner[u] = v;
            edge_partner[v] = u;
        }
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

int count_loops(const Diagram& d, const LoopCounter& lc,
                const std::vector<int>& classical, std::uint32_t mask) {
    UnionFind uf(lc.n_endpoints);
    int merges = 0;
    for (int e = 0; e < lc.n_endpoints; ++e)
        if (lc.edge_partner[e] > e && uf.unite(e, lc.edge_partner[e])) ++merges;
    auto arc = [&](int cr, int s1, int s2) {
        if (uf.unite(cr * 4 + s1, cr * 4 + s2)) ++merges;
    };
    for (size_t i = 0; i < classical.size(); ++i) {
        int cr = classical[i];
        if (mask >> i & 1u) { // beta: a-d, b-c
            arc(cr, A, D);
            arc(cr, B, C);
        } else { // alpha: a-b, c-d
            arc(cr, A, B);
            arc(cr, C, D);
        }
    }
    for (int i = 0; i < d.crossing_count(); ++i) {
        if (d.crossing(i).is_virtual()) {
            arc(i, A, C);
            arc(i, B, D);
        }
    }
    // endpoints form disjoint cycles; components = endpoints - merges
    return lc.n_endpoints - merges;
}

LaurentPoly state_sum_range(const Diagram& d, const LoopCounter& lc,
                            const std::vector<int>& classical,
                            const std::vector<LaurentPoly>& d_pow,
                            std::uint64_t lo, std::uint64_t hi) {
    LaurentPoly acc;
    int n = static_cast<int>(classical.size());
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        int beta = std::popcount(static_cast<std::uint32_t>(mask));
        int loops = count_loops(d, lc, classical, static_cast<std::uint32_t>(mask)) +
                    d.free_loops();
        acc += LaurentPoly::term(2 * beta - n, 1) * d_pow[loops - 1];
    }
    return acc;
}

void check_bracket_bound(const Diagram& d) {
    if (d.classical_count() > kMaxBracketCrossings)
        throw BoundError("state sum bound exceeded: " +
                         std::to_string(d.classical_count()) + " classical crossings (max " +
                         std::to_string(kMaxBracketCrossings) + ")");
}

std::vector<LaurentPoly> loop_powers(const Diagram& d) {
    int max_loops = 2 * d.crossing_count() + d.free_loops() + 1;
    std::vector<LaurentPoly> d_pow(max_loops + 1);
    d_pow[0] = LaurentPoly::one();
    for (int i = 1; i <= max_loops; ++i) d_pow[i] = d_pow[i - 1] * LaurentPoly::loop_value();
    return d_pow;
}

} // namespace

State state_of(const Diagram& d, std::uint32_t mask) {
    check_bracket_bound(d);
    std::vector<int> classical = d.classical_ids();
    if (classical.size() < 32 && (mask >> classical.size()) != 0)
        throw OperationError("state mask has bits beyond the classical crossings");
    LoopCounter lc(d);
    State s;
    s.mask = mask;
    s.beta = std::popcount(mask);
    s.alpha = static_cast<int>(classical.size()) - s.beta;
    s.loops = count_loops(d, lc, classical, mask) + d.free_loops();
    return s;
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const Crossing& cr : d.crossings())
        if (cr.is_classical()) w += cr.sign;
    return w;
}

int linking_number(const Diagram& d, int comp_i, int comp_j) {
    if (comp_i == comp_j) throw OperationError("self-linking undefined");
    ComponentMap comp = d.components();
    int n = comp.count();
    if (comp_i < 0 || comp_i >= n || comp_j < 0 || comp_j >= n)
        throw OperationError("component index out of range");
    int lk = 0;
    for (int id = 0; id < d.crossing_count(); ++id) {
        const Crossing& cr = d.crossing(id);
        if (!cr.is_classical()) continue;
        int under = comp.edge_component.at(cr.slot[A]);
        int over = comp.edge_component.at(cr.slot[B]);
        if ((under == comp_i && over == comp_j) || (under == comp_j && over == comp_i))
            lk += cr.sign;
    }
    return lk;
}

std::vector<std::vector<int>> linking_matrix(const Diagram& d) {
    int n = d.components().count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = linking_number(d, i, j);
    return m;
}

LaurentPoly bracket_serial(const Diagram& d) {
    check_bracket_bound(d);
    std::vector<int> classical = d.classical_ids();
    if (classical.empty() && d.crossing_count() == 0) {
        // crossing-free diagram: single empty state with free_loops curves
        return LaurentPoly::loop_value().pow(
            static_cast<unsigned>(d.free_loops() - 1));
    }
    LoopCounter lc(d);
    std::vector<LaurentPoly> d_pow = loop_powers(d);
    std::uint64_t total = 1ull << classical.size();
    return state_sum_range(d, lc, classical, d_pow, 0, total);
}

LaurentPoly bracket_parallel(const Diagram& d) {
    check_bracket_bound(d);
    std::vector<int> classical = d.classical_ids();
    if (classical.empty()) return bracket_serial(d);
    LoopCounter lc(d);
    std::vector<LaurentPoly> d_pow = loop_powers(d);
    std::uint64_t total = 1ull << classical.size();

    int threads = omp_get_max_threads();
    std::vector<LaurentPoly> partial(threads);
#pragma omp parallel num_threads(threads)
    {
        int t = omp_get_thread_num();
        int nt = omp_get_num_threads();
        std::uint64_t chunk = (total + nt - 1) / nt;
        std::uint64_t lo = std::min<std::uint64_t>(total, chunk * t);
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        partial[t] = state_sum_range(d, lc, classical, d_pow, lo, hi);
    }
    // exact integer sums are order-independent; merge in thread order anyway
    LaurentPoly out;
    for (const LaurentPoly& p : partial) out += p;
    return out;
}

LaurentPoly bracket(const Diagram& d) {
    if (d.classical_count() >= 10 && omp_get_max_threads() > 1)
        return bracket_parallel(d);
    return bracket_serial(d);
}

LaurentPoly jones(const Diagram& d) {
    return LaurentPoly::neg_a_cubed_pow(-writhe(d)) * bracket(d);
}

LaurentPoly skein_residual(const Diagram& d, int crossing) {
    const Crossing& cr = d.crossing(crossing);
    if (cr.is_virtual())
        throw OperationError("skein residual needs a classical crossing");
    if (cr.sign != +1)
        throw OperationError("skein residual is defined at a positive crossing");
    LaurentPoly lhs = LaurentPoly::term(4, 1) * jones(d) -
                      LaurentPoly::term(-4, 1) * jones(switch_crossing(d, crossing));
    LaurentPoly rhs = (LaurentPoly::term(-2, 1) - LaurentPoly::term(2, 1)) *
                      jones(smooth_oriented(d, crossing));
    return lhs - rhs;
}

bool is_jones_unlink(const Diagram& d) {
    int n = d.components().count();
    if (n < 1) return false;
    LaurentPoly unlink = LaurentPoly::loop_value().pow(static_cast<unsigned>(n - 1));
    return jones(d) == unlink;
}

} // namespace vknot
