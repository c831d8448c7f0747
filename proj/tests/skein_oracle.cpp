#include "skein_oracle.hpp"

#include <vector>

#include "vknot/invariants.hpp"

namespace vknot::testing {

namespace {

constexpr int A = 0, B = 1, C = 2, D = 3;

// open-path tracker: other[x] = far end of the open path through endpoint x
struct Paths {
    std::vector<int> other;
    int loops = 0;

    // connect endpoints x and y with an arc
    void arc(int x, int y) {
        int xf = other[x];
        int yf = other[y];
        if (xf == y) {
            ++loops;
            return;
        }
        other[xf] = yf;
        other[yf] = xf;
    }
};

void expand(const Diagram& d, const std::vector<int>& classical, size_t idx,
            Paths paths, int exponent, LaurentPoly& acc,
            const std::vector<LaurentPoly>& d_pow) {
    if (idx == classical.size()) {
        int total = paths.loops + d.free_loops();
        acc += LaurentPoly::term(exponent, 1) * d_pow[total - 1];
        return;
    }
    int cr = classical[idx];
    auto ep = [cr](int slot) { return cr * 4 + slot; };
    {
        Paths alpha = paths; // arcs a-b, c-d
        alpha.arc(ep(A), ep(B));
        alpha.arc(ep(C), ep(D));
        expand(d, classical, idx + 1, std::move(alpha), exponent - 1, acc, d_pow);
    }
    {
        Paths beta = std::move(paths); // arcs a-d, b-c
        beta.arc(ep(A), ep(D));
        beta.arc(ep(B), ep(C));
        expand(d, classical, idx + 1, std::move(beta), exponent + 1, acc, d_pow);
    }
}

} // namespace

LaurentPoly skein_bracket(const Diagram& d) {
    std::vector<int> classical = d.classical_ids();
    if (d.crossing_count() == 0)
        return LaurentPoly::loop_value().pow(static_cast<unsigned>(d.free_loops() - 1));

    Paths paths;
    paths.other.assign(4 * d.crossing_count(), -1);
    for (const auto& [label, rec] : d.edges()) {
        int u = rec.tail.crossing * 4 + rec.tail.slot;
        int v = rec.head.crossing * 4 + rec.head.slot;
        paths.other[u] = v;
        paths.other[v] = u;
    }
    for (int i = 0; i < d.crossing_count(); ++i) {
        if (d.crossing(i).is_virtual()) {
            paths.arc(i * 4 + A, i * 4 + C);
            paths.arc(i * 4 + B, i * 4 + D);
        }
    }
    int max_loops = 2 * d.crossing_count() + d.free_loops() + 1;
    std::vector<LaurentPoly> d_pow(max_loops + 1);
    d_pow[0] = LaurentPoly::one();
    for (int i = 1; i <= max_loops; ++i)
        d_pow[i] = d_pow[i - 1] * LaurentPoly::loop_value();

    LaurentPoly acc;
    expand(d, classical, 0, std::move(paths), 0, acc, d_pow);
    return acc;
}

LaurentPoly skein_jones(const Diagram& d) {
    return LaurentPoly::neg_a_cubed_pow(-writhe(d)) * skein_bracket(d);
}

} // namespace vknot::testing
