#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

using namespace vknot;
using vknot::testing::load_corpus;

namespace {

bool has_kind(const std::vector<MoveSite>& sites, MoveKind k) {
    return std::any_of(sites.begin(), sites.end(),
                       [k](const MoveSite& s) { return s.kind == k; });
}

} // namespace

TEST_CASE("reduction detection on the fixtures") {
    auto kink_sites = find_reductions(parse_diagram("X+(1,2,2,1)"));
    REQUIRE(has_kind(kink_sites, MoveKind::r1));

    // opposite-sign clasp: closure of s1 s1^-1
    Diagram clasp = parse_diagram("X+(1,2,3,4) X-(3,2,1,4)");
    CHECK(has_kind(find_reductions(clasp), MoveKind::r2));
    // same-sign clasp (Hopf) must not reduce
    CHECK(!has_kind(find_reductions(load_corpus("hopf.vkd")), MoveKind::r2));
    CHECK(!has_kind(find_reductions(load_corpus("hopf.vkd")), MoveKind::r1));

    // Kishino's standard diagram admits no classical or virtual reduction
    auto kish = find_reductions(load_corpus("kishino.vkd"));
    CHECK(!has_kind(kish, MoveKind::r1));
    CHECK(!has_kind(kish, MoveKind::r2));
    CHECK(!has_kind(kish, MoveKind::vr1));
    CHECK(!has_kind(kish, MoveKind::vr2));

    // trefoil is locally irreducible
    auto tre = find_reductions(load_corpus("trefoil.vkd"));
    CHECK(std::none_of(tre.begin(), tre.end(),
                       [](const MoveSite& s) { return s.reduces_crossings(); }));

    // virtual clasp reduces by VR2
    CHECK(has_kind(find_reductions(load_corpus("virtual_hopf.vkd")), MoveKind::vr2));
}

TEST_CASE("applying R1 and R2") {
    Diagram kink = parse_diagram("X+(1,2,2,1)");
    auto sites = find_reductions(kink);
    REQUIRE(!sites.empty());
    Diagram after = apply_move(kink, sites.front());
    CHECK(after.crossing_count() == 0);
    CHECK(after.free_loops() == 1);

    Diagram clasp = parse_diagram("X+(1,2,3,4) X-(3,2,1,4)");
    auto csites = find_reductions(clasp);
    auto it = std::find_if(csites.begin(), csites.end(),
                           [](const MoveSite& s) { return s.kind == MoveKind::r2; });
    REQUIRE(it != csites.end());
    Diagram cafter = apply_move(clasp, *it);
    CHECK(cafter.crossing_count() == 0);
    CHECK(cafter.components().count() == 2);

    // stale site
    CHECK_THROWS_AS(apply_move(after, sites.front()), OperationError);
}

TEST_CASE("simplify reaches fixed points deterministically") {
    CHECK(simplify(load_corpus("kinks3.vkd")).crossing_count() == 0);
    CHECK(simplify(load_corpus("kinks3.vkd")).free_loops() == 1);
    CHECK(simplify(load_corpus("trefoil.vkd")) == load_corpus("trefoil.vkd"));
    Diagram kish = load_corpus("kishino.vkd");
    CHECK(simplify(kish).crossing_count() == kish.crossing_count());
    CHECK(simplify(load_corpus("virtual_hopf.vkd")).crossing_count() == 0);

    SimplifyResult r = simplify_with_trace(load_corpus("kinks3.vkd"));
    CHECK(r.trace.size() == 3);
    // replay the trace
    Diagram replay = load_corpus("kinks3.vkd");
    for (const MoveSite& s : r.trace) replay = canonicalize(apply_move(replay, s));
    CHECK(replay == r.diagram);
}

TEST_CASE("virtual R2 insertion round trips") {
    Diagram tre = load_corpus("trefoil.vkd");
    auto ins = virtual_r2_insert(tre, 1, 4);
    CHECK(ins.diagram.virtual_count() == 2);
    CHECK(jones(ins.diagram) == jones(tre));
    CHECK(simplify(ins.diagram) == canonicalize(tre));
    CHECK_THROWS_AS(virtual_r2_insert(tre, 2, 2), OperationError);

    Diagram kish = load_corpus("kishino.vkd");
    auto kins = virtual_r2_insert(kish, 1, 4);
    CHECK(kins.diagram.virtual_count() == 4);
    CHECK(jones(kins.diagram) == LaurentPoly::one());
}

TEST_CASE("property: f is invariant under virtual R2 insertion") {
    vknot::testing::RandomDiagrams gen(0x52D2);
    int done = 0;
    while (done < 50) {
        Diagram d = gen.next(6);
        std::vector<int> labels;
        for (const auto& [label, rec] : d.edges()) labels.push_back(label);
        if (labels.size() < 2) continue;
        std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
        size_t i = pick(gen.rng), j = pick(gen.rng);
        if (i == j) continue;
        auto ins = virtual_r2_insert(d, labels[i], labels[j]);
        CHECK(jones(ins.diagram) == jones(d));
        ++done;
    }
}

TEST_CASE("full twist insertion") {
    Diagram tre = load_corpus("trefoil.vkd");
    // single-strand twist is a suppressed kink
    TwistSpec k1{{2}, +1, 1};
    CHECK(full_twist_insert(tre, k1).diagram == tre);

    // two-strand full twist on the closure of the identity braid = Hopf-like
    Diagram rails = load_corpus("virtual_hopf.vkd");
    Diagram cleared = simplify(rails); // 2 free loops, no edges to cut
    CHECK(cleared.free_loops() == 2);

    TwistSpec spec{{1, 3}, +1, 1};
    auto tw = full_twist_insert(load_corpus("virtual_hopf.vkd"), spec);
    CHECK(tw.diagram.classical_count() == 2);
    int lk = linking_number(simplify(tw.diagram), 0, 1);
    CHECK(std::abs(lk) == 2);

    // inserting the opposite twist at the exit edges cancels after simplify
    TwistSpec undo{{tw.exit_edges[0], tw.exit_edges[1]}, -1, 1};
    auto back = full_twist_insert(tw.diagram, undo);
    CHECK(simplify(back.diagram).crossing_count() == 0);

    CHECK_THROWS_AS(full_twist_insert(tre, TwistSpec{{2, 2}, +1, 1}), OperationError);
    CHECK_THROWS_AS(full_twist_insert(tre, TwistSpec{{2, 4}, +1, 0}), OperationError);
}

TEST_CASE("property: jones invariant under every detected move") {
    vknot::testing::RandomDiagrams gen(0x3A11);
    int triangles_seen = 0;
    for (int i = 0; i < 60; ++i) {
        Diagram d = gen.next(7);
        LaurentPoly before_jones = jones(d);
        LaurentPoly before_bracket = bracket(d);
        for (const MoveSite& site : find_reductions(d)) {
            CAPTURE(move_kind_name(site.kind));
            Diagram after = apply_move(d, site);
            CHECK(jones(after) == before_jones);
            if (site.kind == MoveKind::r1) {
                // bracket changes by exactly -A^(+-3), by the kink's sign
                LaurentPoly factor = LaurentPoly::neg_a_cubed_pow(site.kink_sign);
                CHECK(before_bracket == factor * bracket(after));
            } else {
                CHECK(bracket(after) == before_bracket);
            }
            if (site.kind == MoveKind::r3 || site.kind == MoveKind::vr3 ||
                site.kind == MoveKind::vr4) {
                ++triangles_seen;
                CHECK(after.crossing_count() == d.crossing_count());
            }
        }
    }
    CHECK(triangles_seen > 0); // the sweep must actually exercise triangle moves
}
