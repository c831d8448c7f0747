// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "skein_oracle.hpp"
#include "support.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/realization.hpp"
#include "vknot/representation.hpp"

using namespace vknot;
using namespace vknot::testing;

namespace {

int failures = 0;

struct Check {
    std::string name;
    double limit_seconds;
    std::function<void()> body;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

void run_check(const Check& c) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        c.body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.limit_seconds)
        error = "exceeded time limit of " + std::to_string(c.limit_seconds) + " s";
    if (error.empty()) {
        std::printf("PASS  %s (%.1f ms)\n", c.name.c_str(), secs * 1e3);
    } else {
        std::printf("FAIL  %s: %s\n", c.name.c_str(), error.c_str());
        ++failures;
    }
}

LaurentPoly hopf_value_from_formula() {
    // (A^-4)(A^-2 - A^2) - A^-8 (A^2 + A^-2)
    LaurentPoly a = LaurentPoly::term(-4, 1) *
                    (LaurentPoly::term(-2, 1) - LaurentPoly::term(2, 1));
    LaurentPoly b = LaurentPoly::term(-8, 1) *
                    (LaurentPoly::term(2, 1) + LaurentPoly::term(-2, 1));
    return a - b;
}

std::vector<Diagram> random_sweep() {
    RandomDiagrams gen(0x5EEDFACEull);
    std::vector<Diagram> out;
    for (int i = 0; i < 100; ++i) out.push_back(gen.next(8));
    return out;
}

} // namespace

int main() {
    std::vector<Check> checks;

    checks.push_back({"criterion 1: exact invariant values", 1.0, [] {
        expect(jones(load_corpus("unknot.vkd")) == LaurentPoly::one(), "jones(unknot)");
        for (int n = 1; n <= 4; ++n) {
            std::string src;
            for (int i = 0; i < n; ++i) src += "U\n";
            expect(bracket(parse_diagram(src)) ==
                       LaurentPoly::loop_value().pow(static_cast<unsigned>(n - 1)),
                   "bracket of the " + std::to_string(n) + "-unlink");
        }
        expect(jones(load_corpus("trefoil.vkd")) == trefoil_jones(),
               "jones(trefoil) != -A^-16 + A^-12 + A^-4");
        expect(jones(load_corpus("unlink2.vkd")) ==
                   LaurentPoly::parse("-A^2 - A^-2"),
               "jones(2-unlink)");
    }});

    checks.push_back({"criterion 2: virtual trefoil realizations", 1.0, [] {
        auto reports = classify_realizations(load_corpus("vtrefoil.vkd"));
        expect(reports.size() == 2, "expected exactly 2 realizations");
        int trivial = 0, nontrivial = 0;
        for (const auto& r : reports) {
            if (r.status == TrivialityStatus::trivial_certified) ++trivial;
            if (r.status == TrivialityStatus::nontrivial_certified) {
                ++nontrivial;
                expect(r.jones_value == trefoil_jones(),
                       "nontrivial realization jones is not the trefoil value");
            }
        }
        expect(trivial == 1, "expected one trivial-certified realization");
        expect(nontrivial == 1, "expected one nontrivial-certified realization");
    }});

    checks.push_back({"criterion 3: Kishino corpus", 1.0, [] {
        Diagram kish = load_corpus("kishino.vkd");
        expect(skein_jones(kish) == LaurentPoly::one(),
               "independent skein oracle disagrees on Kishino");
        expect(jones(kish) == LaurentPoly::one(), "jones(kishino) != 1");
        auto reports = classify_realizations(kish);
        expect(reports.size() == 4, "expected 4 realizations");
        for (const auto& r : reports)
            expect(r.jones_value == LaurentPoly::one(),
                   "realization " + assignment_str(r.assignment) + " has jones != 1");
    }});

    checks.push_back({"criterion 4: untwist-retwist pipeline values", 5.0, [] {
        Diagram kish = load_corpus("kishino.vkd");
        auto ins = virtual_r2_insert(kish, 1, 4);
        expect(ins.diagram.virtual_count() == 4, "insertion should add two virtuals");

        auto pipeline = [&](OverArc v_choice, int dir) {
            Assignment arcs{v_choice, v_choice, OverArc::strand1, OverArc::strand2};
            Representation rep = from_diagram(
                ins.diagram, arcs,
                {{ins.new_crossings[0], ins.new_crossings[1]}, {2}, {5}});
            expect(rep.handle(0).k == 2, "inserted pair must give a 2-strand handle");
            expect(jones(forget(rep)) == LaurentPoly::one(),
                   "untwisted realization must be trivial");
            return dehn_twist_meridian(rep, 0, dir);
        };

        Diagram l3 = forget(pipeline(OverArc::strand1, +1));
        expect(jones(l3) == trefoil_jones(),
               "one twist direction must give exactly -A^-16 + A^-12 + A^-4");
        int clasp = l3.crossing_count() - 1;
        Diagram l2 = smooth_oriented(l3, clasp);
        expect(jones(l2) == hopf_value_from_formula(),
               "intermediate diagram value mismatch");

        Diagram l3m = forget(pipeline(OverArc::strand2, -1));
        expect(jones(l3m) == trefoil_jones().mirrored(),
               "the mirror configuration must give the mirror value");
    }});

    checks.push_back({"criterion 5: skein identity on 100 random diagrams", 60.0, [] {
        for (const Diagram& d : random_sweep())
            for (int id : d.classical_ids())
                if (d.crossing(id).sign == +1)
                    expect(skein_residual(d, id).is_zero(), "nonzero skein residual");
    }});

    checks.push_back({"criterion 6: move invariance on the same sweep", 60.0, [] {
        for (const Diagram& d : random_sweep()) {
            LaurentPoly j = jones(d);
            LaurentPoly b = bracket(d);
            for (const MoveSite& site : find_reductions(d)) {
                Diagram after = apply_move(d, site);
                expect(jones(after) == j,
                       "jones changed under " + move_kind_name(site.kind));
                if (site.kind == MoveKind::r1)
                    expect(b == LaurentPoly::neg_a_cubed_pow(site.kink_sign) *
                                    bracket(after),
                           "bracket R1 factor is not -A^(+-3)");
                else
                    expect(bracket(after) == b,
                           "bracket changed under " + move_kind_name(site.kind));
            }
        }
    }});

    checks.push_back({"criterion 7: meridian twist linking change", 5.0, [] {
        Diagram base = load_corpus("linking_k2.vkd");
        Assignment arcs(4, OverArc::strand1);
        Representation rep = from_diagram(base, arcs, {{0, 1}, {2}, {3}});
        Diagram before = forget(rep);
        expect(linking_number(before, 0, 1) == 0, "expected lk = 0 before twisting");
        auto table = intersection_pairs(rep);
        expect(std::abs(table[0][0].p) == 1 && std::abs(table[1][0].p) == 1,
               "expected p_i = p_j = 1");
        int after = linking_number(forget(dehn_twist_meridian(rep, 0, +1)), 0, 1);
        expect(std::abs(after) == 2, "one twist must change lk by exactly 2");
        int after_m = linking_number(forget(dehn_twist_meridian(rep, 0, -1)), 0, 1);
        expect(after_m == -after, "opposite twist must flip the change");

        Diagram base21 = load_corpus("linking_p21.vkd");
        Assignment arcs21(7, OverArc::strand1);
        Representation rep21 = from_diagram(base21, arcs21, {{0, 1, 3, 4}, {2}, {5}, {6}});
        auto t21 = intersection_pairs(rep21);
        long long pi = std::abs(t21[0][0].p), pj = std::abs(t21[1][0].p);
        expect(pi * pj == 2, "expected p_i = 2, p_j = 1");
        expect(linking_number(forget(rep21), 0, 1) == 0, "lk before must be 0");
        int after21 = linking_number(forget(dehn_twist_meridian(rep21, 0, +1)), 0, 1);
        expect(std::abs(after21) == 4, "twist must change lk by exactly 2*p_i*p_j = 4");
    }});

    checks.push_back({"criterion 8: knotting sequences", 10.0, [] {
        // every corpus representation with a nonzero pair knots up
        struct Case {
            const char* file;
            Assignment arcs;
            std::vector<std::vector<int>> groups;
        };
        std::vector<Case> cases = {
            {"vtrefoil.vkd", {OverArc::strand1}, {{0}}},
            {"vtrefoil.vkd", {OverArc::strand2}, {{0}}},
            {"kishino.vkd", {OverArc::strand1, OverArc::strand1}, {{2}, {5}}},
            {"kishino.vkd", {OverArc::strand2, OverArc::strand2}, {{2}, {5}}},
        };
        for (const Case& c : cases) {
            Representation rep = from_diagram(load_corpus(c.file), c.arcs, c.groups);
            for (int h = 0; h < rep.genus(); ++h) {
                bool nonzero = false;
                for (int comp = 0; comp < rep.base().components().count(); ++comp) {
                    IntersectionPair p = component_pair(rep, comp, h);
                    if (p.p != 0 || p.n != 0) nonzero = true;
                }
                if (!nonzero) continue;
                Diagram f = forget(knotting_sequence(rep, h).rep);
                expect(!is_jones_unlink(f),
                       std::string(c.file) + ": sequence output not certified nontrivial");
            }
        }
        // the (1,1) single-strand case, exact class sequence
        Representation rep =
            from_diagram(load_corpus("vtrefoil.vkd"), {OverArc::strand1}, {{0}});
        Representation pre = dehn_twist_meridian(rep, 0, +1);
        KnottingSequenceResult r = knotting_sequence(pre, 0);
        std::vector<std::pair<long long, long long>> want{{1, 1}, {1, 2}, {3, 2}, {3, 5}};
        expect(r.class_trace == want, "(1,1) class sequence mismatch");
        expect(!is_jones_unlink(forget(r.rep)), "(1,1) case output must be nontrivial");
    }});

    checks.push_back({"criterion 9: unknotting and untying bounds", 30.0, [] {
        struct Case {
            const char* file;
            int budget;
        };
        for (const Case& c : std::initializer_list<Case>{
                 {"unknot.vkd", 0}, {"kink.vkd", 1}, {"kinks3.vkd", 3},
                 {"trefoil.vkd", 3}, {"hopf.vkd", 2}, {"vtrefoil.vkd", 2},
                 {"kishino.vkd", 4}}) {
            Diagram d = load_corpus(c.file);
            auto best = min_unknotting_over_realizations(d, c.budget);
            if (best)
                expect(best->changes <= d.classical_count(),
                       std::string(c.file) + ": certified bound exceeds crossing count");
        }
        // untying: at most n insertions, and a trivial realization exists
        for (const char* file : {"trefoil.vkd", "hopf.vkd"}) {
            Diagram d = load_corpus(file);
            auto bound = unknotting_bound(d, d.classical_count());
            expect(bound.has_value(), std::string(file) + ": no unknotting witness");
            expect(static_cast<int>(bound->witness.size()) <= d.classical_count(),
                   "witness larger than crossing count");
            Diagram untied = untie_by_virtualization(
                d, {bound->witness.begin(), bound->witness.end()});
            expect(untied.virtual_count() == 2 * static_cast<int>(bound->witness.size()),
                   "one virtual pair per listed crossing");
            bool trivial = false;
            for (const auto& r : classify_realizations(untied))
                if (r.status == TrivialityStatus::trivial_certified) trivial = true;
            expect(trivial, std::string(file) + ": no trivial-certified realization");
        }
    }});

    checks.push_back({"criterion 10: state sum vs recursive skein oracle", 10.0, [] {
        for (const char* file :
             {"unknot.vkd", "unlink2.vkd", "kink.vkd", "kinks3.vkd", "trefoil.vkd",
              "vtrefoil.vkd", "hopf.vkd", "kishino.vkd", "virtual_hopf.vkd"}) {
            Diagram d = load_corpus(file);
            if (d.classical_count() > 5) continue;
            LaurentPoly enumerated = bracket_serial(d);
            expect(bracket_parallel(d) == enumerated,
                   std::string(file) + ": parallel kernel mismatch");
            expect(skein_bracket(d) == enumerated,
                   std::string(file) + ": skein expansion mismatch");
        }
    }});

    for (const Check& c : checks) run_check(c);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
