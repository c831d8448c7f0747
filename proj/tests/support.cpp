#include "support.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "vknot/realization.hpp"

namespace vknot::testing {

std::string corpus_path(const std::string& name) {
    return std::string(VKNOT_CORPUS_DIR) + "/" + name;
}

Diagram load_corpus(const std::string& name) {
    std::ifstream in(corpus_path(name));
    if (!in) throw std::runtime_error("missing corpus file: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

Diagram RandomDiagrams::next(int max_classical) {
    for (;;) {
        int strands = std::uniform_int_distribution<int>(2, 4)(rng);
        int length = std::uniform_int_distribution<int>(1, max_classical)(rng);
        // braid word as (position, sign) pairs, closed up
        std::vector<Crossing> crossings;
        std::vector<int> pos(strands);
        int label = 1;
        for (int j = 0; j < strands; ++j) pos[j] = label++;
        std::vector<int> bottom = pos;
        for (int i = 0; i < length; ++i) {
            int g = std::uniform_int_distribution<int>(0, strands - 2)(rng);
            int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? +1 : -1;
            bool make_virt = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
            int u = pos[g], w = pos[g + 1];
            int uo = label++, wo = label++;
            if (make_virt)
                crossings.push_back(make_virtual(u, w, uo, wo));
            else if (sign > 0)
                crossings.push_back(make_classical(+1, u, w, uo, wo));
            else
                crossings.push_back(make_classical(-1, w, uo, wo, u));
            pos[g] = wo;
            pos[g + 1] = uo;
        }
        // plain closure
        std::map<int, int> rename;
        int free_loops = 0;
        for (int j = 0; j < strands; ++j) {
            if (pos[j] == bottom[j]) {
                ++free_loops;
                continue;
            }
            rename[pos[j]] = bottom[j];
        }
        for (Crossing& cr : crossings)
            for (int s = 0; s < 4; ++s) {
                auto it = rename.find(cr.slot[s]);
                if (it != rename.end()) cr.slot[s] = it->second;
            }
        if (crossings.empty()) continue;
        Diagram d = Diagram::make(std::move(crossings), free_loops);
        if (d.classical_count() > max_classical || d.classical_count() == 0) continue;
        return d;
    }
}

LaurentPoly trefoil_jones() { return LaurentPoly::parse("-A^-16 + A^-12 + A^-4"); }
LaurentPoly hopf_jones() { return LaurentPoly::parse("-A^-10 - A^-2"); }
LaurentPoly vtrefoil_jones() { return LaurentPoly::parse("-A^-10 + A^-6 + A^-4"); }
LaurentPoly two_unlink_jones() { return LaurentPoly::parse("-A^-2 - A^2"); }

} // namespace vknot::testing
