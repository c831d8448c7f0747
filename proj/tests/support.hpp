#pragma once

#include <random>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot::testing {

Diagram load_corpus(const std::string& name);
std::string corpus_path(const std::string& name);

// Pseudorandom virtual link diagrams: random braid closures with a fraction
// of the crossings virtualized. Deterministic for a fixed seed.
struct RandomDiagrams {
    explicit RandomDiagrams(std::uint64_t seed) : rng(seed) {}
    Diagram next(int max_classical = 8);
    std::mt19937_64 rng;
};

// frozen expected values
LaurentPoly trefoil_jones();        // -A^-16 + A^-12 + A^-4
LaurentPoly hopf_jones();           // -A^-2 - A^-10
LaurentPoly vtrefoil_jones();       // -A^-10 + A^-6 + A^-4
LaurentPoly two_unlink_jones();     // -A^2 - A^-2

} // namespace vknot::testing
