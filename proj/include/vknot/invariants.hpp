#pragma once

#include <cstdint>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

// Exact-enumeration guard for the bracket state sum.
inline constexpr int kMaxBracketCrossings = 24;

// One smoothing assignment over the classical crossings. Bit i of `mask`
// set = type-beta smoothing at the i-th classical crossing (id order);
// clear = type-alpha. `loops` counts closed curves including free loops.
struct State {
    std::uint32_t mask = 0;
    int alpha = 0;
    int beta = 0;
    int loops = 0;
};

State state_of(const Diagram& d, std::uint32_t mask);

int writhe(const Diagram& d);
int linking_number(const Diagram& d, int comp_i, int comp_j);
std::vector<std::vector<int>> linking_matrix(const Diagram& d);

// <L> = sum over states of A^(beta-alpha) * d^(|s|-1), d = -A^2 - A^-2.
// Serial reference kernel and the OpenMP kernel produce identical values;
// bracket() picks one based on problem size.
LaurentPoly bracket_serial(const Diagram& d);
LaurentPoly bracket_parallel(const Diagram& d);
LaurentPoly bracket(const Diagram& d);

// Writhe-normalized invariant f(L) = (-A^3)^(-w(L)) * <L>, invariant under
// all seven move kinds. (The bare A^(-3w) normalization is not R1-invariant
// term-for-term; this form is, and it reproduces the standard values.)
LaurentPoly jones(const Diagram& d);

// A^4 V(L) - A^-4 V(switched) - (A^-2 - A^2) V(smoothed) at a positive
// classical crossing; identically zero.
LaurentPoly skein_residual(const Diagram& d, int crossing);

// true iff jones(d) equals the n-component unlink value d^(n-1)
bool is_jones_unlink(const Diagram& d);

} // namespace vknot
