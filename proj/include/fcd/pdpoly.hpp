#pragma once

#include "fcd/diagram.hpp"
#include "fcd/polynomial.hpp"

namespace fcd {

// Enumeration strategy for the partial-dual polynomial. `naive` rebuilds the
// dual from scratch for every subset and is the trusted baseline; `gray`
// walks subsets in Gray-code order applying one single-chord dual per step.
// Both must produce identical polynomials.
enum class EnumMode { naive, gray };

struct PdPolyOptions {
    int cap = 20;        // refuse diagrams with more chords than this
    EnumMode mode = EnumMode::naive;
    int threads = 0;     // 0 = pick automatically (naive mode only)
};

// The partial-dual polynomial: sum of z^(Euler genus of the dual) over all
// 2^e chord subsets.
Polynomial partial_dual_polynomial(const Diagram& d, const PdPolyOptions& opts = {});

} // namespace fcd
