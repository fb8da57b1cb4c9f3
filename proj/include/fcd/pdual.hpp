#pragma once

#include "fcd/diagram.hpp"

#include <string>
#include <vector>

namespace fcd {

// Result of a partial duality: the dual diagram plus, per output circle, the
// ordered trace that produced it (kept for debugging and reporting; it has
// no equality semantics).
struct DualResult {
    Diagram diagram;
    std::vector<std::vector<std::string>> vertex_map;
};

// Partial dual with respect to the chords in A. The circles of the result
// are the boundary components of the spanning ribbon subgraph (all discs,
// only the A-ribbons); chords keep their identities. Duplicates in A are
// ignored; unknown ids are an error.
DualResult partial_dual(const Diagram& d, const std::vector<int>& a_chords);

// Partial dual with respect to every chord (the geometric dual).
DualResult full_dual(const Diagram& d);

} // namespace fcd
