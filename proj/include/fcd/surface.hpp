#pragma once

#include "fcd/diagram.hpp"

#include <array>
#include <vector>

namespace fcd {

// Flat enumeration of the chord-end occurrences of a diagram, shared by the
// boundary tracer and the partial-dual construction. Occurrence k owns the
// two corners 2k (before) and 2k+1 (after): the vertex-boundary corners just
// preceding and following its attachment segment in the circle order.
struct EndIndex {
    struct Occ {
        int circle;
        int pos;
        int chord;
        bool neg;
    };
    std::vector<Occ> occs;
    std::vector<std::array<int, 2>> chord_occs; // per chord, its two occurrences
    std::vector<std::vector<int>> circle_occs;  // per circle, occurrences in order

    explicit EndIndex(const Diagram& d);
};

inline int corner_before(int occ) { return 2 * occ; }
inline int corner_after(int occ) { return 2 * occ + 1; }

// The two perfect matchings on corners that encode the thickened surface:
// `arc` joins corners along vertex-disc boundary arcs between consecutive
// attachment segments, `side` joins them across ribbon sides (crosswise for
// an orientable chord, parallel for a twisted one). Their union is a
// disjoint set of cycles covering all corners.
struct CornerPairing {
    std::vector<int> arc;
    std::vector<int> side;

    int corner_count() const { return static_cast<int>(arc.size()); }
};

struct SurfaceStats {
    int components = 0;
    int vertices = 0;
    int edges = 0;
    int boundary = 0;
    int euler_genus = 0;
    bool orientable = true;
    int genus = 0;
};

CornerPairing corner_structure(const Diagram& d);

// Cycles of the matching union; empty circles contribute no cycle here but
// count as one boundary component each in boundary_components().
std::vector<std::vector<int>> boundary_cycles(const Diagram& d);
int boundary_components(const Diagram& d);

int connected_components(const Diagram& d);
int euler_genus(const Diagram& d);
bool is_orientable(const Diagram& d);
SurfaceStats surface_stats(const Diagram& d);

} // namespace fcd
