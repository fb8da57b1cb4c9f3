#pragma once

// Independent boundary-component counter used to cross-check the corner
// matching implementation. Walks the surface boundary with an explicit
// (gap, direction) state machine: a state traverses the vertex-boundary gap
// between two consecutive attachment segments in one direction, and crossing
// a band maps arrival states to exit states. Each undirected boundary circle
// is covered by exactly two directed orbits, so b = orbits / 2, plus one per
// empty circle.

#include "fcd/diagram.hpp"
#include "fcd/surface.hpp"

#include <vector>

namespace fcd_test {

inline int boundary_components_oracle(const fcd::Diagram& d) {
    fcd::EndIndex idx(d);
    const int total_ends = static_cast<int>(idx.occs.size());

    // state id: 2 * (global gap id) + (dir == -1); gap g of a circle sits
    // between its ends at positions g and g+1 (mod k)
    std::vector<int> gap_base(idx.circle_occs.size() + 1, 0);
    for (size_t ci = 0; ci < idx.circle_occs.size(); ++ci)
        gap_base[ci + 1] = gap_base[ci] + static_cast<int>(idx.circle_occs[ci].size());

    auto other_occ = [&](int occ) {
        auto [a, b] = idx.chord_occs[static_cast<size_t>(idx.occs[static_cast<size_t>(occ)].chord)];
        return occ == a ? b : a;
    };

    auto step = [&](int state) {
        int gap = state / 2;
        bool backward = (state & 1) != 0;
        // locate the circle this gap belongs to
        int lo = 0, hi = static_cast<int>(idx.circle_occs.size());
        while (lo + 1 < hi) {
            int mid = (lo + hi) / 2;
            if (gap_base[static_cast<size_t>(mid)] <= gap) lo = mid;
            else hi = mid;
        }
        const int ci = lo;
        const auto& occs = idx.circle_occs[static_cast<size_t>(ci)];
        const int k = static_cast<int>(occs.size());
        const int g = gap - gap_base[static_cast<size_t>(ci)];

        // arrive at an attachment segment
        int arrive_occ = backward ? occs[static_cast<size_t>(g)]
                                  : occs[static_cast<size_t>((g + 1) % k)];
        bool arrive_before = !backward; // forward walks hit the 'before' corner

        // cross the band
        int exit_occ = other_occ(arrive_occ);
        bool twisted = d.twisted(idx.occs[static_cast<size_t>(arrive_occ)].chord);
        bool exit_after;   // leave from the far end's 'after' corner?
        bool exit_forward; // continue in the circle direction?
        if (!twisted) {
            exit_after = arrive_before;
            exit_forward = arrive_before;
        } else {
            exit_after = !arrive_before;
            exit_forward = !arrive_before;
        }

        int eci = idx.occs[static_cast<size_t>(exit_occ)].circle;
        int epos = idx.occs[static_cast<size_t>(exit_occ)].pos;
        int ek = static_cast<int>(idx.circle_occs[static_cast<size_t>(eci)].size());
        int egap = exit_after ? epos : (epos + ek - 1) % ek;
        return 2 * (gap_base[static_cast<size_t>(eci)] + egap) + (exit_forward ? 0 : 1);
    };

    std::vector<bool> seen(static_cast<size_t>(2 * total_ends), false);
    int orbits = 0;
    for (int s = 0; s < 2 * total_ends; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++orbits;
        int cur = s;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            cur = step(cur);
        }
    }

    int b = orbits / 2;
    for (const auto& circle : d.circles())
        if (circle.empty()) ++b;
    return b;
}

} // namespace fcd_test
