#include "fcd/pdual.hpp"

#include "fcd/surface.hpp"

#include <numeric>

namespace fcd {

namespace {

struct Arc {
    int tail; // corner_after of an A-end
    int head; // corner_before of the cyclically next A-end
    std::vector<int> cargo; // non-A occurrences passed over, in circle order
};

} // namespace

DualResult partial_dual(const Diagram& d, const std::vector<int>& a_chords) {
    std::vector<bool> in_a(static_cast<size_t>(d.chord_count()), false);
    for (int c : a_chords) {
        if (c < 0 || c >= d.chord_count()) throw Error("unknown chord in dual set");
        in_a[static_cast<size_t>(c)] = true;
    }

    EndIndex idx(d);
    const int corners = 2 * static_cast<int>(idx.occs.size());

    std::vector<Arc> arcs;
    std::vector<int> arc_of(static_cast<size_t>(corners), -1);
    std::vector<int> side_partner(static_cast<size_t>(corners), -1);

    std::vector<std::vector<ChordEnd>> new_circles;
    std::vector<std::vector<std::string>> vertex_map;

    // circles without A-ends survive unchanged; the others are cut into arcs
    // between consecutive A-ends, each arc carrying the non-A ends it spans
    for (int ci = 0; ci < d.circle_count(); ++ci) {
        const auto& occs = idx.circle_occs[static_cast<size_t>(ci)];
        std::vector<int> a_pos;
        for (int i = 0; i < static_cast<int>(occs.size()); ++i)
            if (in_a[static_cast<size_t>(idx.occs[static_cast<size_t>(occs[static_cast<size_t>(i)])].chord)])
                a_pos.push_back(i);
        if (a_pos.empty()) {
            new_circles.push_back(d.circles()[static_cast<size_t>(ci)]);
            vertex_map.push_back({"circle " + std::to_string(ci)});
            continue;
        }
        const int m = static_cast<int>(a_pos.size());
        const int k = static_cast<int>(occs.size());
        for (int i = 0; i < m; ++i) {
            int from = a_pos[static_cast<size_t>(i)];
            int to = a_pos[static_cast<size_t>((i + 1) % m)];
            Arc arc;
            arc.tail = corner_after(occs[static_cast<size_t>(from)]);
            arc.head = corner_before(occs[static_cast<size_t>(to)]);
            for (int p = (from + 1) % k; p != to; p = (p + 1) % k)
                arc.cargo.push_back(occs[static_cast<size_t>(p)]);
            int id = static_cast<int>(arcs.size());
            arc_of[static_cast<size_t>(arc.tail)] = id;
            arc_of[static_cast<size_t>(arc.head)] = id;
            arcs.push_back(std::move(arc));
        }
    }

    for (int c = 0; c < d.chord_count(); ++c) {
        if (!in_a[static_cast<size_t>(c)]) continue;
        auto [x, y] = idx.chord_occs[static_cast<size_t>(c)];
        if (d.twisted(c)) {
            side_partner[static_cast<size_t>(corner_before(x))] = corner_before(y);
            side_partner[static_cast<size_t>(corner_before(y))] = corner_before(x);
            side_partner[static_cast<size_t>(corner_after(x))] = corner_after(y);
            side_partner[static_cast<size_t>(corner_after(y))] = corner_after(x);
        } else {
            side_partner[static_cast<size_t>(corner_before(x))] = corner_after(y);
            side_partner[static_cast<size_t>(corner_after(y))] = corner_before(x);
            side_partner[static_cast<size_t>(corner_before(y))] = corner_after(x);
            side_partner[static_cast<size_t>(corner_after(x))] = corner_before(y);
        }
    }

    // walk the boundary cycles of the spanning subgraph, emitting the dual's
    // signed rotation; each cycle becomes one vertex disc of the dual
    std::vector<int> entry_corner(static_cast<size_t>(d.chord_count()), -1);
    std::vector<bool> visited(static_cast<size_t>(corners), false);

    auto emit_side = [&](int chord, int entered_at, std::vector<ChordEnd>& out) {
        int& first = entry_corner[static_cast<size_t>(chord)];
        if (first < 0) {
            first = entered_at;
            out.push_back(ChordEnd{chord, false});
            return;
        }
        // second traversal: the before/after corners of either old end lie on
        // the two different sides; the band is untwisted relative to the new
        // circles iff exactly one of those corners is a walk entry point
        int x = idx.chord_occs[static_cast<size_t>(chord)][0];
        int cb = corner_before(x), ca = corner_after(x);
        auto is_entry = [&](int corner) { return first == corner || entered_at == corner; };
        bool untwisted = is_entry(cb) != is_entry(ca);
        out.push_back(ChordEnd{chord, !untwisted});
    };

    // scan 'before' corners first so each cycle starts at a before-corner;
    // this picks the untwisted representative in the reciprocal loop cases
    std::vector<int> scan_order;
    scan_order.reserve(static_cast<size_t>(corners));
    for (int c = 0; c < corners; c += 2) scan_order.push_back(c);
    for (int c = 1; c < corners; c += 2) scan_order.push_back(c);

    for (int start : scan_order) {
        if (visited[static_cast<size_t>(start)] || side_partner[static_cast<size_t>(start)] < 0) continue;
        std::vector<ChordEnd> circle;
        std::vector<std::string> trace;
        int cur = start;
        do {
            // ribbon side crossing
            int chord = idx.occs[static_cast<size_t>(cur / 2)].chord;
            emit_side(chord, cur, circle);
            trace.push_back("side " + d.label(chord));
            int partner = side_partner[static_cast<size_t>(cur)];
            visited[static_cast<size_t>(cur)] = true;
            visited[static_cast<size_t>(partner)] = true;
            // vertex-boundary arc
            const Arc& arc = arcs[static_cast<size_t>(arc_of[static_cast<size_t>(partner)])];
            bool forward = (partner == arc.tail);
            if (forward) {
                for (int occ : arc.cargo)
                    circle.push_back(ChordEnd{idx.occs[static_cast<size_t>(occ)].chord,
                                              idx.occs[static_cast<size_t>(occ)].neg});
            } else {
                for (size_t i = arc.cargo.size(); i-- > 0;) {
                    int occ = arc.cargo[i];
                    circle.push_back(ChordEnd{idx.occs[static_cast<size_t>(occ)].chord,
                                              !idx.occs[static_cast<size_t>(occ)].neg});
                }
            }
            if (!arc.cargo.empty())
                trace.push_back(std::string("arc ") + (forward ? "+" : "-") +
                                std::to_string(arc.cargo.size()));
            cur = forward ? arc.head : arc.tail;
        } while (cur != start);
        new_circles.push_back(std::move(circle));
        vertex_map.push_back(std::move(trace));
    }

    return DualResult{Diagram(std::move(new_circles), d.labels()), std::move(vertex_map)};
}

DualResult full_dual(const Diagram& d) {
    std::vector<int> all(static_cast<size_t>(d.chord_count()));
    std::iota(all.begin(), all.end(), 0);
    return partial_dual(d, all);
}

} // namespace fcd
