#include "fcd/surface.hpp"

#include <numeric>

namespace fcd {

EndIndex::EndIndex(const Diagram& d) {
    chord_occs.assign(static_cast<size_t>(d.chord_count()), {-1, -1});
    circle_occs.resize(static_cast<size_t>(d.circle_count()));
    for (int ci = 0; ci < d.circle_count(); ++ci) {
        const auto& circle = d.circles()[static_cast<size_t>(ci)];
        for (int p = 0; p < static_cast<int>(circle.size()); ++p) {
            const ChordEnd& e = circle[static_cast<size_t>(p)];
            int occ = static_cast<int>(occs.size());
            occs.push_back({ci, p, e.chord, e.neg});
            circle_occs[static_cast<size_t>(ci)].push_back(occ);
            auto& co = chord_occs[static_cast<size_t>(e.chord)];
            (co[0] < 0 ? co[0] : co[1]) = occ;
        }
    }
}

CornerPairing corner_structure(const Diagram& d) {
    EndIndex idx(d);
    CornerPairing cp;
    cp.arc.assign(2 * idx.occs.size(), -1);
    cp.side.assign(2 * idx.occs.size(), -1);
    for (const auto& occs : idx.circle_occs) {
        const int k = static_cast<int>(occs.size());
        for (int i = 0; i < k; ++i) {
            int a = corner_after(occs[static_cast<size_t>(i)]);
            int b = corner_before(occs[static_cast<size_t>((i + 1) % k)]);
            cp.arc[static_cast<size_t>(a)] = b;
            cp.arc[static_cast<size_t>(b)] = a;
        }
    }
    for (int c = 0; c < d.chord_count(); ++c) {
        auto [x, y] = idx.chord_occs[static_cast<size_t>(c)];
        if (d.twisted(c)) {
            cp.side[static_cast<size_t>(corner_before(x))] = corner_before(y);
            cp.side[static_cast<size_t>(corner_before(y))] = corner_before(x);
            cp.side[static_cast<size_t>(corner_after(x))] = corner_after(y);
            cp.side[static_cast<size_t>(corner_after(y))] = corner_after(x);
        } else {
            cp.side[static_cast<size_t>(corner_before(x))] = corner_after(y);
            cp.side[static_cast<size_t>(corner_after(y))] = corner_before(x);
            cp.side[static_cast<size_t>(corner_before(y))] = corner_after(x);
            cp.side[static_cast<size_t>(corner_after(x))] = corner_before(y);
        }
    }
    return cp;
}

std::vector<std::vector<int>> boundary_cycles(const Diagram& d) {
    CornerPairing cp = corner_structure(d);
    const int n = cp.corner_count();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        bool via_side = true; // alternate side / arc, starting with a side step
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            cycle.push_back(cur);
            cur = via_side ? cp.side[static_cast<size_t>(cur)] : cp.arc[static_cast<size_t>(cur)];
            via_side = !via_side;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

int boundary_components(const Diagram& d) {
    int b = static_cast<int>(boundary_cycles(d).size());
    for (const auto& circle : d.circles())
        if (circle.empty()) ++b; // a bare disc has one boundary circle
    return b;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

} // namespace

int connected_components(const Diagram& d) {
    EndIndex idx(d);
    Dsu dsu(d.circle_count());
    for (int c = 0; c < d.chord_count(); ++c) {
        auto [x, y] = idx.chord_occs[static_cast<size_t>(c)];
        dsu.unite(idx.occs[static_cast<size_t>(x)].circle, idx.occs[static_cast<size_t>(y)].circle);
    }
    int comps = 0;
    for (int i = 0; i < d.circle_count(); ++i)
        if (dsu.find(i) == i) ++comps;
    return comps;
}

int euler_genus(const Diagram& d) {
    const int c = connected_components(d);
    const int v = d.circle_count();
    const int e = d.chord_count();
    const int b = boundary_components(d);
    return 2 * c - v + e - b;
}

bool is_orientable(const Diagram& d) {
    // orientable iff some set of circle flips untwists every chord: no
    // twisted loop, and no cycle of the circle/chord incidence graph with an
    // odd number of twisted chords. Union-find with parity.
    EndIndex idx(d);
    const int n = d.circle_count();
    std::vector<int> parent(static_cast<size_t>(n));
    std::vector<int> parity(static_cast<size_t>(n), 0); // relative to parent
    std::iota(parent.begin(), parent.end(), 0);

    auto find = [&](int x) {
        int root = x, par = 0;
        while (parent[static_cast<size_t>(root)] != root) {
            par ^= parity[static_cast<size_t>(root)];
            root = parent[static_cast<size_t>(root)];
        }
        // path compression with parity accumulation
        int cur = x, acc = par;
        while (parent[static_cast<size_t>(cur)] != root) {
            int next = parent[static_cast<size_t>(cur)];
            int p = parity[static_cast<size_t>(cur)];
            parent[static_cast<size_t>(cur)] = root;
            parity[static_cast<size_t>(cur)] = acc;
            acc ^= p;
            cur = next;
        }
        return std::pair<int, int>{root, par};
    };

    for (int c = 0; c < d.chord_count(); ++c) {
        auto [x, y] = idx.chord_occs[static_cast<size_t>(c)];
        int ci = idx.occs[static_cast<size_t>(x)].circle;
        int cj = idx.occs[static_cast<size_t>(y)].circle;
        int t = d.framing(c);
        if (ci == cj) {
            if (t != 0) return false; // twisted loop
            continue;
        }
        auto [ri, pi] = find(ci);
        auto [rj, pj] = find(cj);
        if (ri == rj) {
            if ((pi ^ pj) != t) return false; // odd twisted cycle
        } else {
            parent[static_cast<size_t>(ri)] = rj;
            parity[static_cast<size_t>(ri)] = pi ^ pj ^ t;
        }
    }
    return true;
}

SurfaceStats surface_stats(const Diagram& d) {
    SurfaceStats s;
    s.components = connected_components(d);
    s.vertices = d.circle_count();
    s.edges = d.chord_count();
    s.boundary = boundary_components(d);
    s.euler_genus = 2 * s.components - s.vertices + s.edges - s.boundary;
    s.orientable = is_orientable(d);
    s.genus = s.orientable ? s.euler_genus / 2 : s.euler_genus;
    return s;
}

} // namespace fcd
