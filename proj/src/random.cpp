#include "fcd/random.hpp"

namespace fcd {

uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Diagram random_diagram(int min_chords, int max_chords, int circles, Rng& rng) {
    const int e = min_chords + (max_chords > min_chords ? rng.below(max_chords - min_chords + 1) : 0);
    std::vector<std::vector<ChordEnd>> circ(static_cast<size_t>(circles));
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(e));
    for (int c = 0; c < e; ++c) {
        labels.push_back("c" + std::to_string(c));
        bool tw = rng.coin();
        bool base_neg = rng.coin(); // overall chord-sign flip, harmless by equivalence
        for (int endno = 0; endno < 2; ++endno) {
            auto& target = circ[static_cast<size_t>(rng.below(circles))];
            int at = rng.below(static_cast<int>(target.size()) + 1);
            bool neg = (endno == 1 && tw) ? !base_neg : base_neg;
            target.insert(target.begin() + at, ChordEnd{c, neg});
        }
    }
    return Diagram(std::move(circ), std::move(labels));
}

} // namespace fcd
