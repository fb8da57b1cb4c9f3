#pragma once

// Exhaustive enumeration of small one-circle diagrams: every arrangement of
// k chords (all distinct interleavings of their 2k ends, all 4^k sign
// patterns). Used by the oracle-agreement and orientability sweeps.

#include "fcd/diagram.hpp"

#include <functional>
#include <vector>

namespace fcd_test {

inline std::vector<fcd::Diagram> all_one_circle_diagrams(int chords) {
    std::vector<fcd::Diagram> out;
    std::vector<int> word;
    std::vector<int> used(static_cast<size_t>(chords), 0);

    std::function<void()> place = [&] {
        if (static_cast<int>(word.size()) == 2 * chords) {
            const int signs = 1 << (2 * chords);
            for (int s = 0; s < signs; ++s) {
                std::vector<fcd::ChordEnd> circle;
                for (size_t i = 0; i < word.size(); ++i)
                    circle.push_back(fcd::ChordEnd{word[i], ((s >> i) & 1) != 0});
                std::vector<std::string> labels;
                for (int c = 0; c < chords; ++c) labels.push_back(std::string(1, static_cast<char>('a' + c)));
                out.emplace_back(std::vector<std::vector<fcd::ChordEnd>>{circle}, labels);
            }
            return;
        }
        for (int c = 0; c < chords; ++c) {
            if (used[static_cast<size_t>(c)] == 2) continue;
            // fix first occurrences in increasing chord order to skip relabelings
            if (used[static_cast<size_t>(c)] == 0) {
                bool ok = true;
                for (int prev = 0; prev < c; ++prev)
                    if (used[static_cast<size_t>(prev)] == 0) ok = false;
                if (!ok) continue;
            }
            ++used[static_cast<size_t>(c)];
            word.push_back(c);
            place();
            word.pop_back();
            --used[static_cast<size_t>(c)];
        }
    };

    if (chords == 0) {
        out.push_back(fcd::parse("()"));
        return out;
    }
    place();
    return out;
}

} // namespace fcd_test
