#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fcd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// One half-chord attached to a circle: which chord it belongs to and its sign.
struct ChordEnd {
    int chord = -1;
    bool neg = false;

    bool operator==(const ChordEnd&) const = default;
};

// A framed chord diagram on one or more circles, stored as its signed
// rotation: per circle, the cyclic sequence of signed half-chords. Every
// chord occurs exactly twice; a chord is twisted (framing 1) iff its two
// ends carry opposite signs. Immutable after construction; all operations
// below are pure and return new diagrams.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::vector<std::vector<ChordEnd>> circles, std::vector<std::string> labels);

    const std::vector<std::vector<ChordEnd>>& circles() const { return circles_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int chord) const { return labels_[static_cast<size_t>(chord)]; }

    int circle_count() const { return static_cast<int>(circles_.size()); }
    int chord_count() const { return static_cast<int>(labels_.size()); }
    bool twisted(int chord) const { return twist_[static_cast<size_t>(chord)] != 0; }
    int framing(int chord) const { return twist_[static_cast<size_t>(chord)]; }
    int chord_id(std::string_view label) const; // -1 when absent

    // representation equality (same circle lists, same label strings, same signs)
    bool operator==(const Diagram& o) const;

private:
    std::vector<std::vector<ChordEnd>> circles_;
    std::vector<std::string> labels_;
    std::vector<int> twist_; // derived at construction
};

// Signed-rotation text format. parse() accepts both "(a, a) ; (b, -b)" and
// the shorthand "(a, a ; b, -b)"; serialize() always emits the former.
Diagram parse(std::string_view text);
std::string serialize(const Diagram& d);

// Reverses circle i and negates the signs of its ends. Chords with both ends
// on circle i keep their framing, chords with one end there toggle it.
Diagram flip_circle(const Diagram& d, int i);

// flip_circle applied to every circle.
Diagram mirror(const Diagram& d);

// Moves the end at position `index` of circle `circle` along the adjacent
// chord `over`: the end is removed and reinserted next to the far end of
// `over`, on the side (and with the sign) that keeps the traced surface
// unchanged. When the end touches `over` on both sides, the predecessor
// adjacency wins.
Diagram slide(const Diagram& d, int circle, int index, int over);

namespace detail {
// Same as slide() but reinserting on the opposite side. Breaks Euler-genus
// invariance; kept as the negative control for the side rule.
Diagram slide_wrong_side(const Diagram& d, int circle, int index, int over);
} // namespace detail

// Lexicographically minimal serialization over circle flips, rotations,
// circle order, first-occurrence relabeling and per-chord sign
// normalization. Equal strings iff the diagrams are equivalent under
// exactly those operations. Empty circles sort first.
std::string canonical_form(const Diagram& d);

} // namespace fcd
