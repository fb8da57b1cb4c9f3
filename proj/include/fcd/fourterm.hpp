#pragma once

#include "fcd/diagram.hpp"
#include "fcd/pdual.hpp"
#include "fcd/polynomial.hpp"
#include "fcd/random.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcd {

// The three four-term relations for framed chord diagrams. Each relates four
// diagrams built from two active chords: a stationary chord s and a moving
// chord m whose free end steps around the two ends of s. T1 has both chords
// orientable, T2 slides a twisted chord along an orientable one, and T3
// slides along a twisted chord (which toggles the moving chord's framing on
// the far side).
enum class Relation { T1, T2, T3 };

const char* relation_name(Relation r);                     // "T1" / "T2" / "T3"
std::optional<Relation> relation_from_name(std::string_view s); // accepts "t1", "T1", ...

// A host configuration for a four-term family: spectator chords plus one
// insertion anchor for each of the three fixed active ends (the moving
// chord's free end is placed immediately next to a stationary end, so it
// needs no anchor of its own). Spectators are shared by all four diagrams
// and never separate the interacting active ends.
struct Ambient {
    enum class Kind { spectator, anchor_m, anchor_s1, anchor_s2 };
    struct Token {
        Kind kind = Kind::spectator;
        ChordEnd end; // meaningful for spectators only
    };

    std::vector<std::vector<Token>> circles;
    std::vector<std::string> spectator_labels;
    std::string m_label = "m";
    std::string s_label = "s";

    void validate() const; // throws Error on malformed ambients
    std::string str() const; // "( [M], c0, [S1], -c0, [S2] )" style, for reports
};

Ambient random_ambient(int max_spectators, int circles, uint64_t seed);

struct FourTermFamily {
    Relation relation = Relation::T1;
    std::array<int, 4> coeffs{};            // always {+1, -1, +1, -1}
    std::array<Diagram, 4> diagrams;
    std::array<std::pair<int, int>, 4> moving_end; // (circle, index) of m's free end
    int spectator_count = 0;
    int m_chord = -1; // chord ids, identical across the four diagrams
    int s_chord = -1;
};

FourTermFamily build_family(Relation r, const Ambient& ambient);

// The signed sum of the four partial-dual polynomials; zero iff the relation
// holds on this ambient.
Polynomial check_family(const FourTermFamily& f, int cap = 20);

// All 16 partial duals of the family relative to its two active chords,
// indexed [diagram i][2*dual(m) + dual(s)].
struct ActiveDuals {
    std::array<std::array<DualResult, 4>, 4> duals;
    static std::string label(int i, int bits); // "G_{1;10}" etc.
};
ActiveDuals enumerate_partial_duals_of_active(const FourTermFamily& f);

// Displaces one active end past an adjacent spectator end in one of the four
// diagrams, breaking the locality the relations require. Returns nothing
// when no active end has a spectator neighbour.
std::optional<FourTermFamily> corrupt_family(const FourTermFamily& f);

struct FourTermOptions {
    std::vector<Relation> relations{Relation::T1, Relation::T2, Relation::T3};
    int trials = 200;
    int max_spectators = 8;
    int min_circles = 1;
    int max_circles = 3;
    uint64_t seed = 7;
    int cap = 20;
    int threads = 0; // 0 = pick automatically
};

struct FourTermFailure {
    Relation relation;
    int trial = 0;
    uint64_t ambient_seed = 0;
    std::string ambient;
    std::array<std::string, 4> diagrams;
    std::string residual; // the nonzero combination, rendered
};

struct FourTermReport {
    int checked = 0;
    std::vector<FourTermFailure> failures;
    bool pass() const { return failures.empty(); }
};

// Seeded randomized verification: for each relation and trial, build a random
// ambient and test that the signed polynomial combination vanishes exactly.
FourTermReport check_four_term(const FourTermOptions& opts);

uint64_t trial_seed(uint64_t base, Relation r, int trial);

} // namespace fcd
