#include "fcd/fourterm.hpp"

#include "fcd/pdpoly.hpp"

#include <atomic>
#include <thread>

namespace fcd {

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::T1: return "T1";
    case Relation::T2: return "T2";
    case Relation::T3: return "T3";
    }
    return "?";
}

std::optional<Relation> relation_from_name(std::string_view s) {
    if (s == "t1" || s == "T1") return Relation::T1;
    if (s == "t2" || s == "T2") return Relation::T2;
    if (s == "t3" || s == "T3") return Relation::T3;
    return std::nullopt;
}

void Ambient::validate() const {
    int m = 0, s1 = 0, s2 = 0;
    std::vector<int> count(spectator_labels.size(), 0);
    for (const auto& circle : circles) {
        for (const Token& t : circle) {
            switch (t.kind) {
            case Kind::anchor_m: ++m; break;
            case Kind::anchor_s1: ++s1; break;
            case Kind::anchor_s2: ++s2; break;
            case Kind::spectator:
                if (t.end.chord < 0 || t.end.chord >= static_cast<int>(spectator_labels.size()))
                    throw Error("ambient spectator end references unknown chord");
                ++count[static_cast<size_t>(t.end.chord)];
                break;
            }
        }
    }
    if (m != 1 || s1 != 1 || s2 != 1)
        throw Error("ambient must carry each active-end anchor exactly once");
    for (size_t c = 0; c < count.size(); ++c)
        if (count[c] != 2)
            throw Error("ambient spectator '" + spectator_labels[c] + "' appears " +
                        std::to_string(count[c]) + " times, expected 2");
    for (const auto& label : spectator_labels)
        if (label == m_label || label == s_label)
            throw Error("spectator label '" + label + "' collides with an active chord label");
}

std::string Ambient::str() const {
    std::string out;
    bool first_circle = true;
    for (const auto& circle : circles) {
        if (!first_circle) out += " ; ";
        out += "(";
        bool first = true;
        for (const Token& t : circle) {
            if (!first) out += ", ";
            switch (t.kind) {
            case Kind::anchor_m: out += "[M]"; break;
            case Kind::anchor_s1: out += "[S1]"; break;
            case Kind::anchor_s2: out += "[S2]"; break;
            case Kind::spectator:
                if (t.end.neg) out += "-";
                out += spectator_labels[static_cast<size_t>(t.end.chord)];
                break;
            }
            first = false;
        }
        out += ")";
        first_circle = false;
    }
    return out;
}

Ambient random_ambient(int max_spectators, int circles, uint64_t seed) {
    if (max_spectators < 0 || max_spectators > 8)
        throw Error("max_spectators must be between 0 and 8");
    if (circles < 1) throw Error("ambient needs at least one circle");
    Rng rng(seed);
    Ambient a;
    a.circles.resize(static_cast<size_t>(circles));
    const int k = rng.below(max_spectators + 1);
    for (int c = 0; c < k; ++c) {
        a.spectator_labels.push_back("c" + std::to_string(c));
        bool tw = rng.coin();
        bool base_neg = rng.coin();
        for (int endno = 0; endno < 2; ++endno) {
            auto& target = a.circles[static_cast<size_t>(rng.below(circles))];
            int at = rng.below(static_cast<int>(target.size()) + 1);
            bool neg = (endno == 1 && tw) ? !base_neg : base_neg;
            target.insert(target.begin() + at,
                          Ambient::Token{Ambient::Kind::spectator, ChordEnd{c, neg}});
        }
    }
    const Ambient::Kind anchors[3] = {Ambient::Kind::anchor_m, Ambient::Kind::anchor_s1,
                                      Ambient::Kind::anchor_s2};
    for (Ambient::Kind kind : anchors) {
        auto& target = a.circles[static_cast<size_t>(rng.below(circles))];
        int at = rng.below(static_cast<int>(target.size()) + 1);
        target.insert(target.begin() + at, Ambient::Token{kind, ChordEnd{}});
    }
    a.validate();
    return a;
}

namespace {

enum class MuPos { before_s1, after_s1, before_s2, after_s2 };

struct Term {
    int coeff;
    MuPos mu;
    bool m_twisted;
    bool s_twisted;
};

// The four diagrams of each relation. The layout is forced by requiring that
// the terms cancel in pairs under chord slides: sliding m's free end along an
// orientable s maps (before S1) to (after S2) keeping m's framing, while
// sliding along a twisted s maps (before S1) to (before S2) and toggles it.
// Pairs (1,4) and (2,3) carry opposite signs in every relation.
const Term kRelationTable[3][4] = {
    // T1: both chords orientable
    {{+1, MuPos::before_s1, false, false},
     {-1, MuPos::after_s1, false, false},
     {+1, MuPos::before_s2, false, false},
     {-1, MuPos::after_s2, false, false}},
    // T2: twisted m slides along orientable s
    {{+1, MuPos::before_s1, true, false},
     {-1, MuPos::after_s1, true, false},
     {+1, MuPos::before_s2, true, false},
     {-1, MuPos::after_s2, true, false}},
    // T3: orientable m slides along twisted s, arriving twisted
    {{+1, MuPos::before_s1, false, true},
     {-1, MuPos::after_s1, false, true},
     {+1, MuPos::after_s2, true, true},
     {-1, MuPos::before_s2, true, true}},
};

} // namespace

FourTermFamily build_family(Relation r, const Ambient& ambient) {
    ambient.validate();
    FourTermFamily fam;
    fam.relation = r;
    fam.spectator_count = static_cast<int>(ambient.spectator_labels.size());
    fam.m_chord = fam.spectator_count;
    fam.s_chord = fam.spectator_count + 1;

    std::vector<std::string> labels = ambient.spectator_labels;
    labels.push_back(ambient.m_label);
    labels.push_back(ambient.s_label);

    for (int i = 0; i < 4; ++i) {
        const Term& term = kRelationTable[static_cast<int>(r)][i];
        fam.coeffs[static_cast<size_t>(i)] = term.coeff;
        ChordEnd mu{fam.m_chord, term.m_twisted}; // anchor end of m is positive
        ChordEnd s2{fam.s_chord, term.s_twisted};

        std::vector<std::vector<ChordEnd>> circles;
        circles.reserve(ambient.circles.size());
        std::pair<int, int> mu_at{-1, -1};
        for (int ci = 0; ci < static_cast<int>(ambient.circles.size()); ++ci) {
            std::vector<ChordEnd> circle;
            for (const Ambient::Token& t : ambient.circles[static_cast<size_t>(ci)]) {
                switch (t.kind) {
                case Ambient::Kind::spectator:
                    circle.push_back(t.end);
                    break;
                case Ambient::Kind::anchor_m:
                    circle.push_back(ChordEnd{fam.m_chord, false});
                    break;
                case Ambient::Kind::anchor_s1:
                    if (term.mu == MuPos::before_s1) {
                        mu_at = {ci, static_cast<int>(circle.size())};
                        circle.push_back(mu);
                    }
                    circle.push_back(ChordEnd{fam.s_chord, false});
                    if (term.mu == MuPos::after_s1) {
                        mu_at = {ci, static_cast<int>(circle.size())};
                        circle.push_back(mu);
                    }
                    break;
                case Ambient::Kind::anchor_s2:
                    if (term.mu == MuPos::before_s2) {
                        mu_at = {ci, static_cast<int>(circle.size())};
                        circle.push_back(mu);
                    }
                    circle.push_back(s2);
                    if (term.mu == MuPos::after_s2) {
                        mu_at = {ci, static_cast<int>(circle.size())};
                        circle.push_back(mu);
                    }
                    break;
                }
            }
            circles.push_back(std::move(circle));
        }
        fam.diagrams[static_cast<size_t>(i)] = Diagram(std::move(circles), labels);
        fam.moving_end[static_cast<size_t>(i)] = mu_at;
    }
    return fam;
}

Polynomial check_family(const FourTermFamily& f, int cap) {
    PdPolyOptions opts;
    opts.cap = cap;
    opts.threads = 1; // trials are parallelized above this level
    Polynomial sum;
    for (int i = 0; i < 4; ++i) {
        Polynomial p = partial_dual_polynomial(f.diagrams[static_cast<size_t>(i)], opts);
        sum = sum.add(p.scale(BigInt(f.coeffs[static_cast<size_t>(i)])));
    }
    return sum;
}

std::string ActiveDuals::label(int i, int bits) {
    std::string s = "G_{";
    s += std::to_string(i + 1);
    s += ";";
    s += (bits & 2) ? '1' : '0';
    s += (bits & 1) ? '1' : '0';
    s += "}";
    return s;
}

ActiveDuals enumerate_partial_duals_of_active(const FourTermFamily& f) {
    ActiveDuals out;
    for (int i = 0; i < 4; ++i) {
        for (int bits = 0; bits < 4; ++bits) {
            std::vector<int> subset;
            if (bits & 2) subset.push_back(f.m_chord);
            if (bits & 1) subset.push_back(f.s_chord);
            out.duals[static_cast<size_t>(i)][static_cast<size_t>(bits)] =
                partial_dual(f.diagrams[static_cast<size_t>(i)], subset);
        }
    }
    return out;
}

std::optional<FourTermFamily> corrupt_family(const FourTermFamily& f) {
    for (int i = 0; i < 4; ++i) {
        auto [ci, pos] = f.moving_end[static_cast<size_t>(i)];
        const Diagram& d = f.diagrams[static_cast<size_t>(i)];
        auto circles = d.circles();
        auto& circle = circles[static_cast<size_t>(ci)];
        const int k = static_cast<int>(circle.size());
        for (int delta : {1, k - 1}) {
            int nb = (pos + delta) % k;
            if (circle[static_cast<size_t>(nb)].chord < f.spectator_count) {
                std::swap(circle[static_cast<size_t>(pos)], circle[static_cast<size_t>(nb)]);
                FourTermFamily out = f;
                out.diagrams[static_cast<size_t>(i)] = Diagram(std::move(circles), d.labels());
                out.moving_end[static_cast<size_t>(i)] = {ci, nb};
                return out;
            }
        }
    }
    return std::nullopt;
}

uint64_t trial_seed(uint64_t base, Relation r, int trial) {
    uint64_t salt = (static_cast<uint64_t>(r) + 1) * 0x632BE59BD9B4E019ull;
    return mix64(mix64(base + salt) + static_cast<uint64_t>(trial) * 0x9E3779B97F4A7C15ull);
}

FourTermReport check_four_term(const FourTermOptions& opts) {
    struct Task {
        Relation relation;
        int trial;
    };
    std::vector<Task> tasks;
    for (Relation r : opts.relations)
        for (int t = 0; t < opts.trials; ++t) tasks.push_back({r, t});

    std::vector<std::optional<FourTermFailure>> results(tasks.size());
    auto run_task = [&](size_t ti) {
        const Task& task = tasks[ti];
        uint64_t seed = trial_seed(opts.seed, task.relation, task.trial);
        Rng rng(seed);
        int circles = opts.min_circles + rng.below(opts.max_circles - opts.min_circles + 1);
        Ambient ambient = random_ambient(opts.max_spectators, circles, rng.next());
        FourTermFamily fam = build_family(task.relation, ambient);
        Polynomial residual = check_family(fam, opts.cap);
        if (!residual.is_zero()) {
            FourTermFailure fail;
            fail.relation = task.relation;
            fail.trial = task.trial;
            fail.ambient_seed = seed;
            fail.ambient = ambient.str();
            for (int i = 0; i < 4; ++i)
                fail.diagrams[static_cast<size_t>(i)] = serialize(fam.diagrams[static_cast<size_t>(i)]);
            fail.residual = residual.str();
            results[ti] = std::move(fail);
        }
    };

    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads > 8) threads = 8;
    if (threads == 1 || tasks.size() < 2) {
        for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    FourTermReport report;
    report.checked = static_cast<int>(tasks.size());
    for (auto& r : results)
        if (r) report.failures.push_back(std::move(*r));
    return report;
}

} // namespace fcd
