#include "fcd/diagram.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace fcd {

namespace {

bool label_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool label_char(char c) {
    return label_start(c) || (c >= '0' && c <= '9') || c == '_';
}

std::string end_text(const std::string& label, bool neg) {
    return neg ? "-" + label : label;
}

} // namespace

Diagram::Diagram(std::vector<std::vector<ChordEnd>> circles, std::vector<std::string> labels)
    : circles_(std::move(circles)), labels_(std::move(labels)) {
    const int n = chord_count();
    std::vector<int> count(static_cast<size_t>(n), 0);
    std::vector<bool> first_neg(static_cast<size_t>(n), false);
    twist_.assign(static_cast<size_t>(n), 0);
    for (const auto& label : labels_) {
        if (label.empty() || !label_start(label[0])) throw Error("bad chord label '" + label + "'");
        for (char c : label)
            if (!label_char(c)) throw Error("bad chord label '" + label + "'");
    }
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw Error("duplicate chord label '" + labels_[i] + "'");
    for (const auto& circle : circles_) {
        for (const ChordEnd& e : circle) {
            if (e.chord < 0 || e.chord >= n) throw Error("chord end references unknown chord");
            size_t c = static_cast<size_t>(e.chord);
            if (count[c] == 0) first_neg[c] = e.neg;
            else if (count[c] == 1) twist_[c] = (e.neg != first_neg[c]) ? 1 : 0;
            ++count[c];
        }
    }
    for (int c = 0; c < n; ++c) {
        if (count[static_cast<size_t>(c)] != 2)
            throw Error("chord '" + labels_[static_cast<size_t>(c)] + "' appears " +
                        std::to_string(count[static_cast<size_t>(c)]) + " times, expected 2");
    }
}

int Diagram::chord_id(std::string_view label) const {
    for (int c = 0; c < chord_count(); ++c)
        if (labels_[static_cast<size_t>(c)] == label) return c;
    return -1;
}

bool Diagram::operator==(const Diagram& o) const {
    if (circles_.size() != o.circles_.size()) return false;
    for (size_t i = 0; i < circles_.size(); ++i) {
        if (circles_[i].size() != o.circles_[i].size()) return false;
        for (size_t j = 0; j < circles_[i].size(); ++j) {
            const ChordEnd& a = circles_[i][j];
            const ChordEnd& b = o.circles_[i][j];
            if (a.neg != b.neg) return false;
            if (labels_[static_cast<size_t>(a.chord)] != o.labels_[static_cast<size_t>(b.chord)]) return false;
        }
    }
    return true;
}

Diagram parse(std::string_view text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };

    std::vector<std::vector<std::pair<std::string, bool>>> raw_circles;
    std::vector<std::pair<std::string, bool>> current;
    bool in_paren = false;
    // what may come next
    enum class Expect { open, end_or_close_or_semi, sep_or_close, end } expect = Expect::open;

    auto read_end = [&]() -> std::pair<std::string, bool> {
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
            skip_ws();
        }
        if (pos >= text.size() || !label_start(text[pos]))
            throw ParseError(neg ? "expected chord label after '-'" : "expected chord label", pos);
        size_t start = pos;
        while (pos < text.size() && label_char(text[pos])) ++pos;
        return {std::string(text.substr(start, pos - start)), neg};
    };

    skip_ws();
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (in_paren) throw ParseError("unterminated circle, expected ')'", pos);
            if (expect == Expect::open) throw ParseError("expected '('", pos);
            break;
        }
        char c = text[pos];
        switch (expect) {
        case Expect::open:
            if (c != '(') throw ParseError("expected '('", pos);
            ++pos;
            in_paren = true;
            current.clear();
            expect = Expect::end_or_close_or_semi;
            break;
        case Expect::end_or_close_or_semi:
            if (c == ')') {
                ++pos;
                raw_circles.push_back(current);
                current.clear();
                in_paren = false;
                expect = Expect::sep_or_close;
            } else if (c == ';') {
                // shorthand: circle separator inside the parentheses
                ++pos;
                raw_circles.push_back(current);
                current.clear();
            } else {
                current.push_back(read_end());
                expect = Expect::sep_or_close;
            }
            break;
        case Expect::sep_or_close:
            if (!in_paren) {
                if (c != ';') throw ParseError("expected ';' between circles", pos);
                ++pos;
                expect = Expect::open;
            } else if (c == ',') {
                ++pos;
                expect = Expect::end;
            } else if (c == ';') {
                ++pos;
                raw_circles.push_back(current);
                current.clear();
                expect = Expect::end_or_close_or_semi;
            } else if (c == ')') {
                ++pos;
                raw_circles.push_back(current);
                current.clear();
                in_paren = false;
            } else {
                throw ParseError("expected ',', ';' or ')'", pos);
            }
            break;
        case Expect::end:
            current.push_back(read_end());
            expect = Expect::sep_or_close;
            break;
        }
    }

    // assign chord ids in first-occurrence order
    std::vector<std::string> labels;
    std::vector<std::vector<ChordEnd>> circles;
    std::map<std::string, int> ids;
    for (const auto& rc : raw_circles) {
        std::vector<ChordEnd> circle;
        circle.reserve(rc.size());
        for (const auto& [label, neg] : rc) {
            auto it = ids.find(label);
            int id;
            if (it == ids.end()) {
                id = static_cast<int>(labels.size());
                ids.emplace(label, id);
                labels.push_back(label);
            } else {
                id = it->second;
            }
            circle.push_back(ChordEnd{id, neg});
        }
        circles.push_back(std::move(circle));
    }
    return Diagram(std::move(circles), std::move(labels));
}

std::string serialize(const Diagram& d) {
    std::string s;
    bool first_circle = true;
    for (const auto& circle : d.circles()) {
        if (!first_circle) s += " ; ";
        s += "(";
        bool first = true;
        for (const ChordEnd& e : circle) {
            if (!first) s += ", ";
            s += end_text(d.label(e.chord), e.neg);
            first = false;
        }
        s += ")";
        first_circle = false;
    }
    return s;
}

Diagram flip_circle(const Diagram& d, int i) {
    if (i < 0 || i >= d.circle_count()) throw Error("circle index " + std::to_string(i) + " out of range");
    auto circles = d.circles();
    auto& c = circles[static_cast<size_t>(i)];
    std::reverse(c.begin(), c.end());
    for (ChordEnd& e : c) e.neg = !e.neg;
    return Diagram(std::move(circles), d.labels());
}

Diagram mirror(const Diagram& d) {
    auto circles = d.circles();
    for (auto& c : circles) {
        std::reverse(c.begin(), c.end());
        for (ChordEnd& e : c) e.neg = !e.neg;
    }
    return Diagram(std::move(circles), d.labels());
}

namespace {

Diagram slide_impl(const Diagram& d, int ci, int idx, int over, bool wrong_side) {
    if (ci < 0 || ci >= d.circle_count()) throw Error("circle index " + std::to_string(ci) + " out of range");
    if (over < 0 || over >= d.chord_count()) throw Error("unknown chord to slide over");
    auto circles = d.circles();
    auto& circ = circles[static_cast<size_t>(ci)];
    const int k = static_cast<int>(circ.size());
    if (idx < 0 || idx >= k) throw Error("end index " + std::to_string(idx) + " out of range");
    ChordEnd x = circ[static_cast<size_t>(idx)];
    if (x.chord == over)
        throw Error("cannot slide an end of '" + d.label(over) + "' along itself");

    int next = (idx + 1) % k;
    int prev = (idx + k - 1) % k;
    bool before;       // x immediately precedes the adjacent end of `over`
    int y_index;
    if (k >= 2 && circ[static_cast<size_t>(prev)].chord == over) {
        before = false;
        y_index = prev;
    } else if (k >= 2 && circ[static_cast<size_t>(next)].chord == over) {
        before = true;
        y_index = next;
    } else {
        throw Error("end is not adjacent to an end of '" + d.label(over) + "'");
    }

    // locate the far end y' of `over`
    int tc = -1, tp = -1;
    for (int c = 0; c < d.circle_count() && tc < 0; ++c) {
        const auto& cc = circles[static_cast<size_t>(c)];
        for (int p = 0; p < static_cast<int>(cc.size()); ++p) {
            if (cc[static_cast<size_t>(p)].chord == over && !(c == ci && p == y_index)) {
                tc = c;
                tp = p;
                break;
            }
        }
    }

    const bool tw = d.twisted(over);
    circ.erase(circ.begin() + idx);
    if (tc == ci && tp > idx) --tp;

    if (tw) x.neg = !x.neg;
    bool insert_after = (before != tw);
    if (wrong_side) insert_after = !insert_after;
    auto& target = circles[static_cast<size_t>(tc)];
    target.insert(target.begin() + (insert_after ? tp + 1 : tp), x);
    return Diagram(std::move(circles), d.labels());
}

} // namespace

Diagram slide(const Diagram& d, int circle, int index, int over) {
    return slide_impl(d, circle, index, over, false);
}

namespace detail {
Diagram slide_wrong_side(const Diagram& d, int circle, int index, int over) {
    return slide_impl(d, circle, index, over, true);
}
} // namespace detail

namespace {

// Incremental relabeling state used by the canonical-form search.
struct LabelState {
    std::vector<int> new_id;    // chord -> canonical index, -1 if unseen
    std::vector<bool> flip_sign; // chord -> negate both ends
    int next = 0;

    explicit LabelState(int chords) : new_id(static_cast<size_t>(chords), -1),
                                      flip_sign(static_cast<size_t>(chords), false) {}
};

std::string canonical_label(int idx) {
    if (idx < 26) return std::string(1, static_cast<char>('a' + idx));
    return "c" + std::to_string(idx);
}

// Renders one circle under (flip, rotation), extending the label state.
std::string render_circle(const std::vector<ChordEnd>& circle, bool flip, int rot, LabelState& st) {
    const int k = static_cast<int>(circle.size());
    std::string s = "(";
    for (int j = 0; j < k; ++j) {
        ChordEnd e;
        if (!flip) {
            e = circle[static_cast<size_t>((rot + j) % k)];
        } else {
            e = circle[static_cast<size_t>((rot + k - 1 - j) % k)]; // reversed
            e.neg = !e.neg;
        }
        size_t c = static_cast<size_t>(e.chord);
        if (st.new_id[c] < 0) {
            st.new_id[c] = st.next++;
            st.flip_sign[c] = e.neg; // force first occurrence positive
        }
        bool neg = e.neg != st.flip_sign[c];
        if (j) s += ", ";
        s += end_text(canonical_label(st.new_id[c]), neg);
    }
    s += ")";
    return s;
}

struct CanonSearch {
    const Diagram& d;
    std::vector<int> nonempty;
    std::optional<std::string> best;

    explicit CanonSearch(const Diagram& diagram) : d(diagram) {}

    void dfs(const std::string& prefix, std::vector<bool>& used, const LabelState& st, int depth) {
        if (depth == static_cast<int>(nonempty.size())) {
            if (!best || prefix < *best) best = prefix;
            return;
        }
        for (size_t u = 0; u < nonempty.size(); ++u) {
            if (used[u]) continue;
            const auto& circle = d.circles()[static_cast<size_t>(nonempty[u])];
            const int k = static_cast<int>(circle.size());
            for (int flip = 0; flip < 2; ++flip) {
                for (int rot = 0; rot < k; ++rot) {
                    LabelState next_st = st;
                    std::string seg = render_circle(circle, flip != 0, rot, next_st);
                    std::string cand = prefix.empty() ? seg : prefix + " ; " + seg;
                    if (best) {
                        // prune branches that already exceed the best string
                        std::string_view b(*best);
                        std::string_view c(cand);
                        size_t n = std::min(b.size(), c.size());
                        int cmp = c.substr(0, n).compare(b.substr(0, n));
                        if (cmp > 0) continue;
                        if (cmp == 0 && c.size() >= b.size() && depth + 1 < static_cast<int>(nonempty.size()))
                            continue; // cannot get shorter than best by adding circles
                    }
                    used[u] = true;
                    dfs(cand, used, next_st, depth + 1);
                    used[u] = false;
                }
            }
        }
    }
};

} // namespace

std::string canonical_form(const Diagram& d) {
    std::string prefix;
    CanonSearch search(d);
    for (int i = 0; i < d.circle_count(); ++i) {
        if (d.circles()[static_cast<size_t>(i)].empty()) {
            prefix += prefix.empty() ? "()" : " ; ()";
        } else {
            search.nonempty.push_back(i);
        }
    }
    if (search.nonempty.empty()) return prefix;
    LabelState st(d.chord_count());
    std::vector<bool> used(search.nonempty.size(), false);
    search.dfs(prefix, used, st, 0);
    return *search.best;
}

} // namespace fcd
