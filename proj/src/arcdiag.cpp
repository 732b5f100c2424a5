#include "fw/arcdiag.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace fw::arc {

namespace {

int left_seg(int p, int m) { (void)m; return p; }
int right_seg(int p, int m) { return (p + 1) % m; }

bool adjacent(int seg, int p, int m) { return seg == left_seg(p, m) || seg == right_seg(p, m); }

// Position on the circle L ∪ {∞}: a_p at 2p, segment k at 2k-1, segment 0 last.
int point_pos(int p) { return 2 * p; }
int seg_pos(int k, int m) { return k == 0 ? 2 * m - 1 : 2 * k - 1; }

struct Item {
    bool point;
    int idx;
    bool operator==(const Item&) const = default;
};

int pos(const Item& it, int m) { return it.point ? point_pos(it.idx) : seg_pos(it.idx, m); }

std::vector<Item> items(const DiagramArc& a) {
    std::vector<Item> v;
    v.push_back({true, a.start});
    for (int k : a.cross) v.push_back({false, k});
    v.push_back({true, a.end});
    return v;
}

Hemi chord_hemi(const DiagramArc& a, std::size_t t) { return (t % 2 == 0) ? a.h0 : flip(a.h0); }

// Strictly between on the circle going upward from `from`.
int up_dist(int from, int to, int m) {
    int n = 2 * m;
    return ((to - from) % n + n) % n;
}

bool interleave(int x1, int x2, int y1, int y2, int m) {
    int d2 = up_dist(x1, x2, m);
    bool in1 = up_dist(x1, y1, m) < d2;
    bool in2 = up_dist(x1, y2, m) < d2;
    return in1 != in2;
}

}  // namespace

void check_arc(const DiagramArc& a, int m) {
    if (m < 2) throw ArcError("marked sphere needs at least two points");
    if (a.start < 0 || a.start >= m || a.end < 0 || a.end >= m) throw ArcError("arc endpoint out of range");
    if (a.start == a.end) throw ArcError("arc endpoints coincide");
    for (int k : a.cross)
        if (k < 0 || k >= m) throw ArcError("arc crosses unknown segment");
}

DiagramArc reduce(DiagramArc a, int m) {
    check_arc(a, m);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> out;
        for (int k : a.cross) {
            if (!out.empty() && out.back() == k) {
                out.pop_back();
                changed = true;
            } else {
                out.push_back(k);
            }
        }
        a.cross = std::move(out);
        if (!a.cross.empty() && adjacent(a.cross.front(), a.start, m)) {
            a.cross.erase(a.cross.begin());
            a.h0 = flip(a.h0);
            changed = true;
        }
        if (!a.cross.empty() && adjacent(a.cross.back(), a.end, m)) {
            a.cross.pop_back();
            changed = true;
        }
    }
    if (a.cross.empty()) {
        int d = (a.end - a.start + m) % m;
        if (d == 1 || d == m - 1) a.h0 = Hemi::Upper;
    }
    return a;
}

bool is_reduced(const DiagramArc& a, int m) { return reduce(a, m) == a; }

std::vector<DiagramArc> minimal_position(const std::vector<DiagramArc>& diagram, int m) {
    std::vector<DiagramArc> out;
    out.reserve(diagram.size());
    for (const auto& a : diagram) out.push_back(reduce(a, m));
    return out;
}

int geometric_intersection(const DiagramArc& a, const DiagramArc& b, int m) {
    if (!is_reduced(a, m) || !is_reduced(b, m)) throw ArcError("arcs must be in minimal position");
    auto ia = items(a);
    auto ib = items(b);
    const int na = static_cast<int>(ia.size());
    const int nb = static_cast<int>(ib.size());
    int count = 0;

    for (int s = 0; s + 1 < na; ++s) {
        for (int t = 0; t + 1 < nb; ++t) {
            if (chord_hemi(a, s) != chord_hemi(b, t)) continue;
            const Item &x1 = ia[s], &x2 = ia[s + 1], &y1 = ib[t], &y2 = ib[t + 1];
            if (x1 == y1 || x1 == y2 || x2 == y1 || x2 == y2) continue;
            if (interleave(pos(x1, m), pos(x2, m), pos(y1, m), pos(y2, m), m)) ++count;
        }
    }

    std::set<std::pair<int, int>> seen;
    for (int s = 1; s + 1 < na; ++s) {
        for (int t = 1; t + 1 < nb; ++t) {
            if (!(ia[s] == ib[t]) || seen.count({s, t})) continue;
            // b runs in direction dir so both leave the shared segment into the same hemisphere.
            int dir = (chord_hemi(a, s) == chord_hemi(b, t)) ? 1 : -1;
            int s0 = s, t0 = t;
            while (s0 - 1 >= 1 && t0 - dir >= 1 && t0 - dir + 1 < nb && ia[s0 - 1] == ib[t0 - dir]) {
                s0 -= 1;
                t0 -= dir;
            }
            int s1 = s, t1 = t;
            while (s1 + 1 + 1 < na && t1 + dir >= 1 && t1 + dir + 1 < nb && ia[s1 + 1] == ib[t1 + dir]) {
                s1 += 1;
                t1 += dir;
            }
            for (int d = 0; d <= s1 - s0; ++d) seen.insert({s0 + d, t0 + d * dir});

            const Item fa = ia[s1 + 1], fb = ib[t1 + dir];
            const Item ba = ia[s0 - 1], bb = ib[t0 - dir];
            if (fa == fb || ba == bb) continue;
            int ef = pos(ia[s1], m);
            int eb = pos(ia[s0], m);
            bool upper_f = up_dist(ef, pos(fa, m), m) < up_dist(ef, pos(fb, m), m);
            bool upper_b = up_dist(eb, pos(ba, m), m) < up_dist(eb, pos(bb, m), m);
            bool odd = ((s1 - s0) % 2) != 0;
            if (upper_f != (upper_b != odd)) ++count;
        }
    }
    return count;
}

TwistCurve inverse(TwistCurve g) {
    g.left = !g.left;
    return g;
}

DiagramArc dehn_twist(const DiagramArc& a, const TwistCurve& g, int m) {
    check_arc(a, m);
    if (g.i < 1 || g.i >= g.j || g.j > m - 1) throw ArcError("twist curve indices out of range");
    const int ei = g.i;
    const int ej = (g.j + 1) % m;
    auto inner = [&](const Item& it) {
        if (it.point) return it.idx >= g.i && it.idx <= g.j;
        return it.idx >= g.i + 1 && it.idx <= g.j;
    };
    auto it = items(a);
    DiagramArc out;
    out.start = a.start;
    out.end = a.end;
    out.h0 = a.h0;
    for (std::size_t t = 0; t + 1 < it.size(); ++t) {
        if (t > 0) out.cross.push_back(it[t].idx);
        bool in0 = inner(it[t]);
        bool in1 = inner(it[t + 1]);
        if (in0 == in1) continue;
        bool inward = in1;
        bool upper = chord_hemi(a, t) == Hemi::Upper;
        // Left twist: upper inward and lower outward go clockwise (right side first).
        bool right_first = (upper == inward);
        if (!g.left) right_first = !right_first;
        if (right_first) {
            out.cross.push_back(ej);
            out.cross.push_back(ei);
        } else {
            out.cross.push_back(ei);
            out.cross.push_back(ej);
        }
    }
    return reduce(out, m);
}

std::vector<DiagramArc> dehn_twist(const std::vector<DiagramArc>& diagram, const TwistCurve& g, int m) {
    std::vector<DiagramArc> out;
    out.reserve(diagram.size());
    for (const auto& a : diagram) out.push_back(dehn_twist(a, g, m));
    return out;
}

namespace {

std::vector<int> around(int p, Hemi arrive, int m) {
    if (arrive == Hemi::Upper) return {right_seg(p, m), left_seg(p, m)};
    return {left_seg(p, m), right_seg(p, m)};
}

}  // namespace

DiagramArc band_sum(const DiagramArc& mover, const DiagramArc& over, int side, int m) {
    check_arc(mover, m);
    check_arc(over, m);
    if (mover.start == over.start || mover.start == over.end) throw ArcError("band start touches the cap arc");
    const Hemi hs = over.h0;
    const Hemi he = (over.cross.size() % 2 == 0) ? over.h0 : flip(over.h0);
    std::vector<int> loop(over.cross.begin(), over.cross.end());
    for (int k : around(over.end, he, m)) loop.push_back(k);
    for (auto r = over.cross.rbegin(); r != over.cross.rend(); ++r) loop.push_back(*r);
    for (int k : around(over.start, hs, m)) loop.push_back(k);

    DiagramArc out;
    out.start = mover.start;
    out.end = mover.end;
    out.h0 = hs;
    out.cross = loop;
    const int c0 = mover.start;
    if (mover.h0 != hs) out.cross.push_back(side == 0 ? right_seg(c0, m) : left_seg(c0, m));
    out.cross.insert(out.cross.end(), mover.cross.begin(), mover.cross.end());
    return reduce(out, m);
}

std::optional<DiagramArc> find_disjoint_arc(int from, int to, int m, const std::vector<DiagramArc>& avoid,
                                            int max_len) {
    struct Chord {
        Item a, b;
        Hemi h;
    };
    std::vector<Chord> blocks;
    for (const auto& o : avoid) {
        auto it = items(o);
        for (std::size_t t = 0; t + 1 < it.size(); ++t) blocks.push_back({it[t], it[t + 1], chord_hemi(o, t)});
    }
    // A finished chord that strictly interleaves an obstacle chord forces a crossing.
    auto blocked = [&](const Item& x, const Item& y, Hemi h) {
        for (const auto& c : blocks) {
            if (c.h != h || x == c.a || x == c.b || y == c.a || y == c.b) continue;
            if (interleave(pos(x, m), pos(y, m), pos(c.a, m), pos(c.b, m), m)) return true;
        }
        return false;
    };
    std::optional<DiagramArc> found;
    std::vector<int> word;
    std::function<void(Hemi, int)> grow = [&](Hemi h0, int len) {
        if (found) return;
        const Item last = word.empty() ? Item{true, from} : Item{false, word.back()};
        const Hemi h = word.size() % 2 == 0 ? h0 : flip(h0);
        if (static_cast<int>(word.size()) == len) {
            if (blocked(last, Item{true, to}, h)) return;
            DiagramArc a{from, to, h0, word};
            if (!is_reduced(a, m)) return;
            for (const auto& o : avoid)
                if (geometric_intersection(a, o, m) != 0) return;
            found = a;
            return;
        }
        for (int k = 0; k < m && !found; ++k) {
            if (!word.empty() && word.back() == k) continue;
            if (word.empty() && adjacent(k, from, m)) continue;
            if (blocked(last, Item{false, k}, h)) continue;
            word.push_back(k);
            grow(h0, len);
            word.pop_back();
        }
    };
    for (int len = 0; len <= max_len && !found; ++len)
        for (Hemi h0 : {Hemi::Upper, Hemi::Lower}) grow(h0, len);
    return found;
}

DiagramArc insert_pair_after(const DiagramArc& a, int t, int m) {
    check_arc(a, m);
    DiagramArc out = a;
    auto shift_pt = [&](int p) { return p > t ? p + 2 : p; };
    out.start = shift_pt(a.start);
    out.end = shift_pt(a.end);
    for (int& k : out.cross)
        if (k != 0 && k >= t + 1) k += 2;
    return reduce(out, m + 2);
}

DiagramArc remove_pair_after(const DiagramArc& a, int t, int m) {
    check_arc(a, m);
    if (t + 2 >= m) throw ArcError("no pair to remove");
    for (int p : {a.start, a.end})
        if (p == t + 1 || p == t + 2) throw ArcError("arc ends at a removed point");
    DiagramArc out = a;
    auto shift_pt = [&](int p) { return p > t + 2 ? p - 2 : p; };
    out.start = shift_pt(a.start);
    out.end = shift_pt(a.end);
    const int last_removed = t + 2;
    const int merged = (last_removed == m - 1) ? 0 : t + 1;
    for (int& k : out.cross) {
        int outer = (last_removed == m - 1) ? 0 : t + 3;
        if (k == t + 1 || k == t + 2 || k == outer) {
            k = merged;
        } else if (k != 0 && k > t + 3) {
            k -= 2;
        }
    }
    return reduce(out, m - 2);
}

DiagramArc move_endpoint(const DiagramArc& a, int from, int to, int m) {
    DiagramArc out = a;
    if (out.start == from) out.start = to;
    else if (out.end == from) out.end = to;
    else throw ArcError("arc does not end at the moved point");
    return reduce(out, m);
}

DiagramArc standard_arc(int from, int to) {
    DiagramArc a;
    a.start = from;
    a.end = to;
    a.h0 = Hemi::Upper;
    return a;
}

std::string to_string(const DiagramArc& a) {
    std::ostringstream os;
    os << a.start << (a.h0 == Hemi::Upper ? 'U' : 'D');
    for (std::size_t i = 0; i < a.cross.size(); ++i) os << (i == 0 ? "" : ".") << a.cross[i];
    os << ':' << a.end;
    return os.str();
}

DiagramArc parse_arc(const std::string& s) {
    DiagramArc a;
    std::size_t i = 0;
    auto read_int = [&]() {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ArcError("bad arc word: " + s);
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    };
    a.start = read_int();
    if (i >= s.size() || (s[i] != 'U' && s[i] != 'D')) throw ArcError("bad arc word: " + s);
    a.h0 = s[i] == 'U' ? Hemi::Upper : Hemi::Lower;
    ++i;
    while (i < s.size() && s[i] != ':') {
        if (s[i] == '.') ++i;
        a.cross.push_back(read_int());
    }
    if (i >= s.size()) throw ArcError("bad arc word: " + s);
    ++i;
    a.end = read_int();
    if (i != s.size()) throw ArcError("bad arc word: " + s);
    return a;
}

}  // namespace fw::arc
