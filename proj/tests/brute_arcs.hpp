#pragma once

// Brute-force intersection count for reduced diagram arcs: tries every placement of the
// line crossings inside each segment (and each side of a shared endpoint) and keeps the
// least number of chord crossings among placements where both arcs stay embedded.

#include <algorithm>
#include <map>
#include <vector>

#include "fw/arcdiag.hpp"

namespace brute {

struct Slot {
    int arc;    // 0 or 1
    int index;  // item index along the arc
};

struct Chord {
    int arc;
    double x, y;
    bool upper;
};

inline bool crosses(double a1, double a2, double b1, double b2) {
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    bool in1 = b1 > a1 && b1 < a2;
    bool in2 = b2 > a1 && b2 < a2;
    return in1 != in2;
}

// Circle positions are unrolled onto a line: segment 0 sits beyond the last point.
inline int count(const std::vector<std::vector<double>>& pos, const fw::arc::DiagramArc* arcs[2], int& self) {
    std::vector<Chord> ch;
    for (int a = 0; a < 2; ++a) {
        const auto& p = pos[a];
        for (std::size_t t = 0; t + 1 < p.size(); ++t) {
            bool up = (t % 2 == 0) == (arcs[a]->h0 == fw::arc::Hemi::Upper);
            ch.push_back({a, p[t], p[t + 1], up});
        }
    }
    int mutual = 0;
    self = 0;
    for (std::size_t i = 0; i < ch.size(); ++i)
        for (std::size_t j = i + 1; j < ch.size(); ++j) {
            if (ch[i].upper != ch[j].upper) continue;
            if (!crosses(ch[i].x, ch[i].y, ch[j].x, ch[j].y)) continue;
            if (ch[i].arc == ch[j].arc)
                ++self;
            else
                ++mutual;
        }
    return mutual;
}

inline int intersection(const fw::arc::DiagramArc& a, const fw::arc::DiagramArc& b, int m) {
    const fw::arc::DiagramArc* arcs[2] = {&a, &b};
    // Group the crossing items of both arcs by segment; shared endpoints get a left/right nudge.
    std::map<int, std::vector<Slot>> by_seg;
    std::vector<std::vector<double>> pos(2);
    for (int k = 0; k < 2; ++k) {
        const auto& arc = *arcs[k];
        pos[k].assign(arc.cross.size() + 2, 0.0);
        pos[k][0] = 2.0 * arc.start;
        pos[k].back() = 2.0 * arc.end;
        for (std::size_t t = 0; t < arc.cross.size(); ++t) by_seg[arc.cross[t]].push_back({k, static_cast<int>(t + 1)});
    }
    std::vector<std::pair<int, int>> shared;  // (arc, item) at endpoints met by both arcs
    for (int p : {a.start, a.end})
        if (p == b.start || p == b.end) {
            shared.push_back({1, p == b.start ? 0 : static_cast<int>(b.cross.size() + 1)});
        }
    std::vector<int> segs;
    std::vector<std::vector<Slot>> groups;
    for (auto& [k, v] : by_seg) {
        segs.push_back(k);
        std::sort(v.begin(), v.end(), [](const Slot& x, const Slot& y) {
            return x.arc != y.arc ? x.arc < y.arc : x.index < y.index;
        });
        groups.push_back(v);
    }
    int best = 1 << 30;
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            const int combos = 1 << shared.size();
            for (int mask = 0; mask < combos; ++mask) {
                auto p = pos;
                for (std::size_t s = 0; s < shared.size(); ++s)
                    p[shared[s].first][shared[s].second] += (mask >> s & 1) ? 0.01 : -0.01;
                int self = 0;
                int c = count(p, arcs, self);
                if (self == 0) best = std::min(best, c);
            }
            return;
        }
        auto& v = groups[g];
        const int k = segs[g];
        const double lo = k == 0 ? 2.0 * (m - 1) : 2.0 * (k - 1);
        std::sort(v.begin(), v.end(), [](const Slot& x, const Slot& y) {
            return x.arc != y.arc ? x.arc < y.arc : x.index < y.index;
        });
        do {
            for (std::size_t i = 0; i < v.size(); ++i)
                pos[v[i].arc][v[i].index] = lo + 2.0 * (i + 1) / (v.size() + 1);
            rec(g + 1);
        } while (std::next_permutation(v.begin(), v.end(), [](const Slot& x, const Slot& y) {
            return x.arc != y.arc ? x.arc < y.arc : x.index < y.index;
        }));
    };
    rec(0);
    return best;
}

}  // namespace brute
