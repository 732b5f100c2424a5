#include "fw/gen.hpp"

#include <algorithm>
#include <numeric>

namespace fw::gen {

int Rng::below(int n) {
    if (n <= 0) return 0;
    return std::uniform_int_distribution<int>(0, n - 1)(eng_);
}

int Rng::range(int lo, int hi) {
    if (hi < lo) return lo;
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

bool Rng::chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[rng.below(i + 1)]);
}

void sym(Matrix& m, int a, int b, int v) { m[a][b] = m[b][a] = v; }

int crossing(Rng& rng, int c) { return rng.chance(0.5) ? 0 : rng.range(0, c); }

Disc make_disc(const std::string& id, Kind k, int reye, int geye, int a, int b) {
    Disc d;
    d.id = id;
    d.kind = k;
    d.reye = reye;
    d.geye = geye;
    d.lo = std::min(a, b);
    d.hi = std::max(a, b);
    return d;
}

arc::TwistCurve random_curve(Rng& rng, int m) {
    arc::TwistCurve g;
    g.i = rng.range(1, m - 2);
    g.j = rng.range(g.i + 1, m - 1);
    g.left = rng.chance(0.5);
    return g;
}

}  // namespace

System random_system(std::uint64_t seed, const Params& p) {
    Rng rng(seed);
    return random_system(rng, p);
}

System random_system(Rng& rng, const Params& p) {
    const int k = rng.range(std::max(1, p.min_eyes), std::max(1, p.max_eyes));
    System sys = empty_system(k);
    int counter = 0;
    std::vector<std::vector<int>> path_f(k + 1), path_w(k + 1);
    std::vector<bool> geo(k + 1, false);
    for (int e = 1; e <= k; ++e) {
        const int n = rng.range(std::min(p.min_discs, p.max_discs), p.max_discs);
        sys.eyes[e - 1] = n;
        int c = 0;
        if (!p.force_ia && n >= 1 && rng.chance(p.cycle_prob)) c = rng.range(1, n);
        const int n0 = n - c;
        std::vector<int> cycle_sizes;
        for (int left = c; left > 0;) {
            int s = rng.range(1, left);
            cycle_sizes.push_back(s);
            left -= s;
        }
        // Abstract points: even abstract index = positive point.
        std::vector<int> evens, odds;
        for (int i = 2; i <= 2 * n; i += 2) evens.push_back(i);
        for (int i = 1; i < 2 * n; i += 2) odds.push_back(i);
        shuffle(rng, evens);
        shuffle(rng, odds);
        std::size_t ei = 0, oi = 0;
        auto next_even = [&]() { return evens[ei++]; };
        auto next_odd = [&]() { return odds[oi++]; };
        std::vector<int> pts{0};
        for (int i = 0; i < n0; ++i) {
            pts.push_back(next_odd());
            pts.push_back(next_even());
        }
        for (int i = 0; i < n0; ++i) {
            ++counter;
            int f = sys.add_disc(make_disc("f" + std::to_string(counter), Kind::F, e, e, pts[2 * i], pts[2 * i + 1]));
            int w = sys.add_disc(make_disc("w" + std::to_string(counter), Kind::W, e, e, pts[2 * i + 1], pts[2 * i + 2]));
            path_f[e].push_back(f);
            path_w[e].push_back(w);
        }
        for (int s : cycle_sizes) {
            std::vector<int> cp;
            for (int i = 0; i < s; ++i) {
                cp.push_back(next_even());
                cp.push_back(next_odd());
            }
            for (int i = 0; i < s; ++i) {
                ++counter;
                sys.add_disc(make_disc("f" + std::to_string(counter), Kind::F, e, e, cp[2 * i], cp[2 * i + 1]));
                sys.add_disc(make_disc("w" + std::to_string(counter), Kind::W, e, e, cp[2 * i + 1], cp[(2 * i + 2) % (2 * s)]));
            }
        }
        geo[e] = p.geometric && c == 0 && n >= 1 && n <= 3 &&
                 std::is_sorted(pts.begin(), pts.end());
        if (p.geometric && c == 0 && n >= 1 && n <= 3 && !geo[e]) {
            // Re-seat the path in corner-index order so standard arcs apply.
            for (int i = 0; i < n0; ++i) {
                sys.discs[path_f[e][i]].lo = 2 * i;
                sys.discs[path_f[e][i]].hi = 2 * i + 1;
                sys.discs[path_w[e][i]].lo = 2 * i + 1;
                sys.discs[path_w[e][i]].hi = 2 * i + 2;
            }
            geo[e] = true;
        }
    }
    for (int e = 1; e <= k; ++e) {
        const int n = sys.n(e);
        if (geo[e]) {
            const int m = 2 * n + 1;
            for (int d : sys.eye_discs(e)) {
                Disc& x = sys.discs[d];
                x.garc = arc::standard_arc(x.lo, x.hi);
                x.rarc = x.garc;
            }
            if (m >= 3) {
                for (Surface s : {Surface::G, Surface::R}) {
                    int twists = rng.range(0, p.max_twists);
                    for (int t = 0; t < twists; ++t) {
                        auto g = random_curve(rng, m);
                        for (int f : path_f[e]) {
                            auto& slot = s == Surface::G ? sys.discs[f].garc : sys.discs[f].rarc;
                            slot = arc::dehn_twist(*slot, g, m);
                        }
                    }
                }
            }
            for (int f : path_f[e])
                for (int w : path_w[e]) {
                    sym(sys.xg, f, w, arc::geometric_intersection(*sys.discs[f].garc, *sys.discs[w].garc, m));
                    sym(sys.xr, f, w, arc::geometric_intersection(*sys.discs[f].rarc, *sys.discs[w].rarc, m));
                }
        } else {
            for (int f : path_f[e])
                for (int w : path_w[e]) {
                    sym(sys.xg, f, w, crossing(rng, p.max_crossing));
                    sym(sys.xr, f, w, crossing(rng, p.max_crossing));
                }
        }
        for (int f : path_f[e])
            for (int w : path_w[e]) sym(sys.m, f, w, rng.below(2));
    }
    if (p.allow_cross && k >= 2) {
        int xc = 0;
        std::vector<int> cross_ids;
        for (int r = 1; r <= k; ++r)
            for (int g = 1; g <= k; ++g) {
                if (r == g) continue;
                const int m = rng.range(0, p.cross_pairs);
                std::vector<int> ev, od;
                for (int i = 0; i < m; ++i) {
                    ev.push_back(2 * i);
                    od.push_back(2 * i + 1);
                }
                for (Kind kind : {Kind::F, Kind::W}) {
                    shuffle(rng, ev);
                    shuffle(rng, od);
                    for (int i = 0; i < m; ++i) {
                        ++xc;
                        std::string id = std::string(kind == Kind::F ? "xf" : "xw") + std::to_string(xc);
                        cross_ids.push_back(sys.add_disc(make_disc(id, kind, r, g, ev[i], od[i])));
                    }
                }
            }
        for (int a : cross_ids)
            for (int b : cross_ids) {
                if (a >= b || sys.discs[a].kind == sys.discs[b].kind) continue;
                if (sys.discs[a].geye == sys.discs[b].geye) sym(sys.xg, a, b, crossing(rng, p.max_crossing));
                if (sys.discs[a].reye == sys.discs[b].reye) sym(sys.xr, a, b, crossing(rng, p.max_crossing));
                sym(sys.m, a, b, rng.below(2));
            }
        for (int a : cross_ids)
            for (int e = 1; e <= k; ++e)
                for (const auto* list : {&path_f[e], &path_w[e]})
                    for (int b : *list)
                        if (sys.discs[a].kind != sys.discs[b].kind && rng.chance(0.25)) sym(sys.m, a, b, 1);
    }
    for (auto& d : sys.discs) {
        const int t = p.twist_range;
        d.germ_p = rng.range(-t, t);
        d.germ_q = rng.range(-t, t);
        if ((d.germ_p + d.germ_q) % 2) d.germ_q += d.germ_q < t ? 1 : -1;
    }
    // Cycle discs carry no data.
    for (int e = 1; e <= k; ++e)
        for (const auto& c : cycle_decomposition(sys, e).cycles)
            for (int d : c.discs) sys.discs[d].germ_p = sys.discs[d].germ_q = 0;
    sys.canonicalize();
    return sys;
}

bool synthetic(const System& sys) { return !sys.geometric(); }

namespace {

std::vector<int> active_discs(const System& sys) {
    std::vector<int> out;
    for (int d = 0; d < sys.size(); ++d)
        if (sys.discs[d].cross()) out.push_back(d);
    for (int e = 1; e <= sys.eye_count(); ++e) {
        auto po = path_order(sys, e);
        out.insert(out.end(), po.f.begin(), po.f.end());
        out.insert(out.end(), po.w.begin(), po.w.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool same_domain(const System& sys, int a, int b) {
    const Disc& x = sys.discs[a];
    const Disc& y = sys.discs[b];
    if (x.cross() != y.cross()) return false;
    return x.cross() || x.reye == y.reye;
}

bool applies(const System& sys, const MoveRecord& m) {
    try {
        apply(sys, m);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> random_order(Rng& rng, const System& sys, int eye) {
    auto o = default_w_order(sys, eye);
    shuffle(rng, o);
    return o;
}

}  // namespace

std::optional<MoveRecord> random_move_of_kind(Rng& rng, const System& sys, MoveKind k) {
    std::vector<MoveRecord> cands;
    const auto act = active_discs(sys);
    auto id = [&](int d) { return sys.discs[d].id; };
    switch (k) {
        case MoveKind::GSlide:
        case MoveKind::RSlide:
            for (int a : act)
                for (int b : act)
                    if (a != b && sys.discs[a].kind == sys.discs[b].kind && same_domain(sys, a, b)) {
                        const Disc& x = sys.discs[a];
                        const Disc& y = sys.discs[b];
                        if (x.cross() && (k == MoveKind::GSlide ? x.geye != y.geye : x.reye != y.reye)) continue;
                        MoveRecord m{k, {}};
                        m.set("mover", id(a)).set("over", id(b)).set("twist", rng.range(-1, 1));
                        m.set("path", "P" + std::to_string(rng.below(2)));
                        cands.push_back(m);
                    }
            break;
        case MoveKind::GRotate:
        case MoveKind::RRotate:
            for (int a : act) {
                MoveRecord m{k, {}};
                m.set("disc", id(a)).set("corner", rng.chance(0.5) ? sys.discs[a].lo : sys.discs[a].hi).set("sign", 1);
                cands.push_back(m);
            }
            break;
        case MoveKind::CliffordAdd:
            for (int a : act)
                for (int b : act)
                    if (sys.discs[a].kind == sys.discs[b].kind && same_domain(sys, a, b)) {
                        MoveRecord m{k, {}};
                        m.set("target", id(a)).set("source", id(b)).set("count", a == b ? 2 * rng.range(0, 1) : rng.range(1, 3));
                        cands.push_back(m);
                    }
            break;
        case MoveKind::SphereSlide:
            for (int a : act)
                for (int b : act) {
                    if (a == b || sys.discs[a].kind != sys.discs[b].kind) continue;
                    const Disc& y = sys.discs[b];
                    const Disc& x = sys.discs[a];
                    if (!y.cross() && (x.cross() || x.reye != y.reye)) continue;
                    MoveRecord m{k, {}};
                    m.set("mover", id(a)).set("over", id(b));
                    cands.push_back(m);
                }
            break;
        case MoveKind::KSwitch:
            for (int e = 1; e <= sys.eye_count(); ++e)
                if (!is_ia(sys, e)) {
                    MoveRecord m{k, {}};
                    m.set("eye", e).set("order", join_list(random_order(rng, sys, e)));
                    cands.push_back(m);
                }
            break;
        case MoveKind::Birth:
        case MoveKind::Saddle:
            for (int e = 1; e <= sys.eye_count(); ++e) {
                MoveRecord m{k, {}};
                m.set("eye", e);
                cands.push_back(m);
            }
            break;
        case MoveKind::Death:
            for (int e = 1; e <= sys.eye_count(); ++e)
                for (int f : sys.eye_discs(e, Kind::F))
                    for (int w : sys.eye_discs(e, Kind::W))
                        if (sys.discs[f].lo == sys.discs[w].lo && sys.discs[f].hi == sys.discs[w].hi) {
                            MoveRecord m{k, {}};
                            m.set("eye", e).set("f", id(f)).set("w", id(w));
                            if (applies(sys, m)) cands.push_back(m);
                        }
            break;
        case MoveKind::X3Plus:
            for (int e = 1; e <= sys.eye_count(); ++e)
                for (int t : cycle_decomposition(sys, e).path.points) {
                    MoveRecord m{k, {}};
                    m.set("eye", e).set("at", t);
                    cands.push_back(m);
                }
            break;
        case MoveKind::X3Minus:
            for (int e = 1; e <= sys.eye_count(); ++e) {
                auto po = path_order(sys, e);
                std::vector<int> seq;
                for (std::size_t i = 0; i < po.f.size(); ++i) {
                    seq.push_back(po.f[i]);
                    seq.push_back(po.w[i]);
                }
                for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                    MoveRecord m{k, {}};
                    m.set("eye", e).set("first", id(seq[i])).set("second", id(seq[i + 1]));
                    if (applies(sys, m)) cands.push_back(m);
                }
            }
            break;
        case MoveKind::Spin:
            for (int e = 1; e <= sys.eye_count(); ++e) {
                const int n = sys.n(e);
                if (n < 2) continue;
                int i = rng.range(1, n);
                int j = rng.range(1, n - 1);
                if (j >= i) ++j;
                MoveRecord m{k, {}};
                m.set("eye", e).set("i", i).set("j", j).set("order", join_list(random_order(rng, sys, e)));
                cands.push_back(m);
            }
            break;
        case MoveKind::Compress:
            for (int a = 0; a < sys.size(); ++a)
                for (int b = a + 1; b < sys.size(); ++b)
                    for (Surface s : {Surface::G, Surface::R})
                        if (sys.x(s)[a][b] >= 2) {
                            MoveRecord m{k, {}};
                            m.set("surface", s == Surface::G ? "g" : "r").set("a", id(a)).set("b", id(b));
                            cands.push_back(m);
                        }
            break;
    }
    if (cands.empty()) return std::nullopt;
    return cands[rng.below(static_cast<int>(cands.size()))];
}

std::optional<MoveRecord> random_applicable_move(std::uint64_t seed, const System& sys, bool include_switch) {
    Rng rng(seed);
    return random_applicable_move(rng, sys, include_switch);
}

std::optional<MoveRecord> random_applicable_move(Rng& rng, const System& sys, bool include_switch) {
    std::vector<MoveKind> kinds;
    for (MoveKind k : all_move_kinds())
        if (include_switch || k != MoveKind::KSwitch) kinds.push_back(k);
    shuffle(rng, kinds);
    for (MoveKind k : kinds) {
        auto m = random_move_of_kind(rng, sys, k);
        if (m) return m;
    }
    return std::nullopt;
}

}  // namespace fw::gen
