#include "fw/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <sstream>

#include "fw/homology.hpp"

namespace fw::oracle {

int closed_form_eye(const System& ia, int eye) {
    PathOrder po = path_order(ia, eye);
    const int n = static_cast<int>(po.w.size());
    int s = hat_I_eye(ia, eye);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (!(ia.xg[po.f[p]][po.w[q]] & 1)) continue;
            for (int r = 0; r <= q; ++r)
                for (int t = p; t < n; ++t) s ^= ia.xr[po.f[r]][po.w[t]] & 1;
        }
    return s;
}

std::vector<int> closed_form_I(const System& sys, const Orders& orders) {
    System sw = switch_all(sys, orders);
    std::vector<int> out;
    for (int e = 1; e <= sw.eye_count(); ++e) out.push_back(closed_form_eye(sw, e));
    return out;
}

namespace {

// Parity model of one IA eye: bit layout M | G | R, each n*n row-major (finger position, Whitney position).
struct ParityModel {
    int n;
    int bit(int layer, int p, int q) const { return layer * n * n + p * n + q; }
    static bool get(std::uint32_t s, int b) { return (s >> b) & 1u; }
    static void flip(std::uint32_t& s, int b) { s ^= 1u << b; }

    bool sh_fw(int p, int q) const { return q == p || q == p - 1; }

    // layer 1 = G, 2 = R. surface = layer whose arcs the slide reroutes.
    std::uint32_t slide_w(std::uint32_t s, int mover, int over, int surf, int twist) const {
        const int opp = 3 - surf;
        std::uint32_t out = s;
        for (int d = 0; d < n; ++d) {
            bool sh = sh_fw(d, over);
            bool dm = get(s, bit(opp, d, over)) ^ (twist && sh);
            if (dm) flip(out, bit(0, d, mover));
            if (sh) flip(out, bit(surf, d, mover));
        }
        return out;
    }
    std::uint32_t slide_f(std::uint32_t s, int mover, int over, int surf, int twist) const {
        const int opp = 3 - surf;
        std::uint32_t out = s;
        for (int d = 0; d < n; ++d) {
            bool sh = sh_fw(over, d);
            bool dm = get(s, bit(opp, over, d)) ^ (twist && sh);
            if (dm) flip(out, bit(0, mover, d));
            if (sh) flip(out, bit(surf, mover, d));
        }
        return out;
    }
    // Rotation on surface surf changes crossings on the other surface.
    std::uint32_t rotate_w(std::uint32_t s, int q, int surf) const {
        const int opp = 3 - surf;
        std::uint32_t out = s;
        for (int d = 0; d < n; ++d) {
            if (get(s, bit(surf, d, q))) flip(out, bit(0, d, q));
            if (sh_fw(d, q)) flip(out, bit(opp, d, q));
        }
        return out;
    }
    std::uint32_t rotate_f(std::uint32_t s, int a, int surf) const {
        const int opp = 3 - surf;
        std::uint32_t out = s;
        for (int d = 0; d < n; ++d) {
            if (get(s, bit(surf, a, d))) flip(out, bit(0, a, d));
            if (sh_fw(a, d)) flip(out, bit(opp, a, d));
        }
        return out;
    }

    std::vector<std::uint32_t> neighbours(std::uint32_t s) const {
        std::vector<std::uint32_t> out;
        for (int surf = 1; surf <= 2; ++surf) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a == b) continue;
                    for (int tw = 0; tw < 2; ++tw) {
                        out.push_back(slide_w(s, a, b, surf, tw));
                        out.push_back(slide_f(s, a, b, surf, tw));
                    }
                }
            for (int a = 0; a < n; ++a) {
                out.push_back(rotate_w(s, a, surf));
                out.push_back(rotate_f(s, a, surf));
            }
        }
        return out;
    }

    // Column elimination on G with G-slides and R-rotations; the R phase leaves M alone.
    int complete(std::uint32_t s) const {
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p) {
                if (!get(s, bit(1, p, q))) continue;
                s = p != q ? slide_w(s, q, p, 1, 0) : rotate_w(s, q, 2);
            }
        int v = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p; q < n; ++q) v ^= get(s, bit(0, p, q));
        return v;
    }

    bool ea(std::uint32_t s) const { return (s >> (n * n)) == 0; }
};

std::set<int> search_eye(const System& ia, int eye, int depth, ScriptSearch& stats) {
    PathOrder po = path_order(ia, eye);
    const int n = static_cast<int>(po.w.size());
    if (n > 3) throw SystemError("slide-script enumeration is limited to n <= 3");
    ParityModel pm{n};
    std::uint32_t start = 0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (ia.m[po.f[p]][po.w[q]] & 1) ParityModel::flip(start, pm.bit(0, p, q));
            if (ia.xg[po.f[p]][po.w[q]] & 1) ParityModel::flip(start, pm.bit(1, p, q));
            if (ia.xr[po.f[p]][po.w[q]] & 1) ParityModel::flip(start, pm.bit(2, p, q));
        }
    const std::uint64_t space = std::uint64_t{1} << (3 * n * n);
    std::vector<std::uint64_t> seen((space + 63) / 64, 0);
    auto mark = [&](std::uint32_t s) {
        auto& w = seen[s >> 6];
        std::uint64_t b = std::uint64_t{1} << (s & 63);
        if (w & b) return false;
        w |= b;
        return true;
    };
    std::set<int> values;
    std::vector<std::uint32_t> frontier{start};
    mark(start);
    for (int d = 0;; ++d) {
        for (std::uint32_t s : frontier) {
            values.insert(pm.complete(s));
            ++stats.states;
            if (pm.ea(s)) ++stats.ea_states;
        }
        if (d == depth) break;
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : frontier)
            for (std::uint32_t t : pm.neighbours(s))
                if (mark(t)) next.push_back(t);
        if (next.empty()) break;
        frontier.swap(next);
    }
    return values;
}

}  // namespace

ScriptSearch all_slide_scripts_I(const System& sys, int depth) {
    System ia = switch_all(sys, {});
    ScriptSearch out;
    std::vector<std::set<int>> per_eye;
    for (int e = 1; e <= ia.eye_count(); ++e) per_eye.push_back(search_eye(ia, e, depth, out));
    std::set<std::vector<int>> acc{{}};
    for (const auto& vals : per_eye) {
        std::set<std::vector<int>> next;
        for (const auto& prefix : acc)
            for (int v : vals) {
                auto x = prefix;
                x.push_back(v);
                next.insert(x);
            }
        acc.swap(next);
    }
    out.values = acc;
    return out;
}

std::set<std::vector<int>> all_orderings_I(const System& sys) {
    std::set<std::vector<int>> out;
    out.insert(compute_I(sys).bits);
    for (int e = 1; e <= sys.eye_count(); ++e) {
        auto order = default_w_order(sys, e);
        if (order.size() > 4) throw SystemError("ordering enumeration is limited to n <= 4");
        std::sort(order.begin(), order.end());
        do {
            Orders o(sys.eye_count());
            o[e - 1] = order;
            out.insert(compute_I(sys, o).bits);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

std::string CrossReport::summary() const {
    if (!available) return "unavailable: " + (diffs.empty() ? std::string() : diffs.front());
    if (match) return compressions ? "match after " + std::to_string(compressions) + " compressions" : "match";
    std::string s = "mismatch";
    for (const auto& d : diffs) s += "; " + d;
    return s;
}

std::vector<MoveKind> geometric_kinds() {
    return {MoveKind::GSlide, MoveKind::RSlide,      MoveKind::GRotate, MoveKind::RRotate, MoveKind::CliffordAdd,
            MoveKind::SphereSlide, MoveKind::KSwitch, MoveKind::Birth,   MoveKind::Death,   MoveKind::X3Plus,
            MoveKind::X3Minus, MoveKind::Saddle,      MoveKind::Spin};
}

namespace {

using Key = std::pair<std::string, std::string>;

constexpr int kSwitchWord = 8;

Key key(const std::string& a, const std::string& b) { return a < b ? Key{a, b} : Key{b, a}; }

int geo_count(const System& sys, Surface s, int a, int b) {
    const Disc& x = sys.discs[a];
    const Disc& y = sys.discs[b];
    const int m = 2 * sys.n(x.reye) + 1;
    const auto& u = s == Surface::G ? *x.garc : *x.rarc;
    const auto& v = s == Surface::G ? *y.garc : *y.rarc;
    return arc::geometric_intersection(u, v, m);
}

void compare(const System& post, const std::map<Key, int>& xg, const std::map<Key, int>& xr,
             const std::map<Key, int>& m, CrossReport& rep) {
    for (int a = 0; a < post.size(); ++a)
        for (int b = a + 1; b < post.size(); ++b) {
            if (post.discs[a].kind == post.discs[b].kind) continue;
            if (post.discs[a].cross() || post.discs[b].cross()) continue;
            Key k = key(post.discs[a].id, post.discs[b].id);
            auto look = [&](const std::map<Key, int>& mp) {
                auto it = mp.find(k);
                return it == mp.end() ? 0 : it->second;
            };
            // Unframed arcs can push a crossing through a shared endpoint; bigons left by the
            // reroute are what compressions remove.
            const int slack = post.shared_corners(a, b);
            auto check_x = [&](const char* name, int geo, int ax) {
                const int diff = ax - geo;
                if (std::abs(diff) <= slack) return;
                if (diff > 0 && (slack > 0 || diff % 2 == 0)) {
                    rep.compressions += (diff - (diff % 2 != 0 ? 1 : 0)) / 2;
                    return;
                }
                rep.diffs.push_back(std::string(name) + " " + k.first + " " + k.second + " axiomatic " +
                                    std::to_string(ax) + " geometric " + std::to_string(geo));
            };
            check_x("xg", look(xg), post.xg[a][b]);
            check_x("xr", look(xr), post.xr[a][b]);
            if ((look(m) & 1) != (post.m[a][b] & 1))
                rep.diffs.push_back("m " + k.first + " " + k.second + " axiomatic " + std::to_string(post.m[a][b] & 1) +
                                    " homological " + std::to_string(look(m) & 1));
        }
}

}  // namespace

CrossReport cross_validate(const System& sys, const MoveRecord& move) {
    CrossReport rep;
    auto unavailable = [&](const std::string& why) {
        rep.available = false;
        rep.diffs = {why};
        return rep;
    };
    if (sys.eye_count() != 1) return unavailable("single eye required");
    if (sys.n(1) > 4) return unavailable("n <= 4 required");
    if (!sys.geometric()) return unavailable("system carries no arcs");
    if (move.kind == MoveKind::Compress) return unavailable("compression has no arc model");

    System post;
    try {
        post = apply(sys, move);
    } catch (const std::exception& e) {
        return unavailable(std::string("move does not apply: ") + e.what());
    }

    // Winding excess of the axiomatic counts over the reduced arcs.
    std::map<Key, int> wg, wr, mexp;
    for (int a = 0; a < sys.size(); ++a)
        for (int b = a + 1; b < sys.size(); ++b) {
            if (sys.discs[a].kind == sys.discs[b].kind || sys.discs[a].cross() || sys.discs[b].cross()) continue;
            Key k = key(sys.discs[a].id, sys.discs[b].id);
            wg[k] = sys.xg[a][b] - geo_count(sys, Surface::G, a, b);
            wr[k] = sys.xr[a][b] - geo_count(sys, Surface::R, a, b);
            mexp[k] = sys.m[a][b] & 1;
        }
    auto id_of = [&](int d) { return sys.discs[d].id; };
    auto opposite = [&](int d, const std::function<void(int)>& f) {
        for (int e = 0; e < sys.size(); ++e)
            if (sys.discs[e].kind != sys.discs[d].kind && !sys.discs[e].cross()) f(e);
    };

    switch (move.kind) {
        case MoveKind::GSlide:
        case MoveKind::RSlide: {
            Surface s = move.kind == MoveKind::GSlide ? Surface::G : Surface::R;
            int a = sys.require(move.get("mover")), b = sys.require(move.get("over"));
            int tw = move.get_int("twist", 0) & 1;
            // The band runs straight from the mover's start to the cap; it must not cut other arcs.
            const Disc& cap = sys.discs[b];
            const auto& cap_arc = s == Surface::G ? *cap.garc : *cap.rarc;
            const auto& mv_arc = s == Surface::G ? *sys.discs[a].garc : *sys.discs[a].rarc;
            if (mv_arc.start != cap_arc.start && mv_arc.start != cap_arc.end) {
                arc::DiagramArc band{mv_arc.start, cap_arc.start, cap_arc.h0, {}};
                for (int d = 0; d < sys.size(); ++d) {
                    if (d == a || d == b || sys.discs[d].cross()) continue;
                    const auto& da = s == Surface::G ? *sys.discs[d].garc : *sys.discs[d].rarc;
                    if (arc::geometric_intersection(band, da, 2 * sys.n(1) + 1) != 0)
                        return unavailable("band path crosses " + id_of(d));
                }
            }
            opposite(a, [&](int d) {
                Key k = key(id_of(d), id_of(a));
                mexp[k] ^= (sys.x(other(s))[d][b] & 1) ^ (tw & hom::pairing(sys, hom::clifford_label(id_of(b)), d));
            });
            break;
        }
        case MoveKind::GRotate:
        case MoveKind::RRotate: {
            Surface s = move.kind == MoveKind::GRotate ? Surface::G : Surface::R;
            int a = sys.require(move.get("disc"));
            int sign = move.get_int("sign", 1);
            opposite(a, [&](int e) {
                Key k = key(id_of(e), id_of(a));
                mexp[k] ^= sys.x(s)[e][a] & 1;
                (s == Surface::G ? wr : wg)[k] += sign * sys.shared_corners(a, e);
            });
            break;
        }
        case MoveKind::CliffordAdd:
        case MoveKind::SphereSlide: {
            bool cl = move.kind == MoveKind::CliffordAdd;
            int t = sys.require(cl ? move.get("target") : move.get("mover"));
            int src = sys.require(cl ? move.get("source") : move.get("over"));
            int count = cl ? move.get_int("count", 1) : 1;
            std::string label = cl ? hom::clifford_label(id_of(src)) : hom::sphere_label(id_of(src));
            opposite(t, [&](int e) { mexp[key(id_of(e), id_of(t))] ^= (count & 1) & hom::pairing(sys, label, e); });
            break;
        }
        case MoveKind::Saddle: {
            PathOrder po = path_order(sys, move.get_int("eye", 1));
            const int np = static_cast<int>(po.w.size());
            std::string sfx = sys.fresh_pair_suffix();
            if (np > 0) {
                const int wl = po.w[np - 1];
                // w_D carries a parallel copy of w_n pushed across the corner f_j meets.
                for (int j = 0; j < np; ++j)
                    mexp[key(id_of(po.f[j]), "w" + sfx)] =
                        (sys.m[po.f[j]][wl] + (j > 0 ? sys.m[po.f[j - 1]][wl] : 0)) & 1;
                mexp[key("f" + sfx, "w" + sfx)] = sys.m[po.f[np - 1]][wl] & 1;
            }
            break;
        }
        default:
            break;
    }

    std::map<Key, int> xg, xr;
    if (move.kind == MoveKind::KSwitch || move.kind == MoveKind::Spin) {
        const int eye = move.get_int("eye", 1);
        auto sw = k_switch(sys, eye, split_list(move.get("order", "")));
        const SwitchInfo& info = sw.second;
        const int m = 2 * sys.n(eye) + 1;
        int vk = 0;
        if (info.k() > 0) {
            const Disc& last = sys.disc(info.switch_out.back());
            vk = last.lo % 2 == 0 ? last.lo : last.hi;
        }
        auto pre_pt = [&](int p) { return p == 0 ? vk : p == vk ? 0 : p; };
        std::set<std::string> gone(info.switch_out.begin(), info.switch_out.end());
        std::vector<arc::DiagramArc> avoid_g, avoid_r;
        for (const auto& d : sys.discs)
            if (!d.cross() && !gone.count(d.id)) {
                avoid_g.push_back(*d.garc);
                avoid_r.push_back(*d.rarc);
            }
        std::map<std::string, std::pair<arc::DiagramArc, arc::DiagramArc>> star_arcs;
        for (const auto& sid : info.switch_discs) {
            const Disc& st = post.disc(sid);
            int a = pre_pt(st.lo), b = pre_pt(st.hi);
            auto ga = arc::find_disjoint_arc(a, b, m, avoid_g, kSwitchWord);
            auto ra = arc::find_disjoint_arc(a, b, m, avoid_r, kSwitchWord);
            if (!ga || !ra) return unavailable("no W-framed switch arc for " + sid + " within word length " + std::to_string(kSwitchWord));
            avoid_g.push_back(*ga);
            avoid_r.push_back(*ra);
            star_arcs[sid] = {*ga, *ra};
        }
        auto arc_of = [&](const std::string& id, Surface s) {
            auto it = star_arcs.find(id);
            if (it != star_arcs.end()) return s == Surface::G ? it->second.first : it->second.second;
            const Disc& d = sys.disc(id);
            return s == Surface::G ? *d.garc : *d.rarc;
        };
        for (int a = 0; a < post.size(); ++a)
            for (int b = a + 1; b < post.size(); ++b) {
                const Disc& x = post.discs[a];
                const Disc& y = post.discs[b];
                if (x.kind == y.kind || x.cross() || y.cross()) continue;
                Key k = key(x.id, y.id);
                xg[k] = arc::geometric_intersection(arc_of(x.id, Surface::G), arc_of(y.id, Surface::G), m) +
                        (wg.count(k) ? wg[k] : 0);
                xr[k] = arc::geometric_intersection(arc_of(x.id, Surface::R), arc_of(y.id, Surface::R), m) +
                        (wr.count(k) ? wr[k] : 0);
                if (star_arcs.count(x.id) || star_arcs.count(y.id)) {
                    const Disc& st = star_arcs.count(x.id) ? x : y;
                    const Disc& f = star_arcs.count(x.id) ? y : x;
                    mexp[k] = hom::pairing(sys, st.h2, sys.require(f.id));
                }
            }
    } else {
        if (!post.geometric()) return unavailable("move left the geometric layer");
        for (int a = 0; a < post.size(); ++a)
            for (int b = a + 1; b < post.size(); ++b) {
                const Disc& x = post.discs[a];
                const Disc& y = post.discs[b];
                if (x.kind == y.kind || x.cross() || y.cross()) continue;
                Key k = key(x.id, y.id);
                xg[k] = geo_count(post, Surface::G, a, b) + (wg.count(k) ? wg[k] : 0);
                xr[k] = geo_count(post, Surface::R, a, b) + (wr.count(k) ? wr[k] : 0);
            }
    }
    compare(post, xg, xr, mexp, rep);
    rep.match = rep.diffs.empty();
    return rep;
}

std::string write_counterexample(const std::string& dir, const Counterexample& c) {
    namespace fs = std::filesystem;
    const std::string text = serialize(c.system);
    const std::string script = to_string(c.script);
    const std::string h = hash_hex(text + "\n" + script);
    fs::path base = fs::path(dir) / c.category;
    fs::create_directories(base);
    std::ofstream(base / (h + ".fwsys"), std::ios::binary) << text;
    std::ofstream(base / (h + ".script"), std::ios::binary) << script;
    if (!c.note.empty()) std::ofstream(base / (h + ".note"), std::ios::binary) << c.note << "\n";
    return h;
}

std::string FuzzSummary::text() const {
    std::ostringstream os;
    os << "trials " << trials << "\n";
    os << "moves " << moves << "\n";
    os << "violations " << violations << "\n";
    auto kinds = all_move_kinds();
    for (std::size_t i = 0; i < kinds.size() && i < kind_counts.size(); ++i)
        os << "kind " << verb(kinds[i]) << " " << kind_counts[i] << "\n";
    for (const auto& f : failures) os << "failure " << f.category << " " << hash_hex(serialize(f.system)) << " " << f.note << "\n";
    return os.str();
}

namespace {

struct TrialOutcome {
    int moves = 0;
    std::vector<int> kind_counts;
    std::optional<Counterexample> failure;
};

TrialOutcome run_trial(const FuzzParams& p, const gen::Params& gp, int t) {
    TrialOutcome out;
    out.kind_counts.assign(all_move_kinds().size(), 0);
    gen::Rng rng(gen::derive_seed(p.seed, static_cast<std::uint64_t>(t)));
    System start = gen::random_system(rng, gp);
    System cur = start;
    Script script;
    auto fail = [&](const std::string& cat, const std::string& note) {
        out.failure = Counterexample{cat, start, script, note};
        return out;
    };
    std::vector<int> before;
    try {
        before = compute_I(cur).bits;
    } catch (const std::exception& e) {
        return fail("pipeline", e.what());
    }
    const int count = rng.range(1, std::max(1, p.moves_per_trial));
    for (int i = 0; i < count; ++i) {
        auto mv = gen::random_applicable_move(rng, cur);
        if (!mv) break;
        script.push_back(*mv);
        try {
            cur = apply(cur, *mv);
        } catch (const std::exception& e) {
            return fail("precondition", e.what());
        }
        ++out.moves;
        ++out.kind_counts[static_cast<std::size_t>(mv->kind)];
        if (p.inject_fault) {
            auto po = path_order(cur, 1);
            if (!po.f.empty()) {
                int a = po.f[0], b = po.w[0];
                cur.m[a][b] ^= 1;
                cur.m[b][a] ^= 1;
            }
        }
        auto v = validate(cur);
        if (!v.empty()) return fail("validate", v.front().field + ": " + v.front().message);
        std::vector<int> after, closed;
        try {
            after = compute_I(cur).bits;
            closed = closed_form_I(cur);
        } catch (const std::exception& e) {
            return fail("pipeline", e.what());
        }
        if (after != before) return fail("invariance", "I changed after " + to_string(*mv));
        if (closed != after) return fail("closed-form", "pipeline and closed form disagree");
    }
    return out;
}

}  // namespace

FuzzSummary fuzz(const FuzzParams& p) {
    FuzzSummary sum;
    sum.kind_counts.assign(all_move_kinds().size(), 0);
    gen::Params gp;
    gp.max_eyes = p.max_eyes;
    gp.max_discs = p.max_discs;
    std::vector<TrialOutcome> results(static_cast<std::size_t>(std::max(0, p.trials)));
    int workers = p.threads > 0 ? p.threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, 64);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int t; (t = next.fetch_add(1)) < p.trials;) results[static_cast<std::size_t>(t)] = run_trial(p, gp, t);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& r : results) {
        ++sum.trials;
        sum.moves += r.moves;
        for (std::size_t i = 0; i < r.kind_counts.size(); ++i) sum.kind_counts[i] += r.kind_counts[i];
        if (r.failure) {
            ++sum.violations;
            if (!p.corpus_dir.empty()) write_counterexample(p.corpus_dir, *r.failure);
            sum.failures.push_back(std::move(*r.failure));
        }
    }
    return sum;
}

}  // namespace fw::oracle
