#include "fw/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fw/homology.hpp"

namespace fw {

namespace {

const std::vector<std::pair<MoveKind, std::string>> kVerbs = {
    {MoveKind::GSlide, "gslide"},     {MoveKind::RSlide, "rslide"},   {MoveKind::GRotate, "grotate"},
    {MoveKind::RRotate, "rrotate"},   {MoveKind::CliffordAdd, "clifford"}, {MoveKind::SphereSlide, "sphereslide"},
    {MoveKind::KSwitch, "switch"},    {MoveKind::Birth, "birth"},     {MoveKind::Death, "death"},
    {MoveKind::X3Plus, "x3plus"},     {MoveKind::X3Minus, "x3minus"}, {MoveKind::Saddle, "saddle"},
    {MoveKind::Spin, "spin"},         {MoveKind::Compress, "compress"}};

const std::map<MoveKind, std::set<std::string>> kKeys = {
    {MoveKind::GSlide, {"mover", "over", "twist", "path", "sign"}},
    {MoveKind::RSlide, {"mover", "over", "twist", "path", "sign"}},
    {MoveKind::GRotate, {"disc", "corner", "sign"}},
    {MoveKind::RRotate, {"disc", "corner", "sign"}},
    {MoveKind::CliffordAdd, {"target", "source", "count"}},
    {MoveKind::SphereSlide, {"mover", "over"}},
    {MoveKind::KSwitch, {"eye", "order"}},
    {MoveKind::Birth, {"eye"}},
    {MoveKind::Death, {"eye", "f", "w"}},
    {MoveKind::X3Plus, {"eye", "at"}},
    {MoveKind::X3Minus, {"eye", "first", "second"}},
    {MoveKind::Saddle, {"eye"}},
    {MoveKind::Spin, {"eye", "i", "j", "order"}},
    {MoveKind::Compress, {"surface", "a", "b", "times"}}};

int parse_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw MoveError("parameter " + key + " expects an integer, got '" + s + "'");
}

void sym_set(Matrix& mat, int a, int b, int v) { mat[a][b] = mat[b][a] = v; }

void check_eye(const System& sys, int eye) {
    if (eye < 1 || eye > sys.eye_count()) throw MoveError("eye " + std::to_string(eye) + " out of range");
}

std::set<int> cycle_discs(const System& sys, int eye) {
    std::set<int> out;
    for (const auto& c : cycle_decomposition(sys, eye).cycles) out.insert(c.discs.begin(), c.discs.end());
    return out;
}

bool on_cycle(const System& sys, int d) {
    const Disc& x = sys.discs[d];
    if (x.cross()) return false;
    return cycle_discs(sys, x.reye).count(d) > 0;
}

bool eye_has_arcs(const System& sys, int eye) {
    for (int d : sys.eye_discs(eye))
        if (!sys.discs[d].garc) return false;
    return true;
}

void drop_eye_arcs(System& sys, int eye) {
    for (int d : sys.eye_discs(eye)) {
        sys.discs[d].garc.reset();
        sys.discs[d].rarc.reset();
    }
}

template <class F>
void map_eye_arcs(System& sys, int eye, F f) {
    for (int d : sys.eye_discs(eye)) {
        Disc& x = sys.discs[d];
        if (x.garc) x.garc = f(*x.garc);
        if (x.rarc) x.rarc = f(*x.rarc);
    }
}

void shift_points_after(System& sys, int eye, int t, int by) {
    for (int d : sys.eye_discs(eye)) {
        Disc& x = sys.discs[d];
        if (x.lo > t) x.lo += by;
        if (x.hi > t) x.hi += by;
    }
}

bool zero_row(const System& sys, int d) {
    for (int b = 0; b < sys.size(); ++b)
        if (sys.m[d][b] || sys.xg[d][b] || sys.xr[d][b]) return false;
    const Disc& x = sys.discs[d];
    return x.h2.empty() && x.germ_p == 0 && x.germ_q == 0;
}

// Path disc of one eye, or a cross disc.
void require_active(const System& sys, int d, const char* role) {
    if (on_cycle(sys, d))
        throw MoveError(std::string(role) + " " + sys.discs[d].id + " lies on a boundary cycle; switch first");
}

void require_same_domain(const System& sys, int a, int b) {
    const Disc& x = sys.discs[a];
    const Disc& y = sys.discs[b];
    if (x.cross() != y.cross()) throw MoveError("cannot mix cross discs and eye discs: " + x.id + ", " + y.id);
    if (!x.cross() && x.reye != y.reye) throw MoveError("discs " + x.id + ", " + y.id + " lie on different eyes");
}

Disc new_disc(const std::string& id, Kind k, int eye, int a, int b, bool arcs) {
    Disc d;
    d.id = id;
    d.kind = k;
    d.reye = d.geye = eye;
    d.lo = std::min(a, b);
    d.hi = std::max(a, b);
    if (arcs) {
        d.garc = arc::standard_arc(d.lo, d.hi);
        d.rarc = d.garc;
    }
    return d;
}

int side_of_path(const std::string& path) {
    if (path.size() >= 2 && path[0] == 'P') return parse_int(path.substr(1), "path") & 1;
    if (path.empty()) return 0;
    throw MoveError("path descriptor must look like P<k>, got '" + path + "'");
}

}  // namespace

bool MoveRecord::has(const std::string& key) const {
    for (const auto& kv : params)
        if (kv.first == key) return true;
    return false;
}

std::string MoveRecord::get(const std::string& key) const {
    for (const auto& kv : params)
        if (kv.first == key) return kv.second;
    throw MoveError(verb(kind) + ": missing parameter " + key);
}

std::string MoveRecord::get(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
}

int MoveRecord::get_int(const std::string& key, int fallback) const {
    return has(key) ? parse_int(get(key), key) : fallback;
}

MoveRecord& MoveRecord::set(const std::string& key, const std::string& value) {
    for (auto& kv : params)
        if (kv.first == key) {
            kv.second = value;
            return *this;
        }
    params.emplace_back(key, value);
    return *this;
}

MoveRecord& MoveRecord::set(const std::string& key, int value) { return set(key, std::to_string(value)); }

std::string verb(MoveKind k) {
    for (const auto& [kind, v] : kVerbs)
        if (kind == k) return v;
    return "?";
}

MoveKind kind_from_verb(const std::string& v) {
    for (const auto& [kind, name] : kVerbs)
        if (name == v) return kind;
    throw MoveError("unknown move '" + v + "'");
}

std::vector<MoveKind> all_move_kinds() {
    std::vector<MoveKind> out;
    for (const auto& kv : kVerbs) out.push_back(kv.first);
    return out;
}

std::string to_string(const MoveRecord& m) {
    std::string s = verb(m.kind);
    for (const auto& [k, v] : m.params) s += " " + k + "=" + v;
    return s;
}

MoveRecord parse_move(const std::string& line) {
    std::istringstream is(line);
    std::string head;
    if (!(is >> head)) throw MoveError("empty move");
    MoveRecord m;
    m.kind = kind_from_verb(head);
    const auto& keys = kKeys.at(m.kind);
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw MoveError("expected key=value, got '" + tok + "'");
        std::string k = tok.substr(0, eq);
        if (!keys.count(k)) throw MoveError(head + ": unknown parameter " + k);
        if (m.has(k)) throw MoveError(head + ": repeated parameter " + k);
        m.params.emplace_back(k, tok.substr(eq + 1));
    }
    return m;
}

std::string to_string(const Script& s) {
    std::string out;
    for (const auto& m : s) out += to_string(m) + "\n";
    return out;
}

Script parse_script(const std::string& text) {
    Script s;
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            s.push_back(parse_move(line));
        } catch (const MoveError& e) {
            throw MoveError("script line " + std::to_string(ln) + ": " + e.what());
        }
    }
    return s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::string join_list(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

std::vector<std::string> default_w_order(const System& sys, int eye) {
    auto ws = sys.eye_discs(eye, Kind::W);
    std::sort(ws.begin(), ws.end(), [&](int a, int b) { return sys.discs[a].lo < sys.discs[b].lo; });
    std::vector<std::string> out;
    for (int d : ws) out.push_back(sys.discs[d].id);
    return out;
}

std::pair<System, SwitchInfo> k_switch(const System& sys, int eye, const std::vector<std::string>& w_order_in) {
    check_eye(sys, eye);
    SwitchInfo info;
    info.eye = eye;
    info.w_order = w_order_in.empty() ? default_w_order(sys, eye) : w_order_in;
    {
        auto expect = default_w_order(sys, eye);
        auto got = info.w_order;
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got) throw MoveError("order must list every Whitney disc of eye " + std::to_string(eye) + " once");
    }
    std::map<std::string, int> rank;
    for (std::size_t i = 0; i < info.w_order.size(); ++i) rank[info.w_order[i]] = static_cast<int>(i);

    auto dec = cycle_decomposition(sys, eye);
    if (dec.cycles.empty()) return {sys, info};

    struct Seg {
        int out_disc;
        int v;  // + corner of the switch-out disc
        int u;  // - corner
        int r;
    };
    std::vector<Seg> segs;
    for (const auto& c : dec.cycles) {
        int best = -1;
        for (int d : c.discs)
            if (sys.discs[d].kind == Kind::W && (best < 0 || rank[sys.discs[d].id] < rank[sys.discs[best].id])) best = d;
        const Disc& w = sys.discs[best];
        int v = w.lo % 2 == 0 ? w.lo : w.hi;
        int u = w.other_corner(v);
        segs.push_back({best, v, u, rank[w.id]});
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.r < b.r; });

    System out = sys;
    std::vector<Disc> stars;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        int next_head = s == 0 ? 0 : segs[s - 1].v;
        const Disc& w = sys.discs[segs[s].out_disc];
        Disc star = new_disc(w.id + "*", Kind::W, eye, segs[s].u, next_head, false);
        info.switch_out.push_back(w.id);
        info.switch_discs.push_back(star.id);
        stars.push_back(star);
    }
    for (const auto& id : info.switch_out) out.remove_disc(out.require(id));
    for (auto& st : stars) out.add_disc(st);
    int vk = segs.back().v;
    relabel_points(out, eye, {{0, vk}, {vk, 0}});
    drop_eye_arcs(out, eye);
    out.canonicalize();
    return {out, info};
}

System disc_slide(const System& sys, const std::string& mover, const std::string& over, Surface s, int twist, int sign,
                  int side) {
    System out = sys;
    int a = out.require(mover), b = out.require(over);
    if (a == b) throw MoveError("cannot slide " + mover + " over itself");
    if (out.discs[a].kind != out.discs[b].kind) throw MoveError("slides need discs of the same kind");
    if (sign != 1 && sign != -1) throw MoveError("sign must be 1 or -1");
    require_same_domain(out, a, b);
    require_active(out, a, "mover");
    require_active(out, b, "over");
    if (out.discs[a].cross()) {
        const bool same = s == Surface::G ? out.discs[a].geye == out.discs[b].geye : out.discs[a].reye == out.discs[b].reye;
        if (!same) throw MoveError("cross discs " + mover + ", " + over + " lie on different " + (s == Surface::G ? "G" : "R") + " spheres");
    }
    Matrix& xs = out.x(s);
    const Matrix& xo = sys.x(other(s));
    for (int d = 0; d < out.size(); ++d) {
        if (out.discs[d].kind == out.discs[a].kind) continue;
        int shared = sys.shared_corners(d, b);
        int m = out.m[d][a] ^ (xo[d][b] & 1) ^ ((twist & 1) & (shared & 1));
        sym_set(out.m, d, a, m);
        int x = xs[d][a] + sign * (2 * sys.x(s)[d][b] + shared);
        if (x < 0) throw MoveError("inverse slide would make a crossing count negative");
        sym_set(xs, d, a, x);
    }
    if (twist & 1) hom::toggle(out.discs[a].h2, hom::clifford_label(over));
    Disc& md = out.discs[a];
    const Disc& od = sys.discs[b];
    if (!md.cross()) {
        if (sign < 0) {
            drop_eye_arcs(out, md.reye);
        } else if (md.garc && od.garc) {
            const int m = 2 * out.n(md.reye) + 1;
            auto& slot = s == Surface::G ? md.garc : md.rarc;
            const auto& ov = s == Surface::G ? *od.garc : *od.rarc;
            try {
                slot = arc::band_sum(*slot, ov, side, m);
            } catch (const arc::ArcError&) {
                drop_eye_arcs(out, md.reye);
            }
        }
    }
    return out;
}

System rotate(const System& sys, const std::string& disc, Surface s, int corner, int sign) {
    System out = sys;
    int a = out.require(disc);
    const Disc& x = sys.discs[a];
    if (!x.touches(corner)) throw MoveError("corner " + std::to_string(corner) + " is not a corner of " + disc);
    if (sign != 1 && sign != -1) throw MoveError("sign must be 1 or -1");
    require_active(out, a, "disc");
    Matrix& xo = out.x(other(s));
    for (int e = 0; e < out.size(); ++e) {
        if (out.discs[e].kind == x.kind) continue;
        sym_set(out.m, a, e, out.m[a][e] ^ (sys.x(s)[e][a] & 1));
        int shared = sys.shared_corners(a, e);
        if (!shared) continue;
        int v = xo[a][e] + sign * shared;
        if (v < 0) throw MoveError("rotation would make a crossing count negative");
        sym_set(xo, a, e, v);
    }
    return out;
}

System clifford_add(const System& sys, const std::string& target, const std::string& source, int count) {
    System out = sys;
    int t = out.require(target), src = out.require(source);
    if (out.discs[t].kind != out.discs[src].kind) throw MoveError("Clifford additions need discs of the same kind");
    require_same_domain(out, t, src);
    require_active(out, t, "target");
    require_active(out, src, "source");
    for (int e = 0; e < out.size(); ++e) {
        if (out.discs[e].kind == out.discs[t].kind) continue;
        sym_set(out.m, t, e, out.m[t][e] ^ ((count & 1) & (sys.shared_corners(e, src) & 1)));
    }
    if (count & 1) hom::toggle(out.discs[t].h2, hom::clifford_label(source));
    return out;
}

System sphere_slide(const System& sys, const std::string& mover, const std::string& over) {
    System out = sys;
    int a = out.require(mover), b = out.require(over);
    if (a == b) throw MoveError("cannot tube a disc to its own linking sphere");
    if (out.discs[a].kind != out.discs[b].kind) throw MoveError("sphere slides need discs of the same kind");
    require_active(out, a, "mover");
    require_active(out, b, "over");
    const Disc& x = out.discs[a];
    const Disc& y = out.discs[b];
    if (!y.cross() && (x.cross() || x.reye != y.reye))
        throw MoveError("sphere slide over an eye disc needs a mover on the same eye");
    for (int e = 0; e < out.size(); ++e) {
        if (out.discs[e].kind == x.kind) continue;
        sym_set(out.m, a, e, out.m[a][e] ^ (sys.shared_corners(e, b) & 1));
    }
    hom::toggle(out.discs[a].h2, hom::sphere_label(over));
    return out;
}

System compress(const System& sys, Surface s, const std::string& a_id, const std::string& b_id, int times) {
    System out = sys;
    int a = out.require(a_id), b = out.require(b_id);
    if (out.discs[a].kind == out.discs[b].kind) throw MoveError("compression needs discs of opposite kinds");
    if (times < 1 || out.x(s)[a][b] < 2 * times) throw MoveError("compression needs two crossings per bigon");
    sym_set(out.x(s), a, b, out.x(s)[a][b] - 2 * times);
    return out;
}

System birth(const System& sys, int eye) {
    check_eye(sys, eye);
    System out = sys;
    const int n = out.n(eye);
    const bool arcs = eye_has_arcs(out, eye);
    if (arcs) map_eye_arcs(out, eye, [&](const arc::DiagramArc& a) { return arc::insert_pair_after(a, 2 * n, 2 * n + 1); });
    std::string s = out.fresh_pair_suffix();
    out.add_disc(new_disc("f" + s, Kind::F, eye, 2 * n + 1, 2 * n + 2, arcs));
    out.add_disc(new_disc("w" + s, Kind::W, eye, 2 * n + 1, 2 * n + 2, arcs));
    out.eyes[eye - 1] = n + 1;
    out.canonicalize();
    return out;
}

System death(const System& sys, int eye, const std::string& f_id, const std::string& w_id) {
    check_eye(sys, eye);
    int f = sys.require(f_id), w = sys.require(w_id);
    const Disc& fd = sys.discs[f];
    const Disc& wd = sys.discs[w];
    if (fd.kind != Kind::F || wd.kind != Kind::W) throw MoveError("death needs a finger and a Whitney disc");
    if (!sys.on_eye(f, eye) || !sys.on_eye(w, eye)) throw MoveError("death pair must lie on eye " + std::to_string(eye));
    if (fd.lo != wd.lo || fd.hi != wd.hi) throw MoveError("death pair corners differ");
    if (sys.m[f][w] != 0) throw MoveError("death pair has M(f,w)=1");
    if (fd.h2 != wd.h2) throw MoveError("death pair homology offsets differ");
    if (fd.germ_p != wd.germ_p || fd.germ_q != wd.germ_q) throw MoveError("death pair germs differ");
    if (fd.garc != wd.garc || fd.rarc != wd.rarc) throw MoveError("death pair arcs differ");
    for (int b = 0; b < sys.size(); ++b)
        if (sys.xg[f][b] || sys.xr[f][b] || sys.xg[w][b] || sys.xr[w][b]) throw MoveError("death pair crossing rows differ");
    for (int b = 0; b < sys.size(); ++b)
        if (sys.m[f][b] || sys.m[w][b]) throw MoveError("death pair interior rows differ");
    System out = sys;
    const int n = out.n(eye);
    const int lo = fd.lo, hi = fd.hi;
    const bool adjacent = hi == lo + 1;
    out.remove_disc(out.require(f_id));
    out.remove_disc(out.require(w_id));
    if (adjacent && eye_has_arcs(out, eye)) {
        map_eye_arcs(out, eye, [&](const arc::DiagramArc& a) { return arc::remove_pair_after(a, lo - 1, 2 * n + 1); });
    } else {
        drop_eye_arcs(out, eye);
    }
    const int odd = lo % 2 ? lo : hi;
    const int even = lo % 2 ? hi : lo;
    for (int d : out.eye_discs(eye)) {
        Disc& x = out.discs[d];
        for (int* p : {&x.lo, &x.hi}) {
            if (*p % 2 && *p > odd) *p -= 2;
            if (*p % 2 == 0 && *p > even) *p -= 2;
        }
        if (x.lo > x.hi) std::swap(x.lo, x.hi);
    }
    out.eyes[eye - 1] = n - 1;
    out.canonicalize();
    return out;
}

System x3_insert(const System& sys, int eye, int t) {
    check_eye(sys, eye);
    auto dec = cycle_decomposition(sys, eye);
    if (std::find(dec.path.points.begin(), dec.path.points.end(), t) == dec.path.points.end())
        throw MoveError("x3 location " + std::to_string(t) + " is not on the immersed arc");
    System out = sys;
    const int n = out.n(eye);
    const Kind k1 = t % 2 == 0 ? Kind::F : Kind::W;
    int occupant = -1;
    for (int d : out.eye_discs(eye, k1))
        if (out.discs[d].touches(t)) occupant = d;
    const bool arcs = eye_has_arcs(out, eye);
    if (arcs) map_eye_arcs(out, eye, [&](const arc::DiagramArc& a) { return arc::insert_pair_after(a, t, 2 * n + 1); });
    shift_points_after(out, eye, t, 2);
    if (occupant >= 0) {
        Disc& o = out.discs[occupant];
        if (o.lo == t) o.lo = t + 2;
        else o.hi = t + 2;
        if (o.lo > o.hi) std::swap(o.lo, o.hi);
        if (arcs) {
            o.garc = arc::move_endpoint(*o.garc, t, t + 2, 2 * n + 3);
            o.rarc = arc::move_endpoint(*o.rarc, t, t + 2, 2 * n + 3);
        }
    }
    std::string s = out.fresh_pair_suffix();
    const std::string id1 = (k1 == Kind::F ? "f" : "w") + s;
    const std::string id2 = (k1 == Kind::F ? "w" : "f") + s;
    out.add_disc(new_disc(id1, k1, eye, t, t + 1, arcs));
    out.add_disc(new_disc(id2, other(k1), eye, t + 1, t + 2, arcs));
    out.eyes[eye - 1] = n + 1;
    out.canonicalize();
    return out;
}

System x3_remove(const System& sys, int eye, const std::string& first, const std::string& second) {
    check_eye(sys, eye);
    int a = sys.require(first), b = sys.require(second);
    if (!sys.on_eye(a, eye) || !sys.on_eye(b, eye)) throw MoveError("x3 pair must lie on eye " + std::to_string(eye));
    if (sys.discs[a].kind == sys.discs[b].kind) throw MoveError("x3 pair needs opposite kinds");
    if (sys.discs[a].lo > sys.discs[b].lo) std::swap(a, b);
    const Disc& d1 = sys.discs[a];
    const Disc& d2 = sys.discs[b];
    const int t = d1.lo;
    if (d1.hi != t + 1 || d2.lo != t + 1 || d2.hi != t + 2) throw MoveError("x3 pair must occupy consecutive points");
    if (!zero_row(sys, a) || !zero_row(sys, b)) throw MoveError("x3 pair must be free of crossing and M data");
    if (on_cycle(sys, a) || on_cycle(sys, b)) throw MoveError("x3 pair must lie on the immersed arc");
    const int n = sys.n(eye);
    System out = sys;
    int occupant = -1;
    for (int d : out.eye_discs(eye, d1.kind))
        if (d != a && out.discs[d].touches(t + 2)) occupant = d;
    const bool arcs = eye_has_arcs(out, eye);
    if (occupant >= 0) {
        Disc& o = out.discs[occupant];
        if (o.lo == t + 2) o.lo = t;
        else o.hi = t;
        if (o.lo > o.hi) std::swap(o.lo, o.hi);
        if (arcs) {
            o.garc = arc::move_endpoint(*o.garc, t + 2, t, 2 * n + 1);
            o.rarc = arc::move_endpoint(*o.rarc, t + 2, t, 2 * n + 1);
        }
    }
    out.remove_disc(out.require(first));
    out.remove_disc(out.require(second));
    if (arcs) map_eye_arcs(out, eye, [&](const arc::DiagramArc& x) { return arc::remove_pair_after(x, t, 2 * n + 1); });
    shift_points_after(out, eye, t + 2, -2);
    out.eyes[eye - 1] = n - 1;
    out.canonicalize();
    return out;
}

System saddle(const System& sys, int eye) {
    check_eye(sys, eye);
    auto dec = cycle_decomposition(sys, eye);
    const int u = dec.path.points.back();
    PathOrder po = path_order(sys, eye);
    System out = sys;
    const int n = out.n(eye);
    const bool arcs = eye_has_arcs(out, eye);
    if (arcs) map_eye_arcs(out, eye, [&](const arc::DiagramArc& a) { return arc::insert_pair_after(a, u, 2 * n + 1); });
    shift_points_after(out, eye, u, 2);
    std::string s = out.fresh_pair_suffix();
    int fD = out.add_disc(new_disc("f" + s, Kind::F, eye, u, u + 1, arcs));
    int wD = out.add_disc(new_disc("w" + s, Kind::W, eye, u + 1, u + 2, arcs));
    const int np = static_cast<int>(po.w.size());
    if (np > 0) {
        const int wl = po.w[np - 1];
        for (int j = 0; j < np; ++j) {
            int v = sys.m[po.f[j]][wl] ^ (j > 0 ? sys.m[po.f[j - 1]][wl] : 0);
            sym_set(out.m, po.f[j], wD, v & 1);
        }
        sym_set(out.m, fD, wD, sys.m[po.f[np - 1]][wl] & 1);
    }
    out.eyes[eye - 1] = n + 1;
    out.canonicalize();
    return out;
}

System spin(const System& sys, int eye, int i, int j, const std::vector<std::string>& w_order) {
    check_eye(sys, eye);
    const int n = sys.n(eye);
    if (i == j) throw MoveError("spin needs i != j");
    if (i < 1 || j < 1 || i > n || j > n) throw MoveError("spin indices out of range");
    auto sw = k_switch(sys, eye, w_order);
    System out = std::move(sw.first);
    const SwitchInfo info = std::move(sw.second);
    const int k = info.k();
    // F-reordering numbering: switch-out discs by rank, then the rest in w_order.
    std::vector<std::string> renum = info.switch_out;
    for (const auto& id : info.w_order)
        if (std::find(renum.begin(), renum.end(), id) == renum.end()) renum.push_back(id);
    auto apply_z = [&](int target, int partner) {
        const std::string& tid = info.switch_discs[target - 1];
        const int wx = sys.require(renum[partner - 1]);
        int t = out.require(tid);
        for (int f : sys.eye_discs(eye, Kind::F)) {
            if (!(sys.shared_corners(f, wx) & 1)) continue;
            int fo = out.require(sys.discs[f].id);
            sym_set(out.m, t, fo, out.m[t][fo] ^ 1);
        }
        hom::toggle(out.discs[t].h2, hom::linking_label(renum[partner - 1]));
    };
    if (k >= i) apply_z(i, j);
    if (k >= j) apply_z(j, i);
    if (k > i) apply_z(i + 1, j);
    if (k > j) apply_z(j + 1, i);
    return out;
}

System apply(const System& sys, const MoveRecord& m) {
    auto surface_of = [&](MoveKind k) {
        return (k == MoveKind::GSlide || k == MoveKind::GRotate) ? Surface::G : Surface::R;
    };
    switch (m.kind) {
        case MoveKind::GSlide:
        case MoveKind::RSlide:
            return disc_slide(sys, m.get("mover"), m.get("over"), surface_of(m.kind), m.get_int("twist", 0),
                              m.get_int("sign", 1), side_of_path(m.get("path", "P0")));
        case MoveKind::GRotate:
        case MoveKind::RRotate: {
            const Disc& d = sys.disc(m.get("disc"));
            return rotate(sys, m.get("disc"), surface_of(m.kind), m.get_int("corner", d.lo), m.get_int("sign", 1));
        }
        case MoveKind::CliffordAdd:
            return clifford_add(sys, m.get("target"), m.get("source"), m.get_int("count", 1));
        case MoveKind::SphereSlide:
            return sphere_slide(sys, m.get("mover"), m.get("over"));
        case MoveKind::KSwitch:
            return k_switch(sys, m.get_int("eye", 1), split_list(m.get("order", ""))).first;
        case MoveKind::Birth:
            return birth(sys, m.get_int("eye", 1));
        case MoveKind::Death:
            return death(sys, m.get_int("eye", 1), m.get("f"), m.get("w"));
        case MoveKind::X3Plus:
            return x3_insert(sys, m.get_int("eye", 1), m.get_int("at", 0));
        case MoveKind::X3Minus:
            return x3_remove(sys, m.get_int("eye", 1), m.get("first"), m.get("second"));
        case MoveKind::Saddle:
            return saddle(sys, m.get_int("eye", 1));
        case MoveKind::Spin:
            return spin(sys, m.get_int("eye", 1), m.get_int("i", 1), m.get_int("j", 2), split_list(m.get("order", "")));
        case MoveKind::Compress: {
            std::string s = m.get("surface");
            if (s != "g" && s != "r") throw MoveError("surface must be g or r");
            return compress(sys, s == "g" ? Surface::G : Surface::R, m.get("a"), m.get("b"), m.get_int("times", 1));
        }
    }
    throw MoveError("unhandled move");
}

System apply(const System& sys, const Script& s) {
    System cur = sys;
    for (const auto& m : s) cur = apply(cur, m);
    return cur;
}

MoveRecord inverse_move(const System& before, const MoveRecord& m) {
    MoveRecord inv = m;
    switch (m.kind) {
        case MoveKind::GSlide:
        case MoveKind::RSlide:
        case MoveKind::GRotate:
        case MoveKind::RRotate:
            inv.set("sign", -m.get_int("sign", 1));
            return inv;
        case MoveKind::CliffordAdd:
        case MoveKind::SphereSlide:
            return inv;
        case MoveKind::Birth: {
            std::string s = before.fresh_pair_suffix();
            MoveRecord d{MoveKind::Death, {}};
            d.set("eye", m.get_int("eye", 1)).set("f", "f" + s).set("w", "w" + s);
            return d;
        }
        case MoveKind::X3Plus: {
            std::string s = before.fresh_pair_suffix();
            int t = m.get_int("at", 0);
            MoveRecord d{MoveKind::X3Minus, {}};
            d.set("eye", m.get_int("eye", 1));
            d.set("first", (t % 2 == 0 ? "f" : "w") + s).set("second", (t % 2 == 0 ? "w" : "f") + s);
            return d;
        }
        case MoveKind::Death: {
            MoveRecord b{MoveKind::Birth, {}};
            b.set("eye", m.get_int("eye", 1));
            return b;
        }
        case MoveKind::X3Minus: {
            MoveRecord b{MoveKind::X3Plus, {}};
            const Disc& a = before.disc(m.get("first"));
            const Disc& c = before.disc(m.get("second"));
            b.set("eye", m.get_int("eye", 1)).set("at", std::min(a.lo, c.lo));
            return b;
        }
        default:
            throw MoveError(verb(m.kind) + " has no inverse move");
    }
}

}  // namespace fw
