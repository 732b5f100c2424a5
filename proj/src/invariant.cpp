#include "fw/invariant.hpp"

#include <map>
#include <sstream>

namespace fw {

int InvariantResult::total() const {
    int t = 0;
    for (int b : bits) t ^= b;
    return t;
}

std::string InvariantResult::bits_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) s += (i ? "," : "") + std::to_string(bits[i]);
    return s + ")";
}

int hat_I_eye(const System& sys, int eye) {
    if (!is_ia(sys, eye)) throw SystemError("eye " + std::to_string(eye) + " is not IA");
    PathOrder po = path_order(sys, eye);
    int s = 0;
    for (std::size_t p = 0; p < po.f.size(); ++p)
        for (std::size_t q = p; q < po.w.size(); ++q) s ^= sys.m[po.f[p]][po.w[q]] & 1;
    return s;
}

std::vector<int> hat_I(const System& sys) {
    std::vector<int> out;
    for (int e = 1; e <= sys.eye_count(); ++e) out.push_back(hat_I_eye(sys, e));
    return out;
}

System switch_all(const System& sys, const Orders& orders, Script* script) {
    System cur = sys;
    for (int e = 1; e <= sys.eye_count(); ++e) {
        if (is_ia(cur, e)) continue;
        std::vector<std::string> order;
        if (e - 1 < static_cast<int>(orders.size())) order = orders[e - 1];
        if (order.empty()) order = default_w_order(cur, e);
        MoveRecord m{MoveKind::KSwitch, {}};
        m.set("eye", e).set("order", join_list(order));
        cur = apply(cur, m);
        if (script) script->push_back(m);
    }
    return cur;
}

namespace {

void clear_parities(System& cur, Script& script, int eye, Surface s) {
    PathOrder po = path_order(cur, eye);
    const int n = static_cast<int>(po.w.size());
    const MoveKind slide = s == Surface::G ? MoveKind::GSlide : MoveKind::RSlide;
    const MoveKind rot = s == Surface::G ? MoveKind::RRotate : MoveKind::GRotate;
    for (int q = 0; q < n; ++q) {
        for (int p = 0; p < n; ++p) {
            if (!(cur.x(s)[po.f[p]][po.w[q]] & 1)) continue;
            MoveRecord m;
            if (p != q) {
                m.kind = slide;
                m.set("mover", cur.discs[po.w[q]].id).set("over", cur.discs[po.w[p]].id).set("twist", 0).set("path", "P0");
            } else {
                m.kind = rot;
                m.set("disc", cur.discs[po.w[q]].id).set("corner", cur.discs[po.w[q]].lo).set("sign", 1);
            }
            // Ids are stable across these moves, so positions stay valid.
            cur = apply(cur, m);
            script.push_back(m);
        }
        for (int p = 0; p < n; ++p)
            if (cur.x(s)[po.f[p]][po.w[q]] & 1) throw SystemError("IA to EA elimination left an odd crossing");
    }
    for (int f : cur.eye_discs(eye, Kind::F))
        for (int w : cur.eye_discs(eye, Kind::W)) {
            int x = cur.x(s)[f][w];
            if (x < 2) continue;
            MoveRecord m{MoveKind::Compress, {}};
            m.set("surface", s == Surface::G ? "g" : "r").set("a", cur.discs[f].id).set("b", cur.discs[w].id).set("times", x / 2);
            cur = apply(cur, m);
            script.push_back(m);
        }
}

}  // namespace

std::pair<System, Script> slide_to_EA(const System& sys) {
    System cur = sys;
    Script script;
    for (int e = 1; e <= cur.eye_count(); ++e) {
        if (!is_ia(cur, e)) throw SystemError("slide_to_EA needs IA eyes; eye " + std::to_string(e) + " is not");
        if (cur.n(e) == 0) continue;
        clear_parities(cur, script, e, Surface::G);
        clear_parities(cur, script, e, Surface::R);
    }
    return {cur, script};
}

InvariantResult compute_I(const System& sys, const Orders& orders) {
    InvariantResult r;
    for (int e = 1; e <= sys.eye_count(); ++e) {
        std::vector<std::string> o;
        if (e - 1 < static_cast<int>(orders.size())) o = orders[e - 1];
        if (o.empty()) o = default_w_order(sys, e);
        r.orders.push_back(o);
    }
    System sw = switch_all(sys, r.orders, &r.script);
    auto [ea, script] = slide_to_EA(sw);
    r.script.insert(r.script.end(), script.begin(), script.end());
    r.bits = hat_I(ea);
    return r;
}

System concatenate(const System& a, const System& b) {
    if (a.eye_count() != b.eye_count()) throw SystemError("concatenation needs equal eye counts");
    if (b.discs.empty()) return a;
    if (a.discs.empty()) return b;
    System out = empty_system(a.eye_count());
    for (int e = 1; e <= a.eye_count(); ++e) out.eyes[e - 1] = a.n(e) + b.n(e);
    std::map<int, int> u_b;
    for (int e = 1; e <= b.eye_count(); ++e) {
        auto dec = cycle_decomposition(b, e);
        u_b[e] = dec.path.points.back();
    }
    std::map<std::pair<int, int>, int> cross_b;
    for (const auto& d : b.discs)
        if (d.cross()) cross_b[{d.reye, d.geye}] += 2 * (d.kind == Kind::F);
    std::vector<int> idx_b, idx_a;
    for (const auto& d : b.discs) {
        Disc x = d;
        x.id = "b" + d.id;
        x.garc.reset();
        x.rarc.reset();
        idx_b.push_back(out.add_disc(x));
    }
    for (const auto& d : a.discs) {
        Disc x = d;
        x.id = "a" + d.id;
        x.garc.reset();
        x.rarc.reset();
        if (d.cross()) {
            int off = cross_b[{d.reye, d.geye}];
            x.lo += off;
            x.hi += off;
        } else {
            const int nb = b.n(d.reye);
            auto mp = [&](int p) { return p == 0 ? u_b[d.reye] : 2 * nb + p; };
            int l = mp(d.lo), h = mp(d.hi);
            x.lo = std::min(l, h);
            x.hi = std::max(l, h);
        }
        idx_a.push_back(out.add_disc(x));
    }
    auto copy = [&](const System& src, const std::vector<int>& idx) {
        for (int i = 0; i < src.size(); ++i)
            for (int j = 0; j < src.size(); ++j) {
                out.m[idx[i]][idx[j]] = src.m[i][j];
                out.xg[idx[i]][idx[j]] = src.xg[i][j];
                out.xr[idx[i]][idx[j]] = src.xr[i][j];
            }
    };
    copy(b, idx_b);
    copy(a, idx_a);
    out.canonicalize();
    return out;
}

ParityReport parity_hypotheses(const System& a0, const System& b0) {
    System a = a0, b = b0;
    a.canonicalize();
    b.canonicalize();
    if (a.eyes != b.eyes || a.size() != b.size()) return {false, "systems are not similarly matched"};
    for (int i = 0; i < a.size(); ++i) {
        const Disc& x = a.discs[i];
        const Disc& y = b.discs[i];
        if (x.id != y.id || x.kind != y.kind || x.lo != y.lo || x.hi != y.hi || x.reye != y.reye || x.geye != y.geye)
            return {false, "corners differ at " + x.id};
    }
    for (int e = 1; e <= a.eye_count(); ++e)
        if (!is_ia(a, e) || !is_ia(b, e)) return {false, "eye " + std::to_string(e) + " is not IA"};
    if (hat_I(a) != hat_I(b)) return {false, "hat I differs"};
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            if ((a.xg[i][j] - b.xg[i][j]) % 2) return {false, "xg parity differs at " + a.discs[i].id + "," + a.discs[j].id};
            if ((a.xr[i][j] - b.xr[i][j]) % 2) return {false, "xr parity differs at " + a.discs[i].id + "," + a.discs[j].id};
        }
    return {true, "hypotheses hold"};
}

std::string report(const System& sys, const InvariantResult& r, bool with_script) {
    std::ostringstream os;
    os << "input " << hash_hex(serialize(sys)) << "\n";
    for (std::size_t e = 0; e < r.orders.size(); ++e) os << "order eye " << e + 1 << " " << join_list(r.orders[e]) << "\n";
    os << "I = " << r.bits_string() << "\n";
    os << "total " << r.total() << "\n";
    if (with_script) {
        os << "script " << r.script.size() << "\n";
        for (const auto& m : r.script) os << "  " << to_string(m) << "\n";
    }
    return os.str();
}

}  // namespace fw
