#include "fw/system.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace fw {

std::string to_string(Position p) {
    switch (p) {
        case Position::EA: return "EA";
        case Position::IA: return "IA";
        case Position::REA: return "R-EA";
        case Position::GEA: return "G-EA";
        case Position::FingerFirstGeneral: return "FingerFirstGeneral";
    }
    return "?";
}

int System::find(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (discs[i].id == id) return i;
    return -1;
}

int System::require(const std::string& id) const {
    int i = find(id);
    if (i < 0) throw SystemError("unknown disc '" + id + "'");
    return i;
}

std::vector<int> System::eye_discs(int eye) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (on_eye(i, eye)) out.push_back(i);
    return out;
}

std::vector<int> System::eye_discs(int eye, Kind k) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (on_eye(i, eye) && discs[i].kind == k) out.push_back(i);
    return out;
}

int System::shared_corners(int a, int b) const {
    const Disc& x = discs[a];
    const Disc& y = discs[b];
    if (x.reye != y.reye || x.geye != y.geye) return 0;
    return static_cast<int>(y.touches(x.lo)) + static_cast<int>(y.touches(x.hi));
}

bool System::geometric() const {
    bool any = false;
    for (const auto& d : discs) {
        if (d.cross()) continue;
        if (!d.garc || !d.rarc) return false;
        any = true;
    }
    return any;
}

int System::add_disc(Disc d) {
    if (find(d.id) >= 0) throw SystemError("duplicate disc id '" + d.id + "'");
    discs.push_back(std::move(d));
    for (Matrix* mat : {&m, &xg, &xr}) {
        for (auto& row : *mat) row.push_back(0);
        mat->push_back(std::vector<int>(discs.size(), 0));
    }
    return size() - 1;
}

void System::remove_disc(int d) {
    discs.erase(discs.begin() + d);
    for (Matrix* mat : {&m, &xg, &xr}) {
        mat->erase(mat->begin() + d);
        for (auto& row : *mat) row.erase(row.begin() + d);
    }
}

void System::canonicalize() {
    std::vector<int> idx(discs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return discs[a].id < discs[b].id; });
    std::vector<Disc> nd;
    for (int i : idx) nd.push_back(discs[i]);
    auto permute = [&](const Matrix& mat) {
        Matrix out(idx.size(), std::vector<int>(idx.size(), 0));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) out[a][b] = mat[idx[a]][idx[b]];
        return out;
    };
    m = permute(m);
    xg = permute(xg);
    xr = permute(xr);
    discs = std::move(nd);
}

std::string System::fresh_id(const std::string& prefix) const {
    for (int k = 1;; ++k) {
        std::string id = prefix + std::to_string(k);
        if (find(id) < 0) return id;
    }
}

std::string System::fresh_pair_suffix() const {
    for (int k = 1;; ++k) {
        std::string s = std::to_string(k);
        if (find("f" + s) < 0 && find("w" + s) < 0) return s;
    }
}

namespace {

void add(std::vector<Violation>& v, std::string field, std::string msg) {
    v.push_back({std::move(field), std::move(msg)});
}

}  // namespace

std::vector<Violation> validate(const System& sys) {
    std::vector<Violation> v;
    const int D = sys.size();
    for (const Matrix* mat : {&sys.m, &sys.xg, &sys.xr}) {
        if (static_cast<int>(mat->size()) != D) {
            add(v, "matrix", "matrix size does not match disc count");
            return v;
        }
        for (const auto& row : *mat)
            if (static_cast<int>(row.size()) != D) {
                add(v, "matrix", "matrix row size does not match disc count");
                return v;
            }
    }
    std::set<std::string> ids;
    for (const auto& d : sys.discs) {
        if (!ids.insert(d.id).second) add(v, "id", "duplicate disc id " + d.id);
        if (d.id.empty() || d.id.find_first_of(" \t=,") != std::string::npos)
            add(v, "id", "bad disc id '" + d.id + "'");
        if (d.reye < 1 || d.reye > sys.eye_count() || d.geye < 1 || d.geye > sys.eye_count())
            add(v, d.id + ".eye", "eye index out of range");
        if (d.lo >= d.hi || d.lo < 0) add(v, d.id + ".corners", "corners must be distinct and ordered");
        if ((d.lo + d.hi) % 2 == 0) add(v, d.id + ".corners", "corners must pair a positive with a negative point");
        if ((d.germ_p + d.germ_q) % 2 != 0) add(v, d.id + ".germ", "p+q even violated");
        if (d.cross() && (d.garc || d.rarc)) add(v, d.id + ".arc", "cross discs carry no arcs");
        if (d.garc.has_value() != d.rarc.has_value()) add(v, d.id + ".arc", "arcs must be given on both surfaces");
    }
    if (!v.empty()) return v;

    for (int a = 0; a < D; ++a) {
        if (sys.m[a][a] || sys.xg[a][a] || sys.xr[a][a]) add(v, sys.discs[a].id, "nonzero diagonal entry");
        for (int b = 0; b < D; ++b) {
            const Disc& x = sys.discs[a];
            const Disc& y = sys.discs[b];
            if (sys.m[a][b] != sys.m[b][a] || sys.xg[a][b] != sys.xg[b][a] || sys.xr[a][b] != sys.xr[b][a])
                add(v, x.id + "," + y.id, "matrices must be symmetric");
            if (a >= b) continue;
            if (sys.m[a][b] != 0 && sys.m[a][b] != 1) add(v, "m " + x.id + " " + y.id, "M entries are parities");
            if (sys.xg[a][b] < 0 || sys.xr[a][b] < 0) add(v, "x " + x.id + " " + y.id, "negative crossing count");
            if (x.kind == y.kind && (sys.m[a][b] || sys.xg[a][b] || sys.xr[a][b]))
                add(v, x.id + "," + y.id, "discs of the same kind are disjoint");
            if (sys.xg[a][b] && x.geye != y.geye) add(v, "xg " + x.id + " " + y.id, "arcs lie on different G spheres");
            if (sys.xr[a][b] && x.reye != y.reye) add(v, "xr " + x.id + " " + y.id, "arcs lie on different R spheres");
            if (x.cross() != y.cross() && (sys.xg[a][b] || sys.xr[a][b]))
                add(v, "x " + x.id + " " + y.id, "cross discs do not cross eye discs");
        }
    }

    for (int e = 1; e <= sys.eye_count(); ++e) {
        const int n = sys.n(e);
        const std::string tag = "eye " + std::to_string(e);
        if (n < 0) {
            add(v, tag, "negative disc count");
            continue;
        }
        auto fs = sys.eye_discs(e, Kind::F);
        auto ws = sys.eye_discs(e, Kind::W);
        if (static_cast<int>(fs.size()) != n || static_cast<int>(ws.size()) != n) {
            add(v, tag, "eye must carry n finger and n Whitney discs");
            continue;
        }
        std::vector<int> fcount(2 * n + 1, 0), wcount(2 * n + 1, 0);
        bool range_ok = true;
        for (int d : sys.eye_discs(e)) {
            const Disc& x = sys.discs[d];
            if (x.hi > 2 * n) {
                add(v, x.id + ".corners", "corner outside the eye's points");
                range_ok = false;
                continue;
            }
            auto& cnt = x.kind == Kind::F ? fcount : wcount;
            ++cnt[x.lo];
            ++cnt[x.hi];
        }
        if (!range_ok) continue;
        if (wcount[0] != 0) add(v, tag, "a_0 must be the point left unpaired by W");
        int f_unpaired = 0;
        for (int p = 0; p <= 2 * n; ++p) {
            if (fcount[p] > 1 || wcount[p] > 1) add(v, tag, "point " + std::to_string(p) + " used twice by one family");
            if (fcount[p] == 0) ++f_unpaired;
            if (p > 0 && wcount[p] == 0) add(v, tag, "point " + std::to_string(p) + " not cancelled by W");
        }
        if (f_unpaired != 1) add(v, tag, "F must cancel all but one point");
        if (!v.empty()) continue;
        auto dec = cycle_decomposition(sys, e);
        for (const auto& c : dec.cycles)
            for (int d : c.discs) {
                bool inert = true;
                for (int b = 0; b < D; ++b)
                    if (sys.m[d][b] || sys.xg[d][b] || sys.xr[d][b]) inert = false;
                if (!inert) add(v, sys.discs[d].id, "discs on boundary cycles carry no crossing or M data");
            }
        for (int d : sys.eye_discs(e)) {
            const Disc& x = sys.discs[d];
            if (!x.garc) continue;
            for (const auto* a : {&*x.garc, &*x.rarc}) {
                try {
                    arc::check_arc(*a, 2 * n + 1);
                    if (std::minmax(a->start, a->end) != std::minmax(x.lo, x.hi))
                        add(v, x.id + ".arc", "arc endpoints differ from corners");
                    else if (!arc::is_reduced(*a, 2 * n + 1))
                        add(v, x.id + ".arc", "arc not in minimal position");
                } catch (const arc::ArcError& err) {
                    add(v, x.id + ".arc", err.what());
                }
            }
        }
    }

    std::map<std::pair<int, int>, std::vector<int>> lists;
    for (int d = 0; d < D; ++d)
        if (sys.discs[d].cross()) lists[{sys.discs[d].reye, sys.discs[d].geye}].push_back(d);
    for (const auto& [key, ds] : lists) {
        const std::string tag = "cross " + std::to_string(key.first) + "," + std::to_string(key.second);
        int nf = 0;
        for (int d : ds) nf += sys.discs[d].kind == Kind::F;
        if (nf * 2 != static_cast<int>(ds.size())) {
            add(v, tag, "cross list needs equal finger and Whitney counts");
            continue;
        }
        std::vector<int> fcount(2 * nf, 0), wcount(2 * nf, 0);
        bool ok = true;
        for (int d : ds) {
            const Disc& x = sys.discs[d];
            if (x.hi >= 2 * nf) {
                ok = false;
                continue;
            }
            auto& cnt = x.kind == Kind::F ? fcount : wcount;
            ++cnt[x.lo];
            ++cnt[x.hi];
        }
        if (!ok) {
            add(v, tag, "cross corner out of range");
            continue;
        }
        for (int p = 0; p < 2 * nf; ++p)
            if (fcount[p] != 1 || wcount[p] != 1) add(v, tag, "cross point " + std::to_string(p) + " not paired once by each family");
    }
    return v;
}

void require_valid(const System& sys) {
    auto v = validate(sys);
    if (v.empty()) return;
    std::string msg = "invalid system:";
    for (const auto& x : v) msg += " [" + x.field + ": " + x.message + "]";
    throw SystemError(msg);
}

System empty_system(int eye_count) {
    System s;
    s.eyes.assign(eye_count, 0);
    return s;
}

System standard_system(int n) {
    System s = empty_system(1);
    s.eyes[0] = n;
    for (int p = 1; p <= n; ++p) {
        Disc f;
        f.id = "f" + std::to_string(p);
        f.kind = Kind::F;
        f.lo = 2 * p - 2;
        f.hi = 2 * p - 1;
        f.garc = arc::standard_arc(f.lo, f.hi);
        f.rarc = f.garc;
        s.add_disc(f);
        Disc w;
        w.id = "w" + std::to_string(p);
        w.kind = Kind::W;
        w.lo = 2 * p - 1;
        w.hi = 2 * p;
        w.garc = arc::standard_arc(w.lo, w.hi);
        w.rarc = w.garc;
        s.add_disc(w);
    }
    s.canonicalize();
    return s;
}

System key_example() {
    System s = standard_system(1);
    s.m[s.require("f1")][s.require("w1")] = 1;
    s.m[s.require("w1")][s.require("f1")] = 1;
    return s;
}

System embed_in_eye(const System& one_eye, int eye, int eye_count) {
    if (one_eye.eye_count() != 1) throw SystemError("embed_in_eye needs a one-eye system");
    System s = one_eye;
    s.eyes.assign(eye_count, 0);
    s.eyes[eye - 1] = one_eye.n(1);
    for (auto& d : s.discs) d.reye = d.geye = eye;
    return s;
}

System pad_with_trivial_eyes(const System& sys, int before, int after) {
    System s = sys;
    s.eyes.insert(s.eyes.begin(), before, 0);
    s.eyes.insert(s.eyes.end(), after, 0);
    for (auto& d : s.discs) {
        d.reye += before;
        d.geye += before;
    }
    return s;
}

Decomposition cycle_decomposition(const System& sys, int eye, Surface) {
    const int n = sys.n(eye);
    const int P = 2 * n + 1;
    std::vector<int> fat(P, -1), wat(P, -1);
    for (int d : sys.eye_discs(eye)) {
        auto& at = sys.discs[d].kind == Kind::F ? fat : wat;
        for (int p : {sys.discs[d].lo, sys.discs[d].hi}) {
            if (p >= P || at[p] >= 0) throw SystemError("incomplete pairing on eye " + std::to_string(eye));
            at[p] = d;
        }
    }
    std::vector<bool> seen(P, false);
    Decomposition dec;
    int p = 0;
    bool use_f = true;
    dec.path.points.push_back(0);
    seen[0] = true;
    while (true) {
        int d = use_f ? fat[p] : wat[p];
        if (d < 0) break;
        p = sys.discs[d].other_corner(p);
        dec.path.discs.push_back(d);
        dec.path.points.push_back(p);
        seen[p] = true;
        use_f = !use_f;
    }
    for (int s = 0; s < P; ++s) {
        if (seen[s]) continue;
        if (fat[s] < 0 || wat[s] < 0) throw SystemError("incomplete pairing on eye " + std::to_string(eye));
        Component c;
        c.cycle = true;
        int q = s;
        bool f_next = true;
        do {
            seen[q] = true;
            c.points.push_back(q);
            int d = f_next ? fat[q] : wat[q];
            c.discs.push_back(d);
            q = sys.discs[d].other_corner(q);
            f_next = !f_next;
        } while (q != s);
        dec.cycles.push_back(std::move(c));
    }
    return dec;
}

bool is_ia(const System& sys, int eye) { return cycle_decomposition(sys, eye).cycles.empty(); }

std::vector<Position> classify_position(const System& sys) {
    std::vector<Position> out;
    for (int e = 1; e <= sys.eye_count(); ++e) {
        if (!is_ia(sys, e)) {
            out.push_back(Position::FingerFirstGeneral);
            continue;
        }
        bool g0 = true, r0 = true;
        auto ds = sys.eye_discs(e);
        for (int a : ds)
            for (int b : ds) {
                if (sys.xg[a][b]) g0 = false;
                if (sys.xr[a][b]) r0 = false;
            }
        out.push_back(g0 && r0 ? Position::EA : r0 ? Position::REA : g0 ? Position::GEA : Position::IA);
    }
    return out;
}

PathOrder path_order(const System& sys, int eye) {
    auto dec = cycle_decomposition(sys, eye);
    PathOrder po;
    for (std::size_t i = 0; i < dec.path.discs.size(); ++i)
        (i % 2 == 0 ? po.f : po.w).push_back(dec.path.discs[i]);
    return po;
}

void relabel_points(System& sys, int eye, const std::map<int, int>& perm) {
    auto map_pt = [&](int p) {
        auto it = perm.find(p);
        return it == perm.end() ? p : it->second;
    };
    for (int d : sys.eye_discs(eye)) {
        Disc& x = sys.discs[d];
        int a = map_pt(x.lo), b = map_pt(x.hi);
        x.lo = std::min(a, b);
        x.hi = std::max(a, b);
    }
}

System swap_roles(const System& sys) {
    System s = sys;
    for (auto& d : s.discs) {
        d.kind = other(d.kind);
        d.garc.reset();
        d.rarc.reset();
    }
    for (int e = 1; e <= s.eye_count(); ++e) {
        if (s.n(e) == 0) continue;
        // The old F-unpaired point becomes a_0.
        std::vector<int> fcount(2 * s.n(e) + 1, 0);
        for (int d : sys.eye_discs(e, Kind::F)) {
            ++fcount[sys.discs[d].lo];
            ++fcount[sys.discs[d].hi];
        }
        int u = static_cast<int>(std::find(fcount.begin(), fcount.end(), 0) - fcount.begin());
        relabel_points(s, e, {{0, u}, {u, 0}});
    }
    return s;
}

namespace {

std::string kind_name(Kind k) { return k == Kind::F ? "F" : "W"; }

class Parser {
public:
    explicit Parser(const std::string& text) : in_(text) {}

    System run() {
        std::string line;
        int stage = 0;
        System sys;
        std::map<std::string, int> declared_eyes;
        struct Entry {
            std::string kind, a, b;
            int value;
            int line;
        };
        std::vector<Entry> entries;
        std::vector<std::pair<int, std::vector<std::string>>> h2s;
        std::vector<std::pair<int, std::vector<std::string>>> arcs;
        int eye_lines = 0;
        while (std::getline(in_, line)) {
            ++ln_;
            if (!line.empty() && line.back() == '\r') fail("CR line endings are not allowed");
            if (line.empty() || line[0] == '#') continue;
            auto tok = split(line);
            const std::string& head = tok[0];
            if (stage == 0) {
                if (tok.size() != 2 || head != "fwsys" || tok[1] != "v1") fail("expected header 'fwsys v1'");
                stage = 1;
            } else if (head == "eyes") {
                if (stage != 1 || tok.size() != 2) fail("misplaced 'eyes' line");
                int k = to_int(tok[1]);
                if (k < 0) fail("negative eye count");
                sys.eyes.assign(k, -1);
                stage = 2;
            } else if (head == "eye") {
                if (stage != 2 || tok.size() != 4 || tok[2] != "n") fail("expected 'eye <i> n <count>'");
                int i = to_int(tok[1]);
                if (i != eye_lines + 1 || i > sys.eye_count()) fail("eye lines must be numbered 1..k in order");
                sys.eyes[i - 1] = to_int(tok[3]);
                if (sys.eyes[i - 1] < 0) fail("negative disc count");
                ++eye_lines;
            } else if (head == "disc") {
                if (stage < 2 || stage > 3 || eye_lines != sys.eye_count()) fail("misplaced 'disc' line");
                stage = 3;
                sys_add(sys, parse_disc(tok));
            } else if (head == "xg" || head == "xr" || head == "m") {
                if (stage < 2) fail("matrix row before discs");
                int rank = head == "xg" ? 4 : head == "xr" ? 5 : 6;
                if (rank < stage) fail("sections must be ordered xg, xr, m");
                stage = rank;
                if (tok.size() != 4) fail("expected '" + head + " <id> <id> <value>'");
                entries.push_back({head, tok[1], tok[2], to_int(tok[3]), ln_});
            } else if (head == "h2") {
                if (stage < 2 || stage > 7) fail("misplaced 'h2' line");
                stage = 7;
                if (tok.size() < 3) fail("expected 'h2 <id> <generator>...'");
                h2s.push_back({ln_, tok});
            } else if (head == "arc") {
                if (stage < 2) fail("misplaced 'arc' line");
                stage = 8;
                if (tok.size() != 4 || (tok[2] != "g" && tok[2] != "r")) fail("expected 'arc <id> g|r <word>'");
                arcs.push_back({ln_, tok});
            } else {
                fail("unknown line kind '" + head + "'");
            }
        }
        if (stage == 0) fail("empty input");
        if (stage == 1) fail("missing 'eyes' line");
        if (eye_lines != sys.eye_count()) fail("missing eye lines");
        std::set<std::tuple<std::string, int, int>> seen;
        for (const auto& e : entries) {
            ln_ = e.line;
            int a = sys.find(e.a), b = sys.find(e.b);
            if (a < 0 || b < 0) fail("unknown disc in matrix row");
            if (a == b) fail("matrix row on the diagonal");
            if (!seen.insert({e.kind, std::min(a, b), std::max(a, b)}).second) fail("duplicate matrix row");
            Matrix& mat = e.kind == "m" ? sys.m : e.kind == "xg" ? sys.xg : sys.xr;
            mat[a][b] = mat[b][a] = e.value;
        }
        for (const auto& [l, tok] : h2s) {
            ln_ = l;
            int d = sys.find(tok[1]);
            if (d < 0) fail("unknown disc in h2 line");
            for (std::size_t i = 2; i < tok.size(); ++i)
                if (!sys.discs[d].h2.insert(tok[i]).second) fail("repeated generator");
        }
        for (const auto& [l, tok] : arcs) {
            ln_ = l;
            int d = sys.find(tok[1]);
            if (d < 0) fail("unknown disc in arc line");
            auto& slot = tok[2] == "g" ? sys.discs[d].garc : sys.discs[d].rarc;
            if (slot) fail("duplicate arc line");
            try {
                slot = arc::parse_arc(tok[3]);
            } catch (const arc::ArcError& err) {
                fail(err.what());
            }
        }
        sys.canonicalize();
        return sys;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw SystemError("line " + std::to_string(ln_) + ": " + msg);
    }

    static std::vector<std::string> split(const std::string& line) {
        std::istringstream is(line);
        std::vector<std::string> out;
        std::string t;
        while (is >> t) out.push_back(t);
        return out;
    }

    int to_int(const std::string& s) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) fail("bad integer '" + s + "'");
            return v;
        } catch (const std::logic_error&) {
            fail("bad integer '" + s + "'");
        }
    }

    std::pair<int, int> to_pair(const std::string& s) {
        auto c = s.find(',');
        if (c == std::string::npos) fail("expected a pair 'a,b'");
        return {to_int(s.substr(0, c)), to_int(s.substr(c + 1))};
    }

    Disc parse_disc(const std::vector<std::string>& tok) {
        if (tok.size() < 2) fail("disc line without id");
        Disc d;
        d.id = tok[1];
        std::map<std::string, std::string> kv;
        for (std::size_t i = 2; i < tok.size(); ++i) {
            auto eq = tok[i].find('=');
            if (eq == std::string::npos) fail("expected key=value, got '" + tok[i] + "'");
            if (!kv.emplace(tok[i].substr(0, eq), tok[i].substr(eq + 1)).second) fail("repeated key");
        }
        for (const char* key : {"kind", "reye", "geye", "gcorners", "rcorners", "germ"})
            if (!kv.count(key)) fail(std::string("disc missing '") + key + "'");
        if (kv.size() != 6) fail("unknown disc attribute");
        if (kv["kind"] == "F") d.kind = Kind::F;
        else if (kv["kind"] == "W") d.kind = Kind::W;
        else fail("kind must be F or W");
        d.reye = to_int(kv["reye"]);
        d.geye = to_int(kv["geye"]);
        auto gc = to_pair(kv["gcorners"]);
        auto rc = to_pair(kv["rcorners"]);
        if (std::minmax(gc.first, gc.second) != std::minmax(rc.first, rc.second))
            fail("gcorners and rcorners must name the same intersection points");
        if (gc.first == gc.second) fail("corners must be distinct");
        if ((gc.first + gc.second) % 2 == 0) fail("corners must have opposite signs");
        d.lo = std::min(gc.first, gc.second);
        d.hi = std::max(gc.first, gc.second);
        auto g = to_pair(kv["germ"]);
        d.germ_p = g.first;
        d.germ_q = g.second;
        return d;
    }

    void sys_add(System& sys, Disc d) {
        if (sys.find(d.id) >= 0) fail("duplicate disc id '" + d.id + "'");
        sys.add_disc(std::move(d));
    }

    std::istringstream in_;
    int ln_ = 0;
};

void reindex_a0(System& sys) {
    for (int e = 1; e <= sys.eye_count(); ++e) {
        const int P = 2 * sys.n(e) + 1;
        std::vector<int> wcount(P, 0);
        for (int d : sys.eye_discs(e, Kind::W)) {
            if (sys.discs[d].hi >= P) return;
            ++wcount[sys.discs[d].lo];
            ++wcount[sys.discs[d].hi];
        }
        if (wcount[0] == 0) continue;
        int u = -1;
        for (int p = 0; p < P; ++p)
            if (wcount[p] == 0) u = (u == -1 ? p : -2);
        if (u >= 0 && u % 2 == 0) {
            relabel_points(sys, e, {{0, u}, {u, 0}});
            for (int d : sys.eye_discs(e)) {
                sys.discs[d].garc.reset();
                sys.discs[d].rarc.reset();
            }
        }
    }
}

}  // namespace

std::string serialize(const System& sys) {
    System s = sys;
    s.canonicalize();
    std::ostringstream os;
    os << "fwsys v1\n";
    os << "eyes " << s.eye_count() << "\n";
    for (int e = 1; e <= s.eye_count(); ++e) os << "eye " << e << " n " << s.n(e) << "\n";
    for (const auto& d : s.discs)
        os << "disc " << d.id << " kind=" << kind_name(d.kind) << " reye=" << d.reye << " geye=" << d.geye
           << " gcorners=" << d.lo << "," << d.hi << " rcorners=" << d.lo << "," << d.hi << " germ=" << d.germ_p
           << "," << d.germ_q << "\n";
    const int D = s.size();
    for (const char* name : {"xg", "xr", "m"}) {
        const Matrix& mat = std::string(name) == "xg" ? s.xg : std::string(name) == "xr" ? s.xr : s.m;
        for (int a = 0; a < D; ++a)
            for (int b = a + 1; b < D; ++b)
                if (s.discs[a].kind != s.discs[b].kind)
                    os << name << " " << s.discs[a].id << " " << s.discs[b].id << " " << mat[a][b] << "\n";
    }
    for (const auto& d : s.discs) {
        if (d.h2.empty()) continue;
        os << "h2 " << d.id;
        for (const auto& g : d.h2) os << " " << g;
        os << "\n";
    }
    for (const auto& d : s.discs) {
        if (d.garc) os << "arc " << d.id << " g " << arc::to_string(*d.garc) << "\n";
        if (d.rarc) os << "arc " << d.id << " r " << arc::to_string(*d.rarc) << "\n";
    }
    return os.str();
}

System parse_system(const std::string& text) {
    System s = Parser(text).run();
    reindex_a0(s);
    return s;
}

System load_system(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SystemError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

void save_system(const System& sys, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SystemError("cannot write " + path);
    out << serialize(sys);
}

std::string hash_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace fw
