#include "fw/homology.hpp"

#include <algorithm>
#include <map>

namespace fw::hom {

H2Class add(const H2Class& a, const H2Class& b) {
    H2Class out = a;
    for (const auto& g : b) toggle(out, g);
    return out;
}

void toggle(H2Class& a, const std::string& gen) {
    if (!a.erase(gen)) a.insert(gen);
}

std::string clifford_label(const std::string& disc_id) { return "C:" + disc_id; }
std::string sphere_label(const std::string& disc_id) { return "S:" + disc_id; }
std::string linking_label(const std::string& disc_id) { return "z:" + disc_id; }

int pairing(const System& sys, const std::string& gen, int disc) {
    auto colon = gen.find(':');
    if (colon == std::string::npos) throw SystemError("generator '" + gen + "' needs a standard-form reference");
    int src = sys.find(gen.substr(colon + 1));
    if (src < 0) return 0;
    return sys.shared_corners(src, disc) % 2;
}

int pairing(const System& sys, const H2Class& u, int disc) {
    int s = 0;
    for (const auto& g : u) s ^= pairing(sys, g, disc);
    return s;
}

H2Class clifford_class(const System& sys, int disc) { return {clifford_label(sys.discs[disc].id)}; }

GeneratorBasis basis(const System& sys) {
    GeneratorBasis b;
    for (int e = 1; e <= sys.eye_count(); ++e)
        for (int j = 1; j <= sys.n(e); ++j) {
            b.labels.push_back("R" + std::to_string(e) + "." + std::to_string(j));
            b.labels.push_back("S" + std::to_string(e) + "." + std::to_string(j));
        }
    for (const auto& d : sys.discs)
        if (d.cross()) {
            b.labels.push_back(clifford_label(d.id));
            if (d.kind == Kind::F) b.labels.push_back("U:" + d.id);
        }
    return b;
}

int CliffordMatrix::trace() const {
    int t = 0;
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = 0; j < sources.size(); ++j)
            if (targets[i] == sources[j]) t ^= n[i][j] & 1;
    return t;
}

std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> rows, int unknowns) {
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < unknowns && r < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] & 1) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i][c] & 1))
                for (int k = 0; k <= unknowns; ++k) rows[i][k] ^= rows[r][k];
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][unknowns] & 1) return std::nullopt;
    std::vector<int> x(unknowns, 0);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = rows[i][unknowns] & 1;
    return x;
}

namespace {

bool same_skeleton(const System& a, const System& b, std::string& why) {
    if (a.eyes != b.eyes) {
        why = "eye structure differs";
        return false;
    }
    if (a.size() != b.size()) {
        why = "disc sets differ";
        return false;
    }
    for (int i = 0; i < a.size(); ++i) {
        const Disc& x = a.discs[i];
        const Disc& y = b.discs[i];
        if (x.id != y.id || x.kind != y.kind || x.reye != y.reye || x.geye != y.geye || x.lo != y.lo || x.hi != y.hi ||
            x.germ_p != y.germ_p || x.germ_q != y.germ_q) {
            why = "disc " + x.id + " is not similarly matched";
            return false;
        }
    }
    if (a.xg != b.xg || a.xr != b.xr) {
        why = "boundary arcs differ";
        return false;
    }
    return true;
}

}  // namespace

CliffordWitness clifford_equivalent(const System& a0, const System& b0) {
    System a = a0, b = b0;
    a.canonicalize();
    b.canonicalize();
    CliffordWitness out;
    if (!same_skeleton(a, b, out.reason)) return out;
    const int D = a.size();
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            bool same_eye = a.on_eye(i, a.discs[j].reye) && a.on_eye(j, a.discs[i].reye);
            if (!same_eye && (a.m[i][j] & 1) != (b.m[i][j] & 1)) {
                out.reason = "M differs outside a single eye at " + a.discs[i].id + "," + a.discs[j].id;
                return out;
            }
        }
    for (int e = 1; e <= a.eye_count(); ++e) {
        auto ws = a.eye_discs(e, Kind::W);
        auto fs = a.eye_discs(e, Kind::F);
        const int nw = static_cast<int>(ws.size());
        const int nf = static_cast<int>(fs.size());
        const int unknowns = nw * nw + nf * nf;
        auto nvar = [&](int t, int s) { return t * nw + s; };
        auto mvar = [&](int t, int s) { return nw * nw + t * nf + s; };
        std::vector<std::vector<int>> rows;
        for (int fi = 0; fi < nf; ++fi)
            for (int wi = 0; wi < nw; ++wi) {
                std::vector<int> row(unknowns + 1, 0);
                for (int s = 0; s < nw; ++s) row[nvar(wi, s)] = a.shared_corners(fs[fi], ws[s]) & 1;
                for (int s = 0; s < nf; ++s) row[mvar(fi, s)] = a.shared_corners(ws[wi], fs[s]) & 1;
                row[unknowns] = (a.m[fs[fi]][ws[wi]] ^ b.m[fs[fi]][ws[wi]]) & 1;
                rows.push_back(row);
            }
        std::vector<int> tw(unknowns + 1, 0), tf(unknowns + 1, 0);
        for (int s = 0; s < nw; ++s) tw[nvar(s, s)] = 1;
        for (int s = 0; s < nf; ++s) tf[mvar(s, s)] = 1;
        rows.push_back(tw);
        rows.push_back(tf);
        auto sol = solve_gf2(rows, unknowns);
        if (!sol) {
            out.reason = "no trace-zero Clifford matrices on eye " + std::to_string(e);
            out.whitney.clear();
            out.finger.clear();
            return out;
        }
        CliffordMatrix wm, fm;
        for (int d : ws) {
            wm.targets.push_back(a.discs[d].id);
            wm.sources.push_back(a.discs[d].id);
        }
        for (int d : fs) {
            fm.targets.push_back(a.discs[d].id);
            fm.sources.push_back(a.discs[d].id);
        }
        wm.n.assign(nw, std::vector<int>(nw, 0));
        fm.n.assign(nf, std::vector<int>(nf, 0));
        for (int t = 0; t < nw; ++t)
            for (int s = 0; s < nw; ++s) wm.n[t][s] = (*sol)[nvar(t, s)];
        for (int t = 0; t < nf; ++t)
            for (int s = 0; s < nf; ++s) fm.n[t][s] = (*sol)[mvar(t, s)];
        out.whitney.push_back(std::move(wm));
        out.finger.push_back(std::move(fm));
    }
    out.equivalent = true;
    return out;
}

namespace tables {

namespace {

// Pairing sets of the second switched family, 1-based.
const std::map<int, std::vector<int>> kR2 = {{1, {1}}, {2, {2, 3}}, {3, {3}}, {4, {3, 4}}, {5, {5}}};
const std::map<int, std::vector<int>> kS2 = {{1, {}}, {2, {2}}, {3, {2, 3}}, {4, {3}}, {5, {}}};

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

int whitney_r(int t, int q, int j) { return t == 1 ? static_cast<int>(q == j) : static_cast<int>(contains(kR2.at(q), j)); }

int whitney_s(int t, int q, int j) { return t == 1 ? 0 : static_cast<int>(contains(kS2.at(q), j)); }

int finger_pairing(const Coeff& a, const Coeff& b, int t, int p, int q) {
    int s = 0;
    for (int j = 1; j <= kN; ++j) {
        s ^= a[p - 1][j - 1] & whitney_r(t, q, j);
        s ^= b[p - 1][j - 1] & whitney_s(t, q, j);
    }
    return s & 1;
}

std::array<int, kN> finger_order(int t) {
    return t == 1 ? std::array<int, kN>{5, 4, 3, 2, 1} : std::array<int, kN>{5, 4, 2, 3, 1};
}

std::array<int, kN> switch_order(int) { return {5, 4, 3, 2, 1}; }

std::vector<std::vector<int>> table(const Coeff& a, const Coeff& b, int t) {
    auto fo = finger_order(t);
    auto so = switch_order(t);
    std::vector<std::vector<int>> out(kN, std::vector<int>(kN, 0));
    for (int p = 0; p < kN; ++p)
        for (int q = 0; q < kN; ++q) out[p][q] = finger_pairing(a, b, t, fo[p], so[q]);
    return out;
}

int upper_sum(const Coeff& a, const Coeff& b, int t) {
    auto tab = table(a, b, t);
    int s = 0;
    for (int p = 0; p < kN; ++p)
        for (int q = p; q < kN; ++q) s ^= tab[p][q];
    return s;
}

bool symmetric_mod2(const Coeff& b) {
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j)
            if ((b[i][j] & 1) != (b[j][i] & 1)) return false;
    return true;
}

}  // namespace tables

}  // namespace fw::hom
