#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fw/arcdiag.hpp"

namespace fw {

enum class Kind : unsigned char { F, W };
enum class Surface : unsigned char { G, R };
enum class Position : unsigned char { EA, IA, REA, GEA, FingerFirstGeneral };

inline Kind other(Kind k) { return k == Kind::F ? Kind::W : Kind::F; }
inline Surface other(Surface s) { return s == Surface::G ? Surface::R : Surface::G; }
std::string to_string(Position p);

class SystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Disc {
    std::string id;
    Kind kind = Kind::F;
    int reye = 1;
    int geye = 1;
    int lo = 0;  // corners, lo < hi
    int hi = 1;
    int germ_p = 0;
    int germ_q = 0;
    std::set<std::string> h2;
    std::optional<arc::DiagramArc> garc;
    std::optional<arc::DiagramArc> rarc;

    bool cross() const { return reye != geye; }
    bool touches(int p) const { return lo == p || hi == p; }
    int other_corner(int p) const { return lo == p ? hi : lo; }
    bool operator==(const Disc&) const = default;
};

using Matrix = std::vector<std::vector<int>>;

struct Component {
    std::vector<int> points;  // visiting order
    std::vector<int> discs;   // edge i joins points[i] and points[i+1] (cyclically for cycles)
    bool cycle = false;
};

struct Decomposition {
    Component path;  // from a_0; points.size() == discs.size() + 1
    std::vector<Component> cycles;
};

struct System {
    std::vector<int> eyes;  // eyes[i-1] = n_i
    std::vector<Disc> discs;
    Matrix m;
    Matrix xg;
    Matrix xr;

    int eye_count() const { return static_cast<int>(eyes.size()); }
    int n(int eye) const { return eyes.at(eye - 1); }
    int size() const { return static_cast<int>(discs.size()); }

    int find(const std::string& id) const;
    int require(const std::string& id) const;
    const Disc& disc(const std::string& id) const { return discs[require(id)]; }

    Matrix& x(Surface s) { return s == Surface::G ? xg : xr; }
    const Matrix& x(Surface s) const { return s == Surface::G ? xg : xr; }

    bool on_eye(int d, int eye) const { return discs[d].reye == eye && discs[d].geye == eye; }
    std::vector<int> eye_discs(int eye) const;
    std::vector<int> eye_discs(int eye, Kind k) const;
    int shared_corners(int a, int b) const;
    bool geometric() const;

    int add_disc(Disc d);
    void remove_disc(int d);
    void canonicalize();
    std::string fresh_id(const std::string& prefix) const;
    std::string fresh_pair_suffix() const;

    bool operator==(const System&) const = default;
};

struct Violation {
    std::string field;
    std::string message;
};

std::vector<Violation> validate(const System& sys);
void require_valid(const System& sys);

System empty_system(int eye_count);
System standard_system(int n);
System key_example();
System pad_with_trivial_eyes(const System& sys, int before, int after);
System embed_in_eye(const System& one_eye, int eye, int eye_count);

Decomposition cycle_decomposition(const System& sys, int eye, Surface s = Surface::G);
std::vector<Position> classify_position(const System& sys);
bool is_ia(const System& sys, int eye);

// Pairs (f_p, w_p) along the immersed arc, 1-based by position.
struct PathOrder {
    std::vector<int> f;
    std::vector<int> w;
};
PathOrder path_order(const System& sys, int eye);

void relabel_points(System& sys, int eye, const std::map<int, int>& perm);
System swap_roles(const System& sys);

std::string serialize(const System& sys);
System parse_system(const std::string& text);
System load_system(const std::string& path);
void save_system(const System& sys, const std::string& path);

std::string hash_hex(const std::string& text);

}  // namespace fw
