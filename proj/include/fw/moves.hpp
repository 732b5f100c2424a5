#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fw/system.hpp"

namespace fw {

class MoveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MoveKind : unsigned char {
    GSlide,
    RSlide,
    GRotate,
    RRotate,
    CliffordAdd,
    SphereSlide,
    KSwitch,
    Birth,
    Death,
    X3Plus,
    X3Minus,
    Saddle,
    Spin,
    Compress
};

struct MoveRecord {
    MoveKind kind = MoveKind::Birth;
    std::vector<std::pair<std::string, std::string>> params;

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
    int get_int(const std::string& key, int fallback) const;
    MoveRecord& set(const std::string& key, const std::string& value);
    MoveRecord& set(const std::string& key, int value);
    bool operator==(const MoveRecord&) const = default;
};

using Script = std::vector<MoveRecord>;

std::string verb(MoveKind k);
MoveKind kind_from_verb(const std::string& v);
std::vector<MoveKind> all_move_kinds();

std::string to_string(const MoveRecord& m);
MoveRecord parse_move(const std::string& line);
std::string to_string(const Script& s);
Script parse_script(const std::string& text);

struct SwitchInfo {
    int eye = 1;
    std::vector<std::string> w_order;
    std::vector<std::string> switch_out;  // by rank, the F-reordering prefix
    std::vector<std::string> switch_discs;
    int k() const { return static_cast<int>(switch_out.size()); }
};

std::vector<std::string> default_w_order(const System& sys, int eye);
std::pair<System, SwitchInfo> k_switch(const System& sys, int eye, const std::vector<std::string>& w_order);

System disc_slide(const System& sys, const std::string& mover, const std::string& over, Surface s, int twist = 0,
                  int sign = 1, int side = 0);
System rotate(const System& sys, const std::string& disc, Surface s, int corner, int sign);
System clifford_add(const System& sys, const std::string& target, const std::string& source, int count);
System sphere_slide(const System& sys, const std::string& mover, const std::string& over);
System compress(const System& sys, Surface s, const std::string& a, const std::string& b, int times = 1);
System birth(const System& sys, int eye);
System death(const System& sys, int eye, const std::string& f, const std::string& w);
System x3_insert(const System& sys, int eye, int at);
System x3_remove(const System& sys, int eye, const std::string& first, const std::string& second);
System saddle(const System& sys, int eye);
System spin(const System& sys, int eye, int i, int j, const std::vector<std::string>& w_order);

System apply(const System& sys, const MoveRecord& m);
System apply(const System& sys, const Script& s);
MoveRecord inverse_move(const System& before, const MoveRecord& m);

std::vector<std::string> split_list(const std::string& s);
std::string join_list(const std::vector<std::string>& v);

}  // namespace fw
