#pragma once

#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

namespace fw::arc {

// Marked points a_0..a_{m-1} sit on the equator L of the sphere in index order.
// Segment k (k >= 1) joins a_{k-1} and a_k; segment 0 joins a_{m-1} to a_0 through infinity.
enum class Hemi : unsigned char { Upper, Lower };

inline Hemi flip(Hemi h) { return h == Hemi::Upper ? Hemi::Lower : Hemi::Upper; }

struct MarkedSphere {
    int point_count = 1;
};

// An arc is recorded by its cutting sequence with L: the hemisphere it leaves
// `start` into, then the segments it crosses in order.
struct DiagramArc {
    int start = 0;
    int end = 0;
    Hemi h0 = Hemi::Upper;
    std::vector<int> cross;

    bool operator==(const DiagramArc&) const = default;
};

struct TwistCurve {
    int i = 1;  // encloses a_i..a_j
    int j = 2;
    bool left = true;
};

class ArcError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_arc(const DiagramArc& a, int m);
DiagramArc reduce(DiagramArc a, int m);
bool is_reduced(const DiagramArc& a, int m);
std::vector<DiagramArc> minimal_position(const std::vector<DiagramArc>& diagram, int m);

int geometric_intersection(const DiagramArc& a, const DiagramArc& b, int m);

DiagramArc dehn_twist(const DiagramArc& a, const TwistCurve& g, int m);
std::vector<DiagramArc> dehn_twist(const std::vector<DiagramArc>& diagram, const TwistCurve& g, int m);
TwistCurve inverse(TwistCurve g);

// Band sum of `mover` with the boundary of a neighborhood of `over`; `side`
// picks which way the band passes around mover's start point.
DiagramArc band_sum(const DiagramArc& mover, const DiagramArc& over, int side, int m);

// Shortest reduced arc from `from` to `to` meeting none of `avoid`, searching words up to max_len.
std::optional<DiagramArc> find_disjoint_arc(int from, int to, int m, const std::vector<DiagramArc>& avoid,
                                            int max_len);

// Two new points inserted immediately after a_t, shifting later indices by 2.
DiagramArc insert_pair_after(const DiagramArc& a, int t, int m);
// Removes points t+1, t+2 (no arc may end there); later indices shift by -2.
DiagramArc remove_pair_after(const DiagramArc& a, int t, int m);
// Moves an endpoint sitting at `from` to `to` (both adjacent via new points).
DiagramArc move_endpoint(const DiagramArc& a, int from, int to, int m);

DiagramArc standard_arc(int from, int to);

std::string to_string(const DiagramArc& a);
DiagramArc parse_arc(const std::string& s);

}  // namespace fw::arc
