#include <functional>
#include <random>

#include "brute_arcs.hpp"
#include "doctest.h"
#include "fw/arcdiag.hpp"

using namespace fw::arc;

namespace {

DiagramArc random_arc(std::mt19937& rng, int m, int twists) {
    int s = static_cast<int>(rng() % m), e = static_cast<int>(rng() % m);
    while (e == s) e = static_cast<int>(rng() % m);
    DiagramArc a = standard_arc(std::min(s, e), std::max(s, e));
    for (int k = 0; k < twists; ++k) {
        int i = 1 + static_cast<int>(rng() % (m - 1)), j = 1 + static_cast<int>(rng() % (m - 1));
        if (i >= j) continue;
        a = reduce(dehn_twist(a, TwistCurve{i, j, rng() % 2 == 0}, m), m);
    }
    return a;
}

}  // namespace

TEST_CASE("arc text form round-trips") {
    for (const char* s : {"0U:1", "0U3.6.5.3.6:1", "4D2.5.0:5", "2D6:3"}) CHECK(to_string(parse_arc(s)) == s);
    CHECK_THROWS_AS(parse_arc("0X:1"), ArcError);
    CHECK_THROWS_AS(parse_arc("0U1"), ArcError);
}

TEST_CASE("check_arc rejects bad endpoints") {
    CHECK_THROWS_AS(check_arc(DiagramArc{0, 0, Hemi::Upper, {}}, 3), ArcError);
    CHECK_THROWS_AS(check_arc(DiagramArc{0, 5, Hemi::Upper, {}}, 3), ArcError);
    CHECK_THROWS_AS(check_arc(DiagramArc{0, 1, Hemi::Upper, {7}}, 3), ArcError);
}

TEST_CASE("reduction cancels backtracking and end letters") {
    const int m = 5;
    CHECK(reduce(DiagramArc{0, 4, Hemi::Upper, {2, 2}}, m) == DiagramArc{0, 4, Hemi::Upper, {}});
    // A first letter next to the start only changes the hemisphere.
    CHECK(reduce(DiagramArc{0, 3, Hemi::Upper, {1}}, m) == DiagramArc{0, 3, Hemi::Lower, {}});
    CHECK(is_reduced(parse_arc("0U3.6.5.3.6:1"), 7));
}

TEST_CASE("disjoint hemispheres do not meet") {
    CHECK(geometric_intersection(parse_arc("0U:2"), parse_arc("1D:3"), 4) == 0);
}

TEST_CASE("a bigon disappears after reduction") {
    const int m = 5;
    DiagramArc a = standard_arc(0, 4);
    DiagramArc b = reduce(DiagramArc{1, 3, Hemi::Upper, {0, 0}}, m);
    CHECK(geometric_intersection(a, b, m) == 0);
}

TEST_CASE("parallel arcs with the same endpoints are disjoint") {
    CHECK(geometric_intersection(standard_arc(0, 1), standard_arc(0, 1), 3) == 0);
    auto t = parse_arc("0U3.6.5.3.6:1");
    CHECK(geometric_intersection(t, t, 7) == 0);
}

TEST_CASE("standard finger form arcs are embedded") {
    const int m = 7;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            CHECK(geometric_intersection(standard_arc(2 * p - 2, 2 * p - 1), standard_arc(2 * q - 1, 2 * q), m) == 0);
}

TEST_CASE("twisting around a curve that splits the arc's endpoints") {
    const int m = 5;
    DiagramArc a = parse_arc("0U2:3");
    for (bool left : {true, false}) {
        DiagramArc t = reduce(dehn_twist(a, TwistCurve{1, 2, left}, m), m);
        const int want = brute::intersection(t, a, m);
        CHECK(want == 3);
        CHECK(geometric_intersection(t, a, m) == want);
    }
}

TEST_CASE("twist and inverse twist cancel") {
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        const int m = 3 + static_cast<int>(rng() % 5);
        DiagramArc a = random_arc(rng, m, 3);
        int i = 1 + static_cast<int>(rng() % (m - 2));
        int j = i + 1 + static_cast<int>(rng() % (m - 1 - i));
        TwistCurve g{i, j, rng() % 2 == 0};
        CHECK(reduce(dehn_twist(reduce(dehn_twist(a, g, m), m), inverse(g), m), m) == a);
    }
}

TEST_CASE("twisting along a curve away from the arc changes nothing") {
    const int m = 7;
    DiagramArc a = standard_arc(0, 1);
    CHECK(reduce(dehn_twist(a, TwistCurve{3, 5, true}, m), m) == a);
}

TEST_CASE("intersection matches the brute-force count") {
    std::mt19937 rng(5);
    int checked = 0;
    while (checked < 400) {
        const int m = 3 + static_cast<int>(rng() % 4);
        DiagramArc x = random_arc(rng, m, 2), y = random_arc(rng, m, 2);
        if (x.cross.size() + y.cross.size() > 8) continue;
        ++checked;
        INFO(to_string(x) << " vs " << to_string(y) << " m=" << m);
        CHECK(geometric_intersection(x, y, m) == brute::intersection(x, y, m));
    }
}

TEST_CASE("intersection is symmetric and invariant under a common twist") {
    std::mt19937 rng(17);
    for (int it = 0; it < 300; ++it) {
        const int m = 3 + static_cast<int>(rng() % 5);
        DiagramArc x = random_arc(rng, m, 2), y = random_arc(rng, m, 2);
        const int c = geometric_intersection(x, y, m);
        CHECK(c == geometric_intersection(y, x, m));
        int i = 1 + static_cast<int>(rng() % (m - 2));
        int j = i + 1 + static_cast<int>(rng() % (m - 1 - i));
        TwistCurve g{i, j, rng() % 2 == 0};
        CHECK(geometric_intersection(reduce(dehn_twist(x, g, m), m), reduce(dehn_twist(y, g, m), m), m) == c);
    }
}

TEST_CASE("band sum keeps the mover's endpoints and is reduced") {
    const int m = 5;
    DiagramArc mover = standard_arc(1, 2), over = standard_arc(3, 4);
    for (int side : {0, 1}) {
        DiagramArc b = band_sum(mover, over, side, m);
        CHECK(b.start == 1);
        CHECK(b.end == 2);
        CHECK(is_reduced(b, m));
        // The parallel copy of `over` crosses an arc ending inside it exactly once.
        CHECK(geometric_intersection(b, parse_arc("0D:3"), m) >= 1);
    }
    CHECK_THROWS_AS(band_sum(standard_arc(3, 4), standard_arc(3, 2), 0, m), ArcError);
}

TEST_CASE("inserting and removing a pair of points are inverse") {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        const int m = 3 + static_cast<int>(rng() % 5);
        DiagramArc a = random_arc(rng, m, 2);
        const int t = static_cast<int>(rng() % m);
        DiagramArc up = insert_pair_after(a, t, m);
        CHECK(is_reduced(up, m + 2));
        CHECK(remove_pair_after(up, t, m + 2) == a);
    }
    CHECK_THROWS_AS(remove_pair_after(standard_arc(1, 2), 0, 5), ArcError);
}

TEST_CASE("new points do not change intersections") {
    std::mt19937 rng(23);
    for (int it = 0; it < 200; ++it) {
        const int m = 3 + static_cast<int>(rng() % 4);
        DiagramArc x = random_arc(rng, m, 2), y = random_arc(rng, m, 2);
        const int t = static_cast<int>(rng() % m);
        CHECK(geometric_intersection(insert_pair_after(x, t, m), insert_pair_after(y, t, m), m + 2) ==
              geometric_intersection(x, y, m));
    }
}

TEST_CASE("disjoint arc search") {
    const int m = 5;
    std::vector<DiagramArc> avoid{standard_arc(1, 2), parse_arc("0D:3")};
    auto a = find_disjoint_arc(0, 2, m, avoid, 4);
    REQUIRE(a);
    for (const auto& o : avoid) CHECK(geometric_intersection(*a, o, m) == 0);
    // A closed wall of arcs around a_1 leaves no way in.
    std::vector<DiagramArc> wall{parse_arc("0U:2"), parse_arc("0D:2")};
    CHECK_FALSE(find_disjoint_arc(1, 3, m, wall, 6));
}
