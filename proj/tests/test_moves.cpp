#include "doctest.h"
#include "fw/homology.hpp"
#include "fw/invariant.hpp"
#include "fw/moves.hpp"
#include "fw/system.hpp"

using namespace fw;

namespace {

int M(const System& s, const std::string& a, const std::string& b) { return s.m[s.require(a)][s.require(b)] & 1; }

System strip(System s) {
    for (auto& d : s.discs) d.garc.reset(), d.rarc.reset();
    return s;
}

}  // namespace

TEST_CASE("untwisted G-slide with no R crossings keeps M") {
    System s = standard_system(3);
    System t = disc_slide(s, "w1", "w2", Surface::G);
    for (const char* f : {"f1", "f2", "f3"})
        for (const char* w : {"w1", "w2", "w3"}) CHECK(M(t, f, w) == M(s, f, w));
    CHECK(validate(t).empty());
}

TEST_CASE("a once-twisted slide adds the Clifford pairing") {
    System s = standard_system(3);
    System u = disc_slide(s, "w1", "w2", Surface::G, 0);
    System t = disc_slide(s, "w1", "w2", Surface::G, 1);
    CHECK(M(t, "f2", "w1") == (M(u, "f2", "w1") ^ 1));
    CHECK(M(t, "f3", "w1") == (M(u, "f3", "w1") ^ 1));
    CHECK(M(t, "f1", "w1") == M(u, "f1", "w1"));
}

TEST_CASE("rotations") {
    System s = strip(standard_system(2));
    System r = rotate(s, "w1", Surface::R, s.disc("w1").lo, 1);
    CHECK(strip(rotate(r, "w1", Surface::R, s.disc("w1").lo, -1)) == s);
    int changed = 0;
    for (std::size_t i = 0; i < s.xr.size(); ++i)
        for (std::size_t j = 0; j < s.xr.size(); ++j) changed += std::abs(r.xg[i][j] - s.xg[i][j]);
    // An R-rotation moves a corner of the G-arc.
    CHECK(changed > 0);
    CHECK(r.xr == s.xr);

    System g = s;
    const int f2 = g.require("f2"), w1 = g.require("w1");
    g.xg[f2][w1] = g.xg[w1][f2] = 1;
    System gr = rotate(g, "w1", Surface::G, g.disc("w1").hi, 1);
    CHECK(M(gr, "w1", "f2") == (M(g, "w1", "f2") ^ 1));
}

TEST_CASE("clifford additions") {
    System s = standard_system(3);
    CHECK(clifford_add(s, "w1", "w2", 2).m == s.m);
    System t = clifford_add(s, "w1", "w2", 1);
    CHECK(M(t, "f2", "w1") == 1);
    CHECK(M(t, "f3", "w1") == 1);
    System d = clifford_add(s, "f1", "f1", 1);
    CHECK(M(d, "f1", "w1") == (M(s, "f1", "w1") ^ 1));
}

TEST_CASE("sphere slides keep I") {
    System s = standard_system(3);
    for (auto [a, b] : {std::pair{"f2", "f1"}, std::pair{"f3", "f2"}}) {
        System t = sphere_slide(s, a, b);
        CHECK(validate(t).empty());
        CHECK(compute_I(t).bits == compute_I(s).bits);
    }
}

TEST_CASE("switches") {
    System s = standard_system(3);
    auto [t, info] = k_switch(s, 1, default_w_order(s, 1));
    CHECK(info.k() == 0);
    CHECK(strip(t) == strip(s));

    System b = birth(empty_system(1), 1);
    auto [u, bi] = k_switch(b, 1, default_w_order(b, 1));
    CHECK(bi.k() == 1);
    CHECK(is_ia(u, 1));
    auto dec = cycle_decomposition(u, 1);
    CHECK(dec.cycles.empty());
}

TEST_CASE("birth, death and x3 are inverse pairs") {
    System s = strip(standard_system(2));
    System b = birth(s, 1);
    CHECK(b.size() == s.size() + 2);
    CHECK(classify_position(birth(empty_system(1), 1))[0] == Position::FingerFirstGeneral);
    MoveRecord bm;
    bm.kind = MoveKind::Birth;
    bm.set("eye", 1);
    CHECK(strip(apply(b, inverse_move(s, bm))) == s);

    for (int at = 0; at <= 4; ++at) {
        MoveRecord x;
        x.kind = MoveKind::X3Plus;
        x.set("eye", 1).set("at", at);
        System up = apply(s, x);
        CHECK(compute_I(up).bits == compute_I(s).bits);
        CHECK(strip(apply(up, inverse_move(s, x))) == s);
    }
    CHECK_THROWS_AS(death(s, 1, "f1", "w2"), MoveError);
}

TEST_CASE("saddle keeps I") {
    for (System s : {standard_system(2), key_example()}) {
        System t = saddle(s, 1);
        CHECK(validate(t).empty());
        CHECK(compute_I(t).bits == compute_I(s).bits);
    }
}

TEST_CASE("spinning twice is the identity mod 2") {
    System s = standard_system(3);
    auto order = default_w_order(s, 1);
    System t = spin(spin(s, 1, 1, 2, order), 1, 1, 2, order);
    CHECK(hom::clifford_equivalent(s, t).equivalent);
    CHECK(compute_I(t).bits == compute_I(s).bits);
}

TEST_CASE("script dialect") {
    const std::string text = "gslide mover=w1 over=w2 twist=0 path=P0\nbirth eye=1\n";
    Script sc = parse_script(text);
    REQUIRE(sc.size() == 2);
    CHECK(sc[0].kind == MoveKind::GSlide);
    CHECK(sc[0].get("over") == "w2");
    CHECK(to_string(sc) == text);
    try {
        parse_script("birth eye=1\nteleport disc=w1\n");
        FAIL("expected an error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    for (MoveKind k : all_move_kinds()) CHECK(kind_from_verb(verb(k)) == k);
}
