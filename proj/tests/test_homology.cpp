#include "doctest.h"
#include "fw/homology.hpp"
#include "fw/moves.hpp"
#include "fw/system.hpp"

using namespace fw;
namespace tb = fw::hom::tables;

TEST_CASE("clifford class pairs through shared corners") {
    System s = standard_system(3);
    for (int j = 1; j <= 3; ++j) {
        const std::string wj = "w" + std::to_string(j);
        auto c = hom::clifford_class(s, s.require(wj));
        CHECK(hom::pairing(s, c, s.require(wj)) == 0);
        CHECK(hom::pairing(s, c, s.require("f" + std::to_string(j))) == 1);
        if (j < 3) CHECK(hom::pairing(s, c, s.require("f" + std::to_string(j + 1))) == 1);
        for (int p = 1; p <= 3; ++p)
            if (p != j && p != j + 1) CHECK(hom::pairing(s, c, s.require("f" + std::to_string(p))) == 0);
    }
}

TEST_CASE("class arithmetic is over Z2") {
    hom::H2Class a{"C:w1", "S:f2"}, b{"C:w1", "R1"};
    CHECK(hom::add(a, b) == hom::H2Class{"R1", "S:f2"});
    hom::toggle(a, "S:f2");
    CHECK(a == hom::H2Class{"C:w1"});
}

TEST_CASE("clifford equivalence") {
    System a = standard_system(3);
    auto same = hom::clifford_equivalent(a, a);
    CHECK(same.equivalent);
    for (const auto& m : same.whitney)
        for (const auto& row : m.n)
            for (int v : row) CHECK(v == 0);

    CHECK(hom::clifford_equivalent(a, clifford_add(a, "w1", "w2", 1)).equivalent);

    auto diag = hom::clifford_equivalent(a, clifford_add(a, "w1", "w1", 1));
    CHECK_FALSE(diag.equivalent);
    CHECK_FALSE(diag.reason.empty());
}

TEST_CASE("standard switch tables") {
    for (int i = 1; i <= tb::kN; ++i)
        for (int j = 1; j <= tb::kN; ++j) CHECK(tb::whitney_r(1, i, j) == (i == j ? 1 : 0));
    CHECK(tb::whitney_s(2, 2, 2) == 1);
}

TEST_CASE("symmetric coefficients give equal upper sums") {
    tb::Coeff a{}, b{};
    a[0][2] = a[3][1] = a[4][4] = 1;
    b[1][3] = b[3][1] = 1;
    b[0][4] = b[4][0] = 1;
    b[2][2] = 1;
    REQUIRE(tb::symmetric_mod2(b));
    CHECK(tb::upper_sum(a, b, 1) % 2 == tb::upper_sum(a, b, 2) % 2);
}

TEST_CASE("GF(2) solve") {
    // x0 + x1 = 1, x1 + x2 = 0, x0 = 1
    auto sol = hom::solve_gf2({{1, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}}, 3);
    REQUIRE(sol);
    CHECK(*sol == std::vector<int>{1, 0, 0});
    CHECK_FALSE(hom::solve_gf2({{1, 1, 0}, {1, 1, 1}}, 2));
}
