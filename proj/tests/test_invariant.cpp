#include "doctest.h"
#include "fw/invariant.hpp"
#include "fw/moves.hpp"
#include "fw/system.hpp"

using namespace fw;

namespace {

System strip(System s) {
    for (auto& d : s.discs) d.garc.reset(), d.rarc.reset();
    return s;
}

void set_sym(Matrix& m, int a, int b, int v) { m[a][b] = m[b][a] = v; }

}  // namespace

TEST_CASE("hat I on EA systems") {
    CHECK(hat_I(standard_system(3)) == std::vector<int>{0});
    CHECK(hat_I(key_example()) == std::vector<int>{1});
}

TEST_CASE("slide to EA") {
    auto [s, script] = slide_to_EA(standard_system(2));
    CHECK(script.empty());

    System one = strip(standard_system(2));
    set_sym(one.xg, one.require("f1"), one.require("w2"), 1);
    auto [e, sc] = slide_to_EA(one);
    CHECK(classify_position(e)[0] == Position::EA);
    CHECK_FALSE(sc.empty());
    CHECK(hat_I(e) == compute_I(one).bits);

    System rea = strip(standard_system(3));
    set_sym(rea.xg, rea.require("f1"), rea.require("w3"), 2);
    set_sym(rea.xg, rea.require("f2"), rea.require("w3"), 1);
    REQUIRE(classify_position(rea)[0] == Position::REA);
    auto [r, rs] = slide_to_EA(rea);
    CHECK(classify_position(r)[0] == Position::EA);
    for (const auto& m : rs) CHECK(m.kind != MoveKind::RSlide);
}

TEST_CASE("compute I on the basic examples") {
    CHECK(compute_I(key_example()).bits == std::vector<int>{1});
    CHECK(compute_I(standard_system(1)).bits == std::vector<int>{0});
    CHECK(compute_I(embed_in_eye(key_example(), 2, 3)).bits == std::vector<int>{0, 1, 0});
    CHECK(compute_I(key_example()).bits_string() == "(1)");
}

TEST_CASE("concatenation adds") {
    System k = key_example(), s = standard_system(1);
    CHECK(compute_I(concatenate(k, k)).bits == std::vector<int>{0});
    CHECK(compute_I(concatenate(k, s)).bits == std::vector<int>{1});
    CHECK(strip(concatenate(k, empty_system(1))) == strip(k));
}

TEST_CASE("parity hypotheses") {
    System a = strip(standard_system(2));
    CHECK(parity_hypotheses(a, a).ok);
    System b = a;
    set_sym(b.xg, b.require("f1"), b.require("w2"), 1);
    auto r = parity_hypotheses(a, b);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.detail.empty());
    System c = a;
    set_sym(c.xg, c.require("f1"), c.require("w2"), 2);
    CHECK(parity_hypotheses(a, c).ok);
}

TEST_CASE("report text") {
    auto text = report(key_example(), compute_I(key_example()), false);
    CHECK(text.find("I = (1)") != std::string::npos);
}
