#include <string>

#include "doctest.h"
#include "fw/gen.hpp"
#include "fw/moves.hpp"
#include "fw/system.hpp"

using namespace fw;

namespace {

const char* kKeyText =
    "fwsys v1\n"
    "eyes 1\n"
    "eye 1 n 1\n"
    "disc f1 kind=F reye=1 geye=1 gcorners=0,1 rcorners=0,1 germ=0,0\n"
    "disc w1 kind=W reye=1 geye=1 gcorners=1,2 rcorners=1,2 germ=0,0\n"
    "xg f1 w1 0\n"
    "xr f1 w1 0\n"
    "m f1 w1 1\n";

bool has_message(const std::vector<Violation>& v, const std::string& text) {
    for (const auto& x : v)
        if (x.message.find(text) != std::string::npos) return true;
    return false;
}

std::string parse_error(const std::string& text) {
    try {
        parse_system(text);
    } catch (const SystemError& e) {
        return e.what();
    }
    return "";
}

System strip_arcs(System s) {
    for (auto& d : s.discs) {
        d.garc.reset();
        d.rarc.reset();
    }
    return s;
}

}  // namespace

TEST_CASE("standard systems validate") {
    for (int n = 0; n <= 4; ++n) CHECK(validate(standard_system(n)).empty());
    CHECK(validate(key_example()).empty());
}

TEST_CASE("validation catches corner signs and germ parity") {
    System s = standard_system(1);
    s.discs[static_cast<std::size_t>(s.require("f1"))].hi = 2;
    CHECK(has_message(validate(s), "positive with a negative"));

    System g = standard_system(1);
    g.discs[static_cast<std::size_t>(g.require("w1"))].germ_p = 1;
    CHECK(has_message(validate(g), "p+q even"));
}

TEST_CASE("validation catches asymmetric and same-kind data") {
    System s = standard_system(2);
    const int f1 = s.require("f1"), w2 = s.require("w2"), f2 = s.require("f2");
    s.xg[f1][w2] = 3;
    CHECK(has_message(validate(s), "symmetric"));
    System t = standard_system(2);
    t.m[f1][f2] = t.m[f2][f1] = 1;
    CHECK(has_message(validate(t), "same kind"));
}

TEST_CASE("the documented file text parses to the key example") {
    System s = parse_system(kKeyText);
    CHECK(strip_arcs(s) == strip_arcs(key_example()));
    CHECK(serialize(strip_arcs(key_example())) == kKeyText);
}

TEST_CASE("parse errors carry line numbers") {
    std::string bad_sign = kKeyText;
    bad_sign.replace(bad_sign.find("gcorners=0,1 rcorners=0,1"), 25, "gcorners=0,2 rcorners=0,2");
    CHECK(parse_error(bad_sign).find("line") != std::string::npos);

    std::string unknown = std::string(kKeyText) + "bogus f1 w1 0\n";
    CHECK(parse_error(unknown).find("line 9") != std::string::npos);

    std::string header = kKeyText;
    header.replace(0, 8, "fwsys v2");
    CHECK(parse_error(header).find("line 1") != std::string::npos);

    std::string order = kKeyText;
    // xr before xg breaks the section order.
    auto a = order.find("xg f1 w1 0\n"), b = order.find("xr f1 w1 0\n");
    order.replace(b, 11, "xg f1 w1 0\n");
    order.replace(a, 11, "xr f1 w1 0\n");
    CHECK(parse_error(order).find("line 7") != std::string::npos);
}

TEST_CASE("serialization round-trips bit-exactly") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        System s = gen::random_system(seed);
        const std::string text = serialize(s);
        System back = parse_system(text);
        CHECK(back == s);
        CHECK(serialize(back) == text);
        CHECK(text.find('\r') == std::string::npos);
    }
}

TEST_CASE("cycle decomposition of standard and post-birth systems") {
    auto dec = cycle_decomposition(standard_system(3), 1);
    CHECK(dec.path.discs.size() == 6);
    CHECK(dec.cycles.empty());

    System b = birth(empty_system(1), 1);
    auto db = cycle_decomposition(b, 1);
    CHECK(db.path.points == std::vector<int>{0});
    REQUIRE(db.cycles.size() == 1);
    CHECK(db.cycles[0].discs.size() == 2);
}

TEST_CASE("position classification") {
    CHECK(classify_position(standard_system(2))[0] == Position::EA);
    CHECK(classify_position(key_example())[0] == Position::EA);
    CHECK(classify_position(birth(empty_system(1), 1))[0] == Position::FingerFirstGeneral);
    System r = standard_system(2);
    r.xr[r.require("f1")][r.require("w2")] = r.xr[r.require("w2")][r.require("f1")] = 2;
    CHECK(classify_position(r)[0] == Position::GEA);
    r.xg[r.require("f1")][r.require("w2")] = r.xg[r.require("w2")][r.require("f1")] = 2;
    CHECK(classify_position(r)[0] == Position::IA);
}

TEST_CASE("path order follows the immersed arc") {
    System s = standard_system(3);
    auto po = path_order(s, 1);
    for (int p = 0; p < 3; ++p) {
        CHECK(s.discs[static_cast<std::size_t>(po.f[static_cast<std::size_t>(p)])].id == "f" + std::to_string(p + 1));
        CHECK(s.discs[static_cast<std::size_t>(po.w[static_cast<std::size_t>(p)])].id == "w" + std::to_string(p + 1));
    }
}

TEST_CASE("embedding and padding place the eye") {
    System e = embed_in_eye(key_example(), 2, 3);
    CHECK(e.eyes == std::vector<int>{0, 1, 0});
    CHECK(validate(e).empty());
    System p = pad_with_trivial_eyes(key_example(), 1, 2);
    CHECK(p.eyes == std::vector<int>{0, 1, 0, 0});
    CHECK(p.disc("f1").reye == 2);
}

TEST_CASE("swapping roles twice restores the data") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        System s = gen::random_system(seed);
        System t = swap_roles(swap_roles(s));
        CHECK(validate(swap_roles(s)).empty());
        CHECK(serialize(t) == serialize(strip_arcs(s)));
    }
}

TEST_CASE("hash is stable") {
    CHECK(hash_hex("") == "cbf29ce484222325");
    CHECK(hash_hex(serialize(key_example())) == hash_hex(serialize(key_example())));
}
