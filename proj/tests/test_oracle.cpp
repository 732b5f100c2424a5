#include <filesystem>
#include <map>

#include "doctest.h"
#include "fw/gen.hpp"
#include "fw/oracle.hpp"

using namespace fw;
namespace fs = std::filesystem;

TEST_CASE("closed form agrees with the pipeline") {
    CHECK(oracle::closed_form_I(key_example()) == std::vector<int>{1});
    CHECK(oracle::closed_form_I(standard_system(3)) == std::vector<int>{0});
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        System s = gen::random_system(seed);
        INFO("seed " << seed);
        CHECK(oracle::closed_form_I(s) == compute_I(s).bits);
    }
}

TEST_CASE("slide scripts on EA input give one value") {
    auto r = oracle::all_slide_scripts_I(key_example(), 3);
    CHECK(r.values == std::set<std::vector<int>>{{1}});
    CHECK(r.states > 0);
}

TEST_CASE("orderings") {
    CHECK(oracle::all_orderings_I(standard_system(3)) == std::set<std::vector<int>>{{0}});
    CHECK(oracle::all_orderings_I(key_example()) == std::set<std::vector<int>>{{1}});
}

TEST_CASE("cross validation on simple moves") {
    System s = standard_system(2);
    MoveRecord slide;
    slide.kind = MoveKind::GSlide;
    slide.set("mover", "w1").set("over", "w2").set("twist", 0).set("path", "P0");
    auto a = oracle::cross_validate(s, slide);
    CHECK(a.available);
    CHECK_MESSAGE(a.match, a.summary());

    MoveRecord rot;
    rot.kind = MoveKind::RRotate;
    rot.set("disc", "w1").set("corner", s.disc("w1").lo).set("sign", 1);
    auto b = oracle::cross_validate(s, rot);
    CHECK_MESSAGE(b.match, b.summary());

    MoveRecord birth;
    birth.kind = MoveKind::Birth;
    birth.set("eye", 1);
    auto c = oracle::cross_validate(s, birth);
    CHECK_MESSAGE(c.match, c.summary());
    CHECK(c.summary() == "match");
}

TEST_CASE("fuzz is deterministic and catches an injected fault") {
    oracle::FuzzParams p;
    p.seed = 9;
    p.trials = 200;
    auto a = oracle::fuzz(p);
    p.threads = 1;
    auto b = oracle::fuzz(p);
    CHECK(a.text() == b.text());
    CHECK(a.violations == 0);

    const fs::path dir = fs::temp_directory_path() / "fw_corpus_test";
    fs::remove_all(dir);
    p.inject_fault = true;
    p.corpus_dir = dir.string();
    p.trials = 50;
    auto f = oracle::fuzz(p);
    CHECK(f.violations > 0);
    int files = 0;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.path().extension() == ".fwsys") ++files;
    CHECK(files > 0);
    fs::remove_all(dir);
}

TEST_CASE("generator") {
    CHECK(serialize(gen::random_system(42)) == serialize(gen::random_system(42)));
    gen::Params p;
    p.max_eyes = 2;
    p.max_discs = 4;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) CHECK(validate(gen::random_system(seed, p)).empty());

    gen::Params flat;
    flat.max_crossing = 0;
    flat.cycle_prob = 0;
    flat.allow_cross = false;
    flat.max_twists = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
        for (auto pos : classify_position(gen::random_system(seed, flat))) CHECK(pos == Position::EA);
}

TEST_CASE("random moves") {
    System b = birth(standard_system(1), 1);
    gen::Rng rng(3);
    auto d = gen::random_move_of_kind(rng, b, MoveKind::Death);
    REQUIRE(d);
    CHECK(validate(apply(b, *d)).empty());
    CHECK_FALSE(gen::random_move_of_kind(rng, standard_system(2), MoveKind::Death));

    gen::Params rich;
    rich.min_eyes = 2;
    rich.min_discs = 3;
    rich.cycle_prob = 0;
    rich.geometric = false;
    System g = gen::random_system(5, rich);
    // A birth and an x3 insertion leave a canceling pair and a removable triple behind.
    g = x3_insert(birth(g, 1), 2, 0);
    std::map<MoveKind, int> seen;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        auto m = gen::random_applicable_move(k, g);
        if (m) ++seen[m->kind];
    }
    for (MoveKind k : all_move_kinds()) CHECK_MESSAGE(seen[k] > 0, verb(k));
}
