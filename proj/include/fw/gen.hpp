#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "fw/moves.hpp"
#include "fw/system.hpp"

namespace fw::gen {

struct Params {
    int max_eyes = 2;
    int max_discs = 4;      // per eye
    int max_crossing = 3;
    int cross_pairs = 1;    // max cross F discs per ordered eye pair
    int twist_range = 2;
    double cycle_prob = 0.35;
    int max_twists = 3;     // Dehn twists per surface for geometric eyes
    bool geometric = true;  // attach arcs when an eye is IA with n <= 3
    int min_eyes = 1;
    int min_discs = 0;
    bool force_ia = false;
    bool allow_cross = true;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int below(int n);
    int range(int lo, int hi);  // inclusive
    bool chance(double p);
    std::uint64_t next() { return eng_(); }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

System random_system(std::uint64_t seed, const Params& p = {});
System random_system(Rng& rng, const Params& p);
bool synthetic(const System& sys);

std::optional<MoveRecord> random_applicable_move(std::uint64_t seed, const System& sys, bool include_switch = true);
std::optional<MoveRecord> random_applicable_move(Rng& rng, const System& sys, bool include_switch = true);
std::optional<MoveRecord> random_move_of_kind(Rng& rng, const System& sys, MoveKind k);

}  // namespace fw::gen
