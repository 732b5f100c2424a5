#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fw/gen.hpp"
#include "fw/invariant.hpp"

namespace fw::oracle {

// I from the bilinear IA formula, after switching with the given orders.
std::vector<int> closed_form_I(const System& sys, const Orders& orders = {});
int closed_form_eye(const System& ia, int eye);

struct ScriptSearch {
    std::set<std::vector<int>> values;
    std::uint64_t states = 0;  // distinct parity states visited over all eyes
    std::uint64_t ea_states = 0;
};

// Breadth-first enumeration of slide/rotation scripts up to depth, each state completed to EA.
ScriptSearch all_slide_scripts_I(const System& sys, int depth = 4);

std::set<std::vector<int>> all_orderings_I(const System& sys);

struct CrossReport {
    bool available = true;
    bool match = false;
    int compressions = 0;  // crossing pairs the minimal position removes beyond the axiomatic count
    std::vector<std::string> diffs;
    std::string summary() const;
};

CrossReport cross_validate(const System& sys, const MoveRecord& move);
std::vector<MoveKind> geometric_kinds();

struct Counterexample {
    std::string category;
    System system;
    Script script;
    std::string note;
};

// Writes <dir>/<category>/<hash>.fwsys and .script; returns the hash.
std::string write_counterexample(const std::string& dir, const Counterexample& c);

struct FuzzParams {
    std::uint64_t seed = 1;
    int trials = 10000;
    int max_eyes = 2;
    int max_discs = 4;
    int moves_per_trial = 5;
    std::string corpus_dir;
    bool inject_fault = false;
    int threads = 0;  // 0 = hardware concurrency
};

struct FuzzSummary {
    int trials = 0;
    int moves = 0;
    int violations = 0;
    std::vector<int> kind_counts;
    std::vector<Counterexample> failures;
    std::string text() const;
};

FuzzSummary fuzz(const FuzzParams& p);

}  // namespace fw::oracle
