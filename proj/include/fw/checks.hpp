#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fw/oracle.hpp"

namespace fw::check {

struct CheckParams {
    std::uint64_t seed = 1;
    int trials = 0;  // 0 = the suite default
    int depth = 4;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    int cases = 0;
    int skipped = 0;
    std::vector<std::string> failures;  // one machine-readable record each
    std::string detail;
    std::string text() const;
};

std::vector<std::string> lemma_names();
CheckResult run(const std::string& lemma, const CheckParams& p);

CheckResult symmetry(const CheckParams& p);
CheckResult clifford_trace_flip(const CheckParams& p);
CheckResult clifford_commutation(const CheckParams& p);
CheckResult tables_n5(const CheckParams& p);
CheckResult homomorphism(const CheckParams& p);
CheckResult parity(const CheckParams& p);
CheckResult orderings(const CheckParams& p);
CheckResult slide_scripts(const CheckParams& p);
CheckResult cross_layer(const CheckParams& p);
CheckResult padding(const CheckParams& p);
CheckResult roundtrip(const CheckParams& p);

// The seeded single-eye geometric systems used by cross-layer validation.
std::vector<System> geometric_corpus(std::uint64_t seed, int count);

}  // namespace fw::check
