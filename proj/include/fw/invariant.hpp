#pragma once

#include <string>
#include <vector>

#include "fw/moves.hpp"
#include "fw/system.hpp"

namespace fw {

using Orders = std::vector<std::vector<std::string>>;  // per eye w_order; empty entry = default

struct InvariantResult {
    std::vector<int> bits;
    Script script;
    Orders orders;

    int total() const;
    std::string bits_string() const;
    bool operator==(const InvariantResult& o) const { return bits == o.bits; }
    bool operator<(const InvariantResult& o) const { return bits < o.bits; }
};

int hat_I_eye(const System& sys, int eye);
std::vector<int> hat_I(const System& sys);

// Switches every non-IA eye; appends the switch moves to script.
System switch_all(const System& sys, const Orders& orders, Script* script = nullptr);
std::pair<System, Script> slide_to_EA(const System& sys);
InvariantResult compute_I(const System& sys, const Orders& orders = {});

System concatenate(const System& a, const System& b);

struct ParityReport {
    bool ok = false;
    std::string detail;
};
ParityReport parity_hypotheses(const System& a, const System& b);

std::string report(const System& sys, const InvariantResult& r, bool with_script);

}  // namespace fw
