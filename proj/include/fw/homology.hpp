#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fw/system.hpp"

namespace fw::hom {

// Sparse Z2 vector over generator labels such as "C:w2", "S:f1", "z:w3", "R1", "S1".
using H2Class = std::set<std::string>;

H2Class add(const H2Class& a, const H2Class& b);
void toggle(H2Class& a, const std::string& gen);

std::string clifford_label(const std::string& disc_id);
std::string sphere_label(const std::string& disc_id);
std::string linking_label(const std::string& disc_id);

// Generators attached to a disc: the class pairs with a disc through shared corners.
int pairing(const System& sys, const std::string& gen, int disc);
int pairing(const System& sys, const H2Class& u, int disc);
H2Class clifford_class(const System& sys, int disc);

struct GeneratorBasis {
    std::vector<std::string> labels;
};
GeneratorBasis basis(const System& sys);

struct CliffordMatrix {
    std::vector<std::string> targets;
    std::vector<std::string> sources;
    std::vector<std::vector<int>> n;
    int trace() const;
};

struct CliffordWitness {
    bool equivalent = false;
    std::string reason;
    std::vector<CliffordMatrix> whitney;  // one per eye
    std::vector<CliffordMatrix> finger;
};

CliffordWitness clifford_equivalent(const System& a, const System& b);

// GF(2) linear solve: rows of (coefficients | rhs); returns one solution or nothing.
std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> rows, int unknowns);

namespace tables {

constexpr int kN = 5;
using Coeff = std::array<std::array<int, kN>, kN>;

// <w^t_q, R_j> and <w^t_q, S_j> for the switched Whitney families t = 1, 2.
int whitney_r(int t, int q, int j);
int whitney_s(int t, int q, int j);
// <f_p, w^t_q> for f_p = w_p + sum a_pj R_j + sum b_pj S_j.
int finger_pairing(const Coeff& a, const Coeff& b, int t, int p, int q);
std::array<int, kN> finger_order(int t);
std::array<int, kN> switch_order(int t);
std::vector<std::vector<int>> table(const Coeff& a, const Coeff& b, int t);
int upper_sum(const Coeff& a, const Coeff& b, int t);
bool symmetric_mod2(const Coeff& b);

}  // namespace tables

}  // namespace fw::hom
