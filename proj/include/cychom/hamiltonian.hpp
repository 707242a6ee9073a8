#pragma once

#include "cychom/differential.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cychom {

// Hamiltonian components derived from the differential, plus user-supplied
// higher components. h-components are unexcited; H-components are excited.
struct HamiltonianData {
  Element h11_prime;        // sum over chords of S(dc) hb^{-1} c-hat-dual, cyclic
  Element h11_doubleprime;  // basepoint terms per chord
  std::vector<Element> h1;  // H^1_q (excited), index q-1, q = 1..q_max
  std::map<std::pair<int, int>, Element> user_higher; // (p,q) -> excited H^p_q
  std::map<int, Element> user_seed;                   // p -> unexcited h^p_0
  int q_max = 2;

  const Element& H1(int q) const;
  bool has(int p, int q) const { return user_higher.count({p, q}) > 0; }
  const Element& H(int p, int q) const;
};

// Unexcited h^1_q for q = 1..q_max, per the defining formulas.
Element build_h1_seed(const DgaPresentation& pres, int q);

// Builds all components through q_max and verifies the first master
// equation. Throws on a nonzero residual.
HamiltonianData build_h1(const DgaPresentation& pres, int q_max);

// Validates and installs a user-supplied unexcited seed h^p_0 (p >= 2);
// derives H^p_q = E((1/q!) S^q h^p_0) for q = 0..q_max.
void install_user_seed(const DgaPresentation& pres, HamiltonianData& ham,
                       int p, const Element& seed);

// Master-equation residuals, one per checked identity.
struct MasterReport {
  struct Entry {
    std::string name;
    Element residual;
    bool zero = false;
  };
  std::vector<Entry> entries;
  bool all_zero() const;
};

MasterReport check_master(const DgaPresentation& pres, const HamiltonianData& ham,
                          int q_max);

// Terms of a (1,q)-component whose excited letter is the leg-index-th
// hat/basepoint letter counted counter-clockwise from the dual letter.
Element leg_excited_part(const Alphabet& alpha, const Element& h, int leg_index);

} // namespace cychom
