#pragma once

#include "cychom/cyclic.hpp"

#include <map>

namespace cychom {

// A DGA presentation: the alphabet plus the differential assignment per
// chord. Construction-time validation checks endpoint preservation, the
// degree drop of one, and d^2 = 0 on every chord.
struct DgaPresentation {
  Alphabet alphabet;
  std::map<int, Element> differential; // chord id -> Element in A

  const Element& d_of(int chord_id) const;
};

// throws on any violated presentation invariant
void validate_presentation(const DgaPresentation& pres);

// S: A -> M, hat one letter at a time with alternating Koszul signs.
Element s_operator(const Alphabet& alpha, const Element& w);

// Leibniz extension of the generator assignment to A.
Element d_algebra(const DgaPresentation& pres, const Element& x);

// Differential on M / Mdiag / Mcyc. Hat letters expand through the module
// rule (chord times basepoints plus S of the chord differential); basepoint
// letters are cycles.
Element d_module(const DgaPresentation& pres, const Element& x);

// Context for the balanced-space differentials: presentation, the degree -1
// Hamiltonian component driving the bracket part, and the word-length cutoff
// used by the homology engine.
struct DifferentialContext {
  DgaPresentation pres;
  Element h11; // excited, balanced, degree -1
  int cutoff = 8;
  std::map<int, Element> s_dc; // cached S(dc) per chord id

  const Alphabet& alpha() const { return pres.alphabet; }
};

// Builds the context: validates the presentation, builds the Hamiltonian
// component of bidegree (1,1), and verifies its master equation.
DifferentialContext make_context(DgaPresentation pres, int cutoff = 8);

// Exterior differential on balanced cyclic elements: acts as d on chord
// letters, kills all other generators, Leibniz signs throughout.
Element d_exterior(const DgaPresentation& pres, const Element& x);

// d_U X = dX + [H^1_1, X]
Element d_balanced(const DifferentialContext& ctx, const Element& x);

} // namespace cychom
