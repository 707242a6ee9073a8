#pragma once

#include "cychom/monomial.hpp"

#include <map>
#include <vector>

namespace cychom {

// Ambient space of an element. Cyclic tags require every term to be a
// canonical cyclic representative; balanced tags additionally require
// h = -1 and p - q - s = 0.
enum class SpaceTag {
  A,            // tensor algebra on the chords
  M,            // A (x) Vhat (x) A, one hat/basepoint letter per word
  MDiag,        // cyclically composable part of M, not yet quotiented
  MCyc,         // cyclic quotient of MDiag
  U,            // extended tensor algebra, plain words
  UBal,         // balanced cyclic monomials, unexcited
  ExcitedUBal,  // balanced cyclic monomials, one excited letter each
  TauMBal,      // balanced M-type cyclic monomials, excited or not
  TauMStarBal,  // balanced M*-type cyclic monomials, excited or not
};

const char* space_name(SpaceTag t);
bool is_cyclic_space(SpaceTag t);

struct Element {
  SpaceTag space = SpaceTag::A;
  std::vector<Monomial> terms; // sorted by key, nonzero coefficients

  bool is_zero() const { return terms.empty(); }
};

// Merge, sort and drop zero terms.
Element make_element(SpaceTag space, std::vector<Monomial> terms);

inline Element zero_element(SpaceTag space) { return Element{space, {}}; }

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Rational& c, const Element& a);
bool equal(const Element& a, const Element& b);

// degree of a homogeneous element; throws on mixed degrees
std::optional<int> element_degree(const Alphabet& alpha, const Element& e);
// split into homogeneous components, keyed by degree
std::map<int, Element> degree_components(const Alphabet& alpha, const Element& e);

// Structural validation of every term against the space tag; throws on
// violation. Cyclic canonicity is checked against canonical_cyclic.
void validate(const Alphabet& alpha, const Element& e);

// per-term structural check helpers
bool is_m_type(const Monomial& m);      // exactly one hat/basepoint letter, rest chords
bool is_mstar_type(const Monomial& m);  // exactly one dual letter, rest chords

} // namespace cychom
