#pragma once

#include "cychom/element.hpp"

namespace cychom {

// One graded cyclic rotation: the first word letter moves to the back,
// with the rotation sign folded into the coefficient. The sigma/hbar
// prefix stays in place; its crossing signs are part of the rotation sign.
Monomial rotate_once(const Alphabet& alpha, Monomial m);

// Rotate so that the letter currently at `pos` becomes the first letter.
Monomial rotate_to_front(const Alphabet& alpha, Monomial m, int pos);

// Canonical representative of the cyclic class: the rotation with minimal
// (word, excited) key. Self-annihilating classes (a nontrivial rotation
// fixes word and mark with sign -1) come back as zero. Throws when the
// word is not cyclically composable.
Monomial canonical_cyclic(const Alphabet& alpha, const Monomial& m);

// Project every term into the cyclic quotient of the given space.
Element to_cyclic(const Alphabet& alpha, SpaceTag space, const Element& e);

// excitation operator: sum over all markable letters of each term
Element excite(const Alphabet& alpha, const Element& e);
Element forget_excitation(const Alphabet& alpha, SpaceTag space, const Element& e);

// X -> X hbar^{-1} sigma^{-1} and its inverse; beta_u marks the image.
Element beta(const Alphabet& alpha, const Element& e);
Element beta_underline(const Alphabet& alpha, const Element& e);
Element beta_inv(const Alphabet& alpha, const Element& e);
Element beta_underline_inv(const Alphabet& alpha, const Element& e);

} // namespace cychom
