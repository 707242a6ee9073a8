#pragma once

#include "cychom/element.hpp"

#include <span>

namespace cychom {

// Full contraction: sum over pairs (dual letter u in x, matching hat or
// basepoint letter v in y) with exactly one of the two excited. Each pair
// glues the rotated words, emits one hbar, and carries the gluing sign
// (-1)^{n-1} on excited dual-basepoint pairings.
Element star(const Alphabet& alpha, const Element& x, const Element& y);

// Partial contraction against the j-th hat/basepoint letter of y, counted
// counter-clockwise (reading order) from y's unique dual letter. y must
// have exactly one dual letter per term.
Element star_lower(const Alphabet& alpha, const Element& x, const Element& y, int j);

// Partial contraction from the i-th dual letter of x, counted clockwise
// (against reading order) from x's unique hat/basepoint letter. x must
// have exactly one hat/basepoint letter per term.
Element star_upper(const Alphabet& alpha, const Element& x, int i, const Element& y);

// [X,Y] = X*Y - (-1)^{|X||Y|} Y*X, extended bilinearly over homogeneous parts
Element bracket(const Alphabet& alpha, const Element& x, const Element& y);

// Nested-contraction operations induced by elements of fixed tensor type.
Element op_down(const Alphabet& alpha, const Element& x, std::span<const Element> args);
Element op_up(const Alphabet& alpha, const Element& y, std::span<const Element> args);
Element op_updown(const Alphabet& alpha, const Element& y, const Element& a, const Element& b);
Element op_downup(const Alphabet& alpha, const Element& y, const Element& a, const Element& b);
Element op_circ(const Alphabet& alpha, const Element& x, const Element& y);

// Hat-insertion operator on cyclic elements: replaces each chord letter c
// by sigma^{-1} c-hat in place, summed over all chord letters. `k` iterates.
Element s_cyclic(const Alphabet& alpha, const Element& x, int k = 1);

} // namespace cychom
