#pragma once

#include "cychom/element.hpp"

namespace cychom {

struct PrintOptions {
  // rotate M/M*-type cyclic words so the hat/basepoint (or dual) letter
  // leads, matching the usual way these classes are written
  bool anchor_heads = true;
  // drop a trailing hb^{-1} s^{-1} pair when printing balanced M-type
  // monomials (theta -> 1 rendering)
  bool theta_one = false;
};

std::string print_monomial(const Alphabet& alpha, const Monomial& m, bool cyclic,
                           const PrintOptions& opts = {});
std::string print_element(const Alphabet& alpha, const Element& e,
                          const PrintOptions& opts = {});

} // namespace cychom
