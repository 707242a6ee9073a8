#pragma once

#include "cychom/hamiltonian.hpp"
#include "cychom/homology.hpp"

namespace cychom {

// Chain-level unit for the dual-side product: (-1)^{n-1} sum_j hb^{-1} x_j*-marked sigma.
Element unit_element(const Alphabet& alpha);

// X o Y = (-1)^{|X|} Y * (X *_1 H^1_2), on the dual side.
Element diamond(const Alphabet& alpha, const HamiltonianData& ham,
                const Element& x, const Element& y);

// X [.] Y = ((H^2_0 *_1 H^1_2) *^1 X) * Y, on the module side.
Element boxdot(const Alphabet& alpha, const HamiltonianData& ham,
               const Element& x, const Element& y);

// boxdot conjugated to the cyclic module space by beta-underline.
Element boxtimes(const Alphabet& alpha, const HamiltonianData& ham,
                 const Element& x, const Element& y);

// ring map induced by contraction against H^2_0
Element phi_map(const Alphabet& alpha, const HamiltonianData& ham, const Element& x);

// BV operator on the cyclic module space: rotate the hat/basepoint letter to
// the front; basepoint heads map to S of the tail, hat heads to zero.
Element bv_delta(const Alphabet& alpha, const Element& x);

// Pairwise product table over homology representatives, with each product
// reduced to homology coordinates.
struct ProductTable {
  std::string op;
  int maxlen = 0;
  std::vector<std::pair<int, Element>> generators; // (degree, representative)
  // cell[i][j]: coordinates of gen_i x gen_j over `generators`, empty = 0
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> cells;
  std::vector<std::string> notes; // refusals and skipped cells
};

ProductTable product_table(const DifferentialContext& ctx, const HamiltonianData& ham,
                           const std::string& op, int maxlen, int deg_lo, int deg_hi);

// Delta table over the cyclic-module homology generators.
struct DeltaTable {
  int maxlen = 0;
  std::vector<std::pair<int, Element>> generators;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> images;
  std::vector<std::string> notes;
};

DeltaTable delta_table(const DifferentialContext& ctx, int maxlen, int deg_lo, int deg_hi);

} // namespace cychom
