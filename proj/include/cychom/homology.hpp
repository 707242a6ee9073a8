#pragma once

#include "cychom/differential.hpp"
#include "cychom/ratmat.hpp"

#include <set>

namespace cychom {

// Complexes the homology engine can build.
enum class ComplexSpace { MCyc, MBal, MStarBal };

const char* complex_space_name(ComplexSpace s);

// A word-length-truncated graded complex with exact differential matrices.
// `dirty` marks degrees whose homology a larger truncation could change.
struct TruncatedComplex {
  ComplexSpace space = ComplexSpace::MCyc;
  int maxlen = 0;
  int deg_lo = 0, deg_hi = 0;                 // requested window
  std::map<int, std::vector<Monomial>> basis; // canonical monomials, coeff 1
  std::map<int, RatMat> d;                    // d[k]: degree k -> k-1
  std::set<int> dirty;

  SpaceTag element_space() const {
    switch (space) {
      case ComplexSpace::MCyc: return SpaceTag::MCyc;
      case ComplexSpace::MBal: return SpaceTag::TauMBal;
      case ComplexSpace::MStarBal: return SpaceTag::TauMStarBal;
    }
    return SpaceTag::MCyc;
  }
};

struct HomologyResult {
  std::map<int, int> dims;                  // clean degrees only
  std::map<int, std::vector<Element>> reps; // chosen representative cycles
  std::set<int> dirty_degrees;
};

// Enumerates all canonical monomials of the space with word length <= maxlen
// and degree inside [lo-1, hi+1], evaluates the differential, and audits the
// truncation. Throws when the basis exceeds the blow-up guard.
TruncatedComplex build_complex(const DifferentialContext& ctx, ComplexSpace space,
                               int maxlen, int lo, int hi,
                               std::size_t basis_cap = 200000);

HomologyResult homology(const TruncatedComplex& complex);

// Coordinates of a cycle in the chosen homology basis: solves
// x = sum(lambda_i rep_i) + d(y) exactly. Throws if x is not a cycle or the
// degree is dirty.
std::vector<Rational> reduce_to_homology_basis(const DifferentialContext& ctx,
                                               const Element& x,
                                               const TruncatedComplex& complex,
                                               const HomologyResult& h);

// the differential the complex uses at its space
Element complex_differential(const DifferentialContext& ctx, ComplexSpace space,
                             const Element& x);

} // namespace cychom
