#include "cychom/invariants.hpp"

#include "cychom/contraction.hpp"
#include "cychom/cyclic.hpp"

#include <algorithm>

namespace cychom {

Element unit_element(const Alphabet& alpha) {
  std::vector<Monomial> out;
  const int sign = (alpha.n - 1) % 2 != 0 ? -1 : 1;
  for (int j = 1; j <= alpha.m; ++j) {
    Monomial t;
    t.coeff = sign;
    t.hbar = -1;
    t.word = {alpha.dual_base_letter(j)};
    t.excited = 0;
    t = mul_sigma_right(alpha, std::move(t), 1);
    out.push_back(canonical_cyclic(alpha, t));
  }
  return make_element(SpaceTag::TauMStarBal, std::move(out));
}

Element diamond(const Alphabet& alpha, const HamiltonianData& ham,
                const Element& x, const Element& y) {
  Element out = zero_element(SpaceTag::TauMStarBal);
  for (const auto& [dx, ex] : degree_components(alpha, x)) {
    Element val = star(alpha, y, star_lower(alpha, ex, ham.H1(2), 1));
    out = add(out, dx % 2 != 0 ? scale(-1, val) : val);
  }
  if (out.is_zero()) out.space = SpaceTag::TauMStarBal;
  return out;
}

Element boxdot(const Alphabet& alpha, const HamiltonianData& ham,
               const Element& x, const Element& y) {
  const Element w = star_lower(alpha, ham.H(2, 0), ham.H1(2), 1);
  return star(alpha, star_upper(alpha, w, 1, x), y);
}

Element boxtimes(const Alphabet& alpha, const HamiltonianData& ham,
                 const Element& x, const Element& y) {
  return beta_underline_inv(
      alpha, boxdot(alpha, ham, beta_underline(alpha, x), beta_underline(alpha, y)));
}

Element phi_map(const Alphabet& alpha, const HamiltonianData& ham, const Element& x) {
  return star(alpha, ham.H(2, 0), x);
}

Element bv_delta(const Alphabet& alpha, const Element& x) {
  std::vector<Monomial> out;
  for (const Monomial& t : x.terms) {
    int head = -1;
    for (int i = 0; i < t.length(); ++i) {
      if (is_module(t.word[static_cast<std::size_t>(i)].variant)) {
        if (head >= 0) throw error("bv_delta: more than one module letter");
        head = i;
      } else if (!is_chord(t.word[static_cast<std::size_t>(i)].variant)) {
        throw error("bv_delta: dual letter in a cyclic module word");
      }
    }
    if (head < 0) throw error("bv_delta: no module letter");
    Monomial r = rotate_to_front(alpha, t, head);
    if (r.word.front().variant == Variant::Hat) continue; // hat heads die
    Monomial tail = r;
    tail.word.erase(tail.word.begin());
    if (tail.word.empty()) continue; // S of an idempotent is zero
    Element s = s_operator(alpha, make_element(SpaceTag::A, {tail}));
    for (const Monomial& st : s.terms) out.push_back(canonical_cyclic(alpha, st));
  }
  return make_element(SpaceTag::MCyc, std::move(out));
}

namespace {

std::vector<std::pair<int, Element>> collect_generators(const TruncatedComplex& cx,
                                                        const HomologyResult& h) {
  std::vector<std::pair<int, Element>> gens;
  for (const auto& [deg, reps] : h.reps)
    for (const Element& r : reps) gens.emplace_back(deg, r);
  return gens;
}

std::vector<std::pair<std::size_t, Rational>> coords_against(
    const std::vector<std::pair<int, Element>>& gens, int deg,
    const std::vector<Rational>& lambda, const HomologyResult& h) {
  // map per-degree coordinates back to the global generator list
  std::vector<std::pair<std::size_t, Rational>> out;
  const auto rit = h.reps.find(deg);
  if (rit == h.reps.end()) return out;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] == 0) continue;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens[g].first == deg && equal(gens[g].second, rit->second[k]))
        out.emplace_back(g, lambda[k]);
  }
  return out;
}

} // namespace

ProductTable product_table(const DifferentialContext& ctx, const HamiltonianData& ham,
                           const std::string& op, int maxlen, int deg_lo, int deg_hi) {
  const Alphabet& alpha = ctx.alpha();
  const bool dual_side = op == "diamond";
  const ComplexSpace space = dual_side ? ComplexSpace::MStarBal
                                       : (op == "boxtimes" ? ComplexSpace::MCyc
                                                           : ComplexSpace::MBal);
  // products can leave the generator window; compute homology over a wider
  // degree range and a doubled cutoff so reductions stay clean
  const int wide_len = 2 * maxlen + 2;
  const int lo = std::min(deg_lo, 2 * deg_lo) - alpha.n - 2;
  const int hi = 2 * std::max(deg_hi, 0) + 2;
  TruncatedComplex cx = build_complex(ctx, space, wide_len, lo, hi);
  HomologyResult h = homology(cx);

  // generators restricted to the requested window and length
  TruncatedComplex small = build_complex(ctx, space, maxlen, deg_lo, deg_hi);
  HomologyResult hsmall = homology(small);

  ProductTable table;
  table.op = op;
  table.maxlen = maxlen;
  table.generators = collect_generators(small, hsmall);
  for (int d : hsmall.dirty_degrees)
    table.notes.push_back("degree " + std::to_string(d) +
                          " refused: truncation-dirty at maxlen " +
                          std::to_string(maxlen));

  const auto wide_gens = collect_generators(cx, h);
  table.cells.resize(table.generators.size());
  for (std::size_t i = 0; i < table.generators.size(); ++i) {
    table.cells[i].resize(table.generators.size());
    for (std::size_t j = 0; j < table.generators.size(); ++j) {
      const Element& gx = table.generators[i].second;
      const Element& gy = table.generators[j].second;
      Element prod;
      if (op == "boxtimes") prod = boxtimes(alpha, ham, gx, gy);
      else if (op == "boxdot") prod = boxdot(alpha, ham, gx, gy);
      else if (op == "diamond") prod = diamond(alpha, ham, gx, gy);
      else throw error("unknown product op: " + op);
      if (prod.is_zero()) continue;
      std::vector<Rational> lambda;
      try {
        lambda = reduce_to_homology_basis(ctx, prod, cx, h);
      } catch (const error& err) {
        table.notes.push_back("cell (" + std::to_string(i) + "," + std::to_string(j) +
                              ") skipped: " + err.what());
        continue;
      }
      const int pdeg = *element_degree(alpha, prod);
      auto coords = coords_against(wide_gens, pdeg, lambda, h);
      // express against the table generators where possible
      std::vector<std::pair<std::size_t, Rational>> cell;
      for (const auto& [gidx, val] : coords) {
        bool matched = false;
        for (std::size_t k = 0; k < table.generators.size(); ++k) {
          if (table.generators[k].first == wide_gens[gidx].first &&
              equal(table.generators[k].second, wide_gens[gidx].second)) {
            cell.emplace_back(k, val);
            matched = true;
            break;
          }
        }
        if (!matched)
          table.notes.push_back("cell (" + std::to_string(i) + "," +
                                std::to_string(j) +
                                ") lands outside the generator window");
      }
      table.cells[i][j] = std::move(cell);
    }
  }
  return table;
}

DeltaTable delta_table(const DifferentialContext& ctx, int maxlen, int deg_lo,
                       int deg_hi) {
  const Alphabet& alpha = ctx.alpha();
  TruncatedComplex small = build_complex(ctx, ComplexSpace::MCyc, maxlen, deg_lo, deg_hi);
  HomologyResult hsmall = homology(small);
  TruncatedComplex wide =
      build_complex(ctx, ComplexSpace::MCyc, maxlen + 2, deg_lo, deg_hi + 2);
  HomologyResult hwide = homology(wide);

  DeltaTable table;
  table.maxlen = maxlen;
  table.generators = collect_generators(small, hsmall);
  for (int d : hsmall.dirty_degrees)
    table.notes.push_back("degree " + std::to_string(d) +
                          " refused: truncation-dirty at maxlen " +
                          std::to_string(maxlen));
  const auto wide_gens = collect_generators(wide, hwide);
  for (std::size_t i = 0; i < table.generators.size(); ++i) {
    Element img = bv_delta(alpha, table.generators[i].second);
    if (img.is_zero()) {
      table.images.emplace_back();
      continue;
    }
    std::vector<Rational> lambda;
    try {
      lambda = reduce_to_homology_basis(ctx, img, wide, hwide);
    } catch (const error& err) {
      table.notes.push_back("row " + std::to_string(i) + " skipped: " + err.what());
      table.images.emplace_back();
      continue;
    }
    const int pdeg = *element_degree(alpha, img);
    auto coords = coords_against(wide_gens, pdeg, lambda, hwide);
    std::vector<std::pair<std::size_t, Rational>> row;
    for (const auto& [gidx, val] : coords) {
      for (std::size_t k = 0; k < table.generators.size(); ++k)
        if (table.generators[k].first == wide_gens[gidx].first &&
            equal(table.generators[k].second, wide_gens[gidx].second)) {
          row.emplace_back(k, val);
          break;
        }
    }
    table.images.push_back(std::move(row));
  }
  return table;
}

} // namespace cychom
