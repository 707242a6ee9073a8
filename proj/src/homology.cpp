#include "cychom/homology.hpp"

#include <algorithm>
#include <functional>

namespace cychom {

const char* complex_space_name(ComplexSpace s) {
  switch (s) {
    case ComplexSpace::MCyc: return "mcyc";
    case ComplexSpace::MBal: return "mbal";
    case ComplexSpace::MStarBal: return "mstarbal";
  }
  return "?";
}

namespace {

struct HeadSpec {
  std::vector<Letter> heads;
  int sigma = 0, hbar = 0;
  bool mark_head = false;
};

HeadSpec head_spec(const Alphabet& alpha, ComplexSpace space) {
  HeadSpec spec;
  const bool dual = space == ComplexSpace::MStarBal;
  for (int j = 1; j <= alpha.m; ++j)
    spec.heads.push_back(dual ? alpha.dual_base_letter(j) : alpha.base_letter(j));
  for (std::size_t id = 0; id < alpha.chords.size(); ++id)
    spec.heads.push_back(dual ? alpha.dual_hat_letter(static_cast<int>(id))
                              : alpha.hat_letter(static_cast<int>(id)));
  if (space == ComplexSpace::MBal) {
    spec.sigma = -1;
    spec.hbar = -1;
    spec.mark_head = true;
  } else if (space == ComplexSpace::MStarBal) {
    spec.sigma = 1;
    spec.hbar = -1;
    spec.mark_head = true;
  }
  return spec;
}

// Can a word longer than maxlen land in this degree? Conservative interval
// test from the extremal chord degrees; proves basis completeness when false.
bool degree_escapes_cutoff(const Alphabet& alpha, const HeadSpec& spec,
                           int maxlen, int deg) {
  if (alpha.chords.empty()) return false; // words are single heads
  int cmin = alpha.chords.front().degree, cmax = cmin;
  for (const ChordData& c : alpha.chords) {
    cmin = std::min(cmin, c.degree);
    cmax = std::max(cmax, c.degree);
  }
  int hmin = alpha.degree(spec.heads.front()), hmax = hmin;
  for (const Letter& hletter : spec.heads) {
    hmin = std::min(hmin, alpha.degree(hletter));
    hmax = std::max(hmax, alpha.degree(hletter));
  }
  const int shift = spec.sigma + spec.hbar * (alpha.n - 3);
  if (cmin > 0) return deg >= hmin + shift + maxlen * cmin;
  if (cmax < 0) return deg <= hmax + shift + maxlen * cmax;
  return true; // chords of degree zero or mixed signs: nothing is provably complete
}

void enumerate_words(const Alphabet& alpha, int maxlen, std::vector<Letter>& word,
                     const std::function<void(const std::vector<Letter>&)>& emit) {
  emit(word);
  if (static_cast<int>(word.size()) >= maxlen) return;
  const int tail = alpha.right(word.back());
  for (std::size_t id = 0; id < alpha.chords.size(); ++id) {
    const Letter c = alpha.chord_letter(static_cast<int>(id));
    if (alpha.left(c) != tail) continue;
    word.push_back(c);
    enumerate_words(alpha, maxlen, word, emit);
    word.pop_back();
  }
}

} // namespace

Element complex_differential(const DifferentialContext& ctx, ComplexSpace space,
                             const Element& x) {
  if (space == ComplexSpace::MCyc) return d_module(ctx.pres, x);
  return d_balanced(ctx, x);
}

TruncatedComplex build_complex(const DifferentialContext& ctx, ComplexSpace space,
                               int maxlen, int lo, int hi, std::size_t basis_cap) {
  const Alphabet& alpha = ctx.alpha();
  TruncatedComplex cx;
  cx.space = space;
  cx.maxlen = maxlen;
  cx.deg_lo = lo;
  cx.deg_hi = hi;

  const HeadSpec spec = head_spec(alpha, space);
  std::size_t count = 0;
  for (const Letter& head : spec.heads) {
    std::vector<Letter> word{head};
    enumerate_words(alpha, maxlen, word, [&](const std::vector<Letter>& w) {
      if (alpha.right(w.back()) != alpha.left(w.front())) return; // close the circle
      Monomial m;
      m.coeff = 1;
      m.sigma = spec.sigma;
      m.hbar = spec.hbar;
      m.word = w;
      if (spec.mark_head) m.excited = 0;
      const int deg = degree(alpha, m);
      if (deg < lo - 1 || deg > hi + 1) return;
      Monomial canon = canonical_cyclic(alpha, m);
      if (canon.is_zero()) return;
      canon.coeff = 1;
      if (++count > basis_cap)
        throw error("basis blow-up guard: over " + std::to_string(basis_cap) +
                    " monomials in the window; tighten the window or cutoff");
      cx.basis[deg].push_back(std::move(canon));
    });
  }
  for (auto& [deg, monos] : cx.basis) {
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return compare_key(a, b) < 0; });
    monos.erase(std::unique(monos.begin(), monos.end(),
                            [](const Monomial& a, const Monomial& b) {
                              return same_key(a, b);
                            }),
                monos.end());
  }

  std::set<int> incomplete;
  for (int deg = lo - 1; deg <= hi + 2; ++deg)
    if (degree_escapes_cutoff(alpha, spec, maxlen, deg)) incomplete.insert(deg);

  std::set<int> escape;
  for (int deg = lo; deg <= hi + 1; ++deg) {
    const auto here = cx.basis.find(deg);
    const auto below = cx.basis.find(deg - 1);
    const std::size_t ncols = here == cx.basis.end() ? 0 : here->second.size();
    const std::size_t nrows = below == cx.basis.end() ? 0 : below->second.size();
    RatMat mat(nrows, ncols);
    for (std::size_t col = 0; col < ncols; ++col) {
      Element dx = complex_differential(
          ctx, space, make_element(cx.element_space(), {here->second[col]}));
      for (const Monomial& t : dx.terms) {
        if (t.length() > maxlen) {
          escape.insert(deg);
          continue;
        }
        bool found = false;
        for (std::size_t row = 0; row < nrows; ++row) {
          if (same_key(below->second[row], t)) {
            mat.at(row, col) += t.coeff;
            found = true;
            break;
          }
        }
        if (!found)
          throw error("internal: differential image missing from the enumerated basis");
      }
    }
    cx.d.emplace(deg, std::move(mat));
  }

  for (int deg = lo; deg <= hi; ++deg) {
    if (incomplete.count(deg) || incomplete.count(deg + 1) || escape.count(deg) ||
        escape.count(deg + 1))
      cx.dirty.insert(deg);
  }
  return cx;
}

HomologyResult homology(const TruncatedComplex& cx) {
  HomologyResult out;
  out.dirty_degrees = cx.dirty;
  for (int deg = cx.deg_lo; deg <= cx.deg_hi; ++deg) {
    if (cx.dirty.count(deg)) continue;
    const auto it = cx.basis.find(deg);
    const std::size_t dim_chain = it == cx.basis.end() ? 0 : it->second.size();
    if (dim_chain == 0) {
      out.dims[deg] = 0;
      out.reps[deg] = {};
      continue;
    }

    const auto dout = cx.d.find(deg);
    std::vector<std::vector<Rational>> cycles;
    if (dout == cx.d.end()) {
      for (std::size_t i = 0; i < dim_chain; ++i) {
        std::vector<Rational> v(dim_chain, Rational(0));
        v[i] = 1;
        cycles.push_back(std::move(v));
      }
    } else {
      cycles = dout->second.kernel();
    }

    const auto din = cx.d.find(deg + 1);
    const std::size_t img_cols = din == cx.d.end() ? 0 : din->second.cols();
    RatMat span_mat(dim_chain, img_cols);
    if (din != cx.d.end())
      for (std::size_t r = 0; r < dim_chain; ++r)
        for (std::size_t c = 0; c < img_cols; ++c)
          span_mat.at(r, c) = din->second.at(r, c);
    std::size_t span_rank = span_mat.rank();
    const std::size_t hom_dim = cycles.size() - span_rank;
    out.dims[deg] = static_cast<int>(hom_dim);

    auto try_add = [&](const std::vector<Rational>& v) {
      RatMat probe(dim_chain, span_mat.cols() + 1);
      for (std::size_t r = 0; r < dim_chain; ++r) {
        for (std::size_t c = 0; c < span_mat.cols(); ++c)
          probe.at(r, c) = span_mat.at(r, c);
        probe.at(r, span_mat.cols()) = v[r];
      }
      if (probe.rank() == span_rank) return false;
      span_mat = std::move(probe);
      span_rank += 1;
      return true;
    };

    std::vector<std::vector<Rational>> chosen;
    // prefer representatives that are single basis monomials
    for (const auto& v : cycles) {
      if (chosen.size() == hom_dim) break;
      std::size_t nz = 0, pos = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) { ++nz; pos = i; }
      if (nz == 1 && v[pos] == 1 && try_add(v)) chosen.push_back(v);
    }
    for (const auto& v : cycles) {
      if (chosen.size() == hom_dim) break;
      if (try_add(v)) chosen.push_back(v);
    }

    std::vector<Element> reps;
    for (const auto& v : chosen) {
      std::vector<Monomial> terms;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Monomial t = it->second[i];
        t.coeff = v[i];
        terms.push_back(std::move(t));
      }
      reps.push_back(make_element(cx.element_space(), std::move(terms)));
    }
    out.reps[deg] = std::move(reps);
  }
  return out;
}

std::vector<Rational> reduce_to_homology_basis(const DifferentialContext& ctx,
                                               const Element& x,
                                               const TruncatedComplex& cx,
                                               const HomologyResult& h) {
  const Alphabet& alpha = ctx.alpha();
  if (x.is_zero()) return {};
  const int deg = *element_degree(alpha, x);
  if (cx.dirty.count(deg))
    throw error("degree " + std::to_string(deg) + " is truncation-dirty; refusing");
  if (deg < cx.deg_lo || deg > cx.deg_hi)
    throw error("degree " + std::to_string(deg) + " outside the computed window");
  if (!complex_differential(ctx, cx.space, x).is_zero())
    throw error("element is not a cycle");

  const auto bit = cx.basis.find(deg);
  static const std::vector<Monomial> kEmpty;
  const std::vector<Monomial>& basis = bit == cx.basis.end() ? kEmpty : bit->second;
  std::vector<Rational> vec(basis.size(), Rational(0));
  for (const Monomial& t : x.terms) {
    bool found = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (same_key(basis[i], t)) {
        vec[i] = t.coeff;
        found = true;
        break;
      }
    if (!found) throw error("cycle contains a monomial outside the complex basis");
  }

  const auto rit = h.reps.find(deg);
  static const std::vector<Element> kNoReps;
  const std::vector<Element>& reps = rit == h.reps.end() ? kNoReps : rit->second;
  const auto din = cx.d.find(deg + 1);
  const std::size_t bcols = din == cx.d.end() ? 0 : din->second.cols();
  RatMat sys(basis.size(), reps.size() + bcols);
  for (std::size_t j = 0; j < reps.size(); ++j)
    for (const Monomial& t : reps[j].terms)
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (same_key(basis[i], t)) sys.at(i, j) = t.coeff;
  if (din != cx.d.end())
    for (std::size_t r = 0; r < basis.size() && r < din->second.rows(); ++r)
      for (std::size_t c = 0; c < bcols; ++c)
        sys.at(r, reps.size() + c) = din->second.at(r, c);

  auto sol = sys.solve(vec);
  if (!sol) throw error("cycle does not reduce to the homology basis");
  return std::vector<Rational>(sol->begin(),
                               sol->begin() + static_cast<long>(reps.size()));
}

} // namespace cychom
