#pragma once

// Shared test fixtures: standard presentations and random generators.

#include "cychom/contraction.hpp"
#include "cychom/cyclic.hpp"
#include "cychom/differential.hpp"
#include "cychom/parser.hpp"
#include "cychom/printer.hpp"

#include <functional>
#include <random>
#include <vector>

namespace fixtures {

using namespace cychom;

// one chord of degree n-1, trivial differential
inline DgaPresentation round_sphere(int n) {
  DgaPresentation pres;
  pres.alphabet.n = n;
  pres.alphabet.m = 1;
  pres.alphabet.chords.push_back({"a", n - 1, 1, 1});
  pres.differential.emplace(0, zero_element(SpaceTag::A));
  return pres;
}

// two chords, d(b) = a a (requires |a| = 0, |b| = 1)
inline DgaPresentation square_word(int n) {
  DgaPresentation pres;
  pres.alphabet.n = n;
  pres.alphabet.m = 1;
  pres.alphabet.chords.push_back({"a", 0, 1, 1});
  pres.alphabet.chords.push_back({"b", 1, 1, 1});
  pres.differential.emplace(0, zero_element(SpaceTag::A));
  Monomial aa;
  aa.coeff = 1;
  aa.word = {pres.alphabet.chord_letter(0), pres.alphabet.chord_letter(0)};
  pres.differential.emplace(1, make_element(SpaceTag::A, {aa}));
  return pres;
}

// random small DGA with d^2 = 0, rejection-sampled; degrees kept small so
// random words stay interesting at low cutoffs
inline DgaPresentation random_dga(std::mt19937& rng) {
  static const char* names[] = {"a", "b", "c"};
  for (;;) {
    DgaPresentation pres;
    Alphabet& alpha = pres.alphabet;
    alpha.n = 2 + static_cast<int>(rng() % 3);
    alpha.m = 1 + static_cast<int>(rng() % 2);
    const int chords = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < chords; ++i)
      alpha.chords.push_back({names[i], static_cast<int>(rng() % 3),
                              1 + static_cast<int>(rng() % alpha.m),
                              1 + static_cast<int>(rng() % alpha.m)});
    // candidate differentials: random composable words of the right degree
    bool ok = true;
    for (int i = 0; i < chords && ok; ++i) {
      const Letter ci = alpha.chord_letter(i);
      std::vector<Monomial> candidates;
      // enumerate words up to length 3 in the other chords
      std::function<void(std::vector<Letter>&)> grow = [&](std::vector<Letter>& w) {
        if (!w.empty()) {
          int deg = 0;
          for (const Letter& u : w) deg += alpha.degree(u);
          if (deg == alpha.chords[static_cast<std::size_t>(i)].degree - 1 &&
              alpha.left(w.front()) == alpha.left(ci) &&
              alpha.right(w.back()) == alpha.right(ci)) {
            Monomial m;
            m.coeff = 1;
            m.word = w;
            candidates.push_back(m);
          }
          if (w.size() >= 3) return;
        }
        for (int j = 0; j < chords; ++j) {
          if (j == i) continue; // keep the assignment triangular-free
          const Letter cj = alpha.chord_letter(j);
          if (!w.empty() && alpha.right(w.back()) != alpha.left(cj)) continue;
          w.push_back(cj);
          grow(w);
          w.pop_back();
        }
      };
      std::vector<Letter> w;
      grow(w);
      std::vector<Monomial> picked;
      for (const Monomial& cand : candidates)
        if (rng() % 3 == 0) {
          Monomial t = cand;
          t.coeff = (rng() % 2 == 0) ? 1 : -1;
          picked.push_back(t);
        }
      pres.differential[i] = make_element(SpaceTag::A, std::move(picked));
    }
    try {
      validate_presentation(pres);
    } catch (const error&) {
      ok = false;
    }
    if (ok) return pres;
  }
}

// random cyclically composable M-type monomial, coeff 1
inline Monomial random_mcyc_monomial(std::mt19937& rng, const Alphabet& alpha,
                                     int maxlen) {
  for (;;) {
    Monomial m;
    m.coeff = 1;
    const int chords = static_cast<int>(alpha.chords.size());
    const bool hat_head = chords > 0 && rng() % 2 == 0;
    if (hat_head) m.word.push_back(alpha.hat_letter(static_cast<int>(rng() % chords)));
    else m.word.push_back(alpha.base_letter(1 + static_cast<int>(rng() % alpha.m)));
    const int extra = static_cast<int>(rng() % static_cast<unsigned>(maxlen));
    bool ok = true;
    for (int k = 0; k < extra && ok; ++k) {
      std::vector<Letter> options;
      for (int j = 0; j < chords; ++j) {
        const Letter cj = alpha.chord_letter(j);
        if (alpha.left(cj) == alpha.right(m.word.back())) options.push_back(cj);
      }
      if (options.empty()) ok = false;
      else m.word.push_back(options[rng() % options.size()]);
    }
    if (!ok) continue;
    if (!cyclically_composable(alpha, m.word)) continue;
    Monomial canon = canonical_cyclic(alpha, m);
    if (canon.is_zero()) continue;
    return canon;
  }
}

// random balanced excited monomial in the full algebra, built from a valid
// cyclic word over all letter variants
inline Monomial random_balanced_monomial(std::mt19937& rng, const Alphabet& alpha,
                                         int maxlen) {
  const int chords = static_cast<int>(alpha.chords.size());
  for (;;) {
    Monomial m;
    m.coeff = 1;
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxlen));
    bool ok = true;
    for (int k = 0; k < len && ok; ++k) {
      std::vector<Letter> options;
      auto offer = [&](const Letter& u) {
        if (m.word.empty() || alpha.left(u) == alpha.right(m.word.back()))
          options.push_back(u);
      };
      for (int j = 0; j < chords; ++j) {
        offer(alpha.chord_letter(j));
        offer(alpha.hat_letter(j));
        offer(alpha.dual_hat_letter(j));
      }
      for (int j = 1; j <= alpha.m; ++j) {
        offer(alpha.base_letter(j));
        offer(alpha.dual_base_letter(j));
      }
      if (options.empty()) ok = false;
      else m.word.push_back(options[rng() % options.size()]);
    }
    if (!ok || !cyclically_composable(alpha, m.word)) continue;
    TensorType tt = tensor_type(m);
    if (tt.p + tt.q == 0) continue; // need an excitable letter
    m.hbar = -1;
    m.sigma = tt.p - tt.q; // balance
    std::vector<int> marks;
    for (int i = 0; i < m.length(); ++i)
      if (is_excitable(m.word[static_cast<std::size_t>(i)].variant)) marks.push_back(i);
    m.excited = marks[rng() % marks.size()];
    Monomial canon = canonical_cyclic(alpha, m);
    if (canon.is_zero()) continue;
    return canon;
  }
}

} // namespace fixtures
