#include "cychom/differential.hpp"

#include "cychom/contraction.hpp"

namespace cychom {

const Element& DgaPresentation::d_of(int chord_id) const {
  auto it = differential.find(chord_id);
  if (it == differential.end())
    throw error("no differential entry for chord " + alphabet.chord(chord_id).name);
  return it->second;
}

namespace {

// replace the letter at position i by an element, with the Koszul sign of
// d crossing the preceding letters already applied by the caller
std::vector<Monomial> substitute_at(const Alphabet& alpha, const Monomial& t,
                                    int i, const Element& repl, int sign) {
  std::vector<Monomial> out;
  const auto idx = static_cast<std::size_t>(i);
  for (const Monomial& r : repl.terms) {
    Monomial g;
    g.coeff = t.coeff * r.coeff * sign;
    g.sigma = t.sigma + r.sigma;
    g.hbar = t.hbar + r.hbar;
    g.word.assign(t.word.begin(), t.word.begin() + i);
    g.word.insert(g.word.end(), r.word.begin(), r.word.end());
    g.word.insert(g.word.end(), t.word.begin() + i + 1, t.word.end());
    if (t.excited >= 0) {
      g.excited = t.excited < i ? t.excited
                                : t.excited + static_cast<int>(r.word.size()) - 1;
    }
    if (!g.word.empty() && !word_composable(alpha, g.word))
      throw error("substitution produced a non-composable word");
    if (g.word.empty()) g.unit_component = alpha.left(t.word[idx]);
    out.push_back(std::move(g));
  }
  return out;
}

int prefix_deg_sign(const Alphabet& alpha, const Monomial& t, int upto) {
  int d = 0;
  for (int k = 0; k < upto; ++k) d += alpha.degree(t.word[static_cast<std::size_t>(k)]);
  return d % 2 != 0 ? -1 : 1;
}

} // namespace

Element s_operator(const Alphabet& alpha, const Element& w) {
  std::vector<Monomial> out;
  for (const Monomial& t : w.terms) {
    // S(1_j) = 0, so unit terms drop out
    for (int i = 0; i < t.length(); ++i) {
      const Letter& u = t.word[static_cast<std::size_t>(i)];
      if (u.variant != Variant::Chord)
        throw error("S is defined on words in the algebra only");
      Monomial h = t;
      h.word[static_cast<std::size_t>(i)] = Letter{u.base, Variant::Hat};
      h.coeff *= prefix_deg_sign(alpha, t, i);
      out.push_back(std::move(h));
    }
  }
  return make_element(SpaceTag::M, std::move(out));
}

Element d_algebra(const DgaPresentation& pres, const Element& x) {
  const Alphabet& alpha = pres.alphabet;
  std::vector<Monomial> out;
  for (const Monomial& t : x.terms) {
    for (int i = 0; i < t.length(); ++i) {
      const Letter& u = t.word[static_cast<std::size_t>(i)];
      if (u.variant != Variant::Chord) throw error("d_algebra: non-chord letter");
      auto part = substitute_at(alpha, t, i, pres.d_of(u.base),
                                prefix_deg_sign(alpha, t, i));
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return make_element(SpaceTag::A, std::move(out));
}

Element d_module(const DgaPresentation& pres, const Element& x) {
  const Alphabet& alpha = pres.alphabet;
  const bool cyclic = x.space == SpaceTag::MCyc;
  std::vector<Monomial> out;
  for (const Monomial& t : x.terms) {
    for (int i = 0; i < t.length(); ++i) {
      const Letter& u = t.word[static_cast<std::size_t>(i)];
      const int sign = prefix_deg_sign(alpha, t, i);
      Element repl = zero_element(SpaceTag::M);
      if (u.variant == Variant::Chord) {
        repl = pres.d_of(u.base);
      } else if (u.variant == Variant::Hat) {
        // c x_from - x_to c + S(dc)
        Monomial lead;
        lead.coeff = 1;
        lead.word = {alpha.chord_letter(u.base),
                     alpha.base_letter(alpha.right(alpha.chord_letter(u.base)))};
        Monomial trail;
        trail.coeff = -1;
        trail.word = {alpha.base_letter(alpha.left(alpha.chord_letter(u.base))),
                      alpha.chord_letter(u.base)};
        repl = add(make_element(SpaceTag::M, {lead, trail}),
                   s_operator(alpha, pres.d_of(u.base)));
      } else if (u.variant == Variant::Base) {
        continue; // basepoints are cycles
      } else {
        throw error("d_module: dual letter in an M-type word");
      }
      auto part = substitute_at(alpha, t, i, repl, sign);
      if (cyclic)
        for (Monomial& g : part) g = canonical_cyclic(alpha, g);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return make_element(x.space, std::move(out));
}

Element d_exterior(const DgaPresentation& pres, const Element& x) {
  const Alphabet& alpha = pres.alphabet;
  std::vector<Monomial> out;
  for (const Monomial& t : x.terms) {
    const int pre = (t.sigma + t.hbar * (alpha.n - 3)) % 2 != 0 ? -1 : 1;
    for (int i = 0; i < t.length(); ++i) {
      const Letter& u = t.word[static_cast<std::size_t>(i)];
      if (u.variant != Variant::Chord) continue; // all other generators die
      auto part = substitute_at(alpha, t, i, pres.d_of(u.base),
                                pre * prefix_deg_sign(alpha, t, i));
      for (Monomial& g : part) g = canonical_cyclic(alpha, g);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return make_element(x.space, std::move(out));
}

Element d_balanced(const DifferentialContext& ctx, const Element& x) {
  return add(d_exterior(ctx.pres, x), bracket(ctx.alpha(), ctx.h11, x));
}

void validate_presentation(const DgaPresentation& pres) {
  const Alphabet& alpha = pres.alphabet;
  if (alpha.n < 2) throw error("n must be at least 2");
  if (alpha.m < 1) throw error("component count must be at least 1");
  for (std::size_t id = 0; id < alpha.chords.size(); ++id) {
    const ChordData& c = alpha.chords[id];
    if (c.from_component < 1 || c.from_component > alpha.m ||
        c.to_component < 1 || c.to_component > alpha.m)
      throw error("chord " + c.name + ": endpoint out of range");
    const Element& dc = pres.d_of(static_cast<int>(id));
    validate(alpha, dc);
    const Letter cl = alpha.chord_letter(static_cast<int>(id));
    for (const Monomial& t : dc.terms) {
      if (degree(alpha, t) != c.degree - 1)
        throw error("chord " + c.name + ": differential term of wrong degree");
      const int tl = t.word.empty() ? t.unit_component : alpha.left(t.word.front());
      const int tr = t.word.empty() ? t.unit_component : alpha.right(t.word.back());
      if (tl != alpha.left(cl) || tr != alpha.right(cl))
        throw error("chord " + c.name + ": differential does not preserve endpoints");
    }
  }
  for (std::size_t id = 0; id < alpha.chords.size(); ++id) {
    Element dd = d_algebra(pres, pres.d_of(static_cast<int>(id)));
    if (!dd.is_zero())
      throw error("d^2 != 0 on chord " + alpha.chords[id].name);
  }
}

} // namespace cychom
