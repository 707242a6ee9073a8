#include "cychom/cyclic.hpp"

#include <algorithm>

namespace cychom {

namespace {

int g_mark_jp_delta = 0; // experiment: marked letter's jp charge shift
int g_mark_st_delta = 0; // experiment: marked letter's st charge shift

// jp/st charges of a single letter
int jp_charge(const Letter& u) { return is_chord(u.variant) ? 0 : 1; }
int st_charge(const Letter& u) { return is_dual(u.variant) ? 1 : 0; }

int jp_charge_marked(const Letter& u, bool marked) {
  return jp_charge(u) + (marked ? g_mark_jp_delta : 0);
}
int st_charge_marked(const Letter& u, bool marked) {
  return st_charge(u) + (marked ? g_mark_st_delta : 0);
}

} // namespace

void set_mark_charges_for_experiments(int jp_delta, int st_delta) {
  g_mark_jp_delta = jp_delta;
  g_mark_st_delta = st_delta;
}

Monomial rotate_once(const Alphabet& alpha, Monomial m) {
  if (m.word.empty()) throw error("cannot rotate an empty word");
  const Letter a1 = m.word.front();
  const bool a1_marked = m.excited == 0;

  // commute a1 leftward across the hbar and sigma prefix groups
  int sign = 1;
  if (m.hbar % 2 != 0) sign *= hbar_comm_sign(alpha, a1);
  if (m.sigma % 2 != 0) sign *= sigma_comm_sign(alpha, a1);

  // graded cyclic permutation signs against the rest (prefix included)
  int rest_deg = m.sigma + m.hbar * (alpha.n - 3);
  int rest_jp = m.sigma;
  int rest_st = m.hbar;
  for (std::size_t i = 1; i < m.word.size(); ++i) {
    const bool marked = m.excited == static_cast<int>(i);
    rest_deg += alpha.degree(m.word[i]);
    rest_jp += jp_charge_marked(m.word[i], marked);
    rest_st += st_charge_marked(m.word[i], marked);
  }
  if ((alpha.degree(a1) * rest_deg) % 2 != 0) sign = -sign;                   // eps1
  if (jp_charge_marked(a1, a1_marked) % 2 != 0 && rest_jp % 2 != 0) sign = -sign; // eps2
  if (st_charge_marked(a1, a1_marked) % 2 != 0 && rest_st % 2 != 0) sign = -sign; // eps3

  m.coeff *= sign;
  std::rotate(m.word.begin(), m.word.begin() + 1, m.word.end());
  if (m.excited >= 0)
    m.excited = (m.excited == 0) ? m.length() - 1 : m.excited - 1;
  return m;
}

Monomial rotate_to_front(const Alphabet& alpha, Monomial m, int pos) {
  if (pos < 0 || pos >= m.length()) throw error("rotation index out of range");
  for (int i = 0; i < pos; ++i) m = rotate_once(alpha, m);
  return m;
}

Monomial canonical_cyclic(const Alphabet& alpha, const Monomial& m) {
  if (m.is_zero()) return m;
  if (!cyclically_composable(alpha, m.word))
    throw error("word is not cyclically composable");

  Monomial best = m;
  Monomial cur = m;
  const int len = m.length();
  for (int i = 1; i < len; ++i) {
    cur = rotate_once(alpha, cur);
    if (cur.word == m.word && cur.excited == m.excited) {
      // a nontrivial rotation fixes the marked word; sign -1 kills the class
      if (cur.coeff != m.coeff) { best.coeff = 0; return best; }
      continue;
    }
    if (compare_key(cur, best) < 0) best = cur;
  }
  return best;
}

Element to_cyclic(const Alphabet& alpha, SpaceTag space, const Element& e) {
  std::vector<Monomial> terms;
  terms.reserve(e.terms.size());
  for (const Monomial& t : e.terms) terms.push_back(canonical_cyclic(alpha, t));
  return make_element(space, std::move(terms));
}

Element excite(const Alphabet& alpha, const Element& e) {
  SpaceTag target = SpaceTag::ExcitedUBal;
  if (e.space == SpaceTag::TauMBal) target = SpaceTag::TauMBal;
  if (e.space == SpaceTag::TauMStarBal) target = SpaceTag::TauMStarBal;
  std::vector<Monomial> terms;
  for (const Monomial& t : e.terms) {
    if (t.is_excited()) throw error("excite: input already excited");
    for (int i = 0; i < t.length(); ++i) {
      if (!is_excitable(t.word[static_cast<std::size_t>(i)].variant)) continue;
      Monomial marked = t;
      marked.excited = i;
      terms.push_back(canonical_cyclic(alpha, marked));
    }
  }
  return make_element(target, std::move(terms));
}

Element forget_excitation(const Alphabet& alpha, SpaceTag space, const Element& e) {
  std::vector<Monomial> terms;
  for (Monomial t : e.terms) {
    t.excited = -1;
    // re-canonicalize: removing the mark can restore a rotational symmetry
    terms.push_back(is_cyclic_space(space) ? canonical_cyclic(alpha, t) : t);
  }
  return make_element(space, std::move(terms));
}

namespace {

Element theta_shift(const Alphabet& alpha, const Element& e, bool inverse,
                    SpaceTag target) {
  std::vector<Monomial> terms;
  for (Monomial t : e.terms) {
    if (inverse) {
      t = mul_hbar_right(alpha, mul_sigma_right(alpha, std::move(t), 1), 1);
    } else {
      t = mul_sigma_right(alpha, mul_hbar_right(alpha, std::move(t), -1), -1);
    }
    terms.push_back(canonical_cyclic(alpha, t));
  }
  return make_element(target, std::move(terms));
}

} // namespace

Element beta(const Alphabet& alpha, const Element& e) {
  return theta_shift(alpha, e, false, SpaceTag::TauMBal);
}

Element beta_underline(const Alphabet& alpha, const Element& e) {
  return excite(alpha, beta(alpha, e));
}

Element beta_inv(const Alphabet& alpha, const Element& e) {
  return theta_shift(alpha, e, true, SpaceTag::MCyc);
}

Element beta_underline_inv(const Alphabet& alpha, const Element& e) {
  for (const Monomial& t : e.terms) {
    if (!t.is_excited() || !is_module(t.word[static_cast<std::size_t>(t.excited)].variant))
      throw error("beta_underline_inv: term is not an excited M-type monomial");
  }
  return beta_inv(alpha, forget_excitation(alpha, SpaceTag::TauMBal, e));
}

} // namespace cychom
