#include "cychom/monomial.hpp"

namespace cychom {

int compare_key(const Monomial& a, const Monomial& b) {
  if (a.sigma != b.sigma) return a.sigma < b.sigma ? -1 : 1;
  if (a.hbar != b.hbar) return a.hbar < b.hbar ? -1 : 1;
  const std::size_t la = a.word.size(), lb = b.word.size();
  if (la != lb) return la < lb ? -1 : 1;
  for (std::size_t i = 0; i < la; ++i) {
    if (a.word[i] == b.word[i]) continue;
    return letter_less(a.word[i], b.word[i]) ? -1 : 1;
  }
  if (a.excited != b.excited) return a.excited < b.excited ? -1 : 1;
  if (la == 0 && a.unit_component != b.unit_component)
    return a.unit_component < b.unit_component ? -1 : 1;
  return 0;
}

int degree(const Alphabet& alpha, const Monomial& m) {
  int d = m.sigma + m.hbar * (alpha.n - 3);
  for (const Letter& u : m.word) d += alpha.degree(u);
  return d;
}

TensorType tensor_type(const Monomial& m) {
  TensorType t;
  t.s = m.sigma;
  t.h = m.hbar;
  for (const Letter& u : m.word) {
    if (is_dual(u.variant)) ++t.p;
    else if (is_module(u.variant)) ++t.q;
  }
  return t;
}

int sigma_comm_sign(const Alphabet& alpha, const Letter& u) {
  int e = alpha.degree(u);
  if (!is_chord(u.variant)) e += 1; // jp-charge
  return (e % 2 != 0) ? -1 : 1;
}

int hbar_comm_sign(const Alphabet& alpha, const Letter& u) {
  int e = alpha.degree(u) * (alpha.n - 3);
  if (is_dual(u.variant)) e += 1; // st-charge
  return (e % 2 != 0) ? -1 : 1;
}

Monomial normalize_factors(const Alphabet& alpha, const Rational& coeff,
                           const std::vector<RawFactor>& factors,
                           int unit_component) {
  Monomial m;
  m.coeff = coeff;
  m.unit_component = unit_component;
  int sign = 1;
  for (const RawFactor& f : factors) {
    switch (f.kind) {
      case RawFactor::Kind::Generator:
        m.word.push_back(f.letter);
        if (f.excited) {
          if (m.excited >= 0) throw error("monomial has more than one excited letter");
          m.excited = static_cast<int>(m.word.size()) - 1;
        }
        break;
      case RawFactor::Kind::Sigma:
        if (f.power % 2 != 0) {
          for (const Letter& u : m.word) sign *= sigma_comm_sign(alpha, u);
        }
        sign *= sigma_hbar_swap_sign(alpha, f.power, m.hbar);
        m.sigma += f.power;
        break;
      case RawFactor::Kind::Hbar:
        if (f.power % 2 != 0) {
          for (const Letter& u : m.word) sign *= hbar_comm_sign(alpha, u);
        }
        m.hbar += f.power;
        break;
    }
  }
  m.coeff *= sign;
  return m;
}

bool word_composable(const Alphabet& alpha, const std::vector<Letter>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (alpha.right(w[i]) != alpha.left(w[i + 1])) return false;
  return true;
}

bool cyclically_composable(const Alphabet& alpha, const std::vector<Letter>& w) {
  if (w.empty()) return false;
  return word_composable(alpha, w) && alpha.right(w.back()) == alpha.left(w.front());
}

Monomial monomial_mul(const Alphabet& alpha, const Monomial& a, const Monomial& b) {
  if (a.is_excited() && b.is_excited())
    throw error("product of two excited monomials");
  Monomial m;
  if (a.is_zero() || b.is_zero()) { m.coeff = 0; return m; }

  // junction composability over the idempotent ring
  if (!a.word.empty() && !b.word.empty()) {
    if (alpha.right(a.word.back()) != alpha.left(b.word.front())) { m.coeff = 0; return m; }
  } else if (a.word.empty() && !b.word.empty()) {
    if (a.unit_component != alpha.left(b.word.front())) { m.coeff = 0; return m; }
  } else if (!a.word.empty() && b.word.empty()) {
    if (alpha.right(a.word.back()) != b.unit_component) { m.coeff = 0; return m; }
  } else {
    if (a.unit_component != b.unit_component) { m.coeff = 0; return m; }
    m.unit_component = a.unit_component;
  }

  int sign = 1;
  // move b's prefix exponents left across a's word and hbar group
  if (b.sigma % 2 != 0)
    for (const Letter& u : a.word) sign *= sigma_comm_sign(alpha, u);
  sign *= sigma_hbar_swap_sign(alpha, b.sigma, a.hbar);
  if (b.hbar % 2 != 0)
    for (const Letter& u : a.word) sign *= hbar_comm_sign(alpha, u);

  m.coeff = a.coeff * b.coeff * sign;
  m.sigma = a.sigma + b.sigma;
  m.hbar = a.hbar + b.hbar;
  m.word = a.word;
  m.word.insert(m.word.end(), b.word.begin(), b.word.end());
  if (!m.word.empty()) m.unit_component = alpha.left(m.word.front());
  if (a.is_excited()) m.excited = a.excited;
  else if (b.is_excited()) m.excited = a.length() + b.excited;
  return m;
}

Monomial mul_sigma_left(const Alphabet& alpha, Monomial m, int k) {
  m.coeff *= sigma_hbar_swap_sign(alpha, k, 0); // lands on the sigma group: no crossing
  m.sigma += k;
  return m;
}

Monomial mul_hbar_left(const Alphabet& alpha, Monomial m, int k) {
  // crosses the sigma group only
  m.coeff *= sigma_hbar_swap_sign(alpha, m.sigma, k);
  m.hbar += k;
  return m;
}

Monomial mul_sigma_right(const Alphabet& alpha, Monomial m, int k) {
  int sign = 1;
  if (k % 2 != 0)
    for (const Letter& u : m.word) sign *= sigma_comm_sign(alpha, u);
  sign *= sigma_hbar_swap_sign(alpha, k, m.hbar);
  m.coeff *= sign;
  m.sigma += k;
  return m;
}

Monomial mul_hbar_right(const Alphabet& alpha, Monomial m, int k) {
  int sign = 1;
  if (k % 2 != 0)
    for (const Letter& u : m.word) sign *= hbar_comm_sign(alpha, u);
  m.coeff *= sign;
  m.hbar += k;
  return m;
}

} // namespace cychom
