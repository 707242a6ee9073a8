#include "cychom/hamiltonian.hpp"

#include "cychom/contraction.hpp"

namespace cychom {

const Element& HamiltonianData::H1(int q) const {
  if (q < 1 || q > static_cast<int>(h1.size()))
    throw error("H^1_" + std::to_string(q) + " not built (q_max too small)");
  return h1[static_cast<std::size_t>(q - 1)];
}

const Element& HamiltonianData::H(int p, int q) const {
  if (p == 1) return H1(q);
  auto it = user_higher.find({p, q});
  if (it == user_higher.end())
    throw error("H^" + std::to_string(p) + "_" + std::to_string(q) +
                " not available (supply the seed h^" + std::to_string(p) + "_0)");
  return it->second;
}

namespace {

Rational factorial(int q) {
  Rational r = 1;
  for (int i = 2; i <= q; ++i) r *= i;
  return r;
}

// append hb^{-1} u* to every term of an M-element and close the circle
Element close_with_dual(const Alphabet& alpha, const Element& body, const Letter& dual) {
  std::vector<Monomial> out;
  for (Monomial t : body.terms) {
    t = mul_hbar_right(alpha, std::move(t), -1);
    t.word.push_back(dual);
    out.push_back(canonical_cyclic(alpha, t));
  }
  return make_element(SpaceTag::UBal, std::move(out));
}

Element h11_prime_part(const DgaPresentation& pres) {
  const Alphabet& alpha = pres.alphabet;
  Element acc = zero_element(SpaceTag::UBal);
  for (std::size_t id = 0; id < alpha.chords.size(); ++id) {
    const int cid = static_cast<int>(id);
    Element sdc = s_operator(alpha, pres.d_of(cid));
    acc = add(acc, close_with_dual(alpha, sdc, alpha.dual_hat_letter(cid)));
  }
  return acc;
}

Element h11_doubleprime_part(const DgaPresentation& pres) {
  const Alphabet& alpha = pres.alphabet;
  std::vector<Monomial> out;
  for (std::size_t id = 0; id < alpha.chords.size(); ++id) {
    const int cid = static_cast<int>(id);
    const Letter c = alpha.chord_letter(cid);
    const Letter xs = alpha.base_letter(alpha.right(c)); // basepoint at the start
    const Letter xe = alpha.base_letter(alpha.left(c));  // basepoint at the end
    Monomial lead;
    lead.coeff = 1;
    lead.word = {c, xs};
    lead = mul_hbar_right(alpha, std::move(lead), -1);
    lead.word.push_back(alpha.dual_hat_letter(cid));
    out.push_back(canonical_cyclic(alpha, lead));
    Monomial trail;
    trail.coeff = -1;
    trail.word = {xe, c};
    trail = mul_hbar_right(alpha, std::move(trail), -1);
    trail.word.push_back(alpha.dual_hat_letter(cid));
    out.push_back(canonical_cyclic(alpha, trail));
  }
  return make_element(SpaceTag::UBal, std::move(out));
}

int g_xterm_a = 1, g_xterm_b = 0; // sign = (-1)^{(n-1)a+b}

Element basepoint_square_term(const Alphabet& alpha) {
  std::vector<Monomial> out;
  const int sign = ((alpha.n - 1) * g_xterm_a + g_xterm_b) % 2 != 0 ? -1 : 1;
  for (int j = 1; j <= alpha.m; ++j) {
    Monomial t;
    t.coeff = sign;
    t.word = {alpha.base_letter(j), alpha.base_letter(j)};
    t = mul_hbar_right(alpha, std::move(t), -1);
    t.word.push_back(alpha.dual_base_letter(j));
    t = mul_sigma_left(alpha, std::move(t), -1);
    out.push_back(canonical_cyclic(alpha, t));
  }
  return make_element(SpaceTag::UBal, std::move(out));
}

} // namespace

Element build_h1_seed(const DgaPresentation& pres, int q) {
  const Alphabet& alpha = pres.alphabet;
  const Element prime = h11_prime_part(pres);
  const Element dprime = h11_doubleprime_part(pres);
  if (q == 1) return add(prime, dprime);
  if (q == 2)
    return add(add(scale(Rational(1, 2), s_cyclic(alpha, prime)),
                   s_cyclic(alpha, dprime)),
               basepoint_square_term(alpha));
  return scale(1 / factorial(q), s_cyclic(alpha, add(prime, dprime), q - 1));
}

HamiltonianData build_h1(const DgaPresentation& pres, int q_max) {
  const Alphabet& alpha = pres.alphabet;
  HamiltonianData ham;
  ham.q_max = q_max;
  ham.h11_prime = h11_prime_part(pres);
  ham.h11_doubleprime = h11_doubleprime_part(pres);
  for (int q = 1; q <= q_max; ++q)
    ham.h1.push_back(excite(alpha, build_h1_seed(pres, q)));

  // first master equation gates everything downstream
  Element res = add(d_exterior(pres, ham.H1(1)),
                    star(alpha, ham.H1(1), ham.H1(1)));
  if (!res.is_zero())
    throw error("master equation failure at bidegree (1,1)");
  return ham;
}

void install_user_seed(const DgaPresentation& pres, HamiltonianData& ham,
                       int p, const Element& seed) {
  const Alphabet& alpha = pres.alphabet;
  if (p < 2) throw error("user Hamiltonian seeds start at p = 2");
  validate(alpha, seed);
  for (const Monomial& t : seed.terms) {
    const TensorType tt = tensor_type(t);
    if (!tt.balanced() || tt.p != p || tt.q != 0)
      throw error("h^" + std::to_string(p) + "_0 seed has wrong tensor type");
    if (t.is_excited()) throw error("Hamiltonian seeds must be unexcited");
  }
  if (!seed.is_zero()) {
    const auto deg = element_degree(alpha, seed);
    if (deg && *deg != -1)
      throw error("h^" + std::to_string(p) + "_0 seed must have degree -1");
  }
  ham.user_seed[p] = seed;
  for (int q = 0; q <= ham.q_max; ++q) {
    Element hq = q == 0 ? seed
                        : scale(1 / factorial(q), s_cyclic(alpha, seed, q));
    ham.user_higher[{p, q}] = excite(alpha, hq);
  }
}

bool MasterReport::all_zero() const {
  for (const Entry& e : entries)
    if (!e.zero) return false;
  return true;
}

MasterReport check_master(const DgaPresentation& pres, const HamiltonianData& ham,
                          int q_max) {
  const Alphabet& alpha = pres.alphabet;
  MasterReport rep;
  auto push = [&](std::string name, Element res) {
    rep.entries.push_back({std::move(name), res, res.is_zero()});
  };

  for (int q = 1; q <= q_max; ++q) {
    Element res = d_exterior(pres, ham.H1(q));
    for (int k = 1; k <= q; ++k) {
      const Element& lhs = ham.H1(q - k + 1);
      const Element& rhs = ham.H1(k);
      for (int j = 1; j <= k; ++j)
        res = add(res, star_lower(alpha, lhs, rhs, j));
    }
    push("I_" + std::to_string(q), std::move(res));
  }

  if (ham.has(2, 0)) {
    const Element& H20 = ham.H(2, 0);
    push("H20", add(d_exterior(pres, H20), bracket(alpha, ham.H1(1), H20)));
    if (ham.has(2, 1) && ham.q_max >= 2) {
      const Element& H21 = ham.H(2, 1);
      Element res = add(d_exterior(pres, H21), bracket(alpha, ham.H1(1), H21));
      res = add(res, star_lower(alpha, H20, ham.H1(2), 1));
      res = add(res, star_lower(alpha, H20, ham.H1(2), 2));
      push("H21", std::move(res));
    }
  }
  return rep;
}

Element leg_excited_part(const Alphabet& alpha, const Element& h, int leg_index) {
  std::vector<Monomial> out;
  for (const Monomial& t : h.terms) {
    if (!t.is_excited()) continue;
    std::vector<int> duals, legs;
    for (int i = 0; i < t.length(); ++i) {
      const Variant v = t.word[static_cast<std::size_t>(i)].variant;
      if (is_dual(v)) duals.push_back(i);
      else if (is_module(v)) legs.push_back(i);
    }
    if (duals.size() != 1) throw error("leg filter needs exactly one dual letter");
    const int pd = duals.front(), len = t.length();
    std::sort(legs.begin(), legs.end(), [&](int a, int b) {
      return (a - pd + len) % len < (b - pd + len) % len;
    });
    if (leg_index >= 1 && leg_index <= static_cast<int>(legs.size()) &&
        legs[static_cast<std::size_t>(leg_index - 1)] == t.excited)
      out.push_back(t);
  }
  return make_element(h.space, std::move(out));
}

DifferentialContext make_context(DgaPresentation pres, int cutoff) {
  validate_presentation(pres);
  HamiltonianData ham = build_h1(pres, 1);
  DifferentialContext ctx;
  ctx.h11 = ham.H1(1);
  ctx.cutoff = cutoff;
  for (std::size_t id = 0; id < pres.alphabet.chords.size(); ++id)
    ctx.s_dc[static_cast<int>(id)] =
        s_operator(pres.alphabet, pres.d_of(static_cast<int>(id)));
  ctx.pres = std::move(pres);
  return ctx;
}

} // namespace cychom

namespace cychom {
void set_xterm_sign_for_experiments(int a, int b) {
  g_xterm_a = a;
  g_xterm_b = b;
}
} // namespace cychom
