#include "cychom/contraction.hpp"

#include "cychom/cyclic.hpp"

#include <algorithm>
#include <array>

namespace cychom {

namespace {

// Result-space classification for contraction sums: M-type and M*-type
// results keep their tau-space tags, anything else is a balanced excited
// element of the full algebra.
SpaceTag classify(const std::vector<Monomial>& terms) {
  bool m_type = true, mstar_type = true;
  for (const Monomial& t : terms) {
    m_type = m_type && is_m_type(t);
    mstar_type = mstar_type && is_mstar_type(t);
  }
  if (m_type && !terms.empty()) return SpaceTag::TauMBal;
  if (mstar_type && !terms.empty()) return SpaceTag::TauMStarBal;
  return SpaceTag::ExcitedUBal;
}

// experiment hook: extra (-1)^{(n-1)a+b} factors per pairing type, and the
// emitted-hbar placement; resolved to a fixed convention before release
struct ContractionSigns {
  int base_u_exc_a = 1, base_u_exc_b = 0;
  int base_v_exc_a = 0, base_v_exc_b = 0;
  int hat_u_exc_a = 0, hat_u_exc_b = 0;
  int hat_v_exc_a = 0, hat_v_exc_b = 0;
  int placement = 0; // 0 junction, 1 outside-left, 2 outside-right, 3 free bump
  // operator-Koszul corrections: letter charge against remnant word and
  // prefix charges on either side
  int kva = 0, kvb = 0, kvc = 0;  // K(v, X-word), K(v, X-prefix), K(v, Y-prefix)
  int kud = 0, kue = 0, kuf = 0;  // K(u, Y-word), K(u, Y-prefix), K(u, X-prefix)
  // arc features: charges of the arc from the contraction letter forward to
  // the factor's own mark (deg, jp, st bits per side)
  int arc_u_deg = 0, arc_u_jp = 0, arc_u_st = 0;
  int arc_v_deg = 0, arc_v_jp = 0, arc_v_st = 0;
  int kfull_vx = 0, kfull_uy = 0; // K(v, X-full), K(u, Y-full)
};
ContractionSigns g_signs;
bool g_s_after_hat = false;

// One glued pair: x rotated so u (at pu) is last, y rotated so v (at pv)
// is first, u and v removed, one hbar emitted as a left factor.
void contract_pair(const Alphabet& alpha, const Monomial& mx, int pu,
                   const Monomial& my, int pv, std::vector<Monomial>& out) {
  const Letter& u = mx.word[static_cast<std::size_t>(pu)];
  const Letter& v = my.word[static_cast<std::size_t>(pv)];
  if (!dual_matches(u, v)) return;
  const bool ue = mx.excited == pu, ve = my.excited == pv;
  if (ue == ve) return; // exactly one excited
  int pair_sign = 1;
  {
    const bool base_pair = u.variant == Variant::DualBase;
    int a = 0, b = 0;
    if (base_pair && ue) { a = g_signs.base_u_exc_a; b = g_signs.base_u_exc_b; }
    if (base_pair && ve) { a = g_signs.base_v_exc_a; b = g_signs.base_v_exc_b; }
    if (!base_pair && ue) { a = g_signs.hat_u_exc_a; b = g_signs.hat_u_exc_b; }
    if (!base_pair && ve) { a = g_signs.hat_v_exc_a; b = g_signs.hat_v_exc_b; }
    if (((alpha.n - 1) * a + b) % 2 != 0) pair_sign = -1;
  }

  Monomial rx = rotate_to_front(alpha, mx, (pu + 1) % mx.length());
  Monomial ry = rotate_to_front(alpha, my, pv);

  Monomial a = rx; // u now sits last
  a.word.pop_back();
  a.unit_component = alpha.left(u);
  if (a.excited == a.length()) a.excited = -1; // mark consumed with u
  Monomial b = ry; // v now sits first
  b.word.erase(b.word.begin());
  b.unit_component = alpha.right(v);
  if (b.excited == 0) b.excited = -1; // mark consumed with v
  else if (b.excited > 0) b.excited -= 1;

  // arc-charge features between contraction point and the factor's mark
  if (g_signs.arc_u_deg || g_signs.arc_u_jp || g_signs.arc_u_st) {
    if (mx.is_excited() && mx.excited != pu) {
      int deg = 0, jp = 0, st = 0;
      for (int i = (pu + 1) % mx.length(); i != mx.excited;
           i = (i + 1) % mx.length()) {
        const Letter& w = mx.word[static_cast<std::size_t>(i)];
        deg += alpha.degree(w);
        jp += is_chord(w.variant) ? 0 : 1;
        st += is_dual(w.variant) ? 1 : 0;
      }
      if (g_signs.arc_u_deg && deg % 2 != 0) pair_sign = -pair_sign;
      if (g_signs.arc_u_jp && jp % 2 != 0) pair_sign = -pair_sign;
      if (g_signs.arc_u_st && st % 2 != 0) pair_sign = -pair_sign;
    }
  }
  if (g_signs.arc_v_deg || g_signs.arc_v_jp || g_signs.arc_v_st) {
    if (my.is_excited() && my.excited != pv) {
      int deg = 0, jp = 0, st = 0;
      for (int i = (pv + 1) % my.length(); i != my.excited;
           i = (i + 1) % my.length()) {
        const Letter& w = my.word[static_cast<std::size_t>(i)];
        deg += alpha.degree(w);
        jp += is_chord(w.variant) ? 0 : 1;
        st += is_dual(w.variant) ? 1 : 0;
      }
      if (g_signs.arc_v_deg && deg % 2 != 0) pair_sign = -pair_sign;
      if (g_signs.arc_v_jp && jp % 2 != 0) pair_sign = -pair_sign;
      if (g_signs.arc_v_st && st % 2 != 0) pair_sign = -pair_sign;
    }
  }

  // operator-Koszul against the full factors
  if (g_signs.kfull_vx || g_signs.kfull_uy) {
    auto full = [&](const Monomial& m) {
      std::array<int, 3> c{m.sigma + m.hbar * (alpha.n - 3), m.sigma, m.hbar};
      for (const Letter& w : m.word) {
        c[0] += alpha.degree(w);
        c[1] += is_chord(w.variant) ? 0 : 1;
        c[2] += is_dual(w.variant) ? 1 : 0;
      }
      return c;
    };
    auto charge1 = [&](const Letter& w) {
      return std::array<int, 3>{alpha.degree(w), is_chord(w.variant) ? 0 : 1,
                                is_dual(w.variant) ? 1 : 0};
    };
    auto kos = [&](const std::array<int, 3>& x, const std::array<int, 3>& y) {
      return ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % 2 != 0) ? -1 : 1;
    };
    if (g_signs.kfull_vx && kos(charge1(v), full(mx)) < 0) pair_sign = -pair_sign;
    if (g_signs.kfull_uy && kos(charge1(u), full(my)) < 0) pair_sign = -pair_sign;
  }

  // operator-Koszul corrections (letter charges vs. remnant charges)
  {
    auto charges = [&](const Letter& w) {
      return std::array<int, 3>{alpha.degree(w), is_chord(w.variant) ? 0 : 1,
                                is_dual(w.variant) ? 1 : 0};
    };
    auto kos = [&](const std::array<int, 3>& x, const std::array<int, 3>& y) {
      return ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % 2 != 0) ? -1 : 1;
    };
    std::array<int, 3> cu = charges(u), cv = charges(v);
    std::array<int, 3> xw{0, 0, 0}, yw{0, 0, 0};
    for (const Letter& w : a.word) {
      auto c = charges(w);
      for (int k = 0; k < 3; ++k) xw[k] += c[k];
    }
    for (const Letter& w : b.word) {
      auto c = charges(w);
      for (int k = 0; k < 3; ++k) yw[k] += c[k];
    }
    std::array<int, 3> xp{a.sigma * 1 + a.hbar * (alpha.n - 3), a.sigma, a.hbar};
    std::array<int, 3> yp{b.sigma * 1 + b.hbar * (alpha.n - 3), b.sigma, b.hbar};
    if (g_signs.kva && kos(cv, xw) < 0) pair_sign = -pair_sign;
    if (g_signs.kvb && kos(cv, xp) < 0) pair_sign = -pair_sign;
    if (g_signs.kvc && kos(cv, yp) < 0) pair_sign = -pair_sign;
    if (g_signs.kud && kos(cu, yw) < 0) pair_sign = -pair_sign;
    if (g_signs.kue && kos(cu, yp) < 0) pair_sign = -pair_sign;
    if (g_signs.kuf && kos(cu, xp) < 0) pair_sign = -pair_sign;
  }

  // the emitted hbar sits at the glued junction, where u and v were removed
  Monomial g;
  if (g_signs.placement == 0)
    g = monomial_mul(alpha, mul_hbar_right(alpha, a, 1), b);
  else if (g_signs.placement == 1)
    g = mul_hbar_left(alpha, monomial_mul(alpha, a, b), 1);
  else if (g_signs.placement == 2)
    g = mul_hbar_right(alpha, monomial_mul(alpha, a, b), 1);
  else {
    g = monomial_mul(alpha, a, b);
    g.hbar += 1; // coefficient-ring bump, no crossing sign
  }
  if (g.is_zero()) throw error("internal: contraction junction not composable");
  g.coeff *= pair_sign;
  if (g.word.empty()) return; // the (0,0)-component of the balanced space is zero
  out.push_back(canonical_cyclic(alpha, g));
}

std::vector<int> dual_positions(const Monomial& m) {
  std::vector<int> out;
  for (int i = 0; i < m.length(); ++i)
    if (is_dual(m.word[static_cast<std::size_t>(i)].variant)) out.push_back(i);
  return out;
}

std::vector<int> module_positions(const Monomial& m) {
  std::vector<int> out;
  for (int i = 0; i < m.length(); ++i)
    if (is_module(m.word[static_cast<std::size_t>(i)].variant)) out.push_back(i);
  return out;
}

} // namespace

Element star(const Alphabet& alpha, const Element& x, const Element& y) {
  std::vector<Monomial> out;
  for (const Monomial& mx : x.terms)
    for (const Monomial& my : y.terms)
      for (int pu : dual_positions(mx))
        for (int pv : module_positions(my))
          contract_pair(alpha, mx, pu, my, pv, out);
  return make_element(classify(out), std::move(out));
}

Element star_lower(const Alphabet& alpha, const Element& x, const Element& y, int j) {
  if (j < 1) throw error("contraction leg index must be positive");
  std::vector<Monomial> out;
  for (const Monomial& my : y.terms) {
    const auto duals = dual_positions(my);
    if (duals.size() != 1)
      throw error("star_lower: right factor must have exactly one dual letter");
    auto legs = module_positions(my);
    if (j > static_cast<int>(legs.size()))
      throw error("star_lower: leg index out of range");
    const int pd = duals.front(), len = my.length();
    std::sort(legs.begin(), legs.end(), [&](int a, int b) {
      return (a - pd + len) % len < (b - pd + len) % len;
    });
    const int pv = legs[static_cast<std::size_t>(j - 1)];
    for (const Monomial& mx : x.terms)
      for (int pu : dual_positions(mx)) contract_pair(alpha, mx, pu, my, pv, out);
  }
  return make_element(classify(out), std::move(out));
}

Element star_upper(const Alphabet& alpha, const Element& x, int i, const Element& y) {
  if (i < 1) throw error("contraction leg index must be positive");
  std::vector<Monomial> out;
  for (const Monomial& mx : x.terms) {
    const auto heads = module_positions(mx);
    if (heads.size() != 1)
      throw error("star_upper: left factor must have exactly one hat/basepoint letter");
    auto duals = dual_positions(mx);
    if (i > static_cast<int>(duals.size()))
      throw error("star_upper: leg index out of range");
    const int ph = heads.front(), len = mx.length();
    std::sort(duals.begin(), duals.end(), [&](int a, int b) {
      return (ph - a + len) % len < (ph - b + len) % len;
    });
    const int pu = duals[static_cast<std::size_t>(i - 1)];
    for (const Monomial& my : y.terms)
      for (int pv : module_positions(my)) contract_pair(alpha, mx, pu, my, pv, out);
  }
  return make_element(classify(out), std::move(out));
}

Element bracket(const Alphabet& alpha, const Element& x, const Element& y) {
  Element out = zero_element(SpaceTag::ExcitedUBal);
  for (const auto& [dx, ex] : degree_components(alpha, x)) {
    for (const auto& [dy, ey] : degree_components(alpha, y)) {
      const int sign = (dx * dy) % 2 != 0 ? -1 : 1;
      out = add(out, sub(star(alpha, ex, ey), scale(sign, star(alpha, ey, ex))));
    }
  }
  return out;
}

Element op_down(const Alphabet& alpha, const Element& x, std::span<const Element> args) {
  Element r = x;
  for (const Element& a : args) r = star_upper(alpha, r, 1, a);
  return r;
}

Element op_up(const Alphabet& alpha, const Element& y, std::span<const Element> args) {
  Element r = y;
  for (const Element& b : args) r = star_lower(alpha, b, r, 1);
  return r;
}

Element op_updown(const Alphabet& alpha, const Element& y, const Element& a, const Element& b) {
  return star(alpha, star_lower(alpha, a, y, 1), b);
}

Element op_downup(const Alphabet& alpha, const Element& y, const Element& a, const Element& b) {
  return star(alpha, star_lower(alpha, b, y, 2), a);
}

Element op_circ(const Alphabet& alpha, const Element& x, const Element& y) {
  return star(alpha, x, y);
}

Element s_cyclic(const Alphabet& alpha, const Element& x, int k) {
  Element cur = x;
  for (int round = 0; round < k; ++round) {
    std::vector<Monomial> out;
    for (const Monomial& t : cur.terms) {
      for (int i = 0; i < t.length(); ++i) {
        const Letter& u = t.word[static_cast<std::size_t>(i)];
        if (u.variant != Variant::Chord) continue;
        Monomial g = t;
        g.word[static_cast<std::size_t>(i)] = Letter{u.base, Variant::Hat};
        // collect the inline sigma^{-1} into the prefix
        int sign = 1;
        const int upto = g_s_after_hat ? i + 1 : i;
        for (int kk = 0; kk < upto; ++kk)
          sign *= sigma_comm_sign(alpha, g.word[static_cast<std::size_t>(kk)]);
        sign *= sigma_hbar_swap_sign(alpha, 1, t.hbar);
        g.coeff *= sign;
        g.sigma -= 1;
        out.push_back(canonical_cyclic(alpha, g));
      }
    }
    const SpaceTag out_space =
        (cur.space == SpaceTag::UBal || cur.space == SpaceTag::ExcitedUBal)
            ? cur.space
            : SpaceTag::U;
    cur = make_element(out_space, std::move(out));
  }
  return cur;
}

} // namespace cychom

namespace cychom {
void set_contraction_signs_for_experiments(int bua, int bub, int bva, int bvb,
                                           int hua, int hub, int hva, int hvb,
                                           int placement) {
  g_signs = {bua, bub, bva, bvb, hua, hub, hva, hvb, placement, 0, 0, 0, 0, 0, 0};
}
void set_contraction_full_koszul_for_experiments(int vx, int uy) {
  g_signs.kfull_vx = vx;
  g_signs.kfull_uy = uy;
}
void set_contraction_arcs_for_experiments(int ud, int uj, int us, int vd, int vj,
                                          int vs) {
  g_signs.arc_u_deg = ud;
  g_signs.arc_u_jp = uj;
  g_signs.arc_u_st = us;
  g_signs.arc_v_deg = vd;
  g_signs.arc_v_jp = vj;
  g_signs.arc_v_st = vs;
}
void set_contraction_koszul_for_experiments(int kva, int kvb, int kvc, int kud,
                                            int kue, int kuf) {
  g_signs.kva = kva;
  g_signs.kvb = kvb;
  g_signs.kvc = kvc;
  g_signs.kud = kud;
  g_signs.kue = kue;
  g_signs.kuf = kuf;
}
void set_s_after_hat_for_experiments(bool v) { g_s_after_hat = v; }
} // namespace cychom
