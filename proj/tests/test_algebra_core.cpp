#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/fixtures.hpp"

#include <random>
#include <variant>

using namespace cychom;

namespace {

// Independent sign oracle: bubble every sigma/hbar factor to the front one
// adjacent swap at a time, reading each swap sign straight off the tables.
struct Atom {
  enum Kind { Sig, Hb, Gen } kind;
  Letter letter{};
  int power = 0; // +-1 for Sig/Hb atoms
};

Monomial bubble_normalize(const Alphabet& alpha, std::vector<Atom> atoms,
                          bool right_to_left) {
  int sign = 1;
  auto rank = [](const Atom& a) { return a.kind == Atom::Sig ? 0 : a.kind == Atom::Hb ? 1 : 2; };
  bool moved = true;
  while (moved) {
    moved = false;
    if (right_to_left) {
      for (std::size_t i = atoms.size(); i-- > 1;) {
        Atom &l = atoms[i - 1], &r = atoms[i];
        if (rank(l) <= rank(r)) continue;
        if (l.kind == Atom::Gen && r.kind == Atom::Sig) sign *= sigma_comm_sign(alpha, l.letter);
        else if (l.kind == Atom::Gen && r.kind == Atom::Hb) sign *= hbar_comm_sign(alpha, l.letter);
        else sign *= sigma_hbar_swap_sign(alpha, 1, 1); // Hb past Sig
        std::swap(l, r);
        moved = true;
      }
    } else {
      for (std::size_t i = 1; i < atoms.size(); ++i) {
        Atom &l = atoms[i - 1], &r = atoms[i];
        if (rank(l) <= rank(r)) continue;
        if (l.kind == Atom::Gen && r.kind == Atom::Sig) sign *= sigma_comm_sign(alpha, l.letter);
        else if (l.kind == Atom::Gen && r.kind == Atom::Hb) sign *= hbar_comm_sign(alpha, l.letter);
        else sign *= sigma_hbar_swap_sign(alpha, 1, 1);
        std::swap(l, r);
        moved = true;
      }
    }
  }
  Monomial m;
  m.coeff = sign;
  for (const Atom& a : atoms) {
    if (a.kind == Atom::Sig) m.sigma += a.power;
    else if (a.kind == Atom::Hb) m.hbar += a.power;
    else m.word.push_back(a.letter);
  }
  return m;
}

Alphabet two_component_alphabet(int n) {
  Alphabet alpha;
  alpha.n = n;
  alpha.m = 2;
  alpha.chords.push_back({"c", 1, 2, 1});  // starts on 2, ends on 1
  alpha.chords.push_back({"e", 1, 1, 2});  // starts on 1, ends on 2
  return alpha;
}

} // namespace

TEST_CASE("degree formulas for every generator variant") {
  for (int n : {2, 3, 4, 5}) {
    Alphabet alpha = fixtures::round_sphere(n).alphabet;
    const Letter a = alpha.chord_letter(0);
    CHECK(alpha.degree(a) == n - 1);
    CHECK(alpha.degree(alpha.hat_letter(0)) == n);                 // |c|+1
    CHECK(alpha.degree(alpha.base_letter(1)) == 0);
    CHECK(alpha.degree(alpha.dual_hat_letter(0)) == n - 3 - n);    // n-3-|c-hat|
    CHECK(alpha.degree(alpha.dual_base_letter(1)) == n - 3);
  }
}

TEST_CASE("degree of monomials: unit, E-term, theta") {
  for (int n : {2, 3, 5}) {
    Alphabet alpha = fixtures::round_sphere(n).alphabet;
    Monomial unit;
    unit.coeff = 1;
    CHECK(degree(alpha, unit) == 0);

    // hb^{-1} x* s has degree -(n-3) + (n-3) + 1 = 1
    Monomial e = normalize_factors(
        alpha, 1,
        {RawFactor::hb(-1), RawFactor::gen(alpha.dual_base_letter(1), true),
         RawFactor::sig(1)});
    CHECK(degree(alpha, e) == 1);

    // theta = hb^{-1} s^{-1} has degree 2-n
    Monomial theta = normalize_factors(alpha, 1, {RawFactor::hb(-1), RawFactor::sig(-1)});
    CHECK(degree(alpha, theta) == 2 - n);
  }
}

TEST_CASE("concat respects idempotent composability") {
  Alphabet alpha = two_component_alphabet(3);
  Monomial c, e;
  c.coeff = 1;
  c.word = {alpha.chord_letter(0)}; // component pair (1,2)
  e.coeff = 1;
  e.word = {alpha.chord_letter(1)}; // component pair (2,1)

  // c then e: right(c)=2 == left(e)=2
  Monomial ce = monomial_mul(alpha, c, e);
  CHECK(ce.coeff == 1);
  CHECK(ce.word.size() == 2);

  // c then c: right(c)=2 != left(c)=1, tensor over R vanishes
  Monomial cc = monomial_mul(alpha, c, c);
  CHECK(cc.is_zero());
}

TEST_CASE("concat of sigma-dressed factors picks up commutation signs") {
  // (s a)(s a) = - s^2 a a when |a| is odd
  Alphabet alpha = fixtures::round_sphere(2).alphabet; // |a| = 1
  Monomial sa = normalize_factors(alpha, 1, {RawFactor::sig(1), RawFactor::gen(alpha.chord_letter(0))});
  Monomial prod = monomial_mul(alpha, sa, sa);
  CHECK(prod.sigma == 2);
  CHECK(prod.hbar == 0);
  CHECK(prod.word.size() == 2);
  CHECK(prod.coeff == -1);
  CHECK(degree(alpha, prod) == 2 * degree(alpha, sa));
}

TEST_CASE("concat rejects doubly excited products") {
  Alphabet alpha = fixtures::round_sphere(2).alphabet;
  Monomial m = normalize_factors(alpha, 1, {RawFactor::gen(alpha.hat_letter(0), true)});
  CHECK_THROWS_AS(monomial_mul(alpha, m, m), error);
}

TEST_CASE("normalize: canceling pairs and single letters") {
  Alphabet alpha = fixtures::round_sphere(2).alphabet;

  Monomial id = normalize_factors(alpha, 1, {RawFactor::sig(1), RawFactor::sig(-1)});
  CHECK(id.sigma == 0);
  CHECK(id.hbar == 0);
  CHECK(id.coeff == 1);
  CHECK(id.word.empty());

  // [a, s] with |a| odd: moving s left across a gives -1
  Monomial as = normalize_factors(alpha, 1, {RawFactor::gen(alpha.chord_letter(0)), RawFactor::sig(1)});
  CHECK(as.sigma == 1);
  CHECK(as.coeff == -1);
  CHECK(as.word.size() == 1);

  // [c-hat-dual, hb] at n = 2: the printed table sign
  const Letter dual = alpha.dual_hat_letter(0);
  Monomial dh = normalize_factors(alpha, 1, {RawFactor::gen(dual), RawFactor::hb(1)});
  const int expect =
      ((alpha.degree(dual) + alpha.n - 3) * (alpha.n - 3)) % 2 != 0 ? -1 : 1;
  CHECK(dh.coeff == expect);
}

TEST_CASE("normalize agrees with adjacent-swap bubbling both ways") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 1000; ++trial) {
    Alphabet alpha = fixtures::random_dga(rng).alphabet;
    const int len = 1 + static_cast<int>(rng() % 8);
    std::vector<Atom> atoms;
    std::vector<RawFactor> factors;
    for (int i = 0; i < len; ++i) {
      switch (rng() % 3) {
        case 0: {
          const int p = rng() % 2 == 0 ? 1 : -1;
          atoms.push_back({Atom::Sig, {}, p});
          factors.push_back(RawFactor::sig(p));
          break;
        }
        case 1: {
          const int p = rng() % 2 == 0 ? 1 : -1;
          atoms.push_back({Atom::Hb, {}, p});
          factors.push_back(RawFactor::hb(p));
          break;
        }
        default: {
          // any letter variant, no composability needed for sign bookkeeping
          const int chords = static_cast<int>(alpha.chords.size());
          Letter u;
          switch (rng() % 5) {
            case 0: u = alpha.chord_letter(static_cast<int>(rng() % chords)); break;
            case 1: u = alpha.hat_letter(static_cast<int>(rng() % chords)); break;
            case 2: u = alpha.dual_hat_letter(static_cast<int>(rng() % chords)); break;
            case 3: u = alpha.base_letter(1 + static_cast<int>(rng() % alpha.m)); break;
            default: u = alpha.dual_base_letter(1 + static_cast<int>(rng() % alpha.m));
          }
          atoms.push_back({Atom::Gen, u, 0});
          factors.push_back(RawFactor::gen(u));
        }
      }
    }
    Monomial engine = normalize_factors(alpha, 1, factors);
    Monomial ltr = bubble_normalize(alpha, atoms, false);
    Monomial rtl = bubble_normalize(alpha, atoms, true);
    CHECK(engine.coeff == ltr.coeff);
    CHECK(engine.coeff == rtl.coeff);
    CHECK(engine.sigma == ltr.sigma);
    CHECK(engine.hbar == ltr.hbar);
    CHECK(engine.word == ltr.word);
    CHECK(ltr.word == rtl.word);
    CHECK(ltr.coeff == rtl.coeff);
  }
}

TEST_CASE("inserting a canceling pair anywhere changes nothing") {
  std::mt19937 rng(7);
  Alphabet alpha = fixtures::round_sphere(3).alphabet;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RawFactor> factors;
    const int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) {
      switch (rng() % 3) {
        case 0: factors.push_back(RawFactor::gen(alpha.chord_letter(0))); break;
        case 1: factors.push_back(RawFactor::gen(alpha.hat_letter(0))); break;
        default: factors.push_back(RawFactor::gen(alpha.dual_base_letter(1)));
      }
    }
    Monomial base = normalize_factors(alpha, 1, factors);
    const std::size_t pos = rng() % (factors.size() + 1);
    std::vector<RawFactor> spiked = factors;
    const bool use_sigma = rng() % 2 == 0;
    spiked.insert(spiked.begin() + static_cast<long>(pos),
                  {use_sigma ? RawFactor::sig(1) : RawFactor::hb(1),
                   use_sigma ? RawFactor::sig(-1) : RawFactor::hb(-1)});
    Monomial spiked_m = normalize_factors(alpha, 1, spiked);
    CHECK(spiked_m.coeff == base.coeff);
    CHECK(spiked_m.sigma == base.sigma);
    CHECK(spiked_m.hbar == base.hbar);
    CHECK(spiked_m.word == base.word);
  }
}

TEST_CASE("degree is additive under nonzero concat") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Alphabet alpha = fixtures::random_dga(rng).alphabet;
    Monomial a = fixtures::random_mcyc_monomial(rng, alpha, 3);
    Monomial b = fixtures::random_mcyc_monomial(rng, alpha, 3);
    b.excited = -1;
    a.excited = -1;
    Monomial ab = monomial_mul(alpha, a, b);
    if (!ab.is_zero())
      CHECK(degree(alpha, ab) == degree(alpha, a) + degree(alpha, b));
  }
}

TEST_CASE("element terms are merged, ordered and zero-free") {
  Alphabet alpha = fixtures::round_sphere(2).alphabet;
  Monomial a;
  a.coeff = 1;
  a.word = {alpha.chord_letter(0)};
  Monomial b = a;
  b.coeff = -1;
  Element e = make_element(SpaceTag::A, {a, b});
  CHECK(e.is_zero());

  Monomial two = a;
  two.coeff = 2;
  Element f = make_element(SpaceTag::A, {a, two, a});
  CHECK(f.terms.size() == 1);
  CHECK(f.terms[0].coeff == 4);
  validate(alpha, f);
}
