#pragma once

#include "cychom/alphabet.hpp"
#include "cychom/rational.hpp"

#include <optional>
#include <vector>

namespace cychom {

// A monomial in canonical form: all sigma/hbar letters collected into a
// prefix exponent pair, so equality of monomials is a plain key comparison.
struct Monomial {
  Rational coeff = 0;
  int sigma = 0;
  int hbar = 0;
  std::vector<Letter> word;
  int excited = -1;        // index into word, -1 if unexcited
  int unit_component = 1;  // component of the idempotent when word is empty

  bool is_zero() const { return coeff == 0; }
  bool is_excited() const { return excited >= 0; }
  int length() const { return static_cast<int>(word.size()); }
};

// Total order on monomial keys: (sigma, hbar, word, excited, unit_component).
int compare_key(const Monomial& a, const Monomial& b);
inline bool same_key(const Monomial& a, const Monomial& b) { return compare_key(a, b) == 0; }

int degree(const Alphabet& alpha, const Monomial& m);

// Tensor type of a monomial or sub-word: p = dual-letter count,
// q = hat/basepoint-letter count, plus the sigma/hbar exponents.
struct TensorType {
  int p = 0;
  int q = 0;
  int s = 0;
  int h = 0;

  bool balanced() const { return h == -1 && p - q - s == 0; }
  int st() const { return p + h; }
  int jp() const { return p + q + s; }

  friend bool operator==(const TensorType&, const TensorType&) = default;
};

TensorType tensor_type(const Monomial& m);

// Koszul sign (+1/-1) for moving one sigma^{±1} or hbar^{±1} letter past a
// generator letter. These are the tri-graded commutation rules: sigma sees
// the jp-charge, hbar the st-charge, on top of the plain degree sign.
int sigma_comm_sign(const Alphabet& alpha, const Letter& u);
int hbar_comm_sign(const Alphabet& alpha, const Letter& u);

// sign for moving sigma^a past hbar^b
inline int sigma_hbar_swap_sign(const Alphabet& alpha, int a, int b) {
  return (((alpha.n - 3) * a * b) % 2 != 0) ? -1 : 1;
}

// Raw input factors for normalization: interleaved sigma/hbar powers and
// generator letters, as they appear in a freshly parsed or constructed word.
struct RawFactor {
  enum class Kind { Generator, Sigma, Hbar } kind = Kind::Generator;
  Letter letter{};
  int power = 0;
  bool excited = false;

  static RawFactor gen(Letter u, bool exc = false) {
    return RawFactor{Kind::Generator, u, 0, exc};
  }
  static RawFactor sig(int k) { return RawFactor{Kind::Sigma, {}, k, false}; }
  static RawFactor hb(int k) { return RawFactor{Kind::Hbar, {}, k, false}; }
};

// Collect all sigma/hbar factors into the prefix exponents, accumulating the
// commutation signs into the coefficient. Rejects multiple excitation marks.
Monomial normalize_factors(const Alphabet& alpha, const Rational& coeff,
                           const std::vector<RawFactor>& factors,
                           int unit_component = 1);

// word composability (consecutive pairs only, not the cyclic closure)
bool word_composable(const Alphabet& alpha, const std::vector<Letter>& w);
bool cyclically_composable(const Alphabet& alpha, const std::vector<Letter>& w);

// Product of two monomials as elements of the extended tensor algebra.
// Returns a zero monomial when the junction is not composable.
// Throws if both factors carry an excitation mark.
Monomial monomial_mul(const Alphabet& alpha, const Monomial& a, const Monomial& b);

// multiply by sigma^k / hbar^k from the left or right
Monomial mul_sigma_left(const Alphabet& alpha, Monomial m, int k);
Monomial mul_hbar_left(const Alphabet& alpha, Monomial m, int k);
Monomial mul_sigma_right(const Alphabet& alpha, Monomial m, int k);
Monomial mul_hbar_right(const Alphabet& alpha, Monomial m, int k);

} // namespace cychom
