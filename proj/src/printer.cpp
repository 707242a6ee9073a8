#include "cychom/printer.hpp"

#include "cychom/cyclic.hpp"

#include <sstream>
#include <utility>

namespace cychom {

namespace {

std::string power_token(const char* head, int k) {
  if (k == 0) return "";
  std::ostringstream os;
  os << head;
  if (k != 1) os << "^" << k;
  return os.str();
}

// body of a monomial without the coefficient; transformations used for
// display (theta stripping, anchoring) fold their signs into the returned
// coefficient
std::pair<std::string, Rational> monomial_body(const Alphabet& alpha, Monomial m,
                                               bool cyclic, const PrintOptions& opts) {
  if (opts.theta_one && m.hbar == -1 && m.sigma == -1 && is_m_type(m))
    m = mul_hbar_right(alpha, mul_sigma_right(alpha, std::move(m), 1), 1);
  if (cyclic && opts.anchor_heads && (is_m_type(m) || is_mstar_type(m))) {
    for (int i = 0; i < m.length(); ++i)
      if (!is_chord(m.word[static_cast<std::size_t>(i)].variant)) {
        m = rotate_to_front(alpha, m, i);
        break;
      }
  }
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& tok) {
    if (tok.empty()) return;
    if (!first) os << " ";
    os << tok;
    first = false;
  };
  emit(power_token("s", m.sigma));
  emit(power_token("hb", m.hbar));
  if (m.word.empty()) {
    emit("1_" + std::to_string(m.unit_component));
  } else {
    if (cyclic) emit("[");
    for (int i = 0; i < m.length(); ++i) {
      std::string name = alpha.letter_name(m.word[static_cast<std::size_t>(i)]);
      if (m.excited == i) name = "!" + name;
      emit(name);
    }
    if (cyclic) emit("]");
  }
  return {os.str(), m.coeff};
}

} // namespace

std::string print_monomial(const Alphabet& alpha, const Monomial& m, bool cyclic,
                           const PrintOptions& opts) {
  auto [body, c] = monomial_body(alpha, m, cyclic, opts);
  std::ostringstream os;
  if (c < 0) { os << "- "; c = -c; }
  if (c != 1) os << to_string(c) << " * ";
  os << body;
  return os.str();
}

std::string print_element(const Alphabet& alpha, const Element& e,
                          const PrintOptions& opts) {
  if (e.is_zero()) return "0";
  const bool cyclic = is_cyclic_space(e.space);
  std::ostringstream os;
  bool first = true;
  for (const Monomial& t : e.terms) {
    auto [body, c] = monomial_body(alpha, t, cyclic, opts);
    if (first) {
      if (c < 0) { os << "- "; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) os << to_string(c) << " * ";
    os << body;
    first = false;
  }
  return os.str();
}

} // namespace cychom
