#include "cychom/element.hpp"

#include "cychom/cyclic.hpp"

#include <algorithm>

namespace cychom {

const char* space_name(SpaceTag t) {
  switch (t) {
    case SpaceTag::A: return "A";
    case SpaceTag::M: return "M";
    case SpaceTag::MDiag: return "Mdiag";
    case SpaceTag::MCyc: return "Mcyc";
    case SpaceTag::U: return "U";
    case SpaceTag::UBal: return "Ubal";
    case SpaceTag::ExcitedUBal: return "EUbal";
    case SpaceTag::TauMBal: return "tauMbal";
    case SpaceTag::TauMStarBal: return "tauMStarBal";
  }
  return "?";
}

bool is_cyclic_space(SpaceTag t) {
  switch (t) {
    case SpaceTag::MCyc:
    case SpaceTag::UBal:
    case SpaceTag::ExcitedUBal:
    case SpaceTag::TauMBal:
    case SpaceTag::TauMStarBal:
      return true;
    default:
      return false;
  }
}

Element make_element(SpaceTag space, std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Monomial& a, const Monomial& b) { return compare_key(a, b) < 0; });
  Element e;
  e.space = space;
  for (Monomial& t : terms) {
    if (t.coeff == 0) continue;
    if (!e.terms.empty() && same_key(e.terms.back(), t))
      e.terms.back().coeff += t.coeff;
    else
      e.terms.push_back(std::move(t));
    if (!e.terms.empty() && e.terms.back().coeff == 0) e.terms.pop_back();
  }
  return e;
}

Element add(const Element& a, const Element& b) {
  std::vector<Monomial> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return make_element(a.is_zero() ? b.space : a.space, std::move(terms));
}

Element sub(const Element& a, const Element& b) { return add(a, scale(-1, b)); }

Element scale(const Rational& c, const Element& a) {
  Element e;
  e.space = a.space;
  if (c == 0) return e;
  e.terms = a.terms;
  for (Monomial& t : e.terms) t.coeff *= c;
  return e;
}

bool equal(const Element& a, const Element& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!same_key(a.terms[i], b.terms[i]) || a.terms[i].coeff != b.terms[i].coeff)
      return false;
  return true;
}

std::optional<int> element_degree(const Alphabet& alpha, const Element& e) {
  if (e.is_zero()) return std::nullopt;
  int d = degree(alpha, e.terms.front());
  for (const Monomial& t : e.terms)
    if (degree(alpha, t) != d) throw error("element is not homogeneous");
  return d;
}

std::map<int, Element> degree_components(const Alphabet& alpha, const Element& e) {
  std::map<int, std::vector<Monomial>> buckets;
  for (const Monomial& t : e.terms) buckets[degree(alpha, t)].push_back(t);
  std::map<int, Element> out;
  for (auto& [d, terms] : buckets) out.emplace(d, make_element(e.space, std::move(terms)));
  return out;
}

bool is_m_type(const Monomial& m) {
  int heads = 0;
  for (const Letter& u : m.word) {
    if (is_module(u.variant)) ++heads;
    else if (!is_chord(u.variant)) return false;
  }
  return heads == 1;
}

bool is_mstar_type(const Monomial& m) {
  int heads = 0;
  for (const Letter& u : m.word) {
    if (is_dual(u.variant)) ++heads;
    else if (!is_chord(u.variant)) return false;
  }
  return heads == 1;
}

namespace {

void check_term(const Alphabet& alpha, SpaceTag space, const Monomial& t) {
  const TensorType tt = tensor_type(t);
  auto fail = [&](const std::string& why) {
    throw error(std::string("term violates space ") + space_name(space) + ": " + why);
  };
  if (t.excited >= t.length()) fail("excitation index out of range");
  if (t.is_excited() && !is_excitable(t.word[static_cast<std::size_t>(t.excited)].variant))
    fail("excitation on a chord letter");

  if (is_cyclic_space(space)) {
    if (t.word.empty()) fail("empty cyclic word");
    if (!cyclically_composable(alpha, t.word)) fail("not cyclically composable");
    Monomial canon = canonical_cyclic(alpha, t);
    if (canon.word != t.word || canon.excited != t.excited)
      fail("not a canonical cyclic representative");
  } else if (!t.word.empty() && !word_composable(alpha, t.word)) {
    fail("word not composable");
  }

  switch (space) {
    case SpaceTag::A:
      if (t.sigma != 0 || t.hbar != 0) fail("sigma/hbar exponents on an A-term");
      if (t.is_excited()) fail("excited A-term");
      for (const Letter& u : t.word)
        if (!is_chord(u.variant)) fail("non-chord letter in A");
      if (t.word.empty() && (t.unit_component < 1 || t.unit_component > alpha.m))
        fail("idempotent component out of range");
      break;
    case SpaceTag::M:
    case SpaceTag::MDiag:
    case SpaceTag::MCyc:
      if (t.sigma != 0 || t.hbar != 0) fail("sigma/hbar exponents on an M-term");
      if (t.is_excited()) fail("excited M-term");
      if (!is_m_type(t)) fail("not an M-type word");
      if (space == SpaceTag::MDiag && !cyclically_composable(alpha, t.word))
        fail("not cyclically composable");
      break;
    case SpaceTag::U:
      break;
    case SpaceTag::UBal:
      if (!tt.balanced()) fail("not balanced");
      if (t.is_excited()) fail("excited term in the unexcited balanced space");
      break;
    case SpaceTag::ExcitedUBal:
      if (!tt.balanced()) fail("not balanced");
      if (!t.is_excited()) fail("unexcited term in the excited balanced space");
      break;
    case SpaceTag::TauMBal:
      if (!tt.balanced()) fail("not balanced");
      if (!is_m_type(t)) fail("not an M-type word");
      break;
    case SpaceTag::TauMStarBal:
      if (!tt.balanced()) fail("not balanced");
      if (!is_mstar_type(t)) fail("not an M*-type word");
      break;
  }
}

} // namespace

void validate(const Alphabet& alpha, const Element& e) {
  for (std::size_t i = 0; i + 1 < e.terms.size(); ++i)
    if (compare_key(e.terms[i], e.terms[i + 1]) >= 0)
      throw error("element terms not strictly ordered");
  for (const Monomial& t : e.terms) {
    if (t.coeff == 0) throw error("zero term stored in element");
    check_term(alpha, e.space, t);
  }
}

} // namespace cychom
