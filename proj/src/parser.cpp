#include "cychom/parser.hpp"

#include "cychom/cyclic.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cychom {

namespace {

struct Token {
  std::string text;
  int col = 0;
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
    if (line[i] == '#') break;
    const int col = static_cast<int>(i) + 1;
    // punctuation that stands alone
    if (std::string("[]=:,").find(line[i]) != std::string::npos) {
      out.push_back({std::string(1, line[i]), col});
      ++i;
      continue;
    }
    if (line[i] == '+' || line[i] == '-') {
      out.push_back({std::string(1, line[i]), col});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           std::string("[]=:,#").find(line[j]) == std::string::npos &&
           !(j > i && (line[j] == '+')))
      ++j;
    out.push_back({line.substr(i, j - i), col});
    i = j;
    (void)line_no;
  }
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = s[0] == '-' ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

bool is_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return is_integer(s);
  return is_integer(s.substr(0, slash)) && is_integer(s.substr(slash + 1)) &&
         s.find('/', slash + 1) == std::string::npos;
}

Rational read_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(s);
  return Rational(s); // gmp accepts "p/q" directly
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool reserved_name(const std::string& s) {
  if (s == "s" || s == "hb") return true;
  if (s.size() >= 2 && s[0] == 'x') {
    bool digits = true;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) return true;
  }
  return false;
}

// sigma/hbar token: "s", "s^<k>", "hb", "hb^<k>"
bool read_power_token(const std::string& t, const char* head, int& power) {
  const std::string h(head);
  if (t == h) { power = 1; return true; }
  if (t.size() > h.size() + 1 && t.compare(0, h.size(), h) == 0 &&
      t[h.size()] == '^' && is_integer(t.substr(h.size() + 1))) {
    power = std::stoi(t.substr(h.size() + 1));
    return true;
  }
  return false;
}

struct LetterToken {
  Letter letter;
  bool excited = false;
};

LetterToken read_letter(const Alphabet& alpha, std::string t, int line_no, int col) {
  LetterToken out;
  if (!t.empty() && t[0] == '!') {
    out.excited = true;
    t.erase(0, 1);
  }
  bool hat = false, dual = false;
  if (!t.empty() && t[0] == '^') {
    hat = true;
    t.erase(0, 1);
  }
  if (!t.empty() && t.back() == '*') {
    dual = true;
    t.pop_back();
  }
  if (t.empty()) throw parse_error("empty letter token", line_no, col);
  // basepoints: x<j>
  if (t[0] == 'x' && t.size() > 1 && !hat) {
    bool digits = true;
    for (std::size_t i = 1; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) digits = false;
    if (digits) {
      const int j = std::stoi(t.substr(1));
      if (j < 1 || j > alpha.m)
        throw parse_error("basepoint component out of range: " + t, line_no, col);
      out.letter = dual ? alpha.dual_base_letter(j) : alpha.base_letter(j);
      return out;
    }
  }
  const int id = alpha.find_chord(t);
  if (id < 0) throw parse_error("unknown chord name: " + t, line_no, col);
  if (dual) out.letter = alpha.dual_hat_letter(id);      // c* and ^c* both mean the dual
  else if (hat) out.letter = alpha.hat_letter(id);
  else out.letter = alpha.chord_letter(id);
  return out;
}

Element parse_element_tokens(const Alphabet& alpha, const std::vector<Token>& toks,
                             SpaceTag space, int line_no) {
  std::vector<Monomial> terms;
  std::size_t i = 0;
  if (toks.size() == 1 && toks[0].text == "0") return zero_element(space);

  int term_sign = 1;
  while (i < toks.size()) {
    // term sign
    if (toks[i].text == "+") { term_sign = 1; ++i; continue; }
    if (toks[i].text == "-") { term_sign = -1; ++i; continue; }

    Rational coeff = term_sign;
    std::vector<RawFactor> factors;
    bool in_bracket = false, had_bracket = false;
    int unit_comp = 0;
    bool saw_coeff = false;
    for (; i < toks.size(); ++i) {
      const std::string& t = toks[i].text;
      if (t == "+" || t == "-") {
        if (!in_bracket) break;
        throw parse_error("sum inside a cyclic bracket", line_no, toks[i].col);
      }
      if (t == "*") continue; // explicit multiplication sign
      if (t == "[") {
        if (had_bracket) throw parse_error("more than one cyclic bracket in a term",
                                           line_no, toks[i].col);
        in_bracket = true;
        had_bracket = true;
        continue;
      }
      if (t == "]") {
        if (!in_bracket) throw parse_error("unmatched ']'", line_no, toks[i].col);
        in_bracket = false;
        continue;
      }
      if (is_rational(t)) {
        if (saw_coeff) throw parse_error("second coefficient in a term", line_no, toks[i].col);
        if (in_bracket) throw parse_error("coefficient inside a bracket", line_no, toks[i].col);
        coeff *= read_rational(t);
        saw_coeff = true;
        continue;
      }
      int power = 0;
      if (read_power_token(t, "s", power)) {
        factors.push_back(RawFactor::sig(power));
        continue;
      }
      if (read_power_token(t, "hb", power)) {
        factors.push_back(RawFactor::hb(power));
        continue;
      }
      if (t.size() > 2 && t[0] == '1' && t[1] == '_' && is_integer(t.substr(2))) {
        unit_comp = std::stoi(t.substr(2));
        if (unit_comp < 1 || unit_comp > alpha.m)
          throw parse_error("idempotent component out of range", line_no, toks[i].col);
        continue;
      }
      LetterToken lt = read_letter(alpha, t, line_no, toks[i].col);
      if (is_cyclic_space(space) && !in_bracket)
        throw parse_error("generator letter outside the cyclic bracket", line_no,
                          toks[i].col);
      factors.push_back(RawFactor::gen(lt.letter, lt.excited));
    }
    if (in_bracket) throw parse_error("unterminated cyclic bracket", line_no, 0);
    if (is_cyclic_space(space) && !had_bracket)
      throw parse_error("cyclic element term needs a [ ... ] bracket", line_no, 0);
    Monomial m = normalize_factors(alpha, coeff, factors,
                                   unit_comp > 0 ? unit_comp : 1);
    if (m.word.empty() && unit_comp == 0 && factors.empty() && !saw_coeff)
      throw parse_error("empty term", line_no, 0);
    if (is_cyclic_space(space)) {
      if (!cyclically_composable(alpha, m.word))
        throw parse_error("word is not cyclically composable", line_no, 0);
      m = canonical_cyclic(alpha, m);
    } else if (!m.word.empty() && !word_composable(alpha, m.word)) {
      throw parse_error("word is not composable", line_no, 0);
    }
    terms.push_back(std::move(m));
    term_sign = 1;
  }
  Element e = make_element(space, std::move(terms));
  validate(alpha, e);
  return e;
}

} // namespace

Element parse_element(const Alphabet& alpha, const std::string& text, SpaceTag space,
                      int line_no) {
  return parse_element_tokens(alpha, tokenize(text, line_no), space, line_no);
}

PresentationInput parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  Alphabet alpha;
  bool saw_n = false, saw_m = false;
  struct PendingD { std::string chord; std::vector<Token> toks; int line; };
  std::vector<PendingD> pending_d;
  struct PendingH { int p, q; std::vector<Token> toks; int line; };
  std::vector<PendingH> pending_h;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = tokenize(raw, line_no);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    auto expect = [&](std::size_t idx, const std::string& what) -> const Token& {
      if (idx >= toks.size())
        throw parse_error("expected " + what, line_no,
                          toks.empty() ? 1 : toks.back().col);
      return toks[idx];
    };

    if (head == "n") {
      if (expect(1, "'='").text != "=" || !is_integer(expect(2, "integer").text))
        throw parse_error("expected n = <int>", line_no, toks[0].col);
      alpha.n = std::stoi(toks[2].text);
      saw_n = true;
    } else if (head == "components") {
      if (expect(1, "'='").text != "=" || !is_integer(expect(2, "integer").text))
        throw parse_error("expected components = <int>", line_no, toks[0].col);
      alpha.m = std::stoi(toks[2].text);
      saw_m = true;
    } else if (head == "chord") {
      // chord <name> : degree <int>, from <int>, to <int>
      const std::string name = expect(1, "chord name").text;
      if (!valid_name(name))
        throw parse_error("invalid chord name: " + name, line_no, toks[1].col);
      if (reserved_name(name))
        throw parse_error("reserved name: " + name, line_no, toks[1].col);
      if (alpha.find_chord(name) >= 0)
        throw parse_error("duplicate chord name: " + name, line_no, toks[1].col);
      std::map<std::string, int> fields;
      std::size_t i = 2;
      if (expect(i, "':'").text != ":")
        throw parse_error("expected ':' after chord name", line_no, toks[i].col);
      ++i;
      while (i < toks.size()) {
        const std::string key = toks[i].text;
        int sign = 1;
        std::size_t vi = i + 1;
        if (vi < toks.size() && toks[vi].text == "-") { sign = -1; ++vi; }
        const Token& val = expect(vi, "integer after " + key);
        if (!is_integer(val.text))
          throw parse_error("expected integer after '" + key + "'", line_no, val.col);
        fields[key] = sign * std::stoi(val.text);
        i = vi + 1;
        if (i < toks.size() && toks[i].text == ",") ++i;
      }
      if (!fields.count("degree") || !fields.count("from") || !fields.count("to"))
        throw parse_error("chord needs degree, from, to", line_no, toks[0].col);
      alpha.chords.push_back(
          {name, fields["degree"], fields["from"], fields["to"]});
    } else if (head == "d") {
      const std::string name = expect(1, "chord name").text;
      if (expect(2, "'='").text != "=")
        throw parse_error("expected '=' in d-directive", line_no, toks[2].col);
      pending_d.push_back({name, {toks.begin() + 3, toks.end()}, line_no});
    } else if (head == "H") {
      const Token& tp = expect(1, "p");
      const Token& tq = expect(2, "q");
      if (!is_integer(tp.text) || !is_integer(tq.text))
        throw parse_error("expected H <p> <q> = <element>", line_no, tp.col);
      if (expect(3, "'='").text != "=")
        throw parse_error("expected '=' in H-directive", line_no, toks[3].col);
      pending_h.push_back({std::stoi(tp.text), std::stoi(tq.text),
                           {toks.begin() + 4, toks.end()}, line_no});
    } else {
      throw parse_error("unknown directive: " + head, line_no, toks[0].col);
    }
  }

  if (!saw_n) throw parse_error("missing 'n = <int>' directive", line_no, 1);
  if (!saw_m) throw parse_error("missing 'components = <int>' directive", line_no, 1);
  if (alpha.n < 2) throw parse_error("n must be at least 2", 1, 1);
  if (alpha.m < 1) throw parse_error("components must be at least 1", 1, 1);
  for (const ChordData& c : alpha.chords)
    if (c.from_component < 1 || c.from_component > alpha.m || c.to_component < 1 ||
        c.to_component > alpha.m)
      throw parse_error("chord " + c.name + ": endpoint out of range", 1, 1);

  PresentationInput out;
  out.pres.alphabet = alpha;
  for (const PendingD& pd : pending_d) {
    const int id = alpha.find_chord(pd.chord);
    if (id < 0) throw parse_error("d-directive for unknown chord " + pd.chord, pd.line, 1);
    if (out.pres.differential.count(id))
      throw parse_error("duplicate d-directive for " + pd.chord, pd.line, 1);
    Element dc = parse_element_tokens(alpha, pd.toks, SpaceTag::A, pd.line);
    out.pres.differential.emplace(id, std::move(dc));
  }
  for (std::size_t id = 0; id < alpha.chords.size(); ++id)
    if (!out.pres.differential.count(static_cast<int>(id)))
      throw parse_error("missing d-directive for chord " + alpha.chords[id].name,
                        line_no, 1);

  // semantic checks with directive locations
  for (const PendingD& pd : pending_d) {
    const int id = alpha.find_chord(pd.chord);
    const ChordData& c = alpha.chord(id);
    const Letter cl = alpha.chord_letter(id);
    for (const Monomial& t : out.pres.differential.at(id).terms) {
      if (degree(alpha, t) != c.degree - 1)
        throw parse_error("d " + pd.chord + ": term of degree " +
                              std::to_string(degree(alpha, t)) + ", expected " +
                              std::to_string(c.degree - 1),
                          pd.line, 1);
      const int tl = t.word.empty() ? t.unit_component : alpha.left(t.word.front());
      const int tr = t.word.empty() ? t.unit_component : alpha.right(t.word.back());
      if (tl != alpha.left(cl) || tr != alpha.right(cl))
        throw parse_error("d " + pd.chord + ": endpoints not preserved", pd.line, 1);
    }
  }

  for (const PendingH& ph : pending_h) {
    if (ph.p < 2 || ph.q < 0)
      throw parse_error("H-directive needs p >= 2, q >= 0", ph.line, 1);
    Element h = parse_element_tokens(alpha, ph.toks, SpaceTag::UBal, ph.line);
    for (const Monomial& t : h.terms) {
      const TensorType tt = tensor_type(t);
      if (tt.p != ph.p || tt.q != ph.q)
        throw parse_error("H " + std::to_string(ph.p) + " " + std::to_string(ph.q) +
                              ": term of tensor type (" + std::to_string(tt.p) + "," +
                              std::to_string(tt.q) + ")",
                          ph.line, 1);
      if (degree(alpha, t) != -1)
        throw parse_error("H-directive term must have degree -1", ph.line, 1);
    }
    if (out.hamiltonian_directives.count({ph.p, ph.q}))
      throw parse_error("duplicate H-directive", ph.line, 1);
    out.hamiltonian_directives.emplace(std::make_pair(ph.p, ph.q), std::move(h));
  }
  return out;
}

PresentationInput parse_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

} // namespace cychom
