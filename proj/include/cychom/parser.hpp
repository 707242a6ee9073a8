#pragma once

#include "cychom/differential.hpp"

#include <map>
#include <string>
#include <utility>

namespace cychom {

class parse_error : public error {
public:
  parse_error(const std::string& message, int line, int col)
      : error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

// A parsed presentation file: the validated DGA plus any Hamiltonian
// directives, kept as unexcited elements keyed by (p, q).
struct PresentationInput {
  DgaPresentation pres;
  std::map<std::pair<int, int>, Element> hamiltonian_directives;
};

// Line-oriented directive grammar; '#' starts a comment, CRLF tolerated.
PresentationInput parse_presentation(const std::string& text);
PresentationInput parse_presentation_file(const std::string& path);

// Element sub-grammar. Terms are joined by +/-; a term is an optional
// rational, sigma/hbar powers, and either a plain word or one cyclic
// bracket [ ... ]. `space` selects the structural checks; cyclic spaces
// canonicalize term by term. Letters may carry a '!' excitation prefix.
Element parse_element(const Alphabet& alpha, const std::string& text, SpaceTag space,
                      int line_no = 0);

} // namespace cychom
