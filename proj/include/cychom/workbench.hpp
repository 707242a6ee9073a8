#pragma once

#include "cychom/hamiltonian.hpp"
#include "cychom/invariants.hpp"
#include "cychom/parser.hpp"
#include "cychom/printer.hpp"

namespace cychom {

// math-level failure (d^2, master equations): exit code 1 at the CLI
class math_error : public error {
public:
  using error::error;
};

struct RunOptions {
  std::string space = "mcyc"; // mcyc | mbal
  int maxlen = 7;
  int deg_lo = 0;
  int deg_hi = 6;
  int qmax = 4;
  std::string op = "boxtimes"; // boxtimes | boxdot | diamond
  bool table = false;
  std::string x_expr, y_expr;
  std::string theta = "one";   // one | explicit
  std::string format = "text"; // text | machine
};

// A fully prepared session: validated presentation, Hamiltonians built to
// qmax, user directives installed and cross-checked.
struct Session {
  DifferentialContext ctx;
  HamiltonianData ham;

  const Alphabet& alpha() const { return ctx.alpha(); }
};

Session open_session(const PresentationInput& input, int qmax, int cutoff);

struct Report {
  std::string text;
  int exit_code = 0;
};

Report run_validate(const PresentationInput& input, const RunOptions& opts);
Report run_homology(const PresentationInput& input, const RunOptions& opts);
Report run_product(const PresentationInput& input, const RunOptions& opts);
Report run_bv(const PresentationInput& input, const RunOptions& opts);
Report run_report(const PresentationInput& input, const RunOptions& opts);

// parse "a..b" degree windows
std::pair<int, int> parse_degree_window(const std::string& text);

} // namespace cychom
