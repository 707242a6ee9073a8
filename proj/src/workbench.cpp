#include "cychom/workbench.hpp"

#include "cychom/contraction.hpp"
#include "cychom/cyclic.hpp"

#include <sstream>

namespace cychom {

std::pair<int, int> parse_degree_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw error("degree window must look like a..b");
  try {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw error("empty degree window");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw error("degree window must look like a..b");
  }
}

Session open_session(const PresentationInput& input, int qmax, int cutoff) {
  Session s;
  try {
    s.ctx = make_context(input.pres, cutoff);
    s.ham = build_h1(input.pres, std::max(qmax, 2));
  } catch (const error& e) {
    throw math_error(e.what());
  }
  // install seeds first, then cross-check any directly-supplied components
  for (const auto& [key, elem] : input.hamiltonian_directives)
    if (key.second == 0) install_user_seed(input.pres, s.ham, key.first, elem);
  for (const auto& [key, elem] : input.hamiltonian_directives) {
    if (key.second == 0) continue;
    const auto [p, q] = key;
    if (!s.ham.user_seed.count(p))
      throw error("H " + std::to_string(p) + " " + std::to_string(q) +
                  " supplied without the seed H " + std::to_string(p) + " 0");
    Rational fact = 1;
    for (int i = 2; i <= q; ++i) fact *= i;
    Element derived = scale(1 / fact, s_cyclic(s.alpha(), s.ham.user_seed.at(p), q));
    if (!equal(derived, elem))
      throw math_error("H " + std::to_string(p) + " " + std::to_string(q) +
                       " directive disagrees with the derived component");
  }
  return s;
}

namespace {

struct Lines {
  std::ostringstream os;
  bool machine = false;

  void text(const std::string& s) {
    if (!machine) os << s << "\n";
  }
  void record(const std::vector<std::pair<std::string, std::string>>& kv) {
    if (!machine) return;
    bool first = true;
    for (const auto& [k, v] : kv) {
      if (!first) os << "\t";
      os << k << "=" << v;
      first = false;
    }
    os << "\n";
  }
};

ComplexSpace parse_space(const std::string& s) {
  if (s == "mcyc") return ComplexSpace::MCyc;
  if (s == "mbal") return ComplexSpace::MBal;
  if (s == "mstarbal") return ComplexSpace::MStarBal;
  throw error("unknown space: " + s + " (expected mcyc or mbal)");
}

PrintOptions print_opts(const RunOptions& opts) {
  PrintOptions p;
  p.theta_one = opts.theta == "one";
  return p;
}

void homology_section(Lines& out, const Session& s, const RunOptions& opts,
                      const std::string& space) {
  const ComplexSpace cs = parse_space(space);
  TruncatedComplex cx = build_complex(s.ctx, cs, opts.maxlen, opts.deg_lo, opts.deg_hi);
  HomologyResult h = homology(cx);
  const PrintOptions po = print_opts(opts);
  out.text("homology space=" + space + " maxlen=" + std::to_string(opts.maxlen) +
           " degrees=" + std::to_string(opts.deg_lo) + ".." +
           std::to_string(opts.deg_hi));
  for (int deg = opts.deg_lo; deg <= opts.deg_hi; ++deg) {
    if (h.dirty_degrees.count(deg)) {
      out.text("  degree " + std::to_string(deg) +
               ": refused (truncation-dirty at maxlen " +
               std::to_string(opts.maxlen) + ")");
      out.record({{"record", "homology-refused"},
                  {"space", space},
                  {"degree", std::to_string(deg)},
                  {"maxlen", std::to_string(opts.maxlen)}});
      continue;
    }
    std::ostringstream line;
    line << "  degree " << deg << ": dim " << h.dims.at(deg);
    std::string reps;
    for (const Element& r : h.reps.at(deg)) {
      if (!reps.empty()) reps += " ; ";
      reps += print_element(s.alpha(), r, po);
    }
    if (!reps.empty()) line << "  rep: " << reps;
    out.text(line.str());
    out.record({{"record", "homology"},
                {"space", space},
                {"degree", std::to_string(deg)},
                {"dim", std::to_string(h.dims.at(deg))},
                {"maxlen", std::to_string(opts.maxlen)},
                {"rep", reps}});
  }
}

int validate_section(Lines& out, const PresentationInput& input,
                     const RunOptions& opts) {
  int failures = 0;
  auto ok_line = [&](const std::string& what, bool ok, const std::string& detail) {
    out.text("validate " + what + ": " + (ok ? "ok" : ("FAIL " + detail)));
    out.record({{"record", "validate"},
                {"check", what},
                {"status", ok ? "ok" : "fail"},
                {"detail", detail}});
    if (!ok) ++failures;
  };

  try {
    validate_presentation(input.pres);
    ok_line("d2", true, "");
  } catch (const error& e) {
    ok_line("d2", false, e.what());
    return failures; // nothing downstream is meaningful
  }

  Session s;
  try {
    s = open_session(input, opts.qmax, opts.maxlen);
  } catch (const error& e) {
    ok_line("hamiltonian", false, e.what());
    return failures;
  }

  // d_M^2 = 0 on the enumerated cyclic-module basis
  {
    TruncatedComplex cx =
        build_complex(s.ctx, ComplexSpace::MCyc, opts.maxlen, opts.deg_lo - 2,
                      opts.deg_hi + 2);
    bool ok = true;
    std::string detail;
    std::size_t count = 0;
    for (const auto& [deg, monos] : cx.basis) {
      for (const Monomial& m : monos) {
        Element e = make_element(SpaceTag::MCyc, {m});
        if (!d_module(input.pres, d_module(input.pres, e)).is_zero()) {
          ok = false;
          detail = "d_M^2 != 0 on " + print_element(s.alpha(), e, {});
          break;
        }
        ++count;
      }
      if (!ok) break;
    }
    ok_line("dM2 (" + std::to_string(count) + " monomials, maxlen " +
                std::to_string(opts.maxlen) + ")",
            ok, detail);
  }

  MasterReport rep = check_master(input.pres, s.ham, opts.qmax);
  for (const auto& entry : rep.entries)
    ok_line("master " + entry.name, entry.zero,
            entry.zero ? "" : print_element(s.alpha(), entry.residual, {}));
  return failures;
}

void product_table_section(Lines& out, const Session& s, const RunOptions& opts) {
  ProductTable table =
      product_table(s.ctx, s.ham, opts.op, opts.maxlen, opts.deg_lo, opts.deg_hi);
  const PrintOptions po = print_opts(opts);
  out.text("product op=" + opts.op + " maxlen=" + std::to_string(opts.maxlen) +
           " degrees=" + std::to_string(opts.deg_lo) + ".." +
           std::to_string(opts.deg_hi));
  for (std::size_t i = 0; i < table.generators.size(); ++i)
    out.text("  g" + std::to_string(i) + " = " +
             print_element(s.alpha(), table.generators[i].second, po) + "  (degree " +
             std::to_string(table.generators[i].first) + ")");
  for (std::size_t i = 0; i < table.generators.size(); ++i) {
    for (std::size_t j = 0; j < table.generators.size(); ++j) {
      std::string cell;
      for (const auto& [k, c] : table.cells[i][j]) {
        if (!cell.empty()) cell += " + ";
        if (c != 1) cell += to_string(c) + " * ";
        cell += print_element(s.alpha(), table.generators[k].second, po);
      }
      if (cell.empty()) cell = "0";
      out.text("  " + print_element(s.alpha(), table.generators[i].second, po) +
               "  x  " + print_element(s.alpha(), table.generators[j].second, po) +
               "  =  " + cell);
      out.record({{"record", "product"},
                  {"op", opts.op},
                  {"i", std::to_string(i)},
                  {"j", std::to_string(j)},
                  {"value", cell},
                  {"maxlen", std::to_string(opts.maxlen)}});
    }
  }
  for (const std::string& note : table.notes) {
    out.text("  note: " + note);
    out.record({{"record", "product-note"}, {"note", note}});
  }
}

void product_pair_section(Lines& out, const Session& s, const RunOptions& opts) {
  const Alphabet& alpha = s.alpha();
  SpaceTag arg_space = SpaceTag::MCyc;
  if (opts.op == "boxdot") arg_space = SpaceTag::TauMBal;
  if (opts.op == "diamond") arg_space = SpaceTag::TauMStarBal;
  Element x = parse_element(alpha, opts.x_expr, arg_space);
  Element y = parse_element(alpha, opts.y_expr, arg_space);
  Element prod;
  if (opts.op == "boxtimes") prod = boxtimes(alpha, s.ham, x, y);
  else if (opts.op == "boxdot") prod = boxdot(alpha, s.ham, x, y);
  else if (opts.op == "diamond") prod = diamond(alpha, s.ham, x, y);
  else throw error("unknown product op: " + opts.op);
  const PrintOptions po = print_opts(opts);
  out.text("product op=" + opts.op);
  out.text("  x = " + print_element(alpha, x, po));
  out.text("  y = " + print_element(alpha, y, po));
  out.text("  chain = " + print_element(alpha, prod, po));
  out.record({{"record", "product"},
              {"op", opts.op},
              {"x", print_element(alpha, x, po)},
              {"y", print_element(alpha, y, po)},
              {"chain", print_element(alpha, prod, po)}});
}

void bv_section(Lines& out, const Session& s, const RunOptions& opts) {
  DeltaTable table = delta_table(s.ctx, opts.maxlen, opts.deg_lo, opts.deg_hi);
  const PrintOptions po = print_opts(opts);
  out.text("bv maxlen=" + std::to_string(opts.maxlen) + " degrees=" +
           std::to_string(opts.deg_lo) + ".." + std::to_string(opts.deg_hi));
  for (std::size_t i = 0; i < table.generators.size(); ++i) {
    std::string cell;
    for (const auto& [k, c] : table.images[i]) {
      if (!cell.empty()) cell += " + ";
      if (c != 1) cell += to_string(c) + " * ";
      cell += print_element(s.alpha(), table.generators[k].second, po);
    }
    if (cell.empty()) cell = "0";
    out.text("  Delta( " + print_element(s.alpha(), table.generators[i].second, po) +
             " ) = " + cell);
    out.record({{"record", "bv"},
                {"i", std::to_string(i)},
                {"gen", print_element(s.alpha(), table.generators[i].second, po)},
                {"value", cell},
                {"maxlen", std::to_string(opts.maxlen)}});
  }
  for (const std::string& note : table.notes) {
    out.text("  note: " + note);
    out.record({{"record", "bv-note"}, {"note", note}});
  }
}

} // namespace

Report run_validate(const PresentationInput& input, const RunOptions& opts) {
  Lines out;
  out.machine = opts.format == "machine";
  const int failures = validate_section(out, input, opts);
  return {out.os.str(), failures == 0 ? 0 : 1};
}

Report run_homology(const PresentationInput& input, const RunOptions& opts) {
  Lines out;
  out.machine = opts.format == "machine";
  Session s = open_session(input, 2, opts.maxlen);
  homology_section(out, s, opts, opts.space);
  return {out.os.str(), 0};
}

Report run_product(const PresentationInput& input, const RunOptions& opts) {
  Lines out;
  out.machine = opts.format == "machine";
  Session s = open_session(input, std::max(2, opts.qmax), opts.maxlen);
  if (opts.op != "diamond" && !s.ham.has(2, 0))
    throw error("product op " + opts.op + " needs the H 2 0 directive");
  if (!opts.table && (opts.x_expr.empty() || opts.y_expr.empty()))
    throw error("product needs --table or both --x and --y");
  if (opts.table) product_table_section(out, s, opts);
  else product_pair_section(out, s, opts);
  return {out.os.str(), 0};
}

Report run_bv(const PresentationInput& input, const RunOptions& opts) {
  Lines out;
  out.machine = opts.format == "machine";
  Session s = open_session(input, 2, opts.maxlen);
  bv_section(out, s, opts);
  return {out.os.str(), 0};
}

Report run_report(const PresentationInput& input, const RunOptions& opts) {
  Lines out;
  out.machine = opts.format == "machine";
  out.record({{"record", "meta"},
              {"maxlen", std::to_string(opts.maxlen)},
              {"degrees",
               std::to_string(opts.deg_lo) + ".." + std::to_string(opts.deg_hi)},
              {"qmax", std::to_string(opts.qmax)}});
  out.text("report (maxlen " + std::to_string(opts.maxlen) + ", degrees " +
           std::to_string(opts.deg_lo) + ".." + std::to_string(opts.deg_hi) +
           ", qmax " + std::to_string(opts.qmax) + ")");
  const int failures = validate_section(out, input, opts);
  if (failures > 0) return {out.os.str(), 1};
  Session s = open_session(input, opts.qmax, opts.maxlen);
  homology_section(out, s, opts, "mcyc");
  homology_section(out, s, opts, "mbal");
  if (s.ham.has(2, 0)) {
    RunOptions popts = opts;
    for (const char* op : {"boxtimes", "boxdot", "diamond"}) {
      popts.op = op;
      product_table_section(out, s, popts);
    }
  } else {
    out.text("products skipped: no H 2 0 directive");
    out.record({{"record", "product-note"}, {"note", "no H 2 0 directive"}});
  }
  bv_section(out, s, opts);
  return {out.os.str(), 0};
}

} // namespace cychom
