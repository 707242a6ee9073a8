// Command-line workbench: parse a DGA presentation file, validate it, and
// print homology, product and BV tables.

#include "cychom/workbench.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CommonArgs {
  std::string file;
  cychom::RunOptions opts;
  std::string degrees;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_theta = true) {
  cmd->add_option("file", args.file, "presentation file (.dga)")->required();
  cmd->add_option("--maxlen", args.opts.maxlen,
                  "word-length cutoff for bases and validation (default 7)");
  cmd->add_option("--degrees", args.degrees, "degree window a..b (default 0..6)");
  cmd->add_option("--format", args.opts.format, "output format: text | machine")
      ->check(CLI::IsMember({"text", "machine"}));
  if (with_theta)
    cmd->add_option("--theta", args.opts.theta,
                    "render balanced M-type classes with theta -> 1 (one) or "
                    "explicitly (explicit)")
        ->check(CLI::IsMember({"one", "explicit"}));
}

int dispatch(const std::string& cmd, const CommonArgs& args) {
  cychom::RunOptions opts = args.opts;
  if (!args.degrees.empty()) {
    auto [lo, hi] = cychom::parse_degree_window(args.degrees);
    opts.deg_lo = lo;
    opts.deg_hi = hi;
  }
  cychom::PresentationInput input = cychom::parse_presentation_file(args.file);
  cychom::Report rep;
  if (cmd == "validate") rep = cychom::run_validate(input, opts);
  else if (cmd == "homology") rep = cychom::run_homology(input, opts);
  else if (cmd == "product") rep = cychom::run_product(input, opts);
  else if (cmd == "bv") rep = cychom::run_bv(input, opts);
  else rep = cychom::run_report(input, opts);
  std::cout << rep.text;
  return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cychom: exact homology, products and BV tables for the cyclic complexes "
      "of a Legendrian homology algebra presentation"};
  app.require_subcommand(1);
  app.footer(
      "Machine format (--format machine): one record per line, tab-separated\n"
      "key=value fields. Records: meta, validate (check,status,detail),\n"
      "homology (space,degree,dim,maxlen,rep), homology-refused (space,degree,\n"
      "maxlen), product (op,i,j,value,maxlen | op,x,y,chain), product-note,\n"
      "bv (i,gen,value,maxlen), bv-note. Field order is stable.\n"
      "\n"
      "Presentation grammar (one directive per line, '#' comments):\n"
      "  n = <int>\n"
      "  components = <int>\n"
      "  chord <name> : degree <int>, from <int>, to <int>\n"
      "  d <name> = <element|0>\n"
      "  H <p> <q> = <element>          (H 2 0 enables the products)\n"
      "Element terms are '<rational> * <word>' joined by +/-. Word letters:\n"
      "chord names, x<j>, ^<name> (hat), ^<name>* or <name>* and x<j>* (duals),\n"
      "s / s^<k>, hb / hb^<k>. '!' marks the excited letter; [ ... ] wraps a\n"
      "cyclic word.\n"
      "\n"
      "Exit codes: 0 success, 1 math validation failure, 2 input error.");

  CommonArgs vargs, hargs, pargs, bargs, rargs;

  CLI::App* vcmd = app.add_subcommand("validate",
                                      "check d^2, d_M^2 and the master equations");
  add_common(vcmd, vargs, false);
  vcmd->add_option("--qmax", vargs.opts.qmax, "check the ladder up to q (default 4)");

  CLI::App* hcmd = app.add_subcommand("homology", "per-degree homology table");
  add_common(hcmd, hargs);
  hcmd->add_option("--space", hargs.opts.space, "mcyc | mbal | mstarbal")
      ->check(CLI::IsMember({"mcyc", "mbal", "mstarbal"}));

  CLI::App* pcmd = app.add_subcommand("product", "products on homology");
  add_common(pcmd, pargs);
  pcmd->add_option("--op", pargs.opts.op, "boxtimes | boxdot | diamond")
      ->check(CLI::IsMember({"boxtimes", "boxdot", "diamond"}));
  pcmd->add_flag("--table", pargs.opts.table, "pairwise table over homology generators");
  pcmd->add_option("--x", pargs.opts.x_expr, "left factor (element expression)");
  pcmd->add_option("--y", pargs.opts.y_expr, "right factor (element expression)");

  CLI::App* bcmd = app.add_subcommand("bv", "BV-operator table");
  add_common(bcmd, bargs);
  bcmd->add_flag("--table", bargs.opts.table, "table over homology generators");

  CLI::App* rcmd = app.add_subcommand("report", "full structured report");
  add_common(rcmd, rargs);
  rcmd->add_option("--qmax", rargs.opts.qmax, "master-equation ladder depth");

  CLI11_PARSE(app, argc, argv);

  const std::string cmd = app.get_subcommands().front()->get_name();
  CommonArgs* args = &rargs;
  if (cmd == "validate") args = &vargs;
  else if (cmd == "homology") args = &hargs;
  else if (cmd == "product") args = &pargs;
  else if (cmd == "bv") args = &bargs;

  try {
    return dispatch(cmd, *args);
  } catch (const cychom::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const cychom::math_error& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const cychom::error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
