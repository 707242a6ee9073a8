// Python bindings: a thin session object over the C++ engine, exposing the
// parsing, differential, contraction, homology and product operations.

#include "cychom/workbench.hpp"

#include "cychom/contraction.hpp"
#include "cychom/cyclic.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

namespace py = pybind11;
using namespace cychom;

namespace {

SpaceTag space_from_name(const std::string& name) {
  for (SpaceTag t : {SpaceTag::A, SpaceTag::M, SpaceTag::MDiag, SpaceTag::MCyc,
                     SpaceTag::U, SpaceTag::UBal, SpaceTag::ExcitedUBal,
                     SpaceTag::TauMBal, SpaceTag::TauMStarBal})
    if (name == space_name(t)) return t;
  throw error("unknown space tag: " + name);
}

// Bound session: owns the parsed presentation, context and Hamiltonians.
class PySession {
public:
  PySession(const std::string& text, int qmax, int cutoff)
      : input_(parse_presentation(text)), session_(open_session(input_, qmax, cutoff)) {}

  static PySession from_file(const std::string& path, int qmax, int cutoff) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return PySession(buf.str(), qmax, cutoff);
  }

  Element parse(const std::string& expr, const std::string& space) const {
    return parse_element(alpha(), expr, space_from_name(space));
  }
  std::string print(const Element& e, bool theta_one) const {
    PrintOptions po;
    po.theta_one = theta_one;
    return print_element(alpha(), e, po);
  }

  int element_deg(const Element& e) const {
    auto d = element_degree(alpha(), e);
    if (!d) throw error("zero element has no degree");
    return *d;
  }

  Element d_mod(const Element& x) const { return d_module(input_.pres, x); }
  Element d_bal(const Element& x) const { return d_balanced(session_.ctx, x); }
  Element star_(const Element& x, const Element& y) const {
    return star(alpha(), x, y);
  }
  Element bracket_(const Element& x, const Element& y) const {
    return bracket(alpha(), x, y);
  }
  Element boxtimes_(const Element& x, const Element& y) const {
    return boxtimes(alpha(), session_.ham, x, y);
  }
  Element boxdot_(const Element& x, const Element& y) const {
    return boxdot(alpha(), session_.ham, x, y);
  }
  Element diamond_(const Element& x, const Element& y) const {
    return diamond(alpha(), session_.ham, x, y);
  }
  Element delta_(const Element& x) const { return bv_delta(alpha(), x); }
  Element beta_u(const Element& x) const { return beta_underline(alpha(), x); }
  Element beta_u_inv(const Element& x) const { return beta_underline_inv(alpha(), x); }
  Element unit() const { return unit_element(alpha()); }

  py::dict homology_table(const std::string& space, int maxlen, int lo, int hi) const {
    ComplexSpace cs = ComplexSpace::MCyc;
    if (space == "mbal") cs = ComplexSpace::MBal;
    else if (space == "mstarbal") cs = ComplexSpace::MStarBal;
    else if (space != "mcyc") throw error("unknown space: " + space);
    TruncatedComplex cx = build_complex(session_.ctx, cs, maxlen, lo, hi);
    HomologyResult h = homology(cx);
    py::dict dims, reps;
    for (const auto& [deg, dim] : h.dims) {
      dims[py::int_(deg)] = dim;
      py::list lst;
      for (const Element& r : h.reps.at(deg)) lst.append(print(r, false));
      reps[py::int_(deg)] = lst;
    }
    py::list dirty;
    for (int d : h.dirty_degrees) dirty.append(d);
    py::dict out;
    out["dims"] = dims;
    out["reps"] = reps;
    out["dirty"] = dirty;
    return out;
  }

  py::list master_residuals(int qmax) const {
    MasterReport rep = check_master(input_.pres, session_.ham, qmax);
    py::list out;
    for (const auto& e : rep.entries) {
      py::dict d;
      d["name"] = e.name;
      d["zero"] = e.zero;
      d["residual"] = print(e.residual, false);
      out.append(d);
    }
    return out;
  }

  const Alphabet& alpha() const { return session_.alpha(); }

private:
  PresentationInput input_;
  Session session_;
};

} // namespace

PYBIND11_MODULE(_cychom, m) {
  m.doc() = "exact cyclic-complex invariants of Legendrian homology algebras";

  py::class_<Element>(m, "Element")
      .def("__eq__", [](const Element& a, const Element& b) { return equal(a, b); })
      .def("is_zero", &Element::is_zero)
      .def_property_readonly("space",
                             [](const Element& e) { return space_name(e.space); });

  py::class_<PySession>(m, "Session")
      .def(py::init<const std::string&, int, int>(), py::arg("text"),
           py::arg("qmax") = 4, py::arg("cutoff") = 8)
      .def_static("from_file", &PySession::from_file, py::arg("path"),
                  py::arg("qmax") = 4, py::arg("cutoff") = 8)
      .def("parse", &PySession::parse, py::arg("expr"), py::arg("space") = "Mcyc")
      .def("print", &PySession::print, py::arg("element"), py::arg("theta_one") = true)
      .def("degree", &PySession::element_deg)
      .def("d_module", &PySession::d_mod)
      .def("d_balanced", &PySession::d_bal)
      .def("star", &PySession::star_)
      .def("bracket", &PySession::bracket_)
      .def("boxtimes", &PySession::boxtimes_)
      .def("boxdot", &PySession::boxdot_)
      .def("diamond", &PySession::diamond_)
      .def("bv_delta", &PySession::delta_)
      .def("beta_underline", &PySession::beta_u)
      .def("beta_underline_inv", &PySession::beta_u_inv)
      .def("unit", &PySession::unit)
      .def("homology", &PySession::homology_table, py::arg("space") = "mcyc",
           py::arg("maxlen") = 7, py::arg("lo") = 0, py::arg("hi") = 6)
      .def("master_residuals", &PySession::master_residuals, py::arg("qmax") = 4);

  py::register_exception<error>(m, "EngineError", PyExc_RuntimeError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
}
