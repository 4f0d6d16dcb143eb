#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilc/cli.hpp"
#include "nilc/export.hpp"
#include "nilc/text.hpp"
#include "nilc/verify.hpp"

namespace py = pybind11;
using namespace nilc;

namespace {

std::string braces(const RootSystem& sys, const OrthSet& S) {
  return S.empty() ? "{}" : "{" + format_set(sys, S) + "}";
}

py::dict pair_dict(const Engine& E, const TildePair& p) {
  py::dict d;
  d["w"] = E.weyl().format_word(p.w);
  d["set"] = braces(E.system(), p.set);
  d["w_length"] = p.w_length;
  d["dim"] = p.dim;
  d["sigma"] = E.affine().format_word(p.sigma.element);
  d["admissible"] = p.admissible;
  return d;
}

const Height2Orbit& orbit_or_own(const Engine& E, const std::string& id, const OrthSet& R) {
  if (!id.empty()) return E.orbit(id);
  const Height2Orbit* o = g_orbit_of_set(E.system(), E.catalogue(), R);
  if (!o) throw Error(ErrorKind::EmptySet, "the empty set needs an orbit id");
  return *o;
}

}  // namespace

PYBIND11_MODULE(_nilc, m) {
  m.doc() = "Height-2 nilpotent B-orbits, affine involutions and closure order";

  py::register_exception<Error>(m, "NilcError", PyExc_ValueError);

  py::class_<Engine>(m, "Engine")
      .def(py::init([](const std::string& letter, int rank) { return new Engine(parse_type(letter, rank)); }),
           py::arg("type"), py::arg("rank"))
      .def_property_readonly("name", [](const Engine& E) { return E.system().type().to_string(); })
      .def_property_readonly("num_roots", [](const Engine& E) { return E.system().size(); })
      .def("catalogue",
           [](const Engine& E) {
             py::list out;
             for (const auto& o : E.catalogue()) {
               py::dict d;
               d["id"] = o.id;
               d["diagram"] = std::vector<int>(o.diagram.begin(), o.diagram.begin() + E.system().rank());
               d["rank"] = o.rank();
               d["psi_size"] = o.psi.size();
               d["dim"] = o.dim();
               out.append(d);
             }
             return out;
           })
      .def(
          "poset_json",
          [](const Engine& E, const std::string& orbit, bool tilde) {
            if (orbit.empty()) return to_json(document_of(E, enumerate_n2(E)));
            const auto& o = E.orbit(orbit);
            if (tilde) return to_json(document_of(E, enumerate_tilde(E, o), o));
            return to_json(document_of(E, enumerate_ort_x(E, o), "X", orbit));
          },
          py::arg("orbit") = "", py::arg("tilde") = false)
      .def(
          "poset_dot",
          [](const Engine& E, const std::string& orbit, bool tilde) {
            if (orbit.empty()) return to_dot(document_of(E, enumerate_n2(E)));
            const auto& o = E.orbit(orbit);
            if (tilde) return to_dot(document_of(E, enumerate_tilde(E, o), o));
            return to_dot(document_of(E, enumerate_ort_x(E, o), "X", orbit));
          },
          py::arg("orbit") = "", py::arg("tilde") = false)
      .def("closure_leq",
           [](const Engine& E, const std::string& r, const std::string& s) {
             return closure_leq_n2(E, parse_set(E.system(), r), parse_set(E.system(), s));
           })
      .def("sigma",
           [](const Engine& E, const std::string& s) {
             auto b = make_borbit(E, parse_set(E.system(), s));
             py::dict d;
             d["word"] = E.affine().format_word(b.sigma.element);
             d["length"] = b.length;
             d["dim"] = b.dim;
             d["g_orbit"] = b.g_orbit;
             return d;
           })
      .def(
          "admissible",
          [](const Engine& E, const std::string& set, const std::string& orbit) {
            OrthSet R = parse_set(E.system(), set);
            return pair_dict(E, admissible_pair(E, orbit_or_own(E, orbit, R), R));
          },
          py::arg("set"), py::arg("orbit") = "")
      .def(
          "fiber",
          [](const Engine& E, const std::string& set, const std::string& orbit) {
            OrthSet R = parse_set(E.system(), set);
            py::list out;
            for (const auto& p : fiber(E, orbit_or_own(E, orbit, R), R)) out.append(pair_dict(E, p));
            return out;
          },
          py::arg("set"), py::arg("orbit") = "")
      .def("affine_length", [](const Engine& E, const std::string& w) { return E.affine().length(E.affine().parse_word(w)); })
      .def("affine_bruhat_leq",
           [](const Engine& E, const std::string& x, const std::string& y) {
             return E.affine().bruhat_leq(E.affine().parse_word(x), E.affine().parse_word(y));
           })
      .def("weyl_bruhat_leq", [](const Engine& E, const std::string& x, const std::string& y) {
        return E.weyl().bruhat_leq(E.weyl().parse_word(x), E.weyl().parse_word(y));
      });

  m.def(
      "verify",
      [](const std::string& suite) {
        py::list out;
        for (const auto& c : verify::suite(suite)) {
          auto r = c.run();
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all");

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "nilc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
