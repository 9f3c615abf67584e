#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "filtralab/instance.hpp"
#include "filtralab/newton.hpp"
#include "filtralab/runner.hpp"
#include "filtralab/theorems.hpp"
#include "filtralab/version.hpp"

namespace py = pybind11;
using namespace filtralab;

namespace {

py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

py::dict summary_dict(const HilbertSummary& s) {
  py::dict d;
  d["dimension"] = s.dimension;
  d["arity"] = s.arity;
  if (s.arity == 1) {
    py::list e;
    for (const auto& c : s.e) e.append(to_py(c));
    d["e"] = e;
    if (s.postulation)
      d["postulation"] = *s.postulation;
    else
      d["postulation"] = py::none();
  } else {
    py::dict table;
    for (const auto& [alpha, c] : s.e_alpha)
      table[py::tuple(py::cast(alpha))] = to_py(c);
    d["e_alpha"] = table;
  }
  return d;
}

py::dict theorem_dict(const TheoremReport& r) {
  py::dict d;
  d["theorem"] = r.theorem;
  d["verdict"] = to_string(r.verdict);
  d["hypotheses_checked"] = r.hypotheses_checked;
  d["hypotheses_assumed"] = r.hypotheses_assumed;
  py::dict q;
  for (const auto& [k, v] : r.quantities) q[py::str(k)] = v;
  d["quantities"] = q;
  d["trail"] = r.trail;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Hilbert functions and filtrations of monomial ideals";
  m.attr("__version__") = kVersion;

  py::class_<AmbientRing, std::shared_ptr<AmbientRing>>(m, "Ring")
      .def(py::init([](std::vector<std::string> vars,
                       std::vector<ExponentVector> quotient, bool cm) {
             return std::make_shared<AmbientRing>(std::move(vars),
                                                  std::move(quotient), cm);
           }),
           py::arg("variables"),
           py::arg("quotient") = std::vector<ExponentVector>{},
           py::arg("cm") = false)
      .def_property_readonly("dimension", &AmbientRing::dimension)
      .def_property_readonly("variables", &AmbientRing::variables)
      .def("__repr__", [](const AmbientRing& r) {
        std::string s = "Ring(";
        for (size_t i = 0; i < r.variables().size(); ++i)
          s += (i ? ", " : "") + r.variables()[i];
        return s + ")";
      });

  py::class_<MonomialIdeal>(m, "Ideal")
      .def(py::init([](RingPtr ring, std::vector<ExponentVector> gens) {
             return minimal_generators(std::move(gens), std::move(ring));
           }),
           py::arg("ring"), py::arg("generators"))
      .def_property_readonly("generators", &MonomialIdeal::generators)
      .def("contains", py::overload_cast<const ExponentVector&>(
                           &MonomialIdeal::contains, py::const_))
      .def("contains_ideal", py::overload_cast<const MonomialIdeal&>(
                                 &MonomialIdeal::contains, py::const_))
      .def("is_m_primary", [](const MonomialIdeal& I) { return is_m_primary(I); })
      .def("colength", [](const MonomialIdeal& I) { return to_py(colength(I)); })
      .def("__add__", &add)
      .def("__mul__", &multiply)
      .def("__pow__", &power)
      .def("colon", &colon)
      .def("intersect", &intersect)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) {
        return a == b;
      })
      .def("__repr__", &MonomialIdeal::to_string);

  m.def("ratliff_rush",
        [](const MonomialIdeal& I, int kmax) {
          RRConfig rr;
          rr.k_max = kmax;
          return ratliff_rush(I, rr);
        },
        py::arg("ideal"), py::arg("kmax") = 32,
        "Ratliff-Rush closure of an m-primary monomial ideal");
  m.def("integral_closure", &integral_closure_power, py::arg("ideal"),
        py::arg("n") = 1, "integral closure of I^n via the Newton polyhedron");
  m.def("newton_membership", &newton_membership, py::arg("exponents"),
        py::arg("ideal"), py::arg("n") = 1);

  py::class_<Filtration>(m, "Filtration")
      .def_static("adic",
                  [](std::vector<MonomialIdeal> base) {
                    return Filtration::adic(std::move(base));
                  })
      .def_static("normal",
                  [](std::vector<MonomialIdeal> base) {
                    return Filtration::normal(std::move(base));
                  })
      .def_static("ratliff_rush", &Filtration::ratliff_rush_closure)
      .def_static("product",
                  [](std::vector<Filtration> axes) {
                    return Filtration::product(std::move(axes));
                  })
      .def_property_readonly("arity", &Filtration::arity)
      .def("piece",
           [](const Filtration& f, const MultiIndex& n) { return f.piece(n); })
      .def("hilbert",
           [](const Filtration& f, const MultiIndex& n) {
             return to_py(f.hilbert_value(n));
           });

  m.def("fit", [](const Filtration& f) { return summary_dict(fit(f)); },
        "exact Hilbert polynomial fit in the binomial basis");
  m.def("check_northcott",
        [](const Filtration& f) { return theorem_dict(check_northcott(f)); });
  m.def("check_nonnegativity", [](const Filtration& f) {
    return theorem_dict(check_nonnegativity(f));
  });
  m.def("check_huneke_ooishi",
        [](const Filtration& f, std::vector<MonomialIdeal> cands) {
          std::vector<std::string> names;
          for (size_t i = 0; i < cands.size(); ++i)
            names.push_back("candidate#" + std::to_string(i));
          return theorem_dict(check_huneke_ooishi(f, cands, names));
        });
  m.def("check_normal_e3", [](const MonomialIdeal& I) {
    return theorem_dict(check_normal_e3(I));
  });

  m.def("run_instance_text",
        [](const std::string& text, bool timings) {
          InstanceFile parsed = parse_instance(text);
          RunConfig cfg;
          cfg.timings = timings;
          ReportDocument doc =
              run_instance(parsed, "-", fnv1a_digest(text), cfg);
          return emit(doc, EmitFormat::json, timings);
        },
        py::arg("text"), py::arg("timings") = false,
        "parse an instance file and run its task list; returns JSON");
}
