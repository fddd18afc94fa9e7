#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclres/cli.hpp"

namespace py = pybind11;
using namespace cyclres;

namespace {

std::map<std::pair<int, int>, std::int64_t> betti_dict(const BettiTable& b) { return b.entries; }

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  auto put = [&](const char* key, const std::optional<bool>& v) {
    d[key] = v ? py::object(py::bool_(*v)) : py::object(py::none());
  };
  put("d2_ok", r.d2_ok);
  put("minimal_ok", r.minimal_ok);
  put("betti_match", r.betti_match);
  put("euler_ok", r.euler_ok);
  put("rank_ok", r.rank_ok);
  put("graded_exactness", r.graded_exactness);
  d["presents_ideal"] = r.presents_ideal;
  d["ok"] = r.all_ok();
  d["diagnostics"] = r.diagnostics;
  return d;
}

struct Resolution {
  int d, m;
  Field field;
  ChainComplex complex;
};

}  // namespace

PYBIND11_MODULE(_cyclres, mod) {
  mod.doc() = "Minimal free resolutions of Stanley-Reisner rings of cyclic polytopes";

  mod.def(
      "is_face", [](int d, int m, const std::vector<int>& w) { return is_face(d, m, VertexSet::from_list(m, w)); },
      py::arg("d"), py::arg("m"), py::arg("subset"));
  mod.def(
      "f_vector", [](int d, int m) { return f_vector(cyclic_complex(d, m)); }, py::arg("d"), py::arg("m"));
  mod.def(
      "facets",
      [](int d, int m) {
        std::vector<std::vector<int>> out;
        for (const auto& w : cyclic_complex(d, m).facets()) out.push_back(w.members());
        return out;
      },
      py::arg("d"), py::arg("m"));
  mod.def(
      "ideal",
      [](int d, int m, const std::string& which, const std::string& field) {
        CommandOptions o;
        o.d = d;
        o.m = m;
        o.which = which;
        o.field = field;
        o.format = "json";
        const auto r = run_command("ideal", o);
        if (r.exit_code != 0) throw py::value_error(r.err);
        return Json::parse(r.out).at("gens").get<std::vector<std::string>>();
      },
      py::arg("d"), py::arg("m"), py::arg("which") = "I", py::arg("field") = "prime:32003");
  mod.def("eta", &eta, py::arg("d"), py::arg("m"), py::arg("i"));
  mod.def(
      "betti_formula", [](int d, int m) { return betti_dict(expected_betti(d, m)); }, py::arg("d"), py::arg("m"));

  py::class_<Resolution>(mod, "Resolution")
      .def_readonly("d", &Resolution::d)
      .def_readonly("m", &Resolution::m)
      .def_property_readonly("length", [](const Resolution& r) { return r.complex.length(); })
      .def_property_readonly("ranks", [](const Resolution& r) { return r.complex.ranks(); })
      .def_property_readonly("betti", [](const Resolution& r) { return betti_dict(betti_of_complex(r.complex)); })
      .def_property_readonly("totals", [](const Resolution& r) { return betti_of_complex(r.complex).totals(); })
      .def("betti_table", [](const Resolution& r) { return betti_of_complex(r.complex).to_string(); })
      .def("to_json", [](const Resolution& r) { return dump(complex_to_json(r.complex)); })
      .def("to_m2", [](const Resolution& r) { return complex_to_m2(r.complex); })
      .def(
          "verify",
          [](const Resolution& r, const std::string& checks) {
            VerifyOptions o;
            o.checks = CheckSet::parse(checks);
            return report_dict(verify_complex(r.complex, ideal_I(r.d, r.m, r.field), o));
          },
          py::arg("checks") = "d2,minimal,betti,euler,rank");

  mod.def(
      "resolve",
      [](int d, int m, const std::string& field) {
        const Field f = Field::parse(field);
        return Resolution{d, m, f, resolve_cyclic(d, m, f)};
      },
      py::arg("d"), py::arg("m"), py::arg("field") = "prime:32003");

  mod.def(
      "run",
      [](const std::string& command, int d, int m, std::optional<int> i, std::optional<std::string> subset,
         const std::string& which, const std::string& field, const std::string& format,
         std::optional<std::string> checks, const std::string& source) {
        CommandOptions o{d, m, i, subset, which, field, format, checks, std::nullopt, source};
        const auto r = run_command(command, o);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("command"), py::arg("d") = 0, py::arg("m") = 0, py::arg("i") = py::none(),
      py::arg("subset") = py::none(), py::arg("which") = "I", py::arg("field") = "prime:32003",
      py::arg("format") = "table", py::arg("checks") = py::none(), py::arg("source") = "complex");

  py::register_exception<UsageError>(mod, "UsageError", PyExc_ValueError);
}
