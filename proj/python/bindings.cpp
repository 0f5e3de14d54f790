#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kroncave/closed_forms.hpp"
#include "kroncave/coefficients.hpp"
#include "kroncave/conjectures.hpp"
#include "kroncave/errors.hpp"
#include "kroncave/store.hpp"
#include "kroncave/verify.hpp"

namespace py = pybind11;
using namespace kroncave;

namespace {

py::int_ to_py(const ExactInt& v) {
  const std::string s = to_decimal(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple to_tuple(const Partition& p) { return py::tuple(py::cast(std::vector<int>(p.begin(), p.end()))); }

template <class Map>
py::dict to_dict(const Map& coeffs) {
  py::dict d;
  for (const auto& [nu, c] : coeffs) d[to_tuple(nu)] = to_py(c);
  return d;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// Owns the engine together with its optional cache file.
struct PyEngine {
  std::unique_ptr<JsonlStore> store;
  std::unique_ptr<Engine> engine;

  PyEngine(int window, std::optional<int> cap, std::optional<std::string> cache, bool cache_all) {
    StabilizationConfig config;
    config.window = window;
    config.cap_offset = cap;
    engine = std::make_unique<Engine>(config);
    if (cache) {
      store = std::make_unique<JsonlStore>(*cache, engine->version());
      engine->attach_cache(store.get(), cache_all);
    }
  }
};

ViolationReport run_check(const Engine& e, const std::string& name, const std::vector<std::vector<int>>& args) {
  std::vector<Partition> parts;
  for (const auto& a : args) parts.push_back(to_partition(a));
  auto need_two = [&] {
    if (parts.size() != 2) throw std::invalid_argument(name + " takes two partitions");
  };
  std::optional<ScanFamily> family = parse_family(name);
  if (!family) throw std::invalid_argument("unknown check '" + name + "'");
  switch (*family) {
    case ScanFamily::midpoint_reduced:
      need_two();
      return check_midpoint_reduced(e, parts[0], parts[1]);
    case ScanFamily::midpoint_kronecker:
      need_two();
      return check_midpoint_kronecker(e, parts[0], parts[1]);
    case ScanFamily::sort:
      need_two();
      return check_sort_conjecture(e, parts[0], parts[1]);
    case ScanFamily::schur_lr:
      need_two();
      return check_schur_log_concavity(e, parts[0], parts[1]);
    case ScanFamily::chain:
      return check_chain_conjecture(e, parts);
  }
  throw std::invalid_argument("unknown check");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kronecker, reduced Kronecker and Littlewood-Richardson coefficients";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidPartition>(m, "InvalidPartition", base.ptr());
  py::register_exception<PadTooSmall>(m, "PadTooSmall", base.ptr());
  py::register_exception<NotIntegral>(m, "NotIntegral", base.ptr());
  py::register_exception<SizeMismatch>(m, "SizeMismatch", base.ptr());
  py::register_exception<StabilizationNotDetected>(m, "StabilizationNotDetected", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<StoreIO>(m, "StoreIO", base.ptr());

  m.def("parse_partition", [](const std::string& s) { return to_tuple(parse_partition_text(s)); });
  m.def("conjugate", [](const std::vector<int>& l) { return to_tuple(conjugate(to_partition(l))); });
  m.def("pad", [](const std::vector<int>& l, int d) { return to_tuple(pad(to_partition(l), d)); });
  m.def("midpoint", [](const std::vector<int>& l, const std::vector<int>& u) {
    return to_tuple(midpoint(to_partition(l), to_partition(u)));
  });
  m.def("syt_count", [](const std::vector<int>& l) { return to_py(syt_count(to_partition(l))); });
  m.def("kostka", [](const std::vector<int>& l, const std::vector<int>& u) {
    return to_py(kostka(to_partition(l), to_partition(u)));
  });
  m.def("lr_coefficient", [](const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& n) {
    return to_py(lr_coefficient(to_partition(l), to_partition(u), to_partition(n)));
  });
  m.def("gamma", [](int a, int b, int c, int d, int x, int y) { return to_py(gamma({a, b, c, d, x, y})); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("x"), py::arg("y"));
  m.def("reduced_two_row", [](int j, int k, const std::vector<int>& n) {
    return to_py(reduced_two_row(j, k, to_partition(n)));
  });
  m.def("reduced_hook", [](int j, int k, const std::vector<int>& n) {
    return to_py(reduced_hook(j, k, to_partition(n)));
  });
  m.def("dim_log_concavity", [](const std::vector<int>& l, const std::vector<int>& u, int d) {
    const auto r = check_dim_log_concavity(to_partition(l), to_partition(u), d);
    return py::make_tuple(r.holds, to_py(r.lhs), to_py(r.rhs));
  });

  py::class_<PyEngine>(m, "Engine")
      .def(py::init<int, std::optional<int>, std::optional<std::string>, bool>(), py::arg("window") = 2,
           py::arg("cap") = py::none(), py::arg("cache") = py::none(), py::arg("cache_all") = false)
      .def_property_readonly("version", [](const PyEngine& e) { return e.engine->version(); })
      .def("character",
           [](const PyEngine& e, const std::vector<int>& l, const std::vector<int>& rho) {
             return to_py(e.engine->characters().character(to_partition(l), to_partition(rho)));
           })
      .def("kronecker",
           [](const PyEngine& e, const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& n) {
             const Partition a = to_partition(l), b = to_partition(u), c = to_partition(n);
             ExactInt v;
             {
               py::gil_scoped_release release;
               v = e.engine->kronecker(a, b, c);
             }
             return to_py(v);
           })
      .def("lr",
           [](const PyEngine& e, const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& n) {
             return to_py(e.engine->lr(to_partition(l), to_partition(u), to_partition(n)));
           })
      .def("reduced_kronecker",
           [](const PyEngine& e, const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& n) {
             const Partition a = to_partition(l), b = to_partition(u), c = to_partition(n);
             ExactInt v;
             {
               py::gil_scoped_release release;
               v = e.engine->reduced_kronecker(a, b, c);
             }
             return to_py(v);
           })
      .def("reduced_kronecker_trace",
           [](const PyEngine& e, const std::vector<int>& l, const std::vector<int>& u, const std::vector<int>& n) {
             const auto t = e.engine->reduced_kronecker_trace(to_partition(l), to_partition(u), to_partition(n));
             py::list values;
             for (const auto& v : t.values) values.append(to_py(v));
             return py::make_tuple(t.first_d, values, to_py(t.stable_value));
           })
      .def("tensor_decompose",
           [](const PyEngine& e, const std::vector<int>& l, const std::vector<int>& u) {
             return to_dict(e.engine->tensor_decompose(to_partition(l), to_partition(u)).coeffs());
           })
      .def("reduced_tensor_decompose",
           [](const PyEngine& e, const std::vector<int>& l, const std::vector<int>& u) {
             return to_dict(e.engine->reduced_tensor_decompose(to_partition(l), to_partition(u)).coeffs());
           })
      .def("check",
           [](const PyEngine& e, const std::string& name, const std::vector<std::vector<int>>& args) {
             return json_to_py(to_json(run_check(*e.engine, name, args), false));
           })
      .def(
          "scan",
          [](const PyEngine& e, const std::string& family, int max_boxes, int chain_length, int jobs) {
            const auto f = parse_family(family);
            if (!f) throw std::invalid_argument("unknown scan family '" + family + "'");
            ScanRequest request{*f, max_boxes, chain_length, jobs};
            ViolationReport report;
            {
              py::gil_scoped_release release;
              report = scan(*e.engine, request);
            }
            return json_to_py(to_json(report, false));
          },
          py::arg("family"), py::arg("max_boxes") = 6, py::arg("chain_length") = 3, py::arg("jobs") = 1)
      .def(
          "verify",
          [](const PyEngine& e, bool stretch, int jobs) {
            VerifyOptions options;
            options.stretch = stretch;
            options.jobs = jobs;
            std::vector<GoldenCheck> checks;
            {
              py::gil_scoped_release release;
              checks = verify_golden(*e.engine, options);
            }
            return json_to_py(to_json(checks));
          },
          py::arg("stretch") = false, py::arg("jobs") = 1);
}
