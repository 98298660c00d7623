#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpair/expr.hpp"
#include "qpair/harness.hpp"

namespace py = pybind11;
using namespace qpair;

namespace {

CartanDatum make_datum(const std::string& type, const std::string& gcm_file) {
  if (!gcm_file.empty()) return CartanDatum::from_file(gcm_file);
  return CartanDatum::preset(type);
}

}  // namespace

PYBIND11_MODULE(_qpair, m) {
  m.doc() = "exact computations in a quantized enveloping algebra";

  py::class_<Scalar>(m, "Scalar")
      .def("__str__", &render_scalar)
      .def("__repr__", &render_scalar)
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("is_zero", &Scalar::is_zero)
      .def("is_one", &Scalar::is_one);

  py::class_<Element>(m, "Element")
      .def("__str__", &render_element)
      .def("__repr__", &render_element)
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("term_count", &Element::term_count);

  py::class_<Tensor>(m, "Tensor")
      .def("__str__", &render_tensor)
      .def("__repr__", &render_tensor)
      .def("slots", &Tensor::slots);

  py::class_<WeightModule>(m, "WeightModule")
      .def_property_readonly("name",
                             [](const WeightModule& v) { return v.name; })
      .def("dim", &WeightModule::dim)
      .def("dump", &WeightModule::dump);

  py::class_<CartanDatum>(m, "Datum")
      .def(py::init([](const std::string& type, const std::string& gcm_file) {
             return make_datum(type, gcm_file);
           }),
           py::arg("type") = "A2", py::arg("gcm_file") = "")
      .def("rank", &CartanDatum::rank)
      .def("name", &CartanDatum::name)
      .def("describe", &CartanDatum::describe);

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](const std::string& type, const std::string& gcm_file) {
             return std::make_unique<Algebra>(make_datum(type, gcm_file));
           }),
           py::arg("type") = "A2", py::arg("gcm_file") = "")
      .def(py::init<const CartanDatum&>())
      .def("rank", &Algebra::rank)
      .def("parse",
           [](const Algebra& alg, const std::string& text) {
             return parse_element(alg, text);
           })
      .def("unit", &Algebra::unit)
      .def("e", &Algebra::gen_e)
      .def("f", &Algebra::gen_f)
      .def("k", [](const Algebra& alg, const std::vector<long>& g) {
        return alg.gen_k(RootVector(g));
      })
      .def("multiply", &Algebra::multiply)
      .def("power", &Algebra::power)
      .def("coproduct", &Algebra::coproduct)
      .def("antipode", &Algebra::antipode)
      .def("counit", &Algebra::counit)
      .def("braid", &Algebra::braid_T)
      .def("braid_inv", &Algebra::braid_T_inv)
      .def("torus_projection", &Algebra::projection_p);

  py::class_<Pairing>(m, "Pairing")
      .def(py::init<const Algebra&>(), py::keep_alive<1, 2>())
      .def("tau", &Pairing::tau)
      .def("is_zero", &Pairing::is_zero)
      .def("equal", &Pairing::equal)
      .def("gram_rank", [](const Pairing& p, const std::vector<long>& g) {
        return p.gram_block(RootVector(g)).rank;
      });

  m.def("highest_module", &build_highest);
  m.def("lowest_module", &build_lowest);

  m.def("registered_checks", &registered_checks);
  m.def(
      "verify",
      [](const std::string& type, const std::string& gcm_file, long max_height,
         long theorem_height, long max_power, long max_module_weight,
         long ds_samples, unsigned long long seed,
         const std::optional<std::vector<std::string>>& checks,
         const std::string& format, bool timing) {
        CheckConfig cfg;
        cfg.type = type;
        cfg.gcm_file = gcm_file;
        cfg.max_height = max_height;
        cfg.theorem_height = theorem_height;
        cfg.max_power = max_power;
        cfg.max_module_weight = max_module_weight;
        cfg.ds_samples = ds_samples;
        cfg.seed = seed;
        if (checks.has_value()) cfg.checks = *checks;
        cfg.format = format;
        cfg.timing = timing;
        const CheckReport report = run_suite(cfg);
        const std::string text =
            format == "json" ? report.to_json() : report.to_text();
        return py::make_tuple(report.all_passed(), text);
      },
      py::arg("type") = "A2", py::arg("gcm_file") = "",
      py::arg("max_height") = 6, py::arg("theorem_height") = 0,
      py::arg("max_power") = 4, py::arg("max_module_weight") = 4,
      py::arg("ds_samples") = 100, py::arg("seed") = 42,
      py::arg("checks") = py::none(), py::arg("format") = "text",
      py::arg("timing") = false,
      "Run the identity checks; returns (all_passed, report_text).");
}
