#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klwv/cli.hpp"
#include "klwv/embedcheck.hpp"
#include "klwv/extension.hpp"
#include "klwv/freefield.hpp"
#include "klwv/lie.hpp"
#include "klwv/qhreduce.hpp"

namespace py = pybind11;

// klwv::Rat <-> fractions.Fraction (ints are accepted on the way in).
namespace pybind11::detail {
template <>
struct type_caster<klwv::Rat> {
  PYBIND11_TYPE_CASTER(klwv::Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object f;
    if (py::isinstance<py::str>(src)) {
      value = klwv::Rat::parse(src.cast<std::string>());
      return true;
    }
    try {
      f = fraction(src);
    } catch (...) {
      return false;
    }
    const std::string text = py::str(f.attr("numerator")).cast<std::string>() + "/" +
                             py::str(f.attr("denominator")).cast<std::string>();
    value = klwv::Rat::parse(text);
    return true;
  }

  static handle cast(const klwv::Rat& r, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.num().get_str())), py::int_(py::str(r.den().get_str()))).release();
  }
};
}  // namespace pybind11::detail

namespace {

py::dict report_dict(const klwv::Report& r) {
  return py::module_::import("json").attr("loads")(r.to_json().dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic kernels of klwv";

  py::register_exception<klwv::Error>(m, "KlwvError", PyExc_ValueError);

  m.def("delta_atypical", &klwv::delta_atypical, py::arg("m"), py::arg("a"), py::arg("b"), py::arg("i"));
  m.def("delta_typical", &klwv::delta_typical, py::arg("m"), py::arg("mu"), py::arg("nu"), py::arg("i"));
  m.def("fock_delta", [](const klwv::Rat& level, const klwv::Rat& weight) {
    return klwv::fock_delta(klwv::FockModule(level, weight));
  });
  m.def("singlet_delta", [](const std::string& label) {
    return klwv::singlet_delta(klwv::SingletModule::parse(label));
  });
  m.def("fw_inner", &klwv::fw_inner);
  m.def("sugawara_weight", [](int N, const klwv::Rat& k, std::vector<klwv::Rat> lambda) {
    return klwv::sugawara_weight({N, k}, klwv::WeightVec(N, std::move(lambda)));
  });
  m.def("weyl_dim", [](int N, std::vector<klwv::Rat> lambda) {
    return py::int_(py::str(klwv::weyl_dim(klwv::WeightVec(N, std::move(lambda))).get_str()));
  });

  m.def(
      "classify",
      [](int mm, std::int64_t j0, const klwv::Rat& a, py::object b, py::object nu) {
        const klwv::GenInduced g = nu.is_none() ? klwv::GenInduced::atypical(mm, j0, a, b.cast<std::int64_t>())
                                                : klwv::GenInduced::typical(mm, j0, a, nu.cast<klwv::Rat>());
        const auto c = klwv::classify(g);
        py::dict out;
        out["class"] = klwv::to_string(c.label);
        out["local"] = c.local;
        out["lower_bounded"] = c.lower_bounded;
        out["argmin"] = c.argmin;
        out["delta_min"] = c.delta_min;
        out["monodromy"] = c.monodromy;
        return out;
      },
      py::arg("m"), py::arg("j0"), py::arg("a"), py::arg("b") = py::none(), py::arg("nu") = py::none());

  m.def("enumerate_ordinary", [](int mm, int denom, int range) {
    std::vector<std::tuple<std::string, std::string>> out;
    for (const auto& e : klwv::enumerate_ordinary(mm, denom, range))
      out.emplace_back(e.module.str(), klwv::to_string(e.label));
    return out;
  });

  m.def("delta_theta", &klwv::delta_theta);
  m.def("eq1_solutions", &klwv::eq1_solutions);
  m.def("sos_certificate", [](int mm) { return report_dict(klwv::sos_certificate(mm)); });
  m.def("gram_check", [](int mm) { return report_dict(klwv::gram_check(mm)); });
  m.def("verify_sympfermion", [](int order, std::int64_t window) {
    return report_dict(klwv::verify_sympfermion(klwv::HalfInt::from_int(order), window));
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = klwv::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
