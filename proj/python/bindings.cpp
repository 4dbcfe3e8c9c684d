#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isoball/analysis.hpp"
#include "isoball/boundary.hpp"
#include "isoball/bounds.hpp"
#include "isoball/constructions.hpp"
#include "isoball/exactmath.hpp"
#include "isoball/search.hpp"
#include "isoball/serialize.hpp"

namespace py = pybind11;
using namespace isoball;

namespace {

py::object big_int(const Integer& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object fraction(const Rational& q) {
  py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(big_int(q.get_num()), big_int(q.get_den()));
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      throw std::invalid_argument("unsupported JSON value");
  }
}

Json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    Json out = Json::object();
    for (auto item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    Json out = Json::array();
    for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw std::invalid_argument("unsupported python value in family dict");
}

ExplicitFamily explicit_from_py(const py::dict& d) {
  return std::get<ExplicitFamily>(family_from_json(py_to_json(d)));
}

ProfileFamily profile_from_py(const py::dict& d) {
  return std::get<ProfileFamily>(family_from_json(py_to_json(d)));
}

Rational rational_from_py(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj))
    return make_rational(Integer(py::str(obj).cast<std::string>()), 1);
  py::object num = obj.attr("numerator");
  py::object den = obj.attr("denominator");
  return make_rational(Integer(py::str(num).cast<std::string>()),
                       Integer(py::str(den).cast<std::string>()));
}

Natural natural_from_py(const py::handle& obj) {
  Natural x(py::str(obj).cast<std::string>());
  if (sgn(x) < 0) throw std::invalid_argument("expected a nonnegative integer");
  return x;
}

}  // namespace

PYBIND11_MODULE(_isoball, m) {
  m.doc() = "exact vertex-isoperimetry toolkit: shadows, boundaries, bounds, "
            "constructions and verification sweeps";

  m.def("version", []() { return std::string(version_string()); });

  // exact counting
  m.def("binom", [](unsigned n, unsigned k) { return big_int(binom(n, k)); });
  m.def("ball_size", [](unsigned n, unsigned r) { return big_int(ball_size(n, r)); });
  m.def("check_ratio_monotone",
        [](unsigned n) { return check_ratio_monotone(n).all_hold; });
  m.def("check_slice_lower_bound",
        [](unsigned n, unsigned r) { return check_slice_lower_bound(n, r).holds; });
  m.def("check_central_binomial",
        [](unsigned mm) { return check_central_binomial(mm).holds; });

  // families and boundaries, passed around as plain dicts in the JSON shape
  m.def("family_size", [](const py::dict& d) {
    return big_int(std::visit([](const auto& f) { return family_size(f); },
                              family_from_json(py_to_json(d))));
  });
  m.def("expand_profile",
        [](const py::dict& d) { return json_to_py(to_json(expand_profile(profile_from_py(d)))); });
  m.def("profile_of", [](const py::dict& d, unsigned mm) {
    return json_to_py(to_json(profile_of(explicit_from_py(d), mm)));
  });
  m.def("lower_shadow",
        [](const py::dict& d) { return json_to_py(to_json(lower_shadow(explicit_from_py(d)))); });
  m.def("upper_shadow",
        [](const py::dict& d) { return json_to_py(to_json(upper_shadow(explicit_from_py(d)))); });
  m.def("cube_boundary",
        [](const py::dict& d) { return json_to_py(to_json(cube_boundary(explicit_from_py(d)))); });
  m.def("ball_boundary", [](const py::dict& d, unsigned R) {
    return json_to_py(to_json(ball_boundary(explicit_from_py(d), R)));
  });
  m.def("profile_ball_boundary", [](const py::dict& d, unsigned R) {
    return json_to_py(to_json(profile_ball_boundary(profile_from_py(d), R)));
  });

  // constructions
  m.def("star", [](unsigned n, unsigned r, unsigned e) { return json_to_py(to_json(star(n, r, e))); },
        py::arg("n"), py::arg("r"), py::arg("element") = 1);
  m.def("costar",
        [](unsigned n, unsigned r, unsigned e) { return json_to_py(to_json(costar(n, r, e))); },
        py::arg("n"), py::arg("r"), py::arg("element") = 1);
  m.def("ball_halfspace",
        [](unsigned n, unsigned R, int k) { return json_to_py(to_json(ball_halfspace(n, R, k))); });
  m.def("sized_ball_halfspace", [](unsigned n, unsigned R, const py::handle& target) {
    return json_to_py(to_json(sized_ball_halfspace(n, R, natural_from_py(target))));
  });
  m.def("slice_halfspace",
        [](unsigned n, unsigned r, int k) { return json_to_py(to_json(slice_halfspace(n, r, k))); });
  m.def("cplus", [](unsigned n, unsigned r, int k) { return json_to_py(to_json(cplus(n, r, k))); });

  // bounds
  m.def("nm_bounds", [](unsigned n, unsigned r, const py::handle& size) {
    const auto b = nm_bounds(n, r, natural_from_py(size));
    return py::make_tuple(fraction(b.lower_shadow_bound), fraction(b.upper_shadow_bound));
  });
  m.def("local_expansion_check",
        [](unsigned n, unsigned r, const py::handle& size, const py::handle& boundary) {
          const auto v = local_expansion_check(n, r, natural_from_py(size),
                                               natural_from_py(boundary));
          py::dict out;
          out["holds"] = v.holds;
          out["linear_excess"] = fraction(v.linear_excess);
          out["slack"] = v.slack;
          return out;
        });
  m.def("thm1_bound_check",
        [](unsigned n, unsigned R, const py::handle& rho, const py::handle& size,
           const py::handle& boundary, bool enforce_window, bool assume_n0) {
          Thm1Options opts{enforce_window, assume_n0};
          const auto v = thm1_bound_check(n, R, rational_from_py(rho), natural_from_py(size),
                                          natural_from_py(boundary), opts);
          py::dict out;
          out["holds"] = v.holds;
          out["exploratory"] = v.exploratory;
          out["size_window_ok"] = v.size_window_ok;
          out["min_side"] = big_int(v.min_side);
          return out;
        },
        py::arg("n"), py::arg("R"), py::arg("rho"), py::arg("size"), py::arg("boundary"),
        py::arg("enforce_window") = true, py::arg("assume_n0") = false);
  m.def("lemma7_params", [](unsigned n, unsigned R, const py::handle& size) {
    const auto p = lemma7_params(n, R, natural_from_py(size));
    py::dict out;
    out["epsilon"] = fraction(p.epsilon);
    out["r0"] = p.r0;
    out["c"] = fraction(p.c);
    return out;
  });
  m.def("hypergeometric_pmf", [](unsigned r, unsigned mm, unsigned n, unsigned k) {
    return fraction(hypergeometric_pmf(r, mm, n, k));
  });
  m.def("hypergeometric_max_ratio",
        [](unsigned r, unsigned n) { return fraction(hypergeometric_max_ratio(r, n)); });

  // quadratic machinery and appendix identities
  m.def("claim_roots", [](unsigned r, unsigned s, const py::handle& alpha) {
    const RootsBundle rb = claim_roots(ExpansionParams(r, s, rational_from_py(alpha)));
    py::dict out;
    out["vacuous"] = rb.vacuous;
    out["evaluated"] = rb.evaluated;
    out["all_hold"] = rb.all_hold;
    if (rb.evaluated) {
      out["x1_minus"] = to_double(rb.x1_minus);
      out["x1_plus"] = to_double(rb.x1_plus);
      out["x2_minus"] = to_double(rb.x2_minus);
      out["x2_plus"] = to_double(rb.x2_plus);
      out["criterion_agrees"] = rb.criterion_agrees;
    }
    return out;
  });
  m.def("verify_ineq17", []() {
    const auto chk = verify_ineq17();
    return py::dict(py::arg("match") = chk.match,
                    py::arg("positivity_certified") = chk.positivity_certified);
  });
  m.def("verify_ineq18", []() {
    const auto chk = verify_ineq18();
    return py::dict(py::arg("match") = chk.match,
                    py::arg("positivity_certified") = chk.positivity_certified);
  });

  // searches
  m.def("exhaustive_verify_local_expansion", [](unsigned n, unsigned r, unsigned workers) {
    return json_to_py(to_json(exhaustive_verify_local_expansion(n, r, workers)));
  }, py::arg("n"), py::arg("r"), py::arg("workers") = 1);
  m.def("exhaustive_verify_nm", [](unsigned n, unsigned r, unsigned workers) {
    return json_to_py(to_json(exhaustive_verify_nm(n, r, workers)));
  }, py::arg("n"), py::arg("r"), py::arg("workers") = 1);
  m.def("exhaustive_min_boundary",
        [](unsigned n, std::size_t size, const std::string& ambient, unsigned R,
           const py::handle& budget, unsigned workers) {
          const Ambient amb = ambient == "ball" ? Ambient::Ball : Ambient::Cube;
          return json_to_py(to_json(
              exhaustive_min_boundary(n, size, amb, R, natural_from_py(budget), workers)));
        },
        py::arg("n"), py::arg("size"), py::arg("ambient") = "cube", py::arg("R") = 0,
        py::arg("budget") = py::int_(1000000000), py::arg("workers") = 1);
  m.def("local_search_minimizer",
        [](unsigned n, unsigned R, std::size_t size, std::uint64_t seed, std::uint64_t steps) {
          return json_to_py(to_json(local_search_minimizer(n, R, size, seed, steps)));
        },
        py::arg("n"), py::arg("R"), py::arg("size"), py::arg("seed") = 0,
        py::arg("steps") = 100);
}
