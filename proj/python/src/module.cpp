#include "tiltwall/cli.hpp"
#include "tiltwall/euler.hpp"
#include "tiltwall/heartgate.hpp"
#include "tiltwall/scene.hpp"
#include "tiltwall/walls.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace tiltwall;

namespace {

// Numbers cross the boundary as int, str or fractions.Fraction on the way in
// and as Fraction on the way out.
Rational to_q(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw InputError("floats are not accepted; use str or Fraction");
  return parse_rational(std::string(py::str(h)));
}

py::object from_q(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

// A class is a literal or name string, or a sequence of four numbers.
NumClass to_class(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_class(std::string(py::str(h)));
  const auto seq = py::reinterpret_borrow<py::sequence>(h);
  if (seq.size() != 4) throw InputError("a class needs four components");
  return {to_q(seq[0]), to_q(seq[1]), to_q(seq[2]), to_q(seq[3])};
}

py::tuple from_class(const NumClass& v) {
  return py::make_tuple(from_q(v.v0), from_q(v.v1), from_q(v.v2), from_q(v.v3));
}

py::tuple from_charge(const ChargeValue& z) { return py::make_tuple(from_q(z.re), from_q(z.im)); }

CollectionSpec to_collection(const std::string& name_or_json) {
  const auto first = name_or_json.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && name_or_json[first] == '{') {
    return CollectionSpec::from_json(name_or_json);
  }
  return CollectionSpec::named(name_or_json);
}

Region to_region(const py::handle& bmin, const py::handle& bmax, const py::handle& amin,
                 const py::handle& amax) {
  Region r{to_q(bmin), to_q(bmax), to_q(amin), to_q(amax)};
  r.validate();
  return r;
}

py::object interval_obj(const std::optional<AInterval>& iv) {
  if (!iv) return py::none();
  py::dict d;
  d["lower"] = iv->lower ? from_q(*iv->lower) : py::none();
  d["lower_attained"] = iv->lower_attained;
  d["upper"] = from_q(iv->upper);
  return d;
}

}  // namespace

PYBIND11_MODULE(_tiltwall, m) {
  m.doc() = "Exact tilt-stability computations on P^3 and its canonical bundle";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("parse_class", [](const std::string& s) { return from_class(parse_class(s)); }, py::arg("text"));
  m.def("to_literal", [](const py::object& v) { return to_literal(to_class(v)); }, py::arg("v"));
  m.def("is_integral", [](const py::object& v) { return is_integral_class(to_class(v)); }, py::arg("v"));
  m.def("chi", [](const py::object& v) { return from_q(chi_p3(to_class(v))); }, py::arg("v"));
  m.def("chi_local",
        [](const py::object& v, const py::object& w) { return from_q(chi_local(to_class(v), to_class(w))); },
        py::arg("v"), py::arg("w"));
  m.def("spherical_twist",
        [](const py::object& s, const py::object& v) {
          return from_class(spherical_twist_class(to_class(s), to_class(v)));
        },
        py::arg("s"), py::arg("v"));

  m.def("twisted_v",
        [](const py::object& v, const py::object& beta) {
          const auto t = twisted_v(to_class(v), to_q(beta));
          return py::make_tuple(from_q(t[0]), from_q(t[1]), from_q(t[2]), from_q(t[3]));
        },
        py::arg("v"), py::arg("beta"));
  m.def("discriminant", [](const py::object& v) { return from_q(discriminant(to_class(v))); }, py::arg("v"));
  m.def("bg_margin",
        [](const py::object& v, const py::object& beta, const py::object& alpha) {
          return from_q(bg_margin(to_class(v), ParamPoint::in_u(to_q(beta), to_q(alpha))));
        },
        py::arg("v"), py::arg("beta"), py::arg("alpha"));
  m.def("central_charge",
        [](const py::object& v, const py::object& beta, const py::object& alpha, const py::object& a) {
          const ParamPoint p = ParamPoint::in_u(to_q(beta), to_q(alpha));
          if (a.is_none()) return from_charge(central_charge_2(to_class(v), p));
          return from_charge(central_charge_3(to_class(v), p, to_q(a)));
        },
        py::arg("v"), py::arg("beta"), py::arg("alpha"), py::arg("a") = py::none(),
        "Z^{beta,alpha} as (re, im); with a, the degree-three charge.");
  m.def("reduce",
        [](const py::object& beta, const py::object& alpha) {
          const Reduction r = reduce_to_fundamental(ParamPoint::in_u(to_q(beta), to_q(alpha)));
          py::list log;
          for (const auto& s : r.log) log.append(s.str());
          py::dict d;
          d["beta"] = from_q(r.point.beta());
          d["alpha"] = from_q(r.point.alpha());
          d["log"] = log;
          d["small_omega"] = r.small_omega;
          return d;
        },
        py::arg("beta"), py::arg("alpha"));

  m.def("walls",
        [](const py::object& v, const py::object& beta_min, const py::object& beta_max,
           const py::object& alpha_min, const py::object& alpha_max, const py::object& disc_bound,
           const py::object& omega2_min, unsigned threads) {
          WallSearchOptions opt;
          opt.disc_bound = to_q(disc_bound);
          opt.omega2_min = to_q(omega2_min);
          opt.threads = threads;
          const NumClass c = to_class(v);
          const Region r = to_region(beta_min, beta_max, alpha_min, alpha_max);
          WallSearchResult res;
          {
            py::gil_scoped_release release;
            res = enumerate_candidate_walls(c, r, opt);
          }
          py::list out;
          for (const auto& w : res.walls) {
            py::dict d;
            d["A"] = from_q(w.wall.A);
            d["B"] = from_q(w.wall.B);
            d["C"] = from_q(w.wall.C);
            d["equation"] = w.wall.str();
            d["witness"] = from_class(w.witness);
            out.append(d);
          }
          return out;
        },
        py::arg("v"), py::arg("beta_min"), py::arg("beta_max"), py::arg("alpha_min") = 0,
        py::arg("alpha_max"), py::arg("disc_bound") = 0, py::arg("omega2_min") = "1/100",
        py::arg("threads") = 1);

  m.def("plot_svg",
        [](const py::object& v, const py::object& beta_min, const py::object& beta_max,
           const py::object& alpha_min, const py::object& alpha_max, bool with_walls,
           const py::object& disc_bound, const py::object& omega2_min, int precision) {
          const NumClass c = to_class(v);
          const Region r = to_region(beta_min, beta_max, alpha_min, alpha_max);
          std::vector<Wall> walls;
          if (with_walls) {
            WallSearchOptions opt;
            opt.disc_bound = to_q(disc_bound);
            opt.omega2_min = to_q(omega2_min);
            for (const auto& w : enumerate_candidate_walls(c, r, opt).walls) walls.push_back(w.wall);
          }
          return scene_to_svg(plot_scene(c, r, walls), precision);
        },
        py::arg("v"), py::arg("beta_min"), py::arg("beta_max"), py::arg("alpha_min") = 0,
        py::arg("alpha_max"), py::arg("walls") = false, py::arg("disc_bound") = 0,
        py::arg("omega2_min") = "1/100", py::arg("precision") = 3);

  m.def("admissible_interval",
        [](const std::string& collection, const py::object& beta) {
          return interval_obj(admissible_a_interval(to_collection(collection), to_q(beta)));
        },
        py::arg("collection"), py::arg("beta"),
        "collection is a builtin name or a CollectionSpec JSON document.");
  m.def("collection_check",
        [](const std::string& collection, const py::object& beta, const py::object& a0) {
          const CheckReport rep = general_condition_check(to_collection(collection), to_q(beta), to_q(a0));
          py::list conds;
          for (const auto& c : rep.conditions) {
            py::dict d;
            d["id"] = c.id;
            d["statement"] = c.statement;
            d["strict"] = c.strict;
            d["pass"] = c.pass;
            d["residual"] = c.residual ? py::object(py::str(c.residual->str())) : py::none();
            conds.append(d);
          }
          py::dict d;
          d["conditions"] = conds;
          d["overall"] = rep.overall;
          d["interval"] = interval_obj(rep.interval);
          d["notes"] = rep.notes;
          return d;
        },
        py::arg("collection"), py::arg("beta"), py::arg("a0"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<const char*> argv{"tiltwall"};
          for (const auto& a : args) argv.push_back(a.c_str());
          std::ostringstream out, err;
          const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in-process; returns (exit code, stdout, stderr).");
}
