#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotary/algebraic/alg_real.hpp"
#include "rotary/algebraic/expr.hpp"
#include "rotary/error.hpp"
#include "rotary/finite/census.hpp"
#include "rotary/finite/finite_graph.hpp"
#include "rotary/finite/finite_group.hpp"
#include "rotary/finite/permutation.hpp"
#include "rotary/geometry/elliptic.hpp"
#include "rotary/geometry/graph.hpp"
#include "rotary/geometry/isometry.hpp"

namespace py = pybind11;
using namespace rotary;

namespace {

// Accepts an AlgReal, an int, or an expression string.
AlgReal to_alg(const py::handle& h) {
  if (py::isinstance<AlgReal>(h)) return h.cast<AlgReal>();
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a number or expression");
  if (py::isinstance<py::int_>(h)) return parse_expr(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return parse_expr(h.cast<std::string>());
  throw py::type_error("expected AlgReal, int or expression string");
}

ProjPoint to_point(const py::handle& h) {
  if (py::isinstance<ProjPoint>(h)) return h.cast<ProjPoint>();
  const auto seq = h.cast<py::sequence>();
  if (seq.size() != 3) throw py::value_error("a point needs three coordinates");
  return make_point(to_alg(seq[0]), to_alg(seq[1]), to_alg(seq[2]));
}

LinearMap to_map(const py::handle& h) {
  if (py::isinstance<LinearMap>(h)) return h.cast<LinearMap>();
  const auto rows = h.cast<py::sequence>();
  if (rows.size() != 3) throw py::value_error("a matrix needs three rows");
  LinearMap::Rows out;
  for (size_t i = 0; i < 3; ++i) {
    const auto row = rows[i].cast<py::sequence>();
    if (row.size() != 3) throw py::value_error("a matrix row needs three entries");
    for (size_t j = 0; j < 3; ++j) out[i][j] = to_alg(row[j]);
  }
  return LinearMap(out);
}

std::vector<std::string> point_strings(const ProjPoint& p) {
  return {format_expr(p[0]), format_expr(p[1]), format_expr(p[2])};
}

PermGroup to_group(const std::vector<std::string>& gens, unsigned degree) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::parse_cycles(g, degree));
  for (const auto& p : perms) degree = std::max<unsigned>(degree, p.degree());
  for (auto& p : perms) p = p.extended(degree);
  return PermGroup(degree, perms);
}

}  // namespace

PYBIND11_MODULE(_rotary, m) {
  m.doc() = "Exact real-algebraic geometry of the elliptic plane and finite rotary actions";

  static PyObject* error_type = PyErr_NewException("rotary.RotaryError", PyExc_ValueError, nullptr);
  m.attr("RotaryError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
      PyErr_SetString(error_type, msg.c_str());
    }
  });

  py::class_<AlgReal>(m, "AlgReal")
      .def(py::init([](const py::object& v) { return to_alg(v); }))
      .def("__str__", [](const AlgReal& a) { return format_expr(a); })
      .def("__repr__", [](const AlgReal& a) { return "AlgReal('" + format_expr(a) + "')"; })
      .def("__float__", &AlgReal::to_double)
      .def("is_rational", &AlgReal::is_rational)
      .def("sign", &AlgReal::sign)
      .def("min_poly", [](const AlgReal& a) {
        std::vector<std::string> out;
        const IntPoly mp = a.min_poly();
        for (const auto& c : mp.coeffs()) out.push_back(c.get_str());
        return out;
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__hash__", [](const AlgReal& a) { return py::hash(py::str(format_expr(a))); });
  py::implicitly_convertible<py::str, AlgReal>();
  py::implicitly_convertible<py::int_, AlgReal>();

  m.def("sqrt", [](const py::object& a) { return sqrt_nonneg(to_alg(a)); });
  m.def("compare", [](const py::object& a, const py::object& b) { return compare(to_alg(a), to_alg(b)); });
  m.def("real_roots", [](const std::vector<long>& coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return real_roots(IntPoly(c));
  });
  m.def("is_rational_angle", [](const py::object& c) { return is_rational_angle(to_alg(c)); });
  m.def("rational_angle_witness", [](const py::object& c) { return rational_angle_witness(to_alg(c)); });
  m.def("chebyshev_t", [](unsigned n, const py::object& c) { return chebyshev_T(n, to_alg(c)); });

  py::class_<ProjPoint>(m, "Point")
      .def(py::init([](const py::object& a, const py::object& b, const py::object& c) {
        return make_point(to_alg(a), to_alg(b), to_alg(c));
      }))
      .def_static("basis", &ProjPoint::basis)
      .def("coords", [](const ProjPoint& p) { return std::vector<AlgReal>{p[0], p[1], p[2]}; })
      .def("__repr__", [](const ProjPoint& p) {
        const auto s = point_strings(p);
        return "Point(" + s[0] + ", " + s[1] + ", " + s[2] + ")";
      })
      .def(py::self == py::self);

  m.def("dist_cos", [](const py::object& p, const py::object& q) { return dist_cos(to_point(p), to_point(q)); });
  m.def("equidistant_point", [](const py::object& p, const py::object& q, const py::object& c) {
    return equidistant_point(to_point(p), to_point(q), to_alg(c));
  });
  m.def("geodesic_step", [](const py::object& p, const py::object& q, const py::object& c) {
    return geodesic_step(to_point(p), to_point(q), to_alg(c));
  });
  m.def("ell_n_cos", [](const py::object& c, unsigned n) { return ell_n_cos(to_alg(c), n); });
  m.def("ell_n_partner", [](const py::object& p, const py::object& c, unsigned n) {
    return ell_n_partner(to_point(p), to_alg(c), n);
  });
  m.def("ell_n_witness", [](const py::object& p, const py::object& q, const py::object& c, unsigned n) {
    const AlgReal cl = to_alg(c);
    const EllNWitness w = construct_ell_n_witness(to_point(p), to_point(q), cl, n);
    py::dict d;
    d["o"] = w.o;
    d["chain"] = w.chain;
    d["verified"] = verify_ell_n_witness(w.o, w.chain, cl);
    return d;
  });

  py::class_<LinearMap>(m, "LinearMap")
      .def(py::init([](const py::object& rows) { return to_map(rows); }))
      .def("rows", [](const LinearMap& a) {
        std::vector<std::vector<AlgReal>> out;
        for (const auto& r : a.rows()) out.push_back({r[0], r[1], r[2]});
        return out;
      })
      .def("determinant", &LinearMap::determinant)
      .def(py::self * py::self)
      .def(py::self == py::self);
  m.def("random_rational_orthogonal", &random_rational_orthogonal, py::arg("seed"));
  m.def("apply", [](const py::object& a, const py::object& p) { return apply(to_map(a), to_point(p)); });
  m.def("is_orthogonal", [](const py::object& a) { return is_orthogonal(to_map(a)); });
  m.def("fixed_point", [](const py::object& a) { return fixed_point(to_map(a)); });

  m.def("is_edge", [](const py::object& c, const py::object& p, const py::object& q) {
    return is_edge(GraphSpec::make(to_alg(c)), to_point(p), to_point(q));
  });
  m.def("graph_distance", [](const py::object& c, const py::object& p, const py::object& q) {
    return graph_distance(GraphSpec::make(to_alg(c)), to_point(p), to_point(q)).distance;
  });
  m.def("witness_path", [](const py::object& c, const py::object& p, const py::object& q) {
    return witness_path(GraphSpec::make(to_alg(c)), to_point(p), to_point(q)).vertices;
  });
  m.def("diameter", [](const py::object& c) {
    const DiameterResult d = diameter(GraphSpec::make(to_alg(c)));
    py::dict out;
    out["diameter"] = d.diameter;
    out["strict"] = d.strict;
    out["quarter_turn_steps"] = d.quarter_turn_steps;
    out["t_k"] = d.t_k;
    out["t_k_minus_1"] = d.t_k_minus_1;
    return out;
  });
  m.def("choose_ell_for_diameter", [](unsigned k) { return choose_ell_for_diameter(k); });

  m.def(
      "orbit_count", [](const std::vector<std::string>& gens, unsigned degree) { return orbit_count(to_group(gens, degree)); },
      py::arg("generators"), py::arg("degree") = 0);
  m.def(
      "cauchy_frobenius",
      [](const std::vector<std::string>& gens, unsigned degree) {
        return cauchy_frobenius(to_group(gens, degree)).get_str();
      },
      py::arg("generators"), py::arg("degree") = 0);
  m.def(
      "jordan_witness",
      [](const std::vector<std::string>& gens, unsigned degree) {
        return jordan_witness(to_group(gens, degree)).to_cycles();
      },
      py::arg("generators"), py::arg("degree") = 0);
  m.def(
      "rotary_verdict",
      [](size_t n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
        const RotaryVerdict v = rotary_verdict(FiniteGraph(n, edges));
        py::dict out;
        out["rotarily_transitive"] = v.rotarily_transitive;
        out["verified"] = v.verified;
        out["method"] = v.method;
        out["aut_order"] = v.aut_order;
        out["vertex_transitive"] = v.vertex_transitive;
        return out;
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "census_counts",
      [](unsigned n_max) {
        const CensusReport r = census(n_max);
        py::list out;
        for (const auto& c : r.counts) {
          py::dict d;
          d["n"] = c.n;
          d["graphs"] = c.graphs;
          d["transitive"] = c.transitive;
          d["rotarily_transitive"] = c.rotarily_transitive;
          d["unverified"] = c.unverified;
          out.append(d);
        }
        return out;
      },
      py::arg("n_max"));
}
