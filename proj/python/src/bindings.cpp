#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charvar/cvpoints.hpp"
#include "charvar/dynamics.hpp"
#include "charvar/ffield.hpp"
#include "charvar/oracle.hpp"
#include "charvar/polycount.hpp"

namespace py = pybind11;
using namespace charvar;
using u64 = std::uint64_t;

namespace {

py::int_ to_py(const qpoly::Int& v) {
  // arbitrary precision round trip through the decimal string
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

ffield::FieldCtx field_of(u64 q) {
  auto pk = num::prime_power(q);
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return ffield::make_field(pk->first, pk->second);
}

py::dict census_dict(const polycount::CubicCensus& c) {
  py::dict d;
  d["q"] = c.q;
  d["triple_root"] = c.triple_root;
  d["double_root"] = c.double_root;
  d["three_distinct"] = c.three_distinct;
  d["one_root_quadratic"] = c.one_root_quadratic;
  d["irreducible"] = c.irreducible;
  return d;
}

py::dict point_dict(const cvpoints::CVPoint& p, u64 q) {
  py::dict d;
  d["tag"] = cvpoints::tag_name(p.tag);
  d["modulus"] = cvpoints::torus_modulus(p.tag, q);
  d["u"] = p.u;
  if (p.tag == cvpoints::Tag::Split3) d["v"] = p.v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_charvar, m) {
  m.doc() = "exact censuses and orbit dynamics for SL_2/SL_3 character varieties of Z^r over F_q";

  m.def("cubic_census", [](u64 q) { return census_dict(polycount::count_cubics_formula(q)); },
        py::arg("q"), "closed-form census of monic cubics with constant term -1");
  m.def("cubic_census_enumerated",
        [](u64 q) {
          auto F = field_of(q);
          return census_dict(polycount::count_cubics_enumerated(F));
        },
        py::arg("q"), "brute-force census over all (s, t)");
  m.def("irreducible_quadratic_count", &polycount::count_irred_quadratics, py::arg("q"));
  m.def("roots_of_unity_count", &polycount::roots_of_unity_count, py::arg("q"), py::arg("n"));

  m.def("stratum_counts",
        [](int n, int r, u64 q) {
          py::dict d;
          for (auto s : cvpoints::strata_for(n))
            d[cvpoints::stratum_name(s)] = to_py(cvpoints::stratum_count_formula(n, r, q, s));
          return d;
        },
        py::arg("n"), py::arg("r"), py::arg("q"));
  m.def("stratum_counts_enumerated",
        [](int n, int r, u64 q) {
          py::dict d;
          for (auto& [s, c] : cvpoints::strata_counts_enumerated(n, r, q))
            d[cvpoints::stratum_name(s)] = c;
          return d;
        },
        py::arg("n"), py::arg("r"), py::arg("q"));
  m.def("epoly_eval", [](int n, int r, u64 q) { return to_py(cvpoints::epoly_eval(n, r, q)); },
        py::arg("n"), py::arg("r"), py::arg("q"));
  m.def("epoly_str", [](int n, int r) { return cvpoints::epoly(n, r).str(); }, py::arg("n"),
        py::arg("r"));
  m.def("euler_char", [](int n, int r) { return to_py(cvpoints::euler_char(n, r)); }, py::arg("n"),
        py::arg("r"));

  m.def("points",
        [](int n, int r, u64 q) {
          py::list out;
          cvpoints::enumerate_points(n, r, q, [&](const cvpoints::CVPoint& p) {
            py::dict d = point_dict(p, q);
            d["stratum"] = cvpoints::stratum_name(cvpoints::classify_stratum(p, q));
            out.append(d);
          });
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("q"), "all canonical exponent-model points");

  m.def("git_census",
        [](int n, int r, u64 q) {
          auto F = field_of(q);
          auto census = oracle::git_census(F, n, r);
          py::dict d;
          d["n"] = n;
          d["r"] = r;
          d["q"] = q;
          d["tuple_total"] = census.tuple_total;
          py::dict counts;
          for (auto& [s, c] : census.class_counts) counts[cvpoints::stratum_name(s)] = c;
          d["class_counts"] = counts;
          py::list classes;
          for (auto& cls : census.classes) {
            py::dict e;
            e["orbit_size"] = cls.orbit_size;
            e["sl_centralizer_order"] = cls.sl_centralizer_order;
            e["gl_centralizer_order"] = cls.gl_centralizer_order;
            e["stratum"] = cvpoints::stratum_name(cls.stratum);
            e["point"] = point_dict(cls.point, q);
            classes.append(e);
          }
          d["classes"] = classes;
          return d;
        },
        py::arg("n"), py::arg("r"), py::arg("q"),
        "brute-force census of commuting semisimple tuples up to conjugation");

  m.def("orbit_census",
        [](int n, int r, u64 q) {
          auto rep = dynamics::orbit_census(n, r, q);
          py::dict d;
          d["n"] = n;
          d["r"] = r;
          d["q"] = q;
          d["total"] = to_py(rep.total);
          d["orbit_count"] = rep.orbits.size();
          d["max_orbit"] = rep.max_orbit;
          d["max_ratio"] = py::make_tuple(rep.max_ratio.get_num().get_ui(),
                                          rep.max_ratio.get_den().get_ui());
          py::dict strata;
          for (auto& [s, sizes] : rep.sizes_by_stratum) {
            py::list lst;
            for (auto& [size, count] : sizes) lst.append(py::make_tuple(size, count));
            strata[cvpoints::stratum_name(s)] = lst;
          }
          d["per_stratum"] = strata;
          return d;
        },
        py::arg("n"), py::arg("r"), py::arg("q"),
        "orbit structure of the GL_r(Z) action on exponent points");

  m.def("ratio_table",
        [](int n, int r, const std::vector<u64>& qs) {
          py::list rows;
          for (auto& row : dynamics::ratio_table(n, r, qs)) {
            py::dict d;
            d["q"] = row.q;
            d["total"] = to_py(row.total);
            d["max_orbit"] = row.max_orbit;
            d["ratio"] = py::make_tuple(row.ratio.get_num().get_ui(), row.ratio.get_den().get_ui());
            rows.append(d);
          }
          return rows;
        },
        py::arg("n"), py::arg("r"), py::arg("qs"));

  m.def("realize_roundtrip_ok",
        [](int n, int r, u64 q) {
          auto F = field_of(q);
          bool ok = true;
          cvpoints::enumerate_points(n, r, q, [&](const cvpoints::CVPoint& p) {
            if (!(oracle::point_of_tuple(F, oracle::realize(F, p)) == p)) ok = false;
          });
          return ok;
        },
        py::arg("n"), py::arg("r"), py::arg("q"),
        "check point_of_tuple(realize(x)) == x over all points");

  m.attr("__version__") = "1.0.0";
}
