#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linfiso/linfiso.hpp"

namespace py = pybind11;
using namespace linfiso;

namespace {

py::tuple to_tuple(const LatticePoint& p) {
  py::tuple t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) t[i] = p[i];
  return t;
}

LatticePoint to_point(const std::vector<Coord>& coords) { return LatticePoint(coords); }

std::vector<LatticePoint> to_points(const std::vector<std::vector<Coord>>& raw) {
  std::vector<LatticePoint> out;
  out.reserve(raw.size());
  for (const auto& c : raw) out.emplace_back(c);
  return out;
}

py::list points_of(const PointSet& s) {
  py::list out;
  for (const auto& p : s) out.append(to_tuple(p));
  return out;
}

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vertex isoperimetry on Z^k x N^d with l-infinity adjacency";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NotCompressed>(m, "NotCompressed", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<DomainSignature>(m, "DomainSignature")
      .def(py::init<std::size_t, std::size_t>(), py::arg("k"), py::arg("d") = 0)
      .def_property_readonly("k", &DomainSignature::integer_dims)
      .def_property_readonly("d", &DomainSignature::natural_dims)
      .def_property_readonly("dim", &DomainSignature::dim)
      .def("__eq__", [](const DomainSignature& a, const DomainSignature& b) { return a == b; })
      .def("__repr__", [](const DomainSignature& s) { return "DomainSignature(" + s.to_string() + ")"; });

  py::class_<PointSet>(m, "PointSet")
      .def(py::init([](const DomainSignature& sig, const std::vector<std::vector<Coord>>& pts) {
             return PointSet(sig, to_points(pts));
           }),
           py::arg("sig"), py::arg("points") = std::vector<std::vector<Coord>>{})
      .def_property_readonly("signature", &PointSet::signature)
      .def("points", &points_of, "points in canonical order, as tuples")
      .def("__len__", &PointSet::size)
      .def("__contains__",
           [](const PointSet& s, const std::vector<Coord>& p) { return s.contains(to_point(p)); })
      .def("__eq__", [](const PointSet& a, const PointSet& b) { return a == b; })
      .def("to_text", &format_point_set)
      .def_static("from_text", [](const std::string& text) { return parse_point_set(text); })
      .def("__repr__", [](const PointSet& s) {
        return "PointSet(" + s.signature().to_string() + ", " + std::to_string(s.size()) + " points)";
      });

  // ordering
  m.def("compare_z", [](Coord a, Coord b) { return sign_of(compare_z(a, b)); });
  m.def("succ_z", &succ_z);
  m.def("plus_minus", [](Coord a) {
    auto pm = plus_minus(a);
    return py::make_tuple(pm.plus, pm.minus);
  });
  m.def("compare_points", [](const std::vector<Coord>& u, const std::vector<Coord>& v,
                             const DomainSignature& sig) {
    return sign_of(compare_points(to_point(u), to_point(v), sig));
  });
  m.def("successor_point", [](const std::vector<Coord>& x, const DomainSignature& sig) {
    return to_tuple(successor_point(to_point(x), sig));
  });
  m.def("initial_segment", &initial_segment, py::arg("sig"), py::arg("n"));

  // lattice sets
  m.def("neighbors", [](const std::vector<Coord>& x, const DomainSignature& sig) {
    return neighbors(to_point(x), sig);
  });
  m.def("vertex_boundary", &vertex_boundary);
  m.def("vertex_boundary_size", &vertex_boundary_size);
  m.def("project", [](const PointSet& s, const std::vector<std::size_t>& deleted) {
    return project(s, deleted);
  }, "delete the given 0-based coordinates");
  m.def("section", [](const PointSet& s, std::size_t i, const std::vector<Coord>& p) {
    return section(s, i, to_point(p));
  });

  // compression
  m.def("i_compress", &i_compress);
  m.def("central_compress", &central_compress);
  m.def("downward_compress", &downward_compress);
  m.def("centralize", &centralize);
  m.def("is_compressed", &is_compressed);

  // boundary formula
  m.def("projection_functional", &projection_functional);
  m.def("boundary_via_projections", &boundary_via_projections);
  m.def("segment_boundary_increment", [](const std::vector<Coord>& v, const DomainSignature& sig) {
    return segment_boundary_increment(to_point(v), sig);
  });
  m.def("initial_segment_boundary_size", &initial_segment_boundary_size);
  m.def("find_corner_point", [](const PointSet& s) { return to_tuple(find_corner_point(s)); });

  // oracle
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("sig", &VerificationReport::sig)
      .def_readonly("n", &VerificationReport::n)
      .def_readonly("min_boundary_found", &VerificationReport::min_boundary_found)
      .def_readonly("initial_segment_boundary", &VerificationReport::initial_segment_boundary)
      .def_readonly("witness_count", &VerificationReport::witness_count)
      .def_readonly("witnesses", &VerificationReport::witnesses)
      .def_readonly("search_space_size", &VerificationReport::search_space_size)
      .def_property_readonly("elapsed_seconds",
                             [](const VerificationReport& r) { return r.elapsed.count(); })
      .def_property_readonly("status",
                             [](const VerificationReport& r) { return std::string(to_string(r.status)); })
      .def_property_readonly("mode",
                             [](const VerificationReport& r) { return std::string(to_string(r.mode)); })
      .def("to_json", [](const VerificationReport& r) { return report_to_json(r); });

  auto options = [](std::uint64_t budget, std::size_t witness_cap, unsigned threads) {
    OracleOptions o;
    o.budget = budget;
    o.witness_cap = witness_cap;
    o.threads = threads;
    return o;
  };

  m.def("brute_force_min_boundary",
        [options](const DomainSignature& sig, std::size_t n,
                  const std::vector<std::pair<Coord, Coord>>& box, std::uint64_t budget,
                  std::size_t witness_cap, unsigned threads) {
          Box b;
          for (auto [lo, hi] : box) b.push_back({lo, hi});
          py::gil_scoped_release release;
          return brute_force_min_boundary(sig, n, b, options(budget, witness_cap, threads));
        },
        py::arg("sig"), py::arg("n"), py::arg("box"), py::arg("budget") = 50'000'000,
        py::arg("witness_cap") = 64, py::arg("threads") = 0);
  m.def("enumerate_compressed_candidates", &enumerate_compressed_candidates, py::arg("sig"),
        py::arg("n"), py::arg("budget") = 50'000'000);
  m.def("verify_segment_minimality",
        [options](const DomainSignature& sig, std::size_t n_max, const std::string& mode,
                  std::uint64_t budget, std::size_t witness_cap, unsigned threads) {
          auto parsed = parse_search_mode(mode);
          py::gil_scoped_release release;
          return verify_segment_minimality(sig, n_max, parsed, options(budget, witness_cap, threads));
        },
        py::arg("sig"), py::arg("n_max"), py::arg("mode") = "full",
        py::arg("budget") = 50'000'000, py::arg("witness_cap") = 64, py::arg("threads") = 0);
  m.def("canonicalize_witness", &canonicalize_witness);

  m.def("render_svg", [](const PointSet& s, int cell_size, const std::string& set_color,
                         const std::string& boundary_color) {
    SvgStyle style;
    style.cell_size = cell_size;
    style.set_color = set_color;
    style.boundary_color = boundary_color;
    return render_svg(s, style);
  }, py::arg("s"), py::arg("cell_size") = 24, py::arg("set_color") = SvgStyle{}.set_color,
     py::arg("boundary_color") = SvgStyle{}.boundary_color);
}
