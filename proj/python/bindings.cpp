#include "zipchow/chow.hpp"
#include "zipchow/report_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zipchow;

namespace {

py::object to_py(const Integer &v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle &v) {
  if (!py::isinstance<py::int_>(v))
    throw py::type_error("expected an int");
  return Integer(py::str(v).cast<std::string>());
}

py::object to_py(const io::Json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object to_py(const AbelianGroup &g) { return to_py(io::to_json(g)); }

ZipDatum make_datum(const std::string &group, std::optional<int> h,
                    std::optional<int> d, std::optional<std::vector<int>> composition,
                    std::optional<int> n, std::optional<std::string> parabolic,
                    std::optional<std::int64_t> q, std::optional<std::int64_t> p) {
  ZipDatum z;
  if (group == "gl") {
    if (!h)
      throw std::invalid_argument("h is required for gl");
    z.group = GroupSpec::gl(*h);
    if (composition)
      z.levi = weyl::Composition{*composition};
    else if (d)
      z.levi = weyl::display_composition(*h, *d);
    else
      throw std::invalid_argument("d or composition is required for gl");
  } else if (group == "sp") {
    if (!n)
      throw std::invalid_argument("n is required for sp");
    z.group = GroupSpec::sp(*n);
    if (!parabolic)
      throw std::invalid_argument("parabolic is required for sp");
    if (*parabolic == "borel")
      z.levi = weyl::SpParabolic::Borel;
    else if (*parabolic == "siegel")
      z.levi = weyl::SpParabolic::Siegel;
    else
      throw std::invalid_argument("parabolic must be borel or siegel");
  } else {
    throw std::invalid_argument("group must be gl or sp");
  }
  z.p = p;
  if (q)
    z.q = *q;
  else if (p)
    z.q = *p;
  weyl::validate(z);
  return z;
}

// Keyword signature shared by every datum-taking function.
#define DATUM_ARGS                                                             \
  py::kw_only(), py::arg("group"), py::arg("h") = py::none(),                  \
      py::arg("d") = py::none(), py::arg("composition") = py::none(),          \
      py::arg("n") = py::none(), py::arg("parabolic") = py::none(),            \
      py::arg("q") = py::none(), py::arg("p") = py::none()

using DatumFn = std::function<py::object(const ZipDatum &)>;

auto with_datum(DatumFn f) {
  return [f](const std::string &group, std::optional<int> h, std::optional<int> d,
             std::optional<std::vector<int>> composition, std::optional<int> n,
             std::optional<std::string> parabolic, std::optional<std::int64_t> q,
             std::optional<std::int64_t> p) {
    return f(make_datum(group, h, d, composition, n, parabolic, q, p));
  };
}

zlinalg::IntMatrix matrix_from_py(const py::sequence &rows) {
  zlinalg::IntMatrix m;
  for (const auto &row : rows) {
    std::vector<Integer> line;
    for (const auto &v : row)
      line.push_back(from_py(v));
    if (m.rows() > 0 && line.size() != m.cols())
      throw std::invalid_argument("rows must all have the same length");
    m.append_row(line);
  }
  return m;
}

py::list matrix_to_py(const zlinalg::IntMatrix &m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integral Chow rings of G-zip stacks";

  py::register_exception<zlinalg::MatrixCapExceeded>(m, "MatrixCapExceeded",
                                                      PyExc_RuntimeError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string &text, std::size_t nvars) {
             return intpoly::parse_poly(text, nvars);
           }),
           py::arg("text"), py::arg("nvars"))
      .def_property_readonly("nvars", &Poly::nvars)
      .def("degree", &Poly::degree)
      .def("is_homogeneous", &Poly::is_homogeneous)
      .def("twist", [](const Poly &p, py::int_ q) {
        return intpoly::frobenius_twist(p, from_py(q));
      })
      .def("terms", [](const Poly &p) {
        py::list out;
        for (const auto &[mono, c] : p.terms())
          out.append(py::make_tuple(py::tuple(py::cast(std::vector<std::uint32_t>(
                                           mono.exponents().begin(), mono.exponents().end()))), to_py(c)));
        return out;
      })
      .def("__add__", [](const Poly &a, const Poly &b) { return a + b; })
      .def("__sub__", [](const Poly &a, const Poly &b) { return a - b; })
      .def("__mul__", [](const Poly &a, const Poly &b) { return a * b; })
      .def("__mul__", [](const Poly &a, py::int_ c) { return intpoly::scale(a, from_py(c)); })
      .def("__rmul__", [](const Poly &a, py::int_ c) { return intpoly::scale(a, from_py(c)); })
      .def("__neg__", [](const Poly &a) { return -a; })
      .def("__eq__", [](const Poly &a, const Poly &b) { return a == b; })
      .def("__str__", [](const Poly &p) { return p.to_string(); })
      .def("__repr__", [](const Poly &p) { return "Poly('" + p.to_string() + "')"; });

  m.def("elementary_symmetric", &intpoly::elementary_symmetric, py::arg("k"),
        py::arg("n"));
  m.def("elementary_symmetric_squares", &intpoly::elementary_symmetric_squares,
        py::arg("k"), py::arg("n"));

  m.def("smith_normal_form",
        [](const py::sequence &rows, bool certificate, std::size_t cap) {
          auto snf = zlinalg::smith_normal_form(matrix_from_py(rows), certificate, cap);
          py::dict out;
          py::list inv;
          for (const auto &d : snf.invariants)
            inv.append(to_py(d));
          out["invariants"] = inv;
          if (snf.certificate) {
            out["left"] = matrix_to_py(snf.certificate->left);
            out["right"] = matrix_to_py(snf.certificate->right);
          }
          return out;
        },
        py::arg("rows"), py::arg("certificate") = false,
        py::arg("cap") = zlinalg::kDefaultMatrixCap);
  m.def("cokernel",
        [](const py::sequence &rows, std::size_t ambient) {
          return to_py(zlinalg::cokernel(matrix_from_py(rows), ambient));
        },
        py::arg("rows"), py::arg("ambient"));

  m.def("coset_count", with_datum([](const ZipDatum &z) {
          return to_py(weyl::coset_count(z.group, z.levi));
        }),
        DATUM_ARGS);
  m.def("rational_rank_series", with_datum([](const ZipDatum &z) {
          return py::cast(weyl::rational_rank_series(z.group, z.levi));
        }),
        DATUM_ARGS);
  m.def("top_degree_bound", with_datum([](const ZipDatum &z) {
          return py::cast(weyl::top_degree_bound(z.group, z.levi));
        }),
        DATUM_ARGS);
  m.def("relations", with_datum([](const ZipDatum &z) {
          py::list out;
          for (const auto &r : relations(z))
            out.append(py::cast(r.poly));
          return py::object(out);
        }),
        DATUM_ARGS);
  m.def("presentation", with_datum([](const ZipDatum &z) {
          return to_py(io::to_json(present(z)));
        }),
        DATUM_ARGS);
  m.def("picard", with_datum([](const ZipDatum &z) { return to_py(picard(z)); }),
        DATUM_ARGS);
  m.def("q_dimension",
        with_datum([](const ZipDatum &z) { return to_py(q_dimension(z)); }),
        DATUM_ARGS);

  m.def("graded_chow",
        [](int max_degree, const std::string &group, std::optional<int> h,
           std::optional<int> d, std::optional<std::vector<int>> composition,
           std::optional<int> n, std::optional<std::string> parabolic,
           std::optional<std::int64_t> q, std::optional<std::int64_t> p) {
          auto z = make_datum(group, h, d, composition, n, parabolic, q, p);
          return to_py(io::to_json(graded_chow(z, max_degree)));
        },
        py::arg("max_degree"), DATUM_ARGS);
  m.def("chow_report",
        [](int max_degree, const std::string &group, std::optional<int> h,
           std::optional<int> d, std::optional<std::vector<int>> composition,
           std::optional<int> n, std::optional<std::string> parabolic,
           std::optional<std::int64_t> q, std::optional<std::int64_t> p) {
          auto z = make_datum(group, h, d, composition, n, parabolic, q, p);
          return to_py(io::to_json(chow_report(z, max_degree)));
        },
        py::arg("max_degree") = -1, DATUM_ARGS);

  m.def("fzip_report",
        [](const std::map<int, int> &tau, std::int64_t p, int max_degree) {
          return to_py(io::to_json(fzip_report(tau, p, max_degree)));
        },
        py::arg("tau"), py::arg("p"), py::arg("max_degree") = -1);
  m.def("bt_report",
        [](int h, int d, int level, std::int64_t p, int max_degree) {
          return to_py(io::to_json(bt_report(h, d, level, p, max_degree)));
        },
        py::arg("h"), py::arg("d"), py::arg("level"), py::arg("p"),
        py::arg("max_degree") = -1);
  m.def("m11_compatibility",
        [](std::int64_t p) { return to_py(io::to_json(m11_compatibility(p))); },
        py::arg("p"));
}
