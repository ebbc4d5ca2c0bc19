#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pfrigid/cli.hpp"
#include "pfrigid/errors.hpp"
#include "pfrigid/finite_group.hpp"
#include "pfrigid/gl2z.hpp"
#include "pfrigid/mapping_torus.hpp"
#include "pfrigid/presentation.hpp"
#include "pfrigid/quotients.hpp"

namespace py = pybind11;
using namespace pfrigid;

namespace {

py::int_ to_py(const Int& x) { return py::int_(py::str(x.get_str())); }

gl2z::Mat2Z mat(const std::string& s) { return gl2z::parse_matrix(s); }

py::dict homology(const zlinalg::HomologySummary& h) {
  py::list torsion;
  for (const auto& t : h.torsion) torsion.append(to_py(t));
  py::dict d;
  d["b1"] = h.b1;
  d["torsion"] = torsion;
  d["group"] = h.to_string();
  return d;
}

py::dict matrix_class(const gl2z::MatClass& c) {
  py::dict d;
  d["kind"] = gl2z::kind_name(c.kind);
  d["order"] = c.kind == gl2z::Kind::Elliptic ? py::object(py::int_(c.order)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_pfrigid, m) {
  m.doc() = "GL(2,Z) monodromies, mapping tori and finite quotients";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def("classify", [](const std::string& s) { return matrix_class(gl2z::classify(mat(s))); });
  m.def("h1", [](const std::string& s) { return homology(torus::h1(mat(s))); });
  m.def("b1_profile", [](const std::string& s, long depth) { return torus::b1_profile(mat(s), depth); },
        py::arg("matrix"), py::arg("depth") = torus::kDefaultProfileDepth);
  m.def(
      "fingerprint",
      [](const std::string& s, long depth) {
        const auto f = torus::fingerprint(mat(s), depth);
        py::dict d;
        d["det"] = f.det;
        d["trace"] = to_py(f.trace);
        d["h1"] = homology(f.h1);
        d["class"] = matrix_class(f.matrix_class);
        d["b1_profile"] = f.b1_profile;
        return d;
      },
      py::arg("matrix"), py::arg("depth") = torus::kDefaultProfileDepth);
  m.def("identify", [](const std::string& s) { return torus::identity_name(torus::identify_b1_one(mat(s))); });
  m.def("is_conjugate", [](const std::string& a, const std::string& b) {
    const auto v = gl2z::is_conjugate_z(mat(a), mat(b));
    return py::make_tuple(v.conjugate, v.witness ? py::object(py::str(gl2z::format_matrix(*v.witness))) : py::none());
  });
  m.def("local_conjugacy", [](const std::string& a, const std::string& b, long bound) {
    return gl2z::local_conjugacy(mat(a), mat(b), bound).failures;
  });
  m.def("census", [](long trace, int det) {
    std::vector<std::string> out;
    for (const auto& c : gl2z::enumerate_classes(Int(trace), det)) out.push_back(gl2z::format_matrix(c));
    return out;
  });
  m.def("nielsen", [](const std::string& s) { return gl2z::format_word(gl2z::nielsen_decompose(mat(s))); });
  m.def("presentation_of", [](const std::string& s) { return torus::presentation_of(mat(s)).to_string(); });
  m.def("abelianization", [](const std::string& p) { return homology(fp::abelianization(fp::parse_presentation(p))); });
  m.def("epimorphism_count", [](const std::string& p, const std::string& target) {
    const auto g = fp::build_catalog_group(fp::GroupSpec::parse(target));
    return fp::epimorphism_count(fp::parse_presentation(p), g).count;
  });
  m.def(
      "quotients",
      [](const std::string& p, unsigned max_order) {
        return fp::quotient_fingerprint(fp::parse_presentation(p), fp::default_catalog(max_order)).ids();
      },
      py::arg("presentation"), py::arg("max_order") = fp::kDefaultCatalogMax);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
