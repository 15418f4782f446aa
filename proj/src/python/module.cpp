#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "z2tri/certify.hpp"
#include "z2tri/flips.hpp"
#include "z2tri/generators.hpp"

namespace py = pybind11;
using namespace z2tri;

namespace {

py::dict skeleton_summary(const std::string& text) {
  const Skeleton s(parse_triangulation(text));
  py::dict d;
  d["T"] = s.num_tets();
  d["V"] = s.num_vertices();
  d["E"] = s.num_edges();
  d["F"] = s.num_faces();
  d["degrees"] = s.degree_histogram();
  return d;
}

py::tuple promote(const std::string& text, std::optional<int> max_steps, int subgroup) {
  const auto t = parse_triangulation(text);
  check_closed_orientable(t);
  const auto subgroups = enumerate_rank2_subgroups(h1_z2(Skeleton(t)));
  if (subgroup < 0 || subgroup >= static_cast<int>(subgroups.size()))
    throw Error(ErrorKind::BadParameter, "subgroup index out of range");
  const auto r = promote_to_ii4_free(t, subgroups[static_cast<std::size_t>(subgroup)],
                                     max_steps.value_or(default_max_steps(static_cast<int>(t.size()))));
  py::list trace;
  for (const auto& step : r.trace) {
    py::dict d;
    d["edge"] = step.edge;
    d["axis"] = step.axis;
    d["ii4_count"] = step.ii4_count;
    d["type_iv_count"] = step.type_iv_count;
    trace.append(d);
  }
  return py::make_tuple(serialize(r.tri), trace);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Z/2 cohomology tools for triangulated 3-manifolds";
  py::register_exception<Error>(m, "Z2TriError", PyExc_ValueError);

  m.def("twisted_loop", [](int k) { return serialize(twisted_layered_loop(k)); }, py::arg("k"));
  m.def("layered_solid_torus", [](const std::vector<int>& seq) { return serialize(layered_solid_torus(seq).tri); },
        py::arg("seq") = std::vector<int>{});
  m.def("canonical", [](const std::string& text) { return serialize(parse_triangulation(text)); }, py::arg("text"));
  m.def("skeleton", &skeleton_summary, py::arg("text"));
  m.def("h1_rank", [](const std::string& text) { return h1_z2(Skeleton(parse_triangulation(text))).rank(); },
        py::arg("text"));
  m.def("analyze_json", [](const std::string& text) { return render_report(analyze(parse_triangulation(text))); },
        py::arg("text"));
  m.def(
      "flip",
      [](const std::string& text, int edge, int axis) {
        const auto t = parse_triangulation(text);
        return serialize(edge_flip(t, flip_site(Skeleton(t), edge), axis));
      },
      py::arg("text"), py::arg("edge"), py::arg("axis"));
  m.def("flippable_edges", [](const std::string& text) {
    std::vector<int> out;
    for (const auto& site : flippable_edges(Skeleton(parse_triangulation(text)))) out.push_back(site.edge);
    return out;
  });
  m.def("promote", &promote, py::arg("text"), py::arg("max_steps") = py::none(), py::arg("subgroup") = 0);
  m.def(
      "is_isomorphic",
      [](const std::string& a, const std::string& b) {
        return are_isomorphic(parse_triangulation(a), parse_triangulation(b)).has_value();
      },
      py::arg("a"), py::arg("b"));
}
