// Python bindings. Coordinates cross the boundary as tuples of Python ints,
// generators as their names ("tc", "tc-", "td", "td-").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "d3twist/commands.hpp"
#include "d3twist/ecf.hpp"
#include "d3twist/record.hpp"
#include "d3twist/untwist.hpp"

namespace py = pybind11;
using namespace d3twist;

// cpp_int <-> int through the decimal string, so sizes are unbounded.
namespace pybind11::detail {
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = parse_integer(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const Integer& x, return_value_policy, handle) {
    return PyLong_FromString(x.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using Pair = std::pair<Integer, Integer>;

DynnikovCoord dyn(const Pair& x) { return {x.first, x.second}; }
Pair tup(const DynnikovCoord& d) { return {d.a, d.b}; }
Pair tup(const TorusCoord& t) { return {t.p, t.q}; }

TwistWord word_of(const std::vector<std::string>& names) {
  TwistWord w;
  for (const auto& n : names) w.letters.push_back(parse_generator(n));
  return w;
}

std::vector<std::string> names_of(const TwistWord& w) {
  std::vector<std::string> out;
  for (Generator g : w.letters) out.emplace_back(to_string(g));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conjugacy classes of Dehn twists on the three-punctured disk";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  m.def("phi", [](const Pair& pq) { return tup(phi({pq.first, pq.second})); }, py::arg("pq"));
  m.def("phi_inverse", [](const Pair& ab) { return tup(phi_inverse(dyn(ab))); }, py::arg("ab"));
  m.def("is_essential", [](const Pair& ab) { return is_essential(dyn(ab)); }, py::arg("ab"));
  m.def(
      "curve_kind",
      [](const Pair& ab) {
        CurveKind k = curve_kind(dyn(ab));
        return py::make_tuple(k.essential() ? "essential" : "multicurve", k.multiplicity, tup(k.primitive_part));
      },
      py::arg("ab"));

  m.def("apply_twist", [](const std::string& g, const Pair& ab) { return tup(apply_twist(parse_generator(g), dyn(ab))); },
        py::arg("generator"), py::arg("ab"));
  m.def("apply_word", [](const std::vector<std::string>& w, const Pair& ab) { return tup(apply_word(word_of(w), dyn(ab))); },
        py::arg("word"), py::arg("ab"));

  m.def(
      "untwist",
      [](const Pair& ab) {
        UntwistResult u = untwist(dyn(ab));
        std::vector<Pair> path;
        for (const auto& d : u.trajectory) path.push_back(tup(d));
        return py::make_tuple(names_of(u.word), path, tup(u.terminal));
      },
      py::arg("ab"), "(word, trajectory, terminal); the word is in application order");
  m.def("classify", [](const Pair& ab) { return std::string(to_string(classify(dyn(ab)))); }, py::arg("ab"));
  m.def("conjugation_length", [](const Pair& ab) { return conjugation_length(dyn(ab)); }, py::arg("ab"));
  m.def("twists_conjugate", [](const Pair& x, const Pair& y) { return twists_conjugate(dyn(x), dyn(y)); });

  m.def(
      "ecf",
      [](const Integer& p, const Integer& q) {
        EcfExpansion e = ecf_expand(p, q);
        std::vector<Integer> qs = e.quotients;
        if (e.trailing_one) qs.push_back(1);
        return py::make_tuple(qs, tup(e.terminal), e.length());
      },
      py::arg("m"), py::arg("n"), "(quotients with any trailing 1, terminal vector, length)");

  m.def("classify_json", [](const Integer& a, const Integer& b) { return to_json(cmd_classify(a, b).record); });
}
