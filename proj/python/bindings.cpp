#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "patterncount/algebra.hpp"
#include "patterncount/dispatch.hpp"
#include "patterncount/errors.hpp"
#include "patterncount/io.hpp"

namespace py = pybind11;
using namespace patterncount;

namespace {

py::object to_int(const std::string& decimal) { return py::reinterpret_steal<py::object>(PyLong_FromString(decimal.c_str(), nullptr, 10)); }

py::object to_number(const mpq_class& q) {
  if (q.get_den() == 1) return to_int(q.get_num().get_str());
  return py::module_::import("fractions").attr("Fraction")(to_int(q.get_num().get_str()), to_int(q.get_den().get_str()));
}

std::string count(const std::vector<int>& perm, const std::string& tree_json, std::string algorithm,
                  std::optional<std::size_t> block_size, bool bigint) {
  const Permutation p(perm);
  const TreeSpec spec = parse_tree_spec(tree_json);
  if (algorithm == "auto") algorithm = resolve_algorithm(spec);
  return count_spec(p, spec, algorithm, block_size, bigint);
}

}  // namespace

PYBIND11_MODULE(_patterncount, m) {
  m.doc() = "Exact permutation pattern counting";

  static py::exception<Error> error(m, "PatternCountError", PyExc_ValueError);
  py::register_exception<NotApplicable>(m, "NotApplicableError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "count",
      [](const std::vector<int>& perm, const std::string& tree_json, const std::string& algorithm,
         std::optional<std::size_t> block_size, bool bigint) {
        std::string c;
        {
          py::gil_scoped_release release;
          c = count(perm, tree_json, algorithm, block_size, bigint);
        }
        return to_int(c);
      },
      py::arg("perm"), py::arg("tree_json"), py::arg("algorithm") = "auto", py::arg("block_size") = py::none(),
      py::arg("bigint") = false, "Occurrences of a tree (JSON text) in a one-line permutation.");

  m.def(
      "naive_pattern_count",
      [](const std::vector<int>& big, const std::vector<int>& pattern) {
        return naive_pattern_count(Permutation(big), Permutation(pattern));
      },
      py::arg("big"), py::arg("pattern"), "Occurrences of `pattern` in `big` by subset enumeration.");

  m.def(
      "pattern_vector",
      [](const std::string& tree_json) {
        const TreeSpec spec = parse_tree_spec(tree_json);
        py::dict out;
        for (const auto& [perm, c] : pattern_vector(spec.dp)) {
          py::tuple key(perm.size());
          for (std::size_t i = 0; i < perm.size(); ++i) key[i] = perm[i];
          out[key] = to_number(c);
        }
        return out;
      },
      py::arg("tree_json"), "Pattern vector as {permutation tuple: coefficient}.");

  m.def(
      "rank",
      [](int max_level, bool include_new) {
        if (include_new && max_level != 5) throw NotApplicable("include_new needs max_level 5");
        auto family = twin_tree_family(max_level);
        if (include_new) {
          for (const auto& a : new_direction_arbos()) {
            family.push_back(a.dp());
            family.push_back(a.dp().anti());
          }
        }
        const RankResult r = rank_of_family(family, max_level);
        py::dict out;
        out["dim_span"] = r.dim_span;
        out["dim_top"] = r.dim_top;
        out["dim_top_intersection"] = r.dim_top_intersection;
        return out;
      },
      py::arg("max_level"), py::arg("include_new") = false,
      "Dimensions of the span of twin-tree pattern vectors up to max_level.");
}
