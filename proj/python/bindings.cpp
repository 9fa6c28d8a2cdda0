#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tnn_cells/cells.hpp"
#include "tnn_cells/combinat.hpp"
#include "tnn_cells/families.hpp"
#include "tnn_cells/restoration.hpp"
#include "tnn_cells/serialize.hpp"

namespace py = pybind11;
using namespace tnn;

namespace {

// Entries may be ints, strings such as "3/4", or fractions.Fraction.
RationalMatrix to_matrix(const py::sequence& rows) {
  const auto m = static_cast<int>(py::len(rows));
  if (m == 0) throw std::invalid_argument("matrix has no rows");
  const auto p = static_cast<int>(py::len(rows[0]));
  if (p == 0) throw std::invalid_argument("matrix has no columns");
  RationalMatrix x(m, p, Rational(0));
  for (int i = 0; i < m; ++i) {
    const py::sequence row = rows[i];
    if (static_cast<int>(py::len(row)) != p) throw std::invalid_argument("ragged matrix");
    for (int k = 0; k < p; ++k) x(i, k) = Rational::parse(py::str(row[k]).cast<std::string>());
  }
  return x;
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

py::list from_matrix(const RationalMatrix& x) {
  py::list rows;
  for (int i = 0; i < x.rows(); ++i) {
    py::list row;
    for (int k = 0; k < x.cols(); ++k) row.append(fraction(x(i, k)));
    rows.append(row);
  }
  return rows;
}

py::object from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::string> family_strings(const MinorFamily& f) {
  std::vector<std::string> out;
  for (const MinorId& id : f) out.push_back(id.str());
  return out;
}

std::vector<std::pair<int, int>> cell_pairs(const CauchonDiagram& c) {
  std::vector<std::pair<int, int>> out;
  for (const Cell& cell : c.black_cells()) out.emplace_back(cell.row, cell.col);
  return out;
}

CauchonDiagram diagram(int m, int p, const std::vector<std::pair<int, int>>& black) {
  std::vector<Cell> cells;
  for (auto [i, a] : black) cells.push_back({i, a});
  return CauchonDiagram::from_cells(m, p, cells);
}

py::object trace_result(const MatrixTrace<Rational>& tr, const RationalMatrix& result, bool trace) {
  if (!trace) return from_matrix(result);
  py::list steps;
  for (std::size_t k = 0; k < tr.size(); ++k) steps.append(py::make_tuple(tr.steps()[k].str(), from_matrix(tr.by_position(k))));
  return steps;
}

}  // namespace

PYBIND11_MODULE(_tnn_cells, mod) {
  mod.doc() = "Totally nonnegative cells via Cauchon diagrams and restoration";

  mod.def("count_diagrams", [](int m, int p) { return count_diagrams(m, p); }, py::arg("m"), py::arg("p"));

  mod.def(
      "diagrams",
      [](int m, int p) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const CauchonDiagram& c : enumerate_diagrams(m, p)) out.push_back(cell_pairs(c));
        return out;
      },
      py::arg("m"), py::arg("p"), "Black cells of every m x p Cauchon diagram.");

  mod.def(
      "restricted_perms",
      [](int m, int p) {
        std::vector<std::vector<int>> out;
        for (const RestrictedPermutation& w : enumerate_restricted_perms(m, p)) out.push_back(w.one_line());
        return out;
      },
      py::arg("m"), py::arg("p"));

  mod.def(
      "compute_mw",
      [](int m, int p, const std::vector<int>& w) { return family_strings(compute_Mw(RestrictedPermutation(m, p, w))); },
      py::arg("m"), py::arg("p"), py::arg("w"));

  mod.def(
      "compute_mc",
      [](int m, int p, const std::vector<std::pair<int, int>>& black) {
        return family_strings(compute_MC(diagram(m, p, black)));
      },
      py::arg("m"), py::arg("p"), py::arg("black"));

  mod.def(
      "is_tnn",
      [](const py::sequence& x) {
        const TnnVerdict v = is_tnn(to_matrix(x));
        py::dict out;
        out["is_tnn"] = v.is_tnn;
        out["witness"] = v.witness ? py::object(py::str(v.witness->str())) : py::object(py::none());
        out["witness_value"] = v.witness_value ? fraction(*v.witness_value) : py::object(py::none());
        return out;
      },
      py::arg("x"));

  mod.def(
      "vanishing_family", [](const py::sequence& x) { return family_strings(vanishing_family(to_matrix(x))); },
      py::arg("x"));

  mod.def(
      "restore",
      [](const py::sequence& x, bool trace) {
        const MatrixTrace<Rational> tr = restore(to_matrix(x));
        return trace_result(tr, tr.final(), trace);
      },
      py::arg("x"), py::arg("trace") = false);

  mod.def(
      "delete_derivations",
      [](const py::sequence& x, bool trace) {
        const MatrixTrace<Rational> tr = delete_derivations(to_matrix(x));
        return trace_result(tr, tr.initial(), trace);
      },
      py::arg("x"), py::arg("trace") = false);

  mod.def(
      "classify", [](const py::sequence& x) { return from_json(to_json(classify(to_matrix(x), true))); },
      py::arg("x"), "Diagram, minor family and matched permutation of a tnn matrix.");

  mod.def(
      "match_families",
      [](int m, int p, unsigned threads) {
        std::vector<MatchedPair> pairs;
        {
          py::gil_scoped_release release;
          pairs = match_families(m, p, threads);
        }
        json out = json::array();
        for (const MatchedPair& pair : pairs) out.push_back(to_json(pair));
        return from_json(out);
      },
      py::arg("m"), py::arg("p"), py::arg("threads") = 0);

  mod.def(
      "bruhat_leq",
      [](const std::vector<int>& w, const std::vector<int>& z) { return bruhat_leq(std::span<const int>(w), std::span<const int>(z)); },
      py::arg("w"), py::arg("z"));
}
