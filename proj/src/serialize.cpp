#include "tnn_cells/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace tnn {

json to_json(const CauchonDiagram& c) {
  json black = json::array();
  for (const Cell& cell : c.black_cells()) black.push_back({cell.row, cell.col});
  return {{"m", c.m()}, {"p", c.p()}, {"black", std::move(black)}};
}

CauchonDiagram diagram_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  const int p = j.at("p").get<int>();
  std::vector<Cell> cells;
  for (const json& c : j.at("black")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("black cells must be [i,a] pairs");
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return CauchonDiagram::from_cells(m, p, cells);
}

json to_json(const RestrictedPermutation& w) { return {{"m", w.m()}, {"p", w.p()}, {"w", w.one_line()}}; }

RestrictedPermutation perm_from_json(const json& j) {
  return {j.at("m").get<int>(), j.at("p").get<int>(), j.at("w").get<std::vector<int>>()};
}

json to_json(const MinorId& id) { return {{"rows", id.rows.values()}, {"cols", id.cols.values()}}; }

MinorId minor_from_json(const json& j) {
  return {IndexSet(j.at("rows").get<std::vector<int>>()), IndexSet(j.at("cols").get<std::vector<int>>())};
}

json to_json(const MinorFamily& f) {
  json out = json::array();
  for (const MinorId& id : f) out.push_back(to_json(id));
  return out;
}

MinorFamily family_from_json(int m, int p, const json& j) {
  std::vector<MinorId> ids;
  for (const json& e : j) ids.push_back(minor_from_json(e));
  return MinorFamily(m, p, std::move(ids));
}

json to_json(const TnnVerdict& v) {
  json out = {{"is_tnn", v.is_tnn}};
  if (v.witness) {
    out["witness"] = v.witness->str();
    out["witness_value"] = v.witness_value->str();
  }
  return out;
}

json to_json(const CellDescriptor& c) {
  json out = {{"diagram", to_json(c.diagram)}, {"family", to_json(c.family)}, {"assertions_passed", true}};
  if (c.matched_perm) out["perm"] = to_json(*c.matched_perm);
  return out;
}

json to_json(const MatchedPair& pair) {
  return {{"perm", to_json(pair.perm)},
          {"diagram", to_json(pair.diagram)},
          {"family", to_json(pair.family)},
          {"family_size", pair.family.size()}};
}

json to_json(const StepBracketReport& r) {
  json failures = json::array();
  for (const BracketFailure& f : r.failures) {
    failures.push_back({{"first", {f.first.row, f.first.col}},
                        {"second", {f.second.row, f.second.col}},
                        {"difference", f.difference}});
  }
  return {{"step", r.step.str()},
          {"pairs_checked", r.pairs_checked},
          {"passed", r.passed()},
          {"failures", std::move(failures)}};
}

std::vector<int> parse_one_line(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '[')) ++pos;
    if (pos >= text.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw std::invalid_argument("bad permutation text: " + std::string(text));
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ']')) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw std::invalid_argument("bad permutation text: " + std::string(text));
      ++pos;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty permutation");
  return out;
}

RationalMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<Rational> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(Rational::parse(std::string_view(line).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("ragged matrix CSV");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix CSV");
  std::vector<Rational> data;
  for (auto& r : rows)
    for (auto& v : r) data.push_back(std::move(v));
  return RationalMatrix(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), std::move(data));
}

std::string matrix_to_csv(const RationalMatrix& m) { return to_string(m); }

json to_json(const LaurentMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tnn
