#pragma once

// Fixed-width text grids (top row printed first,
// bottom row = row 1) and JSON records for the structured output format.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kohnert/composition.hpp"
#include "kohnert/composition_tableau.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/kohnert_tableau.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/young.hpp"

namespace kohnert {

namespace detail {

inline std::string pad_entry(const std::string& s, std::size_t width) {
  std::string out = s;
  while (out.size() < width) out.insert(out.begin(), ' ');
  return out;
}

inline std::string render_grid(const std::vector<std::vector<std::string>>& rows_bottom_up) {
  std::size_t width = 1;
  for (const auto& row : rows_bottom_up)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::ostringstream os;
  for (auto it = rows_bottom_up.rbegin(); it != rows_bottom_up.rend(); ++it) {
    const auto& row = *it;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << pad_entry(row[c], width);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace detail

inline std::string render_diagram(const Diagram& d) {
  if (d.empty()) return "(empty)\n";
  std::vector<std::vector<std::string>> rows(
      static_cast<std::size_t>(d.max_row()),
      std::vector<std::string>(static_cast<std::size_t>(d.max_col()), "."));
  for (const Cell& c : d.cells())
    rows[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1] = "x";
  return detail::render_grid(rows);
}

inline std::string render_tableau(const KohnertTableau& t) {
  if (t.empty()) return "(empty)\n";
  std::vector<std::vector<std::string>> rows(
      static_cast<std::size_t>(t.max_row()),
      std::vector<std::string>(static_cast<std::size_t>(t.max_col()), "."));
  for (const LabeledCell& c : t.cells())
    rows[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1] =
        std::to_string(c.label);
  return detail::render_grid(rows);
}

// Threaded diagram: each cell shows its thread index (1-based, in threading
// order).
inline std::string render_threads(const Diagram& d, const ThreadDecomposition& dec) {
  if (d.empty()) return "(empty)\n";
  std::vector<std::vector<std::string>> rows(
      static_cast<std::size_t>(d.max_row()),
      std::vector<std::string>(static_cast<std::size_t>(d.max_col()), "."));
  for (std::size_t k = 0; k < dec.threads.size(); ++k)
    for (const Cell& c : dec.threads[k])
      rows[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1] =
          std::to_string(k + 1);
  return detail::render_grid(rows);
}

inline std::string render_young(const YoungTableau& t) {
  if (t.row_count() == 0) return "(empty)\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : t.rows()) {
    std::vector<std::string> cells;
    for (int e : row) cells.push_back(std::to_string(e));
    rows.push_back(std::move(cells));
  }
  return detail::render_grid(rows);
}

inline std::string render_sct(const CompositionTableau& t) {
  if (t.row_count() == 0) return "(empty)\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : t.rows()) {
    std::vector<std::string> cells;
    for (int e : row) cells.push_back(std::to_string(e));
    rows.push_back(std::move(cells));
  }
  return detail::render_grid(rows);
}

inline nlohmann::json to_json(const Diagram& d) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : d.cells()) cells.push_back({c.row, c.col});
  return nlohmann::json{{"cells", cells}};
}

inline nlohmann::json to_json(const KohnertTableau& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (const LabeledCell& c : t.cells())
    cells.push_back({{"row", c.row}, {"col", c.col}, {"label", c.label}});
  return nlohmann::json{{"content", t.content().parts()}, {"cells", cells}};
}

inline nlohmann::json to_json(const YoungTableau& t) {
  return nlohmann::json{{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

inline nlohmann::json to_json(const CompositionTableau& t) {
  return nlohmann::json{{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

inline nlohmann::json to_json(const Diagram& d, const ThreadDecomposition& dec) {
  nlohmann::json threads = nlohmann::json::array();
  for (const auto& thread : dec.threads) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : thread) cells.push_back({c.row, c.col});
    threads.push_back(cells);
  }
  return nlohmann::json{{"cells", to_json(d)["cells"]}, {"threads", threads}};
}

inline std::vector<nlohmann::json> to_json_terms(const SparseIntegerPolynomial& p) {
  std::vector<nlohmann::json> out;
  for (const auto& [e, c] : p.terms()) out.push_back({{"coeff", c}, {"exponents", e}});
  return out;
}

inline std::vector<nlohmann::json> to_json_terms(const Expansion& e) {
  std::vector<nlohmann::json> out;
  for (const auto& [idx, c] : e.terms())
    out.push_back({{"coeff", c}, {"basis", basis_tag(e.basis())}, {"index", idx}});
  return out;
}

}  // namespace kohnert
