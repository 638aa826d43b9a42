#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gramquad/weights.hpp"

namespace gramquad::cli {

enum class TableFormat { csv, json };

/// Serialisable view of a QuadratureRule. CSV carries only the `x,w` columns,
/// so a table read back from CSV has no degree.
struct WeightTableDocument {
  std::size_t p_points = 0;
  std::optional<int> degree;
  std::vector<double> nodes;
  std::vector<double> weights;
  TableFormat format = TableFormat::csv;
};

WeightTableDocument make_document(const QuadratureRule& rule, TableFormat format);

/// CSV: header `x,w`, then one `node,weight` line per point, %.17g.
/// JSON: {"points", "degree", "nodes", "weights"}, nodes ascending.
std::string write_table(const WeightTableDocument& doc);

/// Inverse of write_table. Throws DomainError on malformed input.
WeightTableDocument read_table(std::string_view text, TableFormat format);

/// 17 significant digits; enough to round-trip any double.
std::string format_real(double v);

/// One decimal real per line, optional trailing newline, CR tolerated.
std::vector<double> parse_samples(std::string_view text);

}  // namespace gramquad::cli
