#include "weight_table.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "gramquad/errors.hpp"

namespace gramquad::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw DomainError("line " + std::to_string(line) + ": not a decimal real: '" +
                      std::string(token) + "'");
  }
  return v;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

WeightTableDocument make_document(const QuadratureRule& rule, TableFormat format) {
  return {rule.p_points, rule.degree, rule.nodes, rule.weights, format};
}

std::string write_table(const WeightTableDocument& doc) {
  if (doc.format == TableFormat::json) {
    nlohmann::ordered_json j;
    j["points"] = doc.p_points;
    if (doc.degree) {
      j["degree"] = *doc.degree;
    } else {
      j["degree"] = nullptr;
    }
    j["nodes"] = doc.nodes;
    j["weights"] = doc.weights;
    return j.dump(2) + "\n";
  }

  std::string out = "x,w\n";
  for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
    out += format_real(doc.nodes[i]);
    out += ',';
    out += format_real(doc.weights[i]);
    out += '\n';
  }
  return out;
}

WeightTableDocument read_table(std::string_view text, TableFormat format) {
  WeightTableDocument doc;
  doc.format = format;

  if (format == TableFormat::json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      doc.p_points = j.at("points").get<std::size_t>();
      if (!j.at("degree").is_null()) doc.degree = j.at("degree").get<int>();
      doc.nodes = j.at("nodes").get<std::vector<double>>();
      doc.weights = j.at("weights").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("malformed weight table: ") + e.what());
    }
    if (doc.nodes.size() != doc.p_points || doc.weights.size() != doc.p_points) {
      throw DomainError("malformed weight table: array lengths disagree with 'points'");
    }
    return doc;
  }

  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines.front()) != "x,w") {
    throw DomainError("malformed weight table: missing 'x,w' header");
  }
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto line = trim(lines[n]);
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw DomainError("line " + std::to_string(n + 1) + ": expected 'x,w'");
    }
    doc.nodes.push_back(parse_real(line.substr(0, comma), n + 1));
    doc.weights.push_back(parse_real(line.substr(comma + 1), n + 1));
  }
  doc.p_points = doc.nodes.size();
  return doc;
}

std::vector<double> parse_samples(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<double> values;
  values.reserve(lines.size());
  for (std::size_t n = 0; n < lines.size(); ++n) {
    values.push_back(parse_real(lines[n], n + 1));
  }
  return values;
}

}  // namespace gramquad::cli
