#include "gramquad/weights.hpp"

#include <cmath>
#include <string>

#include "gramquad/errors.hpp"
#include "gramquad/gram_basis.hpp"
#include "gramquad/moments.hpp"

namespace gramquad {

QuadratureRule compute_rule(std::size_t p_points, std::optional<int> degree) {
  const GramRecurrence rec = build_recurrence(p_points, degree);
  const MomentVector b = compute_moments(rec);

  QuadratureRule rule;
  rule.p_points = p_points;
  rule.degree = rec.max_degree;
  rule.nodes = equidistant_points(p_points);
  rule.weights.assign(p_points, 0.0);

  RowState row = initial_row_state(rec, rule.nodes);
  double* w = rule.weights.data();
  for (int j = 0;; ++j) {
    const double bj = b.values[static_cast<std::size_t>(j)];
    const double* a = row.cur.data();
    for (std::size_t i = 0; i < p_points; ++i) w[i] += bj * a[i];
    if (j == rec.max_degree) break;
    row = advance_row(std::move(row), rec, rule.nodes);
  }
  return rule;
}

double integrate(const QuadratureRule& rule, std::span<const double> samples) {
  if (samples.size() != rule.weights.size()) {
    throw DomainError("integrate: expected " + std::to_string(rule.weights.size()) +
                      " samples, got " + std::to_string(samples.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) sum += rule.weights[i] * samples[i];
  return sum;
}

std::vector<double> mapped_nodes(const QuadratureRule& rule, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<double> out(rule.nodes.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mid + rule.nodes[i] * half;
  return out;
}

double integrate_on_interval(const QuadratureRule& rule, double a, double b,
                             std::span<const double> samples) {
  if (!(a < b)) {
    throw DomainError("integrate_on_interval: requires a < b");
  }
  return 0.5 * (b - a) * integrate(rule, samples);
}

}  // namespace gramquad
