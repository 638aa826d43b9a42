#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gramquad {

/// Stable quadrature rule on P equidistant nodes of [-1, 1].
struct QuadratureRule {
  std::size_t p_points = 0;
  int degree = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Least-squares weights w = A^T b for the orthonormal Gram basis, assembled
/// one design-matrix row at a time: w += b_j A_j for j = 0..degree. Live
/// storage is the node vector, two rows and the accumulator (4 vectors of
/// length P) plus O(degree) for coefficients and moments.
///
/// degree defaults to floor(sqrt(P - 1)). Throws DomainError for P < 2 or a
/// degree above that cap.
QuadratureRule compute_rule(std::size_t p_points, std::optional<int> degree = std::nullopt);

/// sum_i weights[i] * samples[i]. samples must have P entries.
double integrate(const QuadratureRule& rule, std::span<const double> samples);

/// Nodes mapped affinely onto [a, b]: (a + b)/2 + x_i (b - a)/2.
std::vector<double> mapped_nodes(const QuadratureRule& rule, double a, double b);

/// (b - a)/2 * sum_i weights[i] * samples[i], with samples taken at
/// mapped_nodes(rule, a, b). Requires a < b.
double integrate_on_interval(const QuadratureRule& rule, double a, double b,
                             std::span<const double> samples);

}  // namespace gramquad
