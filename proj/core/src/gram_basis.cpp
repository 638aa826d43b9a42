#include "gramquad/gram_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gramquad/errors.hpp"

namespace gramquad {

double alpha_coefficient(int m, std::size_t n_param) {
  if (m < 0 || n_param < 1 || static_cast<std::size_t>(m) + 1 >= n_param + 1) {
    throw DomainError("alpha_coefficient: degree " + std::to_string(m) +
                      " out of range for N = " + std::to_string(n_param) +
                      " (requires 0 <= m <= N - 1)");
  }
  const double n = static_cast<double>(n_param);
  const double k = static_cast<double>(m) + 1.0;
  return (n / k) * std::sqrt((4.0 * k * k - 1.0) / ((n + 1.0) * (n + 1.0) - k * k));
}

int default_max_degree(std::size_t p_points) {
  if (p_points < 2) {
    throw DomainError("at least 2 points are required, got " + std::to_string(p_points));
  }
  const std::size_t n = p_points - 1;
  auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return static_cast<int>(root);
}

std::vector<double> equidistant_points(std::size_t p_points) {
  if (p_points < 2) {
    throw DomainError("at least 2 points are required, got " + std::to_string(p_points));
  }
  std::vector<double> x(p_points);
  const double denom = static_cast<double>(p_points - 1);
  for (std::size_t i = 0; i < p_points; ++i) {
    x[i] = -1.0 + 2.0 * static_cast<double>(i) / denom;
  }
  return x;
}

GramRecurrence build_recurrence(std::size_t p_points, std::optional<int> max_degree) {
  const int cap = default_max_degree(p_points);
  const int degree = max_degree.value_or(cap);
  if (degree < 0 || degree > cap) {
    throw DomainError("degree " + std::to_string(degree) + " outside [0, " +
                      std::to_string(cap) + "] for " + std::to_string(p_points) +
                      " points");
  }

  GramRecurrence rec;
  rec.n_param = p_points - 1;
  rec.max_degree = degree;
  rec.alpha.reserve(static_cast<std::size_t>(degree) + 2);
  rec.alpha.push_back(1.0);
  for (int m = 0; m <= degree; ++m) {
    if (static_cast<std::size_t>(m) + 1 <= rec.n_param) {
      rec.alpha.push_back(alpha_coefficient(m, rec.n_param));
    } else {
      rec.alpha.push_back(std::numeric_limits<double>::infinity());
    }
  }
  return rec;
}

RowState initial_row_state(const GramRecurrence& rec, std::span<const double> points) {
  if (points.size() != rec.point_count()) {
    throw DomainError("initial_row_state: expected " + std::to_string(rec.point_count()) +
                      " points, got " + std::to_string(points.size()));
  }
  return unit_row_state(rec, points.size());
}

RowState seeded_row_state(const GramRecurrence& rec, std::span<const double> weights) {
  const double g0 = 1.0 / std::sqrt(static_cast<double>(rec.point_count()));
  RowState state;
  state.prev.assign(weights.size(), 0.0);
  state.cur.resize(weights.size());
  std::transform(weights.begin(), weights.end(), state.cur.begin(),
                 [g0](double w) { return w * g0; });
  state.degree = 0;
  return state;
}

RowState unit_row_state(const GramRecurrence& rec, std::size_t count) {
  RowState state;
  state.prev.assign(count, 0.0);
  state.cur.assign(count, 1.0 / std::sqrt(static_cast<double>(rec.point_count())));
  state.degree = 0;
  return state;
}

RowState advance_row(RowState state, const GramRecurrence& rec,
                     std::span<const double> points) {
  if (state.degree >= rec.max_degree) {
    throw DomainError("advance_row: degree " + std::to_string(state.degree) +
                      " is already at the recurrence limit " +
                      std::to_string(rec.max_degree));
  }
  if (points.size() != state.cur.size() || state.prev.size() != state.cur.size()) {
    throw DomainError("advance_row: row/point size mismatch");
  }

  const double a = rec.scale(state.degree);
  const double g = rec.damping(state.degree);
  const std::size_t n = points.size();
  double* prev = state.prev.data();
  const double* cur = state.cur.data();
  const double* x = points.data();
  // prev becomes the new row; swap puts it in cur.
  for (std::size_t i = 0; i < n; ++i) {
    prev[i] = a * (x[i] * cur[i]) - g * prev[i];
  }
  std::swap(state.prev, state.cur);
  ++state.degree;
  return state;
}

double orthonormality_residual(const GramRecurrence& rec, std::span<const double> points) {
  constexpr std::size_t kBlock = 4096;
  const auto dim = static_cast<std::size_t>(rec.max_degree) + 1;
  std::vector<double> gram(dim * dim, 0.0);
  std::vector<double> rows(dim * kBlock);

  for (std::size_t start = 0; start < points.size(); start += kBlock) {
    const std::size_t len = std::min(kBlock, points.size() - start);
    const auto chunk = points.subspan(start, len);
    RowState state = unit_row_state(rec, len);
    for (std::size_t k = 0;; ++k) {
      std::copy(state.cur.begin(), state.cur.end(), rows.begin() + k * len);
      if (k + 1 == dim) break;
      state = advance_row(std::move(state), rec, chunk);
    }
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t l = 0; l <= k; ++l) {
        double s = 0.0;
        for (std::size_t i = 0; i < len; ++i) s += rows[k * len + i] * rows[l * len + i];
        gram[k * dim + l] += s;
      }
    }
  }

  double worst = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l <= k; ++l) {
      const double target = (k == l) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(gram[k * dim + l] - target));
    }
  }
  return worst;
}

}  // namespace gramquad
