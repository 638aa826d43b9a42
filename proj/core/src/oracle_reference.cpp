#include "gramquad/oracle_reference.hpp"

#include <cmath>
#include <string>

#include "gramquad/errors.hpp"
#include "gramquad/gauss_legendre.hpp"
#include "gramquad/gram_basis.hpp"

namespace gramquad {

namespace {

double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace

DenseSystem dense_system(std::size_t p_points, std::optional<int> degree) {
  // Reuses the domain checks; the coefficients themselves are not used.
  const GramRecurrence rec = build_recurrence(p_points, degree);
  const std::vector<double> x = equidistant_points(p_points);
  const std::size_t dim = static_cast<std::size_t>(rec.max_degree) + 1;

  DenseSystem sys;
  DenseDesignMatrix& a = sys.matrix;
  a.p_points = p_points;
  a.degree = rec.max_degree;
  a.entries.assign(dim * p_points, 0.0);

  // Legendre rows.
  for (std::size_t i = 0; i < p_points; ++i) {
    double lm1 = 0.0;
    double l = 1.0;
    a.entries[i] = 1.0;
    for (std::size_t k = 1; k < dim; ++k) {
      const double n = static_cast<double>(k - 1);
      const double next = (k == 1) ? x[i] : ((2.0 * n + 1.0) * x[i] * l - n * lm1) / (n + 1.0);
      lm1 = l;
      l = next;
      a.entries[k * p_points + i] = next;
    }
  }

  // coeff(j, k): row j = sum_k coeff(j, k) * P_k.
  std::vector<double> coeff(dim * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) coeff[j * dim + j] = 1.0;

  auto row = [&](std::size_t j) {
    return std::span<double>(a.entries.data() + j * p_points, p_points);
  };
  for (std::size_t j = 0; j < dim; ++j) {
    auto rj = row(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        auto rk = row(k);
        const double r = dot(rj, rk);
        for (std::size_t i = 0; i < p_points; ++i) rj[i] -= r * rk[i];
        for (std::size_t c = 0; c < dim; ++c) coeff[j * dim + c] -= r * coeff[k * dim + c];
      }
    }
    const double norm = std::sqrt(dot(rj, rj));
    for (auto& v : rj) v /= norm;
    for (std::size_t c = 0; c < dim; ++c) coeff[j * dim + c] /= norm;
  }

  sys.moments.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) sys.moments[j] = 2.0 * coeff[j * dim];
  return sys;
}

std::vector<double> dense_weights(std::size_t p_points, std::optional<int> degree) {
  const DenseSystem sys = dense_system(p_points, degree);
  std::vector<double> w(p_points, 0.0);
  for (std::size_t j = 0; j < sys.matrix.rows(); ++j) {
    const auto r = sys.matrix.row(j);
    for (std::size_t i = 0; i < p_points; ++i) w[i] += sys.moments[j] * r[i];
  }
  return w;
}

std::vector<double> newton_cotes_weights(std::size_t p_points) {
  if (p_points < 2 || p_points > kNewtonCotesMaxPoints) {
    throw DomainError("newton_cotes_weights: point count " + std::to_string(p_points) +
                      " outside [2, " + std::to_string(kNewtonCotesMaxPoints) + "]");
  }
  const std::vector<double> x = equidistant_points(p_points);
  const GaussRule gauss = gauss_legendre_rule(static_cast<int>((p_points + 1) / 2) + 2);

  std::vector<double> w(p_points, 0.0);
  for (std::size_t i = 0; i < p_points; ++i) {
    double sum = 0.0;
    for (std::size_t g = 0; g < gauss.nodes.size(); ++g) {
      double lagrange = 1.0;
      for (std::size_t j = 0; j < p_points; ++j) {
        if (j != i) lagrange *= (gauss.nodes[g] - x[j]) / (x[i] - x[j]);
      }
      sum += gauss.weights[g] * lagrange;
    }
    w[i] = sum;
  }
  return w;
}

}  // namespace gramquad
