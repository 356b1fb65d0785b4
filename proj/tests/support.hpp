#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "simstab/poly.hpp"
#include "simstab/rational.hpp"

namespace simstab::testing {

// Small-denominator random rational in [-range, range].
inline Rational random_rational(std::mt19937_64& rng, int range = 5, int max_den = 8) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(-range * q, range * q);
  return make_rational(num(rng), q);
}

// Random polynomial of exact degree `degree`.
inline Poly random_poly(std::mt19937_64& rng, int degree, int range = 5, int max_den = 8) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng, range, max_den));
  while (c.back() == 0) c.back() = random_rational(rng, range, max_den);
  return Poly(std::move(c));
}

// Random polynomial with strictly positive coefficients.
inline Poly random_positive_poly(std::mt19937_64& rng, int degree, int max_num = 20) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, 6);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return Poly(std::move(c));
}

// Roots through the companion matrix; independent of the exact engine.
inline std::vector<std::complex<double>> numeric_roots(const Poly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = to_double(p.leading());
  for (int i = 0; i < n; ++i) companion(0, i) = -to_double(p.coeff(n - 1 - i)) / lead;
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

// Hurwitz determinant by cofactor-free Gaussian elimination over the rationals.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Leading principal minors of the n x n Hurwitz matrix H[i][j] = a_{n-(2j-i)}.
inline std::vector<Rational> hurwitz_matrix_minors(const Poly& p) {
  const int n = p.degree();
  auto a = [&](int k) { return k < 0 || k > n ? Rational(0) : p.coeff(k); };
  std::vector<Rational> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> h(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(n - (2 * (j + 1) - (i + 1)));
    out.push_back(determinant(std::move(h)));
  }
  return out;
}

}  // namespace simstab::testing
