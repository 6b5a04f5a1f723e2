#pragma once

// Oracles and random generators shared by the tests. Nothing here calls into
// the code under test except to build inputs.

#include "cma/expr.h"
#include "cma/symplectic.h"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing
{

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::MatrixXd random_matrix(std::mt19937_64& rng, int r, int c,
                                     double lo = -1.0, double hi = 1.0)
{
  Eigen::MatrixXd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m(i, j) = uniform(rng, lo, hi);
  return m;
}

inline Eigen::MatrixXd standard_j(int n)
{
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return j;
}

/// Random element of Sp(2n) for the standard J, as a product of shears and
/// a block-diagonal factor.
inline Eigen::MatrixXd random_symplectic(std::mt19937_64& rng, int n)
{
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  auto sym = [&]
  {
    const Eigen::MatrixXd a = random_matrix(rng, n, n);
    return Eigen::MatrixXd(0.5 * (a + a.transpose()));
  };
  Eigen::MatrixXd upper = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  upper.topRightCorner(n, n) = sym();
  Eigen::MatrixXd lower = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  lower.bottomLeftCorner(n, n) = sym();
  Eigen::MatrixXd g = random_matrix(rng, n, n) + 2.0 * id;
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  diag.topLeftCorner(n, n) = g;
  diag.bottomRightCorner(n, n) = g.inverse().transpose();
  return upper * diag * lower;
}

/// Central finite-difference estimate of d^alpha f at `point`.
inline double fd_derivative(const std::function<double(const std::vector<double>&)>& f,
                            std::vector<double> point, std::vector<int> alpha,
                            double h)
{
  for (std::size_t i = 0; i < alpha.size(); ++i)
  {
    if (alpha[i] == 0)
      continue;
    --alpha[i];
    const double x = point[i];
    point[i] = x + h;
    const double plus = fd_derivative(f, point, alpha, h);
    point[i] = x - h;
    const double minus = fd_derivative(f, point, alpha, h);
    return (plus - minus) / (2.0 * h);
  }
  return f(point);
}

/// Sparse polynomial with exact symbolic differentiation, used as an oracle
/// for generating functions and their contact fields.
struct Poly
{
  int nvars = 0;
  std::map<std::vector<int>, double> terms;

  static Poly constant(int n, double c)
  {
    Poly p{n, {}};
    if (c != 0.0)
      p.terms[std::vector<int>(static_cast<std::size_t>(n), 0)] = c;
    return p;
  }

  static Poly variable(int n, int i)
  {
    Poly p{n, {}};
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.terms[e] = 1.0;
    return p;
  }

  Poly operator+(const Poly& o) const
  {
    Poly r = *this;
    for (const auto& [e, c] : o.terms)
      r.terms[e] += c;
    return r;
  }

  Poly operator*(double s) const
  {
    Poly r = *this;
    for (auto& [e, c] : r.terms)
      c *= s;
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + o * -1.0; }

  Poly operator*(const Poly& o) const
  {
    Poly r{nvars, {}};
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms)
      {
        std::vector<int> e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = e1[i] + e2[i];
        r.terms[e] += c1 * c2;
      }
    return r;
  }

  Poly d(int i) const
  {
    Poly r{nvars, {}};
    for (const auto& [e, c] : terms)
    {
      const int k = e[static_cast<std::size_t>(i)];
      if (k == 0)
        continue;
      std::vector<int> f = e;
      --f[static_cast<std::size_t>(i)];
      r.terms[f] += c * k;
    }
    return r;
  }

  double operator()(const std::vector<double>& x) const
  {
    double s = 0.0;
    for (const auto& [e, c] : terms)
    {
      double t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        t *= std::pow(x[i], e[i]);
      s += t;
    }
    return s;
  }

  std::string text(const std::vector<std::string>& names) const
  {
    std::string out = "0";
    for (const auto& [e, c] : terms)
    {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out += std::string(" + (") + buf + ")";
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0)
          out += "*" + names[i] + "^" + std::to_string(e[i]);
    }
    return out;
  }
};

/// Random polynomial with `count` terms of total degree <= degree.
inline Poly random_poly(std::mt19937_64& rng, int nvars, int degree, int count)
{
  Poly p{nvars, {}};
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, degree);
  for (int t = 0; t < count; ++t)
  {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j)
      ++e[static_cast<std::size_t>(var(rng))];
    p.terms[e] += uniform(rng, -1.0, 1.0);
  }
  return p;
}

/// Contact field of nu for du - p1 dx1 - p2 dx2 over (x1, x2, u, p1, p2):
/// (-nu_p1, -nu_p2, nu - p1 nu_p1 - p2 nu_p2, nu_x1 + p1 nu_u, nu_x2 + p2 nu_u).
inline std::array<Poly, 5> contact_field_poly(const Poly& nu)
{
  const Poly p1 = Poly::variable(5, 3), p2 = Poly::variable(5, 4);
  return {nu.d(3) * -1.0, nu.d(4) * -1.0, nu - p1 * nu.d(3) - p2 * nu.d(4),
          nu.d(0) + p1 * nu.d(2), nu.d(1) + p2 * nu.d(2)};
}

/// X_mu(nu) - nu * mu_u, the bracket of generating functions for this
/// contact form and [V, W] = V(W) - W(V).
inline Poly bracket_poly(const Poly& mu, const Poly& nu)
{
  const auto x = contact_field_poly(mu);
  Poly r = Poly::constant(5, 0.0);
  for (int i = 0; i < 5; ++i)
    r = r + x[static_cast<std::size_t>(i)] * nu.d(i);
  return r - nu * mu.d(2);
}

inline const std::vector<std::string>& darboux_names()
{
  static const std::vector<std::string> n{"x1", "x2", "u", "p1", "p2"};
  return n;
}

} // namespace testing
