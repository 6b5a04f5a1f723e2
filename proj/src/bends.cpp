#include "cma/bends.h"
#include "cma/error.h"
#include "cma/linalg.h"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace cma
{
namespace
{
double factorial(int n)
{
  double f = 1.0;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

double binomial(int n, int j)
{
  return factorial(n) / (factorial(j) * factorial(n - j));
}

// d/dx and d/dy as matrices P_m -> P_{m-1}.
Eigen::MatrixXd dx_matrix(int m)
{
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m + 1);
  for (int r = 1; r <= m; ++r)
    d(r - 1, r) = r;
  return d;
}

Eigen::MatrixXd dy_matrix(int m)
{
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m + 1);
  for (int r = 0; r < m; ++r)
    d(r, r) = m - r;
  return d;
}

HomPoly from_vector(int k, Eigen::VectorXd v)
{
  return {k, std::move(v)};
}

// Orthonormal basis of {h in P_{k+1}: h_x, h_y in span(s)}.
Eigen::MatrixXd prolongation_space(int k, const Eigen::MatrixXd& s)
{
  const Eigen::MatrixXd q = linalg::orthonormal_basis(s);
  const Eigen::MatrixXd proj
      = Eigen::MatrixXd::Identity(k + 1, k + 1) - q * q.transpose();
  Eigen::MatrixXd m(2 * (k + 1), k + 2);
  m << proj * dx_matrix(k + 1), proj * dy_matrix(k + 1);
  return linalg::null_space(m, linalg::kRankTol, k + 1.0);
}

double smallest_singular_value(const HomPoly& f)
{
  Eigen::MatrixXd d(f.degree, 2);
  d << f.dx().c, f.dy().c;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
  return svd.singularValues()(1);
}

void require_pair(int k, const HomPoly& q1, const HomPoly& q2)
{
  if (k < 1)
    throw InputError("bend degree must be at least 1");
  if (q1.degree != k || q2.degree != k || q1.c.size() != k + 1
      || q2.c.size() != k + 1)
    throw InputError("bend polynomials must be homogeneous of degree "
                     + std::to_string(k));
  Eigen::MatrixXd s(k + 1, 2);
  s << q1.c, q2.c;
  if (linalg::rank(s) != 2)
    throw InputError("bend polynomials are linearly dependent");
}
} // namespace

HomPoly HomPoly::zero(int k)
{
  if (k < 0)
    throw InputError("negative polynomial degree");
  return {k, Eigen::VectorXd::Zero(k + 1)};
}

HomPoly HomPoly::from_expr(const Expr& e, int k)
{
  if (e.variables().size() != 2)
    throw InputError("a homogeneous polynomial is an expression in two variables");
  if (k < 0)
    throw InputError("negative polynomial degree");
  const Jet j = e.eval_jet({0.0, 0.0}, k);
  HomPoly p = zero(k);
  for (int r = 0; r <= k; ++r)
    p.c(r) = j.coefficient(std::array<int, 2>{r, k - r});
  const double scale = std::max(1.0, p.c.cwiseAbs().maxCoeff());
  const double probes[][2] = {{1.3, 0.7}, {-0.4, 1.1}, {0.9, -1.7}, {-1.2, -0.5}};
  for (const auto& xy : probes)
  {
    const double v = e.eval({xy[0], xy[1]});
    if (std::abs(v - p(xy[0], xy[1])) > 1e-9 * scale * std::pow(2.0, k))
      throw InputError("'" + e.print() + "' is not a homogeneous polynomial of degree "
                       + std::to_string(k));
  }
  return p;
}

HomPoly HomPoly::parse(std::string_view text, int k)
{
  return from_expr(Expr::parse(text, {"x", "y"}), k);
}

double HomPoly::operator()(double x, double y) const
{
  double s = 0.0;
  for (int r = 0; r <= degree; ++r)
    s += c(r) * std::pow(x, r) * std::pow(y, degree - r);
  return s;
}

HomPoly HomPoly::dx() const
{
  if (degree == 0)
    return zero(0);
  return from_vector(degree - 1, dx_matrix(degree) * c);
}

HomPoly HomPoly::dy() const
{
  if (degree == 0)
    return zero(0);
  return from_vector(degree - 1, dy_matrix(degree) * c);
}

std::string HomPoly::print() const
{
  std::string out;
  for (int r = degree; r >= 0; --r)
  {
    if (c(r) == 0.0)
      continue;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::abs(c(r)));
    if (out.empty())
      out = c(r) < 0 ? "-" : "";
    else
      out += c(r) < 0 ? " - " : " + ";
    const int s = degree - r;
    std::string mono;
    if (r > 0)
      mono += r == 1 ? "*x" : "*x^" + std::to_string(r);
    if (s > 0)
      mono += s == 1 ? "*y" : "*y^" + std::to_string(s);
    if (std::abs(c(r)) == 1.0 && !mono.empty())
      out += mono.substr(1);
    else
      out += buf + mono;
  }
  return out.empty() ? "0" : out;
}

HomPoly operator+(const HomPoly& a, const HomPoly& b)
{
  if (a.degree != b.degree)
    throw InputError("adding polynomials of different degree");
  return {a.degree, a.c + b.c};
}

HomPoly operator*(double s, const HomPoly& a)
{
  return {a.degree, s * a.c};
}

HomPoly poly_from_fiber_vector(int k,
                               const std::map<std::pair<int, int>, double>& components)
{
  if (k < 0)
    throw InputError("negative fiber order");
  HomPoly p = HomPoly::zero(k);
  for (const auto& [index, value] : components)
    if (index.first < 0 || index.second < 0 || index.first + index.second != k)
      throw InputError("fiber index (" + std::to_string(index.first) + ","
                       + std::to_string(index.second) + ") is not of order "
                       + std::to_string(k));
  for (int r = 0; r <= k; ++r)
  {
    const auto it = components.find({r, k - r});
    if (it == components.end())
      throw InputError("fiber vector is missing index (" + std::to_string(r)
                       + "," + std::to_string(k - r) + ")");
    p.c(r) = it->second / (factorial(r) * factorial(k - r));
  }
  return p;
}

Eigen::MatrixXd BendSubspace::basis() const
{
  Eigen::MatrixXd s(degree + 1, 2);
  s << q1.c, q2.c;
  return s;
}

BendTest is_bend(int k, const HomPoly& q1, const HomPoly& q2)
{
  require_pair(k, q1, q2);
  Eigen::MatrixXd s(k + 1, 2);
  s << q1.c, q2.c;
  const Eigen::MatrixXd v = prolongation_space(k, s);
  BendTest out;
  out.prolongation_dim = static_cast<int>(v.cols());
  if (v.cols() < 2)
    return out;

  // f maximising the smaller singular value of [f_x f_y] over a fixed set of
  // directions in V.
  constexpr int kAngles = 72;
  double best = -1.0;
  Eigen::VectorXd best_f;
  auto consider = [&](const Eigen::VectorXd& cand)
  {
    const double sigma = smallest_singular_value(from_vector(k + 1, cand));
    if (sigma > best + 1e-14)
    {
      best = sigma;
      best_f = cand;
    }
  };
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    consider(v.col(i));
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    for (Eigen::Index j = i + 1; j < v.cols(); ++j)
      for (int a = 1; a < kAngles; ++a)
      {
        const double t = std::numbers::pi * a / kAngles;
        consider(std::cos(t) * v.col(i) + std::sin(t) * v.col(j));
      }
  if (best <= 1e-8)
    return out;

  Eigen::MatrixXd f = best_f.normalized();
  linalg::normalize_signs(f);
  Eigen::MatrixXd rest = v - f * (f.transpose() * v);
  Eigen::Index pick = 0;
  rest.colwise().norm().maxCoeff(&pick);
  Eigen::MatrixXd g = rest.col(pick).normalized();
  linalg::normalize_signs(g);

  out.is_bend = true;
  out.witness = BendWitness{from_vector(k + 1, f.col(0)),
                            from_vector(k + 1, g.col(0))};
  return out;
}

StructureMatrix structure_matrix(const BendWitness& w)
{
  const HomPoly& f = w.f;
  const HomPoly& g = w.g;
  if (f.degree != g.degree || f.degree < 2)
    throw InputError("witness polynomials must share a degree >= 2");
  Eigen::MatrixXd fg(f.degree + 1, 2);
  fg << f.c, g.c;
  if (linalg::rank(fg) != 2)
    throw InputError("g is proportional to f");

  const HomPoly fx = f.dx(), fy = f.dy(), gx = g.dx(), gy = g.dy();
  Eigen::MatrixXd d(f.degree, 2);
  d << fx.c, fy.c;
  if (linalg::rank(d) != 2)
    throw ConsistencyError("f_x and f_y are dependent; witness is not a bend witness");
  const auto qr = d.colPivHouseholderQr();
  const Eigen::Vector2d ab = qr.solve(gx.c);
  const Eigen::Vector2d cd = qr.solve(gy.c);

  StructureMatrix m;
  m.alpha = ab(0);
  m.beta = ab(1);
  m.gamma = cd(0);
  m.delta = cd(1);
  m.fit_residual = std::max(linalg::max_abs(d * ab - gx.c),
                            linalg::max_abs(d * cd - gy.c));
  const double fit_scale
      = std::max({1.0, linalg::max_abs(gx.c), linalg::max_abs(gy.c)});
  if (m.fit_residual > 1e-10 * fit_scale)
    throw ConsistencyError("g_x, g_y are not in span(f_x, f_y): residual "
                           + std::to_string(m.fit_residual));

  const HomPoly fxx = fx.dx(), fxy = fx.dy(), fyy = fy.dy();
  const Eigen::VectorXd eq2
      = m.gamma * fxx.c + (m.delta - m.alpha) * fxy.c - m.beta * fyy.c;
  m.eq2_residual = linalg::max_abs(eq2);
  const double eq2_scale
      = std::max(1.0, std::max({std::abs(m.alpha), std::abs(m.beta),
                                std::abs(m.gamma), std::abs(m.delta)})
                          * std::max({linalg::max_abs(fxx.c),
                                      linalg::max_abs(fxy.c),
                                      linalg::max_abs(fyy.c)}));
  if (m.eq2_residual > 1e-10 * eq2_scale)
    throw ConsistencyError("structure matrix violates gamma f_xx + (delta - alpha) f_xy - beta f_yy = 0: residual "
                           + std::to_string(m.eq2_residual));
  return m;
}

BendClass classify_bend(const StructureMatrix& m, double tol)
{
  Eigen::Matrix2d mm;
  mm << m.alpha, m.beta, m.gamma, m.delta;
  const Eigen::Matrix2d b = mm - 0.5 * mm.trace() * Eigen::Matrix2d::Identity();
  if (linalg::max_abs(b) <= tol * std::max(1.0, linalg::max_abs(mm)))
    throw InputError("structure matrix is scalar; the bend algebra is degenerate");
  BendClass out;
  const double h = 0.5 * (m.alpha - m.delta);
  out.c = h * h + m.beta * m.gamma;
  const double band = tol * std::max(1.0, b.squaredNorm());
  if (out.c < -band)
    out.kind = ZetaKind::Minus;
  else if (out.c > band)
    out.kind = ZetaKind::Plus;
  else
    out.kind = ZetaKind::Zero;
  out.generator = out.kind == ZetaKind::Zero ? Eigen::Matrix2d(b / b.norm())
                                             : Eigen::Matrix2d(b / std::sqrt(std::abs(out.c)));
  return out;
}

BendSubspace analyse_bend(int k, const HomPoly& q1, const HomPoly& q2)
{
  const BendTest t = is_bend(k, q1, q2);
  if (!t.is_bend)
    throw ConsistencyError("span(" + q1.print() + ", " + q2.print()
                           + ") is not a bend");
  BendSubspace b;
  b.degree = k;
  b.q1 = q1;
  b.q2 = q2;
  b.witness = t.witness;
  b.matrix = structure_matrix(*t.witness);
  b.kind = classify_bend(*b.matrix).kind;
  return b;
}

BendSubspace normal_form(int k, ZetaKind kind)
{
  if (k < 2)
    throw InputError("normal forms need k >= 2");
  const double z2 = zeta_square(kind);
  HomPoly re = HomPoly::zero(k), im = HomPoly::zero(k);
  // (x + zeta y)^k = sum_j C(k, j) x^(k-j) y^j zeta^j
  for (int j = 0; j <= k; ++j)
  {
    const double w = binomial(k, j) * std::pow(z2, j / 2);
    if (j % 2 == 0)
      re.c(k - j) = w;
    else
      im.c(k - j) = w;
  }
  return analyse_bend(k, re, im);
}

BendSubspace prolong_bend(const BendSubspace& b)
{
  const int k = b.degree;
  require_pair(k, b.q1, b.q2);
  const Eigen::MatrixXd v = prolongation_space(k, b.basis());
  if (v.cols() != 2)
    throw ConsistencyError("prolonged space has dimension " + std::to_string(v.cols())
                           + ", expected 2");
  return analyse_bend(k + 1, from_vector(k + 1, v.col(0)),
                      from_vector(k + 1, v.col(1)));
}

double subspace_angle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
  return linalg::max_principal_angle(a, b);
}

} // namespace cma
