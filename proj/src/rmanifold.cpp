#include "cma/rmanifold.h"
#include "cma/error.h"
#include "cma/linalg.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace cma
{
namespace
{
// Fills a chart point (or a tangent vector, the construction being linear in
// the powers) from power(m), standing for t^m or its derivative, and top,
// standing for t or dt.
template <typename Power>
JetChartPoint assemble(const RManifoldSpec& spec, Power power, ZetaNum top)
{
  const int k = spec.k, l = spec.l;
  const double z2 = zeta_square(spec.kind);
  const double c = frac_factorial(k, l);
  JetChartPoint pt = JetChartPoint::zero(k);

  const ZetaNum w = (1.0 / c) * power(l);
  pt.x = w.re;
  pt.y = (spec.kind == ZetaKind::Zero ? 1.0 : z2) * w.im;

  pt.at(k, 0) = top.re;
  pt.at(k - 1, 1) = top.im;
  for (int r = 1; r <= k; ++r)
  {
    const ZetaNum v
        = (1.0 / (frac_factorial(r, l) * std::pow(c, r))) * power(l * r + 1);
    pt.at(k - r, 0) = v.re;
    if (r <= k - 1)
      pt.at(k - r - 1, 1) = v.im;
  }
  for (int q = 2; q <= k; ++q)
    for (int p = 0; p + q <= k; ++p)
      pt.at(p, q) = spec.kind == ZetaKind::Zero ? 0.0 : z2 * pt.at(p + 2, q - 2);
  return pt;
}

JetChartPoint tangent_point(const RManifoldSpec& spec, double a, double b,
                            ZetaNum dt)
{
  const ZetaNum t{a, b, spec.kind};
  return assemble(
      spec, [&](int m) { return static_cast<double>(m) * (pow(t, m - 1) * dt); },
      dt);
}

// Rows x, y and u_{p,q} with p + q <= k - 1 of the two tangent columns.
Eigen::MatrixXd projection_block(const std::array<Eigen::VectorXd, 2>& t, int k)
{
  const Eigen::Index rows = 2 + static_cast<Eigen::Index>(JetChartPoint::count(k - 1));
  Eigen::MatrixXd m(rows, 2);
  m << t[0].head(rows), t[1].head(rows);
  return m;
}

double singular_ratio(const Eigen::MatrixXd& m)
{
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return s(0) > 0.0 ? s(s.size() - 1) / s(0) : 0.0;
}

constexpr double kSingularRatio = 1e-8;

HomPoly fiber_poly(const Eigen::VectorXd& v, int k)
{
  FiberVector comp;
  for (int p = 0; p <= k; ++p)
    comp[{p, k - p}]
        = v(2 + static_cast<Eigen::Index>(JetChartPoint::index(p, k - p)));
  return poly_from_fiber_vector(k, comp);
}

Eigen::MatrixXd swap_xy(const Eigen::MatrixXd& m)
{
  return m.colwise().reverse();
}

std::string format_double(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
} // namespace

JetChartPoint JetChartPoint::zero(int k)
{
  if (k < 0)
    throw InputError("negative jet order");
  JetChartPoint pt;
  pt.order = k;
  pt.u.assign(count(k), 0.0);
  return pt;
}

Eigen::VectorXd JetChartPoint::coords() const
{
  Eigen::VectorXd v(2 + static_cast<Eigen::Index>(u.size()));
  v(0) = x;
  v(1) = y;
  for (std::size_t i = 0; i < u.size(); ++i)
    v(2 + static_cast<Eigen::Index>(i)) = u[i];
  return v;
}

void RManifoldSpec::validate() const
{
  if (k < 2)
    throw InputError("R-manifold order k must be at least 2");
  if (l < 2)
    throw InputError("R-manifold parameter l must be at least 2");
}

std::vector<double> prolonged_residuals(const JetChartPoint& pt, ZetaKind kind)
{
  if (pt.u.size() != JetChartPoint::count(pt.order))
    throw InputError("jet chart point is incomplete");
  const double z2 = zeta_square(kind);
  std::vector<double> out;
  for (int d = 0; d <= pt.order - 2; ++d)
    for (int s = 0; s <= d; ++s)
    {
      const int r = d - s;
      out.push_back(pt.at(2 + r, s) - z2 * pt.at(r, s + 2));
    }
  return out;
}

NuVectors nu_vectors(int k, ZetaKind kind)
{
  if (k < 2)
    throw InputError("nu vectors need k >= 2");
  const double z2 = zeta_square(kind);
  NuVectors nv;
  for (int p = 0; p <= k; ++p)
  {
    nv.nu1[{p, k - p}] = 0.0;
    nv.nu2[{p, k - p}] = 0.0;
  }
  for (int r = 0; 2 * r <= k; ++r)
    nv.nu1[{2 * r, k - 2 * r}] = std::pow(z2, r);
  for (int r = 0; 2 * r + 1 <= k; ++r)
    nv.nu2[{2 * r + 1, k - 2 * r - 1}] = std::pow(z2, r);
  nv.poly1 = poly_from_fiber_vector(k, nv.nu1);
  nv.poly2 = poly_from_fiber_vector(k, nv.nu2);

  Eigen::MatrixXd span(k + 1, 2);
  span << nv.poly1.c, nv.poly2.c;
  const Eigen::MatrixXd normal = normal_form(k, kind).basis();
  nv.angle_direct = subspace_angle(span, normal);
  nv.angle_swapped = subspace_angle(swap_xy(span), normal);
  return nv;
}

JetChartPoint lkl_point(const RManifoldSpec& spec, double a, double b)
{
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b))
    throw InputError("R-manifold parameters must be finite");
  const ZetaNum t{a, b, spec.kind};
  return assemble(spec, [&](int m) { return pow(t, m); }, t);
}

std::array<Eigen::VectorXd, 2> exact_tangent_vectors(const RManifoldSpec& spec,
                                                     double a, double b)
{
  spec.validate();
  return {tangent_point(spec, a, b, {1.0, 0.0, spec.kind}).coords(),
          tangent_point(spec, a, b, {0.0, 1.0, spec.kind}).coords()};
}

std::array<Eigen::VectorXd, 2> tangent_vectors(const RManifoldSpec& spec,
                                               double a, double b, double h)
{
  if (!(h > 0.0))
    throw InputError("finite-difference step must be positive");
  const Eigen::VectorXd da
      = (lkl_point(spec, a + h, b).coords() - lkl_point(spec, a - h, b).coords())
        / (2.0 * h);
  const Eigen::VectorXd db
      = (lkl_point(spec, a, b + h).coords() - lkl_point(spec, a, b - h).coords())
        / (2.0 * h);
  return {da.normalized(), db.normalized()};
}

double contact_defect(const JetChartPoint& pt, const Eigen::VectorXd& t)
{
  const int k = pt.order;
  if (t.size() != 2 + static_cast<Eigen::Index>(JetChartPoint::count(k)))
    throw InputError("tangent vector has the wrong length");
  auto tu = [&](int p, int q)
  { return t(2 + static_cast<Eigen::Index>(JetChartPoint::index(p, q))); };
  double worst = 0.0;
  for (int d = 0; d <= k - 1; ++d)
    for (int q = 0; q <= d; ++q)
    {
      const int p = d - q;
      worst = std::max(worst, std::abs(tu(p, q) - pt.at(p + 1, q) * t(0)
                                       - pt.at(p, q + 1) * t(1)));
    }
  return worst;
}

double cartan_tangency_defect(const RManifoldSpec& spec, double a, double b,
                              double h)
{
  if (!(h > 0.0))
    throw InputError("finite-difference step must be positive");
  if (std::hypot(a, b) < 10.0 * h)
    throw InputError("parameters are within 10 h of the singular point");
  const JetChartPoint pt = lkl_point(spec, a, b);
  const auto t = tangent_vectors(spec, a, b, h);
  return std::max(contact_defect(pt, t[0]), contact_defect(pt, t[1]));
}

SingularPointReport singular_point_report(const RManifoldSpec& spec,
                                          double radius, int samples,
                                          std::uint64_t seed)
{
  spec.validate();
  if (!(radius > 0.0) || radius > 1.0)
    throw InputError("neighbourhood radius must lie in (0, 1]");
  if (samples < 0)
    throw InputError("sample count must be nonnegative");
  const int k = spec.k;
  SingularPointReport rep;
  rep.spec = spec;
  rep.radius = radius;
  rep.samples = samples;
  rep.seed = seed;
  rep.asserted = spec.kind != ZetaKind::Zero;
  rep.min_xy_singular_ratio = 1.0;

  auto inspect = [&](double a, double b, bool sampled)
  {
    const auto t = exact_tangent_vectors(spec, a, b);
    if (sampled)
    {
      const double xy = singular_ratio(projection_block(t, 0).topRows(2));
      rep.min_xy_singular_ratio = std::min(rep.min_xy_singular_ratio, xy);
      if (xy < kSingularRatio)
        ++rep.sampled_xy_rank_deficient;
    }
    if (singular_ratio(projection_block(t, k)) < kSingularRatio
        && rep.singular_params.size() < 64)
      rep.singular_params.push_back({a, b});
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int n = 0; n < samples;)
  {
    const double a = unit(rng), b = unit(rng);
    const double rho = std::hypot(a, b);
    if (rho < radius || rho > 1.0)
      continue;
    inspect(a, b, true);
    ++n;
  }
  constexpr int kAngles = 72;
  for (double rho : {radius, 0.5 * (radius + 1.0), 1.0})
    for (int j = 0; j < kAngles; ++j)
    {
      const double th = 2.0 * std::numbers::pi * j / kAngles;
      inspect(rho * std::cos(th), rho * std::sin(th), false);
    }

  const auto t0 = exact_tangent_vectors(spec, 0.0, 0.0);
  const Eigen::MatrixXd p0 = projection_block(t0, k);
  rep.origin_xy_rank = linalg::rank(p0.topRows(2));
  rep.origin_projection_rank = linalg::rank(p0);

  Eigen::MatrixXd tangent(t0[0].size(), 2);
  tangent << t0[0], t0[1];
  const Eigen::MatrixXd kernel = tangent * linalg::null_space(p0);
  rep.bend.resize(k + 1, kernel.cols());
  for (Eigen::Index c = 0; c < kernel.cols(); ++c)
    rep.bend.col(c) = fiber_poly(kernel.col(c), k).c;
  const Eigen::MatrixXd normal = normal_form(k, spec.kind).basis();
  rep.bend_angle = subspace_angle(rep.bend, normal);
  rep.bend_angle_swapped = subspace_angle(swap_xy(rep.bend), normal);

  if (rep.sampled_xy_rank_deficient > 0)
    rep.failures.push_back(std::to_string(rep.sampled_xy_rank_deficient)
                           + " sampled points with |params| >= radius have a rank-deficient (x, y) Jacobian");
  if (rep.origin_xy_rank != 0)
    rep.failures.push_back("(x, y) Jacobian at the origin has rank "
                           + std::to_string(rep.origin_xy_rank));
  if (rep.origin_projection_rank == 2)
    rep.failures.push_back("the origin is not a singular point of the projection");
  if (!rep.singular_params.empty())
    rep.failures.push_back(std::to_string(rep.singular_params.size())
                           + " singular points of the projection found away from the origin");
  if (kernel.cols() != 2)
    rep.failures.push_back("bend at the origin has dimension "
                           + std::to_string(kernel.cols()));

  rep.unique_singular_point
      = rep.origin_projection_rank < 2 && rep.singular_params.empty();
  rep.bend_matches_normal_form = kernel.cols() == 2 && rep.bend_angle <= 1e-8;
  if (!rep.bend_matches_normal_form)
    rep.failures.push_back("bend differs from span(Re z^k, Im z^k)");
  return rep;
}

std::vector<JetChartPoint>
lkl_sweep_serial(const RManifoldSpec& spec,
                 const std::vector<std::array<double, 2>>& params)
{
  spec.validate();
  std::vector<JetChartPoint> out;
  out.reserve(params.size());
  for (const auto& p : params)
    out.push_back(lkl_point(spec, p[0], p[1]));
  return out;
}

std::vector<JetChartPoint>
lkl_sweep(const RManifoldSpec& spec,
          const std::vector<std::array<double, 2>>& params)
{
  spec.validate();
  for (const auto& p : params)
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
      throw InputError("R-manifold parameters must be finite");
  const long n = static_cast<long>(params.size());
  std::vector<JetChartPoint> out(params.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
  {
    const auto& p = params[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = lkl_point(spec, p[0], p[1]);
  }
  return out;
}

std::vector<std::array<double, 2>> random_params(int count, double radius,
                                                 std::uint64_t seed)
{
  if (count < 0)
    throw InputError("sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-radius, radius);
  std::vector<std::array<double, 2>> out(static_cast<std::size_t>(count));
  for (auto& p : out)
  {
    p[0] = dist(rng);
    p[1] = dist(rng);
  }
  return out;
}

std::string point_cloud_csv(const std::vector<std::array<double, 2>>& params,
                            const std::vector<JetChartPoint>& points)
{
  if (params.size() != points.size())
    throw InputError("parameter and point counts differ");
  std::string out = "a,b,x,y";
  const int k = points.empty() ? -1 : points.front().order;
  for (int d = 0; d <= k; ++d)
    for (int q = 0; q <= d; ++q)
      out += ",\"u_{" + std::to_string(d - q) + "," + std::to_string(q) + "}\"";
  out += '\n';
  for (std::size_t i = 0; i < points.size(); ++i)
  {
    out += format_double(params[i][0]) + "," + format_double(params[i][1]) + ","
           + format_double(points[i].x) + "," + format_double(points[i].y);
    for (double v : points[i].u)
      out += "," + format_double(v);
    out += '\n';
  }
  return out;
}

} // namespace cma
