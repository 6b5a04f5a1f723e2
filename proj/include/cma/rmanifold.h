#pragma once

#include "cma/bends.h"
#include "cma/zeta.h"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cma
{

/// A point of the standard chart of J^k(E, 2): x, y and u_{p,q} for
/// p + q <= k. u is stored graded-lex: by p + q, then by decreasing p, so
/// u_{0,0}, u_{1,0}, u_{0,1}, u_{2,0}, u_{1,1}, u_{0,2}, ...
struct JetChartPoint
{
  int order = 0;
  double x = 0.0, y = 0.0;
  std::vector<double> u;

  static JetChartPoint zero(int k);
  static std::size_t index(int p, int q)
  {
    const int d = p + q;
    return static_cast<std::size_t>(d * (d + 1) / 2 + q);
  }
  static std::size_t count(int k)
  {
    return static_cast<std::size_t>((k + 1) * (k + 2) / 2);
  }

  double& at(int p, int q) { return u[index(p, q)]; }
  double at(int p, int q) const { return u[index(p, q)]; }

  /// (x, y, u...) as one vector.
  Eigen::VectorXd coords() const;
};

/// L_{k,l} with zeta^2 given by `kind`; k >= 2, l >= 2.
struct RManifoldSpec
{
  int k = 2;
  int l = 2;
  ZetaKind kind = ZetaKind::Minus;

  void validate() const;
};

/// u_{2+r,s} - zeta^2 u_{r,s+2} for r + s <= k - 2, graded-lex in (r, s).
std::vector<double> prolonged_residuals(const JetChartPoint& pt, ZetaKind kind);

using FiberVector = std::map<std::pair<int, int>, double>;

struct NuVectors
{
  /// Components over d/du_{p,q}, p + q = k.
  FiberVector nu1, nu2;
  HomPoly poly1, poly2;
  /// Largest principal angle between span(poly1, poly2) and the normal form.
  double angle_direct = 0.0;
  /// Same after exchanging x and y in poly1, poly2.
  double angle_swapped = 0.0;
};

/// nu1 = sum_r zeta^{2r} d/du_{2r,k-2r}, nu2 = sum_r zeta^{2r} d/du_{2r+1,k-2r-1}.
NuVectors nu_vectors(int k, ZetaKind kind);

/// The point of L_{k,l} with u_{k,0} = a, u_{k-1,1} = b. With t = a + zeta b
/// and c = (k + 1/l)!:
///   x + zeta s y = t^l / c                              (s = zeta^2, or 1 when zeta^2 = 0)
///   u_{k-r,0} + zeta u_{k-r-1,1} = t^{lr+1} / ((r + 1/l)! c^r),  1 <= r <= k
/// (the u_{-1,1} part is dropped at r = k), and u_{p,q} = zeta^2 u_{p+2,q-2}
/// for q >= 2, in order of increasing q then increasing p.
JetChartPoint lkl_point(const RManifoldSpec& spec, double a, double b);

/// Exact derivatives of lkl_point with respect to a and b, in coords() order.
std::array<Eigen::VectorXd, 2> exact_tangent_vectors(const RManifoldSpec& spec,
                                                     double a, double b);

/// Normalised central differences of lkl_point in a and b, step h > 0.
std::array<Eigen::VectorXd, 2> tangent_vectors(const RManifoldSpec& spec,
                                               double a, double b, double h);

/// max over p + q <= k - 1 of |t[u_{p,q}] - u_{p+1,q} t[x] - u_{p,q+1} t[y]|.
double contact_defect(const JetChartPoint& pt, const Eigen::VectorXd& t);

/// contact_defect of both tangent_vectors at lkl_point(a, b). Throws
/// InputError when |(a, b)| < 10 h.
double cartan_tangency_defect(const RManifoldSpec& spec, double a, double b,
                              double h);

struct SingularPointReport
{
  RManifoldSpec spec;
  double radius = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;

  /// Over random params with radius <= |(a, b)| <= 1.
  int sampled_xy_rank_deficient = 0;
  double min_xy_singular_ratio = 0.0;
  /// Singular points of the projection to J^{k-1} found away from the
  /// origin, from the samples and a circle scan at several radii.
  std::vector<std::array<double, 2>> singular_params;

  int origin_xy_rank = 0;
  int origin_projection_rank = 0;
  /// Coefficients ((k+1) x 2) of the polynomial image of the kernel of the
  /// projection differential at the origin.
  Eigen::MatrixXd bend;
  double bend_angle = 0.0;
  double bend_angle_swapped = 0.0;

  bool unique_singular_point = false;
  bool bend_matches_normal_form = false;
  /// False for zeta^2 = 0, where the checks are reported but not required.
  bool asserted = true;
  std::vector<std::string> failures;
};

SingularPointReport singular_point_report(const RManifoldSpec& spec,
                                          double radius, int samples,
                                          std::uint64_t seed = 42);

/// Parameter sweep: serial reference and OpenMP version, same output order.
std::vector<JetChartPoint>
lkl_sweep_serial(const RManifoldSpec& spec,
                 const std::vector<std::array<double, 2>>& params);
std::vector<JetChartPoint>
lkl_sweep(const RManifoldSpec& spec,
          const std::vector<std::array<double, 2>>& params);

/// Seeded uniform params in [-radius, radius]^2.
std::vector<std::array<double, 2>> random_params(int count, double radius,
                                                 std::uint64_t seed);

/// Header "a,b,x,y,u_{0,0},u_{1,0},..." and one row per point.
std::string point_cloud_csv(const std::vector<std::array<double, 2>>& params,
                            const std::vector<JetChartPoint>& points);

} // namespace cma
