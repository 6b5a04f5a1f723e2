#pragma once

#include "cma/contact.h"
#include "cma/expr.h"
#include "cma/symplectic.h"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cma
{

/// Coefficient values of N(u_xx u_yy - u_xy^2) + A u_xx + B u_xy + C u_yy + D
/// at one point.
struct Coefficients
{
  double N = 0.0, A = 0.0, B = 0.0, C = 0.0, D = 0.0;
};

/// A classical Monge-Ampère equation; the five coefficients are expressions
/// over (x1, x2, u, p1, p2), where p_i stands for u_{x_i}.
class MAEquation
{
public:
  MAEquation(Expr n, Expr a, Expr b, Expr c, Expr d);

  /// Throws ParseError with the offending coefficient named in the message.
  static MAEquation parse(std::string_view n, std::string_view a,
                          std::string_view b, std::string_view c,
                          std::string_view d);
  static MAEquation constant(const Coefficients& k);

  const Expr& N() const { return _n; }
  const Expr& A() const { return _a; }
  const Expr& B() const { return _b; }
  const Expr& C() const { return _c; }
  const Expr& D() const { return _d; }

  Coefficients at(const DarbouxPoint& pt) const;

private:
  Expr _n, _a, _b, _c, _d;
};

enum class EquationType
{
  Elliptic,
  Parabolic,
  Hyperbolic
};

std::string_view to_string(EquationType type);

/// (x1, x2, f, f_x1, f_x2) at `base`; f is an expression in (x1, x2).
DarbouxPoint lift_point(const Expr& f, std::array<double, 2> base);

/// B^2 - 4AC + 4ND.
double discriminant(const Coefficients& k);
double discriminant(const MAEquation& eq, const DarbouxPoint& pt);

/// Elliptic for delta < -tol, hyperbolic for delta > tol, parabolic between.
EquationType classify(double delta, double tol);
EquationType classify(const MAEquation& eq, const DarbouxPoint& pt, double tol);

/// Matrix of the structure operator on the distribution frame
/// (d/dx1 + p1 d/du, d/dx2 + p2 d/du, d/dp1, d/dp2). Its square is
/// discriminant * I and it is self-adjoint for curvature_gram().
Eigen::Matrix4d structure_operator(const Coefficients& k);
Eigen::Matrix4d structure_operator(const MAEquation& eq, const DarbouxPoint& pt);

/// Inverse of structure_operator on trace-free self-adjoint matrices. The
/// optional `template_residual` receives max |m - structure_operator(result)|.
Coefficients coefficients_from_operator(const Eigen::Matrix4d& m,
                                        double* template_residual = nullptr);

/// E = N(f11 f22 - f12^2) + A f11 + B f12 + C f22 + D, coefficients taken at
/// lift_point(f, base).
double residual(const MAEquation& eq, const Expr& f, std::array<double, 2> base);

/// Z1 = d/dx1 + p1 d/du + f11 d/dp1 + f12 d/dp2 and
/// Z2 = d/dx2 + p2 d/du + f12 d/dp1 + f22 d/dp2 at the lifted point.
std::array<VectorFieldValue, 2> tangent_frame(const Expr& f,
                                              std::array<double, 2> base);

struct InvarianceReport
{
  /// max_i of the (d/dp1, d/dp2) part of A(Z_i) in the basis
  /// (Z1, Z2, d/dp1, d/dp2). Equals 2|E|.
  double defect = 0.0;
  double defect_z1 = 0.0, defect_z2 = 0.0;
  /// max deviation of A(Z1) from (B - 2 f12 N) Z1 + 2 (C + f11 N) Z2 - 2E d/dp2.
  double decomposition_z1 = 0.0;
  /// max deviation of A(Z2) from -2 (A + f22 N) Z1 + (2 f12 N - B) Z2 + 2E d/dp1.
  double decomposition_z2 = 0.0;
  double residual = 0.0;
  DarbouxPoint point;
};

InvarianceReport invariance_defect(const MAEquation& eq, const Expr& f,
                                   std::array<double, 2> base);

struct BasicAlgebra
{
  Eigen::Matrix4d identity;
  Eigen::Matrix4d generator;
  ClassificationResult classification;
  /// Residual of the least-squares fit of generator * generator in
  /// span{identity, generator}.
  double jordan_closure_residual = 0.0;
};

/// span{I, A} at `pt`; throws NumericError if A vanishes (degenerate point).
BasicAlgebra basic_algebra(const MAEquation& eq, const DarbouxPoint& pt);

/// The partial Legendre transformation
/// (x1, x2, u, p1, p2) -> (p1, x2, u - x1 p1, -x1, p2), which preserves
/// du - p1 dx1 - p2 dx2.
struct PartialLegendre
{
  DarbouxPoint map(const DarbouxPoint& pt) const;
  /// Jacobian in coordinate-frame order.
  Eigen::Matrix<double, 5, 5> jacobian(const DarbouxPoint& pt) const;
  /// Matrix of the differential restricted to the distribution, from the
  /// frame at pt to the frame at map(pt).
  Eigen::Matrix4d frame_map(const DarbouxPoint& pt) const;
  /// Push a distribution operator at pt forward to map(pt).
  Eigen::Matrix4d push_forward(const Eigen::Matrix4d& op,
                               const DarbouxPoint& pt) const;
};

// Region classification.

struct GridAxis
{
  int variable = 0; ///< index into darboux_variables()
  double lo = 0.0, hi = 0.0;
  int count = 0;

  double node(int i) const
  {
    return count <= 1 ? lo : lo + (hi - lo) * i / (count - 1);
  }
};

struct GridSpec
{
  GridAxis axis1, axis2;
  DarbouxPoint fixed;

  /// "x1=-1:1:5,x2=-1:1:5" (two axes) and optional "u=0.5,p1=0" for the
  /// remaining coordinates. "default" selects x1, x2 in [-1, 1] with 5
  /// nodes each.
  static GridSpec parse(std::string_view axes, std::string_view fixed = {});
  static GridSpec default_grid();

  std::size_t size() const
  {
    return static_cast<std::size_t>(std::max(axis1.count, 0))
           * static_cast<std::size_t>(std::max(axis2.count, 0));
  }
  DarbouxPoint point(int i, int j) const;
};

enum class CellType
{
  Elliptic,
  Parabolic,
  Hyperbolic,
  Band,
  Error
};

std::string_view to_string(CellType type);

struct RegionCell
{
  int i = 0, j = 0;
  std::optional<double> delta;
  CellType type = CellType::Error;
  std::string error;

  bool operator==(const RegionCell&) const = default;
};

/// Cell type for a discriminant: elliptic / hyperbolic outside the band,
/// parabolic for an exact zero, band for 0 < |delta| <= tol.
CellType cell_type(double delta, double tol);

/// Row-major (i over axis1, j over axis2) serial reference implementation.
std::vector<RegionCell> classify_region_serial(const MAEquation& eq,
                                               const GridSpec& grid, double tol);

/// OpenMP cell-parallel version; identical output to the serial one.
std::vector<RegionCell> classify_region(const MAEquation& eq,
                                        const GridSpec& grid, double tol);

} // namespace cma
