#pragma once

#include "cma/expr.h"

#include <Eigen/Dense>

#include <array>
#include <span>
#include <string>
#include <vector>

namespace cma
{

/// Coordinate names of the 5-dimensional Darboux chart, in coordinate-frame
/// order. Expressions handled by this module are parsed against this list.
const std::vector<std::string>& darboux_variables();

/// A point (x1, x2, u, p1, p2) of the chart with contact form
/// du - p1 dx1 - p2 dx2.
struct DarbouxPoint
{
  double x1 = 0.0, x2 = 0.0, u = 0.0, p1 = 0.0, p2 = 0.0;

  std::array<double, 5> coords() const { return {x1, x2, u, p1, p2}; }
  static DarbouxPoint from(std::span<const double> c);
};

/// Components along (d/dx1, d/dx2, d/du, d/dp1, d/dp2).
using VectorFieldValue = std::array<double, 5>;

/// A vector field given by one jet per coordinate-frame component, all
/// expanded at the same base point.
using FieldJet = std::array<Jet, 5>;

/// omega(Z) = Z_u - p1 Z_x1 - p2 Z_x2.
double contact_form_value(const DarbouxPoint& pt, const VectorFieldValue& z);

/// The frame of the contact distribution at `pt`:
/// d/dx1 + p1 d/du, d/dx2 + p2 d/du, d/dp1, d/dp2.
std::array<VectorFieldValue, 4> distribution_frame(const DarbouxPoint& pt);

/// Matrix of the curvature R(X, Y) = -d omega(X, Y) on the distribution
/// frame. Constant: R(e1, e3) = R(e2, e4) = -1.
Eigen::Matrix4d curvature_gram();

/// Coordinates of a distribution vector in the distribution frame. The
/// d/du component is implied by omega(Z) = 0 and is not checked here.
Eigen::Vector4d to_distribution_frame(const VectorFieldValue& z);

/// [V, W] at the common base point; requires jets of order >= 1.
VectorFieldValue commutator(const FieldJet& v, const FieldJet& w);

/// Jets (one order lower than `nu`) of the components of X_nu.
FieldJet contact_field_jet(const Jet& nu);

/// The contact vector field with generating function nu:
/// (-nu_p1, -nu_p2, nu - p1 nu_p1 - p2 nu_p2, nu_x1 + p1 nu_u, nu_x2 + p2 nu_u).
VectorFieldValue contact_field(const Expr& nu, const DarbouxPoint& pt);

/// Largest |omega([e_i, Z])| over the distribution frame and the sample
/// points. Zero exactly when Z preserves the distribution at the samples.
double contact_field_defect(const std::array<Expr, 5>& z,
                            std::span<const DarbouxPoint> points);

bool is_contact_field(const std::array<Expr, 5>& z,
                      std::span<const DarbouxPoint> points, double tol);

/// {mu, nu} := omega([X_mu, X_nu]) at `pt`.
double lagrange_bracket(const Expr& mu, const Expr& nu, const DarbouxPoint& pt);

} // namespace cma
