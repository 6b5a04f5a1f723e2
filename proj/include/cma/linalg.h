#pragma once

#include <Eigen/Dense>

namespace cma::linalg
{

/// Relative singular-value threshold used for every rank decision.
inline constexpr double kRankTol = 1e-10;

/// Orthonormal basis of the column span of `m`, keeping singular directions
/// above rel_tol * sigma_max. Columns are sign-normalised so that the first
/// entry of magnitude > 1e-12 is positive.
Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& m,
                                  double rel_tol = kRankTol);

/// Orthonormal basis of ker(m), same conventions. `scale` sets the absolute
/// reference for the threshold (defaults to sigma_max of m).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol = kRankTol,
                           double scale = -1.0);

/// Numerical rank with the relative threshold.
int rank(const Eigen::MatrixXd& m, double rel_tol = kRankTol);

/// Largest principal angle (radians) between the column spans of a and b,
/// computed from sin(theta) = ||(I - Qa Qa^T) Qb|| for accuracy at small
/// angles. Returns pi/2 if the dimensions differ.
double max_principal_angle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Flip column signs so the first entry above 1e-12 in magnitude is positive.
void normalize_signs(Eigen::MatrixXd& m);

double max_abs(const Eigen::MatrixXd& m);

} // namespace cma::linalg
