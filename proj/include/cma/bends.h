#pragma once

#include "cma/expr.h"
#include "cma/zeta.h"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace cma
{

/// Homogeneous polynomial of degree k in (x, y); c[r] multiplies x^r y^(k-r).
struct HomPoly
{
  int degree = 0;
  Eigen::VectorXd c;

  static HomPoly zero(int k);
  /// Coefficients of a homogeneous expression in (x, y). Throws InputError if
  /// the expression is not a homogeneous polynomial of degree k.
  static HomPoly from_expr(const Expr& e, int k);
  static HomPoly parse(std::string_view text, int k);

  double operator()(double x, double y) const;
  HomPoly dx() const;
  HomPoly dy() const;
  std::string print() const;
};

HomPoly operator+(const HomPoly& a, const HomPoly& b);
HomPoly operator*(double s, const HomPoly& a);

/// Sum of components(r, s) x^r y^s / (r! s!) over r + s = k, reading
/// d/du_{r,s} as x^r y^s / (r! s!). Every index with r + s = k must be
/// present; throws InputError otherwise.
HomPoly poly_from_fiber_vector(int k,
                               const std::map<std::pair<int, int>, double>& components);

struct BendWitness
{
  HomPoly f, g;
};

/// g_x = alpha f_x + beta f_y, g_y = gamma f_x + delta f_y.
struct StructureMatrix
{
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
  double fit_residual = 0.0;
  /// max coefficient of gamma f_xx + (delta - alpha) f_xy - beta f_yy, the
  /// cross-derivative condition (g_x)_y = (g_y)_x.
  double eq2_residual = 0.0;
};

struct BendClass
{
  ZetaKind kind = ZetaKind::Minus;
  /// B^2 = c I for B = M - (tr M / 2) I.
  double c = 0.0;
  /// B / sqrt(|c|), or B / |B| when c = 0.
  Eigen::Matrix2d generator;
};

struct BendSubspace
{
  int degree = 0;
  HomPoly q1, q2;
  std::optional<BendWitness> witness;
  std::optional<StructureMatrix> matrix;
  std::optional<ZetaKind> kind;

  /// (k + 1) x 2 coefficient matrix [q1 q2].
  Eigen::MatrixXd basis() const;
};

struct BendTest
{
  bool is_bend = false;
  std::optional<BendWitness> witness;
  /// Dimension of {h in P_{k+1}: h_x, h_y in span(q1, q2)}.
  int prolongation_dim = 0;
};

/// Throws InputError if q1, q2 are dependent or of the wrong degree.
BendTest is_bend(int k, const HomPoly& q1, const HomPoly& q2);

/// Throws InputError if g is proportional to f and ConsistencyError if the
/// witness does not close (fit residual or Eq. (2) residual above 1e-10).
StructureMatrix structure_matrix(const BendWitness& w);

/// Throws InputError for a scalar matrix.
BendClass classify_bend(const StructureMatrix& m, double tol = 1e-9);

/// span(Re z^k, Im z^k) with z = x + zeta y, fully analysed.
BendSubspace normal_form(int k, ZetaKind kind);

/// is_bend, structure_matrix and classify_bend in one step. Throws
/// ConsistencyError if the pair is not a bend.
BendSubspace analyse_bend(int k, const HomPoly& q1, const HomPoly& q2);

/// {h in P_{k+1}: h_x, h_y in span(b)}, analysed. Throws ConsistencyError
/// when that space is not 2-dimensional or not a bend.
BendSubspace prolong_bend(const BendSubspace& b);

/// Largest principal angle between two coefficient spans.
double subspace_angle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

} // namespace cma
