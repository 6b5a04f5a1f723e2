#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>
#include <vector>

namespace cma
{

/// A real vector space of dimension 2n with the skew form <v, w> = v^T J w.
class SymplecticSpace
{
public:
  /// Validates that `gram` is square, of even size, exactly antisymmetric
  /// and invertible. Throws InputError otherwise.
  explicit SymplecticSpace(Eigen::MatrixXd gram);

  /// J[i, n+i] = 1, J[n+i, i] = -1.
  static SymplecticSpace standard(int n);

  int dim() const { return static_cast<int>(_gram.rows()); }
  const Eigen::MatrixXd& gram() const { return _gram; }

  double form(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const
  {
    return v.dot(_gram * w);
  }

private:
  Eigen::MatrixXd _gram;
};

/// max |A^T J - J A| <= tol, i.e. <Av, w> = <v, Aw> for all v, w.
bool is_self_adjoint(const SymplecticSpace& sp, const Eigen::MatrixXd& a,
                     double tol);

/// (AB + BA) / 2.
Eigen::MatrixXd jordan_product(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b);

/// Orthonormal basis of span{A^k v : k >= 0}.
Eigen::MatrixXd cyclic_subspace(const SymplecticSpace& sp,
                                const Eigen::MatrixXd& a,
                                const Eigen::VectorXd& v);

/// True iff the columns span an n-dimensional isotropic subspace of the
/// 2n-dimensional space. Throws InputError on dependent columns.
bool is_lagrangian(const SymplecticSpace& sp, const Eigen::MatrixXd& plane);

enum class OperatorType
{
  Scalar,
  Elliptic,
  Hyperbolic,
  Parabolic
};

std::string_view to_string(OperatorType type);

struct ClassificationResult
{
  OperatorType type = OperatorType::Scalar;

  /// Minimal polynomial coefficients, constant term first.
  std::vector<double> minimal_polynomial;
  /// p^2 - 4q for the monic quadratic t^2 + p t + q (0 for Scalar).
  double discriminant = 0.0;
  /// With multiplicity.
  std::vector<std::complex<double>> eigenvalues;

  /// Elliptic: B = (A - a I) / b with B^2 = -I.
  Eigen::MatrixXd complex_structure;
  /// Hyperbolic: orthonormal bases of ker(A - lambda_i I), lambda_1 > lambda_2.
  Eigen::MatrixXd eigenplane1, eigenplane2;
  /// Parabolic: W = ker(A - lambda I) and im(A - lambda I).
  Eigen::MatrixXd lagrangian_plane, image_plane;

  /// Residual of the least-squares fit A^2 = -p A - q I.
  double fit_residual = 0.0;
};

struct ClassifyOptions
{
  double tol = 1e-9;
  /// Half-width of the parabolic band on the discriminant. Negative selects
  /// tol * ||A||_F^2.
  double parabolic_band = -1.0;
};

/// Classify a symplectic self-adjoint operator on a 4-dimensional space by
/// its (at most quadratic) minimal polynomial. Throws InputError when A is
/// not self-adjoint and NumericError when A^2 is not in span{I, A}.
ClassificationResult classify_dim4(const SymplecticSpace& sp,
                                   const Eigen::MatrixXd& a,
                                   const ClassifyOptions& options = {});

/// The nilpotent self-adjoint operator with kernel W: v = u + w maps to h(u),
/// where h: U -> W sends u into the line (u's symplectic orthogonal) ∩ W.
/// W and U are given as 4x2 column bases.
Eigen::MatrixXd nilpotent_from_lagrangian(const SymplecticSpace& sp,
                                          const Eigen::MatrixXd& w,
                                          const Eigen::MatrixXd& u);

/// F ⊕ F^T on the standard space of dimension 2n.
Eigen::MatrixXd direct_sum_operator(const Eigen::MatrixXd& f);

} // namespace cma
