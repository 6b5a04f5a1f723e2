#include "cma/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cma::linalg
{

void normalize_signs(Eigen::MatrixXd& m)
{
  for (Eigen::Index c = 0; c < m.cols(); ++c)
  {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
    {
      if (std::abs(m(r, c)) > 1e-12)
      {
        if (m(r, c) < 0)
          m.col(c) *= -1.0;
        break;
      }
    }
  }
}

double max_abs(const Eigen::MatrixXd& m)
{
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& m, double rel_tol)
{
  if (m.size() == 0)
    return Eigen::MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  Eigen::Index r = 0;
  while (r < s.size() && smax > 0.0 && s(r) > rel_tol * smax)
    ++r;
  Eigen::MatrixXd q = svd.matrixU().leftCols(r);
  normalize_signs(q);
  return q;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol,
                           double scale)
{
  const Eigen::Index n = m.cols();
  if (m.rows() == 0)
    return Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double ref = scale > 0.0 ? scale : (s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel_tol * ref)
    ++r;
  Eigen::MatrixXd k = svd.matrixV().rightCols(n - r);
  normalize_signs(k);
  return k;
}

int rank(const Eigen::MatrixXd& m, double rel_tol)
{
  return static_cast<int>(orthonormal_basis(m, rel_tol).cols());
}

double max_principal_angle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
  const Eigen::MatrixXd qa = orthonormal_basis(a);
  const Eigen::MatrixXd qb = orthonormal_basis(b);
  if (qa.cols() != qb.cols())
    return std::numbers::pi / 2;
  if (qa.cols() == 0)
    return 0.0;
  const Eigen::MatrixXd residual = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  const double sin_max = std::min(1.0, svd.singularValues()(0));
  return std::asin(sin_max);
}

} // namespace cma::linalg
