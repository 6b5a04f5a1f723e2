#include "cma/symplectic.h"
#include "cma/error.h"
#include "cma/linalg.h"

#include <algorithm>
#include <cmath>

namespace cma
{
namespace
{
void require_square(const SymplecticSpace& sp, const Eigen::MatrixXd& a)
{
  if (a.rows() != sp.dim() || a.cols() != sp.dim())
    throw InputError("operator dimension does not match the symplectic space");
}

// Right singular vectors of m for its `count` smallest singular values,
// together with the largest of those values relative to sigma_max.
std::pair<Eigen::MatrixXd, double> forced_kernel(const Eigen::MatrixXd& m,
                                                 int count)
{
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Eigen::Index n = m.cols();
  Eigen::MatrixXd k = svd.matrixV().rightCols(count);
  linalg::normalize_signs(k);
  const double smax = s(0) > 0.0 ? s(0) : 1.0;
  return {k, s(n - count) / smax};
}
} // namespace

SymplecticSpace::SymplecticSpace(Eigen::MatrixXd gram) : _gram(std::move(gram))
{
  if (_gram.rows() != _gram.cols() || _gram.rows() == 0 || _gram.rows() % 2)
    throw InputError("symplectic Gram matrix must be square of positive even size");
  if ((_gram + _gram.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw InputError("symplectic Gram matrix must be antisymmetric");
  const double scale = _gram.cwiseAbs().maxCoeff();
  if (scale == 0.0 || std::abs((_gram / scale).determinant()) <= 1e-12)
    throw InputError("symplectic Gram matrix is degenerate");
}

SymplecticSpace SymplecticSpace::standard(int n)
{
  if (n < 1)
    throw InputError("standard symplectic space needs n >= 1");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
  {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return SymplecticSpace(j);
}

bool is_self_adjoint(const SymplecticSpace& sp, const Eigen::MatrixXd& a,
                     double tol)
{
  require_square(sp, a);
  const Eigen::MatrixXd& j = sp.gram();
  return linalg::max_abs(a.transpose() * j - j * a) <= tol;
}

Eigen::MatrixXd jordan_product(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw InputError("Jordan product of mismatched operators");
  return 0.5 * (a * b + b * a);
}

Eigen::MatrixXd cyclic_subspace(const SymplecticSpace& sp,
                                const Eigen::MatrixXd& a,
                                const Eigen::VectorXd& v)
{
  require_square(sp, a);
  if (v.size() != sp.dim())
    throw InputError("vector dimension does not match the symplectic space");
  if (v.norm() == 0.0)
    throw InputError("cyclic subspace of the zero vector");
  // Arnoldi: extend the orthonormal basis while A q_last has a component
  // outside the current span.
  const int n = sp.dim();
  const double cutoff = linalg::kRankTol * std::max(a.norm(), 1.0);
  Eigen::MatrixXd q(n, n);
  q.col(0) = v / v.norm();
  int cols = 1;
  while (cols < n)
  {
    Eigen::VectorXd y = a * q.col(cols - 1);
    for (int pass = 0; pass < 2; ++pass)
      y -= q.leftCols(cols) * (q.leftCols(cols).transpose() * y);
    const double norm = y.norm();
    if (norm <= cutoff)
      break;
    q.col(cols++) = y / norm;
  }
  Eigen::MatrixXd basis = q.leftCols(cols);
  linalg::normalize_signs(basis);
  return basis;
}

bool is_lagrangian(const SymplecticSpace& sp, const Eigen::MatrixXd& plane)
{
  if (plane.rows() != sp.dim())
    throw InputError("plane vectors have the wrong dimension");
  const Eigen::MatrixXd q = linalg::orthonormal_basis(plane);
  if (q.cols() != plane.cols())
    throw InputError("plane spanning vectors are linearly dependent");
  if (2 * q.cols() != sp.dim())
    return false;
  return linalg::max_abs(q.transpose() * sp.gram() * q) <= 1e-10;
}

std::string_view to_string(OperatorType type)
{
  switch (type)
  {
  case OperatorType::Scalar:
    return "scalar";
  case OperatorType::Elliptic:
    return "elliptic";
  case OperatorType::Hyperbolic:
    return "hyperbolic";
  case OperatorType::Parabolic:
    return "parabolic";
  }
  return "?";
}

ClassificationResult classify_dim4(const SymplecticSpace& sp,
                                   const Eigen::MatrixXd& a,
                                   const ClassifyOptions& options)
{
  if (sp.dim() != 4)
    throw InputError("classify_dim4 needs a 4-dimensional symplectic space");
  require_square(sp, a);
  const double amax = linalg::max_abs(a);
  const double scale = std::max(1.0, amax);
  if (!is_self_adjoint(sp, a, options.tol * scale * linalg::max_abs(sp.gram())))
    throw InputError("operator is not symplectic self-adjoint");

  ClassificationResult result;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);

  // Scalar operators are excluded from the quadratic analysis.
  const double c = a.trace() / 4.0;
  if (linalg::max_abs(a - c * id) <= options.tol * scale)
  {
    result.type = OperatorType::Scalar;
    result.minimal_polynomial = {-c, 1.0};
    result.eigenvalues.assign(4, c);
    return result;
  }

  // Least-squares fit A^2 = s A + t I, so t^2 - s t - t0 is the minimal
  // polynomial.
  const Eigen::MatrixXd a2 = a * a;
  Eigen::MatrixXd design(16, 2);
  design.col(0) = a.reshaped();
  design.col(1) = id.reshaped();
  const Eigen::VectorXd rhs = a2.reshaped();
  const Eigen::Vector2d st = design.colPivHouseholderQr().solve(rhs);
  result.fit_residual = linalg::max_abs(a2 - st(0) * a - st(1) * id);
  if (result.fit_residual > options.tol * scale * scale)
    throw NumericError("A^2 is not in span{I, A}: minimal polynomial is not quadratic");

  const double p = -st(0);
  const double q = -st(1);
  const double d = p * p - 4.0 * q;
  result.minimal_polynomial = {q, p, 1.0};
  result.discriminant = d;

  const double band = options.parabolic_band >= 0.0
                          ? options.parabolic_band
                          : options.tol * a.squaredNorm();

  if (d < -band)
  {
    result.type = OperatorType::Elliptic;
    const double re = -p / 2.0;
    const double im = std::sqrt(-d) / 2.0;
    result.complex_structure = (a - re * id) / im;
    for (int k = 0; k < 2; ++k)
    {
      result.eigenvalues.emplace_back(re, im);
      result.eigenvalues.emplace_back(re, -im);
    }
    return result;
  }

  if (d > band)
  {
    result.type = OperatorType::Hyperbolic;
    const double l1 = (-p + std::sqrt(d)) / 2.0;
    const double l2 = (-p - std::sqrt(d)) / 2.0;
    auto [k1, r1] = forced_kernel(a - l1 * id, 2);
    auto [k2, r2] = forced_kernel(a - l2 * id, 2);
    const double limit = std::max(1e-8, 4.0 * std::sqrt(band) / scale);
    if (r1 > limit || r2 > limit)
      throw NumericError("hyperbolic eigenspaces are not 2-dimensional");
    result.eigenplane1 = k1;
    result.eigenplane2 = k2;
    result.eigenvalues = {l1, l1, l2, l2};
    return result;
  }

  result.type = OperatorType::Parabolic;
  const double lambda = -p / 2.0;
  const Eigen::MatrixXd b = a - lambda * id;
  auto [w, r] = forced_kernel(b, 2);
  const double limit = std::max(1e-8, 4.0 * std::sqrt(band) / scale);
  if (r > limit)
    throw NumericError("parabolic eigenspace is not 2-dimensional");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeFullU);
  Eigen::MatrixXd image = svd.matrixU().leftCols(2);
  linalg::normalize_signs(image);
  result.lagrangian_plane = w;
  result.image_plane = image;
  result.eigenvalues.assign(4, lambda);
  return result;
}

Eigen::MatrixXd nilpotent_from_lagrangian(const SymplecticSpace& sp,
                                          const Eigen::MatrixXd& w,
                                          const Eigen::MatrixXd& u)
{
  if (sp.dim() != 4 || w.rows() != 4 || u.rows() != 4 || w.cols() != 2
      || u.cols() != 2)
    throw InputError("nilpotent_from_lagrangian works with planes in a 4-dimensional space");
  if (!is_lagrangian(sp, w))
    throw InputError("W is not a Lagrangian plane");
  if (is_lagrangian(sp, u))
    throw InputError("U is Lagrangian; the construction needs a non-Lagrangian complement");
  Eigen::MatrixXd frame(4, 4);
  frame << u, w;
  if (linalg::rank(frame) != 4)
    throw InputError("U is not complementary to W");

  // G(i, j) = <u_i, w_j>; h(u_i) = sum_j H(j, i) w_j. The requirement
  // <u, h(u)> = 0 for all u in U says G H is antisymmetric.
  const Eigen::Matrix2d g = u.transpose() * sp.gram() * w;
  Eigen::Matrix2d e;
  e << 0.0, 1.0, -1.0, 0.0;
  const Eigen::Matrix2d h = g.inverse() * e;

  // Coordinates of v in the (U, W) frame; keep the U part.
  Eigen::MatrixXd select = Eigen::MatrixXd::Zero(2, 4);
  select(0, 0) = 1.0;
  select(1, 1) = 1.0;
  return w * h * select * frame.inverse();
}

Eigen::MatrixXd direct_sum_operator(const Eigen::MatrixXd& f)
{
  if (f.rows() != f.cols() || f.rows() == 0)
    throw InputError("direct_sum_operator needs a nonempty square matrix");
  const Eigen::Index n = f.rows();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  a.topLeftCorner(n, n) = f;
  a.bottomRightCorner(n, n) = f.transpose();
  return a;
}

} // namespace cma
