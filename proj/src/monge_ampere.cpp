#include "cma/monge_ampere.h"
#include "cma/error.h"
#include "cma/linalg.h"

#include <cmath>

namespace cma
{
namespace
{
Expr parse_coefficient(std::string_view name, std::string_view text)
{
  try
  {
    return Expr::parse(text, darboux_variables());
  }
  catch (const ParseError& e)
  {
    std::string msg = e.what();
    const std::string suffix = " at offset " + std::to_string(e.offset());
    if (msg.ends_with(suffix))
      msg.resize(msg.size() - suffix.size());
    throw ParseError("coefficient " + std::string(name) + ": " + msg,
                     e.offset());
  }
}

void require_darboux(const Expr& e, const char* name)
{
  if (e.variables() != darboux_variables())
    throw InputError(std::string("coefficient ") + name
                     + " must be an expression over (x1, x2, u, p1, p2)");
}

Jet solution_jet(const Expr& f, std::array<double, 2> base, int order)
{
  if (f.variables().size() != 2)
    throw InputError("a candidate solution is an expression in (x1, x2)");
  return f.eval_jet(base, order);
}

std::string number_text(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
} // namespace

MAEquation::MAEquation(Expr n, Expr a, Expr b, Expr c, Expr d)
    : _n(std::move(n)), _a(std::move(a)), _b(std::move(b)), _c(std::move(c)),
      _d(std::move(d))
{
  require_darboux(_n, "N");
  require_darboux(_a, "A");
  require_darboux(_b, "B");
  require_darboux(_c, "C");
  require_darboux(_d, "D");
}

MAEquation MAEquation::parse(std::string_view n, std::string_view a,
                             std::string_view b, std::string_view c,
                             std::string_view d)
{
  return MAEquation(parse_coefficient("N", n), parse_coefficient("A", a),
                    parse_coefficient("B", b), parse_coefficient("C", c),
                    parse_coefficient("D", d));
}

MAEquation MAEquation::constant(const Coefficients& k)
{
  return parse(number_text(k.N), number_text(k.A), number_text(k.B),
               number_text(k.C), number_text(k.D));
}

Coefficients MAEquation::at(const DarbouxPoint& pt) const
{
  const auto c = pt.coords();
  return {_n.eval(c), _a.eval(c), _b.eval(c), _c.eval(c), _d.eval(c)};
}

std::string_view to_string(EquationType type)
{
  switch (type)
  {
  case EquationType::Elliptic:
    return "elliptic";
  case EquationType::Parabolic:
    return "parabolic";
  case EquationType::Hyperbolic:
    return "hyperbolic";
  }
  return "?";
}

DarbouxPoint lift_point(const Expr& f, std::array<double, 2> base)
{
  const Jet j = solution_jet(f, base, 1);
  return {base[0], base[1], j.value(), j.derivative({1, 0}),
          j.derivative({0, 1})};
}

double discriminant(const Coefficients& k)
{
  return k.B * k.B - 4.0 * k.A * k.C + 4.0 * k.N * k.D;
}

double discriminant(const MAEquation& eq, const DarbouxPoint& pt)
{
  return discriminant(eq.at(pt));
}

EquationType classify(double delta, double tol)
{
  if (delta < -tol)
    return EquationType::Elliptic;
  if (delta > tol)
    return EquationType::Hyperbolic;
  return EquationType::Parabolic;
}

EquationType classify(const MAEquation& eq, const DarbouxPoint& pt, double tol)
{
  return classify(discriminant(eq, pt), tol);
}

Eigen::Matrix4d structure_operator(const Coefficients& k)
{
  Eigen::Matrix4d m;
  // clang-format off
  m <<  k.B,       -2.0 * k.A,  0.0,        -2.0 * k.N,
        2.0 * k.C, -k.B,        2.0 * k.N,   0.0,
        0.0,        2.0 * k.D,  k.B,         2.0 * k.C,
       -2.0 * k.D,  0.0,       -2.0 * k.A,  -k.B;
  // clang-format on
  return m;
}

Eigen::Matrix4d structure_operator(const MAEquation& eq, const DarbouxPoint& pt)
{
  return structure_operator(eq.at(pt));
}

Coefficients coefficients_from_operator(const Eigen::Matrix4d& m,
                                        double* template_residual)
{
  Coefficients k;
  k.B = m(0, 0);
  k.A = -m(0, 1) / 2.0;
  k.N = -m(0, 3) / 2.0;
  k.C = m(1, 0) / 2.0;
  k.D = m(2, 1) / 2.0;
  if (template_residual)
    *template_residual = linalg::max_abs(m - structure_operator(k));
  return k;
}

double residual(const MAEquation& eq, const Expr& f, std::array<double, 2> base)
{
  const Jet j = solution_jet(f, base, 2);
  const DarbouxPoint pt{base[0], base[1], j.value(), j.derivative({1, 0}),
                        j.derivative({0, 1})};
  const Coefficients k = eq.at(pt);
  const double f11 = j.derivative({2, 0});
  const double f12 = j.derivative({1, 1});
  const double f22 = j.derivative({0, 2});
  return k.N * (f11 * f22 - f12 * f12) + k.A * f11 + k.B * f12 + k.C * f22
         + k.D;
}

std::array<VectorFieldValue, 2> tangent_frame(const Expr& f,
                                              std::array<double, 2> base)
{
  const Jet j = solution_jet(f, base, 2);
  const double p1 = j.derivative({1, 0}), p2 = j.derivative({0, 1});
  const double f11 = j.derivative({2, 0});
  const double f12 = j.derivative({1, 1});
  const double f22 = j.derivative({0, 2});
  return {{{1.0, 0.0, p1, f11, f12}, {0.0, 1.0, p2, f12, f22}}};
}

InvarianceReport invariance_defect(const MAEquation& eq, const Expr& f,
                                   std::array<double, 2> base)
{
  const Jet j = solution_jet(f, base, 2);
  InvarianceReport rep;
  rep.point = {base[0], base[1], j.value(), j.derivative({1, 0}),
               j.derivative({0, 1})};
  const double f11 = j.derivative({2, 0});
  const double f12 = j.derivative({1, 1});
  const double f22 = j.derivative({0, 2});
  const Coefficients k = eq.at(rep.point);
  const double e = k.N * (f11 * f22 - f12 * f12) + k.A * f11 + k.B * f12
                   + k.C * f22 + k.D;
  rep.residual = e;

  const Eigen::Matrix4d m = structure_operator(k);
  const Eigen::Vector4d z1(1.0, 0.0, f11, f12);
  const Eigen::Vector4d z2(0.0, 1.0, f12, f22);
  const Eigen::Vector4d e3(0.0, 0.0, 1.0, 0.0);
  const Eigen::Vector4d e4(0.0, 0.0, 0.0, 1.0);

  // Coordinates in the basis (Z1, Z2, d/dp1, d/dp2): the Z-coefficients are
  // the first two entries, the remainder is what Z1, Z2 cannot absorb.
  auto remainder = [&](const Eigen::Vector4d& w)
  {
    return Eigen::Vector2d(w(2) - w(0) * f11 - w(1) * f12,
                           w(3) - w(0) * f12 - w(1) * f22);
  };
  const Eigen::Vector4d az1 = m * z1;
  const Eigen::Vector4d az2 = m * z2;
  rep.defect_z1 = remainder(az1).norm();
  rep.defect_z2 = remainder(az2).norm();
  rep.defect = std::max(rep.defect_z1, rep.defect_z2);

  const Eigen::Vector4d expected1 = (k.B - 2.0 * f12 * k.N) * z1
                                    + 2.0 * (k.C + f11 * k.N) * z2
                                    - 2.0 * e * e4;
  const Eigen::Vector4d expected2 = -2.0 * (k.A + f22 * k.N) * z1
                                    + (2.0 * f12 * k.N - k.B) * z2
                                    + 2.0 * e * e3;
  rep.decomposition_z1 = (az1 - expected1).cwiseAbs().maxCoeff();
  rep.decomposition_z2 = (az2 - expected2).cwiseAbs().maxCoeff();
  return rep;
}

BasicAlgebra basic_algebra(const MAEquation& eq, const DarbouxPoint& pt)
{
  BasicAlgebra alg;
  alg.identity = Eigen::Matrix4d::Identity();
  alg.generator = structure_operator(eq, pt);
  if (linalg::max_abs(alg.generator) == 0.0)
    throw NumericError("structure operator vanishes: equation is degenerate at this point");
  alg.classification
      = classify_dim4(SymplecticSpace(curvature_gram()), alg.generator);

  const Eigen::Matrix4d sq = jordan_product(alg.generator, alg.generator);
  Eigen::MatrixXd design(16, 2);
  design.col(0) = alg.identity.reshaped();
  design.col(1) = alg.generator.reshaped();
  const Eigen::VectorXd rhs = sq.reshaped();
  const Eigen::Vector2d c = design.colPivHouseholderQr().solve(rhs);
  alg.jordan_closure_residual
      = linalg::max_abs(sq - c(0) * alg.identity - c(1) * alg.generator);
  return alg;
}

DarbouxPoint PartialLegendre::map(const DarbouxPoint& pt) const
{
  return {pt.p1, pt.x2, pt.u - pt.x1 * pt.p1, -pt.x1, pt.p2};
}

Eigen::Matrix<double, 5, 5> PartialLegendre::jacobian(const DarbouxPoint& pt) const
{
  Eigen::Matrix<double, 5, 5> jac = Eigen::Matrix<double, 5, 5>::Zero();
  jac(0, 3) = 1.0;     // X1 = p1
  jac(1, 1) = 1.0;     // X2 = x2
  jac(2, 2) = 1.0;     // U = u - x1 p1
  jac(2, 0) = -pt.p1;
  jac(2, 3) = -pt.x1;
  jac(3, 0) = -1.0;    // P1 = -x1
  jac(4, 4) = 1.0;     // P2 = p2
  return jac;
}

Eigen::Matrix4d PartialLegendre::frame_map(const DarbouxPoint& pt) const
{
  const auto jac = jacobian(pt);
  const auto frame = distribution_frame(pt);
  Eigen::Matrix4d t;
  for (int c = 0; c < 4; ++c)
  {
    Eigen::Matrix<double, 5, 1> v;
    for (int r = 0; r < 5; ++r)
      v(r) = frame[c][r];
    const Eigen::Matrix<double, 5, 1> image = jac * v;
    t.col(c) = Eigen::Vector4d(image(0), image(1), image(3), image(4));
  }
  return t;
}

Eigen::Matrix4d PartialLegendre::push_forward(const Eigen::Matrix4d& op,
                                              const DarbouxPoint& pt) const
{
  const Eigen::Matrix4d t = frame_map(pt);
  return t * op * t.inverse();
}

} // namespace cma
