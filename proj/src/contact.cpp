#include "cma/contact.h"
#include "cma/error.h"

namespace cma
{
namespace
{
void require_darboux(const Expr& e)
{
  if (e.variables().size() != 5)
    throw InputError("expected an expression over (x1, x2, u, p1, p2)");
}

FieldJet frame_field_jet(int i, const DarbouxPoint& pt)
{
  const auto c = pt.coords();
  auto layout = std::make_shared<const JetLayout>(5, 1);
  std::vector<double> base(c.begin(), c.end());
  auto zero = [&] { return Jet::constant(layout, base, 0.0); };
  auto one = [&] { return Jet::constant(layout, base, 1.0); };
  switch (i)
  {
  case 0:
    return {one(), zero(), Jet::variable(layout, base, 3), zero(), zero()};
  case 1:
    return {zero(), one(), Jet::variable(layout, base, 4), zero(), zero()};
  case 2:
    return {zero(), zero(), zero(), one(), zero()};
  default:
    return {zero(), zero(), zero(), zero(), one()};
  }
}
} // namespace

const std::vector<std::string>& darboux_variables()
{
  static const std::vector<std::string> vars{"x1", "x2", "u", "p1", "p2"};
  return vars;
}

DarbouxPoint DarbouxPoint::from(std::span<const double> c)
{
  if (c.size() != 5)
    throw InputError("a Darboux point has 5 coordinates");
  return {c[0], c[1], c[2], c[3], c[4]};
}

double contact_form_value(const DarbouxPoint& pt, const VectorFieldValue& z)
{
  return z[2] - pt.p1 * z[0] - pt.p2 * z[1];
}

std::array<VectorFieldValue, 4> distribution_frame(const DarbouxPoint& pt)
{
  return {{{1.0, 0.0, pt.p1, 0.0, 0.0},
           {0.0, 1.0, pt.p2, 0.0, 0.0},
           {0.0, 0.0, 0.0, 1.0, 0.0},
           {0.0, 0.0, 0.0, 0.0, 1.0}}};
}

Eigen::Matrix4d curvature_gram()
{
  Eigen::Matrix4d r = Eigen::Matrix4d::Zero();
  r(0, 2) = -1.0;
  r(2, 0) = 1.0;
  r(1, 3) = -1.0;
  r(3, 1) = 1.0;
  return r;
}

Eigen::Vector4d to_distribution_frame(const VectorFieldValue& z)
{
  return {z[0], z[1], z[3], z[4]};
}

VectorFieldValue commutator(const FieldJet& v, const FieldJet& w)
{
  VectorFieldValue r{};
  int e[5];
  for (int k = 0; k < 5; ++k)
  {
    double s = 0.0;
    for (int j = 0; j < 5; ++j)
    {
      std::fill(std::begin(e), std::end(e), 0);
      e[j] = 1;
      const std::span<const int> ej(e, 5);
      s += v[j].value() * w[k].coefficient(ej)
           - w[j].value() * v[k].coefficient(ej);
    }
    r[k] = s;
  }
  return r;
}

FieldJet contact_field_jet(const Jet& nu)
{
  if (nu.nvars() != 5 || nu.order() < 1)
    throw InputError("contact_field_jet needs a 5-variable jet of order >= 1");
  const int k = nu.order() - 1;
  const Jet n = nu.truncate(k);
  const Jet nx1 = nu.differentiate(0), nx2 = nu.differentiate(1),
            nu_u = nu.differentiate(2), np1 = nu.differentiate(3),
            np2 = nu.differentiate(4);
  const Jet p1 = Jet::variable(n.layout_ptr(), n.base(), 3);
  const Jet p2 = Jet::variable(n.layout_ptr(), n.base(), 4);
  return {-np1, -np2, n - p1 * np1 - p2 * np2, nx1 + p1 * nu_u,
          nx2 + p2 * nu_u};
}

VectorFieldValue contact_field(const Expr& nu, const DarbouxPoint& pt)
{
  require_darboux(nu);
  const FieldJet x = contact_field_jet(nu.eval_jet(pt.coords(), 1));
  VectorFieldValue v;
  for (int i = 0; i < 5; ++i)
    v[i] = x[i].value();
  return v;
}

double contact_field_defect(const std::array<Expr, 5>& z,
                            std::span<const DarbouxPoint> points)
{
  double worst = 0.0;
  for (const auto& pt : points)
  {
    const auto c = pt.coords();
    FieldJet zj{z[0].eval_jet(c, 1), z[1].eval_jet(c, 1), z[2].eval_jet(c, 1),
                z[3].eval_jet(c, 1), z[4].eval_jet(c, 1)};
    for (const auto& comp : zj)
      if (comp.nvars() != 5)
        throw InputError("vector field components must be expressions over (x1, x2, u, p1, p2)");
    for (int i = 0; i < 4; ++i)
    {
      const VectorFieldValue br = commutator(frame_field_jet(i, pt), zj);
      worst = std::max(worst, std::abs(contact_form_value(pt, br)));
    }
  }
  return worst;
}

bool is_contact_field(const std::array<Expr, 5>& z,
                      std::span<const DarbouxPoint> points, double tol)
{
  return contact_field_defect(z, points) <= tol;
}

double lagrange_bracket(const Expr& mu, const Expr& nu, const DarbouxPoint& pt)
{
  require_darboux(mu);
  require_darboux(nu);
  const auto c = pt.coords();
  const FieldJet xm = contact_field_jet(mu.eval_jet(c, 2));
  const FieldJet xn = contact_field_jet(nu.eval_jet(c, 2));
  return contact_form_value(pt, commutator(xm, xn));
}

} // namespace cma
