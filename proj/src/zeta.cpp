#include "cma/zeta.h"
#include "cma/error.h"

#include <string>

namespace cma
{
namespace
{
void require_same(const ZetaNum& a, const ZetaNum& b)
{
  if (a.kind != b.kind)
    throw InputError("zeta-number kind mismatch");
}

Jet plane_jet(const Expr& f, std::array<double, 2> point, int order)
{
  if (f.variables().size() != 2)
    throw InputError("expected an expression in two variables");
  return f.eval_jet(point, order);
}
} // namespace

double zeta_square(ZetaKind kind)
{
  switch (kind)
  {
  case ZetaKind::Minus:
    return -1.0;
  case ZetaKind::Zero:
    return 0.0;
  case ZetaKind::Plus:
    return 1.0;
  }
  return 0.0;
}

std::string_view to_string(ZetaKind kind)
{
  switch (kind)
  {
  case ZetaKind::Minus:
    return "minus";
  case ZetaKind::Zero:
    return "zero";
  case ZetaKind::Plus:
    return "plus";
  }
  return "?";
}

ZetaKind parse_zeta_kind(std::string_view text)
{
  if (text == "minus" || text == "elliptic")
    return ZetaKind::Minus;
  if (text == "zero" || text == "parabolic")
    return ZetaKind::Zero;
  if (text == "plus" || text == "hyperbolic")
    return ZetaKind::Plus;
  throw InputError("unknown zeta kind '" + std::string(text) + "'");
}

ZetaNum operator+(const ZetaNum& a, const ZetaNum& b)
{
  require_same(a, b);
  return {a.re + b.re, a.im + b.im, a.kind};
}

ZetaNum operator-(const ZetaNum& a, const ZetaNum& b)
{
  require_same(a, b);
  return {a.re - b.re, a.im - b.im, a.kind};
}

ZetaNum operator*(const ZetaNum& a, const ZetaNum& b)
{
  require_same(a, b);
  const double z2 = zeta_square(a.kind);
  return {a.re * b.re + z2 * a.im * b.im, a.re * b.im + a.im * b.re, a.kind};
}

ZetaNum operator*(double s, const ZetaNum& a)
{
  return {s * a.re, s * a.im, a.kind};
}

ZetaNum pow(const ZetaNum& z, int k)
{
  if (k < 0)
    throw InputError("negative zeta power");
  ZetaNum r = ZetaNum::one(z.kind);
  for (int i = 0; i < k; ++i)
    r = r * z;
  return r;
}

double frac_factorial(int s, int l)
{
  if (s < 0 || l < 2)
    throw InputError("frac_factorial needs s >= 0 and l >= 2");
  double r = 1.0;
  for (int j = 1; j <= s; ++j)
    r *= j + 1.0 / l;
  return r;
}

double zeta_laplace_residual(const Expr& f, std::array<double, 2> point,
                             ZetaKind kind)
{
  const Jet j = plane_jet(f, point, 2);
  return j.derivative({2, 0}) - zeta_square(kind) * j.derivative({0, 2});
}

std::array<double, 2> cauchy_riemann_residual(const Expr& u, const Expr& v,
                                              std::array<double, 2> point,
                                              ZetaKind kind)
{
  const Jet ju = plane_jet(u, point, 1);
  const Jet jv = plane_jet(v, point, 1);
  const double z2 = zeta_square(kind);
  return {ju.derivative({1, 0}) + z2 * jv.derivative({0, 1}),
          ju.derivative({0, 1}) - z2 * jv.derivative({1, 0})};
}

} // namespace cma
