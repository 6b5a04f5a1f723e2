#pragma once

#include "cma/expr.h"

#include <array>
#include <string_view>

namespace cma
{

/// The three two-dimensional unital real algebras x + y*zeta.
enum class ZetaKind
{
  Minus, ///< zeta^2 = -1, complex numbers
  Zero,  ///< zeta^2 = 0, dual numbers
  Plus   ///< zeta^2 = +1, double (split-complex) numbers
};

/// zeta^2 as a real number: -1, 0 or +1.
double zeta_square(ZetaKind kind);

std::string_view to_string(ZetaKind kind);
/// Accepts "minus", "zero", "plus" (also "elliptic", "parabolic",
/// "hyperbolic"). Throws InputError otherwise.
ZetaKind parse_zeta_kind(std::string_view text);

struct ZetaNum
{
  double re = 0.0;
  double im = 0.0;
  ZetaKind kind = ZetaKind::Minus;

  static ZetaNum one(ZetaKind kind) { return {1.0, 0.0, kind}; }
};

/// Throws InputError when the kinds differ.
ZetaNum operator+(const ZetaNum& a, const ZetaNum& b);
ZetaNum operator-(const ZetaNum& a, const ZetaNum& b);
ZetaNum operator*(const ZetaNum& a, const ZetaNum& b);
ZetaNum operator*(double s, const ZetaNum& a);

/// z^k by repeated multiplication; pow(z, 0) is the unit.
ZetaNum pow(const ZetaNum& z, int k);

/// Product (1 + 1/l)(2 + 1/l)...(s + 1/l); equals 1 for s = 0.
double frac_factorial(int s, int l);

/// f_xx - zeta^2 f_yy at `point`; f must be an expression in two variables.
double zeta_laplace_residual(const Expr& f, std::array<double, 2> point,
                             ZetaKind kind);

/// (u_x + zeta^2 v_y, u_y - zeta^2 v_x), the residuals of the system
/// u_x = -zeta^2 v_y, u_y = zeta^2 v_x. For zeta^2 = -1 this is the usual
/// Cauchy-Riemann system. For zeta^2 = +1 eliminating v gives
/// u_xx + u_yy = 0 rather than the zeta-Laplace equation.
std::array<double, 2> cauchy_riemann_residual(const Expr& u, const Expr& v,
                                              std::array<double, 2> point,
                                              ZetaKind kind);

} // namespace cma
