#include "cma/jet.h"
#include "cma/error.h"

#include <cmath>
#include <numeric>

namespace cma
{
namespace
{
void append_degree(int nvars, int degree, MultiIndex& prefix,
                   std::vector<MultiIndex>& out)
{
  const int slot = static_cast<int>(prefix.size());
  if (slot == nvars - 1)
  {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int d = degree; d >= 0; --d)
  {
    prefix.push_back(d);
    append_degree(nvars, degree - d, prefix, out);
    prefix.pop_back();
  }
}

int total_degree(const MultiIndex& alpha)
{
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

double factorial_of(const MultiIndex& alpha)
{
  double f = 1.0;
  for (int a : alpha)
    for (int i = 2; i <= a; ++i)
      f *= i;
  return f;
}
} // namespace

JetLayout::JetLayout(int nvars, int order) : _nvars(nvars), _order(order)
{
  if (nvars < 1)
    throw InputError("jet layout needs at least one variable");
  if (order < 0)
    throw InputError("jet order must be nonnegative");

  MultiIndex prefix;
  for (int d = 0; d <= order; ++d)
    append_degree(nvars, d, prefix, _indices);

  std::size_t table = 1;
  for (int i = 0; i < nvars; ++i)
    table *= static_cast<std::size_t>(order + 1);
  _lookup.assign(table, npos);
  for (std::size_t i = 0; i < _indices.size(); ++i)
    _lookup[key(_indices[i])] = i;

  _pairs.resize(_indices.size());
  MultiIndex sum(nvars);
  for (std::size_t i = 0; i < _indices.size(); ++i)
  {
    for (std::size_t j = 0; j < _indices.size(); ++j)
    {
      int deg = 0;
      for (int v = 0; v < nvars; ++v)
      {
        sum[v] = _indices[i][v] + _indices[j][v];
        deg += sum[v];
      }
      if (deg > order)
        continue;
      _pairs[_lookup[key(sum)]].emplace_back(static_cast<std::uint32_t>(i),
                                             static_cast<std::uint32_t>(j));
    }
  }
}

std::size_t JetLayout::key(std::span<const int> alpha) const
{
  std::size_t k = 0;
  for (int a : alpha)
    k = k * static_cast<std::size_t>(_order + 1) + static_cast<std::size_t>(a);
  return k;
}

std::size_t JetLayout::position(std::span<const int> alpha) const
{
  if (static_cast<int>(alpha.size()) != _nvars)
    throw InputError("multi-index arity does not match jet variable count");
  int deg = 0;
  for (int a : alpha)
  {
    if (a < 0)
      throw InputError("negative multi-index entry");
    deg += a;
  }
  if (deg > _order)
    throw InputError("multi-index exceeds jet order");
  return _lookup[key(alpha)];
}

std::size_t JetLayout::raise(std::size_t i, int var) const
{
  MultiIndex alpha = _indices[i];
  alpha[var] += 1;
  if (total_degree(alpha) > _order)
    return npos;
  return _lookup[key(alpha)];
}

Jet::Jet(std::shared_ptr<const JetLayout> layout, std::vector<double> base)
    : _layout(std::move(layout)), _base(std::move(base)),
      _coeffs(_layout->size(), 0.0)
{
  if (static_cast<int>(_base.size()) != _layout->nvars())
    throw InputError("jet base point has wrong dimension");
}

Jet Jet::constant(std::shared_ptr<const JetLayout> layout,
                  std::vector<double> base, double value)
{
  Jet j(std::move(layout), std::move(base));
  j._coeffs[0] = value;
  return j;
}

Jet Jet::variable(std::shared_ptr<const JetLayout> layout,
                  std::vector<double> base, int var)
{
  if (var < 0 || var >= layout->nvars())
    throw InputError("variable index out of range");
  Jet j(std::move(layout), std::move(base));
  j._coeffs[0] = j._base[var];
  if (j.order() >= 1)
  {
    MultiIndex e(j.nvars(), 0);
    e[var] = 1;
    j._coeffs[j._layout->position(e)] = 1.0;
  }
  return j;
}

double Jet::coefficient(std::span<const int> alpha) const
{
  return _coeffs[_layout->position(alpha)];
}

double Jet::derivative(std::span<const int> alpha) const
{
  const std::size_t p = _layout->position(alpha);
  return _coeffs[p] * factorial_of(_layout->index(p));
}

Jet Jet::differentiate(int var) const
{
  if (var < 0 || var >= nvars())
    throw InputError("variable index out of range");
  if (order() == 0)
    throw InputError("cannot differentiate an order-0 jet");
  auto lower = std::make_shared<const JetLayout>(nvars(), order() - 1);
  Jet d(lower, _base);
  for (std::size_t i = 0; i < lower->size(); ++i)
  {
    const std::size_t up = _layout->raise(
        _layout->position(lower->index(i)), var);
    d._coeffs[i] = _coeffs[up] * (lower->index(i)[var] + 1);
  }
  return d;
}

Jet Jet::truncate(int new_order) const
{
  if (new_order > order() || new_order < 0)
    throw InputError("truncation order out of range");
  if (new_order == order())
    return *this;
  auto lower = std::make_shared<const JetLayout>(nvars(), new_order);
  Jet t(lower, _base);
  // Graded layout: the lower-order layout is a prefix of this one.
  std::copy_n(_coeffs.begin(), lower->size(), t._coeffs.begin());
  return t;
}

void Jet::check_compatible(const Jet& other) const
{
  if (other.nvars() != nvars() || other.order() != order())
    throw InputError("jet arithmetic between incompatible layouts");
}

Jet& Jet::operator+=(const Jet& other)
{
  check_compatible(other);
  for (std::size_t i = 0; i < _coeffs.size(); ++i)
    _coeffs[i] += other._coeffs[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& other)
{
  check_compatible(other);
  for (std::size_t i = 0; i < _coeffs.size(); ++i)
    _coeffs[i] -= other._coeffs[i];
  return *this;
}

Jet& Jet::operator*=(double s)
{
  for (double& c : _coeffs)
    c *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b)
{
  a.check_compatible(b);
  Jet r(a._layout, a._base);
  for (std::size_t t = 0; t < r._coeffs.size(); ++t)
  {
    double s = 0.0;
    for (auto [i, j] : a._layout->product_pairs(t))
      s += a._coeffs[i] * b._coeffs[j];
    r._coeffs[t] = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b)
{
  a.check_compatible(b);
  const double b0 = b._coeffs[0];
  if (b0 == 0.0)
    throw DomainError("division by zero");
  Jet q(a._layout, a._base);
  // q_t = (a_t - sum_{i != 0} b_i q_j) / b0, with |j| < |t| already known.
  for (std::size_t t = 0; t < q._coeffs.size(); ++t)
  {
    double s = a._coeffs[t];
    for (auto [i, j] : a._layout->product_pairs(t))
      if (i != 0)
        s -= b._coeffs[i] * q._coeffs[j];
    q._coeffs[t] = s / b0;
  }
  return q;
}

double ipow(double x, int n)
{
  if (n < 0)
  {
    if (x == 0.0)
      throw DomainError("zero raised to a negative power");
    return 1.0 / ipow(x, -n);
  }
  double result = 1.0;
  double b = x;
  unsigned e = static_cast<unsigned>(n);
  bool first = true;
  while (e)
  {
    if (e & 1u)
    {
      result = first ? b : result * b;
      first = false;
    }
    e >>= 1u;
    if (e)
      b = b * b;
  }
  return result;
}

Jet pow(const Jet& a, int n)
{
  if (n < 0)
  {
    Jet one = Jet::constant(a.layout_ptr(), a.base(), 1.0);
    return one / pow(a, -n);
  }
  Jet result = Jet::constant(a.layout_ptr(), a.base(), 1.0);
  Jet b = a;
  unsigned e = static_cast<unsigned>(n);
  bool first = true;
  while (e)
  {
    if (e & 1u)
    {
      result = first ? b : result * b;
      first = false;
    }
    e >>= 1u;
    if (e)
      b = b * b;
  }
  return result;
}

Jet compose(const Jet& a, std::span<const double> taylor)
{
  Jet h = a;
  h.coefficients()[0] = 0.0;
  // Horner: t0 + h (t1 + h (t2 + ...)); truncation makes h^m vanish for m > K.
  const int terms = std::min<int>(static_cast<int>(taylor.size()) - 1,
                                  a.order());
  Jet acc = Jet::constant(a.layout_ptr(), a.base(), taylor[terms]);
  for (int m = terms - 1; m >= 0; --m)
    acc = acc * h + taylor[m];
  return acc;
}

namespace
{
void require_finite(double v, const char* what)
{
  if (!std::isfinite(v))
    throw DomainError(std::string("non-finite result in ") + what);
}
} // namespace

Jet sin(const Jet& a)
{
  const double s = std::sin(a.value()), c = std::cos(a.value());
  std::vector<double> t(a.order() + 1);
  double fact = 1.0;
  for (int m = 0; m <= a.order(); ++m)
  {
    if (m > 0)
      fact *= m;
    const double d[4] = {s, c, -s, -c};
    t[m] = d[m % 4] / fact;
  }
  return compose(a, t);
}

Jet cos(const Jet& a)
{
  const double s = std::sin(a.value()), c = std::cos(a.value());
  std::vector<double> t(a.order() + 1);
  double fact = 1.0;
  for (int m = 0; m <= a.order(); ++m)
  {
    if (m > 0)
      fact *= m;
    const double d[4] = {c, -s, -c, s};
    t[m] = d[m % 4] / fact;
  }
  return compose(a, t);
}

Jet exp(const Jet& a)
{
  const double e = std::exp(a.value());
  require_finite(e, "exp");
  std::vector<double> t(a.order() + 1);
  double fact = 1.0;
  for (int m = 0; m <= a.order(); ++m)
  {
    if (m > 0)
      fact *= m;
    t[m] = e / fact;
  }
  return compose(a, t);
}

Jet log(const Jet& a)
{
  const double x = a.value();
  if (!(x > 0.0))
    throw DomainError("ln of nonpositive argument");
  std::vector<double> t(a.order() + 1);
  t[0] = std::log(x);
  // d^m/dx^m ln x / m! = (-1)^(m-1) / (m x^m)
  for (int m = 1; m <= a.order(); ++m)
    t[m] = ((m % 2) ? 1.0 : -1.0) / (m * ipow(x, m));
  return compose(a, t);
}

Jet sqrt(const Jet& a)
{
  const double x = a.value();
  if (x < 0.0)
    throw DomainError("sqrt of negative argument");
  if (x == 0.0 && a.order() > 0)
    throw DomainError("sqrt is not differentiable at zero");
  std::vector<double> t(a.order() + 1);
  t[0] = std::sqrt(x);
  // binom(1/2, m) x^(1/2 - m)
  double binom = 1.0;
  for (int m = 1; m <= a.order(); ++m)
  {
    binom *= (0.5 - (m - 1)) / m;
    t[m] = binom * t[0] / ipow(x, m);
  }
  return compose(a, t);
}

} // namespace cma
