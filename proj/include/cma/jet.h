#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace cma
{

using MultiIndex = std::vector<int>;

/// Coefficient layout of a truncated multivariate Taylor polynomial: every
/// multi-index with |alpha| <= order, in graded lexicographic order (by total
/// degree, then lexicographically descending within a degree).
class JetLayout
{
public:
  JetLayout(int nvars, int order);

  int nvars() const { return _nvars; }
  int order() const { return _order; }
  std::size_t size() const { return _indices.size(); }

  const MultiIndex& index(std::size_t position) const
  {
    return _indices[position];
  }

  /// Position of `alpha` in the layout. Throws InputError if |alpha| > order
  /// or the arity is wrong.
  std::size_t position(std::span<const int> alpha) const;

  /// Pairs (i, j) with index(i) + index(j) == index(target).
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>&
  product_pairs(std::size_t target) const
  {
    return _pairs[target];
  }

  /// Position of index(i) + e_var, or npos if that exceeds the order.
  std::size_t raise(std::size_t i, int var) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t key(std::span<const int> alpha) const;

  int _nvars;
  int _order;
  std::vector<MultiIndex> _indices;
  std::vector<std::size_t> _lookup;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> _pairs;
};

/// Truncated Taylor expansion of a function at a base point. Coefficient of
/// multi-index alpha is (d^alpha f)(base) / alpha!.
class Jet
{
public:
  Jet(std::shared_ptr<const JetLayout> layout, std::vector<double> base);

  static Jet constant(std::shared_ptr<const JetLayout> layout,
                      std::vector<double> base, double value);
  /// The coordinate function x_var expanded at base.
  static Jet variable(std::shared_ptr<const JetLayout> layout,
                      std::vector<double> base, int var);

  const JetLayout& layout() const { return *_layout; }
  const std::shared_ptr<const JetLayout>& layout_ptr() const
  {
    return _layout;
  }
  const std::vector<double>& base() const { return _base; }
  int order() const { return _layout->order(); }
  int nvars() const { return _layout->nvars(); }

  double value() const { return _coeffs[0]; }
  double coefficient(std::span<const int> alpha) const;
  double coefficient_at(std::size_t position) const
  {
    return _coeffs[position];
  }
  std::span<const double> coefficients() const { return _coeffs; }
  std::span<double> coefficients() { return _coeffs; }

  /// Partial derivative d^alpha f at the base point.
  double derivative(std::span<const int> alpha) const;
  double derivative(std::initializer_list<int> alpha) const
  {
    return derivative(std::span<const int>(alpha.begin(), alpha.size()));
  }

  /// Jet of d f / d x_var, one order lower.
  Jet differentiate(int var) const;
  /// Drop all terms above `order`.
  Jet truncate(int order) const;

  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator-(Jet a)
  {
    for (double& c : a._coeffs)
      c = -c;
    return a;
  }
  friend Jet operator+(Jet a, double s)
  {
    a._coeffs[0] += s;
    return a;
  }
  /// Product truncated at the common order.
  friend Jet operator*(const Jet& a, const Jet& b);
  /// Quotient; throws DomainError if b has a zero constant term.
  friend Jet operator/(const Jet& a, const Jet& b);

private:
  void check_compatible(const Jet& other) const;

  std::shared_ptr<const JetLayout> _layout;
  std::vector<double> _base;
  std::vector<double> _coeffs;
};

/// x^n for integer n by binary exponentiation; shared by scalar and jet
/// evaluation so both agree bit for bit at order zero.
double ipow(double x, int n);
Jet pow(const Jet& a, int n);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);

/// Compose a univariate series with a jet: sum_m taylor[m] * (a - a0)^m,
/// where taylor[m] = g^(m)(a0) / m!.
Jet compose(const Jet& a, std::span<const double> taylor);

} // namespace cma
