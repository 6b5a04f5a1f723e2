#include "cma/bends.h"
#include "cma/error.h"
#include "cma/rmanifold.h"
#include "support.h"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace cma;

namespace
{
const ZetaKind kAsserted[] = {ZetaKind::Minus, ZetaKind::Plus};

double max_abs(const std::vector<double>& v)
{
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}
} // namespace

TEST_CASE("jet chart indexing")
{
  CHECK(JetChartPoint::index(0, 0) == 0);
  CHECK(JetChartPoint::index(1, 0) == 1);
  CHECK(JetChartPoint::index(0, 1) == 2);
  CHECK(JetChartPoint::index(2, 0) == 3);
  CHECK(JetChartPoint::index(0, 2) == 5);
  CHECK(JetChartPoint::count(3) == 10);
  const JetChartPoint z = JetChartPoint::zero(4);
  CHECK(z.u.size() == 15);
  CHECK(z.coords().size() == 17);
}

TEST_CASE("prolonged residuals")
{
  JetChartPoint p = JetChartPoint::zero(2);
  p.at(2, 0) = 1.0;
  p.at(0, 2) = -1.0;
  auto r = prolonged_residuals(p, ZetaKind::Minus);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == 0.0);

  JetChartPoint q = JetChartPoint::zero(2);
  q.at(2, 0) = 0.5;
  CHECK(prolonged_residuals(q, ZetaKind::Zero)[0] == 0.5);

  CHECK(max_abs(prolonged_residuals(JetChartPoint::zero(4), ZetaKind::Plus)) == 0.0);
  CHECK(prolonged_residuals(JetChartPoint::zero(4), ZetaKind::Plus).size() == 6);
}

TEST_CASE("nu vectors")
{
  const NuVectors m = nu_vectors(2, ZetaKind::Minus);
  CHECK(m.nu1.at({0, 2}) == 1.0);
  CHECK(m.nu1.at({2, 0}) == -1.0);
  CHECK(m.nu2.at({1, 1}) == 1.0);
  CHECK(m.angle_direct <= 1e-12);

  const NuVectors z = nu_vectors(2, ZetaKind::Zero);
  CHECK(z.nu1.at({0, 2}) == 1.0);
  CHECK(z.nu1.at({2, 0}) == 0.0);
  CHECK(z.nu2.at({1, 1}) == 1.0);

  const NuVectors p = nu_vectors(3, ZetaKind::Plus);
  CHECK(p.nu1.at({0, 3}) == 1.0);
  CHECK(p.nu1.at({2, 1}) == 1.0);
  CHECK(p.nu2.at({1, 2}) == 1.0);
  CHECK(p.nu2.at({3, 0}) == 1.0);

  for (int k = 2; k <= 5; ++k)
  {
    for (ZetaKind kind : kAsserted)
      CHECK(nu_vectors(k, kind).angle_direct <= 1e-9);
    // Zero matches the normal form only after exchanging x and y.
    const NuVectors zk = nu_vectors(k, ZetaKind::Zero);
    CHECK(zk.angle_swapped <= 1e-9);
    CHECK(zk.angle_direct > 0.1);
  }
}

TEST_CASE("points of L_{k,l}")
{
  for (ZetaKind kind : {ZetaKind::Minus, ZetaKind::Zero, ZetaKind::Plus})
  {
    const JetChartPoint o = lkl_point({3, 2, kind}, 0.0, 0.0);
    CHECK(o.x == 0.0);
    CHECK(o.y == 0.0);
    CHECK(max_abs(o.u) == 0.0);
  }

  const JetChartPoint p = lkl_point({2, 2, ZetaKind::Minus}, 1.0, 0.0);
  CHECK(std::abs(p.x - 1.0 / 3.75) <= 1e-15);
  CHECK(std::abs(p.y) <= 1e-15);
  CHECK(p.at(2, 0) == 1.0);
  CHECK(p.at(1, 1) == 0.0);

  // Independent complex-arithmetic oracle for zeta^2 = -1, k = 3, l = 2.
  const double a = 0.4, b = -0.7;
  const std::complex<double> t(a, b);
  const double c = frac_factorial(3, 2);
  const JetChartPoint q = lkl_point({3, 2, ZetaKind::Minus}, a, b);
  const std::complex<double> xy = std::pow(t, 2) / c;
  CHECK(std::abs(q.x - xy.real()) <= 1e-14);
  CHECK(std::abs(q.y + xy.imag()) <= 1e-14);
  for (int r = 1; r <= 3; ++r)
  {
    const std::complex<double> w = std::pow(t, 2 * r + 1) / (frac_factorial(r, 2) * std::pow(c, r));
    CHECK(std::abs(q.at(3 - r, 0) - w.real()) <= 1e-14);
    if (r < 3)
      CHECK(std::abs(q.at(2 - r, 1) - w.imag()) <= 1e-14);
  }
  CHECK_THROWS_AS(lkl_point({1, 2, ZetaKind::Minus}, 0.1, 0.1), InputError);
  CHECK_THROWS_AS(lkl_point({2, 1, ZetaKind::Minus}, 0.1, 0.1), InputError);
}

TEST_CASE("L_{k,l} lies in the prolonged equation")
{
  for (ZetaKind kind : kAsserted)
    for (int k = 2; k <= 4; ++k)
      for (int l = 2; l <= 4; ++l)
        for (const auto& ab : random_params(100, 1.0, 7))
        {
          const JetChartPoint p = lkl_point({k, l, kind}, ab[0], ab[1]);
          CHECK(max_abs(prolonged_residuals(p, kind)) <= 1e-9);
        }
}

TEST_CASE("tangent vectors")
{
  const RManifoldSpec spec{3, 2, ZetaKind::Minus};
  const auto exact = exact_tangent_vectors(spec, 0.5, 0.3);
  double prev = 0.0;
  for (double h : {1e-2, 5e-3, 2.5e-3})
  {
    const auto fd = tangent_vectors(spec, 0.5, 0.3, h);
    double err = 0.0;
    for (int i = 0; i < 2; ++i)
      err = std::max(err, (fd[i] - exact[i].normalized()).cwiseAbs().maxCoeff());
    if (prev > 0.0)
    {
      CHECK(err / prev >= 0.2);
      CHECK(err / prev <= 0.3);
    }
    prev = err;
  }

  // At the origin the (x, y) components vanish, elsewhere the (x, y) block
  // of the differential is invertible.
  const auto o = exact_tangent_vectors(spec, 0.0, 0.0);
  CHECK(o[0].head(2).norm() == 0.0);
  CHECK(o[1].head(2).norm() == 0.0);
  const auto g = exact_tangent_vectors(spec, 0.5, 0.3);
  Eigen::Matrix2d jxy;
  jxy << g[0].head(2), g[1].head(2);
  CHECK(std::abs(jxy.determinant()) > 1e-3);
}

TEST_CASE("Cartan tangency")
{
  const RManifoldSpec base{2, 2, ZetaKind::Minus};
  CHECK(cartan_tangency_defect(base, 0.5, 0.3, 1e-4) <= 1e-6);
  CHECK_THROWS_AS(cartan_tangency_defect(base, 1e-4, 0.0, 1e-4), InputError);

  for (ZetaKind kind : kAsserted)
    for (int k = 2; k <= 4; ++k)
      for (int l = 2; l <= 4; ++l)
      {
        const RManifoldSpec spec{k, l, kind};
        // Away from the null cone for zeta^2 = +1.
        const double d1 = cartan_tangency_defect(spec, 0.6, 0.2, 1e-3);
        const double d2 = cartan_tangency_defect(spec, 0.6, 0.2, 5e-4);
        CHECK(d1 > 0.0);
        const double ratio = d2 / d1;
        CHECK_MESSAGE(ratio >= 0.2, "k=", k, " l=", l, " ratio=", ratio);
        CHECK_MESSAGE(ratio <= 0.3, "k=", k, " l=", l, " ratio=", ratio);
        // The exact tangents satisfy the contact conditions.
        const JetChartPoint p = lkl_point(spec, 0.6, 0.2);
        for (const auto& t : exact_tangent_vectors(spec, 0.6, 0.2))
          CHECK(contact_defect(p, t) <= 1e-12 * std::max(1.0, t.norm()));
      }

  // A corrupted point is detected.
  JetChartPoint p = lkl_point(base, 0.5, 0.3);
  const auto t = exact_tangent_vectors(base, 0.5, 0.3);
  const double clean = contact_defect(p, t[0]);
  p.at(1, 0) += 0.1;
  CHECK(contact_defect(p, t[0]) - clean >= 0.05 * std::abs(t[0](0)));
}

TEST_CASE("singular points and the bend")
{
  for (int k = 2; k <= 4; ++k)
  {
    Eigen::MatrixXd first;
    for (int l = 2; l <= 4; ++l)
    {
      const SingularPointReport m = singular_point_report({k, l, ZetaKind::Minus}, 0.1, 100);
      CHECK(m.unique_singular_point);
      CHECK(m.bend_matches_normal_form);
      CHECK(m.bend_angle <= 1e-8);
      CHECK(m.origin_xy_rank == 0);
      CHECK(m.failures.empty());
      if (l == 2)
        first = m.bend;
      else
        CHECK(subspace_angle(first, m.bend) <= 1e-12);

      // zeta^2 = +1: the bend is right, but the projection is also singular
      // along a = +-b, so the origin is not the unique singular point.
      const SingularPointReport p = singular_point_report({k, l, ZetaKind::Plus}, 0.1, 100);
      CHECK(p.bend_matches_normal_form);
      CHECK(p.bend_angle <= 1e-8);
      CHECK_FALSE(p.unique_singular_point);
      REQUIRE_FALSE(p.singular_params.empty());
      for (const auto& s : p.singular_params)
        CHECK(std::abs(std::abs(s[0]) - std::abs(s[1])) <= 1e-6);
      CHECK_FALSE(p.failures.empty());

      const SingularPointReport z = singular_point_report({k, l, ZetaKind::Zero}, 0.1, 100);
      CHECK_FALSE(z.asserted);
      CHECK(z.bend_angle_swapped > 0.1);
      CHECK(z.bend_angle <= 1e-8);
    }
  }
}

TEST_CASE("the germ depends on l")
{
  const JetChartPoint a = lkl_point({3, 2, ZetaKind::Minus}, 0.1, 0.05);
  const JetChartPoint b = lkl_point({3, 3, ZetaKind::Minus}, 0.1, 0.05);
  CHECK((a.coords() - b.coords()).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("sweeps")
{
  const auto params = random_params(500, 1.0, 99);
  CHECK(params == random_params(500, 1.0, 99));
  CHECK(params != random_params(500, 1.0, 100));
  for (const auto& p : params)
  {
    CHECK(std::abs(p[0]) <= 1.0);
    CHECK(std::abs(p[1]) <= 1.0);
  }
  const RManifoldSpec spec{4, 3, ZetaKind::Plus};
  const auto s = lkl_sweep_serial(spec, params);
  const auto o = lkl_sweep(spec, params);
  REQUIRE(s.size() == o.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(s[i].coords() == o[i].coords());

  const std::string csv = point_cloud_csv({params[0]}, {s[0]});
  CHECK(csv.rfind("a,b,x,y,\"u_{0,0}\",\"u_{1,0}\",\"u_{0,1}\"", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
