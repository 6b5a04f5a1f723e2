#include "cma/contact.h"
#include "cma/error.h"
#include "cma/linalg.h"
#include "cma/monge_ampere.h"
#include "cma/symplectic.h"
#include "support.h"

#include <doctest.h>

using namespace cma;
using namespace cma::linalg;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace
{
const SymplecticSpace kStd = SymplecticSpace::standard(2);

MatrixXd conjugate(const MatrixXd& s, const MatrixXd& a) { return s * a * s.inverse(); }

/// Random self-adjoint operator of a requested type: F + F^T on the standard
/// space, conjugated by a random symplectic matrix.
MatrixXd random_operator(std::mt19937_64& rng, OperatorType type)
{
  MatrixXd f(2, 2);
  const double lam = testing::uniform(rng, -1.0, 1.0);
  switch (type)
  {
  case OperatorType::Elliptic:
  {
    const double b = testing::uniform(rng, 0.3, 1.5);
    f << lam, -b, b, lam;
    break;
  }
  case OperatorType::Hyperbolic:
  {
    const double gap = testing::uniform(rng, 0.3, 1.5);
    f << lam, 0.0, 0.0, lam + gap;
    break;
  }
  case OperatorType::Parabolic:
    f << lam, 1.0, 0.0, lam;
    break;
  case OperatorType::Scalar:
    f << lam, 0.0, 0.0, lam;
    break;
  }
  return conjugate(testing::random_symplectic(rng, 2), direct_sum_operator(f));
}

double max_form(const MatrixXd& a, const MatrixXd& b)
{
  return (a.transpose() * testing::standard_j(2) * b).cwiseAbs().maxCoeff();
}
} // namespace

TEST_CASE("standard space")
{
  const MatrixXd j1 = SymplecticSpace::standard(1).gram();
  CHECK(j1(0, 1) == 1.0);
  CHECK(j1(1, 0) == -1.0);
  CHECK(j1(0, 0) == 0.0);
  for (int n = 1; n <= 4; ++n)
  {
    const MatrixXd j = SymplecticSpace::standard(n).gram();
    CHECK((j.transpose() + j).cwiseAbs().maxCoeff() == 0.0);
    CHECK((j * j + MatrixXd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(j == testing::standard_j(n));
  }
  CHECK_THROWS_AS(SymplecticSpace::standard(0), InputError);
  CHECK_THROWS_AS(SymplecticSpace(MatrixXd::Identity(4, 4)), InputError);
  CHECK_THROWS_AS(SymplecticSpace(MatrixXd::Zero(4, 4)), InputError);
  CHECK_THROWS_AS(SymplecticSpace(MatrixXd::Zero(3, 3)), InputError);
}

TEST_CASE("self-adjointness")
{
  CHECK(is_self_adjoint(kStd, 3.5 * MatrixXd::Identity(4, 4), 1e-12));
  CHECK_FALSE(is_self_adjoint(kStd, kStd.gram(), 1e-12));

  const MatrixXd laplace = structure_operator({0.0, 1.0, 0.0, 1.0, 0.0});
  CHECK(is_self_adjoint(SymplecticSpace(curvature_gram()), laplace, 1e-12));
  CHECK_THROWS_AS(is_self_adjoint(kStd, MatrixXd::Identity(3, 3), 1e-12), InputError);
}

TEST_CASE("Jordan product")
{
  std::mt19937_64 rng(1);
  const MatrixXd a = testing::random_matrix(rng, 4, 4);
  CHECK((jordan_product(a, MatrixXd::Identity(4, 4)) - a).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((jordan_product(a, a) - a * a).cwiseAbs().maxCoeff() <= 1e-15);

  const OperatorType types[] = {OperatorType::Elliptic, OperatorType::Hyperbolic,
                                OperatorType::Parabolic};
  for (int t = 0; t < 500; ++t)
  {
    const MatrixXd x = random_operator(rng, types[t % 3]);
    const MatrixXd y = random_operator(rng, types[(t / 3) % 3]);
    const MatrixXd p = jordan_product(x, y);
    CHECK(is_self_adjoint(kStd, p, 1e-12 * std::max(1.0, p.cwiseAbs().maxCoeff())));
  }
  CHECK_THROWS_AS(jordan_product(a, MatrixXd::Identity(2, 2)), InputError);
}

TEST_CASE("cyclic subspaces")
{
  std::mt19937_64 rng(2);
  const VectorXd v = testing::random_matrix(rng, 4, 1);
  CHECK(cyclic_subspace(kStd, MatrixXd::Identity(4, 4), v).cols() == 1);

  const MatrixXd ma = structure_operator({1.0, 0.0, 0.0, 0.0, 0.0});
  const SymplecticSpace curv(curvature_gram());
  CHECK(cyclic_subspace(curv, ma, v).cols() == 2);
  CHECK_THROWS_AS(cyclic_subspace(kStd, ma, VectorXd::Zero(4)), InputError);

  // The form vanishes on every cyclic subspace of a self-adjoint operator.
  const OperatorType types[] = {OperatorType::Elliptic, OperatorType::Hyperbolic,
                                OperatorType::Parabolic};
  for (int t = 0; t < 300; ++t)
  {
    const MatrixXd a = random_operator(rng, types[t % 3]);
    const MatrixXd c = cyclic_subspace(kStd, a, testing::random_matrix(rng, 4, 1));
    CHECK(c.cols() <= 2);
    CHECK(max_form(c, c) <= 1e-10);
  }
}

TEST_CASE("Lagrangian planes")
{
  MatrixXd p(4, 2);
  p << 1, 0, 0, 1, 0, 0, 0, 0;
  CHECK(is_lagrangian(kStd, p));
  p << 1, 0, 0, 0, 0, 1, 0, 0;
  CHECK_FALSE(is_lagrangian(kStd, p));
  p << 1, 2, 0, 0, 0, 0, 0, 0;
  CHECK_THROWS_AS(is_lagrangian(kStd, p), InputError);
}

TEST_CASE("classification fixtures")
{
  const SymplecticSpace curv(curvature_gram());

  const MatrixXd lap = structure_operator({0.0, 1.0, 0.0, 1.0, 0.0});
  MatrixXd expected(4, 4);
  expected << 0, -2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2, 0;
  CHECK(lap == expected);
  CHECK((lap * lap + 4.0 * MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(classify_dim4(curv, lap).type == OperatorType::Elliptic);

  const MatrixXd wave = structure_operator({0.0, 1.0, 0.0, -1.0, 0.0});
  CHECK((wave * wave - 4.0 * MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(classify_dim4(curv, wave).type == OperatorType::Hyperbolic);

  const MatrixXd hma = structure_operator({1.0, 0.0, 0.0, 0.0, 0.0});
  expected << 0, 0, 0, -2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0;
  CHECK(hma == expected);
  CHECK((hma * hma).cwiseAbs().maxCoeff() == 0.0);
  const ClassificationResult r = classify_dim4(curv, hma);
  CHECK(r.type == OperatorType::Parabolic);
  MatrixXd w(4, 2);
  w << 1, 0, 0, 1, 0, 0, 0, 0;
  CHECK(max_principal_angle(r.lagrangian_plane, w) <= 1e-12);

  CHECK(classify_dim4(curv, 2.0 * MatrixXd::Identity(4, 4)).type == OperatorType::Scalar);
  CHECK_THROWS_AS(classify_dim4(kStd, kStd.gram()), InputError);

  // Self-adjoint with a cubic minimal polynomial cannot exist on a 4-space;
  // a non-self-adjoint input is rejected before the fit.
  MatrixXd d = MatrixXd::Zero(4, 4);
  d.diagonal() << 1, 2, 3, 4;
  CHECK_THROWS_AS(classify_dim4(kStd, d), InputError);
}

TEST_CASE("structure of each classification")
{
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t)
  {
    const MatrixXd a = random_operator(rng, OperatorType::Elliptic);
    const ClassificationResult r = classify_dim4(kStd, a);
    REQUIRE(r.type == OperatorType::Elliptic);
    const MatrixXd& b = r.complex_structure;
    CHECK((b * b + MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(r.discriminant < 0.0);
    CHECK(r.eigenvalues.size() == 4);
  }
  for (int t = 0; t < 200; ++t)
  {
    const MatrixXd a = random_operator(rng, OperatorType::Hyperbolic);
    const ClassificationResult r = classify_dim4(kStd, a);
    REQUIRE(r.type == OperatorType::Hyperbolic);
    CHECK(r.eigenplane1.cols() == 2);
    CHECK(r.eigenplane2.cols() == 2);
    CHECK(max_form(r.eigenplane1, r.eigenplane2) <= 1e-9);
    CHECK_FALSE(is_lagrangian(kStd, r.eigenplane1));
    CHECK_FALSE(is_lagrangian(kStd, r.eigenplane2));
  }
  for (int t = 0; t < 200; ++t)
  {
    const MatrixXd a = random_operator(rng, OperatorType::Parabolic);
    const ClassificationResult r = classify_dim4(kStd, a);
    REQUIRE(r.type == OperatorType::Parabolic);
    CHECK(r.lagrangian_plane.cols() == 2);
    CHECK(r.image_plane.cols() == 2);
    CHECK(is_lagrangian(kStd, r.lagrangian_plane));
    CHECK(max_principal_angle(r.lagrangian_plane, r.image_plane) <= 1e-8);
  }
}

TEST_CASE("Lagrangian planes meeting W in a line are cyclic")
{
  std::mt19937_64 rng(6);
  const MatrixXd j = testing::standard_j(2);
  for (int t = 0; t < 100; ++t)
  {
    const MatrixXd a = random_operator(rng, OperatorType::Parabolic);
    const ClassificationResult r = classify_dim4(kStd, a);
    REQUIRE(r.type == OperatorType::Parabolic);
    const MatrixXd& w = r.lagrangian_plane;

    // A line l in W and a vector u orthogonal to l, outside W.
    const VectorXd line = w * testing::random_matrix(rng, 2, 1);
    const MatrixXd perp = null_space((j * line).transpose());
    VectorXd u = perp * testing::random_matrix(rng, perp.cols(), 1);
    MatrixXd l(4, 2);
    l << line, u;
    REQUIRE(is_lagrangian(kStd, l));
    REQUIRE(rank((MatrixXd(4, 4) << w, l).finished()) == 3);

    MatrixXd al(4, 4);
    al << l, a * l;
    CHECK(rank(al) == 2);
    const MatrixXd c = cyclic_subspace(kStd, a, u);
    CHECK(c.cols() == 2);
    CHECK(max_principal_angle(c, l) <= 1e-8);
  }
}

TEST_CASE("lemma on self-adjoint operators")
{
  // (1) the form vanishes on cyclic subspaces, (2) eigenspaces of distinct
  // eigenvalues are orthogonal, (3) ker A and im A are orthogonal.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t)
  {
    const MatrixXd f = testing::random_matrix(rng, 2, 2);
    const MatrixXd a = direct_sum_operator(f);
    CHECK(is_self_adjoint(kStd, a, 1e-14));

    const MatrixXd c = cyclic_subspace(kStd, a, testing::random_matrix(rng, 4, 1));
    CHECK(max_form(c, c) <= 1e-9);

    const ClassificationResult r = classify_dim4(kStd, a);
    if (r.type == OperatorType::Hyperbolic)
      CHECK(max_form(r.eigenplane1, r.eigenplane2) <= 1e-9);

    // Make A singular by shifting with a real eigenvalue of F when one exists.
    const Eigen::EigenSolver<MatrixXd> es(f);
    if (std::abs(es.eigenvalues()(0).imag()) < 1e-12)
    {
      const MatrixXd s = a - es.eigenvalues()(0).real() * MatrixXd::Identity(4, 4);
      const MatrixXd ker = null_space(s, 1e-9);
      const MatrixXd im = orthonormal_basis(s);
      REQUIRE(ker.cols() >= 2);
      CHECK(max_form(ker, im) <= 1e-9);
    }
  }
}

TEST_CASE("direct sums")
{
  CHECK(direct_sum_operator(MatrixXd::Identity(2, 2)) == MatrixXd::Identity(4, 4));
  MatrixXd f(2, 2);
  f << 0, 1, 0, 0;
  CHECK(is_self_adjoint(kStd, direct_sum_operator(f), 1e-14));
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t)
    CHECK(is_self_adjoint(kStd, direct_sum_operator(testing::random_matrix(rng, 2, 2)), 1e-14));
  CHECK_THROWS_AS(direct_sum_operator(MatrixXd::Zero(2, 3)), InputError);
}

TEST_CASE("nilpotent operator from a Lagrangian plane")
{
  MatrixXd w(4, 2), u(4, 2);
  w << 1, 0, 0, 1, 0, 0, 0, 0;
  u << 0, 0, 0, 0, 1, 0, 0, 1;
  // U = span{e3, e4} is Lagrangian, so the construction is undefined there.
  CHECK_THROWS_AS(nilpotent_from_lagrangian(kStd, w, u), InputError);

  u << 0, 1, 0, 0, 1, 0, 0, 1;
  const MatrixXd b = nilpotent_from_lagrangian(kStd, w, u);
  CHECK(b.cwiseAbs().maxCoeff() > 0.1);
  CHECK((b * b).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(is_self_adjoint(kStd, b, 1e-12));
  CHECK((b * w).cwiseAbs().maxCoeff() <= 1e-12);

  const ClassificationResult r = classify_dim4(kStd, b + MatrixXd::Identity(4, 4));
  CHECK(r.type == OperatorType::Parabolic);
  CHECK(max_principal_angle(r.lagrangian_plane, w) <= 1e-9);

  MatrixXd bad(4, 2);
  bad << 1, 0, 0, 0, 0, 1, 0, 0;
  CHECK_THROWS_AS(nilpotent_from_lagrangian(kStd, bad, u), InputError);
  CHECK_THROWS_AS(nilpotent_from_lagrangian(kStd, w, w), InputError);
}
