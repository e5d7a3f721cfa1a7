#include <doctest.h>

#include <random>

#include "fracnash/norms.hpp"
#include "fracnash/subdomain.hpp"
#include "../support/test_utils.hpp"

using namespace fracnash;
using fracnash::testing::random_vector;

TEST_CASE("grid basics") {
  const SpaceGrid g = SpaceGrid::line(0.0, 1.0, 9);
  CHECK(g.spacing(0) == doctest::Approx(0.1));
  CHECK(g.dof_count() == 9);
  CHECK(g.coords(0)[0] == doctest::Approx(0.1));
  CHECK(g.coords(8)[0] == doctest::Approx(0.9));

  const SpaceGrid g2 = SpaceGrid::rectangle(0.0, 1.0, 4, 0.0, 2.0, 8);
  CHECK(g2.dof_count() == 32);
  CHECK(g2.cell_volume() == doctest::Approx(0.2 * (2.0 / 9.0)));
  // x-major layout round trip
  CHECK(g2.linear_index(3, 5) == 2 * 8 + 4);
  CHECK(g2.coords(g2.linear_index(3, 5))[0] == doctest::Approx(3.0 * 0.2));

  CHECK_THROWS_AS(SpaceGrid::line(1.0, 0.0, 4), InvalidArgument);
  CHECK_THROWS_AS(TimeGrid(-1.0, 4), InvalidArgument);
  CHECK_THROWS_AS(FractionalOrders(0.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(FractionalOrders(0.5, 1.2), InvalidArgument);
}

TEST_CASE("subdomain from closed box") {
  const SpaceGrid g = SpaceGrid::line(-2.0, 2.0, 40);
  const Subdomain left = Subdomain::from_box(g, {{-2.0, 0.0}, {-1.0, 0.0}});
  const Subdomain right = Subdomain::from_box(g, {{1.0, 0.0}, {2.0, 0.0}});
  CHECK(left.size() == 10);
  CHECK(right.size() == 10);
  CHECK(left.indices().front() == 0);
  CHECK(right.indices().back() == 39);
  CHECK(left.mask().sum() == doctest::Approx(10.0));

  CHECK_THROWS_AS(Subdomain::from_indices({0, 0}, 4), InvalidArgument);
  CHECK_THROWS_AS(Subdomain::from_indices({5}, 4), InvalidArgument);
}

TEST_CASE("restrict and extend") {
  const Eigen::Index ndof = 8;
  const Subdomain region = Subdomain::from_indices({2, 6}, ndof);

  SUBCASE("zero field restricts to zero") {
    CHECK(restrict_to_region(Eigen::VectorXd::Zero(ndof), region).isZero(0.0));
  }

  SUBCASE("coordinate projection") {
    Eigen::VectorXd field(ndof);
    for (Eigen::Index i = 0; i < ndof; ++i) field[i] = double(i + 1);
    const Eigen::VectorXd picked = restrict_to_region(field, region);
    CHECK(picked[0] == 3.0);
    CHECK(picked[1] == 7.0);
  }

  SUBCASE("extension by definition") {
    const Subdomain front = Subdomain::from_indices({0, 1}, 4);
    Eigen::VectorXd u(2);
    u << 1.0, 1.0;
    const Eigen::VectorXd field = extend_by_zero(u, front, 4);
    CHECK(field[0] == 1.0);
    CHECK(field[1] == 1.0);
    CHECK(field[2] == 0.0);
    CHECK(field[3] == 0.0);
    CHECK(extend_by_zero(Eigen::VectorXd::Zero(2), front, 4).isZero(0.0));
  }

  SUBCASE("round trip and adjointness on random data") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::VectorXd u = random_vector(rng, region.size());
      const Eigen::VectorXd p = random_vector(rng, ndof);
      CHECK((restrict_to_region(extend_by_zero(u, region, ndof), region) - u).norm() == 0.0);
      // (extend u, p) over the grid equals (u, restrict p) over the region
      CHECK(extend_by_zero(u, region, ndof).dot(p) ==
            doctest::Approx(u.dot(restrict_to_region(p, region))).epsilon(1e-15));
    }
  }

  SUBCASE("masking is idempotent") {
    std::mt19937_64 rng(8);
    const Eigen::VectorXd p = random_vector(rng, ndof);
    const Eigen::VectorXd once = extend_by_zero(restrict_to_region(p, region), region, ndof);
    const Eigen::VectorXd twice = extend_by_zero(restrict_to_region(once, region), region, ndof);
    CHECK((once - twice).norm() == 0.0);
  }

  SUBCASE("shape errors") {
    CHECK_THROWS_AS(restrict_to_region(Eigen::VectorXd::Zero(5), region), InvalidArgument);
    CHECK_THROWS_AS(extend_by_zero(Eigen::VectorXd::Zero(3), region, ndof), InvalidArgument);
  }
}

TEST_CASE("spatial norm quadrature") {
  const SpaceGrid g = SpaceGrid::line(0.0, 1.0, 9);
  const Subdomain all = Subdomain::whole(g);

  CHECK(l2_norm_space(Eigen::VectorXd::Zero(9), all, g) == 0.0);
  // constant one over (0,1): rectangle rule gives sqrt(9 * 0.1) and converges
  // to the exact unit norm as the grid refines
  CHECK(l2_norm_space(Eigen::VectorXd::Ones(9), all, g) ==
        doctest::Approx(std::sqrt(0.9)).epsilon(1e-14));
  const SpaceGrid fine = SpaceGrid::line(0.0, 1.0, 999);
  CHECK(l2_norm_space(Eigen::VectorXd::Ones(999), Subdomain::whole(fine), fine) ==
        doctest::Approx(1.0).epsilon(1e-3));

  std::mt19937_64 rng(3);
  const Eigen::VectorXd f = random_vector(rng, 9);
  const double c = -2.75;
  CHECK(l2_norm_space(c * f, all, g) ==
        doctest::Approx(std::abs(c) * l2_norm_space(f, all, g)).epsilon(1e-13));
  const Eigen::VectorXd f2 = random_vector(rng, 9);
  CHECK(l2_norm_space(f + f2, all, g) <=
        l2_norm_space(f, all, g) + l2_norm_space(f2, all, g) + 1e-14);
}

TEST_CASE("space-time norm quadrature") {
  const SpaceGrid g = SpaceGrid::line(0.0, 1.0, 9);
  const TimeGrid t(1.0, 10);
  const Subdomain all = Subdomain::whole(g);

  SpaceTimeField ones(t.levels(), g.dof_count());
  ones.values().setOnes();
  // trapezoid weights sum to T = 1, spatial part 9 * 0.1
  CHECK(l2_norm_spacetime(ones, all, g, t) ==
        doctest::Approx(std::sqrt(0.9)).epsilon(1e-14));

  SpaceTimeField zero(t.levels(), g.dof_count());
  CHECK(l2_norm_spacetime(zero, all, g, t) == 0.0);

  std::mt19937_64 rng(4);
  SpaceTimeField f(t.levels(), g.dof_count());
  for (int n = 0; n < f.levels(); ++n) f.row(n) = random_vector(rng, 9).transpose();
  SpaceTimeField scaled(SpaceTimeField::Matrix(3.5 * f.values()));
  CHECK(l2_norm_spacetime(scaled, all, g, t) ==
        doctest::Approx(3.5 * l2_norm_spacetime(f, all, g, t)).epsilon(1e-13));
}
