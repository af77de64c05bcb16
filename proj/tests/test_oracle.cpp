#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/rng.hpp"
#include "oracle.hpp"

#include <cmath>

using namespace hoffman;

namespace {
const NormConfig kInfInf{NormTag::LInf, NormTag::LInf};
}

TEST_CASE("hoffman_enumerate worked values") {
  Matrix A(3, 2);
  A << 1, 0, 0, 1, -1, -1;
  CHECK(oracle::hoffman_enumerate(A, kInfInf) == doctest::Approx(2.0));
  CHECK(oracle::hoffman_enumerate(Matrix::Identity(3, 3), kInfInf) == doctest::Approx(1.0));
  Matrix pm(2, 1);
  pm << 1, -1;
  CHECK(oracle::hoffman_enumerate(pm, kInfInf) == doctest::Approx(1.0));
  CHECK_THROWS_AS(oracle::hoffman_enumerate(Matrix::Zero(15, 2), kInfInf), std::length_error);
}

TEST_CASE("two formulations, one result") {
  Rng rng(131);
  for (int inst = 0; inst < 12; ++inst) {
    const Index m = 2 + static_cast<Index>(rng.next_u64() % 4);
    const Index n = 2 + static_cast<Index>(rng.next_u64() % 3);
    const Matrix A = rng.gaussian_matrix(m, n);
    const double direct = oracle::hoffman_enumerate(A, kInfInf);
    const double dual_route = oracle::hoffman_enumerate_dual(A, kInfInf);
    CHECK(direct == doctest::Approx(dual_route).epsilon(1e-9));
  }
}

TEST_CASE("bilevel maxmin worked values") {
  Matrix A(3, 2);
  A << 1, 0, 0, 1, -1, -1;
  CHECK(oracle::bilevel_maxmin(A, IndexSet::of({1, 3}, 3), kInfInf) == doctest::Approx(2.0));
  CHECK(oracle::bilevel_maxmin(Matrix::Identity(2, 2), IndexSet::full(2), kInfInf) ==
        doctest::Approx(1.0));
  CHECK(oracle::bilevel_maxmin(A, IndexSet::empty(3), kInfInf) == 0.0);
}

TEST_CASE("primal-dual agreement on surjective sets") {
  Rng rng(137);
  for (int inst = 0; inst < 6; ++inst) {
    const Index m = 3 + static_cast<Index>(rng.next_u64() % 3);
    const Index n = 2 + static_cast<Index>(rng.next_u64() % 2);
    const Matrix A = rng.gaussian_matrix(m, n);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      const IndexSet J = IndexSet::from_mask(m, mask);
      const auto out = min_conic_image_norm(A, J, kInfInf);
      if (!out.surjective) continue;
      const double primal = oracle::bilevel_maxmin(A, J, kInfInf);
      CHECK(primal == doctest::Approx(1.0 / out.value).epsilon(1e-7));
    }
  }
}

TEST_CASE("mixed enumeration worked values") {
  const NormConfig prodL1{NormTag::LInf, NormTag::L1};
  Matrix A(1, 1);
  A << 1;
  CHECK(oracle::mixed_enumerate(A, Matrix(0, 1), prodL1) == doctest::Approx(1.0));
  Matrix C(2, 1);
  C << 1, -1;
  CHECK(oracle::mixed_enumerate(Matrix(0, 1), C, prodL1) == doctest::Approx(1.0));
}

TEST_CASE("facial faces geometry") {
  const NormConfig l1{NormTag::L1, NormTag::L1};
  const NormConfig l2{NormTag::L1, NormTag::L2};
  SUBCASE("segment endpoints") {
    const auto v1 = oracle::facial_faces(Matrix::Identity(2, 2), l1);
    REQUIRE(v1.has_value());
    CHECK(*v1 == doctest::Approx(2.0));
    const auto v2 = oracle::facial_faces(Matrix::Identity(2, 2), l2);
    REQUIRE(v2.has_value());
    CHECK(*v2 == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("single point") {
    Matrix A(2, 1);
    A << 1, 2;
    CHECK_FALSE(oracle::facial_faces(A, l1).has_value());
    Matrix B(2, 3);
    B << 1, 1, 1, 2, 2, 2;  // coincident columns
    CHECK_FALSE(oracle::facial_faces(B, l1).has_value());
  }
  SUBCASE("triangle: vertex-edge and edge-vertex pairs") {
    Matrix T(2, 3);
    T << 0, 1, 0, 0, 0, 1;
    const auto v = oracle::facial_faces(T, l2);
    REQUIRE(v.has_value());
    // Faces: each vertex vs opposite edge and each edge vs opposite vertex;
    // the right-angle vertex to the hypotenuse is the closest pair: 1/sqrt(2).
    CHECK(*v == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
  SUBCASE("interior columns are ignored") {
    Matrix A(2, 3);
    A << 0, 1, 0.5, 0, 0, 0;  // midpoint of the segment is not a vertex
    const auto v = oracle::facial_faces(A, l1);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(1.0));
  }
}

TEST_CASE("polytope distance helpers") {
  Matrix P(2, 1), Q(2, 1);
  P << 0, 0;
  Q << 3, 4;
  CHECK(oracle::polytope_distance(P, Q, NormTag::L2) == doctest::Approx(5.0));
  CHECK(oracle::polytope_distance(P, Q, NormTag::L1) == doctest::Approx(7.0));
  CHECK(oracle::polytope_distance(P, Q, NormTag::LInf) == doctest::Approx(4.0));
  // Point to a segment crossing the axis.
  Matrix S(2, 2);
  S << -1, 1, 1, 1;
  CHECK(oracle::polytope_distance(P, S, NormTag::L2) == doctest::Approx(1.0));
}

TEST_CASE("exact least-norm with inequalities") {
  SUBCASE("projection onto a halfspace") {
    Matrix C(1, 2);
    C << 1, 1;
    Vector d(1);
    d << -2;  // x1 + x2 <= -2
    const auto v = oracle::min_norm_l2(Matrix(0, 2), Vector(0), C, d);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("equality plus sign constraint") {
    Matrix A(1, 2);
    A << 1, 1;
    Vector b(1);
    b << 2;
    Matrix C(1, 2);
    C << -1, 0;  // x1 >= 0 written as -x1 <= 0
    Vector d = Vector::Zero(1);
    const auto v = oracle::min_norm_l2(A, b, C, d);
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("infeasible") {
    Matrix C(2, 1);
    C << 1, -1;
    Vector d(2);
    d << -1, -1;
    CHECK_FALSE(oracle::min_norm_l2(Matrix(0, 1), Vector(0), C, d).has_value());
  }
}
