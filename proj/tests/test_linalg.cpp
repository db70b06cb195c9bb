#include "test_helpers.hpp"

using namespace comat;
using testutil::Rng;

TEST_SUITE_BEGIN("linalg");

static Field Q = field_q();

TEST_CASE("kernel of the identity is empty") {
  CHECK(kernel(Matrix::identity(Q, 3)).cols() == 0);
}

TEST_CASE("kernel of the zero map is everything") {
  CHECK(kernel(Matrix::zero(Q, 2, 3)).cols() == 3);
}

TEST_CASE("kernel of [[1,1],[2,2]] is spanned by (1,-1)") {
  Matrix a(Q, 2, 2);
  a.set(0, 0, Scalar::of(Q, 1));
  a.set(0, 1, Scalar::of(Q, 1));
  a.set(1, 0, Scalar::of(Q, 2));
  a.set(1, 1, Scalar::of(Q, 2));
  Matrix k = kernel(a);
  REQUIRE(k.cols() == 1);
  Matrix expected(Q, 2, 1);
  expected.set(0, 0, Scalar::of(Q, 1));
  expected.set(1, 0, Scalar::of(Q, -1));
  CHECK(testutil::same_span(k, expected));
}

TEST_CASE("solve with the identity returns the rhs") {
  Matrix b(Q, 3, 1);
  b.set(1, 0, Scalar::of(Q, 7));
  SolveResult s = solve(Matrix::identity(Q, 3), b);
  REQUIRE(s.consistent);
  CHECK(s.particular == b);
  CHECK(s.kernel.cols() == 0);
}

TEST_CASE("zero map with nonzero rhs is inconsistent, not an exception") {
  Matrix b(Q, 2, 1);
  b.set(0, 0, Scalar::of(Q, 1));
  SolveResult s = solve(Matrix::zero(Q, 2, 2), b);
  CHECK_FALSE(s.consistent);
}

TEST_CASE("solve [[1,1]] x = (2)") {
  Matrix a(Q, 1, 2);
  a.set(0, 0, Scalar::of(Q, 1));
  a.set(0, 1, Scalar::of(Q, 1));
  Matrix b(Q, 1, 1);
  b.set(0, 0, Scalar::of(Q, 2));
  SolveResult s = solve(a, b);
  REQUIRE(s.consistent);
  CHECK((a * s.particular) == b);
  Matrix span(Q, 2, 1);
  span.set(0, 0, Scalar::of(Q, 1));
  span.set(1, 0, Scalar::of(Q, -1));
  CHECK(testutil::same_span(s.kernel, span));
}

TEST_CASE("tensor of identities and scalars") {
  CHECK(Matrix::identity(Q, 2).tensor(Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
  Matrix two(Q, 1, 1), three(Q, 1, 1), six(Q, 1, 1);
  two.set(0, 0, Scalar::of(Q, 2));
  three.set(0, 0, Scalar::of(Q, 3));
  six.set(0, 0, Scalar::of(Q, 6));
  CHECK(two.tensor(three) == six);
  CHECK(two.tensor(Matrix::zero(Q, 2, 2)).is_zero());
}

TEST_CASE("rank-nullity over random matrices, both fields") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    Field f = trial % 2 == 0 ? Q : field_fp(5);
    int rows = rng.uniform(0, 5), cols = rng.uniform(0, 5);
    Matrix a = testutil::random_matrix(rng, f, rows, cols);
    CHECK(rank(a) + kernel(a).cols() == cols);
  }
}

TEST_CASE("tensor is associative entrywise in the fixed lexicographic convention") {
  Rng rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix a = testutil::random_matrix(rng, Q, rng.uniform(1, 3), rng.uniform(1, 3));
    Matrix b = testutil::random_matrix(rng, Q, rng.uniform(1, 3), rng.uniform(1, 3));
    Matrix c = testutil::random_matrix(rng, Q, rng.uniform(1, 3), rng.uniform(1, 3));
    CHECK(a.tensor(b).tensor(c) == a.tensor(b.tensor(c)));
  }
}

TEST_CASE("solve reconstructs full solution sets") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix a = testutil::random_matrix(rng, Q, rng.uniform(1, 4), rng.uniform(1, 4));
    Matrix x = testutil::random_matrix(rng, Q, a.cols(), 1, 80);
    SolveResult s = solve(a, a * x);
    REQUIRE(s.consistent);
    CHECK((a * s.particular) == (a * x));
    // the difference x - particular lies in the kernel span
    if (s.kernel.cols() > 0)
      CHECK(in_span(s.kernel, x - s.particular));
    else
      CHECK(x == s.particular);
  }
}

TEST_CASE("F_p arithmetic: modular inverses and elimination") {
  Field f5 = field_fp(5);
  Matrix a(f5, 2, 2);
  a.set(0, 0, Scalar::of(f5, 2));
  a.set(1, 1, Scalar::of(f5, 3));
  Matrix b(f5, 2, 1);
  b.set(0, 0, Scalar::of(f5, 1));
  b.set(1, 0, Scalar::of(f5, 1));
  SolveResult s = solve(a, b);
  REQUIRE(s.consistent);
  CHECK(s.particular.get(0, 0) == Scalar::of(f5, 3));  // 2 * 3 = 6 = 1 mod 5
  CHECK(s.particular.get(1, 0) == Scalar::of(f5, 2));  // 3 * 2 = 6 = 1 mod 5
}

TEST_SUITE_END();
