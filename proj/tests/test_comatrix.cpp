#include "test_helpers.hpp"

using namespace comat;
using comat::examples::divided_power;
using comat::examples::example_4_2;
using testutil::basis_cols;
using testutil::Rng;

TEST_SUITE_BEGIN("comatrix");

static Field Q = field_q();

TEST_CASE("zero maps always satisfy the context identities") {
  examples::Example42 e = example_4_2(2);
  MoritaTakeuchiContext ctx = context_of_triangular(e.data);
  CHECK(check_context(ctx).ok);
}

TEST_CASE("context extracted by idempotent_decompose passes and reassembles") {
  examples::Example42 e = example_4_2(3);
  Matrix idem(Q, 1, e.coalgebra.dim());
  idem.set(0, 0, Scalar::one(Q));  // counit restricted to the chain part
  IdempotentDecomposition dec = idempotent_decompose(e.coalgebra, idem);
  CHECK(check_context(dec.context).ok);
  CHECK(verify_coalgebra(dec.assembled).ok());
  CHECK(dec.block_ee.cols() == 4);
  CHECK(dec.block_fe.cols() == 1);
  CHECK(dec.block_ef.cols() == 0);
  CHECK(dec.block_ff.cols() == 1);
}

TEST_CASE("perturbing phi breaks the context and coassociativity together") {
  MoritaTakeuchiContext ctx = testutil::matrix_coalgebra_context(Q);
  ctx.phi.set(0, 0, Scalar::of(Q, 2));  // no longer compatible with psi
  ContextReport rep = check_context(ctx);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(verify_coalgebra(assemble_generalized_comatrix(ctx)).ok());
}

TEST_CASE("the matrix-coalgebra context assembles to the dual of M_2(K)") {
  MoritaTakeuchiContext ctx = testutil::matrix_coalgebra_context(Q);
  REQUIRE(check_context(ctx).ok);
  FiniteCoalgebra c = generalized_comatrix(ctx);
  CHECK(verify_coalgebra(c).ok());
  CHECK(c.dim() == 4);
  FiniteAlgebra a = dual_algebra(c);
  CHECK(verify_algebra(a).ok());
  // the dual is simple of dimension 4: its left regular socle has one class
  std::vector<SimpleClass> simples = simple_comodules(c, Side::left);
  REQUIRE(simples.size() == 1);
  CHECK(simples[0].comodule.dim == 2);
  CHECK(simples[0].multiplicity == 2);
}

TEST_CASE("phi = psi = 0 with Y = 0 specializes to the triangular comatrix") {
  examples::Example42 e = example_4_2(2);
  FiniteCoalgebra via_ctx = assemble_generalized_comatrix(context_of_triangular(e.data));
  FiniteCoalgebra tri = triangular_comatrix(e.data);
  CHECK(via_ctx.delta == tri.delta);
  CHECK(via_ctx.counit == tri.counit);
}

TEST_CASE("triangular comatrix with M = 0 is the direct sum") {
  FiniteCoalgebra d = divided_power(1);
  FiniteCoalgebra e = testutil::grouplike(Q, {"d"});
  FiniteCoalgebra tri = triangular_comatrix({d, e, zero_bicomodule(d, e)});
  FiniteCoalgebra sum = coalgebra_direct_sum(d, e);
  CHECK(tri.delta == sum.delta);
  CHECK(tri.counit == sum.counit);
}

TEST_CASE("example 4.2: Delta(x) = c0 (x) x + x (x) d") {
  examples::Example42 e = example_4_2(2);
  const int n = e.coalgebra.dim();  // c0 c1 c2 x d
  Matrix dx = e.coalgebra.delta.col(3);
  Matrix expected(Q, n * n, 1);
  expected.set(0 * n + 3, 0, Scalar::one(Q));
  expected.set(3 * n + 4, 0, Scalar::one(Q));
  CHECK(dx == expected);
  CHECK(verify_coalgebra(e.coalgebra).ok());
}

TEST_CASE("semitrivial extension with M = 0 is D itself") {
  FiniteCoalgebra d = divided_power(2);
  SemitrivialExtension s = semitrivial_extension(d, zero_bicomodule(d, d));
  CHECK(s.coalgebra.delta == d.delta);
  CHECK(s.coalgebra.counit == d.counit);
}

TEST_CASE("semitrivial extension over a grouplike: Delta(m) = g (x) m + m (x) g") {
  FiniteCoalgebra d = testutil::grouplike(Q, {"g"});
  Bicomodule m;
  m.left_coalgebra = d;
  m.right_coalgebra = d;
  m.dim = 1;
  m.left_coaction = Matrix(Q, 1, 1);
  m.left_coaction.set(0, 0, Scalar::one(Q));
  m.right_coaction = m.left_coaction;
  SemitrivialExtension s = semitrivial_extension(d, m);
  CHECK(verify_coalgebra(s.coalgebra).ok());
  CHECK(s.coalgebra.dim() == 2);
  Matrix dm = s.coalgebra.delta.col(1);
  Matrix expected(Q, 4, 1);
  expected.set(0 * 2 + 1, 0, Scalar::one(Q));
  expected.set(1 * 2 + 0, 0, Scalar::one(Q));
  CHECK(dm == expected);
  // kernel of the quotient map is the antidiagonal coideal, dims add up
  CHECK(s.kernel_basis.cols() == d.dim());
  CHECK(s.coalgebra.dim() == d.dim() + m.dim);
}

TEST_CASE("idempotent_decompose with e = counit puts everything in the corner") {
  FiniteCoalgebra c = divided_power(2);
  IdempotentDecomposition dec = idempotent_decompose(c, c.counit);
  CHECK(dec.block_ee.cols() == 3);
  CHECK(dec.block_fe.cols() == 0);
  CHECK(dec.block_ef.cols() == 0);
  CHECK(dec.block_ff.cols() == 0);
}

TEST_CASE("idempotent_decompose splits a grouplike direct sum diagonally") {
  FiniteCoalgebra c = testutil::grouplike(Q, {"g", "h"});
  Matrix e(Q, 1, 2);
  e.set(0, 0, Scalar::one(Q));
  IdempotentDecomposition dec = idempotent_decompose(c, e);
  CHECK(dec.block_ee.cols() == 1);
  CHECK(dec.block_ff.cols() == 1);
  CHECK(dec.block_fe.cols() == 0);
  CHECK(dec.block_ef.cols() == 0);
}

TEST_CASE("idempotent_decompose rejects non-idempotents") {
  FiniteCoalgebra c = divided_power(2);
  Matrix e(Q, 1, 3);
  e.set(0, 1, Scalar::one(Q));
  CHECK_THROWS_AS(idempotent_decompose(c, e), algebra_error);
}

TEST_CASE("triangular_decompose: X = C gives D = C, M = 0, E = 0") {
  FiniteCoalgebra c = divided_power(2);
  TriangularDecomposeResult r =
      triangular_decompose(c, Matrix::identity(Q, 3), Matrix(Q, 3, 0));
  REQUIRE(r.ok);
  CHECK(r.data.d.dim() == 3);
  CHECK(r.data.m.dim == 0);
  CHECK(r.data.e.dim() == 0);
}

TEST_CASE("triangular_decompose recovers example 4.2 and refuses the swap") {
  examples::Example42 e = example_4_2(2);
  const int n = e.coalgebra.dim();
  Matrix x = basis_cols(Q, n, {0, 1, 2});
  Matrix y = basis_cols(Q, n, {3, 4});
  TriangularDecomposeResult good = triangular_decompose(e.coalgebra, x, y);
  REQUIRE(good.ok);
  CHECK(good.data.d.dim() == 3);
  CHECK(good.data.m.dim == 1);
  CHECK(good.data.e.dim() == 1);
  TriangularDecomposeResult bad = triangular_decompose(e.coalgebra, y, x);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.hom_witness.empty());
}

TEST_CASE("round trip: decompose then reassemble is the identity up to iso") {
  Rng rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    examples::Example42 e = example_4_2(rng.uniform(1, 4));
    Matrix idem(Q, 1, e.coalgebra.dim());
    idem.set(0, 0, Scalar::one(Q));
    IdempotentDecomposition dec = idempotent_decompose(e.coalgebra, idem);
    CHECK(rank(dec.iso) == e.coalgebra.dim());
    CHECK(dec.assembled.delta * dec.iso == dec.iso.tensor(dec.iso) * e.coalgebra.delta);
  }
}

TEST_CASE("artinian criterion on the paper example and its finite variant") {
  ArtinianResult asym = is_left_artinian_triangular(examples::artinian_asymmetry());
  CHECK(asym.left == Verdict::yes);
  CHECK(asym.right == Verdict::no);
  ArtinianResult sym = is_left_artinian_triangular(examples::artinian_symmetric_variant());
  CHECK(sym.left == Verdict::yes);
  CHECK(sym.right == Verdict::yes);
}

TEST_CASE("artinian criterion: all-finite data is Artinian on both sides") {
  examples::Example42 e = example_4_2(2);
  ArtinianQuery q;
  q.d.finite = e.data.d;
  q.e.finite = e.data.e;
  q.m.finite = e.data.m;
  ArtinianResult res = is_left_artinian_triangular(q);
  CHECK(res.left == Verdict::yes);
  CHECK(res.right == Verdict::yes);
}

TEST_CASE("artinian criterion: undecidable classes are reported, not guessed") {
  ArtinianQuery q = examples::artinian_asymmetry();
  q.d.spec = examples::example_4_2(1).spec;  // cycles plus extras: outside the class
  ArtinianResult res = is_left_artinian_triangular(q);
  CHECK(res.left == Verdict::undecidable);
}

TEST_SUITE_END();
