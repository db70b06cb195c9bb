#include "comat/paper_examples.hpp"

namespace comat {
namespace examples {

FiniteCoalgebra divided_power(int n, Field f) {
  if (n < 0) throw algebra_error("divided_power: need N >= 0");
  FiniteCoalgebra c;
  c.field = f;
  const int dim = n + 1;
  for (int i = 0; i < dim; ++i) c.names.push_back("c" + std::to_string(i));
  c.delta = Matrix(f, dim * dim, dim);
  c.counit = Matrix(f, 1, dim);
  c.counit.set(0, 0, Scalar::one(f));
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i <= k; ++i) c.delta.set(i * dim + (k - i), k, Scalar::one(f));
  std::vector<int> g(dim);
  for (int i = 0; i < dim; ++i) g[i] = i;
  c.grading = g;
  return c;
}

MonomialSpec divided_power_spec(Field f) {
  MonomialSpec s;
  s.field = f;
  s.quiver.vertices = {"u"};
  s.quiver.arrows = {{"z", 0, 0}};
  s.cycles = {{0}};
  return s;
}

Example42 example_4_2(int n, Field f) {
  Example42 out;
  FiniteCoalgebra d = divided_power(n, f);
  FiniteCoalgebra e;
  e.field = f;
  e.names = {"d"};
  e.delta = Matrix(f, 1, 1);
  e.delta.set(0, 0, Scalar::one(f));
  e.counit = Matrix(f, 1, 1);
  e.counit.set(0, 0, Scalar::one(f));
  e.grading = std::vector<int>{0};
  Bicomodule m;
  m.left_coalgebra = d;
  m.right_coalgebra = e;
  m.dim = 1;
  m.left_coaction = Matrix(f, d.dim(), 1);
  m.left_coaction.set(0, 0, Scalar::one(f));  // x -> c_0 (x) x
  m.right_coaction = Matrix(f, 1, 1);
  m.right_coaction.set(0, 0, Scalar::one(f));  // x -> x (x) d
  out.data = TriangularData{d, e, m};

  // same coalgebra with the paper's basis names c_0..c_N, x, d
  FiniteCoalgebra c = triangular_comatrix(out.data);
  c.names.clear();
  for (int i = 0; i <= n; ++i) c.names.push_back("c" + std::to_string(i));
  c.names.push_back("x");
  c.names.push_back("d");
  out.coalgebra = c;

  out.spec.field = f;
  out.spec.quiver.vertices = {"u", "w"};
  out.spec.quiver.arrows = {{"z", 0, 0}, {"x", 0, 1}};
  out.spec.cycles = {{0}};
  out.spec.extra = {Path{0, {1}}};
  return out;
}

FiniteCoalgebra example_sec2(int n, Field f) {
  if (n < 1) throw algebra_error("example_sec2: need N >= 1");
  FiniteCoalgebra c;
  c.field = f;
  const int dim = 2 * n + 1;
  c.names.push_back("a");
  for (int i = 1; i <= n; ++i) c.names.push_back("b" + std::to_string(i));
  for (int i = 1; i <= n; ++i) c.names.push_back("x" + std::to_string(i));
  c.delta = Matrix(f, dim * dim, dim);
  c.counit = Matrix(f, 1, dim);
  auto idx_a = 0;
  auto idx_b = [&](int i) { return i; };
  auto idx_x = [&](int i) { return n + i; };
  c.delta.set(idx_a * dim + idx_a, idx_a, Scalar::one(f));
  c.counit.set(0, idx_a, Scalar::one(f));
  for (int i = 1; i <= n; ++i) {
    c.delta.set(idx_b(i) * dim + idx_b(i), idx_b(i), Scalar::one(f));
    c.counit.set(0, idx_b(i), Scalar::one(f));
    // Delta(x_i) = b_i (x) x_i + x_i (x) a
    c.delta.set(idx_b(i) * dim + idx_x(i), idx_x(i), Scalar::one(f));
    c.delta.set(idx_x(i) * dim + idx_a, idx_x(i), Scalar::one(f));
  }
  std::vector<int> g(dim, 0);
  for (int i = 1; i <= n; ++i) g[idx_x(i)] = 1;
  c.grading = g;
  return c;
}

ArtinianQuery artinian_asymmetry(Field f) {
  ArtinianQuery q;
  q.d.spec = divided_power_spec(f);
  FiniteCoalgebra e;
  e.field = f;
  e.names = {"g"};
  e.delta = Matrix(f, 1, 1);
  e.delta.set(0, 0, Scalar::one(f));
  e.counit = Matrix(f, 1, 1);
  e.counit.set(0, 0, Scalar::one(f));
  q.e.finite = e;
  q.m.regular_left = true;
  return q;
}

ArtinianQuery artinian_symmetric_variant(Field f) {
  ArtinianQuery q = artinian_asymmetry(f);
  q.m.regular_left = false;
  FiniteCoalgebra d = divided_power(2, f);
  Bicomodule m;
  m.left_coalgebra = d;
  m.right_coalgebra = *q.e.finite;
  m.dim = 1;
  m.left_coaction = Matrix(f, d.dim(), 1);
  m.left_coaction.set(0, 0, Scalar::one(f));
  m.right_coaction = Matrix(f, 1, 1);
  m.right_coaction.set(0, 0, Scalar::one(f));
  q.m.finite = m;
  return q;
}

MonomialSpec cyclic_monomial(int n, Field f) {
  if (n < 1) throw algebra_error("cyclic_monomial: need n >= 1");
  MonomialSpec s;
  s.field = f;
  std::vector<int> cyc;
  for (int i = 0; i < n; ++i) s.quiver.vertices.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    s.quiver.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
    cyc.push_back(i);
  }
  s.cycles = {cyc};
  return s;
}

MonomialSpec example_4_6_instance(Field f) {
  MonomialSpec s;
  s.field = f;
  s.quiver.vertices = {"v1", "v2", "w"};
  s.quiver.arrows = {{"a", 0, 1}, {"b", 1, 0}, {"c", 0, 2}};
  s.cycles = {{0, 1}};
  s.extra = {Path{0, {2}}};
  return s;
}

}  // namespace examples
}  // namespace comat
