#include "comat/coalgebra.hpp"

namespace comat {

FiniteCoalgebra FiniteCoalgebra::co_opposite() const {
  FiniteCoalgebra out = *this;
  out.delta = flip_tensor(field, dim(), dim()) * delta;
  return out;
}

CoalgebraReport verify_coalgebra(const FiniteCoalgebra& c) {
  CoalgebraReport rep;
  const int n = c.dim();
  if (c.delta.rows() != n * n || c.delta.cols() != n || c.counit.rows() != 1 || c.counit.cols() != n)
    throw algebra_error("verify_coalgebra: malformed structure constants");
  Matrix id = Matrix::identity(c.field, n);
  Matrix lhs = c.delta.tensor(id) * c.delta;  // (Delta (x) id) Delta
  Matrix rhs = id.tensor(c.delta) * c.delta;  // (id (x) Delta) Delta
  for (int k = 0; k < n && rep.coassociative; ++k) {
    if (!(lhs.col(k) == rhs.col(k))) {
      rep.coassociative = false;
      rep.witness = c.names[k];
    }
  }
  Matrix left_counit = c.counit.tensor(id) * c.delta;   // (eps (x) id) Delta
  Matrix right_counit = id.tensor(c.counit) * c.delta;  // (id (x) eps) Delta
  for (int k = 0; k < n && rep.counital; ++k) {
    if (!(left_counit.col(k) == id.col(k)) || !(right_counit.col(k) == id.col(k))) {
      rep.counital = false;
      if (!rep.witness) rep.witness = c.names[k];
    }
  }
  return rep;
}

AlgebraReport verify_algebra(const FiniteAlgebra& a) {
  AlgebraReport rep;
  const int n = a.dim();
  if (a.mul.rows() != n || a.mul.cols() != n * n || a.unit.rows() != n || a.unit.cols() != 1)
    throw algebra_error("verify_algebra: malformed structure constants");
  Matrix id = Matrix::identity(a.field, n);
  Matrix assoc_l = a.mul * a.mul.tensor(id);  // (ab)c
  Matrix assoc_r = a.mul * id.tensor(a.mul);  // a(bc)
  if (!(assoc_l == assoc_r)) {
    rep.associative = false;
    for (int k = 0; k < n * n * n; ++k)
      if (!(assoc_l.col(k) == assoc_r.col(k))) {
        int i = k / (n * n), j = (k / n) % n, l = k % n;
        rep.witness = a.names[i] + "*" + a.names[j] + "*" + a.names[l];
        break;
      }
  }
  Matrix unit_l = a.mul * a.unit.tensor(id);
  Matrix unit_r = a.mul * id.tensor(a.unit);
  if (!(unit_l == id) || !(unit_r == id)) {
    rep.unital = false;
    if (!rep.witness) rep.witness = "unit";
  }
  return rep;
}

FiniteAlgebra dual_algebra(const FiniteCoalgebra& c) {
  FiniteAlgebra a;
  a.field = c.field;
  for (const auto& nm : c.names) a.names.push_back(nm + "*");
  a.mul = c.delta.transpose();
  a.unit = c.counit.transpose();
  return a;
}

Matrix hit_right(const FiniteCoalgebra& c, const Matrix& f) {
  if (f.rows() != 1 || f.cols() != c.dim()) throw algebra_error("hit_right: bad functional shape");
  Matrix id = Matrix::identity(c.field, c.dim());
  return f.tensor(id) * c.delta;  // c -> f(c_1) c_2
}

Matrix hit_left(const FiniteCoalgebra& c, const Matrix& f) {
  if (f.rows() != 1 || f.cols() != c.dim()) throw algebra_error("hit_left: bad functional shape");
  Matrix id = Matrix::identity(c.field, c.dim());
  return id.tensor(f) * c.delta;  // c -> c_1 f(c_2)
}

bool is_convolution_idempotent(const FiniteCoalgebra& c, const Matrix& f) {
  Matrix ff = f.tensor(f) * c.delta;  // 1 x n, (f*f)(c) = f(c_1) f(c_2)
  return ff == f;
}

FiniteCoalgebra coalgebra_direct_sum(const FiniteCoalgebra& a, const FiniteCoalgebra& b) {
  if (!(a.field == b.field)) throw algebra_error("coalgebra_direct_sum: field mismatch");
  FiniteCoalgebra c;
  c.field = a.field;
  c.names = a.names;
  c.names.insert(c.names.end(), b.names.begin(), b.names.end());
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  c.delta = Matrix(a.field, n * n, n);
  for (const auto& [ij, v] : a.delta.entries())
    c.delta.set((ij.first / na) * n + ij.first % na, ij.second, v);
  for (const auto& [ij, v] : b.delta.entries())
    c.delta.set((na + ij.first / nb) * n + na + ij.first % nb, na + ij.second, v);
  c.counit = Matrix(a.field, 1, n);
  for (int j = 0; j < na; ++j) c.counit.set(0, j, a.counit.get(0, j));
  for (int j = 0; j < nb; ++j) c.counit.set(0, na + j, b.counit.get(0, j));
  if (a.grading && b.grading) {
    std::vector<int> g = *a.grading;
    g.insert(g.end(), b.grading->begin(), b.grading->end());
    c.grading = g;
  }
  return c;
}

FiniteCoalgebra subcoalgebra(const FiniteCoalgebra& c, const Matrix& basis_in) {
  Matrix basis = column_space(basis_in);
  const int m = basis.cols();
  Matrix pair_basis = basis.tensor(basis);
  FiniteCoalgebra sub;
  sub.field = c.field;
  sub.delta = Matrix(c.field, m * m, m);
  sub.counit = c.counit * basis;
  for (int j = 0; j < m; ++j) {
    auto coords = coordinates(pair_basis, c.delta * basis.col(j));
    if (!coords) throw algebra_error("subcoalgebra: span is not closed under delta");
    for (int r = 0; r < m * m; ++r) sub.delta.set(r, j, coords->get(r, 0));
  }
  for (int j = 0; j < m; ++j) {
    // name pure basis columns by the ambient name, others synthetically
    int hits = 0, idx = -1;
    for (int i = 0; i < basis.rows(); ++i)
      if (!basis.get(i, j).is_zero()) { ++hits; idx = i; }
    if (hits == 1 && basis.get(idx, j).is_one())
      sub.names.push_back(c.names[idx]);
    else
      sub.names.push_back("v" + std::to_string(j));
  }
  if (c.grading) {
    // a grading survives only if every column is homogeneous
    std::vector<int> g(m, 0);
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      int deg = -1;
      for (int i = 0; i < basis.rows(); ++i)
        if (!basis.get(i, j).is_zero()) {
          if (deg < 0) deg = (*c.grading)[i];
          else if (deg != (*c.grading)[i]) ok = false;
        }
      g[j] = deg < 0 ? 0 : deg;
    }
    if (ok) sub.grading = g;
  }
  return sub;
}

}  // namespace comat
