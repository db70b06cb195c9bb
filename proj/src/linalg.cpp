#include "comat/linalg.hpp"

#include <algorithm>

namespace comat {

namespace {

// Dense working copy for elimination; desk-scale dimensions only.
struct Dense {
  Field f;
  int rows, cols;
  std::vector<std::vector<Scalar>> a;

  explicit Dense(const Matrix& m)
      : f(m.field()), rows(m.rows()), cols(m.cols()),
        a(m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(m.field()))) {
    for (const auto& [ij, v] : m.entries()) a[ij.first][ij.second] = v;
  }

  Matrix to_matrix() const {
    Matrix out(f, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out.set(i, j, a[i][j]);
    return out;
  }
};

}  // namespace

Rref rref(const Matrix& m) {
  Dense d(m);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < d.cols && r < d.rows; ++c) {
    int pr = -1;
    for (int i = r; i < d.rows; ++i)
      if (!d.a[i][c].is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(d.a[r], d.a[pr]);
    Scalar inv = d.a[r][c].inverse();
    for (int j = c; j < d.cols; ++j) d.a[r][j] = d.a[r][j] * inv;
    for (int i = 0; i < d.rows; ++i) {
      if (i == r || d.a[i][c].is_zero()) continue;
      Scalar factor = d.a[i][c];
      for (int j = c; j < d.cols; ++j) d.a[i][j] = d.a[i][j] - factor * d.a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{d.to_matrix(), pivots};
}

int rank(const Matrix& a) { return rref(a).rank(); }

Matrix kernel(const Matrix& a) {
  Rref e = rref(a);
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    for (int c = 0; c < a.cols(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix out(a.field(), a.cols(), static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[k];
    out.set(fc, k, Scalar::one(a.field()));
    for (int r = 0; r < static_cast<int>(e.pivot_cols.size()); ++r)
      out.set(e.pivot_cols[r], k, -e.mat.get(r, fc));
  }
  return out;
}

SolveResult solve(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows() || b.cols() != 1) throw algebra_error("solve: bad rhs shape");
  Rref e = rref(a.hcat(b));
  SolveResult res;
  res.kernel = kernel(a);
  // inconsistent iff the augmented column is a pivot
  for (int c : e.pivot_cols)
    if (c == a.cols()) {
      res.consistent = false;
      res.particular = Matrix(a.field(), a.cols(), 1);
      return res;
    }
  res.consistent = true;
  Matrix x(a.field(), a.cols(), 1);
  for (int r = 0; r < static_cast<int>(e.pivot_cols.size()); ++r)
    x.set(e.pivot_cols[r], 0, e.mat.get(r, a.cols()));
  res.particular = x;
  return res;
}

Matrix flip_tensor(Field f, int n1, int n2) {
  Matrix p(f, n1 * n2, n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) p.set(j * n1 + i, i * n2 + j, Scalar::one(f));
  return p;
}

Matrix column_space(const Matrix& a) {
  Rref e = rref(a.transpose());
  Matrix t = e.mat.transpose();
  std::vector<int> keep;
  for (int j = 0; j < e.rank(); ++j) keep.push_back(j);
  return t.submatrix_cols(keep);
}

bool in_span(const Matrix& basis, const Matrix& v) {
  return solve(basis, v).consistent;
}

Matrix span_sum(const Matrix& a, const Matrix& b) { return column_space(a.hcat(b)); }

Matrix span_intersect(const Matrix& a, const Matrix& b) {
  // Zassenhaus-style: kernel of [A | -B] gives matching coordinate pairs.
  if (a.rows() != b.rows()) throw algebra_error("span_intersect: ambient mismatch");
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.field(), a.rows(), 0);
  Matrix k = kernel(a.hcat(b.scaled(Scalar::of(a.field(), -1))));
  Matrix coeff(a.field(), a.cols(), k.cols());
  for (const auto& [ij, v] : k.entries())
    if (ij.first < a.cols()) coeff.set(ij.first, ij.second, v);
  return column_space(a * coeff);
}

Matrix span_preimage(const Matrix& f, const Matrix& target) {
  // { v : f v in span(target) } = projection of ker[f | -target] onto v-part
  Matrix k = kernel(f.hcat(target.scaled(Scalar::of(f.field(), -1))));
  Matrix vpart(f.field(), f.cols(), k.cols());
  for (const auto& [ij, v] : k.entries())
    if (ij.first < f.cols()) vpart.set(ij.first, ij.second, v);
  return column_space(vpart);
}

std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& v) {
  SolveResult s = solve(basis, v);
  if (!s.consistent) return std::nullopt;
  return s.particular;
}

std::vector<int> complement_indices(const Matrix& basis, int ambient_dim) {
  // pivot ROWS of the column space are the coordinates covered by the basis;
  // complement = non-pivot rows.
  Rref e = rref(basis.transpose());
  std::vector<bool> covered(ambient_dim, false);
  for (int c : e.pivot_cols) covered[c] = true;
  std::vector<int> out;
  for (int i = 0; i < ambient_dim; ++i)
    if (!covered[i]) out.push_back(i);
  return out;
}

Matrix quotient_projection(const Matrix& sub, int ambient_dim) {
  Field f = sub.field();
  Matrix s = column_space(sub);
  std::vector<int> comp = complement_indices(s, ambient_dim);
  Matrix e(f, ambient_dim, static_cast<int>(comp.size()));
  for (int j = 0; j < static_cast<int>(comp.size()); ++j) e.set(comp[j], j, Scalar::one(f));
  Matrix full = s.cols() == 0 ? e : s.hcat(e);
  Matrix p(f, static_cast<int>(comp.size()), ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    Matrix ei(f, ambient_dim, 1);
    ei.set(i, 0, Scalar::one(f));
    auto coords = coordinates(full, ei);
    if (!coords) throw algebra_error("quotient_projection: basis completion failed");
    for (int r = 0; r < static_cast<int>(comp.size()); ++r) p.set(r, i, coords->get(s.cols() + r, 0));
  }
  return p;
}

}  // namespace comat
