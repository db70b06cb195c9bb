#pragma once

#include "comat/matrix.hpp"

#include <optional>
#include <vector>

namespace comat {

/// Reduced row echelon form together with the pivot columns.
struct Rref {
  Matrix mat;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref rref(const Matrix& a);

int rank(const Matrix& a);

/// Basis of the null space as columns of the returned matrix. The basis is
/// the canonical one read off the RREF (free variable set to 1), so equal
/// kernels have equal representations.
Matrix kernel(const Matrix& a);

struct SolveResult {
  bool consistent = false;
  Matrix particular;  // one solution when consistent
  Matrix kernel;      // columns span the solution space of A x = 0
};

/// Exact solve A x = b. Inconsistency is a result, not an error.
SolveResult solve(const Matrix& a, const Matrix& b);

/// Matrix of f tensor g acting on the lexicographically ordered tensor basis.
inline Matrix tensor(const Matrix& f, const Matrix& g) { return f.tensor(g); }

/// Permutation matrix of the flip V (x) W -> W (x) V on lex-ordered bases,
/// with dim V = n1 and dim W = n2.
Matrix flip_tensor(Field f, int n1, int n2);

/// Columns of `a` reduced to a canonical spanning set (reduced column
/// echelon form, zero columns dropped). Two matrices span the same column
/// space iff their canonical forms are equal.
Matrix column_space(const Matrix& a);

/// Is the column vector v in the column span of basis?
bool in_span(const Matrix& basis, const Matrix& v);

/// Sum and intersection of column spans, in canonical form.
Matrix span_sum(const Matrix& a, const Matrix& b);
Matrix span_intersect(const Matrix& a, const Matrix& b);

/// Preimage of a column span under the linear map `f`: canonical basis of
/// { v : f v in span(target) }.
Matrix span_preimage(const Matrix& f, const Matrix& target);

/// Coordinates of v in the columns of basis; nullopt if v is outside.
std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& v);

/// Indices i such that the standard basis vectors e_i complete span(basis)
/// to the full space; useful for canonical complements and quotients.
std::vector<int> complement_indices(const Matrix& basis, int ambient_dim);

/// Projection onto the canonical complement of span(sub): rows are the
/// quotient coordinates, kernel is exactly span(sub).
Matrix quotient_projection(const Matrix& sub, int ambient_dim);

}  // namespace comat
