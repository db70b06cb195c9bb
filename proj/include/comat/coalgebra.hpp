#pragma once

#include "comat/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comat {

/// A finite-dimensional coalgebra presented by structure constants on a
/// named basis. delta maps C -> C (x) C in the lexicographic tensor basis
/// (row i*n+j is b_i (x) b_j), counit is a functional as a 1 x n matrix.
/// An optional grading records path lengths for monomial-style coalgebras.
struct FiniteCoalgebra {
  Field field{};
  std::vector<std::string> names;
  Matrix delta;    // (n*n) x n
  Matrix counit;   // 1 x n
  std::optional<std::vector<int>> grading;

  int dim() const { return static_cast<int>(names.size()); }

  /// Comultiplication flipped; left comodules over C are right comodules
  /// over the co-opposite, which lets one-sided algorithms serve both sides.
  FiniteCoalgebra co_opposite() const;

  friend bool operator==(const FiniteCoalgebra&, const FiniteCoalgebra&) = default;
};

/// A finite-dimensional associative algebra by structure constants:
/// mul maps A (x) A -> A (an n x n*n matrix), unit is a column vector.
struct FiniteAlgebra {
  Field field{};
  std::vector<std::string> names;
  Matrix mul;    // n x (n*n)
  Matrix unit;   // n x 1

  int dim() const { return static_cast<int>(names.size()); }

  /// Product of two coordinate vectors (n x 1 columns).
  Matrix product(const Matrix& a, const Matrix& b) const { return mul * a.tensor(b); }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

struct CoalgebraReport {
  bool coassociative = true;
  bool counital = true;
  /// Basis element where the first failing identity was detected.
  std::optional<std::string> witness;
  bool ok() const { return coassociative && counital; }
};

/// Check (Delta (x) id) Delta = (id (x) Delta) Delta and the counit laws
/// exactly; on failure the witness names the first bad basis element.
CoalgebraReport verify_coalgebra(const FiniteCoalgebra& c);

struct AlgebraReport {
  bool associative = true;
  bool unital = true;
  std::optional<std::string> witness;
  bool ok() const { return associative && unital; }
};

AlgebraReport verify_algebra(const FiniteAlgebra& a);

/// Convolution algebra on the dual basis: (f*g)(c) = f(c_1) g(c_2),
/// unit = counit. Structure constants are the transpose of delta.
FiniteAlgebra dual_algebra(const FiniteCoalgebra& c);

/// Right hit of a functional on C: c <- f = f(c_1) c_2, as an n x n operator.
Matrix hit_right(const FiniteCoalgebra& c, const Matrix& f);

/// Left hit: f -> c = c_1 f(c_2), as an n x n operator.
Matrix hit_left(const FiniteCoalgebra& c, const Matrix& f);

/// Is f * f = f in the convolution algebra? f is a 1 x n functional.
bool is_convolution_idempotent(const FiniteCoalgebra& c, const Matrix& f);

/// Direct sum of coalgebras (block diagonal delta).
FiniteCoalgebra coalgebra_direct_sum(const FiniteCoalgebra& a, const FiniteCoalgebra& b);

/// The span of the given columns as a subcoalgebra; throws if delta does not
/// restrict. Names are taken from pure basis columns where possible.
FiniteCoalgebra subcoalgebra(const FiniteCoalgebra& c, const Matrix& basis);

}  // namespace comat
