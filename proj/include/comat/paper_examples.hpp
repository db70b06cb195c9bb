#pragma once

#include "comat/comatrix.hpp"
#include "comat/splitting.hpp"

namespace comat {
namespace examples {

/// Basis c_0..c_N with Delta(c_n) = sum_{i+j=n} c_i (x) c_j; the finite dual
/// of K[[X]] truncated at degree N, graded by n.
FiniteCoalgebra divided_power(int n, Field f = field_q());

/// One vertex, one loop, the loop as its cycle: instantiates to divided_power.
MonomialSpec divided_power_spec(Field f = field_q());

struct Example42 {
  FiniteCoalgebra coalgebra;  // basis c_0..c_N, x, d
  MonomialSpec spec;          // loop at u plus arrow x: u -> w
  TriangularData data;        // D = divided_power(N), E = K{d}, M = K{x}
};

/// The triangular coalgebra with left but not right finite Rat-splitting.
Example42 example_4_2(int n, Field f = field_q());

/// Basis a, b_1..b_N, x_1..x_N with Delta(x_n) = b_n (x) x_n + x_n (x) a;
/// truncation of the infinite star quiver coalgebra.
FiniteCoalgebra example_sec2(int n, Field f = field_q());

/// D = divided power spec, E = K, M = D: left but not right Artinian.
ArtinianQuery artinian_asymmetry(Field f = field_q());

/// The same query with M replaced by a one-dimensional bicomodule, which is
/// Artinian on both sides.
ArtinianQuery artinian_symmetric_variant(Field f = field_q());

/// The cyclic quiver with n vertices and its full cycle.
MonomialSpec cyclic_monomial(int n, Field f = field_q());

/// Two-cycle v1 <-> v2 plus an extra arrow c: v1 -> w (conditions (a),(b)
/// hold; left splitting yes, right splitting no).
MonomialSpec example_4_6_instance(Field f = field_q());

}  // namespace examples
}  // namespace comat
