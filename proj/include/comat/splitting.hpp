#pragma once

#include "comat/comatrix.hpp"
#include "comat/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comat {

/// The two combinatorial conditions sufficient for left splitting: (a) only
/// finitely many basis paths lie outside the designated cycles (structural
/// for a finite spec), (b) no basis path ends at a cycle vertex unless it
/// lies in that cycle.
struct ConditionAB {
  bool a = true;
  bool b = true;
  std::vector<Path> b_witnesses;
};

ConditionAB condition_ab(const MonomialSpec& s);

struct SplitCertificate {
  MonomialSpec d_spec;          // the serial-cyclic corner (on reindexed vertices)
  std::vector<int> d_vertex_map;  // d_spec vertex -> original vertex
  std::vector<int> d_arrow_map;   // d_spec arrow -> original arrow
  std::vector<Path> m_paths;    // basis paths from a cycle vertex into the finite part
  std::vector<Path> e_paths;    // basis paths staying in the finite part
};

struct SplitViolation {
  /// non-almost-finite-injective | ext-quiver-not-cycle | not-serial
  std::string kind;
  std::string detail;
  int vertex = -1;             // in the spec the decision ran on
  std::optional<Path> witness_path;
  /// for non-almost-finite injectives: the family of cycle paths ending at
  /// `vertex` spans an infinite proper subcomodule; its dimension at
  /// truncation N is N + 1
  bool has_growing_family = false;
};

struct SplitDecision {
  Side side = Side::left;
  Verdict verdict = Verdict::undecidable;
  std::optional<SplitCertificate> certificate;
  std::optional<SplitViolation> violation;
  ConditionAB ab;               // reported alongside for cross-validation
  MonomialSpec decided_spec;    // the spec the structural checks ran on
  std::vector<std::string> checks;  // the structural check trail
};

/// Structural decision for the left finite Rat-splitting property:
/// (1) I = cycle vertices; (2) the sub-basis ending in I spans a
/// subcoalgebra with Hom(C_I, C_F) = 0, combinatorially; (3) that corner is
/// serial with a disjoint-cycle-union Ext-quiver; (4) the complement and
/// connecting part are finite.
SplitDecision decide_left_splitting(const MonomialSpec& s);

/// Right side via the co-opposite spec; violation witnesses are translated
/// back to paths of the original spec.
SplitDecision decide_right_splitting(const MonomialSpec& s);

/// Dimension of the violation's growing subcomodule family at truncation N.
int violation_family_dim(const SplitViolation& v, int truncation);

/// Rebuild the truncated coalgebra from a yes-certificate through the
/// triangular comatrix construction and compare with the instantiation of
/// the decided spec at `degree` under the path-identity bijection.
bool verify_split_certificate(const SplitDecision& d, int degree);

/// An element of a finitely generated module over a complete cycle algebra:
/// one path polynomial per presentation generator.
using XElement = std::vector<PathPoly>;

/// P (x) Y -> X action data for a triangular module.
struct PAction {
  /// finite M of dimension m_dim: images[k][j] = p_k . y_j in X
  int m_dim = 0;
  std::vector<std::vector<XElement>> images;
  /// optional bicomodule structure of the finite M, for module-law checks:
  /// left D-coaction terms per basis element (start vertex, length, index,
  /// coefficient) and the right E-coaction matrix
  std::vector<std::vector<std::tuple<int, int, int, Scalar>>> m_left;
  Matrix m_right;
  /// infinite regular M (P = A): xi[j] = image of the unit, so p . y_j = p xi[j]
  bool regular = false;
  std::vector<XElement> xi;

  friend bool operator==(const PAction&, const PAction&) = default;
};

/// A left module over the dual of a triangular comatrix coalgebra, split
/// into its X (over A = D*) and Y (over B = E*) components.
struct TriangularModule {
  bool a_serial_cyclic = false;
  std::optional<FgPresentation> x;        // when a_serial_cyclic
  std::optional<FiniteModule> x_finite;   // when A is finite-dimensional
  FiniteCoalgebra e;                      // the finite corner; B = E*
  FiniteModule y;                         // left module over B = E*
  PAction p;

  friend bool operator==(const TriangularModule&, const TriangularModule&) = default;
};

/// Module-law spot checks on algebra generators; throws on malformed data.
void verify_triangular_module(const TriangularModule& h, int level);

struct RatPResult {
  RatStatus status = RatStatus::ok;
  Matrix subspace;   // of Y
  int bound_used = 0;
};

/// The P-rational part of Y: all of Y for finite M; for regular infinite M
/// the preimage of the torsion part under xi, decided by rank stabilization
/// across truncations with a certified bound.
RatPResult rat_p(const TriangularModule& h, int precision, int bound);

struct RatTriangularResult {
  RatStatus status = RatStatus::ok;
  bool x_all = false;                        // finite A: Rat_A(X) = X
  std::optional<RatPartResult> x_torsion;    // serial-cyclic A
  Matrix y_rat;                              // Rat_B(Y) cap Rat_P(Y)
};

/// Componentwise rational part (Rat_A(X), Rat_B(Y) cap Rat_P(Y)).
RatTriangularResult rat_triangular(const TriangularModule& h, int precision, int bound,
                                   int slack = 4);

struct RatOracleResult {
  RatStatus status = RatStatus::ok;
  int level = 0;
  int stabilized_at = -1;
  /// X-part: canonical span in the truncated ambient coordinates (includes
  /// the relation span); empty when A is finite-dimensional (everything).
  Matrix x_part;
  Matrix relations;  // the relation span it contains
  bool x_all = false;
  Matrix y_rat;
};

/// Brute-force rational part: elements annihilated by every basis path of
/// length >= m for some stabilized m <= bound, in degree-truncated
/// coordinates. Independent of the SNF route.
RatOracleResult rat_oracle(const TriangularModule& h, int bound, int level);

/// Default rank-stabilization bound: 4 * (max cycle length) * (dim Y + generators).
int default_rat_bound(const TriangularModule& h);

/// Componentwise subspace comparison of rat_triangular against rat_oracle
/// at a shared truncation level; the formula route runs at a precision high
/// enough to certify every coefficient the oracle sees.
bool rat_routes_agree(const TriangularModule& h, int precision, int bound, std::string* detail);

}  // namespace comat
