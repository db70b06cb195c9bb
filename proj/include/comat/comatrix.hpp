#pragma once

#include "comat/comodule.hpp"
#include "comat/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comat {

/// A D-E-bicomodule: left D-coaction x -> x_{-1} (x) x_0 and right
/// E-coaction x -> x_0 (x) x_1, commuting.
struct Bicomodule {
  FiniteCoalgebra left_coalgebra;   // D
  FiniteCoalgebra right_coalgebra;  // E
  int dim = 0;
  Matrix left_coaction;   // (nD*dim) x dim
  Matrix right_coaction;  // (dim*nE) x dim

  friend bool operator==(const Bicomodule&, const Bicomodule&) = default;
};

struct BicomoduleReport {
  bool left_ok = true;
  bool right_ok = true;
  bool compatible = true;
  int witness = -1;
  bool ok() const { return left_ok && right_ok && compatible; }
};

BicomoduleReport verify_bicomodule(const Bicomodule& x);

Bicomodule zero_bicomodule(const FiniteCoalgebra& d, const FiniteCoalgebra& e);

/// The sextuple (D, E, X, Y, phi, psi): X a D-E-bicomodule, Y an
/// E-D-bicomodule, phi: D -> X (x) Y and psi: E -> Y (x) X.
struct MoritaTakeuchiContext {
  FiniteCoalgebra d, e;
  Bicomodule x;  // D-E
  Bicomodule y;  // E-D
  Matrix phi;    // (dimX*dimY) x nD
  Matrix psi;    // (dimY*dimX) x nE

  friend bool operator==(const MoritaTakeuchiContext&, const MoritaTakeuchiContext&) = default;
};

struct ContextReport {
  bool ok = true;
  std::vector<std::string> failures;       // which identities failed
  std::string failing_element;             // basis element of the first failure
};

/// All Morita-Takeuchi context conditions on basis elements: bicomodule
/// axioms, cotensor membership of phi/psi, bicolinearity, and the two
/// elementwise compatibility identities.
ContextReport check_context(const MoritaTakeuchiContext& ctx);

/// Assemble D + X + Y + E with the eight-term comultiplication; no checks.
FiniteCoalgebra assemble_generalized_comatrix(const MoritaTakeuchiContext& ctx);

/// Checked construction: refuses (throws) when check_context fails, naming
/// the failing identity.
FiniteCoalgebra generalized_comatrix(const MoritaTakeuchiContext& ctx);

struct TriangularData {
  FiniteCoalgebra d, e;
  Bicomodule m;  // D-E

  friend bool operator==(const TriangularData&, const TriangularData&) = default;
};

MoritaTakeuchiContext context_of_triangular(const TriangularData& t);

/// Upper triangular comatrix coalgebra D + M + E (Y = 0, phi = psi = 0).
FiniteCoalgebra triangular_comatrix(const TriangularData& t);

struct SemitrivialExtension {
  FiniteCoalgebra coalgebra;      // D + M with the three-term comultiplication
  FiniteCoalgebra triangular;     // the comatrix coalgebra (D, D, M)
  Matrix quotient_map;            // triangular -> coalgebra, a coalgebra map
  Matrix kernel_basis;            // the coideal { (d, 0, -d) }
};

SemitrivialExtension semitrivial_extension(const FiniteCoalgebra& d, const Bicomodule& m);

/// The four-block decomposition of C along a convolution idempotent e of
/// C*, with corner coalgebras eCe/fCf, off-diagonal bicomodules, context
/// maps, and the verified isomorphism C ~ assembled comatrix coalgebra.
struct IdempotentDecomposition {
  Matrix block_ee, block_fe, block_ef, block_ff;  // subspaces of C
  MoritaTakeuchiContext context;                  // D=eCe, E=fCf, X=fCe, Y=eCf
  FiniteCoalgebra assembled;
  Matrix iso;  // C -> assembled, invertible coalgebra map
};

IdempotentDecomposition idempotent_decompose(const FiniteCoalgebra& c, const Matrix& e);

struct TriangularDecomposeResult {
  bool ok = false;
  TriangularData data;                 // when ok
  FiniteCoalgebra assembled;           // triangular comatrix of `data`
  Matrix iso;                          // C -> assembled
  std::vector<Matrix> hom_witness;     // nonzero Hom(X, Y) on refusal
};

/// Split C = X + Y (left comodules) as an upper triangular comatrix
/// coalgebra; refuses with the nonzero Hom(X, Y) witness when X is not a
/// subcoalgebra.
TriangularDecomposeResult triangular_decompose(const FiniteCoalgebra& c, const Matrix& x_basis,
                                               const Matrix& y_basis);

enum class Verdict { yes, no, undecidable };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::yes ? "yes" : v == Verdict::no ? "no" : "undecidable";
}

/// One corner of an Artinian query: a finite coalgebra or a monomial spec
/// (infinite-dimensional when it has cycles).
struct CoalgebraDesc {
  std::optional<FiniteCoalgebra> finite;
  std::optional<MonomialSpec> spec;

  friend bool operator==(const CoalgebraDesc&, const CoalgebraDesc&) = default;
};

/// The connecting bicomodule: finite data, or the regular flag for M = D as
/// a left D-comodule with trivial right E-structure.
struct BicomoduleDesc {
  std::optional<Bicomodule> finite;
  bool regular_left = false;

  friend bool operator==(const BicomoduleDesc&, const BicomoduleDesc&) = default;
};

struct ArtinianQuery {
  CoalgebraDesc d, e;
  BicomoduleDesc m;

  friend bool operator==(const ArtinianQuery&, const ArtinianQuery&) = default;
};

struct ArtinianResult {
  Verdict left = Verdict::undecidable;
  Verdict right = Verdict::undecidable;
  std::vector<std::string> reasons;
};

/// Triangular Artinian criterion: left Artinian iff D and E are left
/// Artinian and M is finitely cogenerated as a left D-comodule (mirrored on
/// the right over E). Inputs outside the decidable classes come back
/// undecidable, never guessed.
ArtinianResult is_left_artinian_triangular(const ArtinianQuery& q);

}  // namespace comat
