#pragma once

#include "comat/coalgebra.hpp"

#include <string>
#include <vector>

namespace comat {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

/// A finite-dimensional comodule. For side == left the coaction is a map
/// M -> C (x) M ((nC*dim) x dim), for side == right it is M -> M (x) C
/// ((dim*nC) x dim), both in the lexicographic tensor basis.
struct Comodule {
  FiniteCoalgebra coalgebra;
  Side side = Side::left;
  int dim = 0;
  Matrix coaction;
};

struct ComoduleReport {
  bool coassociative = true;
  bool counital = true;
  int witness = -1;  // basis index of the first failure
  bool ok() const { return coassociative && counital; }
};

ComoduleReport verify_comodule(const Comodule& m);

/// C as a comodule over itself on either side.
Comodule regular_comodule(const FiniteCoalgebra& c, Side side);

/// View a right comodule as a left comodule over the co-opposite coalgebra
/// (and vice versa); coordinates of the underlying space are unchanged.
Comodule to_left(const Comodule& m);

bool is_subcomodule(const Comodule& m, const Matrix& basis);

/// Restrict the coaction to span(basis); throws if not a subcomodule.
Comodule sub_comodule(const Comodule& m, const Matrix& basis);

/// Quotient by a subcomodule. The quotient coordinates are the canonical
/// complement (non-pivot ambient coordinates); if projection_out is non-null
/// it receives the projection matrix M -> M/sub.
Comodule quotient_comodule(const Comodule& m, const Matrix& sub, Matrix* projection_out = nullptr);

/// Largest semisimple subcomodule, as a canonical basis in M-coordinates.
Matrix socle(const Comodule& m);

/// Loewy series L_0 <= L_1 <= ... = M (ascending, last element the whole space).
std::vector<Matrix> loewy(const Comodule& m);

/// Basis of Hom^C(M, N): matrices N.dim x M.dim. Throws on side or
/// coalgebra mismatch.
std::vector<Matrix> hom_comodules(const Comodule& m, const Comodule& n);

/// Split a semisimple subcomodule (e.g. a socle) into simple summands;
/// returns canonical bases of the simple subspaces in M-coordinates.
std::vector<Matrix> decompose_semisimple(const Comodule& m, const Matrix& part);

/// Coradical C_0: over Q via the trace-form radical of the dual algebra,
/// over F_p only for graded coalgebras whose degree-0 part is grouplike.
Matrix coradical(const FiniteCoalgebra& c);

/// The two routes individually (used to cross-check each other).
Matrix coradical_trace_form(const FiniteCoalgebra& c);
Matrix coradical_graded(const FiniteCoalgebra& c);

/// One isomorphism class of simple comodules of C.
struct SimpleClass {
  std::string label;
  Comodule comodule;       // abstract copy
  Matrix embedding;        // C.dim x dim, image inside the coradical
  int multiplicity = 0;    // multiplicity in C_0
};

std::vector<SimpleClass> simple_comodules(const FiniteCoalgebra& c, Side side);

/// Nonzero Hom between simples means isomorphic (Schur).
bool simples_isomorphic(const Comodule& s, const Comodule& t);

struct InjectiveSummand {
  std::string label;       // label of the socle simple
  Comodule simple;
  Comodule injective;      // E(S) with coaction restricted from C
  Matrix injective_basis;  // basis of E(S) inside C
  Matrix socle_basis;      // basis of soc E(S) inside C
  int multiplicity = 0;    // n(S)
};

/// Decomposition of C into indecomposable injectives E(S)^{n(S)} on the
/// given side, computed by lifting primitive idempotents of C*.
struct InjectiveDecomposition {
  Side side = Side::left;
  std::vector<InjectiveSummand> summands;
  /// every indecomposable block (with repetition), in deterministic order
  std::vector<Matrix> blocks;
};

InjectiveDecomposition injectives(const FiniteCoalgebra& c, Side side);

/// M is injective iff dim M equals the dimension of the injective hull of
/// its socle, assembled from the decomposition of C.
bool is_injective_comodule(const Comodule& m);

struct EmbedResult {
  int copies = 0;      // n in M -> C^n
  Matrix map;          // (n * C.dim) x M.dim, verified injective
  std::vector<Matrix> functionals;  // the generators f_i of M* used
};

/// Monomorphism M -> C^n with u_i(m) = f_i applied to the coaction of m,
/// for generators f_i of M* over C*; n = max socle isotype multiplicity.
EmbedResult embed_in_power(const Comodule& m);

/// Modules over a finite-dimensional algebra, for the duality functor.
struct FiniteModule {
  FiniteAlgebra algebra;
  Side side = Side::left;
  int dim = 0;
  /// left: dim x (nA*dim) for a (x) m; right: dim x (dim*nA) for m (x) a
  Matrix action;

  friend bool operator==(const FiniteModule&, const FiniteModule&) = default;
};

AlgebraReport verify_module(const FiniteModule& m);

/// M* as a module over dual_algebra(C); left comodules give left modules.
FiniteModule dualize(const Comodule& m);

/// Dual of a morphism is its transpose (contravariant).
Matrix dualize_map(const Matrix& h);

}  // namespace comat
