#pragma once

#include "comat/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace comat {

/// Truncated formal power series with a precision watermark: coefficients
/// are exact and correct for every exponent below the watermark; nothing is
/// reported beyond it. Exact polynomials carry an effectively infinite
/// watermark.
class PowerSeries {
 public:
  static constexpr int exact_watermark = 1 << 24;

  PowerSeries() = default;
  PowerSeries(Field f, int watermark) : field_(f), watermark_(watermark) {}

  static PowerSeries zero(Field f, int watermark = exact_watermark) { return PowerSeries(f, watermark); }
  static PowerSeries one(Field f) { return monomial(f, Scalar::one(f), 0); }
  static PowerSeries monomial(Field f, const Scalar& c, int exp);
  static PowerSeries from_coeffs(Field f, const std::vector<Scalar>& coeffs,
                                 int watermark = exact_watermark);

  const Field& field() const { return field_; }
  int watermark() const { return watermark_; }
  Scalar coeff(int k) const;
  void set_coeff(int k, const Scalar& v);

  /// Smallest exponent with nonzero coefficient; equals watermark() when the
  /// series is certified zero up to the watermark.
  int valuation() const;
  /// Largest stored nonzero exponent, -1 for a (certified) zero.
  int top_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool certified_zero(int upto) const { return valuation() >= upto && watermark_ >= upto; }
  bool known_nonzero() const { return valuation() < watermark_; }

  PowerSeries truncated(int watermark) const;
  PowerSeries shifted(int k) const;  // multiply by z^k (k >= 0)
  PowerSeries scaled(const Scalar& c) const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.field_ == b.field_ && a.watermark_ == b.watermark_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  void trim();

  Field field_{};
  int watermark_ = exact_watermark;
  std::vector<Scalar> coeffs_;  // dense from exponent 0, trimmed
};

/// Inverse of a unit (valuation 0), correct up to min(watermark, precision).
PowerSeries invert_unit(const PowerSeries& s, int precision);

using SeriesMatrix = std::vector<std::vector<PowerSeries>>;

SeriesMatrix series_identity(Field f, int n);
SeriesMatrix series_mul(const SeriesMatrix& a, const SeriesMatrix& b);
/// Inverse of a matrix whose constant term is invertible, to the watermark.
SeriesMatrix series_inverse(const SeriesMatrix& a, int precision);

/// Valuation sentinel for zero diagonal entries.
constexpr int val_infinity = -1;

struct SNFResult {
  std::vector<int> valuations;  // ascending; val_infinity for zero entries
  SeriesMatrix u, v;            // unimodular, U A V = diag(z^n_i) to the watermark
  int watermark = 0;            // certification level of the diagonal identity
};

/// Smith normal form over K[[z]]: pivot of minimal valuation, ties by lowest
/// (row, col). Throws algebra_error("insufficient precision: ...") when an
/// entry's valuation cannot be certified below the requested precision.
SNFResult snf_dvr(const SeriesMatrix& a, int precision);

/// Element of a complete cycle algebra with finite support: paths on the
/// designated disjoint cycles, keyed by (start vertex, length).
struct PathPoly {
  std::map<std::pair<int, int>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const PathPoly&, const PathPoly&) = default;
};

/// The complete path algebra of a disjoint union of cycles (Example-style
/// convolution); z is the sum of the full cycles based at every vertex.
struct CompleteCycleAlgebra {
  MonomialSpec spec;              // cycles only, every vertex on a cycle
  std::vector<int> cycle_of;      // vertex -> cycle index
  std::vector<int> pos_in_cycle;  // vertex -> position along its cycle
  std::vector<int> cycle_len;     // per cycle

  Field field() const { return spec.field; }
  int vertices() const { return static_cast<int>(spec.quiver.vertices.size()); }
  int vertex_cycle_len(int v) const { return cycle_len[cycle_of[v]]; }
  /// Target vertex of the unique cycle path of the given length from v.
  int step(int v, int len) const;

  friend bool operator==(const CompleteCycleAlgebra&, const CompleteCycleAlgebra&) = default;
};

CompleteCycleAlgebra make_cycle_algebra(const MonomialSpec& s);

/// K[[z]] presented as the one-loop cycle algebra.
CompleteCycleAlgebra power_series_algebra(Field f);

PathPoly path_poly_term(const Scalar& c, int start_vertex, int len);
PathPoly pp_add(const PathPoly& a, const PathPoly& b);
PathPoly pp_scale(const PathPoly& a, const Scalar& c);
/// Convolution product: (p*q) at a path r sums p(prefix) q(suffix).
PathPoly pp_mul(const CompleteCycleAlgebra& alg, const PathPoly& a, const PathPoly& b);
/// The central element z (sum of full cycles at every vertex).
PathPoly pp_z(const CompleteCycleAlgebra& alg);
std::string pp_str(const CompleteCycleAlgebra& alg, const PathPoly& p);

/// Finitely generated left module over a complete cycle algebra, by a
/// presentation matrix with path-polynomial entries. Generator j lives at
/// gen_vertex[j]; entry (i, j) is a combination of paths ending there.
struct FgPresentation {
  CompleteCycleAlgebra algebra;
  std::vector<int> gen_vertex;
  std::vector<std::vector<PathPoly>> relations;  // rows x gens

  friend bool operator==(const FgPresentation&, const FgPresentation&) = default;
};

void validate_presentation(const FgPresentation& p);

/// The same module as a K[[z]]-module: each generator at v splits into one
/// K[[z]]-generator per basis path ending at v of length below the cycle
/// length, and every relation row is expanded over its path orbit.
struct RestrictedPresentation {
  Field field{};
  int gens = 0;
  std::vector<std::string> gen_labels;
  std::vector<std::pair<int, int>> gen_key;  // (original generator, path length)
  SeriesMatrix rows;                         // relations x gens, exact entries
};

RestrictedPresentation restrict_scalars(const FgPresentation& p);

/// Coordinates of a module element (one PathPoly per original generator)
/// in the restricted K[[z]] generators.
std::vector<PowerSeries> restricted_coordinates(const FgPresentation& p,
                                                const RestrictedPresentation& r,
                                                const std::vector<PathPoly>& element);

enum class RatStatus { ok, insufficient_precision };

struct RatPartResult {
  RatStatus status = RatStatus::ok;
  std::vector<int> torsion_valuations;  // cyclic factors z^{n_i}, n_i >= 1, ascending
  int free_rank = 0;
  RestrictedPresentation restricted;
  SNFResult snf;
  /// splitting maps on the restricted coordinates, to the watermark
  SeriesMatrix inclusion;   // gens x t
  SeriesMatrix projection;  // t x gens
  /// torsion generators as columns over the restricted coordinates
  SeriesMatrix torsion_generators;  // gens x t
  int watermark = 0;
  bool residual_certified_zero = false;
  std::string report;
};

/// Torsion/free splitting of a finitely generated module: invariant factors
/// via SNF, explicit projection/inclusion verified to the watermark. The
/// certificate margin (watermark minus largest valuation) must be at least
/// `slack` or the result reports insufficient precision.
RatPartResult rat_part_fg(const FgPresentation& p, int precision, int slack = 4);

/// Degree-truncated model of the module for brute-force cross-checks:
/// ambient K^{gens * level} with the relation span padded by the top-degree
/// fog, and the z-shift operator.
struct TruncatedModule {
  Field field{};
  int gens = 0;
  int level = 0;
  int guard = 0;       // top-degree fog starts at level - guard
  Matrix relations;    // ambient relation + fog span (canonical basis)
  Matrix shift;        // multiplication by z on the ambient space
};

TruncatedModule truncate_module(const RestrictedPresentation& r, int level);

/// Ambient coordinates of a module element at the truncation level.
Matrix truncated_vector(const TruncatedModule& t, const std::vector<PowerSeries>& coords);

}  // namespace comat
