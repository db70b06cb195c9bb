#pragma once

#include "comat/comodule.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace comat {

struct Arrow {
  std::string label;
  int src = 0;
  int tgt = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& label) const;
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path is a start vertex plus arrows in traversal order (first arrow
/// traversed first); an empty arrow list is the trivial path at the vertex.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);
bool path_composable(const Quiver& q, const Path& p);
/// Contiguous segment [from, from+len) of the arrow sequence.
Path subpath(const Quiver& q, const Path& p, int from, int len);
std::string path_name(const Quiver& q, const Path& p);

/// Finite description of a (possibly infinite-dimensional) monomial
/// coalgebra: designated pairwise-disjoint oriented cycles contribute all
/// subpaths of their powers; `extra` lists the finitely many other basis
/// paths (trivial paths at all vertices are always included).
struct MonomialSpec {
  Quiver quiver;
  std::vector<std::vector<int>> cycles;  // arrow index sequences
  std::vector<Path> extra;
  Field field{};

  friend bool operator==(const MonomialSpec&, const MonomialSpec&) = default;
};

struct SpecViolation {
  std::string rule;
  std::string witness;
};

struct SpecReport {
  bool valid = true;
  std::vector<SpecViolation> violations;
};

SpecReport validate_spec(const MonomialSpec& s);

/// Cycle index containing the vertex, or -1.
int cycle_at_vertex(const MonomialSpec& s, int vertex);

/// Is every arrow of p on a single designated cycle, consecutively?
bool path_on_cycle(const MonomialSpec& s, const Path& p);

/// All basis paths of length <= maxlen, ordered by (length, start, arrows).
std::vector<Path> basis_paths(const MonomialSpec& s, int maxlen);

/// Truncated monomial coalgebra on the basis paths of length <= degree,
/// graded by path length, with the prefix (x) suffix comultiplication.
FiniteCoalgebra instantiate(const MonomialSpec& s, int degree);

struct ExtQuiver {
  std::vector<std::string> vertices;              // simple labels
  std::map<std::pair<int, int>, int> arrows;      // (src,tgt) -> multiplicity
  std::vector<int> successor;                     // alpha, -1 where undefined
  bool disjoint_cycle_union = false;
  std::vector<int> cycle_lengths;                 // when a disjoint cycle union
};

/// Ext-quiver of a pointed coalgebra from the C_1/C_0 bicomodule blocks;
/// arrows g -> h count the nontrivial (g,h) skew-primitives.
ExtQuiver ext_quiver(const FiniteCoalgebra& c);

/// Combinatorial Ext-quiver of a monomial spec (basis arrows with
/// multiplicity); agrees with ext_quiver of any instantiation at degree >= 1.
ExtQuiver ext_quiver_spec(const MonomialSpec& s);

/// Vertices whose one-sided injective hull is infinite-dimensional: exactly
/// the vertices lying on a designated cycle.
std::vector<int> infinite_vertices(const MonomialSpec& s);

struct SerialWitness {
  int vertex = -1;
  Path first, second;  // two distinct basis paths of equal length at the vertex
};

struct SerialReport {
  bool serial = true;
  std::string certificate;
  std::optional<SerialWitness> witness;
};

/// Combinatorial serial test: on the left, at most one basis path of each
/// length ends at every vertex (mirrored for the right side). Decided from
/// the finite spec data; valid at every truncation degree.
SerialReport is_serial(const MonomialSpec& s, Side side);

/// Spec of the co-opposite coalgebra: all arrows, paths and cycles reversed.
MonomialSpec opposite(const MonomialSpec& s);

std::string to_dot(const Quiver& q);
std::string to_dot(const ExtQuiver& e);

}  // namespace comat
