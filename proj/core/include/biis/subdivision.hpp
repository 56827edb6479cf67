#pragma once

#include "biis/complex.hpp"

#include <map>
#include <utility>
#include <vector>

namespace biis {

/// One application of the standard chromatic subdivision Ch.
///
/// Vertices of Ch c are (color, carrier) pairs, the carrier being a non-empty
/// face of c containing a vertex of that color. Facets of Ch c correspond
/// one-to-one with pairs (facet G of c, ordered set partition (B_1, ..., B_m)
/// of V(G)): block B_j contributes the vertices (color(u), B_1 ∪ ... ∪ B_j)
/// for each u ∈ B_j. Sharing of (color, carrier) pairs between facets glues
/// adjacent subdivided facets together.
///
/// Result vertex ids are canonical: ascending (color, carrier) order.
/// Result labels render as `(color,[...])` with carrier members shown by
/// base label (or id when unlabeled), so labels nest across iterations.
class Subdivision {
 public:
  /// Builds Ch(base). Throws ResourceCapExceeded when the predicted facet
  /// count (sum of ordered Bell numbers over base facets) exceeds the cap.
  explicit Subdivision(const ChromaticComplex& base);

  const ChromaticComplex& base() const { return base_; }
  const ChromaticComplex& result() const { return result_; }

  /// Carrier of a result vertex, as a simplex of the base complex.
  const Simplex& carrier_of(VertexId v) const;

  /// Result vertex with the given color and carrier; -1 when absent.
  VertexId vertex_for(Color color, const Simplex& carrier) const;

  /// Carrier of a result simplex: the union (= maximum, carriers being
  /// nested) of its vertices' carriers.
  Simplex carrier_of_simplex(const Simplex& s) const;

  /// Central simplex of the subdivision of one base facet: the result
  /// vertices whose carrier is the whole facet. Throws std::invalid_argument
  /// when the argument is not a facet of the base.
  Simplex central_simplex(const Simplex& base_facet) const;

 private:
  ChromaticComplex base_;
  ChromaticComplex result_;
  std::vector<Simplex> carriers_;  // per result vertex
  std::map<std::pair<Color, Simplex>, VertexId> index_;
};

/// Ch(c).
ChromaticComplex chromatic_subdivide(const ChromaticComplex& c);

/// Ch^r(c); r = 0 returns c unchanged.
ChromaticComplex iterate_subdivide(const ChromaticComplex& c, int r);

/// Ch^r with per-level carrier bookkeeping.
class IteratedSubdivision {
 public:
  IteratedSubdivision(ChromaticComplex base, int r);

  int rounds() const { return static_cast<int>(steps_.size()); }

  /// level(0) = base, level(t) = Ch^t(base).
  const ChromaticComplex& level(int t) const;

  /// The subdivision from level t to level t + 1, 0 <= t < rounds().
  const Subdivision& step(int t) const;

  /// Carriers of a top-level vertex walking down: the entry at position i is
  /// a simplex of level rounds()-1-i, ending with a simplex of the base.
  std::vector<Simplex> carrier_chain(VertexId v) const;

  /// Image of a level `from` vertex at the top level under the canonical
  /// embedding v ↦ (color(v), {v}) applied per level.
  VertexId embed_to_top(int from, VertexId v) const;

 private:
  ChromaticComplex base_;
  std::vector<Subdivision> steps_;
};

/// Oracle construction of the facets of Ch(base) straight from the pairwise
/// simplex rule: vertices are all valid (color, carrier) pairs; two vertices
/// (c, s) and (c', s') are compatible iff c != c', the carriers are nested,
/// and whenever one vertex's color appears in the other's carrier the former
/// vertex's carrier is contained in the latter's. Facets are the maximal
/// cliques of the compatibility graph, returned as canonical vertex-key
/// lists. Intended for small inputs (<= 4 processes) as a cross-check of the
/// partition construction.
std::vector<std::vector<std::pair<Color, Simplex>>>
subdivision_facets_by_pairwise_rule(const ChromaticComplex& base);

/// The partition construction's facets in the same key form, for comparison
/// against subdivision_facets_by_pairwise_rule.
std::vector<std::vector<std::pair<Color, Simplex>>>
subdivision_facets_as_keys(const Subdivision& s);

}  // namespace biis
