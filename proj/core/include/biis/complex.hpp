#pragma once

#include "biis/types.hpp"

#include <string>
#include <vector>

namespace biis {

struct VertexInfo {
  Color color = 0;
  std::string label;
};

/// A chromatic simplicial complex stored as a facet list.
///
/// Vertices carry process colors; every simplex has pairwise distinct colors.
/// Construction normalizes the facet list: simplices are canonicalized,
/// duplicates and dominated entries (faces of other facets) are dropped, and
/// any vertex not covered by a facet becomes a singleton facet, so every
/// vertex of the table is a face of the complex. The empty simplex is a face
/// of every complex, including the empty complex (no vertices, no facets).
///
/// Faces are generated on demand from the facet list. Instances are immutable
/// after construction and safe to share across threads.
class ChromaticComplex {
 public:
  /// The empty complex with the given number of process colors.
  explicit ChromaticComplex(int num_processes = 0);

  /// Throws std::invalid_argument on out-of-range ids or colors, or on a
  /// facet with two vertices of one color.
  ChromaticComplex(int num_processes, std::vector<VertexInfo> vertices,
                   std::vector<Simplex> facets);

  int num_processes() const { return num_processes_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const VertexInfo& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<VertexInfo>& vertices() const { return vertices_; }
  Color color_of(VertexId v) const { return vertices_.at(v).color; }

  /// Normalized facet list: canonical simplices in lexicographic order.
  const std::vector<Simplex>& facets() const { return facets_; }

  /// Dimension: largest facet dimension; -1 for the empty complex.
  int dim() const;

  /// True iff s is a face (the empty simplex always is).
  bool contains(const Simplex& s) const;

  /// All k-dimensional faces, each once, in lexicographic order.
  /// k = -1 yields the empty simplex; any other out-of-range k yields {}.
  FaceSet faces(int k) const;

  /// All non-empty faces, dimension by dimension.
  FaceSet all_faces() const;

  FVector f_vector() const;

  std::vector<VertexId> vertices_of_color(Color p) const;

  /// 1-skeleton adjacency: sorted neighbor list per vertex.
  std::vector<std::vector<VertexId>> adjacency() const;

  /// Neighbors of v in the 1-skeleton; exactly the vertex set of the link
  /// of v, in this complex's own ids.
  std::vector<VertexId> link_vertices(VertexId v) const;

  int degree(VertexId v) const;

  /// Structural equality of the normalized form: same process count, same
  /// per-id colors and same facet list. Labels are ignored.
  bool operator==(const ChromaticComplex& o) const;
  bool operator!=(const ChromaticComplex& o) const { return !(*this == o); }

 private:
  void validate_and_normalize();

  int num_processes_ = 0;
  std::vector<VertexInfo> vertices_;
  std::vector<Simplex> facets_;
};

/// Builds the subcomplex spanned by `faces` (their maximal members become
/// facets). Vertices are re-indexed densely in ascending parent-id order,
/// keeping parent colors and labels. When `parent_ids` is non-null it
/// receives, per new id, the parent id it came from.
ChromaticComplex complex_from_faces(const ChromaticComplex& parent,
                                    const FaceSet& faces,
                                    std::vector<VertexId>* parent_ids = nullptr);

/// Closed star: all faces of the subcomplex generated by the faces of c that
/// contain some non-empty member of s, in c's ids (the empty simplex is
/// omitted). Throws std::invalid_argument if a member of s is not a face.
FaceSet star_faces(const ChromaticComplex& c, const FaceSet& s);

/// Closed star as a re-indexed complex.
ChromaticComplex star(const ChromaticComplex& c, const FaceSet& s);

/// Link of a sub-collection: the faces of star(c, s) sharing no vertex with
/// any non-empty member of s, in c's ids.
FaceSet link_faces(const ChromaticComplex& c, const FaceSet& s);

/// Link as a re-indexed complex.
ChromaticComplex link(const ChromaticComplex& c, const FaceSet& s);

/// Number of color-p vertices in link(c, s); avoids building the complex.
int link_count_of_color(const ChromaticComplex& c, const FaceSet& s, Color p);

/// Open star St°(c, s): exactly the faces of c containing s, including s.
/// Throws std::invalid_argument if s is not a face of c.
FaceSet open_star(const ChromaticComplex& c, const Simplex& s);

/// Boundary: the subcomplex generated by the proper faces contained in
/// exactly one facet (plus the empty simplex), re-indexed.
ChromaticComplex boundary(const ChromaticComplex& c);

/// Interior: all non-empty faces of c that are not faces of boundary(c),
/// in c's ids.
FaceSet interior(const ChromaticComplex& c);

/// All faces of dimension <= l as a complex on the same vertex table.
/// l < 0 yields the empty complex.
ChromaticComplex skeleton(const ChromaticComplex& c, int l);

/// Join: faces are all unions of a face of a and a face of b. Vertex ids of
/// b are shifted past a's. Throws std::invalid_argument when some union
/// would repeat a color.
ChromaticComplex join(const ChromaticComplex& a, const ChromaticComplex& b);

/// Keeps the simplices whose vertices all have color p.
FaceSet restrict_to_color(const ChromaticComplex& c, const FaceSet& fs,
                          Color p);

/// Number of color-p neighbors of v: the edges of St°(c, v) whose endpoint
/// other than v has color p.
int star_edges_to_color(const ChromaticComplex& c, VertexId v, Color p);

/// f-vector of a face collection; counts the empty simplex at f_{-1} when
/// present.
FVector fvector_of(const FaceSet& fs);

}  // namespace biis
