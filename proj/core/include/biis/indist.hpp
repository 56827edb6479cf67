#pragma once

#include "biis/complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biis {

/// Indistinguishability graph G_p: nodes are the p-colored vertices of the
/// source complex; (v, w) is an edge iff some vertex t of the complex has
/// both v and w in its link.
struct IndistGraph {
  Color color = 0;
  std::vector<VertexId> nodes;                       // ascending
  std::vector<std::pair<VertexId, VertexId>> edges;  // (min, max), sorted

  int degree(VertexId v) const;
  int max_degree() const;
  bool has_edge(VertexId v, VertexId w) const;
};

/// A total assignment of integer codes >= 1 to the vertices of one complex.
struct Encoding {
  std::map<VertexId, int> codes;

  int code_of(VertexId v) const;
  int image_size() const;

  static Encoding injective(const ChromaticComplex& c);
  static Encoding constant(const ChromaticComplex& c, int code = 1);
};

/// Failure witness: t and w lie in the link of s, share a color, and carry
/// the same code.
struct DistWitness {
  VertexId s = -1;
  VertexId t = -1;
  VertexId w = -1;
};

struct DistResult {
  bool distinguishable = false;
  std::optional<DistWitness> witness;  // present iff not distinguishable
};

IndistGraph indist_graph(const ChromaticComplex& c, Color p);

/// True iff for every vertex s and every color q != color(s) the encoding is
/// injective on the q-colored vertices of Lk(c, s). Throws
/// std::invalid_argument when e is not total on V(c).
DistResult is_distinguishable(const ChromaticComplex& c, const Encoding& e);

/// Evaluates both sides of the coloring equivalence — distinguishability on
/// one side, e being a proper coloring of every G_p on the other — and
/// returns the joint verdict. Throws std::logic_error if the sides disagree.
bool coloring_equivalence_check(const ChromaticComplex& c, const Encoding& e);

enum class GreedyOrder {
  kDegreeDescending,  // descending degree, ties by ascending id
  kIdAscending,
};

/// Proper coloring with codes starting at 1; uses at most Δ(g) + 1 codes.
std::map<VertexId, int> greedy_coloring(
    const IndistGraph& g, GreedyOrder order = GreedyOrder::kDegreeDescending);

/// Minimum proper coloring via branch and bound with clique pruning;
/// std::nullopt when g has more than node_limit nodes.
std::optional<std::map<VertexId, int>> exact_chromatic(const IndistGraph& g,
                                                       int node_limit = 20);

/// Max over colors p and vertices v of the number of p-colored neighbors of
/// v. Those neighbors are pairwise linked through v, so this bounds every
/// clique number — and hence every encoding image — from below.
int clique_lower_bound(const ChromaticComplex& c);

/// Max over p of Δ(G_p), computed both directly on the graphs and through
/// the link-of-star vertex count at p-colored vertices; throws
/// std::logic_error if the two computations disagree.
int degree_upper_bound(const ChromaticComplex& c);

/// Wire cost of an image: ceil(log2(image + 1)), counting the unwritten
/// symbol ⊥ alongside the codes.
int bits_for_image(int image);

struct RoundEncoding {
  int round = 0;
  Encoding encoding;  // on the round's complex, Ch^round of the input
  int num_vertices = 0;
  int clique_lb = 0;
  int delta_plus_1 = 0;
  int image = 0;
  int bits = 0;
  bool exact_used = false;
};

struct EncodingSchedule {
  std::vector<RoundEncoding> rounds;
  bool truncated = false;  // facet cap stopped subdivision early
};

/// For each round r' in [0, r): builds Ch^{r'} I, colors every G_p (greedy
/// by default; exact when use_exact and the graph is within node_limit),
/// merges the per-color colorings into one encoding, verifies
/// distinguishability, and records the per-round bounds. Asserts
/// clique_lb <= image <= Δ+1 per round (std::logic_error otherwise).
EncodingSchedule synth_encoding_schedule(const ChromaticComplex& I, int r,
                                         bool use_exact = false,
                                         int node_limit = 20);

/// CSV rendering with header `round,vertices,clique_lb,delta_plus_1,image,bits`.
std::string bounds_report_csv(const EncodingSchedule& s);

/// A plain simple graph on nodes 0..num_nodes-1.
struct SimpleGraph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;  // canonical (min, max), sorted

  void canonicalize();
  bool operator==(const SimpleGraph& o) const;
};

/// Hardness gadget: a 2-process complex with one p0-vertex per node of h and
/// one p1-vertex per edge (i, j), joined to the p0-vertices i and j, so that
/// indist_graph(gadget, p0) reproduces h exactly.
ChromaticComplex gadget_from_graph(const SimpleGraph& h);

/// Re-expresses an IndistGraph over node positions 0..k-1 (nodes in
/// ascending id order), for comparison with a SimpleGraph.
SimpleGraph to_simple_graph(const IndistGraph& g);

}  // namespace biis
