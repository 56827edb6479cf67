#pragma once

#include "biis/complex.hpp"
#include "biis/indist.hpp"
#include "biis/types.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace biis {

/// Δ^n: one facet on n+1 vertices, vertex i carrying color i, labels p0..pn.
ChromaticComplex standard_simplex(int n);

/// ∂Δ^n: the proper faces of the standard simplex; n >= 1.
ChromaticComplex boundary_simplex(int n);

/// A path on `edges` + 1 two-colored vertices (colors alternate 0, 1, 0, ...),
/// facets = consecutive pairs; edges = 0 gives a single vertex.
ChromaticComplex path_complex(int edges);

/// Deterministic 64-bit generator with helper draws. All randomized corpora
/// derive from an explicit seed so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw from [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// True with probability percent/100.
  bool chance_percent(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

 private:
  std::mt19937_64 engine_;
};

/// Random chromatic complex: at most `max_processes` colors, at most
/// `max_facets` facets, one to three vertices available per color. Facets are
/// chromatic by construction; normalization handles duplicates.
ChromaticComplex random_chromatic_complex(Rng& rng, int max_processes,
                                          int max_facets);

/// Random total encoding with codes in [1, max_code].
Encoding random_encoding(Rng& rng, const ChromaticComplex& c, int max_code);

/// Random simple graph on up to `max_nodes` nodes (at least one), each edge
/// present with probability edge_percent/100.
SimpleGraph random_graph(Rng& rng, int max_nodes, int edge_percent);

}  // namespace biis
