#include "biis/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace biis {

ChromaticComplex standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("standard_simplex: n must be >= 0");
  std::vector<VertexInfo> verts;
  Simplex facet;
  for (int i = 0; i <= n; ++i) {
    verts.push_back({i, "p" + std::to_string(i)});
    facet.push_back(i);
  }
  return ChromaticComplex(n + 1, std::move(verts), {facet});
}

ChromaticComplex boundary_simplex(int n) {
  if (n < 1) throw std::invalid_argument("boundary_simplex: n must be >= 1");
  return boundary(standard_simplex(n));
}

ChromaticComplex path_complex(int edges) {
  if (edges < 0) throw std::invalid_argument("path_complex: edges must be >= 0");
  std::vector<VertexInfo> verts;
  for (int i = 0; i <= edges; ++i)
    verts.push_back({i % 2, "v" + std::to_string(i)});
  std::vector<Simplex> facets;
  if (edges == 0) {
    facets.push_back({0});
  } else {
    for (int i = 0; i < edges; ++i) facets.push_back({i, i + 1});
  }
  return ChromaticComplex(2, std::move(verts), std::move(facets));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be >= 1");
  return next_u64() % bound;
}

ChromaticComplex random_chromatic_complex(Rng& rng, int max_processes,
                                          int max_facets) {
  if (max_processes < 1 || max_facets < 1)
    throw std::invalid_argument("random_chromatic_complex: limits must be >= 1");
  const int np = 1 + static_cast<int>(rng.below(max_processes));

  // One to three vertices available per color.
  std::vector<VertexInfo> verts;
  std::vector<std::vector<VertexId>> pool(np);
  for (Color p = 0; p < np; ++p) {
    const int count = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < count; ++i) {
      pool[p].push_back(static_cast<VertexId>(verts.size()));
      verts.push_back(
          {p, "c" + std::to_string(p) + "v" + std::to_string(i)});
    }
  }

  const int nf = 1 + static_cast<int>(rng.below(max_facets));
  std::vector<Simplex> facets;
  for (int f = 0; f < nf; ++f) {
    Simplex s;
    for (Color p = 0; p < np; ++p) {
      // Each color joins the facet with probability 1/2; at least one joins.
      if (rng.chance_percent(50))
        s.push_back(pool[p][rng.below(pool[p].size())]);
    }
    if (s.empty()) {
      const Color p = static_cast<Color>(rng.below(np));
      s.push_back(pool[p][rng.below(pool[p].size())]);
    }
    facets.push_back(std::move(s));
  }
  return ChromaticComplex(np, std::move(verts), std::move(facets));
}

Encoding random_encoding(Rng& rng, const ChromaticComplex& c, int max_code) {
  if (max_code < 1)
    throw std::invalid_argument("random_encoding: max_code must be >= 1");
  Encoding e;
  for (VertexId v = 0; v < c.num_vertices(); ++v)
    e.codes[v] = 1 + static_cast<int>(rng.below(max_code));
  return e;
}

SimpleGraph random_graph(Rng& rng, int max_nodes, int edge_percent) {
  if (max_nodes < 1)
    throw std::invalid_argument("random_graph: max_nodes must be >= 1");
  SimpleGraph g;
  g.num_nodes = 1 + static_cast<int>(rng.below(max_nodes));
  for (int i = 0; i < g.num_nodes; ++i)
    for (int j = i + 1; j < g.num_nodes; ++j)
      if (rng.chance_percent(edge_percent)) g.edges.push_back({i, j});
  g.canonicalize();
  return g;
}

}  // namespace biis
