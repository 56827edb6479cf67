#include "biis/subdivision.hpp"

#include "biis/combinatorics.hpp"
#include "biis/config.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace biis {

namespace {

std::string render_carrier_member(const ChromaticComplex& base, VertexId v) {
  const std::string& label = base.vertex(v).label;
  return label.empty() ? std::to_string(v) : label;
}

std::string render_subdiv_label(const ChromaticComplex& base, Color c,
                                const Simplex& carrier) {
  std::ostringstream os;
  os << "(" << c << ",[";
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (i) os << ",";
    os << render_carrier_member(base, carrier[i]);
  }
  os << "])";
  return os.str();
}

// Facets of the subdivision of one base facet, as key lists.
std::vector<std::vector<std::pair<Color, Simplex>>> facet_subdivision_keys(
    const ChromaticComplex& base, const Simplex& facet) {
  std::vector<int> items(facet.begin(), facet.end());
  std::vector<std::vector<std::pair<Color, Simplex>>> out;
  for (const auto& partition : ordered_set_partitions(items)) {
    std::vector<std::pair<Color, Simplex>> keys;
    Simplex prefix;
    for (const auto& block : partition) {
      Simplex block_simplex;
      for (int u : block) block_simplex.push_back(static_cast<VertexId>(u));
      prefix = simplex_union(prefix, make_simplex(block_simplex));
      for (int u : block)
        keys.emplace_back(base.color_of(static_cast<VertexId>(u)), prefix);
    }
    out.push_back(std::move(keys));
  }
  return out;
}

}  // namespace

Subdivision::Subdivision(const ChromaticComplex& base) : base_(base) {
  // Predict the facet count before building anything.
  BigInt predicted = 0;
  for (const Simplex& f : base.facets())
    predicted += ordered_bell(static_cast<int>(f.size()));
  if (predicted > limits().max_facets) {
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    const std::int64_t reported =
        predicted > BigInt(kMax) ? kMax : predicted.convert_to<std::int64_t>();
    throw ResourceCapExceeded(reported, limits().max_facets);
  }

  // Vertices: every (color, carrier) pair over the non-empty faces.
  std::set<std::pair<Color, Simplex>> keys;
  for (const Simplex& face : base.all_faces())
    for (VertexId u : face) keys.emplace(base.color_of(u), face);

  std::vector<VertexInfo> vertices;
  vertices.reserve(keys.size());
  for (const auto& key : keys) {
    const VertexId id = static_cast<VertexId>(carriers_.size());
    index_.emplace(key, id);
    carriers_.push_back(key.second);
    vertices.push_back(
        VertexInfo{key.first, render_subdiv_label(base, key.first, key.second)});
  }

  // Facets: one per (base facet, ordered set partition of its vertices).
  const std::vector<Simplex>& base_facets = base.facets();
  std::vector<std::vector<Simplex>> per_facet(base_facets.size());
  auto subdivide_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t fi = begin; fi < end; ++fi) {
      for (const auto& keys_of_facet :
           facet_subdivision_keys(base_, base_facets[fi])) {
        Simplex facet;
        facet.reserve(keys_of_facet.size());
        for (const auto& key : keys_of_facet) facet.push_back(index_.at(key));
        per_facet[fi].push_back(make_simplex(std::move(facet)));
      }
    }
  };
  const int threads =
      std::max(1, std::min<int>(limits().threads,
                                static_cast<int>(base_facets.size())));
  if (threads <= 1) {
    subdivide_range(0, base_facets.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (base_facets.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t begin = static_cast<std::size_t>(t) * chunk;
      const std::size_t end = std::min(begin + chunk, base_facets.size());
      if (begin < end) pool.emplace_back(subdivide_range, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  std::vector<Simplex> facets;
  for (const auto& group : per_facet)
    facets.insert(facets.end(), group.begin(), group.end());
  result_ = ChromaticComplex(base.num_processes(), std::move(vertices),
                             std::move(facets));
}

const Simplex& Subdivision::carrier_of(VertexId v) const {
  if (v < 0 || v >= static_cast<VertexId>(carriers_.size()))
    throw std::invalid_argument("carrier_of: vertex is not part of this subdivision");
  return carriers_[static_cast<std::size_t>(v)];
}

VertexId Subdivision::vertex_for(Color color, const Simplex& carrier) const {
  const auto it = index_.find({color, carrier});
  return it == index_.end() ? -1 : it->second;
}

Simplex Subdivision::carrier_of_simplex(const Simplex& s) const {
  Simplex out;
  for (VertexId v : s) out = simplex_union(out, carrier_of(v));
  return out;
}

Simplex Subdivision::central_simplex(const Simplex& base_facet) const {
  const auto& facets = base_.facets();
  if (std::find(facets.begin(), facets.end(), base_facet) == facets.end())
    throw std::invalid_argument("central_simplex: not a facet of the base");
  Simplex out;
  for (VertexId u : base_facet) {
    const VertexId v = vertex_for(base_.color_of(u), base_facet);
    out.push_back(v);
  }
  return make_simplex(std::move(out));
}

ChromaticComplex chromatic_subdivide(const ChromaticComplex& c) {
  return Subdivision(c).result();
}

ChromaticComplex iterate_subdivide(const ChromaticComplex& c, int r) {
  if (r < 0) throw std::invalid_argument("iterate_subdivide: negative round count");
  ChromaticComplex current = c;
  for (int i = 0; i < r; ++i) current = chromatic_subdivide(current);
  return current;
}

IteratedSubdivision::IteratedSubdivision(ChromaticComplex base, int r)
    : base_(std::move(base)) {
  if (r < 0) throw std::invalid_argument("IteratedSubdivision: negative round count");
  steps_.reserve(static_cast<std::size_t>(r));
  const ChromaticComplex* current = &base_;
  for (int i = 0; i < r; ++i) {
    steps_.emplace_back(*current);
    current = &steps_.back().result();
  }
}

const ChromaticComplex& IteratedSubdivision::level(int t) const {
  if (t < 0 || t > rounds())
    throw std::out_of_range("IteratedSubdivision::level");
  return t == 0 ? base_ : steps_[static_cast<std::size_t>(t - 1)].result();
}

const Subdivision& IteratedSubdivision::step(int t) const {
  if (t < 0 || t >= rounds())
    throw std::out_of_range("IteratedSubdivision::step");
  return steps_[static_cast<std::size_t>(t)];
}

std::vector<Simplex> IteratedSubdivision::carrier_chain(VertexId v) const {
  std::vector<Simplex> chain;
  Simplex current{v};
  for (int t = rounds() - 1; t >= 0; --t) {
    current = steps_[static_cast<std::size_t>(t)].carrier_of_simplex(current);
    chain.push_back(current);
  }
  return chain;
}

VertexId IteratedSubdivision::embed_to_top(int from, VertexId v) const {
  if (from < 0 || from > rounds())
    throw std::out_of_range("IteratedSubdivision::embed_to_top");
  VertexId current = v;
  const Color color = level(from).color_of(v);
  for (int t = from; t < rounds(); ++t) {
    current = steps_[static_cast<std::size_t>(t)].vertex_for(color, {current});
    if (current < 0)
      throw std::logic_error("embed_to_top: missing singleton-carrier vertex");
  }
  return current;
}

namespace {

using Key = std::pair<Color, Simplex>;

std::set<Color> colors_of(const ChromaticComplex& base, const Simplex& s) {
  std::set<Color> out;
  for (VertexId v : s) out.insert(base.color_of(v));
  return out;
}

// Basic Bron-Kerbosch maximal-clique enumeration with pivoting.
void bron_kerbosch(const std::vector<std::vector<char>>& adj,
                   std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& cliques) {
  if (p.empty() && x.empty()) {
    cliques.push_back(r);
    return;
  }
  // Pivot: vertex of P ∪ X with the most neighbors in P.
  int pivot = -1;
  std::size_t best = 0;
  for (const std::vector<int>* side : {&p, &x})
    for (int u : *side) {
      std::size_t count = 0;
      for (int w : p)
        if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) ++count;
      if (pivot < 0 || count > best) {
        pivot = u;
        best = count;
      }
    }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot < 0 ||
        !adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)])
      candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int w : p)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
        p2.push_back(w);
    for (int w : x)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
        x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), cliques);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<Key>> subdivision_facets_by_pairwise_rule(
    const ChromaticComplex& base) {
  std::vector<Key> verts;
  for (const Simplex& face : base.all_faces())
    for (VertexId u : face) verts.emplace_back(base.color_of(u), face);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const std::size_t n = verts.size();

  std::vector<std::set<Color>> carrier_colors(n);
  for (std::size_t i = 0; i < n; ++i)
    carrier_colors[i] = colors_of(base, verts[i].second);

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& [ci, si] = verts[i];
      const auto& [cj, sj] = verts[j];
      if (ci == cj) continue;
      const bool i_in_j = simplex_subset(si, sj);
      const bool j_in_i = simplex_subset(sj, si);
      if (!i_in_j && !j_in_i) continue;  // carriers must be nested
      // Color condition: a vertex whose color occurs in the other's carrier
      // must have its carrier inside the other's.
      if (carrier_colors[i].count(cj) && !j_in_i) continue;
      if (carrier_colors[j].count(ci) && !i_in_j) continue;
      adj[i][j] = adj[j][i] = 1;
    }

  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  bron_kerbosch(adj, r, all, {}, cliques);

  std::vector<std::vector<Key>> out;
  out.reserve(cliques.size());
  for (const auto& clique : cliques) {
    std::vector<Key> keys;
    keys.reserve(clique.size());
    for (int v : clique) keys.push_back(verts[static_cast<std::size_t>(v)]);
    std::sort(keys.begin(), keys.end());
    out.push_back(std::move(keys));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Key>> subdivision_facets_as_keys(const Subdivision& s) {
  std::vector<std::vector<Key>> out;
  out.reserve(s.result().facets().size());
  for (const Simplex& f : s.result().facets()) {
    std::vector<Key> keys;
    keys.reserve(f.size());
    for (VertexId v : f)
      keys.emplace_back(s.result().color_of(v), s.carrier_of(v));
    std::sort(keys.begin(), keys.end());
    out.push_back(std::move(keys));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace biis
