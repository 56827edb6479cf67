#include "biis/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace biis {

Simplex make_simplex(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool simplex_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool simplex_disjoint(const Simplex& a, const Simplex& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

std::string FVector::to_string() const {
  std::ostringstream os;
  os << "(";
  const int top = std::max(dim(), -1);
  for (int k = -1; k <= top; ++k) {
    if (k > -1) os << ", ";
    os << f(k);
  }
  os << ")";
  return os.str();
}

ChromaticComplex::ChromaticComplex(int num_processes)
    : num_processes_(num_processes) {
  if (num_processes < 0)
    throw std::invalid_argument("ChromaticComplex: negative process count");
}

ChromaticComplex::ChromaticComplex(int num_processes,
                                   std::vector<VertexInfo> vertices,
                                   std::vector<Simplex> facets)
    : num_processes_(num_processes),
      vertices_(std::move(vertices)),
      facets_(std::move(facets)) {
  validate_and_normalize();
}

void ChromaticComplex::validate_and_normalize() {
  if (num_processes_ < 0)
    throw std::invalid_argument("ChromaticComplex: negative process count");
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Color c = vertices_[v].color;
    if (c < 0 || c >= num_processes_)
      throw std::invalid_argument("ChromaticComplex: vertex " +
                                  std::to_string(v) + " has color " +
                                  std::to_string(c) + " outside [0, " +
                                  std::to_string(num_processes_) + ")");
  }
  for (Simplex& s : facets_) {
    s = make_simplex(std::move(s));
    std::vector<char> seen(static_cast<std::size_t>(num_processes_), 0);
    for (VertexId v : s) {
      if (v < 0 || v >= num_vertices())
        throw std::invalid_argument("ChromaticComplex: facet references vertex " +
                                    std::to_string(v) + " outside the table");
      const Color c = vertices_[v].color;
      if (seen[static_cast<std::size_t>(c)])
        throw std::invalid_argument(
            "ChromaticComplex: facet is not chromatic, color " +
            std::to_string(c) + " repeats");
      seen[static_cast<std::size_t>(c)] = 1;
    }
  }
  // Every vertex is a face: uncovered vertices become singleton facets.
  std::vector<char> covered(vertices_.size(), 0);
  for (const Simplex& s : facets_)
    for (VertexId v : s) covered[static_cast<std::size_t>(v)] = 1;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (!covered[v]) facets_.push_back({static_cast<VertexId>(v)});
  // Drop empty, duplicate and dominated facets.
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  std::vector<Simplex> kept;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (facets_[i].empty()) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < facets_.size() && !dominated; ++j)
      if (i != j && facets_[i].size() < facets_[j].size() &&
          simplex_subset(facets_[i], facets_[j]))
        dominated = true;
    if (!dominated) kept.push_back(facets_[i]);
  }
  facets_ = std::move(kept);
}

int ChromaticComplex::dim() const {
  int d = -1;
  for (const Simplex& s : facets_)
    d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

bool ChromaticComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  for (const Simplex& f : facets_)
    if (simplex_subset(s, f)) return true;
  return false;
}

FaceSet ChromaticComplex::faces(int k) const {
  if (k == -1) return {Simplex{}};
  if (k < -1 || k > dim()) return {};
  std::set<Simplex> out;
  const std::size_t size = static_cast<std::size_t>(k + 1);
  for (const Simplex& f : facets_) {
    if (f.size() < size) continue;
    // All subsets of f with k + 1 elements.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Simplex s(size);
      for (std::size_t i = 0; i < size; ++i) s[i] = f[idx[i]];
      out.insert(std::move(s));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == f.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return FaceSet(out.begin(), out.end());
}

FaceSet ChromaticComplex::all_faces() const {
  FaceSet out;
  for (int k = 0; k <= dim(); ++k) {
    FaceSet level = faces(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

FVector ChromaticComplex::f_vector() const {
  FVector fv;
  fv.set_f(-1, 1);
  for (int k = 0; k <= dim(); ++k)
    fv.set_f(k, static_cast<long>(faces(k).size()));
  return fv;
}

std::vector<VertexId> ChromaticComplex::vertices_of_color(Color p) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v)
    if (vertices_[static_cast<std::size_t>(v)].color == p) out.push_back(v);
  return out;
}

std::vector<std::vector<VertexId>> ChromaticComplex::adjacency() const {
  std::vector<std::set<VertexId>> nbr(vertices_.size());
  for (const Simplex& f : facets_)
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        nbr[static_cast<std::size_t>(f[i])].insert(f[j]);
        nbr[static_cast<std::size_t>(f[j])].insert(f[i]);
      }
  std::vector<std::vector<VertexId>> out(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    out[v] = std::vector<VertexId>(nbr[v].begin(), nbr[v].end());
  return out;
}

std::vector<VertexId> ChromaticComplex::link_vertices(VertexId v) const {
  std::set<VertexId> nbr;
  for (const Simplex& f : facets_) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    for (VertexId w : f)
      if (w != v) nbr.insert(w);
  }
  return std::vector<VertexId>(nbr.begin(), nbr.end());
}

int ChromaticComplex::degree(VertexId v) const {
  return static_cast<int>(link_vertices(v).size());
}

bool ChromaticComplex::operator==(const ChromaticComplex& o) const {
  if (num_processes_ != o.num_processes_) return false;
  if (vertices_.size() != o.vertices_.size()) return false;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].color != o.vertices_[v].color) return false;
  return facets_ == o.facets_;
}

ChromaticComplex complex_from_faces(const ChromaticComplex& parent,
                                    const FaceSet& faces,
                                    std::vector<VertexId>* parent_ids) {
  std::set<VertexId> used;
  for (const Simplex& s : faces)
    for (VertexId v : s) used.insert(v);
  std::vector<VertexId> old_ids(used.begin(), used.end());
  std::map<VertexId, VertexId> to_new;
  std::vector<VertexInfo> vertices;
  vertices.reserve(old_ids.size());
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    to_new[old_ids[i]] = static_cast<VertexId>(i);
    vertices.push_back(parent.vertex(old_ids[i]));
  }
  std::vector<Simplex> facets;
  facets.reserve(faces.size());
  for (const Simplex& s : faces) {
    if (s.empty()) continue;
    Simplex t;
    t.reserve(s.size());
    for (VertexId v : s) t.push_back(to_new[v]);
    facets.push_back(make_simplex(std::move(t)));
  }
  if (parent_ids) *parent_ids = old_ids;
  return ChromaticComplex(parent.num_processes(), std::move(vertices),
                          std::move(facets));
}

namespace {

// Non-empty members of s, validated as faces of c.
FaceSet checked_generators(const ChromaticComplex& c, const FaceSet& s) {
  FaceSet gens;
  for (const Simplex& raw : s) {
    Simplex g = raw;
    std::sort(g.begin(), g.end());
    if (!c.contains(g))
      throw std::invalid_argument(
          "star/link: a generator simplex is not a face of the complex");
    if (!g.empty()) gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

FaceSet star_faces(const ChromaticComplex& c, const FaceSet& s) {
  const FaceSet gens = checked_generators(c, s);
  std::vector<Simplex> star_facets;
  for (const Simplex& f : c.facets())
    for (const Simplex& g : gens)
      if (simplex_subset(g, f)) {
        star_facets.push_back(f);
        break;
      }
  // Close under subsets: every non-empty subset of a star facet.
  std::set<Simplex> out;
  for (const Simplex& f : star_facets) {
    const std::size_t m = f.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      out.insert(std::move(sub));
    }
  }
  return FaceSet(out.begin(), out.end());
}

ChromaticComplex star(const ChromaticComplex& c, const FaceSet& s) {
  return complex_from_faces(c, star_faces(c, s));
}

FaceSet link_faces(const ChromaticComplex& c, const FaceSet& s) {
  const FaceSet gens = checked_generators(c, s);
  Simplex star_vertices;  // V of the non-empty generators, canonical
  for (const Simplex& g : gens) star_vertices = simplex_union(star_vertices, g);
  FaceSet out;
  for (const Simplex& f : star_faces(c, s))
    if (simplex_disjoint(f, star_vertices)) out.push_back(f);
  return out;
}

ChromaticComplex link(const ChromaticComplex& c, const FaceSet& s) {
  return complex_from_faces(c, link_faces(c, s));
}

int link_count_of_color(const ChromaticComplex& c, const FaceSet& s, Color p) {
  int count = 0;
  for (const Simplex& f : link_faces(c, s))
    if (f.size() == 1 && c.color_of(f[0]) == p) ++count;
  return count;
}

FaceSet open_star(const ChromaticComplex& c, const Simplex& s) {
  Simplex t = s;
  std::sort(t.begin(), t.end());
  if (!c.contains(t))
    throw std::invalid_argument("open_star: simplex is not a face");
  FaceSet out;
  if (t.empty()) out.push_back({});
  for (const Simplex& f : c.all_faces())
    if (simplex_subset(t, f)) out.push_back(f);
  return out;
}

ChromaticComplex boundary(const ChromaticComplex& c) {
  // Generators: proper faces contained in exactly one facet.
  std::set<Simplex> facet_set(c.facets().begin(), c.facets().end());
  FaceSet gens;
  for (const Simplex& f : c.all_faces()) {
    if (facet_set.count(f)) continue;  // not a proper face
    int containers = 0;
    for (const Simplex& g : c.facets())
      if (simplex_subset(f, g)) ++containers;
    if (containers == 1) gens.push_back(f);
  }
  return complex_from_faces(c, gens);
}

FaceSet interior(const ChromaticComplex& c) {
  // Boundary faces in c's ids: the closure of the boundary generators.
  std::set<Simplex> bd_faces;
  std::set<Simplex> facet_set(c.facets().begin(), c.facets().end());
  for (const Simplex& f : c.all_faces()) {
    if (facet_set.count(f)) continue;  // not a proper face
    int containers = 0;
    for (const Simplex& g : c.facets())
      if (simplex_subset(f, g)) ++containers;
    if (containers == 1) {
      const std::size_t m = f.size();
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Simplex sub;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (1u << i)) sub.push_back(f[i]);
        bd_faces.insert(std::move(sub));
      }
    }
  }
  FaceSet out;
  for (const Simplex& f : c.all_faces())
    if (!bd_faces.count(f)) out.push_back(f);
  return out;
}

ChromaticComplex skeleton(const ChromaticComplex& c, int l) {
  if (l < 0) return ChromaticComplex(c.num_processes());
  if (l >= c.dim()) return c;
  return complex_from_faces(c, c.faces(l));
}

ChromaticComplex join(const ChromaticComplex& a, const ChromaticComplex& b) {
  const int np = std::max(a.num_processes(), b.num_processes());
  std::vector<VertexInfo> vertices = a.vertices();
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  const VertexId shift = a.num_vertices();
  std::vector<Simplex> facets;
  if (a.facets().empty() && b.facets().empty()) {
    // join of two empty complexes is empty
  } else if (a.facets().empty()) {
    for (const Simplex& g : b.facets()) {
      Simplex t;
      for (VertexId v : g) t.push_back(v + shift);
      facets.push_back(std::move(t));
    }
  } else if (b.facets().empty()) {
    facets = a.facets();
  } else {
    for (const Simplex& f : a.facets())
      for (const Simplex& g : b.facets()) {
        Simplex t = f;
        for (VertexId v : g) t.push_back(v + shift);
        std::sort(t.begin(), t.end());
        facets.push_back(std::move(t));
      }
  }
  try {
    return ChromaticComplex(np, std::move(vertices), std::move(facets));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "join: some union of faces repeats a color (non-chromatic result)");
  }
}

FaceSet restrict_to_color(const ChromaticComplex& c, const FaceSet& fs,
                          Color p) {
  FaceSet out;
  for (const Simplex& f : fs) {
    bool all_p = !f.empty();
    for (VertexId v : f)
      if (c.color_of(v) != p) {
        all_p = false;
        break;
      }
    if (all_p) out.push_back(f);
  }
  return out;
}

int star_edges_to_color(const ChromaticComplex& c, VertexId v, Color p) {
  int count = 0;
  for (VertexId w : c.link_vertices(v))
    if (c.color_of(w) == p) ++count;
  return count;
}

FVector fvector_of(const FaceSet& fs) {
  FVector fv;
  for (const Simplex& f : fs)
    fv.add_f(static_cast<int>(f.size()) - 1, 1);
  return fv;
}

}  // namespace biis
