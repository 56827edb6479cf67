#include "biis/indist.hpp"

#include "biis/config.hpp"
#include "biis/subdivision.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace biis {

int IndistGraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

int IndistGraph::max_degree() const {
  int best = 0;
  for (VertexId v : nodes) best = std::max(best, degree(v));
  return best;
}

bool IndistGraph::has_edge(VertexId v, VertexId w) const {
  if (v > w) std::swap(v, w);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(v, w));
}

int Encoding::code_of(VertexId v) const {
  const auto it = codes.find(v);
  if (it == codes.end())
    throw std::invalid_argument("Encoding: no code for vertex " +
                                std::to_string(v));
  return it->second;
}

int Encoding::image_size() const {
  std::set<int> image;
  for (const auto& [v, code] : codes) image.insert(code);
  return static_cast<int>(image.size());
}

Encoding Encoding::injective(const ChromaticComplex& c) {
  Encoding e;
  for (VertexId v = 0; v < c.num_vertices(); ++v) e.codes[v] = v + 1;
  return e;
}

Encoding Encoding::constant(const ChromaticComplex& c, int code) {
  Encoding e;
  for (VertexId v = 0; v < c.num_vertices(); ++v) e.codes[v] = code;
  return e;
}

IndistGraph indist_graph(const ChromaticComplex& c, Color p) {
  IndistGraph g;
  g.color = p;
  g.nodes = c.vertices_of_color(p);
  std::set<std::pair<VertexId, VertexId>> edges;
  for (VertexId t = 0; t < c.num_vertices(); ++t) {
    std::vector<VertexId> p_linked;
    for (VertexId w : c.link_vertices(t))
      if (c.color_of(w) == p) p_linked.push_back(w);
    for (std::size_t i = 0; i < p_linked.size(); ++i)
      for (std::size_t j = i + 1; j < p_linked.size(); ++j)
        edges.emplace(p_linked[i], p_linked[j]);
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

namespace {

void require_total(const ChromaticComplex& c, const Encoding& e) {
  for (VertexId v = 0; v < c.num_vertices(); ++v)
    if (!e.codes.count(v))
      throw std::invalid_argument("encoding is partial: vertex " +
                                  std::to_string(v) + " has no code");
}

}  // namespace

DistResult is_distinguishable(const ChromaticComplex& c, const Encoding& e) {
  require_total(c, e);
  DistResult result;
  for (VertexId s = 0; s < c.num_vertices(); ++s) {
    // Link vertices grouped by color; codes must be injective per color.
    std::map<Color, std::map<int, VertexId>> seen;  // color -> code -> vertex
    for (VertexId w : c.link_vertices(s)) {
      const Color q = c.color_of(w);
      const int code = e.code_of(w);
      auto [it, inserted] = seen[q].emplace(code, w);
      if (!inserted) {
        DistWitness witness;
        witness.s = s;
        witness.t = std::min(it->second, w);
        witness.w = std::max(it->second, w);
        result.distinguishable = false;
        result.witness = witness;
        return result;
      }
    }
  }
  result.distinguishable = true;
  return result;
}

bool coloring_equivalence_check(const ChromaticComplex& c, const Encoding& e) {
  const bool dist = is_distinguishable(c, e).distinguishable;
  bool proper = true;
  for (Color p = 0; p < c.num_processes() && proper; ++p) {
    const IndistGraph g = indist_graph(c, p);
    for (const auto& [v, w] : g.edges)
      if (e.code_of(v) == e.code_of(w)) {
        proper = false;
        break;
      }
  }
  if (dist != proper)
    throw std::logic_error(
        "coloring equivalence violated: distinguishability and proper-coloring "
        "verdicts disagree");
  return dist;
}

std::map<VertexId, int> greedy_coloring(const IndistGraph& g,
                                        GreedyOrder order) {
  std::vector<VertexId> sequence = g.nodes;
  if (order == GreedyOrder::kDegreeDescending) {
    std::stable_sort(sequence.begin(), sequence.end(),
                     [&](VertexId a, VertexId b) {
                       const int da = g.degree(a);
                       const int db = g.degree(b);
                       if (da != db) return da > db;
                       return a < b;
                     });
  }
  std::map<VertexId, int> codes;
  for (VertexId v : sequence) {
    std::set<int> used;
    for (const auto& [a, b] : g.edges) {
      if (a == v && codes.count(b)) used.insert(codes.at(b));
      if (b == v && codes.count(a)) used.insert(codes.at(a));
    }
    int code = 1;
    while (used.count(code)) ++code;
    codes[v] = code;
  }
  return codes;
}

namespace {

struct ExactSearch {
  const std::vector<VertexId>& order;
  const IndistGraph& g;
  std::map<VertexId, int> assignment;
  std::map<VertexId, int> best_assignment;
  int best;  // best (smallest) color count found so far

  void run(std::size_t pos, int used) {
    if (used >= best) return;  // cannot improve
    if (pos == order.size()) {
      best = used;
      best_assignment = assignment;
      return;
    }
    const VertexId v = order[pos];
    // Codes in 1..used are interchangeable beyond the first unused one, so
    // trying 1..used+1 explores all colorings up to symmetry.
    for (int code = 1; code <= used + 1; ++code) {
      if (code >= best) break;
      bool ok = true;
      for (const auto& [a, b] : g.edges) {
        if (a == v && assignment.count(b) && assignment.at(b) == code) ok = false;
        if (b == v && assignment.count(a) && assignment.at(a) == code) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      assignment[v] = code;
      run(pos + 1, std::max(used, code));
      assignment.erase(v);
    }
  }
};

}  // namespace

std::optional<std::map<VertexId, int>> exact_chromatic(const IndistGraph& g,
                                                       int node_limit) {
  if (static_cast<int>(g.nodes.size()) > node_limit) return std::nullopt;
  if (g.nodes.empty()) return std::map<VertexId, int>{};
  std::vector<VertexId> order = g.nodes;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const int da = g.degree(a);
    const int db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  const std::map<VertexId, int> greedy = greedy_coloring(g);
  int greedy_count = 0;
  for (const auto& [v, code] : greedy) greedy_count = std::max(greedy_count, code);
  ExactSearch search{order, g, {}, greedy, greedy_count + 1};
  search.best_assignment = greedy;
  search.best = greedy_count + 1;
  search.run(0, 0);
  // search.best is at most greedy_count + 1 and at least the true minimum;
  // the stored assignment realizes it.
  return search.best_assignment;
}

int clique_lower_bound(const ChromaticComplex& c) {
  int best = 0;
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    std::map<Color, int> per_color;
    for (VertexId w : c.link_vertices(v)) ++per_color[c.color_of(w)];
    for (const auto& [p, count] : per_color) best = std::max(best, count);
  }
  return best;
}

int degree_upper_bound(const ChromaticComplex& c) {
  int graph_side = 0;
  for (Color p = 0; p < c.num_processes(); ++p)
    graph_side = std::max(graph_side, indist_graph(c, p).max_degree());
  int formula_side = 0;
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    const FaceSet st = star_faces(c, {Simplex{v}});
    formula_side = std::max(formula_side,
                            link_count_of_color(c, st, c.color_of(v)));
  }
  if (graph_side != formula_side)
    throw std::logic_error(
        "degree bound mismatch: graph degree " + std::to_string(graph_side) +
        " vs link-of-star count " + std::to_string(formula_side));
  return graph_side;
}

int bits_for_image(int image) {
  int bits = 0;
  while ((1 << bits) < image + 1) ++bits;
  return bits;
}

EncodingSchedule synth_encoding_schedule(const ChromaticComplex& I, int r,
                                         bool use_exact, int node_limit) {
  if (r < 1)
    throw std::invalid_argument("synth_encoding_schedule: r must be >= 1");
  EncodingSchedule schedule;
  ChromaticComplex current = I;
  for (int round = 0; round < r; ++round) {
    RoundEncoding re;
    re.round = round;
    re.num_vertices = current.num_vertices();
    bool exact_used = false;
    Encoding merged;
    for (Color p = 0; p < current.num_processes(); ++p) {
      const IndistGraph g = indist_graph(current, p);
      std::map<VertexId, int> codes;
      if (use_exact) {
        if (auto exact = exact_chromatic(g, node_limit)) {
          codes = std::move(*exact);
          exact_used = true;
        }
      }
      if (codes.empty() && !g.nodes.empty()) codes = greedy_coloring(g);
      merged.codes.insert(codes.begin(), codes.end());
    }
    const DistResult dist = is_distinguishable(current, merged);
    if (!dist.distinguishable)
      throw std::logic_error(
          "synthesized encoding is not distinguishable (coloring equivalence "
          "violated)");
    re.encoding = std::move(merged);
    re.clique_lb = clique_lower_bound(current);
    re.delta_plus_1 = degree_upper_bound(current) + 1;
    re.image = re.encoding.image_size();
    re.bits = bits_for_image(re.image);
    re.exact_used = exact_used;
    if (re.clique_lb > re.image || re.image > re.delta_plus_1)
      throw std::logic_error("encoding bounds violated at round " +
                             std::to_string(round));
    schedule.rounds.push_back(std::move(re));
    if (round + 1 < r) {
      try {
        current = chromatic_subdivide(current);
      } catch (const ResourceCapExceeded&) {
        schedule.truncated = true;
        break;
      }
    }
  }
  return schedule;
}

std::string bounds_report_csv(const EncodingSchedule& s) {
  std::ostringstream os;
  os << "round,vertices,clique_lb,delta_plus_1,image,bits\n";
  for (const RoundEncoding& re : s.rounds)
    os << re.round << "," << re.num_vertices << "," << re.clique_lb << ","
       << re.delta_plus_1 << "," << re.image << "," << re.bits << "\n";
  if (s.truncated) os << "# truncated: facet cap reached\n";
  return os.str();
}

void SimpleGraph::canonicalize() {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [](const std::pair<int, int>& e) {
                               return e.first == e.second;
                             }),
              edges.end());
}

bool SimpleGraph::operator==(const SimpleGraph& o) const {
  return num_nodes == o.num_nodes && edges == o.edges;
}

ChromaticComplex gadget_from_graph(const SimpleGraph& h) {
  SimpleGraph graph = h;
  graph.canonicalize();
  std::vector<VertexInfo> vertices;
  for (int i = 0; i < graph.num_nodes; ++i)
    vertices.push_back(VertexInfo{0, "a" + std::to_string(i)});
  std::vector<Simplex> facets;
  for (const auto& [i, j] : graph.edges) {
    const VertexId u = static_cast<VertexId>(vertices.size());
    vertices.push_back(
        VertexInfo{1, "u" + std::to_string(i) + "_" + std::to_string(j)});
    facets.push_back(make_simplex({static_cast<VertexId>(i), u}));
    facets.push_back(make_simplex({u, static_cast<VertexId>(j)}));
  }
  return ChromaticComplex(2, std::move(vertices), std::move(facets));
}

SimpleGraph to_simple_graph(const IndistGraph& g) {
  SimpleGraph out;
  out.num_nodes = static_cast<int>(g.nodes.size());
  std::map<VertexId, int> position;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    position[g.nodes[i]] = static_cast<int>(i);
  for (const auto& [a, b] : g.edges)
    out.edges.emplace_back(position.at(a), position.at(b));
  out.canonicalize();
  return out;
}

}  // namespace biis
