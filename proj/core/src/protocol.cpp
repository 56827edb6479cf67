#include "biis/protocol.hpp"

#include "biis/combinatorics.hpp"
#include "biis/config.hpp"
#include "biis/subdivision.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace biis {

std::vector<Schedule> enumerate_schedules(
    const std::vector<Color>& participants) {
  for (std::size_t i = 1; i < participants.size(); ++i)
    if (participants[i - 1] >= participants[i])
      throw std::invalid_argument(
          "enumerate_schedules: participants must be strictly ascending");
  std::vector<int> items(participants.begin(), participants.end());
  std::vector<Schedule> out;
  for (const auto& part : ordered_set_partitions(items)) {
    Schedule sched;
    for (const auto& block : part)
      sched.emplace_back(block.begin(), block.end());
    out.push_back(std::move(sched));
  }
  return out;
}

std::map<Color, std::vector<int>> run_is_layer(const std::vector<int>& values,
                                               const Schedule& sched) {
  const int np = static_cast<int>(values.size());
  std::vector<char> scheduled(np, 0);
  for (const auto& block : sched) {
    if (block.empty())
      throw std::invalid_argument("run_is_layer: empty schedule block");
    for (Color c : block) {
      if (c < 0 || c >= np || scheduled[c])
        throw std::invalid_argument("run_is_layer: bad schedule color");
      if (values[c] < 0)
        throw std::invalid_argument(
            "run_is_layer: scheduled process has no value");
      scheduled[c] = 1;
    }
  }
  for (int q = 0; q < np; ++q)
    if (values[q] >= 0 && !scheduled[q])
      throw std::invalid_argument(
          "run_is_layer: participating process missing from schedule");

  std::map<Color, std::vector<int>> out;
  std::vector<int> seen(np, -1);
  for (const auto& block : sched) {
    for (Color c : block) seen[c] = values[c];  // block writes first
    for (Color c : block) out[c] = seen;        // then a common snapshot
  }
  return out;
}

namespace {

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i] < 0 ? std::string("-") : std::to_string(xs[i]);
  }
  return s;
}

std::string render_state_label(const ProtocolVertexState& st, bool bounded) {
  std::string s = "p" + std::to_string(st.process) + "r" +
                  std::to_string(st.round) + "[";
  if (bounded) s += std::to_string(st.own_prev) + "|";
  s += join_ints(st.view, ',');
  s += "]";
  return s;
}

std::string render_view(const ProtocolVertexState& st, bool bounded) {
  std::string s = "[";
  if (bounded) s += std::to_string(st.own_prev) + "|";
  s += join_ints(st.view, ',');
  s += "]";
  return s;
}

std::string render_face(const Simplex& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g[i]);
  }
  return s + "}";
}

std::string render_schedule(const Schedule& sched) {
  std::string s;
  for (const auto& block : sched) {
    s += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(block[i]);
    }
    s += '}';
  }
  return s;
}

ProtocolComplex build_round(const ProtocolComplex& pc, const Encoding* enc,
                            std::ostream* trace) {
  const ChromaticComplex& cur = pc.complex;
  const int np = cur.num_processes();
  const bool bounded = enc != nullptr;
  if (bounded) {
    for (VertexId v = 0; v < cur.num_vertices(); ++v)
      if (!enc->codes.count(v))
        throw std::invalid_argument(
            "biis_round: encoding is not total on the current complex");
  }

  // Predict the facet count (one per facet/schedule pair) before enumerating.
  BigInt predicted = 0;
  for (const Simplex& g : cur.facets())
    predicted += ordered_bell(static_cast<int>(g.size()));
  const std::int64_t cap = limits().max_facets;
  if (predicted > cap) {
    const BigInt lim = std::numeric_limits<std::int64_t>::max();
    throw ResourceCapExceeded(
        predicted > lim ? std::numeric_limits<std::int64_t>::max()
                        : predicted.convert_to<std::int64_t>(),
        cap);
  }

  const int next_round = pc.rounds + 1;
  std::map<ProtocolVertexState, int> index;
  std::vector<std::vector<ProtocolVertexState>> executions;

  for (const Simplex& g : cur.facets()) {
    std::vector<int> values(np, -1);
    std::vector<Color> participants;
    for (VertexId v : g) {
      values[cur.color_of(v)] = v;
      participants.push_back(cur.color_of(v));
    }
    std::sort(participants.begin(), participants.end());

    for (const Schedule& sched : enumerate_schedules(participants)) {
      const auto views = run_is_layer(values, sched);
      std::vector<ProtocolVertexState> exec;
      for (Color p : participants) {
        const std::vector<int>& view = views.at(p);
        ProtocolVertexState st;
        st.process = p;
        st.round = next_round;
        st.own_prev = values[p];
        if (!bounded) {
          st.view = view;
        } else {
          st.view.assign(np, -1);
          for (int q = 0; q < np; ++q)
            if (q != p && view[q] >= 0) st.view[q] = enc->code_of(view[q]);
        }
        if (trace) {
          *trace << "(" << next_round << ", " << render_face(g) << ", "
                 << render_schedule(sched) << ", " << p << " -> "
                 << render_view(st, bounded) << ")\n";
        }
        index.emplace(st, 0);
        exec.push_back(std::move(st));
      }
      executions.push_back(std::move(exec));
    }
  }

  int next_id = 0;
  for (auto& [st, id] : index) id = next_id++;

  ProtocolComplex out;
  out.rounds = next_round;
  out.states.resize(index.size());
  std::vector<VertexInfo> verts(index.size());
  for (const auto& [st, id] : index) {
    out.states[id] = st;
    verts[id] = {st.process, render_state_label(st, bounded)};
  }

  std::vector<Simplex> facets;
  facets.reserve(executions.size());
  for (const auto& exec : executions) {
    Simplex f;
    for (const auto& st : exec) f.push_back(index.at(st));
    facets.push_back(std::move(f));
  }

  out.reflected.resize(index.size());
  for (int id = 0; id < static_cast<int>(out.states.size()); ++id) {
    const ProtocolVertexState& st = out.states[id];
    std::vector<VertexId>& refl = out.reflected[id];
    if (!bounded) {
      for (int q = 0; q < np; ++q)
        if (st.view[q] >= 0) refl.push_back(st.view[q]);
    } else {
      refl.push_back(st.own_prev);
      for (int q = 0; q < np; ++q) {
        if (q == st.process || st.view[q] < 0) continue;
        std::vector<VertexId> cands;
        for (VertexId w : cur.link_vertices(st.own_prev))
          if (cur.color_of(w) == q && enc->code_of(w) == st.view[q])
            cands.push_back(w);
        if (cands.empty())
          throw std::logic_error(
              "biis_round: read code matches no adjacent writer");
        if (cands.size() == 1) {
          refl.push_back(cands[0]);
        } else {
          out.faults.push_back({id, q, cands[0], cands[1]});
        }
      }
    }
    std::sort(refl.begin(), refl.end());
  }

  out.complex = ChromaticComplex(np, std::move(verts), std::move(facets));
  return out;
}

}  // namespace

ProtocolComplex initial_protocol_complex(const ChromaticComplex& I) {
  ProtocolComplex pc;
  pc.complex = I;
  pc.rounds = 0;
  pc.states.resize(I.num_vertices());
  pc.reflected.resize(I.num_vertices());
  for (VertexId v = 0; v < I.num_vertices(); ++v) {
    pc.states[v] = {I.color_of(v), 0, v, {}};
    pc.reflected[v] = {v};
  }
  return pc;
}

ProtocolComplex full_info_round(const ProtocolComplex& pc,
                                std::ostream* trace) {
  return build_round(pc, nullptr, trace);
}

ProtocolComplex biis_round(const ProtocolComplex& pc, const Encoding& enc,
                           std::ostream* trace) {
  return build_round(pc, &enc, trace);
}

ProtocolRun iterate_protocol(const ChromaticComplex& I, int r,
                             ProtocolMode mode,
                             const std::vector<Encoding>* round_encodings,
                             std::ostream* trace) {
  if (r < 0) throw std::invalid_argument("iterate_protocol: r must be >= 0");
  if (mode == ProtocolMode::kBounded &&
      (round_encodings == nullptr ||
       static_cast<int>(round_encodings->size()) < r))
    throw std::invalid_argument(
        "iterate_protocol: bounded mode needs one encoding per round");

  ProtocolRun run;
  run.levels.push_back(initial_protocol_complex(I));

  // Bounded mode: pb maps the states of the current level to the vertices of
  // the equally iterated subdivision, so per-level encodings apply to states.
  std::vector<VertexId> pb(I.num_vertices());
  std::iota(pb.begin(), pb.end(), 0);
  ChromaticComplex subd = I;

  for (int t = 0; t < r; ++t) {
    const ProtocolComplex& cur = run.levels.back();
    if (mode == ProtocolMode::kFullInfo) {
      run.levels.push_back(full_info_round(cur, trace));
      continue;
    }
    const Encoding& level_enc = (*round_encodings)[t];
    Encoding enc_xi;
    for (VertexId v = 0; v < cur.complex.num_vertices(); ++v)
      enc_xi.codes[v] = level_enc.code_of(pb[v]);
    ProtocolComplex next = biis_round(cur, enc_xi, trace);
    if (t + 1 < r) {
      if (!next.faults.empty()) {
        std::ostringstream msg;
        msg << "iterate_protocol: ambiguous read in round " << (t + 1)
            << " leaves states undecodable with rounds remaining";
        throw std::runtime_error(msg.str());
      }
      const Subdivision sub(subd);
      std::vector<VertexId> pb_next(next.complex.num_vertices());
      for (VertexId u = 0; u < next.complex.num_vertices(); ++u) {
        std::set<VertexId> mapped;
        for (VertexId w : next.reflected[u]) mapped.insert(pb[w]);
        const Simplex carrier(mapped.begin(), mapped.end());
        pb_next[u] = sub.vertex_for(next.states[u].process, carrier);
      }
      pb = std::move(pb_next);
      subd = sub.result();
    }
    run.levels.push_back(std::move(next));
  }
  return run;
}

namespace {

/// Joint degree refinement over both 1-skeletons; classes stay comparable
/// across the two complexes. Returns false when class sizes diverge.
bool joint_refinement(const ChromaticComplex& a, const ChromaticComplex& b,
                      std::vector<int>& cls_a, std::vector<int>& cls_b) {
  const auto adj_a = a.adjacency();
  const auto adj_b = b.adjacency();
  const int na = a.num_vertices();
  const int nb = b.num_vertices();
  cls_a.resize(na);
  cls_b.resize(nb);
  for (VertexId v = 0; v < na; ++v) cls_a[v] = a.color_of(v);
  for (VertexId v = 0; v < nb; ++v) cls_b[v] = b.color_of(v);

  int num_classes = a.num_processes();
  for (int iter = 0; iter <= na + 1; ++iter) {
    using Sig = std::pair<int, std::vector<int>>;
    auto signature = [](int c, const std::vector<VertexId>& nbrs,
                        const std::vector<int>& cls) {
      std::vector<int> ns;
      ns.reserve(nbrs.size());
      for (VertexId w : nbrs) ns.push_back(cls[w]);
      std::sort(ns.begin(), ns.end());
      return Sig{c, std::move(ns)};
    };
    std::vector<Sig> sig_a(na), sig_b(nb);
    std::map<Sig, int> ids;
    for (VertexId v = 0; v < na; ++v) {
      sig_a[v] = signature(cls_a[v], adj_a[v], cls_a);
      ids.emplace(sig_a[v], 0);
    }
    for (VertexId v = 0; v < nb; ++v) {
      sig_b[v] = signature(cls_b[v], adj_b[v], cls_b);
      ids.emplace(sig_b[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (VertexId v = 0; v < na; ++v) cls_a[v] = ids.at(sig_a[v]);
    for (VertexId v = 0; v < nb; ++v) cls_b[v] = ids.at(sig_b[v]);

    std::map<int, std::pair<int, int>> hist;
    for (int c : cls_a) hist[c].first++;
    for (int c : cls_b) hist[c].second++;
    for (const auto& [c, n] : hist)
      if (n.first != n.second) return false;

    if (next == num_classes) break;  // stable partition
    num_classes = next;
  }
  return true;
}

struct IsoSearch {
  const ChromaticComplex& a;
  const ChromaticComplex& b;
  std::vector<std::vector<char>> edge_a, edge_b;
  std::vector<int> cls_a, cls_b;
  std::vector<VertexId> order;    // a-vertices, most constrained first
  std::vector<VertexId> mapping;  // a -> b, -1 unassigned
  std::vector<char> used;        // b side
  std::set<Simplex> facets_b;

  bool assign(std::size_t pos) {
    if (pos == order.size()) return facets_match();
    const VertexId v = order[pos];
    for (VertexId w = 0; w < b.num_vertices(); ++w) {
      if (used[w] || cls_b[w] != cls_a[v]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < pos && ok; ++p) {
        const VertexId u = order[p];
        if (edge_a[v][u] != edge_b[w][mapping[u]]) ok = false;
      }
      if (!ok) continue;
      mapping[v] = w;
      used[w] = 1;
      if (assign(pos + 1)) return true;
      mapping[v] = -1;
      used[w] = 0;
    }
    return false;
  }

  bool facets_match() const {
    std::set<Simplex> mapped;
    for (const Simplex& f : a.facets()) {
      Simplex m;
      m.reserve(f.size());
      for (VertexId v : f) m.push_back(mapping[v]);
      std::sort(m.begin(), m.end());
      mapped.insert(std::move(m));
    }
    return mapped == facets_b;
  }
};

}  // namespace

IsoResult chromatic_iso(const ChromaticComplex& a, const ChromaticComplex& b) {
  IsoResult res;
  if (a.num_processes() != b.num_processes()) {
    res.reason = "process counts differ";
    return res;
  }
  if (a.num_vertices() != b.num_vertices()) {
    res.reason = "vertex counts differ";
    return res;
  }
  if (a.facets().size() != b.facets().size()) {
    res.reason = "facet counts differ";
    return res;
  }
  if (!(a.f_vector() == b.f_vector())) {
    res.reason = "f-vectors differ";
    return res;
  }
  for (Color p = 0; p < a.num_processes(); ++p) {
    const auto va = a.vertices_of_color(p);
    const auto vb = b.vertices_of_color(p);
    if (va.size() != vb.size()) {
      res.reason = "color class sizes differ";
      return res;
    }
    std::vector<int> da, db;
    for (VertexId v : va) da.push_back(a.degree(v));
    for (VertexId v : vb) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) {
      res.reason = "degree sequences differ";
      return res;
    }
  }

  IsoSearch search{a, b, {}, {}, {}, {}, {}, {}, {}, {}};
  if (!joint_refinement(a, b, search.cls_a, search.cls_b)) {
    res.reason = "refinement class sizes differ";
    return res;
  }

  const int n = a.num_vertices();
  if (n == 0) {  // both are the empty complex
    res.iso = a.facets() == b.facets();
    if (!res.iso) res.reason = "facet sets differ";
    return res;
  }

  auto edge_matrix = [](const ChromaticComplex& c) {
    const int nv = c.num_vertices();
    std::vector<std::vector<char>> m(nv, std::vector<char>(nv, 0));
    const auto adj = c.adjacency();
    for (VertexId v = 0; v < nv; ++v)
      for (VertexId w : adj[v]) m[v][w] = 1;
    return m;
  };
  search.edge_a = edge_matrix(a);
  search.edge_b = edge_matrix(b);
  for (const Simplex& f : b.facets()) search.facets_b.insert(f);

  // Most constrained first: small refinement cells, then high degree.
  std::map<int, int> cell_size;
  for (int c : search.cls_a) cell_size[c]++;
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(),
            [&](VertexId x, VertexId y) {
              const int cx = cell_size[search.cls_a[x]];
              const int cy = cell_size[search.cls_a[y]];
              if (cx != cy) return cx < cy;
              const int dx = a.degree(x), dy = a.degree(y);
              if (dx != dy) return dx > dy;
              return x < y;
            });
  search.mapping.assign(n, -1);
  search.used.assign(n, 0);

  if (search.assign(0)) {
    res.iso = true;
    res.mapping = search.mapping;
  } else {
    res.reason = "no color-preserving bijection maps facets onto facets";
  }
  return res;
}

EncodingFidelityResult encoding_fidelity_check(const ChromaticComplex& I, const Encoding& enc) {
  EncodingFidelityResult out;
  out.dist = is_distinguishable(I, enc);
  out.distinguishable = out.dist.distinguishable;
  out.bounded = biis_round(initial_protocol_complex(I), enc);
  const ChromaticComplex ch = chromatic_subdivide(I);
  out.iso = chromatic_iso(out.bounded.complex, ch);
  out.isomorphic = out.iso.iso;
  if (out.distinguishable != out.isomorphic)
    throw std::logic_error(
        "encoding_fidelity_check: distinguishability and isomorphism verdicts disagree");
  return out;
}

bool carrier_agreement_check(const ChromaticComplex& I) {
  const ProtocolComplex xi = full_info_round(initial_protocol_complex(I));
  const Subdivision sub(I);
  const ChromaticComplex& ch = sub.result();
  if (xi.complex.num_vertices() != ch.num_vertices()) return false;

  const int n = xi.complex.num_vertices();
  std::vector<VertexId> map_to_ch(n, -1);
  std::vector<char> used(ch.num_vertices(), 0);
  for (VertexId u = 0; u < n; ++u) {
    VertexId tgt = -1;
    try {
      tgt = sub.vertex_for(xi.states[u].process, xi.reflected[u]);
    } catch (const std::exception&) {
      return false;  // the seen set is not a face of I
    }
    if (used[tgt]) return false;
    used[tgt] = 1;
    map_to_ch[u] = tgt;
  }

  std::set<Simplex> mapped;
  for (const Simplex& f : xi.complex.facets()) {
    Simplex m;
    m.reserve(f.size());
    for (VertexId v : f) m.push_back(map_to_ch[v]);
    std::sort(m.begin(), m.end());
    mapped.insert(std::move(m));
  }
  const std::set<Simplex> target(ch.facets().begin(), ch.facets().end());
  return mapped.size() == xi.complex.facets().size() && mapped == target;
}

}  // namespace biis
