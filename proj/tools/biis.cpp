// biis: protocol laboratory for the bounded iterated immediate snapshot
// model. Subcommands cover chromatic subdivision, f-vector recurrences,
// indistinguishability graphs, encoding synthesis, exhaustive simulation,
// isomorphism checking, approximate agreement, and the asymptotic tables.
//
// Exit codes: 0 success; 1 a checked property failed (NOT-ISO, mismatch,
// failed agreement); 2 input or parse error; 3 decode fault aborted a
// bounded run; 4 internal cross-check violation; 5 facet cap exceeded.

#include "CLI11.hpp"

#include "biis/agreement.hpp"
#include "biis/combinatorics.hpp"
#include "biis/complex.hpp"
#include "biis/config.hpp"
#include "biis/fvector_calculus.hpp"
#include "biis/generators.hpp"
#include "biis/indist.hpp"
#include "biis/io.hpp"
#include "biis/protocol.hpp"
#include "biis/subdivision.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace biis;

namespace {

// Stream that is std::cout unless an output path was given.
class OutputTarget {
 public:
  void open(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open output file: " + path);
    stream_ = &file_;
  }
  std::ostream& out() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = &std::cout;
};

int cmd_subdivide(const std::string& input, int r, const std::string& opath) {
  const ChromaticComplex c = read_complex_file(input);
  OutputTarget target;
  target.open(opath);
  write_complex(target.out(), iterate_subdivide(c, r));
  return 0;
}

int cmd_fvector(const std::string& input, int r, bool recurrence, bool direct) {
  const ChromaticComplex c = read_complex_file(input);
  const bool both = recurrence == direct;  // neither or both flags: run both
  FVector by_recurrence, by_direct;
  if (both || recurrence) {
    by_recurrence = c.f_vector();
    const InteriorTable table =
        interior_table_by_enumeration(std::max(0, c.dim()));
    for (int t = 0; t < r; ++t)
      by_recurrence = fvec_subdivision(by_recurrence, table);
    std::cout << "recurrence: " << by_recurrence.to_string() << "\n";
  }
  if (both || direct) {
    by_direct = iterate_subdivide(c, r).f_vector();
    std::cout << "direct: " << by_direct.to_string() << "\n";
  }
  if (both) {
    const bool match = by_recurrence == by_direct;
    std::cout << "match: " << (match ? "yes" : "no") << "\n";
    return match ? 0 : 1;
  }
  return 0;
}

int cmd_indist_graph(const std::string& input, int p) {
  const ChromaticComplex c = read_complex_file(input);
  if (p >= c.num_processes())
    throw std::runtime_error("color " + std::to_string(p) +
                             " out of range for " +
                             std::to_string(c.num_processes()) + " processes");
  for (Color q = 0; q < c.num_processes(); ++q) {
    if (p >= 0 && q != p) continue;
    const IndistGraph g = indist_graph(c, q);
    std::cout << "G_" << q << ": nodes " << g.nodes.size() << " edges "
              << g.edges.size() << "\n";
    for (const auto& [u, v] : g.edges) std::cout << u << " " << v << "\n";
  }
  return 0;
}

int cmd_encode(const std::string& input, int r, bool exact,
               const std::string& opath) {
  const ChromaticComplex c = read_complex_file(input);
  const EncodingSchedule sched = synth_encoding_schedule(c, r, exact);
  OutputTarget target;
  target.open(opath);
  target.out() << bounds_report_csv(sched);
  for (const RoundEncoding& re : sched.rounds) {
    target.out() << "\nround " << re.round << "\n";
    write_encoding(target.out(), re.encoding.codes);
  }
  return 0;
}

int cmd_verify(const std::string& input, const std::string& encoding_path) {
  const ChromaticComplex c = read_complex_file(input);
  Encoding e;
  e.codes = read_encoding_file(encoding_path);
  const DistResult d = is_distinguishable(c, e);
  coloring_equivalence_check(c, e);  // logic_error on any internal split
  if (d.distinguishable) {
    std::cout << "DISTINGUISHABLE\n";
  } else {
    std::cout << "NOT-DISTINGUISHABLE witness s=" << d.witness->s
              << " t=" << d.witness->t << " w=" << d.witness->w << "\n";
  }
  return 0;
}

// Reads the per-round encodings back out of an `encode` output file: lines
// `round <k>` open a section, `<vertex> <code>` lines fill it, and anything
// else (the bounds CSV, blanks) is ignored.
std::vector<Encoding> read_schedule_file(const std::string& path, int rounds) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schedule file: " + path);
  std::map<int, Encoding> sections;
  int current = -1;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "round") {
      int k = 0;
      std::string extra;
      if (ls >> k && !(ls >> extra)) {
        current = k;
        sections[k];  // a section may legitimately stay empty
        continue;
      }
      current = -1;
      continue;
    }
    long long v = 0, code = 0;
    std::istringstream pair(line);
    std::string extra;
    if (current >= 0 && pair >> v >> code && !(pair >> extra))
      sections[current].codes[static_cast<VertexId>(v)] =
          static_cast<int>(code);
  }
  std::vector<Encoding> out;
  for (int k = 0; k < rounds; ++k) {
    const auto it = sections.find(k);
    if (it == sections.end())
      throw std::runtime_error("schedule file has no section for round " +
                               std::to_string(k));
    out.push_back(it->second);
  }
  return out;
}

int cmd_simulate(const std::string& input, int r,
                 const std::string& schedule_path, bool trace) {
  const ChromaticComplex I = read_complex_file(input);
  std::ostream* tr = trace ? &std::cout : nullptr;
  ProtocolRun run;
  if (schedule_path.empty()) {
    run = iterate_protocol(I, r, ProtocolMode::kFullInfo, nullptr, tr);
  } else {
    const std::vector<Encoding> encs = read_schedule_file(schedule_path, r);
    try {
      run = iterate_protocol(I, r, ProtocolMode::kBounded, &encs, tr);
    } catch (const std::runtime_error&) {
      // A decode fault stopped the run before the last round. Rerun the
      // shortest faulty prefix to recover the witness triples.
      for (int t = 1; t <= r; ++t) {
        const ProtocolRun prefix =
            iterate_protocol(I, t, ProtocolMode::kBounded, &encs);
        if (prefix.levels[t].faults.empty()) continue;
        for (const DecodeFault& f : prefix.levels[t].faults)
          std::cout << "decode-fault round=" << t << " at=" << f.at
                    << " slot=" << f.slot << " w1=" << f.w1 << " w2=" << f.w2
                    << "\n";
        std::cout << "aborted: ambiguous read in round " << t << " of " << r
                  << "\n";
        return 3;
      }
      throw;
    }
  }
  const ProtocolComplex& last = run.levels.back();
  for (const DecodeFault& f : last.faults)
    std::cout << "decode-fault round=" << r << " at=" << f.at
              << " slot=" << f.slot << " w1=" << f.w1 << " w2=" << f.w2
              << "\n";
  const IsoResult iso = chromatic_iso(last.complex, iterate_subdivide(I, r));
  if (iso.iso) {
    std::cout << "ISO\n";
    return 0;
  }
  std::cout << "NOT-ISO: " << iso.reason << "\n";
  VertexId worst = -1;
  int maxdeg = -1;
  for (VertexId v = 0; v < last.complex.num_vertices(); ++v)
    if (last.complex.degree(v) > maxdeg) {
      maxdeg = last.complex.degree(v);
      worst = v;
    }
  if (worst >= 0)
    std::cout << "max-degree vertex " << worst << " ("
              << last.complex.vertex(worst).label << ") degree " << maxdeg
              << "\n";
  return 1;
}

int cmd_iso(const std::string& a_path, const std::string& b_path) {
  const ChromaticComplex a = read_complex_file(a_path);
  const ChromaticComplex b = read_complex_file(b_path);
  const IsoResult iso = chromatic_iso(a, b);
  if (iso.iso) {
    std::cout << "ISO\n";
    return 0;
  }
  std::cout << "NOT-ISO: " << iso.reason << "\n";
  return 1;
}

int cmd_agree(int r, bool trace) {
  const AAReport rep = run_agreement(r, trace ? &std::cout : nullptr);
  const auto line = [](const std::string& label, bool ok) {
    std::cout << label << ": " << (ok ? "PASS" : "FAIL") << "\n";
  };
  std::cout << "rounds: " << rep.rounds << "\n";
  line("path of " + rep.eps_edges.str() + " edges", rep.path_ok);
  line("endpoints", rep.endpoints_ok);
  line("state adjacency", rep.state_adjacency_ok);
  line("agreement", rep.agreement_ok);
  line("validity", rep.validity_ok);
  line("alphabet", rep.alphabet_ok);
  line("iso", rep.iso_ok);
  if (!rep.details.empty()) std::cout << "details: " << rep.details << "\n";
  return rep.all_ok() ? 0 : 1;
}

int cmd_ratios(int k, int n_from, int n_to) {
  if (n_from == 0) n_from = k;
  std::cout << ratio_table_csv(bounding_ratio_table(k, n_from, n_to));
  return 0;
}

int cmd_fubini(int n_max) {
  const double ln2 = std::log(2.0);
  std::cout << "n,fubini,asymptotic,rel_err\n";
  for (int n = 0; n <= n_max; ++n) {
    const double asymptotic = BigRat(factorial(n), BigInt(2))
                                  .convert_to<double>() /
                              std::pow(ln2, n + 1);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", asymptotic);
    std::cout << n << "," << ordered_bell(n).str() << "," << buf;
    std::snprintf(buf, sizeof(buf), "%.12g", fubini_asymptotic_rel_err(n));
    std::cout << "," << buf << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "protocol laboratory for the bounded iterated immediate snapshot "
      "model"};
  app.require_subcommand(1);

  std::int64_t max_facets = 0;
  int threads = 0;
  unsigned long long seed = 0;
  app.add_option("--max-facets", max_facets,
                 "facet cap for every construction (overrides BIIS_MAX_FACETS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads,
                 "worker threads for subdivision (overrides BIIS_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed,
                 "reserved for randomized suites; all commands here are "
                 "deterministic");

  std::string input, output, encoding_path, schedule_path, b_path;
  int rounds_subdivide = 1, rounds_fvector = 0, rounds_encode = 1,
      rounds_simulate = 1, rounds_agree = 1;
  bool flag_recurrence = false, flag_direct = false, flag_both = false;
  bool flag_exact = false, flag_trace = false;
  int color = -1, ratio_k = 1, ratio_from = 0, ratio_to = 12, fubini_n = 10;

  CLI::App* subdivide =
      app.add_subcommand("subdivide", "write the r-fold chromatic subdivision");
  subdivide->add_option("input", input, "complex file")->required();
  subdivide->add_option("-r,--rounds", rounds_subdivide, "subdivision rounds")
      ->check(CLI::NonNegativeNumber);
  subdivide->add_option("-o,--output", output, "output file (default stdout)");

  CLI::App* fvector = app.add_subcommand(
      "fvector", "f-vector of the r-fold subdivision, by recurrence and/or "
                 "enumeration");
  fvector->add_option("input", input, "complex file")->required();
  fvector->add_option("-r,--rounds", rounds_fvector, "subdivision rounds")
      ->check(CLI::NonNegativeNumber);
  fvector->add_flag("--recurrence", flag_recurrence, "recurrence route only");
  fvector->add_flag("--direct", flag_direct, "enumeration route only");
  fvector->add_flag("--both", flag_both,
                    "both routes plus a match flag (default)");

  CLI::App* indist = app.add_subcommand(
      "indist-graph", "indistinguishability graph of each color");
  indist->add_option("input", input, "complex file")->required();
  indist->add_option("-p,--process", color, "only this color (default: all)");

  CLI::App* encode = app.add_subcommand(
      "encode", "synthesize per-round encodings with their bound report");
  encode->add_option("input", input, "complex file")->required();
  encode->add_option("-r,--rounds", rounds_encode, "rounds to synthesize")
      ->check(CLI::NonNegativeNumber);
  encode->add_flag("--exact", flag_exact,
                   "exact chromatic number where feasible");
  encode->add_option("-o,--output", output, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "check whether an encoding is distinguishable on a complex");
  verify->add_option("input", input, "complex file")->required();
  verify->add_option("encoding", encoding_path, "encoding table file")
      ->required();

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run r rounds exhaustively and compare against Ch^r");
  simulate->add_option("input", input, "complex file")->required();
  simulate->add_option("-r,--rounds", rounds_simulate, "protocol rounds")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--bounded", schedule_path,
                       "encoding schedule file; bounded run instead of "
                       "full-information");
  simulate->add_flag("--trace", flag_trace, "print every execution step");

  CLI::App* iso =
      app.add_subcommand("iso", "color-preserving isomorphism of two files");
  iso->add_option("a", input, "first complex file")->required();
  iso->add_option("b", b_path, "second complex file")->required();

  CLI::App* agree = app.add_subcommand(
      "agree", "run the two-process approximate-agreement protocol");
  agree->add_option("--rounds", rounds_agree, "rounds (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  agree->add_flag("--trace", flag_trace, "print every transition");

  CLI::App* ratios = app.add_subcommand(
      "ratios", "star-count ratios against the closed-form bound");
  ratios->add_option("-k", ratio_k, "face dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  ratios->add_option("--n-from", ratio_from, "first n (default k)")
      ->check(CLI::NonNegativeNumber);
  ratios->add_option("--n-to", ratio_to, "last n")->required();

  CLI::App* fubini =
      app.add_subcommand("fubini", "ordered Bell numbers vs their asymptotic");
  fubini->add_option("-n", fubini_n, "largest n")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  // Flags win over the environment-derived defaults.
  if (max_facets > 0) limits().max_facets = max_facets;
  if (threads > 0) limits().threads = threads;

  try {
    if (*subdivide) return cmd_subdivide(input, rounds_subdivide, output);
    if (*fvector) {
      if (flag_both && (flag_recurrence || flag_direct))
        throw std::runtime_error("--both excludes --recurrence/--direct");
      return cmd_fvector(input, rounds_fvector, flag_recurrence, flag_direct);
    }
    if (*indist) return cmd_indist_graph(input, color);
    if (*encode) return cmd_encode(input, rounds_encode, flag_exact, output);
    if (*verify) return cmd_verify(input, encoding_path);
    if (*simulate)
      return cmd_simulate(input, rounds_simulate, schedule_path, flag_trace);
    if (*iso) return cmd_iso(input, b_path);
    if (*agree) return cmd_agree(rounds_agree, flag_trace);
    if (*ratios) return cmd_ratios(ratio_k, ratio_from, ratio_to);
    if (*fubini) return cmd_fubini(fubini_n);
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
