#pragma once

#include "biis/complex.hpp"
#include "biis/indist.hpp"
#include "biis/types.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace biis {

/// An execution schedule: an ordered partition of the participating colors
/// into concurrency blocks, earliest block first.
using Schedule = std::vector<std::vector<Color>>;

/// All schedules over the given participants (ascending colors expected),
/// in a fixed deterministic order. ordered_bell(|participants|) entries.
std::vector<Schedule> enumerate_schedules(const std::vector<Color>& participants);

/// One immediate-snapshot layer. values[q] is process q's written value, -1
/// when q does not participate; sched must order exactly the participating
/// colors. Returns per participant its snapshot: entry q holds values[q]
/// when q's block precedes or equals the reader's block, else -1. A process
/// always sees its own value.
std::map<Color, std::vector<int>> run_is_layer(const std::vector<int>& values,
                                               const Schedule& sched);

/// State of one process after a round. In full-information mode `view` holds
/// previous-round vertex ids; in bounded mode it holds the codes read from
/// the other slots (own slot -1, the full own state is in own_prev). -1
/// means the slot was not seen.
struct ProtocolVertexState {
  Color process = 0;
  int round = 0;
  VertexId own_prev = -1;
  std::vector<int> view;

  friend bool operator<(const ProtocolVertexState& a,
                        const ProtocolVertexState& b) {
    return std::tie(a.process, a.own_prev, a.view, a.round) <
           std::tie(b.process, b.own_prev, b.view, b.round);
  }
  friend bool operator==(const ProtocolVertexState& a,
                         const ProtocolVertexState& b) {
    return a.process == b.process && a.round == b.round &&
           a.own_prev == b.own_prev && a.view == b.view;
  }
};

/// Ambiguous read: at vertex `at`, the code in slot `slot` matched two
/// distinct previous-round vertices w1 < w2.
struct DecodeFault {
  VertexId at = -1;
  Color slot = 0;
  VertexId w1 = -1;
  VertexId w2 = -1;
};

/// Protocol complex after some number of rounds. Vertices are reachable
/// states, facets are the states of one execution; `reflected[v]` lists the
/// previous-round vertices state v identifies with certainty (always
/// including its own).
struct ProtocolComplex {
  ChromaticComplex complex;
  std::vector<ProtocolVertexState> states;
  std::vector<std::vector<VertexId>> reflected;
  std::vector<DecodeFault> faults;
  int rounds = 0;
};

/// Round-zero complex: the input itself, each vertex its own state.
ProtocolComplex initial_protocol_complex(const ChromaticComplex& I);

/// One full-information round: every process transmits its complete state.
ProtocolComplex full_info_round(const ProtocolComplex& pc,
                                std::ostream* trace = nullptr);

/// One bounded round: every process transmits only enc(previous vertex);
/// enc must be total on the vertices of pc.complex. Ambiguous reads are
/// recorded as faults and construction continues on the quotient states.
ProtocolComplex biis_round(const ProtocolComplex& pc, const Encoding& enc,
                           std::ostream* trace = nullptr);

enum class ProtocolMode { kFullInfo, kBounded };

struct ProtocolRun {
  std::vector<ProtocolComplex> levels;  // levels[t] = state after t rounds
};

/// Runs r rounds from input I. Bounded mode requires round_encodings with at
/// least r entries, entry t encoding the vertices of the t-fold subdivision
/// of I (states are matched to subdivision vertices through their reflected
/// sets). A decode fault with rounds still remaining raises
/// std::runtime_error, since later reads would be against ambiguous states.
ProtocolRun iterate_protocol(const ChromaticComplex& I, int r,
                             ProtocolMode mode,
                             const std::vector<Encoding>* round_encodings = nullptr,
                             std::ostream* trace = nullptr);

struct IsoResult {
  bool iso = false;
  std::vector<VertexId> mapping;  // a-vertex -> b-vertex when iso holds
  std::string reason;             // first obstruction when it does not
};

/// Color-preserving simplicial isomorphism test: invariant screening, then
/// joint degree refinement, then backtracking with a facet-set verification
/// of any completed bijection.
IsoResult chromatic_iso(const ChromaticComplex& a, const ChromaticComplex& b);

struct EncodingFidelityResult {
  bool distinguishable = false;
  bool isomorphic = false;
  DistResult dist;
  IsoResult iso;
  ProtocolComplex bounded;  // one bounded round under enc
};

/// Checks the equivalence "enc distinguishable on I <=> one bounded round
/// is isomorphic to the subdivision of I"; both sides are computed
/// independently and a disagreement raises std::logic_error.
EncodingFidelityResult encoding_fidelity_check(const ChromaticComplex& I, const Encoding& enc);

/// One full-information round satisfies carrier agreement: the canonical map
/// (process, seen set) -> (color, carrier) is a simplicial isomorphism onto
/// the subdivision of I. Returns false with no side effects when any part of
/// the correspondence fails.
bool carrier_agreement_check(const ChromaticComplex& I);

}  // namespace biis
