#pragma once

#include "biis/types.hpp"

#include <iosfwd>
#include <string>

namespace biis {

/// Two-process approximate-agreement protocol with a two-letter alphabet.
/// States are nonnegative integers; transmitted codes are 1 or 2.

/// Code a process publishes in state s.
int aa_encode(long long s);

/// State transition of process i in state s on received code m (-1 when
/// nothing was seen). The mismatch transition of process 0 in state 0 cannot
/// occur in a reachable execution; taking it raises std::logic_error.
long long aa_next_state(int i, int m, long long s);

/// Decision of process i in state s after r rounds: (2s + i) / 3^r.
BigRat aa_decide(int i, long long s, int r);

struct AAReport {
  int rounds = 0;
  BigInt eps_edges;               // 3^r, the edge count of the final path
  bool path_ok = false;           // final complex is a path of 3^r edges
  bool endpoints_ok = false;      // the solo corners sit at its two ends
  bool state_adjacency_ok = false;  // every edge has s_p0 - s_p1 in {0, 1}
  bool agreement_ok = false;      // decisions per edge differ by <= 3^-r
  bool validity_ok = false;       // decisions lie in [0,1]; solo 0 and 1
  bool alphabet_ok = false;       // only codes 1 and 2 ever transmitted
  bool iso_ok = false;            // final complex matches the r-fold
                                  // subdivision of an edge
  std::string details;            // first failure, empty when all pass

  bool all_ok() const {
    return path_ok && endpoints_ok && state_adjacency_ok && agreement_ok &&
           validity_ok && alphabet_ok && iso_ok;
  }
};

/// Runs the protocol for r rounds from the shared input edge, checking the
/// invariants each round and the path/decision properties at the end.
AAReport run_agreement(int r, std::ostream* trace = nullptr);

}  // namespace biis
