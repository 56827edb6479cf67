#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace biis {

/// Process identity. Simplex colors and process indices share this type.
using Color = std::int32_t;

/// Index of a vertex inside one complex. Ids are dense, starting at 0.
using VertexId = std::int32_t;

/// Exact integer used wherever counts can outgrow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used by the identity checks and decision maps.
using BigRat = boost::multiprecision::cpp_rational;

/// A simplex as a sorted, duplicate-free list of vertex ids.
/// The empty vector denotes the empty simplex.
using Simplex = std::vector<VertexId>;

/// A plain collection of simplices, not necessarily closed under subsets.
/// Open stars and interiors live here.
using FaceSet = std::vector<Simplex>;

/// Sorts and deduplicates a vertex list into canonical simplex form.
Simplex make_simplex(std::vector<VertexId> ids);

/// True iff every vertex of `a` occurs in `b` (both canonical).
bool simplex_subset(const Simplex& a, const Simplex& b);

/// Union of two canonical simplices, canonical.
Simplex simplex_union(const Simplex& a, const Simplex& b);

/// True iff the two canonical simplices share no vertex.
bool simplex_disjoint(const Simplex& a, const Simplex& b);

/// Face-count vector (f_{-1}, f_0, ..., f_dim).
///
/// f_{-1} counts the empty simplex: 1 for every non-void complex, and by
/// convention 0 for a face set that does not contain the empty simplex.
/// Trailing zero counts are trimmed, so equality ignores them.
class FVector {
 public:
  FVector() = default;

  /// f_k; returns 0 for any k outside the stored range (k >= -1).
  BigInt f(int k) const {
    const std::size_t idx = static_cast<std::size_t>(k + 1);
    if (k < -1 || idx >= counts_.size()) return 0;
    return counts_[idx];
  }

  void set_f(int k, BigInt value) {
    const std::size_t idx = static_cast<std::size_t>(k + 1);
    if (counts_.size() <= idx) counts_.resize(idx + 1, 0);
    counts_[idx] = std::move(value);
    trim();
  }

  void add_f(int k, const BigInt& value) { set_f(k, f(k) + value); }

  /// Largest k with f_k != 0; -2 when every count is zero.
  int dim() const { return static_cast<int>(counts_.size()) - 2; }

  bool operator==(const FVector& o) const { return counts_ == o.counts_; }
  bool operator!=(const FVector& o) const { return !(*this == o); }

  /// Renders "(1, 12, 24, 13)" starting at f_{-1}.
  std::string to_string() const;

 private:
  void trim() {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  }

  std::vector<BigInt> counts_;  // counts_[k + 1] = f_k
};

}  // namespace biis
