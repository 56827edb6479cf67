#pragma once

#include "biis/complex.hpp"
#include "biis/types.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace biis {

/// Memoized star table T[k][n] = f_k(St°(Ch Δ^n, v)) at a corner vertex v,
/// filled by the double-sum recurrence
///   T(k, n) = sum_{i=k..n} C(n, i) sum_{j=1..k} C(i, j) T(k-j, i-j),
///   T(0, n) = 1.
/// The diagonal T(n, n) traverses the Fubini numbers. Entries grow lazily;
/// access is internally synchronized.
class StarFVectorTable {
 public:
  /// T(k, n); 0 outside 0 <= k <= n.
  BigInt value(int k, int n);

  /// Process-wide shared table.
  static StarFVectorTable& shared();

 private:
  void ensure(int k, int n);

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> table_;  // table_[k][n], n >= k
};

/// T(k, n) through the shared table. Argument order follows the star symbol:
/// dimension first.
BigInt f_star_ch_delta(int n, int k);

/// f_k(Int St°(Ch Δ^n, v)) at a corner vertex:
///   sum_{i=1..k} C(n, i) f_{k-i}(St°(Ch Δ^{n-i}, v));  0 for k = 0.
BigInt f_int_star_ch(int n, int k);

/// Iterated-star recurrence: starting from the f-vector of St°(A, v) with
/// dim(A) = n, applies r rounds of
///   g'_k = sum_{i=k..n} g_i f_int_star_ch(i, k)  (k >= 1),   g'_0 = 1,
/// and returns the k-th coordinate: f_k(St°(Ch^r A, v)).
BigInt f_star_ch_iterated(const FVector& base_star, int n, int r, int k);

/// Interior f-vectors of Ch Δ^i, indexed by i.
using InteriorTable = std::vector<FVector>;

/// Builds the interior table by direct enumeration: subdivide Δ^i and count
/// the faces outside the boundary subcomplex, for every i <= max_dim.
InteriorTable interior_table_by_enumeration(int max_dim);

/// f-vector of the subdivision from the f-vector of the input:
///   f_k = sum_{i=k..n} f_i(A) * table[i].f(k),   f_{-1} = 1.
/// Throws std::invalid_argument when the table lacks a dimension of fa.
FVector fvec_subdivision(const FVector& fa, const InteriorTable& table);

/// Both routes of the distance-2 vertex count at v (a vertex of c):
/// the star-side identity sum_{i>=1} f_i(St°(c, v)).
BigInt link_star_count(const ChromaticComplex& c, VertexId v);

/// The same count measured on the subdivision: f_0 of the link of the
/// closed star of v's corner copy in Ch c, restricted to v's color.
BigInt link_star_count_direct(const ChromaticComplex& c, VertexId v);

struct ArgmaxStar {
  VertexId vertex = -1;  // a vertex of Ch c
  BigInt value = 0;      // f_k(St°(Ch^r c, vertex))
};

/// Maximizes f_k(St°(Ch^r c, ·)) over the vertices of the first subdivision
/// (embedded into Ch^r c); ties break toward the smallest vertex id.
ArgmaxStar argmax_star_vertex(const ChromaticComplex& c, int r, int k);

/// Exact check of the summation identity
///   sum_{i=k..n} C(n,i) C(i,r) b^{i-a} (i-r)_{k-r}
///     = (b^{k-a} / r!) (b+1)^{n-k} (n)_k
/// in rational arithmetic. Requires 0 <= r <= k <= n and b > 0; the exponent
/// shift `alpha` is a free integer parameter.
bool identity_a1_check(int n, int k, int r, long b, long alpha);

struct RatioRow {
  int k = 0;
  int n = 0;
  BigInt T;          // T(k, n)
  BigInt bound;      // (k+1)^{n-k} (n)_k
  double ratio = 0;      // T ln(2)^{k-1} / bound
  double ratio_alt = 0;  // T ln(2)^{k+1} / bound
};

/// Ratio diagnostics for fixed k over n in [n_from, n_to] (rows require
/// n >= k). Two normalizations are emitted side by side: the statement's
/// ln(2)^{k-1} and the bounding function's ln(2)^{k+1}.
std::vector<RatioRow> bounding_ratio_table(int k, int n_from, int n_to);

/// CSV rendering with header `k,n,T,bound,ratio,ratio_alt`; exact integers
/// in full, ratios with 12 significant digits.
std::string ratio_table_csv(const std::vector<RatioRow>& rows);

/// | ordered_bell(n) / (n! / (2 ln(2)^{n+1})) - 1 |.
double fubini_asymptotic_rel_err(int n);

}  // namespace biis
