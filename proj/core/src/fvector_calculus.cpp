#include "biis/fvector_calculus.hpp"

#include "biis/combinatorics.hpp"
#include "biis/generators.hpp"
#include "biis/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace biis {

namespace {

constexpr double kLn2 = 0.6931471805599453;  // ln 2

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

BigInt StarFVectorTable::value(int k, int n) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k == 0) return 1;
  std::lock_guard<std::mutex> lock(mutex_);
  ensure(k, n);
  return table_[k][n];
}

StarFVectorTable& StarFVectorTable::shared() {
  static StarFVectorTable t;
  return t;
}

void StarFVectorTable::ensure(int k, int n) {
  const int have_k = static_cast<int>(table_.size()) - 1;
  const int have_n =
      table_.empty() ? -1 : static_cast<int>(table_[0].size()) - 1;
  if (k <= have_k && n <= have_n) return;
  const int new_k = std::max(k, have_k);
  const int new_n = std::max({n, have_n, new_k});

  std::vector<std::vector<BigInt>> t(new_k + 1,
                                     std::vector<BigInt>(new_n + 1, 0));
  for (int nn = 0; nn <= new_n; ++nn) t[0][nn] = 1;
  for (int kk = 1; kk <= new_k; ++kk) {
    for (int nn = kk; nn <= new_n; ++nn) {
      BigInt sum = 0;
      for (int i = kk; i <= nn; ++i) {
        BigInt inner = 0;
        for (int j = 1; j <= kk; ++j) {
          if (kk - j > i - j) continue;  // zero entry
          inner += binomial(i, j) * t[kk - j][i - j];
        }
        sum += binomial(nn, i) * inner;
      }
      t[kk][nn] = sum;
    }
  }
  table_ = std::move(t);
}

BigInt f_star_ch_delta(int n, int k) {
  return StarFVectorTable::shared().value(k, n);
}

BigInt f_int_star_ch(int n, int k) {
  if (k <= 0 || n < 0) return 0;
  BigInt sum = 0;
  for (int i = 1; i <= std::min(k, n); ++i)
    sum += binomial(n, i) * f_star_ch_delta(n - i, k - i);
  return sum;
}

BigInt f_star_ch_iterated(const FVector& base_star, int n, int r, int k) {
  if (n < 0) throw std::invalid_argument("f_star_ch_iterated: n must be >= 0");
  if (r < 0) throw std::invalid_argument("f_star_ch_iterated: r must be >= 0");
  std::vector<BigInt> g(n + 1, 0);
  for (int i = 0; i <= n; ++i) g[i] = base_star.f(i);
  for (int round = 0; round < r; ++round) {
    std::vector<BigInt> h(n + 1, 0);
    h[0] = 1;
    for (int kk = 1; kk <= n; ++kk)
      for (int i = kk; i <= n; ++i) h[kk] += g[i] * f_int_star_ch(i, kk);
    g = std::move(h);
  }
  if (k < 0 || k > n) return 0;
  return g[k];
}

InteriorTable interior_table_by_enumeration(int max_dim) {
  if (max_dim < 0)
    throw std::invalid_argument("interior_table_by_enumeration: max_dim < 0");
  InteriorTable table;
  for (int i = 0; i <= max_dim; ++i) {
    const ChromaticComplex sub = chromatic_subdivide(standard_simplex(i));
    table.push_back(fvector_of(interior(sub)));
  }
  return table;
}

FVector fvec_subdivision(const FVector& fa, const InteriorTable& table) {
  FVector out;
  out.set_f(-1, 1);
  const int d = fa.dim();
  if (d >= 0 && static_cast<int>(table.size()) <= d) {
    std::ostringstream msg;
    msg << "fvec_subdivision: interior table has no entry for dimension " << d;
    throw std::invalid_argument(msg.str());
  }
  for (int k = 0; k <= d; ++k) {
    BigInt sum = 0;
    for (int i = k; i <= d; ++i) sum += fa.f(i) * table[i].f(k);
    out.set_f(k, sum);
  }
  return out;
}

BigInt link_star_count(const ChromaticComplex& c, VertexId v) {
  const FVector fv = fvector_of(open_star(c, {v}));
  BigInt sum = 0;
  for (int i = 1; i <= fv.dim(); ++i) sum += fv.f(i);
  return sum;
}

BigInt link_star_count_direct(const ChromaticComplex& c, VertexId v) {
  const Subdivision sub(c);
  const Color p = c.color_of(v);
  const VertexId corner = sub.vertex_for(p, {v});
  const ChromaticComplex& chc = sub.result();
  const FaceSet closed_star = star_faces(chc, {{corner}});
  return link_count_of_color(chc, closed_star, p);
}

ArgmaxStar argmax_star_vertex(const ChromaticComplex& c, int r, int k) {
  if (r < 1) throw std::invalid_argument("argmax_star_vertex: r must be >= 1");
  if (k < 0) throw std::invalid_argument("argmax_star_vertex: k must be >= 0");
  const IteratedSubdivision it(c, r);
  const ChromaticComplex& once = it.level(1);
  const ChromaticComplex& top = it.level(r);
  ArgmaxStar best;
  for (VertexId v = 0; v < once.num_vertices(); ++v) {
    const VertexId tv = it.embed_to_top(1, v);
    const FaceSet ost = open_star(top, {tv});
    BigInt count = 0;
    for (const Simplex& s : ost)
      if (static_cast<int>(s.size()) == k + 1) ++count;
    if (best.vertex < 0 || count > best.value) {
      best.vertex = v;
      best.value = count;
    }
  }
  return best;
}

bool identity_a1_check(int n, int k, int r, long b, long alpha) {
  if (!(0 <= r && r <= k && k <= n))
    throw std::invalid_argument("identity_a1_check: need 0 <= r <= k <= n");
  if (b < 1) throw std::invalid_argument("identity_a1_check: b must be >= 1");
  const BigRat base(b);
  BigRat lhs = 0;
  for (int i = k; i <= n; ++i) {
    lhs += BigRat(binomial(n, i) * binomial(i, r) *
                  falling_factorial(i - r, k - r)) *
           rpow(base, i - alpha);
  }
  const BigRat rhs = rpow(base, k - alpha) *
                     BigRat(ipow(BigInt(b + 1), n - k) *
                            falling_factorial(n, k)) /
                     BigRat(factorial(r));
  return lhs == rhs;
}

std::vector<RatioRow> bounding_ratio_table(int k, int n_from, int n_to) {
  if (k < 0) throw std::invalid_argument("bounding_ratio_table: k must be >= 0");
  std::vector<RatioRow> rows;
  for (int n = std::max(n_from, k); n <= n_to; ++n) {
    RatioRow row;
    row.k = k;
    row.n = n;
    row.T = f_star_ch_delta(n, k);
    row.bound = ipow(BigInt(k + 1), n - k) * falling_factorial(n, k);
    const double q = BigRat(row.T, row.bound).convert_to<double>();
    row.ratio = q * std::pow(kLn2, k - 1);
    row.ratio_alt = q * std::pow(kLn2, k + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ratio_table_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream out;
  out << "k,n,T,bound,ratio,ratio_alt\n";
  for (const RatioRow& row : rows) {
    out << row.k << ',' << row.n << ',' << row.T.str() << ','
        << row.bound.str() << ',' << format_double(row.ratio) << ','
        << format_double(row.ratio_alt) << '\n';
  }
  return out.str();
}

double fubini_asymptotic_rel_err(int n) {
  if (n < 0) throw std::invalid_argument("fubini_asymptotic_rel_err: n < 0");
  const BigRat q(ordered_bell(n), factorial(n));
  const double val = q.convert_to<double>() * 2.0 * std::pow(kLn2, n + 1);
  return std::fabs(val - 1.0);
}

}  // namespace biis
