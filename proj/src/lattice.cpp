#include "cid/lattice.hpp"

#include <set>
#include <stdexcept>

namespace cid {

Divisor make_divisor(const Cluster& c, Vec coeff) {
  ensure_valid(c);
  if ((int)coeff.size() != c.size())
    throw std::invalid_argument("divisor length does not match cluster size");
  return {c, std::move(coeff)};
}

Divisor zero_divisor(const Cluster& c) {
  return make_divisor(c, Vec(c.size(), 0));
}

Mat proximity_matrix(const Cluster& c) {
  ensure_valid(c);
  int n = c.size();
  Mat p(n, Vec(n, 0));
  for (PointId i = 1; i <= n; ++i) {
    p[i - 1][i - 1] = 1;
    for (PointId t : c.targets(i)) p[i - 1][t - 1] = -1;
  }
  return p;
}

Mat intersection_matrix(const Cluster& c) {
  Mat p = proximity_matrix(c);
  int n = c.size();
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += p[k][i] * p[k][j];
      m[i][j] = -s;
    }
  return m;
}

Vec solve_proximity(const Cluster& c, const Vec& rhs) {
  int n = c.size();
  Vec x(n);
  for (PointId i = 1; i <= n; ++i) {
    long long v = rhs[i - 1];
    for (PointId t : c.targets(i)) v += x[t - 1];
    x[i - 1] = v;
  }
  return x;
}

Vec apply_proximity(const Cluster& c, const Vec& v) {
  int n = c.size();
  Vec m(n);
  for (PointId i = 1; i <= n; ++i) {
    long long s = v[i - 1];
    for (PointId t : c.targets(i)) s -= v[t - 1];
    m[i - 1] = s;
  }
  return m;
}

Vec pairings(const Cluster& c, const Vec& d) {
  int n = c.size();
  // w = P d, then N d = -P^t w.
  Vec w = apply_proximity(c, d);
  Vec t(n);
  for (int j = 0; j < n; ++j) t[j] = -w[j];
  for (PointId i = 1; i <= n; ++i)
    for (PointId tg : c.targets(i)) t[tg - 1] += w[i - 1];
  return t;
}

long long pair_with(const Divisor& d, PointId i) {
  if (i < 1 || i > d.cluster.size())
    throw std::invalid_argument("pair_with: point not in cluster");
  return pairings(d.cluster, d.coeff)[i - 1];
}

Divisor canonical_divisor(const Cluster& c) {
  ensure_valid(c);
  return {c, solve_proximity(c, Vec(c.size(), 1))};
}

Vec pullback_coeff(const Cluster& from, const Vec& coeff,
                   const Cluster& extended) {
  if (!is_prefix(from, extended))
    throw std::invalid_argument("pullback: not a prefix extension");
  Vec out = coeff;
  out.resize(extended.size());
  for (PointId i = from.size() + 1; i <= extended.size(); ++i) {
    long long s = 0;
    for (PointId t : extended.targets(i)) s += out[t - 1];
    out[i - 1] = s;
  }
  return out;
}

Divisor pullback_extend(const Divisor& d, const Cluster& extended) {
  ensure_valid(extended);
  return {extended, pullback_coeff(d.cluster, d.coeff, extended)};
}

bool is_antinef(const Divisor& d) {
  for (long long t : pairings(d.cluster, d.coeff))
    if (t > 0) return false;
  return true;
}

namespace {

// Sparse column i of N = -P^t P, as (row, value) pairs.
std::vector<std::vector<std::pair<int, long long>>> intersection_columns(
    const Cluster& c) {
  int n = c.size();
  std::vector<std::vector<long long>> dense_cols;  // only touched rows
  std::vector<std::vector<std::pair<int, long long>>> cols(n);
  for (PointId i = 1; i <= n; ++i) {
    // P e_i: +1 at i, -1 at each k proximate to i.
    std::vector<std::pair<int, long long>> w{{i - 1, 1}};
    for (PointId k = i + 1; k <= n; ++k)
      if (c.is_proximate(k, i)) w.push_back({k - 1, -1});
    // -P^t w accumulated sparsely.
    std::vector<long long> acc(n, 0);
    for (auto [row, val] : w) {
      acc[row] -= val;
      for (PointId tg : c.targets(row + 1)) acc[tg - 1] += val;
    }
    for (int j = 0; j < n; ++j)
      if (acc[j] != 0) cols[i - 1].push_back({j, acc[j]});
  }
  return cols;
}

}  // namespace

Divisor unload(Divisor d) {
  const Cluster& c = d.cluster;
  ensure_valid(c);
  int n = c.size();
  auto cols = intersection_columns(c);
  Vec t = pairings(c, d.coeff);
  std::set<int> violating;
  for (int i = 0; i < n; ++i)
    if (t[i] > 0) violating.insert(i);
  while (!violating.empty()) {
    int i = *violating.begin();
    d.coeff[i] += 1;
    for (auto [j, val] : cols[i]) {
      t[j] += val;
      if (t[j] > 0)
        violating.insert(j);
      else
        violating.erase(j);
    }
  }
  return d;
}

Divisor simple_generator(const Cluster& c, PointId i) {
  ensure_valid(c);
  int n = c.size();
  if (i < 1 || i > n)
    throw std::invalid_argument("simple_generator: point not in cluster");
  // Solve P^t w = e_i by back substitution, then P g = w.
  Vec w(n, 0);
  for (PointId j = n; j >= 1; --j) {
    long long v = (j == i) ? 1 : 0;
    for (PointId k = j + 1; k <= n; ++k)
      if (c.is_proximate(k, j)) v += w[k - 1];
    w[j - 1] = v;
  }
  return {c, solve_proximity(c, w)};
}

Divisor floor_scale(const Divisor& d, const Rat& c) {
  if (!(c > Rat(0))) throw std::invalid_argument("floor_scale: c must be positive");
  Vec out(d.coeff.size());
  for (size_t i = 0; i < d.coeff.size(); ++i)
    out[i] = (c * Rat(d.coeff[i])).floor();
  return {d.cluster, std::move(out)};
}

Divisor strict_floor_scale(const Divisor& d, const Rat& c) {
  if (!(c > Rat(0)))
    throw std::invalid_argument("strict_floor_scale: c must be positive");
  Vec out(d.coeff.size());
  for (size_t i = 0; i < d.coeff.size(); ++i)
    out[i] = (c * Rat(d.coeff[i])).strict_floor();
  return {d.cluster, std::move(out)};
}

long long determinant(Mat m) {
  int n = (int)m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  // Bareiss fraction-free elimination.
  __int128 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return (long long)(sign * a[n - 1][n - 1]);
}

}  // namespace cid
