#include "cid/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cid/multiplier.hpp"

namespace cid {

NewtonPolygon newton_from_monomials(const std::vector<LatticePoint>& exponents) {
  if (exponents.empty())
    throw std::invalid_argument("newton_from_monomials: no exponents");
  for (auto [a, b] : exponents)
    if (a < 0 || b < 0)
      throw std::invalid_argument("newton_from_monomials: negative exponent");

  // Drop dominated points (the region is closed under adding (1,0)/(0,1)).
  std::vector<LatticePoint> pts = exponents;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<LatticePoint> frontier;
  for (const LatticePoint& p : pts) {
    bool dominated = false;
    for (const LatticePoint& q : pts)
      if (q != p && q.first <= p.first && q.second <= p.second) {
        dominated = true;
        break;
      }
    if (!dominated) frontier.push_back(p);
  }
  // frontier is sorted a ascending, b strictly descending.

  // Strictly convex lower-left chain.
  std::vector<LatticePoint> hull;
  auto cross = [](const LatticePoint& o, const LatticePoint& a,
                  const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  for (const LatticePoint& p : frontier) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }

  if (hull.front().first != 0 || hull.back().second != 0)
    throw std::invalid_argument(
        "newton_from_monomials: not m-primary (region misses an axis)");
  return {hull};
}

NewtonPolygon howald_multiplier(const NewtonPolygon& p, const Rat& c) {
  if (!(c > Rat(0)))
    throw std::invalid_argument("howald_multiplier: c must be positive");
  if (p.is_unit()) return p;

  // Edge data of the region: inward normal (alpha, beta) and threshold
  // gamma = alpha*a + beta*b along the edge.
  struct Edge {
    long long alpha, beta, gamma;
  };
  std::vector<Edge> edges;
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    auto [a0, b0] = p.vertices[i];
    auto [a1, b1] = p.vertices[i + 1];
    edges.push_back({b0 - b1, a1 - a0, (b0 - b1) * a0 + (a1 - a0) * b0});
  }

  // (u,v) interior to c*region iff alpha*u + beta*v > c*gamma for all edges.
  auto min_p_for = [&](long long q) {
    long long best = 0;
    for (const Edge& e : edges) {
      // alpha*(p+1) > c*gamma - beta*(q+1)
      Rat rhs = c * Rat(e.gamma) - Rat(e.beta * (q + 1));
      long long p1 = (rhs / Rat(e.alpha)).floor() + 1;  // least valid p+1
      best = std::max(best, p1 - 1);
    }
    return best;
  };

  std::vector<LatticePoint> gens;
  for (long long q = 0;; ++q) {
    long long pm = min_p_for(q);
    gens.push_back({pm, q});
    if (pm == 0) break;
  }
  return newton_from_monomials(gens);
}

namespace {

struct Chart {
  std::vector<LatticePoint> gens;
  LatticePoint w_s, w_t;      // coordinate weight vectors, original coords
  PointId owner_s, owner_t;   // 0 for a coordinate axis
};

void extract_points(const Chart& chart, Cluster* cluster,
                    std::vector<LatticePoint>* weights, Vec* mults) {
  long long d = -1;
  for (auto [a, b] : chart.gens)
    d = d < 0 ? a + b : std::min(d, a + b);
  if (d <= 0) return;  // chart origin is not a base point

  if (cluster->size() > 4096)
    throw std::logic_error("monomial_to_cluster: runaway recursion");

  PointId parent = std::max(chart.owner_s, chart.owner_t);
  PointId sat = std::min(chart.owner_s, chart.owner_t);
  PointId q;
  if (parent == 0) {
    *cluster = Cluster::single_point();
    q = 1;
  } else if (sat == 0) {
    q = cluster->add_free(parent);
  } else {
    q = cluster->add_satellite(parent, sat);
  }
  LatticePoint wq{chart.w_s.first + chart.w_t.first,
                  chart.w_s.second + chart.w_t.second};
  weights->push_back(wq);
  mults->push_back(d);

  Chart c1, c2;
  for (auto [a, b] : chart.gens) {
    c1.gens.push_back({a + b - d, b});
    c2.gens.push_back({a, a + b - d});
  }
  c1.w_s = wq;
  c1.w_t = chart.w_t;
  c1.owner_s = q;
  c1.owner_t = chart.owner_t;
  c2.w_s = chart.w_s;
  c2.w_t = wq;
  c2.owner_s = chart.owner_s;
  c2.owner_t = q;
  extract_points(c1, cluster, weights, mults);
  extract_points(c2, cluster, weights, mults);
}

}  // namespace

ToricCluster monomial_to_cluster(const NewtonPolygon& p) {
  if (p.vertices.empty())
    throw std::invalid_argument("monomial_to_cluster: empty polygon");

  ToricCluster tc;
  Chart root{p.vertices, {1, 0}, {0, 1}, 0, 0};
  Cluster cluster;
  extract_points(root, &cluster, &tc.weights, &tc.mults);

  if (cluster.size() == 0) {  // unit ideal
    tc.cluster = Cluster::single_point();
    tc.weights = {{1, 1}};
    tc.mults = {0};
    tc.ideal = unit_ideal(tc.cluster);
    return tc;
  }

  tc.cluster = cluster;
  Vec v(cluster.size());
  for (int i = 0; i < cluster.size(); ++i) {
    long long best = -1;
    for (auto [a, b] : p.vertices) {
      long long val = tc.weights[i].first * a + tc.weights[i].second * b;
      best = best < 0 ? val : std::min(best, val);
    }
    v[i] = best;
  }
  Divisor d = make_divisor(tc.cluster, std::move(v));
  if (!is_antinef(d))
    throw std::logic_error("monomial_to_cluster: weight divisor not antinef");
  tc.ideal = CompleteIdeal{std::move(d)};
  return tc;
}

Divisor exhaustive_antinef_closure(const Divisor& d) {
  const Cluster& c = d.cluster;
  int n = c.size();
  if (n > 6) throw std::invalid_argument("oracle: cluster too large (> 6 points)");
  for (long long v : d.coeff)
    if (v < -4 || v > 4)
      throw std::invalid_argument("oracle: coefficient outside [-4, 4]");

  // Antinef upper bound: a power of the maximal ideal.
  Vec vm(n, 0);
  vm = solve_proximity(c, [&] {
    Vec e(n, 0);
    e[0] = 1;
    return e;
  }());
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    long long need = std::max(d.coeff[i], 0LL);
    s = std::max(s, (need + vm[i] - 1) / vm[i]);
  }

  Vec lower(n), upper(n);
  for (int i = 0; i < n; ++i) {
    lower[i] = std::max(d.coeff[i], 0LL);
    upper[i] = s * vm[i];
  }

  Mat nmat = intersection_matrix(c);
  Vec cur = lower;
  Vec t = pairings(c, cur);
  bool any = false;
  Vec meet(n, 0);

  // Odometer over the box with incremental pairing updates.
  for (;;) {
    bool antinef = true;
    for (int i = 0; i < n; ++i)
      if (t[i] > 0) {
        antinef = false;
        break;
      }
    if (antinef) {
      if (!any) {
        meet = cur;
        any = true;
      } else {
        for (int i = 0; i < n; ++i) meet[i] = std::min(meet[i], cur[i]);
      }
    }
    int pos = 0;
    while (pos < n && cur[pos] == upper[pos]) ++pos;
    if (pos == n) break;
    cur[pos] += 1;
    for (int j = 0; j < n; ++j) t[j] += nmat[j][pos];
    for (int k = 0; k < pos; ++k) {
      long long delta = lower[k] - cur[k];
      if (delta != 0) {
        cur[k] = lower[k];
        for (int j = 0; j < n; ++j) t[j] += delta * nmat[j][k];
      }
    }
  }

  if (!any)
    throw std::logic_error("oracle: no antinef divisor found in search box");
  Divisor result{c, meet};
  if (!is_antinef(result))
    throw std::logic_error(
        "oracle: antinef majorants have no unique minimal element");
  return result;
}

namespace {

std::vector<std::pair<LatticePoint, long long>> weighted_point_basis(
    const std::vector<LatticePoint>& weights, const Vec& mults) {
  std::vector<std::pair<LatticePoint, long long>> out;
  for (size_t i = 0; i < mults.size(); ++i)
    if (mults[i] > 0) out.push_back({weights[i], mults[i]});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool cross_check(const NewtonPolygon& p, const Rat& c) {
  ToricCluster tc = monomial_to_cluster(p);
  if (point_basis(tc.ideal) != tc.mults)
    throw std::logic_error("cross_check: weight-consistency contract violated");

  CompleteIdeal via_divisor = multiplier_ideal(tc.ideal, c);

  ToricCluster mc = monomial_to_cluster(howald_multiplier(p, c));
  if (point_basis(mc.ideal) != mc.mults)
    throw std::logic_error("cross_check: weight-consistency contract violated");

  // Complete ideals on torus-fixed clusters are equal iff their weighted
  // point bases coincide; weight pairs identify points across clusters.
  auto lhs = weighted_point_basis(mc.weights, mc.mults);
  auto rhs = weighted_point_basis(tc.weights, point_basis(via_divisor));
  return lhs == rhs;
}

}  // namespace cid
