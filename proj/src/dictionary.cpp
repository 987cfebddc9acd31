#include "cid/dictionary.hpp"

#include <algorithm>
#include <stdexcept>

namespace cid {

namespace {

// Pulls both ideals to the larger of two prefix-related clusters.
std::pair<Vec, Vec> on_common_cluster(const CompleteIdeal& a,
                                      const CompleteIdeal& b,
                                      Cluster* common) {
  if (is_prefix(a.divisor.cluster, b.divisor.cluster)) {
    *common = b.divisor.cluster;
    return {pullback_coeff(a.divisor.cluster, a.divisor.coeff, *common),
            b.divisor.coeff};
  }
  if (is_prefix(b.divisor.cluster, a.divisor.cluster)) {
    *common = a.divisor.cluster;
    return {a.divisor.coeff,
            pullback_coeff(b.divisor.cluster, b.divisor.coeff, *common)};
  }
  throw std::invalid_argument("ideals live on incompatible clusters");
}

}  // namespace

CompleteIdeal ideal_from_divisor(Divisor d) { return {unload(std::move(d))}; }

CompleteIdeal unit_ideal(const Cluster& c) { return {zero_divisor(c)}; }

CompleteIdeal simple_ideal(const Cluster& c, PointId i) {
  return {simple_generator(c, i)};
}

Vec point_basis(const CompleteIdeal& ideal) {
  return apply_proximity(ideal.divisor.cluster, ideal.divisor.coeff);
}

long long order_of(const CompleteIdeal& ideal) { return ideal.divisor.coeff[0]; }

long long colength(const CompleteIdeal& ideal) {
  long long s = 0;
  for (long long m : point_basis(ideal)) s += m * (m + 1) / 2;
  return s;
}

CompleteIdeal product(const CompleteIdeal& a, const CompleteIdeal& b) {
  Cluster common;
  auto [va, vb] = on_common_cluster(a, b, &common);
  Vec sum(va.size());
  for (size_t i = 0; i < va.size(); ++i) sum[i] = va[i] + vb[i];
  // Sum of antinef divisors is antinef; already canonical.
  return {make_divisor(common, std::move(sum))};
}

CompleteIdeal pullback_to(const CompleteIdeal& ideal, const Cluster& extended) {
  return {pullback_extend(ideal.divisor, extended)};
}

std::vector<SimpleFactor> factor_simple(const CompleteIdeal& ideal) {
  Vec t = pairings(ideal.divisor.cluster, ideal.divisor.coeff);
  std::vector<SimpleFactor> f;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) f.push_back({(PointId)(i + 1), -t[i]});
  return f;
}

bool is_simple(const CompleteIdeal& ideal) {
  auto f = factor_simple(ideal);
  return f.size() == 1 && f[0].exponent == 1;
}

std::vector<PointId> rees_components(const CompleteIdeal& ideal) {
  std::vector<PointId> out;
  for (const SimpleFactor& f : factor_simple(ideal)) out.push_back(f.point);
  return out;
}

bool contains(const CompleteIdeal& outer, const CompleteIdeal& inner) {
  Cluster common;
  auto [vo, vi] = on_common_cluster(outer, inner, &common);
  for (size_t k = 0; k < vo.size(); ++k)
    if (vi[k] < vo[k]) return false;
  return true;
}

bool same_ideal(const CompleteIdeal& a, const CompleteIdeal& b) {
  Cluster common;
  auto [va, vb] = on_common_cluster(a, b, &common);
  return va == vb;
}

}  // namespace cid
