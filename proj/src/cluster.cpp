#include "cid/cluster.hpp"

#include <set>
#include <stdexcept>

namespace cid {

ValidationReport validate(const Cluster& c) {
  ValidationReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };

  int n = c.size();
  if (n == 0) {
    fail("cluster is empty");
    return rep;
  }
  if (c.point(1).parent != 0 || c.point(1).satellite != 0)
    fail("point 1 must be the root (no parent, no satellite target)");

  std::set<std::pair<PointId, PointId>> seen_pairs;
  for (PointId id = 2; id <= n; ++id) {
    const ClusterPoint& p = c.point(id);
    std::string tag = "point " + std::to_string(id);
    if (p.parent == 0) {
      fail(tag + ": second root (missing parent)");
      continue;
    }
    if (p.parent < 1 || p.parent >= id) {
      fail(tag + ": parent must precede the point");
      continue;
    }
    if (p.satellite != 0) {
      if (p.satellite < 1 || p.satellite >= id) {
        fail(tag + ": satellite target must precede the point");
        continue;
      }
      if (p.satellite == p.parent) {
        fail(tag + ": satellite target equals parent");
        continue;
      }
      if (!c.is_proximate(p.parent, p.satellite)) {
        fail(tag + ": satellite target not proximate-compatible");
        continue;
      }
      auto pair = std::minmax(p.parent, p.satellite);
      if (!seen_pairs.insert({pair.first, pair.second}).second)
        fail(tag + ": duplicate satellite point for target pair {" +
             std::to_string(pair.first) + "," + std::to_string(pair.second) +
             "}");
    }
  }
  return rep;
}

void ensure_valid(const Cluster& c) {
  ValidationReport rep = validate(c);
  if (!rep.ok) throw std::invalid_argument("invalid cluster: " + rep.violations.front());
}

Cluster from_multiplicity_sequence(const std::vector<long long>& mults) {
  int n = (int)mults.size();
  if (n == 0) throw std::invalid_argument("empty multiplicity sequence");
  for (long long m : mults)
    if (m <= 0) throw std::invalid_argument("multiplicities must be positive");

  // prox[i] collects the j < i the construction makes point i proximate to.
  std::vector<std::vector<PointId>> prox(n + 1);
  for (PointId j = 1; j <= n; ++j) {
    long long budget = mults[j - 1];
    for (PointId i = j + 1; i <= n && budget > 0; ++i) {
      long long mi = mults[i - 1];
      if (mi > budget)
        throw std::invalid_argument(
            "sequence admits no proximity structure (overflow at point " +
            std::to_string(i) + ")");
      prox[i].push_back(j);
      budget -= mi;
    }
  }

  // Point basis of a simple ideal: proximity equality at every non-terminal
  // point, and the terminal multiplicity is 1 (P^t m = e_n).
  if (mults[n - 1] != 1)
    throw std::invalid_argument("sequence admits no proximity structure "
                                "(terminal multiplicity must be 1)");
  for (PointId j = 1; j < n; ++j) {
    long long sum = 0;
    for (PointId i = j + 1; i <= n; ++i)
      for (PointId t : prox[i])
        if (t == j) sum += mults[i - 1];
    if (sum != mults[j - 1])
      throw std::invalid_argument(
          "sequence admits no proximity structure (equality fails at point " +
          std::to_string(j) + ")");
  }

  Cluster c = Cluster::single_point();
  for (PointId i = 2; i <= n; ++i) {
    const auto& t = prox[i];
    bool has_parent = false;
    for (PointId j : t) has_parent |= (j == i - 1);
    if (!has_parent || t.size() > 2)
      throw std::invalid_argument(
          "sequence admits no proximity structure at point " +
          std::to_string(i));
    if (t.size() == 1) {
      c.add_free(i - 1);
    } else {
      PointId sat = t[0] == i - 1 ? t[1] : t[0];
      c.add_satellite(i - 1, sat);
    }
  }
  ensure_valid(c);
  return c;
}

std::pair<Cluster, std::vector<PointId>> extend_with_chain(const Cluster& c,
                                                           PointId attach_at,
                                                           int length) {
  ensure_valid(c);
  if (attach_at < 1 || attach_at > c.size())
    throw std::invalid_argument("extend_with_chain: attach point not in cluster");
  if (length < 0) throw std::invalid_argument("extend_with_chain: negative length");
  Cluster out = c;
  std::vector<PointId> added;
  PointId at = attach_at;
  for (int i = 0; i < length; ++i) {
    at = out.add_free(at);
    added.push_back(at);
  }
  return {out, added};
}

bool is_prefix(const Cluster& small, const Cluster& big) {
  if (small.size() > big.size()) return false;
  for (int i = 0; i < small.size(); ++i)
    if (!(small.points()[i] == big.points()[i])) return false;
  return true;
}

}  // namespace cid
