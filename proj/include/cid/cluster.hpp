#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cid {

// 1-based creation-order index of an infinitely near point.
using PointId = int;

// One point of a constellation. The root has parent 0. A free point is
// proximate to its parent only; a satellite is additionally proximate to
// `satellite`, which must itself be a proximity target of the parent.
struct ClusterPoint {
  PointId parent = 0;
  PointId satellite = 0;

  friend bool operator==(const ClusterPoint&, const ClusterPoint&) = default;
};

// An ordered constellation of infinitely near points (Enriques diagram),
// the combinatorial model of a composition of point blowups.
class Cluster {
public:
  Cluster() = default;
  explicit Cluster(std::vector<ClusterPoint> points)
      : points_(std::move(points)) {}

  static Cluster single_point() { return Cluster({ClusterPoint{}}); }

  int size() const { return (int)points_.size(); }
  const ClusterPoint& point(PointId id) const { return points_[id - 1]; }
  const std::vector<ClusterPoint>& points() const { return points_; }

  // Proximity targets of `id`: {parent} or {parent, satellite}.
  std::vector<PointId> targets(PointId id) const {
    const ClusterPoint& p = point(id);
    std::vector<PointId> t;
    if (p.parent != 0) t.push_back(p.parent);
    if (p.satellite != 0) t.push_back(p.satellite);
    return t;
  }

  bool is_proximate(PointId q, PointId to) const {
    const ClusterPoint& p = point(q);
    return p.parent == to || p.satellite == to;
  }

  // Appends a free point with the given parent, returns its id.
  PointId add_free(PointId parent) {
    points_.push_back({parent, 0});
    return size();
  }

  // Appends a satellite point proximate to parent and sat.
  PointId add_satellite(PointId parent, PointId sat) {
    points_.push_back({parent, sat});
    return size();
  }

  friend bool operator==(const Cluster&, const Cluster&) = default;

private:
  std::vector<ClusterPoint> points_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks the admissibility rules: exactly one root (index 1), parents
// precede their children, satellite targets are proximity targets of the
// parent, and no two points share the same unordered target pair.
ValidationReport validate(const Cluster& c);

// Throws std::invalid_argument when validate() reports violations.
void ensure_valid(const Cluster& c);

// Unique unibranch cluster whose simple ideal has the given multiplicity
// sequence; proximities are forced by the equalities m_j = sum of the m_i of
// points proximate to j (possibly truncated at the end of the sequence).
Cluster from_multiplicity_sequence(const std::vector<long long>& mults);

// Appends a chain of `length` free points rooted at attach_at; the first new
// point is free on attach_at, each next one free on its predecessor.
std::pair<Cluster, std::vector<PointId>> extend_with_chain(const Cluster& c,
                                                           PointId attach_at,
                                                           int length);

// True when `small` is the initial segment of `big`.
bool is_prefix(const Cluster& small, const Cluster& big);

}  // namespace cid
