#pragma once

#include <utility>
#include <vector>

#include "cid/dictionary.hpp"

namespace cid {

using LatticePoint = std::pair<long long, long long>;

// Newton region of a monomial ideal: conv(exponents) + first quadrant,
// stored as its strictly convex vertex list, a ascending / b descending.
struct NewtonPolygon {
  std::vector<LatticePoint> vertices;

  bool is_unit() const {
    return vertices.size() == 1 && vertices[0] == LatticePoint{0, 0};
  }

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

// Toric cluster extracted from a monomial ideal, with Stern-Brocot weight
// pairs and extraction multiplicities.
struct ToricCluster {
  Cluster cluster;
  std::vector<LatticePoint> weights;  // (alpha, beta) per point
  Vec mults;                          // base-point multiplicities
  CompleteIdeal ideal;                // divisor from weight evaluation
};

// Vertex list of the Newton region. Rejects non-m-primary input (no pure-x
// or pure-y monomial in the closure).
NewtonPolygon newton_from_monomials(const std::vector<LatticePoint>& exponents);

// Monomial multiplier ideal: {(p,q) : (p+1,q+1) interior to c*P}.
NewtonPolygon howald_multiplier(const NewtonPolygon& p, const Rat& c);

// Recursive base-point extraction through the two torus-fixed charts.
ToricCluster monomial_to_cluster(const NewtonPolygon& p);

// Least antinef majorant by bounded enumeration; refuses clusters > 6 points
// or coefficients outside [-4, 4].
Divisor exhaustive_antinef_closure(const Divisor& d);

// The Howald pipeline and the divisorial pipeline agree on J(P^c), and the
// weight-consistency contract holds for every produced point.
bool cross_check(const NewtonPolygon& p, const Rat& c);

}  // namespace cid
