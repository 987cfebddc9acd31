#pragma once

#include <vector>

#include "cid/cluster.hpp"
#include "cid/rational.hpp"

namespace cid {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;
using RatVec = std::vector<Rat>;

// Exceptional divisor in the prime-component basis: coefficient i is the
// value of the i-th divisorial valuation.
struct Divisor {
  Cluster cluster;
  Vec coeff;

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

Divisor make_divisor(const Cluster& c, Vec coeff);
Divisor zero_divisor(const Cluster& c);

// Lower unitriangular matrix with row i carrying -1 at i's proximity targets.
Mat proximity_matrix(const Cluster& c);

// Intersection form N = -(P^t P); symmetric, negative definite, det +/-1.
Mat intersection_matrix(const Cluster& c);

// Solves P x = rhs (forward substitution over the proximity recursion).
Vec solve_proximity(const Cluster& c, const Vec& rhs);
// m = P v.
Vec apply_proximity(const Cluster& c, const Vec& v);

// All pairings D.E^i at once, computed sparsely as -P^t(P d).
Vec pairings(const Cluster& c, const Vec& d);

// D.E^i.
long long pair_with(const Divisor& d, PointId i);

// The unique K with K.E^i = -E^i.E^i - 2; coefficients satisfy
// k_i = 1 + sum of k over i's proximity targets.
Divisor canonical_divisor(const Cluster& c);

// Total transform of D on a prefix extension: old coefficients kept, each
// new point gets the sum of its proximity targets' coefficients.
Divisor pullback_extend(const Divisor& d, const Cluster& extended);
Vec pullback_coeff(const Cluster& from, const Vec& coeff, const Cluster& extended);

bool is_antinef(const Divisor& d);

// Least antinef divisor >= d (discharge loop, lowest violating index first).
Divisor unload(Divisor d);

// The divisor G_i with G_i.E^j = -delta_ij; antinef and integral.
Divisor simple_generator(const Cluster& c, PointId i);

// Componentwise floor of c*D.
Divisor floor_scale(const Divisor& d, const Rat& c);
// Same with the strict-floor (left limit) rule on exact integers.
Divisor strict_floor_scale(const Divisor& d, const Rat& c);

// Fraction-free determinant; used by invariant checks.
long long determinant(Mat m);

}  // namespace cid
