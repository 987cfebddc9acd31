#pragma once

#include <vector>

#include "cid/lattice.hpp"

namespace cid {

// Complete m-primary ideal in canonical form: an antinef divisor equal to
// its own unload. The zero divisor is the unit ideal.
struct CompleteIdeal {
  Divisor divisor;

  bool is_unit() const {
    for (long long v : divisor.coeff)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const CompleteIdeal&, const CompleteIdeal&) = default;
};

struct SimpleFactor {
  PointId point;
  long long exponent;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

// Canonical ideal of the antinef closure of D.
CompleteIdeal ideal_from_divisor(Divisor d);

CompleteIdeal unit_ideal(const Cluster& c);

// Simple ideal of the i-th point.
CompleteIdeal simple_ideal(const Cluster& c, PointId i);

// Multiplicity vector m = P v.
Vec point_basis(const CompleteIdeal& ideal);

// Multiplicity at the root point.
long long order_of(const CompleteIdeal& ideal);

// Hoskin-Deligne colength: sum of m_i(m_i+1)/2 over the point basis.
long long colength(const CompleteIdeal& ideal);

// Divisor sum after pullback to a common prefix extension.
CompleteIdeal product(const CompleteIdeal& a, const CompleteIdeal& b);

CompleteIdeal pullback_to(const CompleteIdeal& ideal, const Cluster& extended);

// Zariski factorization: exponents e_i = -D.E^i at the Rees components.
std::vector<SimpleFactor> factor_simple(const CompleteIdeal& ideal);

bool is_simple(const CompleteIdeal& ideal);

// Points with nonzero excess.
std::vector<PointId> rees_components(const CompleteIdeal& ideal);

// I contains J, decided by divisor(J) >= divisor(I) after pullback to a
// common prefix extension.
bool contains(const CompleteIdeal& outer, const CompleteIdeal& inner);

// Equality as ideals across prefix-related clusters.
bool same_ideal(const CompleteIdeal& a, const CompleteIdeal& b);

}  // namespace cid
