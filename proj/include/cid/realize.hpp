#pragma once

#include <optional>
#include <vector>

#include "cid/multiplier.hpp"

namespace cid {

// Per Rees component: excess (number of chains) and chain length.
struct ChainPlanEntry {
  PointId point;
  long long excess;
  long long length;

  friend bool operator==(const ChainPlanEntry&, const ChainPlanEntry&) = default;
};

using ChainPlan = std::vector<ChainPlanEntry>;

struct RealizationParameters {
  Rat epsilon;
  Rat c;  // 1 + epsilon
};

struct RealizationCertificate {
  CompleteIdeal original;
  Cluster extended;
  CompleteIdeal companion;
  RealizationParameters params;
  ChainPlan plan;
  Divisor expected;    // pullback of the original divisor
  Divisor recomputed;  // divisor of J(I^c) on the extended cluster
  bool verified = false;
  bool trivial = false;  // unit-ideal input
};

struct ResidualReport {
  bool ok = true;
  RatVec residual;              // (1+eps)G - K - F, exact
  std::vector<PointId> chain_ends;
  std::vector<std::string> violations;
};

struct AdjointResult {
  bool adjoint = false;
  bool witness_ok = false;
};

// Largest admissibility bound: min over points with a_i > 0 of (1+b_i)/a_i.
Rat epsilon_bound(const CompleteIdeal& ideal);

// Deterministic (plan, epsilon) selection: minimal total chain length, then
// minimal epsilon attaining it, with a retry loop for the strict constraints.
std::pair<ChainPlan, RealizationParameters> plan_chains(const CompleteIdeal& ideal);

// Extends the cluster by excess-many disjoint free chains per Rees component
// and forms the companion ideal of G = pullback(F) + K_g.
std::pair<Cluster, CompleteIdeal> build_companion(const CompleteIdeal& ideal,
                                                  const ChainPlan& plan);

// Full construction: (I, c) with J(I^c) equal to the pullback of the input.
// Optional overrides: c (epsilon = c - 1) and per-Rees chain lengths.
RealizationCertificate realize(
    const CompleteIdeal& ideal,
    std::optional<Rat> c_override = std::nullopt,
    std::optional<std::vector<long long>> chain_override = std::nullopt);

// Exact check of the floor inequalities behind the construction: residual
// A = (1+eps)G - K - F has floor(A) <= 0, with 0 at every chain end.
ResidualReport verify_residual(const RealizationCertificate& cert);

// A simple m-primary ideal is an integer-exponent multiplier ideal iff its
// order is 1; when true the witness J(J^2) = J is verified.
AdjointResult classify_adjoint(const CompleteIdeal& ideal);

}  // namespace cid
