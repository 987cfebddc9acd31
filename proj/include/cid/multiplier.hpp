#pragma once

#include <vector>

#include "cid/dictionary.hpp"

namespace cid {

// J(I^c): canonical ideal of the antinef closure of floor(c*G) - K on I's
// cluster, G the divisor of I and K the canonical divisor.
CompleteIdeal multiplier_ideal(const CompleteIdeal& ideal, const Rat& c);

// Same with the strict-floor rule; the left limit used for jump detection.
CompleteIdeal multiplier_ideal_left(const CompleteIdeal& ideal, const Rat& c);

// All c in (0, max] where J(I^c) strictly shrinks, ascending.
std::vector<Rat> jumping_numbers(const CompleteIdeal& ideal, const Rat& max);

// J(I^c) computed on `extension` with pulled-back data equals the pullback
// of J(I^c) computed on the original cluster.
bool resolution_independent(const CompleteIdeal& ideal, const Rat& c,
                            const Cluster& extension);

}  // namespace cid
