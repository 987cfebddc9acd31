#include "cid/multiplier.hpp"

#include <algorithm>
#include <stdexcept>

namespace cid {

namespace {

CompleteIdeal multiplier_from(const Divisor& scaled) {
  Divisor k = canonical_divisor(scaled.cluster);
  Vec d(scaled.coeff.size());
  for (size_t i = 0; i < d.size(); ++i) d[i] = scaled.coeff[i] - k.coeff[i];
  return ideal_from_divisor({scaled.cluster, std::move(d)});
}

}  // namespace

CompleteIdeal multiplier_ideal(const CompleteIdeal& ideal, const Rat& c) {
  return multiplier_from(floor_scale(ideal.divisor, c));
}

CompleteIdeal multiplier_ideal_left(const CompleteIdeal& ideal, const Rat& c) {
  return multiplier_from(strict_floor_scale(ideal.divisor, c));
}

std::vector<Rat> jumping_numbers(const CompleteIdeal& ideal, const Rat& max) {
  if (ideal.is_unit())
    throw std::invalid_argument("jumping_numbers: unit ideal has no jumps");
  const Vec& g = ideal.divisor.coeff;
  Vec k = canonical_divisor(ideal.divisor.cluster).coeff;

  std::vector<Rat> candidates;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] <= 0) continue;
    for (long long s = 1;; ++s) {
      Rat c(k[i] + s, g[i]);
      if (c > max) break;
      if (c > Rat(0)) candidates.push_back(c);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<Rat> jumps;
  for (const Rat& c : candidates) {
    CompleteIdeal at = multiplier_ideal(ideal, c);
    CompleteIdeal left = multiplier_ideal_left(ideal, c);
    if (!(at == left)) jumps.push_back(c);
  }
  return jumps;
}

bool resolution_independent(const CompleteIdeal& ideal, const Rat& c,
                            const Cluster& extension) {
  if (!is_prefix(ideal.divisor.cluster, extension))
    throw std::invalid_argument("resolution_independent: not an extension");
  CompleteIdeal on_original = multiplier_ideal(ideal, c);
  CompleteIdeal on_extension = multiplier_ideal(pullback_to(ideal, extension), c);
  return pullback_to(on_original, extension) == on_extension;
}

}  // namespace cid
