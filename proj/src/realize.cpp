#include "cid/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace cid {

Rat epsilon_bound(const CompleteIdeal& ideal) {
  if (ideal.is_unit())
    throw std::invalid_argument("epsilon_bound: unit ideal");
  const Vec& a = ideal.divisor.coeff;
  Vec b = canonical_divisor(ideal.divisor.cluster).coeff;
  bool found = false;
  Rat best;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) continue;
    Rat r(1 + b[i], a[i]);
    if (!found || r < best) {
      best = r;
      found = true;
    }
  }
  return best;
}

std::pair<ChainPlan, RealizationParameters> plan_chains(
    const CompleteIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("plan_chains: unit ideal");
  const Vec& a = ideal.divisor.coeff;
  Vec b = canonical_divisor(ideal.divisor.cluster).coeff;

  Rat eps_max = epsilon_bound(ideal);
  if (Rat(1) < eps_max) eps_max = Rat(1);

  ChainPlan plan;
  for (const SimpleFactor& f : factor_simple(ideal)) {
    long long al = a[f.point - 1], bl = b[f.point - 1];
    long long n = (Rat(bl) / eps_max - Rat(al)).floor() + 1;
    plan.push_back({f.point, f.exponent, std::max(0LL, n)});
  }

  // Retry loop over the strict constraints; each retry lengthens a chain and
  // so strictly lowers the next epsilon.
  for (;;) {
    Rat eps(0);
    size_t argmax = 0;
    for (size_t k = 0; k < plan.size(); ++k) {
      Rat r(b[plan[k].point - 1], a[plan[k].point - 1] + plan[k].length);
      if (r > eps) {
        eps = r;
        argmax = k;
      }
    }
    if (!(eps < eps_max)) {
      plan[argmax].length += 1;
      continue;
    }
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i)
      if (!(Rat(a[i]) * eps - Rat(b[i]) < Rat(1))) ok = false;
    if (!ok) {
      // Cannot happen while eps < eps_max; kept as a safety net.
      plan[argmax].length += 1;
      continue;
    }
    size_t bad = plan.size();
    for (size_t k = 0; k < plan.size(); ++k) {
      Rat end = eps * Rat(a[plan[k].point - 1] + plan[k].length) -
                Rat(b[plan[k].point - 1]);
      if (!(end < Rat(1))) {
        bad = k;
        break;
      }
    }
    if (bad != plan.size()) {
      plan[bad].length += 1;
      continue;
    }
    return {plan, {eps, Rat(1) + eps}};
  }
}

std::pair<Cluster, CompleteIdeal> build_companion(const CompleteIdeal& ideal,
                                                  const ChainPlan& plan) {
  auto factors = factor_simple(ideal);
  if (plan.size() != factors.size())
    throw std::invalid_argument("build_companion: plan does not match excesses");
  for (size_t k = 0; k < plan.size(); ++k)
    if (plan[k].point != factors[k].point ||
        plan[k].excess != factors[k].exponent || plan[k].length < 0)
      throw std::invalid_argument("build_companion: plan does not match excesses");

  Cluster base = ideal.divisor.cluster;
  Cluster y = base;
  for (const ChainPlanEntry& e : plan)
    for (long long j = 0; j < e.excess; ++j)
      y = extend_with_chain(y, e.point, (int)e.length).first;

  Vec f = pullback_coeff(base, ideal.divisor.coeff, y);
  Vec ky = canonical_divisor(y).coeff;
  Vec kx = pullback_coeff(base, canonical_divisor(base).coeff, y);
  Vec g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[i] = f[i] + ky[i] - kx[i];

  Divisor gd = make_divisor(y, std::move(g));
  if (!is_antinef(gd))
    throw std::logic_error("build_companion: companion divisor not antinef");
  return {y, CompleteIdeal{std::move(gd)}};
}

RealizationCertificate realize(const CompleteIdeal& ideal,
                               std::optional<Rat> c_override,
                               std::optional<std::vector<long long>> chain_override) {
  RealizationCertificate cert;
  cert.original = ideal;

  if (ideal.is_unit()) {
    cert.extended = ideal.divisor.cluster;
    cert.companion = ideal;
    cert.params = {Rat(0), Rat(1)};
    cert.expected = ideal.divisor;
    cert.recomputed = ideal.divisor;
    cert.verified = true;
    cert.trivial = true;
    return cert;
  }

  auto [plan, params] = plan_chains(ideal);
  if (chain_override) {
    if (chain_override->size() != plan.size())
      throw std::invalid_argument(
          "realize: chain override length does not match Rees components");
    for (size_t k = 0; k < plan.size(); ++k) {
      if ((*chain_override)[k] < 0)
        throw std::invalid_argument("realize: negative chain length");
      plan[k].length = (*chain_override)[k];
    }
  }
  if (c_override) {
    if (!(*c_override > Rat(1)))
      throw std::invalid_argument("realize: c override must exceed 1");
    params.c = *c_override;
    params.epsilon = *c_override - Rat(1);
  }

  auto [y, companion] = build_companion(ideal, plan);
  cert.extended = y;
  cert.companion = companion;
  cert.params = params;
  cert.plan = plan;
  cert.expected = pullback_extend(ideal.divisor, y);
  cert.recomputed = multiplier_ideal(companion, params.c).divisor;
  cert.verified = cert.expected.coeff == cert.recomputed.coeff;
  return cert;
}

ResidualReport verify_residual(const RealizationCertificate& cert) {
  ResidualReport rep;
  if (cert.trivial) return rep;

  const Cluster& y = cert.extended;
  const Vec& g = cert.companion.divisor.coeff;
  const Vec& f = cert.expected.coeff;
  Vec k = canonical_divisor(y).coeff;
  Rat one_plus_eps = cert.params.c;

  rep.residual.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    rep.residual[i] = one_plus_eps * Rat(g[i]) - Rat(k[i]) - Rat(f[i]);

  // Chain ends, replayed in build order.
  PointId next = cert.original.divisor.cluster.size() + 1;
  for (const ChainPlanEntry& e : cert.plan)
    for (long long j = 0; j < e.excess; ++j) {
      next += (PointId)e.length;
      if (e.length > 0) rep.chain_ends.push_back(next - 1);
    }

  for (size_t i = 0; i < rep.residual.size(); ++i)
    if (rep.residual[i].floor() > 0) {
      rep.ok = false;
      rep.violations.push_back("floor(A) > 0 at point " + std::to_string(i + 1));
    }
  for (PointId end : rep.chain_ends)
    if (rep.residual[end - 1].floor() != 0) {
      rep.ok = false;
      rep.violations.push_back("floor(A) != 0 at chain end " + std::to_string(end));
    }
  return rep;
}

AdjointResult classify_adjoint(const CompleteIdeal& ideal) {
  if (ideal.is_unit() || !is_simple(ideal))
    throw std::invalid_argument("classify_adjoint: input must be simple");
  AdjointResult res;
  res.adjoint = order_of(ideal) == 1;
  if (res.adjoint) {
    CompleteIdeal square = product(ideal, ideal);
    res.witness_ok = multiplier_ideal(square, Rat(1)) == ideal;
  }
  return res;
}

}  // namespace cid
