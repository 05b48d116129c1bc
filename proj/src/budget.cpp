// Copyright 2026 The cnldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cnldp/budget.hpp"

#include <cmath>

#include "cnldp/errors.hpp"
#include "cnldp/mechanisms.hpp"

namespace cnldp {

namespace {

constexpr int kGridPoints = 256;
constexpr int kNewtonMaxIters = 20;
constexpr double kNewtonStep = 1e-5;
constexpr double kNewtonTol = 1e-8;

}  // namespace

double ss_loss(double d, double eps1, double eps2) {
  if (!(d >= 0.0)) throw ValidationError("degree must be non-negative");
  validate_epsilon(eps1);
  validate_epsilon(eps2);
  const double p = flip_probability(eps1);
  const double q = 1.0 - 2.0 * p;
  const double rr = p * (1.0 - p) * d / (q * q);
  const double lap = 2.0 * (1.0 - p) * (1.0 - p) / (q * q * eps2 * eps2);
  return rr + lap;
}

double ds_loss(double d_u, double d_w, double eps1, double eps2, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0, 1]");
  return alpha * alpha * ss_loss(d_u, eps1, eps2) +
         (1.0 - alpha) * (1.0 - alpha) * ss_loss(d_w, eps1, eps2);
}

double optimal_alpha(double var_u, double var_w) {
  if (!(var_u > 0.0) || !(var_w > 0.0) || !std::isfinite(var_u) || !std::isfinite(var_w)) {
    throw ValidationError("source variances must be positive and finite");
  }
  return var_w / (var_u + var_w);
}

double ds_loss_at_optimal_alpha(double d_u, double d_w, double eps1, double eps2) {
  const double a = ss_loss(d_u, eps1, eps2);
  const double b = ss_loss(d_w, eps1, eps2);
  return a * b / (a + b);
}

BudgetPlan optimize_plan(double d_u, double d_w, double eps, double eps0) {
  if (!(d_u >= 1.0) || !(d_w >= 1.0) || !std::isfinite(d_u) || !std::isfinite(d_w)) {
    throw ValidationError("calibrated degrees must be finite and at least 1");
  }
  validate_epsilon(eps);
  if (!(eps0 >= 0.0) || !(eps0 < eps)) {
    throw ValidationError("eps0 must satisfy 0 <= eps0 < eps");
  }
  const double budget = eps - eps0;
  const double lo = 0.01 * budget;
  const double hi = 0.99 * budget;

  // Hot path: one flip-probability evaluation per split. The two source
  // losses share everything except the degree multiplier.
  const auto loss_at = [&](double e1) {
    const double e2 = budget - e1;
    const double p = flip_probability(e1);
    const double q = 1.0 - 2.0 * p;
    const double per_entry = p * (1.0 - p) / (q * q);
    const double lap = 2.0 * (1.0 - p) * (1.0 - p) / (q * q * e2 * e2);
    const double a = per_entry * d_u + lap;
    const double b = per_entry * d_w + lap;
    return a * b / (a + b);
  };

  double best_x = lo;
  double best_val = loss_at(lo);
  for (int i = 1; i < kGridPoints; ++i) {
    const double x = lo + (hi - lo) * i / (kGridPoints - 1);
    const double v = loss_at(x);
    if (v < best_val) {
      best_val = v;
      best_x = x;
    }
  }
  if (!std::isfinite(best_val)) throw ValidationError("loss is not finite over the search box");

  // Newton refinement of the 1-D objective from the grid minimiser.
  double x = best_x;
  bool refined = false;
  for (int it = 0; it < kNewtonMaxIters; ++it) {
    const double h = kNewtonStep;
    const double f0 = loss_at(x);
    const double fp = loss_at(std::min(x + h, hi));
    const double fm = loss_at(std::max(x - h, lo));
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    if (!std::isfinite(d1) || !std::isfinite(d2) || d2 <= 0.0) break;
    const double step = d1 / d2;
    const double next = x - step;
    if (!(next > lo && next < hi)) break;
    x = next;
    if (std::fabs(step) < kNewtonTol) {
      refined = true;
      break;
    }
  }
  if (refined && loss_at(x) <= best_val) best_x = x;

  const double eps1 = best_x;
  const double eps2 = budget - eps1;
  const double alpha = optimal_alpha(ss_loss(d_u, eps1, eps2), ss_loss(d_w, eps1, eps2));
  return {eps0, eps1, eps2, alpha};
}

BudgetPlan plan_or_fallback(double d_u, double d_w, double eps, double eps0, bool* fell_back) {
  try {
    BudgetPlan plan = optimize_plan(d_u, d_w, eps, eps0);
    if (std::isfinite(plan.eps1) && std::isfinite(plan.alpha)) {
      if (fell_back) *fell_back = false;
      return plan;
    }
  } catch (const ValidationError&) {
    // fall through to the even split
  }
  if (fell_back) *fell_back = true;
  const double half = 0.5 * (eps - eps0);
  return {eps0, half, eps - eps0 - half, 0.5};
}

double naive_expected_value(double c2, double d_u, double d_w, double n1, double eps) {
  const double p = flip_probability(eps);
  return c2 * (1.0 - p) * (1.0 - p) + (d_u + d_w - 2.0 * c2) * p * (1.0 - p) +
         (n1 - d_u - d_w + c2) * p * p;
}

double naive_l2(double c2, double d_u, double d_w, double n1, double eps) {
  const double p = flip_probability(eps);
  // The raw intersection is a sum of independent Bernoulli entries whose
  // success probability depends on how many of the two true rows contain
  // the entry: both, exactly one, or neither.
  const double q_both = (1.0 - p) * (1.0 - p);
  const double q_one = p * (1.0 - p);
  const double q_none = p * p;
  const double var = c2 * q_both * (1.0 - q_both) + (d_u + d_w - 2.0 * c2) * q_one * (1.0 - q_one) +
                     (n1 - d_u - d_w + c2) * q_none * (1.0 - q_none);
  const double bias = naive_expected_value(c2, d_u, d_w, n1, eps) - c2;
  return var + bias * bias;
}

double oner_loss(double d_u, double d_w, double n1, double eps) {
  const double p = flip_probability(eps);
  const double q = 1.0 - 2.0 * p;
  return p * p * (1.0 - p) * (1.0 - p) * n1 / (q * q * q * q) +
         p * (1.0 - p) * (d_u + d_w) / (q * q);
}

double central_loss(double eps) {
  validate_epsilon(eps);
  return 2.0 / (eps * eps);
}

double analytic_l2(Algorithm algo, double c2, double d_u, double d_w, double n1, double eps,
                   const BudgetPlan* plan) {
  switch (algo) {
    case Algorithm::Naive:
      return naive_l2(c2, d_u, d_w, n1, eps);
    case Algorithm::OneR:
      return oner_loss(d_u, d_w, n1, eps);
    case Algorithm::SingleSource:
      if (!plan) throw ValidationError("single-source loss needs the realized plan");
      return ss_loss(d_u, plan->eps1, plan->eps2);
    case Algorithm::DoubleSource:
      if (!plan) throw ValidationError("double-source loss needs the realized plan");
      return ds_loss(d_u, d_w, plan->eps1, plan->eps2, plan->alpha);
    case Algorithm::Central:
      return central_loss(eps);
  }
  throw ValidationError("unknown algorithm");
}

}  // namespace cnldp
