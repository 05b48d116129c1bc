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

#pragma once

#include "cnldp/algorithm.hpp"

namespace cnldp {

// How one run's budget is split across rounds: eps0 buys the degree
// pre-round (0 when absent), eps1 the randomized-response round, eps2 the
// Laplace release, and alpha weights the two sources of the three-round
// estimator (1 when there is only one source). eps0 + eps1 + eps2 always
// reconstructs the configured total.
struct BudgetPlan {
  double eps0;
  double eps1;
  double eps2;
  double alpha;

  double total() const { return eps0 + eps1 + eps2; }
};

// Mean squared error of the two-round single-source estimate for a source
// of degree d: the per-neighbor inversion noise plus the Laplace release
// noise. d may be 0 (pure Laplace). eps1 and eps2 must be positive.
double ss_loss(double d, double eps1, double eps2);

// Mean squared error of the alpha-weighted two-source combination; equals
// alpha^2 * ss_loss(d_u, ...) + (1-alpha)^2 * ss_loss(d_w, ...) because the
// two sources' noises are independent.
double ds_loss(double d_u, double d_w, double eps1, double eps2, double alpha);

// Weight minimising alpha^2 * var_u + (1-alpha)^2 * var_w; the minimum value
// is var_u * var_w / (var_u + var_w), never above the smaller input.
double optimal_alpha(double var_u, double var_w);

// Value of ds_loss at the optimal alpha for the given split.
double ds_loss_at_optimal_alpha(double d_u, double d_w, double eps1, double eps2);

// Picks (eps1, alpha) minimising the two-source loss for degrees
// (d_u, d_w) under total budget eps with eps0 already reserved. eps1 is
// searched on [0.01, 0.99] * (eps - eps0): a 256-point coarse grid, then
// Newton refinement with central finite differences (step 1e-5, at most 20
// iterations, convergence |step| < 1e-8), falling back to the best grid
// point when refinement stalls or leaves the box. Requires d_u, d_w >= 1,
// finite, and 0 <= eps0 < eps.
BudgetPlan optimize_plan(double d_u, double d_w, double eps, double eps0);

// optimize_plan, except optimizer failure degrades to the even split
// (alpha = 1/2, eps1 = (eps - eps0) / 2) instead of throwing; *fell_back
// reports which branch ran.
BudgetPlan plan_or_fallback(double d_u, double d_w, double eps, double eps0, bool* fell_back);

// Closed forms for the one-round estimators and the central baseline, used
// for reporting and cross-checks.

// E of the raw intersection of two perturbed rows, given true common count
// c2, endpoint degrees, and opposite-layer size n1.
double naive_expected_value(double c2, double d_u, double d_w, double n1, double eps);

// Mean squared error of the raw intersection: per-entry Bernoulli variance
// plus squared bias.
double naive_l2(double c2, double d_u, double d_w, double n1, double eps);

// Variance of the bias-corrected one-round estimate (it is unbiased, so
// this is also its mean squared error).
double oner_loss(double d_u, double d_w, double n1, double eps);

// Variance of the trusted-curator baseline: 2 / eps^2.
double central_loss(double eps);

// Dispatch used by the bench reporting path. plan is consulted for the
// multi-round algorithms; c2 only for Naive (the only biased one).
double analytic_l2(Algorithm algo, double c2, double d_u, double d_w, double n1, double eps,
                   const BudgetPlan* plan);

}  // namespace cnldp
